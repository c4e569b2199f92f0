//! Graded nilpotent Lie algebras with exact structure constants.
//!
//! A [`NilpotentAlgebra`] is a basis labeled by (restricted root, slot)
//! pairs together with a sparse bracket tensor. All subspace computations
//! (centers, bracket spans, the lower central series) are exact.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::Subspace;
use crate::rat::{is_zero_vec, Rat};
use crate::roots::{RestrictedRootDatum, Root};

/// Basis vector label: a root space slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub root: Root,
    pub slot: usize,
}

/// Graded nilpotent Lie algebra over Q.
///
/// `bracket` stores [x_i, x_j] for i < j only; antisymmetry supplies the
/// rest. Gradedness (c^k_ij nonzero only when root(k) = root(i) + root(j))
/// is an invariant checked by [`NilpotentAlgebra::grading_witness`].
#[derive(Clone, Debug)]
pub struct NilpotentAlgebra {
    pub basis: Vec<BasisVector>,
    bracket: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
}

impl NilpotentAlgebra {
    pub fn new(basis: Vec<BasisVector>, mut bracket: BTreeMap<(usize, usize), Vec<(usize, Rat)>>) -> Self {
        bracket.retain(|_, v| {
            v.retain(|(_, c)| !c.is_zero());
            !v.is_empty()
        });
        NilpotentAlgebra { basis, bracket }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// [x_i, x_j] as a sparse coordinate list.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, Rat)> {
        if i == j {
            return Vec::new();
        }
        if i < j {
            self.bracket.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            self.bracket
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default()
        }
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket_vectors(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for (i, ci) in u.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in v.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                for (k, c) in self.bracket_basis(i, j) {
                    out[k] += c * ci * cj;
                }
            }
        }
        out
    }

    pub fn iter_brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<(usize, Rat)>)> {
        self.bracket.iter()
    }

    /// Basis indices whose label carries the given root.
    pub fn root_space(&self, root: &Root) -> Vec<usize> {
        self.basis
            .iter()
            .enumerate()
            .filter(|(_, b)| &b.root == root)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn coordinate_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim()];
        v[i] = crate::rat::rat(1);
        v
    }

    pub fn span_of_indices(&self, idx: &[usize]) -> Subspace {
        let vs: Vec<Vec<Rat>> = idx.iter().map(|&i| self.coordinate_vector(i)).collect();
        Subspace::from_spanning(self.dim(), &vs)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// Exact center of a subalgebra: kernel of the adjoint action of `sub`
    /// restricted to `sub` itself.
    pub fn center_of(&self, sub: &Subspace) -> Subspace {
        if sub.is_zero() {
            return Subspace::zero(self.dim());
        }
        // rows: for each basis vector b of sub, all coordinates of [b, x]
        // where x = sum c_i u_i runs over sub in terms of its basis
        let k = sub.dim();
        let n = self.dim();
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for b in sub.basis() {
            // linear map c -> [b, sum c_i u_i]; build its n x k matrix
            let images: Vec<Vec<Rat>> = sub.basis().iter().map(|u| self.bracket_vectors(b, u)).collect();
            for coord in 0..n {
                let row: Vec<Rat> = (0..k).map(|i| images[i][coord].clone()).collect();
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
        let kernel = crate::linalg::null_space(&rows, k);
        let vectors: Vec<Vec<Rat>> = kernel
            .iter()
            .map(|coeffs| {
                let mut v = vec![Rat::zero(); n];
                for (i, u) in sub.basis().iter().enumerate() {
                    for j in 0..n {
                        let t = &u[j] * &coeffs[i];
                        v[j] += t;
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(n, &vectors)
    }

    /// Center of the whole algebra.
    pub fn center(&self) -> Subspace {
        self.center_of(&self.full_space())
    }

    /// Span of all pairwise brackets of two subspaces.
    pub fn bracket_span(&self, s1: &Subspace, s2: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for u in s1.basis() {
            for v in s2.basis() {
                let w = self.bracket_vectors(u, v);
                if !is_zero_vec(&w) {
                    vectors.push(w);
                }
            }
        }
        Subspace::from_spanning(self.dim(), &vectors)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains_subspace(&self.bracket_span(s, s))
    }

    /// Is `s` an ideal of `within`?
    pub fn is_ideal_in(&self, s: &Subspace, within: &Subspace) -> bool {
        s.contains_subspace(&self.bracket_span(within, s))
    }

    /// Strictly decreasing chain n >= [n,n] >= [n,[n,n]] >= ... >= 0.
    /// Errs with the stalled subspace if the chain fails to reach zero
    /// within dim steps (non-nilpotent input, an internal bug).
    pub fn lower_central_series(&self) -> Result<Vec<Subspace>, Subspace> {
        let full = self.full_space();
        let mut chain = vec![full.clone()];
        let mut cur = full.clone();
        for _ in 0..=self.dim() {
            if cur.is_zero() {
                return Ok(chain);
            }
            let next = self.bracket_span(&full, &cur);
            if next.dim() >= cur.dim() {
                return Err(next);
            }
            chain.push(next.clone());
            cur = next;
        }
        Err(cur)
    }

    /// First basis triple violating the Jacobi identity, if any.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut acc = vec![Rat::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let ab = self.bracket_basis(a, b);
                        for (m, coeff) in &ab {
                            for (t, c2) in self.bracket_basis(*m, c) {
                                acc[t] += c2 * coeff;
                            }
                        }
                    }
                    if !is_zero_vec(&acc) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First bracket entry violating the root grading, if any.
    pub fn grading_witness(&self) -> Option<(usize, usize, usize)> {
        for (&(i, j), v) in &self.bracket {
            let sum = self.basis[i].root.add(&self.basis[j].root);
            for (k, _) in v {
                if self.basis[*k].root != sum {
                    return Some((i, j, *k));
                }
            }
        }
        None
    }

    /// True when every structure constant is an integer.
    pub fn has_integer_constants(&self) -> bool {
        self.bracket
            .values()
            .all(|v| v.iter().all(|(_, c)| crate::rat::is_integer(c)))
    }

    /// Restriction of the algebra to a set of basis indices that spans a
    /// subalgebra. Panics if the subset is not closed under the bracket.
    pub fn extract(&self, indices: &[usize]) -> NilpotentAlgebra {
        let pos: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let basis: Vec<BasisVector> = indices.iter().map(|&i| self.basis[i].clone()).collect();
        let mut bracket = BTreeMap::new();
        for (a_new, &a_old) in indices.iter().enumerate() {
            for (b_new, &b_old) in indices.iter().enumerate() {
                if a_old >= b_old {
                    continue;
                }
                let entries = self.bracket_basis(a_old, b_old);
                if entries.is_empty() {
                    continue;
                }
                let mapped: Vec<(usize, Rat)> = entries
                    .into_iter()
                    .map(|(k, c)| {
                        let nk = *pos.get(&k).expect("index subset not bracket-closed");
                        (nk, c)
                    })
                    .collect();
                bracket.insert((a_new, b_new), mapped);
            }
        }
        NilpotentAlgebra::new(basis, bracket)
    }
}

/// Nilradical over a reduced root datum via Chevalley structure constants.
/// Requires all multiplicities equal to one (split forms).
pub fn chevalley_nilradical(datum: &RestrictedRootDatum) -> NilpotentAlgebra {
    assert!(
        datum.mult.iter().all(|&m| m == 1),
        "Chevalley backend needs multiplicity-one data"
    );
    let basis: Vec<BasisVector> = datum
        .positive_roots
        .iter()
        .map(|r| BasisVector {
            root: r.clone(),
            slot: 0,
        })
        .collect();
    let mut table = crate::chevalley::ChevalleyTable::new(datum);
    let mut bracket = BTreeMap::new();
    for ((i, j), c) in table.positive_pair_constants() {
        let sum = datum.positive_roots[i].add(&datum.positive_roots[j]);
        let k = datum.pos_index(&sum).expect("closure");
        bracket.insert((i, j), vec![(k, c)]);
    }
    NilpotentAlgebra::new(basis, bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::roots::{build_root_system, Family};

    #[test]
    fn sl3_nilradical_is_heisenberg() {
        let d = build_root_system(Family::A, 2).unwrap();
        let n = chevalley_nilradical(&d);
        assert_eq!(n.dim(), 3);
        // exactly one nonzero bracket pair, mapping onto the highest root
        let pairs: Vec<_> = n.iter_brackets().collect();
        assert_eq!(pairs.len(), 1);
        let z = n.center();
        assert_eq!(z.dim(), 1);
        let high = d.pos_index(&Root(vec![rat(1), rat(0), rat(-1)])).unwrap();
        assert!(z.contains(&n.coordinate_vector(high)));
        let chain = n.lower_central_series().unwrap();
        let dims: Vec<usize> = chain.iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![3, 1, 0]);
    }

    #[test]
    fn sl4_nilradical_bracket_table() {
        let d = build_root_system(Family::A, 3).unwrap();
        let n = chevalley_nilradical(&d);
        assert_eq!(n.dim(), 6);
        // nonzero bracket pairs: (e12,e23), (e23,e34), (e12,e24), (e13,e34)
        assert_eq!(n.iter_brackets().count(), 4);
        assert!(n.jacobi_witness().is_none());
        assert!(n.grading_witness().is_none());
        let chain = n.lower_central_series().unwrap();
        let dims: Vec<usize> = chain.iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![6, 3, 1, 0]);
        let z = n.center();
        assert_eq!(z.dim(), 1);
    }

    #[test]
    fn jacobi_all_split_ranks() {
        for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::G2, 2), (Family::F4, 4)] {
            let d = build_root_system(f, n).unwrap();
            let alg = chevalley_nilradical(&d);
            assert!(alg.jacobi_witness().is_none(), "{:?}", f);
            assert!(alg.grading_witness().is_none(), "{:?}", f);
            assert!(alg.has_integer_constants(), "{:?}", f);
            assert!(alg.lower_central_series().is_ok(), "{:?}", f);
        }
    }

    #[test]
    fn bracket_span_and_extract() {
        let d = build_root_system(Family::A, 3).unwrap();
        let n = chevalley_nilradical(&d);
        let full = n.full_space();
        let derived = n.bracket_span(&full, &full);
        assert_eq!(derived.dim(), 3);
        // abelian extraction: the two simple-root spaces e12, e34 commute
        let i = d.pos_index(&Root(vec![rat(1), rat(-1), rat(0), rat(0)])).unwrap();
        let j = d.pos_index(&Root(vec![rat(0), rat(0), rat(1), rat(-1)])).unwrap();
        let sub = n.extract(&[i, j]);
        assert_eq!(sub.dim(), 2);
        assert_eq!(sub.iter_brackets().count(), 0);
        assert_eq!(sub.center().dim(), 2);
    }
}
