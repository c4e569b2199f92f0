//! Restricted root systems in exact e-coordinates.
//!
//! Each supported family is generated in its standard orthogonal realization
//! and positivity is fixed by the lexicographic order on coordinates, which
//! pins down the positive system and the simple roots deterministically.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::rat::{dot, format_rat, is_zero_vec, lex_cmp, lex_positive, rat, ratq, vec_add, vec_scale, vec_sub, Rat};

/// A root, stored as exact coordinates in a fixed orthogonal ambient basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Root(pub Vec<Rat>);

impl Root {
    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn ambient(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(vec_add(&self.0, &other.0))
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(vec_sub(&self.0, &other.0))
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x.clone()).collect())
    }

    pub fn scale(&self, c: &Rat) -> Root {
        Root(vec_scale(&self.0, c))
    }

    pub fn double(&self) -> Root {
        self.scale(&rat(2))
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.0)
    }

    /// Euclidean pairing with another vector of the same ambient dimension.
    pub fn dot(&self, other: &Root) -> Rat {
        dot(&self.0, &other.0)
    }

    /// Display form like "e1-e3" or "(1/2)e1+(1/2)e2".
    pub fn display(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = crate::rat::abs(c);
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(sign);
            }
            if !mag.is_one() {
                if crate::rat::is_integer(&mag) {
                    out.push_str(&format_rat(&mag));
                } else {
                    out.push('(');
                    out.push_str(&format_rat(&mag));
                    out.push(')');
                }
            }
            out.push_str(&format!("e{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

trait IsOne {
    fn is_one(&self) -> bool;
}
impl IsOne for Rat {
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
}

/// Classification family of a (possibly non-reduced) root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn symbol(&self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::BC => "BC",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }
}

/// Family plus rank, e.g. BC_2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: usize,
}

impl TypeLabel {
    pub fn display(&self) -> String {
        match self.family {
            Family::G2 | Family::F4 | Family::E6 | Family::E7 | Family::E8 => {
                self.family.symbol().to_string()
            }
            _ => format!("{}{}", self.family.symbol(), self.rank),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootError {
    InvalidTypeRank { family: Family, rank: usize },
    DimensionMismatch,
    Reducible,
    UnknownForm(String),
}

impl core::fmt::Display for RootError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RootError::InvalidTypeRank { family, rank } => {
                write!(f, "invalid type/rank pair {}_{}", family.symbol(), rank)
            }
            RootError::DimensionMismatch => write!(f, "ambient dimension mismatch"),
            RootError::Reducible => write!(f, "root system is reducible"),
            RootError::UnknownForm(s) => write!(f, "unknown real form '{}'", s),
        }
    }
}

/// A restricted root system with multiplicities.
///
/// `positive_roots` is sorted lexicographically; `mult` is parallel to it.
/// Negative roots are tracked only through the membership set.
#[derive(Clone, Debug)]
pub struct RestrictedRootDatum {
    pub label: TypeLabel,
    pub ambient: usize,
    pub positive_roots: Vec<Root>,
    pub simple_roots: Vec<Root>,
    pub mult: Vec<usize>,
    all: BTreeSet<Root>,
}

impl RestrictedRootDatum {
    /// Builds a datum from the full (symmetric) set of roots with all
    /// multiplicities equal to one.
    pub fn from_full_set(label: TypeLabel, ambient: usize, all_roots: Vec<Root>) -> Self {
        let mults = all_roots.iter().map(|r| (r.clone(), 1usize)).collect();
        Self::from_full_set_with_mult(label, ambient, all_roots, &mults)
    }

    /// Builds a datum from the full root set and a multiplicity map.
    pub fn from_full_set_with_mult(
        label: TypeLabel,
        ambient: usize,
        all_roots: Vec<Root>,
        mults: &BTreeMap<Root, usize>,
    ) -> Self {
        let all: BTreeSet<Root> = all_roots.into_iter().collect();
        let mut positive: Vec<Root> = all.iter().filter(|r| lex_positive(&r.0)).cloned().collect();
        positive.sort_by(|a, b| lex_cmp(&a.0, &b.0));
        let simple = indecomposables(&positive);
        let mult: Vec<usize> = positive
            .iter()
            .map(|r| *mults.get(r).expect("multiplicity missing for root"))
            .collect();
        RestrictedRootDatum {
            label,
            ambient,
            positive_roots: positive,
            simple_roots: simple,
            mult,
            all,
        }
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.all.contains(r)
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.all.contains(r) && lex_positive(&r.0)
    }

    pub fn pos_index(&self, r: &Root) -> Option<usize> {
        self.positive_roots.binary_search_by(|p| lex_cmp(&p.0, &r.0)).ok()
    }

    pub fn mult_of(&self, r: &Root) -> usize {
        let pos = if lex_positive(&r.0) { r.clone() } else { r.neg() };
        self.pos_index(&pos).map(|i| self.mult[i]).unwrap_or(0)
    }

    /// dim n = sum of multiplicities over the positive roots.
    pub fn nilradical_dim(&self) -> usize {
        self.mult.iter().sum()
    }

    /// Positive nonmultipliable roots: alpha with 2*alpha not a root.
    pub fn nonmultipliable_positive(&self) -> Vec<Root> {
        self.positive_roots
            .iter()
            .filter(|r| !self.all.contains(&r.double()))
            .cloned()
            .collect()
    }

    /// Exact coefficients of a root in the simple-root basis.
    pub fn coeffs_wrt_simple(&self, r: &Root) -> Option<Vec<Rat>> {
        let cols: Vec<Vec<Rat>> = self.simple_roots.iter().map(|s| s.0.clone()).collect();
        crate::linalg::solve_columns(&cols, &r.0)
    }

    /// Reflection of `v` in the hyperplane orthogonal to `root`.
    pub fn reflect(&self, root: &Root, v: &Root) -> Root {
        let f = rat(2) * v.dot(root) / root.dot(root);
        v.sub(&root.scale(&f))
    }

    /// Connectivity of the simple-root Dynkin graph.
    pub fn is_irreducible(&self) -> bool {
        let n = self.simple_roots.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && !self.simple_roots[i].dot(&self.simple_roots[j]).is_zero() {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Closure check: alpha, beta positive and alpha+beta a root implies
    /// alpha+beta positive. Returns an offending pair if any.
    pub fn closure_witness(&self) -> Option<(Root, Root)> {
        for a in &self.positive_roots {
            for b in &self.positive_roots {
                let s = a.add(b);
                if self.all.contains(&s) && !lex_positive(&s.0) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    pub fn all_roots(&self) -> impl Iterator<Item = &Root> {
        self.all.iter()
    }
}

/// Simple roots: positive roots that are not the sum of two positive roots.
fn indecomposables(positive: &[Root]) -> Vec<Root> {
    let set: BTreeSet<&Root> = positive.iter().collect();
    positive
        .iter()
        .filter(|r| {
            !positive.iter().any(|b| {
                if b == *r {
                    return false;
                }
                let diff = r.sub(b);
                lex_positive(&diff.0) && set.contains(&diff)
            })
        })
        .cloned()
        .collect()
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = rat(1);
    v
}

/// Full root set of the standard realization (positives and negatives).
///
/// This is permissive about rank so that descriptive labels (for example the
/// D_3 restricted system of so(3,3)) can be generated internally; the public
/// [`build_root_system`] applies the catalog validity ranges.
pub fn standard_full_root_set(family: Family, rank: usize) -> Vec<Root> {
    let mut roots: Vec<Root> = Vec::new();
    match family {
        Family::A => {
            let n = rank + 1;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        let mut v = vec![Rat::zero(); n];
                        v[i] = rat(1);
                        v[j] = rat(-1);
                        roots.push(Root(v));
                    }
                }
            }
        }
        Family::B | Family::C | Family::D | Family::BC => {
            let n = rank;
            for i in 0..n {
                for j in (i + 1)..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let mut v = vec![Rat::zero(); n];
                        v[i] = rat(si);
                        v[j] = rat(sj);
                        roots.push(Root(v));
                    }
                }
            }
            for i in 0..n {
                match family {
                    Family::B => {
                        for s in [1, -1] {
                            let mut v = vec![Rat::zero(); n];
                            v[i] = rat(s);
                            roots.push(Root(v));
                        }
                    }
                    Family::C => {
                        for s in [2, -2] {
                            let mut v = vec![Rat::zero(); n];
                            v[i] = rat(s);
                            roots.push(Root(v));
                        }
                    }
                    Family::BC => {
                        for s in [1, -1, 2, -2] {
                            let mut v = vec![Rat::zero(); n];
                            v[i] = rat(s);
                            roots.push(Root(v));
                        }
                    }
                    _ => {}
                }
            }
        }
        Family::G2 => {
            // short: e_i - e_j; long: +-(2e_i - e_j - e_k)
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        let mut v = vec![Rat::zero(); 3];
                        v[i] = rat(1);
                        v[j] = rat(-1);
                        roots.push(Root(v));
                    }
                }
            }
            for i in 0..3 {
                let mut v = vec![rat(-1); 3];
                v[i] = rat(2);
                roots.push(Root(v.clone()));
                roots.push(Root(v.iter().map(|x| -x.clone()).collect()));
            }
        }
        Family::F4 => {
            for i in 0..4 {
                for s in [1, -1] {
                    let mut v = vec![Rat::zero(); 4];
                    v[i] = rat(s);
                    roots.push(Root(v));
                }
                for j in (i + 1)..4 {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let mut v = vec![Rat::zero(); 4];
                        v[i] = rat(si);
                        v[j] = rat(sj);
                        roots.push(Root(v));
                    }
                }
            }
            for signs in 0..16u32 {
                let v: Vec<Rat> = (0..4)
                    .map(|i| if signs >> i & 1 == 1 { ratq(-1, 2) } else { ratq(1, 2) })
                    .collect();
                roots.push(Root(v));
            }
        }
        Family::E8 | Family::E7 | Family::E6 => {
            let mut e8: Vec<Root> = Vec::new();
            for i in 0..8 {
                for j in (i + 1)..8 {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let mut v = vec![Rat::zero(); 8];
                        v[i] = rat(si);
                        v[j] = rat(sj);
                        e8.push(Root(v));
                    }
                }
            }
            for signs in 0..256u32 {
                if signs.count_ones() % 2 == 0 {
                    let v: Vec<Rat> = (0..8)
                        .map(|i| if signs >> i & 1 == 1 { ratq(-1, 2) } else { ratq(1, 2) })
                        .collect();
                    e8.push(Root(v));
                }
            }
            match family {
                Family::E8 => roots = e8,
                Family::E7 => {
                    // roots orthogonal to e7 + e8
                    let w = Root(vec_add(&unit(8, 6), &unit(8, 7)));
                    roots = e8.into_iter().filter(|r| r.dot(&w).is_zero()).collect();
                }
                Family::E6 => {
                    // roots orthogonal to e7 + e8 and e6 - e7
                    let w1 = Root(vec_add(&unit(8, 6), &unit(8, 7)));
                    let w2 = Root(vec_sub(&unit(8, 5), &unit(8, 6)));
                    roots = e8
                        .into_iter()
                        .filter(|r| r.dot(&w1).is_zero() && r.dot(&w2).is_zero())
                        .collect();
                }
                _ => unreachable!(),
            }
        }
    }
    roots
}

fn valid_pair(family: Family, rank: usize) -> bool {
    match family {
        Family::A | Family::BC => rank >= 1,
        Family::B => rank >= 2,
        Family::C => rank >= 3,
        Family::D => rank >= 4,
        Family::G2 => rank == 2,
        Family::F4 => rank == 4,
        Family::E6 => rank == 6,
        Family::E7 => rank == 7,
        Family::E8 => rank == 8,
    }
}

/// Standard realization of a root system with all multiplicities one.
pub fn build_root_system(family: Family, rank: usize) -> Result<RestrictedRootDatum, RootError> {
    if !valid_pair(family, rank) {
        return Err(RootError::InvalidTypeRank { family, rank });
    }
    let roots = standard_full_root_set(family, rank);
    let ambient = roots[0].ambient();
    let datum = RestrictedRootDatum::from_full_set(TypeLabel { family, rank }, ambient, roots);
    debug_assert_eq!(datum.rank(), rank);
    Ok(datum)
}

/// Exact inner product of two roots; rejects an ambient mismatch.
pub fn inner(a: &Root, b: &Root) -> Result<Rat, RootError> {
    if a.ambient() != b.ambient() {
        return Err(RootError::DimensionMismatch);
    }
    Ok(a.dot(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(xs: &[i64]) -> Root {
        Root(xs.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn a2_standard() {
        let d = build_root_system(Family::A, 2).unwrap();
        assert_eq!(
            d.positive_roots,
            vec![r(&[0, 1, -1]), r(&[1, -1, 0]), r(&[1, 0, -1])]
        );
        assert_eq!(d.simple_roots, vec![r(&[0, 1, -1]), r(&[1, -1, 0])]);
        assert_eq!(d.rank(), 2);
    }

    #[test]
    fn b2_standard() {
        let d = build_root_system(Family::B, 2).unwrap();
        let expect = vec![r(&[0, 1]), r(&[1, -1]), r(&[1, 0]), r(&[1, 1])];
        assert_eq!(d.positive_roots, expect);
    }

    #[test]
    fn bc1_standard() {
        let d = build_root_system(Family::BC, 1).unwrap();
        assert_eq!(d.positive_roots, vec![r(&[1]), r(&[2])]);
        assert_eq!(d.nonmultipliable_positive(), vec![r(&[2])]);
    }

    #[test]
    fn counts_match_classification() {
        let cases = [
            (Family::A, 3, 12),
            (Family::B, 3, 18),
            (Family::C, 3, 18),
            (Family::D, 4, 24),
            (Family::BC, 2, 12),
            (Family::G2, 2, 12),
            (Family::F4, 4, 48),
            (Family::E6, 6, 72),
            (Family::E7, 7, 126),
            (Family::E8, 8, 240),
        ];
        for (f, n, count) in cases {
            let d = build_root_system(f, n).unwrap();
            assert_eq!(d.positive_roots.len() * 2, count, "{:?}_{}", f, n);
            assert_eq!(d.rank(), n, "{:?}_{}", f, n);
            assert!(d.closure_witness().is_none(), "{:?}_{}", f, n);
            assert!(d.is_irreducible());
            // every positive root is a nonnegative integer combination of simples
            for root in &d.positive_roots {
                let coeffs = d.coeffs_wrt_simple(root).unwrap();
                for c in coeffs {
                    assert!(!c.is_negative() && crate::rat::is_integer(&c));
                }
            }
        }
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(build_root_system(Family::C, 2).is_err());
        assert!(build_root_system(Family::D, 3).is_err());
        assert!(build_root_system(Family::G2, 3).is_err());
        assert!(build_root_system(Family::A, 0).is_err());
    }

    #[test]
    fn inner_products() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let x = r(&[1, -1, 0]);
        let y = r(&[0, 1, -1]);
        assert_eq!(inner(&x, &y).unwrap(), rat(-1));
        assert!(a2.is_root(&x.add(&y)));
        let b2 = build_root_system(Family::B, 2).unwrap();
        assert_eq!(inner(&r(&[1, 1]), &r(&[1, -1])).unwrap(), rat(0));
        assert!(b2.is_root(&r(&[1, 1])));
        assert!(inner(&x, &r(&[1, 1])).is_err());
    }

    #[test]
    fn disjoint_supports_orthogonal() {
        let a3 = build_root_system(Family::A, 3).unwrap();
        let x = r(&[1, 0, 0, -1]);
        let y = r(&[0, 1, -1, 0]);
        assert!(a3.is_root(&x) && a3.is_root(&y));
        assert_eq!(inner(&x, &y).unwrap(), rat(0));
    }

    #[test]
    fn nonmultipliable_closed_under_own_reflections() {
        for (f, n) in [(Family::BC, 2), (Family::BC, 3), (Family::B, 3), (Family::C, 3)] {
            let d = build_root_system(f, n).unwrap();
            let delta0: Vec<Root> = d.nonmultipliable_positive();
            let full: BTreeSet<Root> = delta0
                .iter()
                .flat_map(|r| [r.clone(), r.neg()])
                .collect();
            for s in &full {
                for a in &full {
                    let refl = d.reflect(s, a);
                    assert!(full.contains(&refl), "{:?} not closed", f);
                }
            }
        }
    }
}
