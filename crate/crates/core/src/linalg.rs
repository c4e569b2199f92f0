//! Exact linear algebra over the rationals.
//!
//! Row reduction is plain Gaussian elimination on `Rat` entries, which is
//! exact; pivoting is deterministic (first nonzero entry), so all derived
//! bases are reproducible across runs.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rat::{dot, Rat};

/// Reduced row echelon form, in place. Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        // deterministic pivot: first row with nonzero entry in column c
        let mut piv = None;
        for i in r..nrows {
            if !rows[i][c].is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(p) = piv else { continue };
        rows.swap(r, p);
        let inv = Rat::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = &rows[r][j] * &f;
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

/// Rank of a matrix given as rows.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    rref(&mut m);
    m.len()
}

/// Basis of the right null space of the matrix `rows` (kernel of v -> rows * v).
pub fn null_space(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    for free in 0..ncols {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            // pivot entry is 1; kernel coordinate is -(entry in free column)
            v[pc] = -m[ri][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `A x = b` where `A` is given by columns. Returns `None` when
/// inconsistent. The solution is uniquely determined only when the columns
/// are independent; deterministic otherwise (free coordinates set to zero).
pub fn solve_columns(cols: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = b.len();
    let k = cols.len();
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&k) {
        return None; // pivot in the augmented column: inconsistent
    }
    let mut x = vec![Rat::zero(); k];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[ri][k].clone();
    }
    Some(x)
}

/// Inverse of a square matrix (rows), `None` if singular.
pub fn invert(rows: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<Rat>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Matrix-vector product for a matrix given as rows.
pub fn mat_vec(rows: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    rows.iter().map(|r| dot(r, v)).collect()
}

/// A linear subspace of Q^n, stored as a reduced row echelon basis.
///
/// The canonical form makes equality, membership and intersection tests
/// exact and deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_spanning(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        let mut rows: Vec<Vec<Rat>> = vectors.iter().filter(|v| !crate::rat::is_zero_vec(v)).cloned().collect();
        let pivots = rref(&mut rows);
        Subspace {
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn full(ambient: usize) -> Self {
        let vectors: Vec<Vec<Rat>> = (0..ambient)
            .map(|i| {
                let mut v = vec![Rat::zero(); ambient];
                v[i] = Rat::one();
                v
            })
            .collect();
        Subspace::from_spanning(ambient, &vectors)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        // reduce v against the echelon basis
        let mut w = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(self.pivots.iter()) {
            if !w[pc].is_zero() {
                let f = w[pc].clone();
                for j in 0..self.ambient {
                    let t = &row[j] * &f;
                    w[j] -= t;
                }
            }
        }
        crate::rat::is_zero_vec(&w)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient, &vs)
    }

    /// Intersection via the kernel of the stacked coordinate map.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // vectors x in both spans: x = sum a_i u_i = sum b_j w_j
        // solve [U^T | -W^T] (a, b)^T = 0
        let k1 = self.basis.len();
        let k2 = other.basis.len();
        let rows: Vec<Vec<Rat>> = (0..self.ambient)
            .map(|coord| {
                let mut row = Vec::with_capacity(k1 + k2);
                for u in &self.basis {
                    row.push(u[coord].clone());
                }
                for w in &other.basis {
                    row.push(-w[coord].clone());
                }
                row
            })
            .collect();
        let ker = null_space(&rows, k1 + k2);
        let vectors: Vec<Vec<Rat>> = ker
            .iter()
            .map(|coeffs| {
                let mut v = vec![Rat::zero(); self.ambient];
                for (i, u) in self.basis.iter().enumerate() {
                    for j in 0..self.ambient {
                        let t = &u[j] * &coeffs[i];
                        v[j] += t;
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.ambient, &vectors)
    }

    /// Coordinates of `v` in terms of the echelon basis, `None` if outside.
    pub fn coordinates_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for (row, &pc) in self.basis.iter().zip(self.pivots.iter()) {
            let f = w[pc].clone();
            coords.push(f.clone());
            if !f.is_zero() {
                for j in 0..self.ambient {
                    let t = &row[j] * &f;
                    w[j] -= t;
                }
            }
        }
        if crate::rat::is_zero_vec(&w) {
            Some(coords)
        } else {
            None
        }
    }

    /// Indices of ambient coordinate axes e_i lying in the subspace, when the
    /// subspace is spanned by such axes; `None` otherwise.
    pub fn as_axis_set(&self) -> Option<Vec<usize>> {
        let mut axes = Vec::with_capacity(self.basis.len());
        for (row, &pc) in self.basis.iter().zip(self.pivots.iter()) {
            for (j, x) in row.iter().enumerate() {
                if j == pc {
                    if !x.is_one() {
                        return None;
                    }
                } else if !x.is_zero() {
                    return None;
                }
            }
            axes.push(pc);
        }
        Some(axes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_and_rank() {
        let m = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[1, 0, 1])];
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn null_space_of_singular_map() {
        let m = vec![v(&[1, 1, 0]), v(&[0, 0, 1])];
        let ker = null_space(&m, 3);
        assert_eq!(ker.len(), 1);
        assert!(crate::rat::is_zero_vec(&mat_vec(&m, &ker[0])));
    }

    #[test]
    fn solve_in_column_space() {
        let cols = vec![v(&[1, 0, 1]), v(&[0, 1, 1])];
        let x = solve_columns(&cols, &v(&[2, 3, 5])).unwrap();
        assert_eq!(x, v(&[2, 3]));
        assert!(solve_columns(&cols, &v(&[1, 0, 0])).is_none());
    }

    #[test]
    fn invert_round_trip() {
        let m = vec![v(&[2, 1]), v(&[1, 1])];
        let inv = invert(&m).unwrap();
        let id0 = mat_vec(&inv, &mat_vec(&m, &v(&[1, 0])));
        let id1 = mat_vec(&inv, &mat_vec(&m, &v(&[0, 1])));
        assert_eq!(id0, v(&[1, 0]));
        assert_eq!(id1, v(&[0, 1]));
    }

    #[test]
    fn subspace_operations() {
        let a = Subspace::from_spanning(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_spanning(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let cap = a.intersect(&b);
        assert_eq!(cap.dim(), 1);
        assert!(cap.contains(&v(&[0, 5, 0])));
        let sum = a.sum(&b);
        assert_eq!(sum.dim(), 3);
        assert_eq!(a.as_axis_set().unwrap(), vec![0, 1]);
        let c = Subspace::from_spanning(2, &[v(&[1, 1])]);
        assert!(c.as_axis_set().is_none());
        assert_eq!(c.coordinates_of(&v(&[3, 3])).unwrap(), vec![rat(3)]);
        assert!(c.coordinates_of(&v(&[1, 0])).is_none());
    }
}
