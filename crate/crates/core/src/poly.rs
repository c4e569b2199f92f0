//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Monomials are exponent vectors keyed in a BTreeMap, so iteration order,
//! printing and serialization are canonical. The exact division routine
//! exists for the fraction-free determinant used to check Pf^2 = det.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::rat::{format_rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u16>, Rat>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = SparsePoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0u16; nvars];
        exp[i] = 1;
        let mut p = SparsePoly::zero(nvars);
        p.terms.insert(exp, Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<u16>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<u16> = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Per-block degree vector when the polynomial is homogeneous in each
    /// variable block; `None` otherwise. Blocks are given as the block index
    /// of every variable.
    pub fn block_degrees(&self, block_of_var: &[usize], nblocks: usize) -> Option<Vec<usize>> {
        let mut result: Option<Vec<usize>> = None;
        for e in self.terms.keys() {
            let mut d = vec![0usize; nblocks];
            for (i, &p) in e.iter().enumerate() {
                d[block_of_var[i]] += p as usize;
            }
            match &result {
                None => result = Some(d),
                Some(prev) => {
                    if *prev != d {
                        return None;
                    }
                }
            }
        }
        result.or(Some(vec![0; nblocks]))
    }

    /// Embeds into a ring with `extra` fresh variables appended.
    pub fn extend_vars(&self, extra: usize) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars + extra);
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            exp.extend(core::iter::repeat(0).take(extra));
            out.terms.insert(exp, c.clone());
        }
        out
    }

    /// Substitutes var_k -> s_{block(k)} * var_k where the s's are fresh
    /// variables appended after the existing ones. This is the symbolic
    /// form of a block-diagonal scaling action on the coordinates.
    pub fn block_scaling_substitute(&self, block_of_var: &[usize], nblocks: usize) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars + nblocks);
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            exp.extend(core::iter::repeat(0u16).take(nblocks));
            for (i, &p) in e.iter().enumerate() {
                exp[self.nvars + block_of_var[i]] += p;
            }
            out.add_term(exp, c.clone());
        }
        out
    }

    /// Leading term in the lex order (the largest exponent key).
    fn leading(&self) -> Option<(&Vec<u16>, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Exact division: Some(q) with self = q * divisor, or None.
    pub fn div_exact(&self, divisor: &SparsePoly) -> Option<SparsePoly> {
        if divisor.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(self.nvars);
        let (dexp, dcoeff) = {
            let (e, c) = divisor.leading().unwrap();
            (e.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rexp, rcoeff) = {
                let (e, c) = rem.leading().unwrap();
                (e.clone(), c.clone())
            };
            let mut qexp = vec![0u16; self.nvars];
            for i in 0..self.nvars {
                if rexp[i] < dexp[i] {
                    return None;
                }
                qexp[i] = rexp[i] - dexp[i];
            }
            let qc = rcoeff / &dcoeff;
            let mut mono = SparsePoly::zero(self.nvars);
            mono.terms.insert(qexp, qc);
            rem = rem.sub(&mono.mul(divisor));
            quot = quot.add(&mono);
        }
        Some(quot)
    }

    /// Rendering with the given variable names, canonical term order.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        // highest term first reads most naturally
        for (e, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (i, &p) in e.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&names[i]);
                if p > 1 {
                    mono.push('^');
                    mono.push_str(itoa(p as usize).as_str());
                }
            }
            let coeff_abs = crate::rat::abs(c);
            let sign = c.is_negative();
            if out.is_empty() {
                if sign {
                    out.push('-');
                }
            } else {
                out.push_str(if sign { " - " } else { " + " });
            }
            if mono.is_empty() {
                out.push_str(&format_rat(&coeff_abs));
            } else {
                if !coeff_abs.is_one() {
                    out.push_str(&format_rat(&coeff_abs));
                    out.push('*');
                }
                out.push_str(&mono);
            }
        }
        out
    }
}

fn itoa(mut n: usize) -> String {
    if n == 0 {
        return String::from("0");
    }
    let mut digits = Vec::new();
    while n > 0 {
        digits.push(b'0' + (n % 10) as u8);
        n /= 10;
    }
    digits.reverse();
    String::from_utf8(digits).unwrap()
}

/// Determinant of a square matrix of polynomials by fraction-free
/// (Bareiss) elimination; division at each step is exact in the
/// polynomial ring.
pub fn det_poly(matrix: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = matrix.len();
    if n == 0 {
        return SparsePoly::one(0);
    }
    let nvars = matrix[0][0].nvars;
    if n == 1 {
        return matrix[0][0].clone();
    }
    let mut m: Vec<Vec<SparsePoly>> = matrix.to_vec();
    let mut prev_pivot = SparsePoly::one(nvars);
    let mut sign = false;
    for k in 0..(n - 1) {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return SparsePoly::zero(nvars),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev_pivot)
                    .expect("Bareiss division is exact");
            }
            m[i][k] = SparsePoly::zero(nvars);
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn arithmetic_round_trip() {
        let x = SparsePoly::var(2, 0);
        let y = SparsePoly::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y)); // x^2 - y^2
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.eval(&[rat(3), rat(2)]), rat(5));
        let q = p.div_exact(&x.add(&y)).unwrap();
        assert_eq!(q, x.sub(&y));
        assert!(p.div_exact(&x).is_none());
    }

    #[test]
    fn block_degrees_detect_homogeneity() {
        let x = SparsePoly::var(3, 0);
        let y = SparsePoly::var(3, 1);
        let z = SparsePoly::var(3, 2);
        let p = x.mul(&y).mul(&z); // blocks {0,1} and {2}: degrees (2, 1)
        assert_eq!(p.block_degrees(&[0, 0, 1], 2), Some(vec![2, 1]));
        let q = p.add(&z.mul(&z).mul(&z));
        assert_eq!(q.block_degrees(&[0, 0, 1], 2), None);
    }

    #[test]
    fn scaling_substitution_matches_block_weights() {
        // p = x0 * x1^2 with both vars in block 0: substitution gives s^3 * p
        let p = SparsePoly::var(2, 0).mul(&SparsePoly::var(2, 1)).mul(&SparsePoly::var(2, 1));
        let sub = p.block_scaling_substitute(&[0, 0], 1);
        let s_cubed = {
            let s = SparsePoly::var(3, 2);
            s.mul(&s).mul(&s)
        };
        assert_eq!(sub, p.extend_vars(1).mul(&s_cubed));
    }

    #[test]
    fn det_of_antisymmetric_2x2() {
        let l = SparsePoly::var(1, 0);
        let z = SparsePoly::zero(1);
        let m = vec![vec![z.clone(), l.clone()], vec![l.neg(), z]];
        assert_eq!(det_poly(&m), l.mul(&l));
    }

    #[test]
    fn det_bareiss_4x4_integer() {
        // constant matrix determinant, checked against the known value
        let c = |v: i64| SparsePoly::constant(1, rat(v));
        let m = vec![
            vec![c(2), c(0), c(1), c(0)],
            vec![c(1), c(1), c(0), c(2)],
            vec![c(0), c(3), c(1), c(1)],
            vec![c(1), c(0), c(0), c(1)],
        ];
        // expansion computed by hand: det = 2*(1*(1*1-1*2)-0+2*(3*0-1*0))... use a second
        // route: permanent-free cofactor expansion in the test
        fn det_ref(m: &[Vec<SparsePoly>]) -> SparsePoly {
            let n = m.len();
            if n == 1 {
                return m[0][0].clone();
            }
            let mut acc = SparsePoly::zero(m[0][0].nvars);
            for j in 0..n {
                let minor: Vec<Vec<SparsePoly>> = (1..n)
                    .map(|i| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| m[i][c].clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&det_ref(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        assert_eq!(det_poly(&m), det_ref(&m));
    }

    #[test]
    fn render_is_readable() {
        let p = SparsePoly::var(2, 0)
            .mul(&SparsePoly::var(2, 0))
            .sub(&SparsePoly::var(2, 1).scale(&ratq_half()));
        let names = [String::from("x"), String::from("y")];
        assert_eq!(p.render(&names), "x^2 - 1/2*y");
    }

    fn ratq_half() -> Rat {
        crate::rat::ratq(1, 2)
    }
}
