//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ring arity supported by the fixed-width exponent vector.
pub const MAX_VARS: usize = 16;
/// Per-variable exponent cap.
pub const MAX_EXPONENT: u32 = 1 << 15;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    len: u8,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        assert!(nvars <= MAX_VARS);
        Monomial { exps: [0; MAX_VARS], len: nvars as u8, deg: 0 }
    }

    pub fn new(exps: &[u32]) -> Result<Monomial> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, got: exps.len() });
        }
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return Err(Error::DegreeOverflow);
            }
            m.exps[i] = e as u16;
            m.deg += e;
        }
        Ok(m)
    }

    /// The variable `x_i` in a ring with `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn exps(&self) -> &[u16] {
        &self.exps[..self.len as usize]
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.exps().iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Product; fails past the exponent cap.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.len, other.len);
        let mut m = *self;
        for i in 0..self.len as usize {
            let e = self.exps[i] as u32 + other.exps[i] as u32;
            if e > MAX_EXPONENT {
                return Err(Error::DegreeOverflow);
            }
            m.exps[i] = e as u16;
        }
        m.deg = self.deg + other.deg;
        Ok(m)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg
            && self.exps[..self.len as usize]
                .iter()
                .zip(&other.exps[..self.len as usize])
                .all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..self.len as usize {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut deg = 0;
        for i in 0..self.len as usize {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            deg += m.exps[i] as u32;
        }
        m.deg = deg;
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        let mut deg = 0;
        for i in 0..self.len as usize {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            deg += m.exps[i] as u32;
        }
        m.deg = deg;
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.len as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Drop the first `k` variables (their exponents must be zero).
    pub(crate) fn drop_leading(&self, k: usize) -> Monomial {
        debug_assert!(self.exps[..k].iter().all(|&e| e == 0));
        let mut m = Monomial::one(self.len as usize - k);
        m.exps[..self.len as usize - k].copy_from_slice(&self.exps[k..self.len as usize]);
        m.deg = self.deg;
        m
    }

    /// Reinterpret in a ring with `extra` new leading variables.
    pub(crate) fn shift(&self, extra: usize) -> Monomial {
        let n = self.len as usize;
        let mut m = Monomial::one(n + extra);
        m.exps[extra..extra + n].copy_from_slice(&self.exps[..n]);
        m.deg = self.deg;
        m
    }

    /// Apply a variable permutation: slot `i` of the result takes slot `perm[i]`.
    pub(crate) fn permute(&self, perm: &[usize]) -> Monomial {
        let mut m = Monomial::one(perm.len());
        for (i, &p) in perm.iter().enumerate() {
            m.exps[i] = self.exps[p];
        }
        m.deg = self.deg;
        m
    }

    /// Embed into a ring of `nvars` variables placing slot `i` at `map[i]`.
    pub(crate) fn embed(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut m = Monomial::one(nvars);
        for (i, &t) in map.iter().enumerate() {
            m.exps[t] += self.exps[i];
        }
        m.deg = self.deg;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

/// A monomial order on a fixed ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub enum TermOrder {
    Lex,
    /// Graded reverse lexicographic (degree measured with the ring weights).
    #[default]
    Grevlex,
    /// Product order: the first `k` variables compared by degree then
    /// reverse-lex, ties broken by graded reverse-lex on the rest.
    Elimination(usize),
}


#[inline]
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[inline]
fn wdeg(a: &[u16], weights: Option<&[u32]>) -> u32 {
    match weights {
        None => a.iter().map(|&e| e as u32).sum(),
        Some(w) => a.iter().zip(w).map(|(&e, &w)| e as u32 * w).sum(),
    }
}

impl TermOrder {
    /// Compare two monomials; `weights` is `None` for the standard grading.
    #[inline]
    pub fn cmp_weighted(self, a: &Monomial, b: &Monomial, weights: Option<&[u32]>) -> Ordering {
        let (x, y) = (a.exps(), b.exps());
        match self {
            TermOrder::Lex => x.cmp(y),
            TermOrder::Grevlex => {
                let (da, db) = match weights {
                    None => (a.deg, b.deg),
                    Some(w) => (wdeg(x, Some(w)), wdeg(y, Some(w))),
                };
                da.cmp(&db).then_with(|| revlex(x, y))
            }
            TermOrder::Elimination(k) => {
                let k = k.min(x.len());
                wdeg(&x[..k], None)
                    .cmp(&wdeg(&y[..k], None))
                    .then_with(|| revlex(&x[..k], &y[..k]))
                    .then_with(|| {
                        let w = weights.map(|w| &w[k..]);
                        wdeg(&x[k..], w)
                            .cmp(&wdeg(&y[k..], w))
                            .then_with(|| revlex(&x[k..], &y[k..]))
                    })
            }
        }
    }

    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_weighted(a, b, None)
    }
}

/// Arity-checked comparison in the standard grading.
pub fn compare_monomials(a: &Monomial, b: &Monomial, order: TermOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::ArityMismatch { expected: a.nvars(), got: b.nvars() });
    }
    Ok(order.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    fn all_monomials(n: usize, maxdeg: u32) -> Vec<Monomial> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            let mut next = vec![];
            for v in &out {
                let used: u32 = v.iter().sum();
                for e in 0..=(maxdeg - used) {
                    let mut w = v.clone();
                    w.push(e);
                    next.push(w);
                }
            }
            out = next;
        }
        out.iter().map(|v| m(v)).collect()
    }

    // Matrix-order oracle: compare M·a and M·b lexicographically.
    fn matrix_cmp(rows: &[Vec<i64>], a: &Monomial, b: &Monomial) -> Ordering {
        for r in rows {
            let va: i64 = r.iter().zip(a.exps()).map(|(c, &e)| c * e as i64).sum();
            let vb: i64 = r.iter().zip(b.exps()).map(|(c, &e)| c * e as i64).sum();
            if va != vb {
                return va.cmp(&vb);
            }
        }
        Ordering::Equal
    }

    fn grevlex_matrix(n: usize) -> Vec<Vec<i64>> {
        let mut rows = vec![vec![1; n]];
        for i in (1..n).rev() {
            let mut r = vec![0; n];
            r[i] = -1;
            rows.push(r);
        }
        rows
    }

    fn lex_matrix(n: usize) -> Vec<Vec<i64>> {
        (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
    }

    fn elim_matrix(n: usize, k: usize) -> Vec<Vec<i64>> {
        let mut rows = vec![];
        rows.push((0..n).map(|j| (j < k) as i64).collect());
        for i in (1..k).rev() {
            let mut r = vec![0; n];
            r[i] = -1;
            rows.push(r);
        }
        rows.push((0..n).map(|j| (j >= k) as i64).collect());
        for i in (k + 1..n).rev() {
            let mut r = vec![0; n];
            r[i] = -1;
            rows.push(r);
        }
        rows
    }

    #[test]
    fn grevlex_basic_facts() {
        assert_eq!(TermOrder::Grevlex.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(TermOrder::Grevlex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(TermOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 100])), Ordering::Greater);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        assert!(compare_monomials(&m(&[1, 0]), &m(&[1, 0, 0]), TermOrder::Lex).is_err());
    }

    #[test]
    fn exponent_cap() {
        assert!(Monomial::new(&[1 << 15, 0]).is_ok());
        assert!(Monomial::new(&[(1 << 15) + 1]).is_err());
        let a = m(&[1 << 14]);
        assert!(a.checked_mul(&a).is_ok());
        assert!(a.checked_mul(&a).unwrap().checked_mul(&m(&[1])).is_err());
    }

    #[test]
    fn agrees_with_matrix_orders() {
        let mons = all_monomials(4, 4);
        let cases = [
            (TermOrder::Grevlex, grevlex_matrix(4)),
            (TermOrder::Lex, lex_matrix(4)),
            (TermOrder::Elimination(1), elim_matrix(4, 1)),
            (TermOrder::Elimination(2), elim_matrix(4, 2)),
        ];
        for (order, rows) in &cases {
            for a in &mons {
                for b in &mons {
                    assert_eq!(order.cmp(a, b), matrix_cmp(rows, a, b), "{order:?} {a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn orders_are_multiplicative_and_one_is_minimal() {
        let mons = all_monomials(4, 3);
        let one = Monomial::one(4);
        for order in [TermOrder::Grevlex, TermOrder::Lex, TermOrder::Elimination(2)] {
            for a in &mons {
                assert_ne!(order.cmp(a, &one), Ordering::Less);
                for b in &mons {
                    if order.cmp(a, b) != Ordering::Less {
                        continue;
                    }
                    for c in &mons {
                        assert_eq!(order.cmp(&a.mul(c), &b.mul(c)), Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn weighted_grevlex_uses_weights() {
        let w = [1u32, 3];
        // x0^2 has weight 2, x1 has weight 3
        assert_eq!(
            TermOrder::Grevlex.cmp_weighted(&m(&[2, 0]), &m(&[0, 1]), Some(&w)),
            Ordering::Less
        );
    }
}
