//! Dense exact linear algebra over the coefficient field.

use crate::poly::Polynomial;
use crate::monomial::Monomial;
use crate::ring::RingRef;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        Matrix { field, rows: r, cols: c, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    if self.get(r, j).is_zero() {
                        continue;
                    }
                    let v = self.get(i, j).sub(&f.mul(self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : M v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = m.get(r, f).neg();
                }
                v
            })
            .collect()
    }

    /// Determinant by elimination (square matrices).
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, c * m.cols + j);
                }
                det = det.neg();
            }
            let piv = m.get(c, c).clone();
            det = det.mul(&piv);
            let inv = piv.inv();
            for i in c + 1..m.rows {
                let f = m.get(i, c).mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

/// All monomials of (standard) degree `d` in `n` variables, in decreasing
/// order for the ring's order.
pub fn monomials_of_degree(ring: &RingRef, d: u32) -> Vec<Monomial> {
    let n = ring.nvars();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i == n - 1 {
            exps[i] = left;
            out.push(Monomial::new(exps).unwrap());
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort_by(|a, b| ring.cmp(b, a));
    out
}

/// Coefficient matrix of forms against a monomial list.
pub fn coefficient_matrix(polys: &[Polynomial], monomials: &[Monomial], field: Field) -> Matrix {
    let index: std::collections::HashMap<Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut mat = Matrix::zeros(field, polys.len(), monomials.len());
    for (r, p) in polys.iter().enumerate() {
        for (m, c) in p.terms() {
            mat.set(r, index[m], c.clone());
        }
    }
    mat
}

/// Rebuild a polynomial from a coefficient row.
pub fn row_polynomial(ring: &RingRef, row: &[Scalar], monomials: &[Monomial]) -> Polynomial {
    let terms = row
        .iter()
        .zip(monomials)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, m)| (*m, c.clone()))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Echelon basis of the span of homogeneous forms of one degree.
pub fn span_basis(ring: &RingRef, forms: &[Polynomial], d: u32) -> Vec<Polynomial> {
    let mons = monomials_of_degree(ring, d);
    let mut mat = coefficient_matrix(forms, &mons, ring.field());
    let rank = mat.rref().len();
    (0..rank).map(|r| row_polynomial(ring, mat.row(r), &mons)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn q(v: i64) -> Scalar {
        Field::Rational.from_i64(v)
    }

    #[test]
    fn rank_nullspace_det() {
        let m = Matrix::from_rows(
            Field::Rational,
            vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]],
        );
        assert_eq!(m.rank(), 2);
        assert!(m.det().is_zero());
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for r in 0..3 {
            let s = (0..3).fold(q(0), |acc, j| acc.add(&m.get(r, j).mul(&ns[0][j])));
            assert!(s.is_zero());
        }
        let id = Matrix::from_rows(Field::Rational, vec![vec![q(0), q(2)], vec![q(3), q(0)]]);
        assert_eq!(id.det(), q(-6));
    }

    #[test]
    fn monomial_counts() {
        let r = Ring::p5();
        assert_eq!(monomials_of_degree(&r, 2).len(), 21);
        assert_eq!(monomials_of_degree(&r, 3).len(), 56);
    }
}
