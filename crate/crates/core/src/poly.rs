//! Sparse multivariate polynomials with exact coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{same_ring, RingRef};
use crate::scalar::Scalar;

/// A polynomial in canonical form: terms strictly decreasing in the ring's
/// monomial order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Scalar)>,
}

/// Arithmetic operation selector for [`poly_arith`].
#[derive(Clone, Debug, PartialEq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    ScalarMul(Scalar),
}

/// Ring-checked arithmetic. For `ScalarMul` the second operand is ignored.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    if !same_ring(&f.ring, &g.ring) {
        return Err(Error::RingMismatch);
    }
    Ok(match op {
        ArithOp::Add => f.add(g),
        ArithOp::Sub => f.sub(g),
        ArithOp::Mul => f.mul(g),
        ArithOp::ScalarMul(c) => {
            if c.field() != f.ring.field() {
                return Err(Error::RingMismatch);
            }
            f.scale(&c)
        }
    })
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::one(ring.nvars()), c)] }
    }

    pub fn one(ring: &RingRef) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i), ring.field().one())],
        }
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Trusted constructor: terms already canonical.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    /// Largest degree (in the ring's grading) among the terms.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| self.ring.degree_of(m)).max()
    }

    /// Common degree of all terms, `None` for inhomogeneous polynomials.
    /// The zero polynomial counts as homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(m, _)| self.ring.degree_of(m));
        let first = match it.next() {
            None => return Some(0),
            Some(d) => d,
        };
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    pub fn coeff_of(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { t.1.neg() } else { t.1.clone() };
            out.push((t.0, c));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                terms.push((m.mul(n), a.mul(b)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = self.ring.field();
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps: Vec<u32> = m.exps().iter().map(|&x| x as u32).collect();
            exps[var] -= 1;
            let k = c.mul(&field.from_i64(e as i64));
            if !k.is_zero() {
                terms.push((Monomial::new(&exps).expect("smaller exponents"), k));
            }
        }
        // removing one power of a variable preserves the relative order
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Substitute `images[i]` for variable `i`; all images share one ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch { expected: self.ring.nvars(), got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Err(Error::InvalidArgument("empty substitution".into())),
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(Error::RingMismatch);
        }
        if target.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(&target), p.clone()]).collect();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap().mul(&pw[1]);
                    pw.push(next);
                }
                if e > 0 {
                    t = t.mul(&pw[e]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Evaluate at a point with coordinates in the coefficient field.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ring.nvars() {
            return Err(Error::ArityMismatch { expected: self.ring.nvars(), got: point.len() });
        }
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Same polynomial viewed in a ring with identical variables and field
    /// but possibly different order or weights.
    pub fn to_ring(&self, ring: &RingRef) -> Result<Polynomial> {
        if !ring.same_vars(&self.ring) {
            return Err(Error::RingMismatch);
        }
        if same_ring(ring, &self.ring) {
            return Ok(self.clone());
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    /// Move to a ring with the same arity by relabelling monomials.
    pub(crate) fn map_monomials(
        &self,
        ring: &RingRef,
        f: impl Fn(&Monomial) -> Monomial,
    ) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Exact quotient `self / g`, `None` when `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        let (gm, gc) = g.leading_term()?.clone();
        let ginv = gc.inv();
        let mut rem = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = rem.leading_term().cloned() {
            let t = gm.quotient_of(&m)?;
            let k = c.mul(&ginv);
            rem = rem.sub(&g.mul_term(&t, &k));
            q.push((t, k));
        }
        Some(Polynomial::from_terms(&self.ring, q))
    }

    /// Support variables.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exp(i) > 0))
            .collect()
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring.same_vars(&other.ring))
            && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::render_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::Ring;
    use crate::scalar::Field;
    use proptest::prelude::*;

    fn p(r: &RingRef, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = Ring::projective("x", 2, Field::Rational);
        let f = p(&r, "x_0+x_1").mul(&p(&r, "x_0-x_1"));
        assert_eq!(f, p(&r, "x_0^2-x_1^2"));
        assert!(f.add(&f.neg()).is_zero());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r = Ring::projective("x", 2, Field::Rational);
        let s = Ring::projective("t", 2, Field::Rational);
        let err = poly_arith(&p(&r, "x_0"), &p(&s, "t_0"), ArithOp::Add).unwrap_err();
        assert_eq!(err, Error::RingMismatch);
    }

    #[test]
    fn homogeneity() {
        let r = Ring::p5();
        assert_eq!(p(&r, "x_2*x_4-x_1*x_5").homogeneous_degree(), Some(2));
        assert_eq!(p(&r, "x_2*x_4-x_1").homogeneous_degree(), None);
    }

    #[test]
    fn substitution_and_derivative() {
        let r = Ring::projective("x", 1, Field::Rational);
        let t = Ring::projective("t", 1, Field::Rational);
        let f = p(&r, "x_0^2-x_0*x_1");
        let g = f.substitute(&[p(&t, "t_0+t_1"), p(&t, "t_1")]).unwrap();
        assert_eq!(g, p(&t, "t_0^2+t_0*t_1"));
        assert_eq!(f.derivative(0), p(&r, "2*x_0-x_1"));
    }

    fn random_poly(r: &RingRef, seed: &[(u8, u8, u8, i8)]) -> Polynomial {
        let f = r.field();
        let terms = seed
            .iter()
            .map(|&(a, b, c, k)| {
                (Monomial::new(&[a as u32 % 3, b as u32 % 3, c as u32 % 3]).unwrap(), f.from_i64(k as i64))
            })
            .collect();
        Polynomial::from_terms(r, terms)
    }

    proptest! {
        #[test]
        fn distributivity(fs in proptest::collection::vec(any::<(u8, u8, u8, i8)>(), 0..6),
                          gs in proptest::collection::vec(any::<(u8, u8, u8, i8)>(), 0..6),
                          hs in proptest::collection::vec(any::<(u8, u8, u8, i8)>(), 0..6)) {
            for field in [Field::Rational, Field::Prime(101)] {
                let r = Ring::projective("x", 2, field);
                let (f, g, h) = (random_poly(&r, &fs), random_poly(&r, &gs), random_poly(&r, &hs));
                prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
                prop_assert_eq!(f.mul(&g), g.mul(&f));
                for w in f.mul(&g).terms().windows(2) {
                    prop_assert_eq!(r.cmp(&w[0].0, &w[1].0), Ordering::Greater);
                }
            }
        }
    }
}
