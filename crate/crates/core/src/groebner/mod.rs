//! Reduced Groebner bases, normal forms and first syzygies.

mod engine;

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring, RingRef};
use crate::scalar::{Field, Scalar};

use engine::{buchberger, IntDomain, OrderCtx, PrimeDomain, Terms};

/// A reduced Groebner basis: monic elements sorted by increasing leading
/// monomial. The zero ideal has an empty basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    ring: RingRef,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Ring carrying the order the basis was computed for.
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().expect("nonzero")).collect()
    }

    /// Remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

fn order_ring(ring: &RingRef, order: TermOrder) -> RingRef {
    if ring.order() == order {
        ring.clone()
    } else {
        Arc::new(ring.with_order(order))
    }
}

fn to_int_terms(p: &Polynomial) -> Terms<BigInt> {
    let mut l = BigInt::one();
    for (_, c) in p.terms() {
        if let Scalar::Rational(q) = c {
            l = l.lcm(q.denom());
        }
    }
    p.terms()
        .iter()
        .map(|(m, c)| match c {
            Scalar::Rational(q) => (*m, q.numer() * (&l / q.denom())),
            _ => unreachable!("rational ring"),
        })
        .collect()
}

fn from_int_terms(ring: &RingRef, t: &Terms<BigInt>) -> Polynomial {
    let lc = t[0].1.clone();
    let terms = t
        .iter()
        .map(|(m, c)| (*m, Scalar::Rational(BigRational::new(c.clone(), lc.clone()))))
        .collect();
    Polynomial::from_sorted(ring, terms)
}

fn to_fp_terms(p: &Polynomial) -> Terms<u32> {
    p.terms()
        .iter()
        .map(|(m, c)| match c {
            Scalar::Prime { residue, .. } => (*m, *residue),
            _ => unreachable!("prime ring"),
        })
        .collect()
}

fn from_fp_terms(ring: &RingRef, p: u32, t: &Terms<u32>) -> Polynomial {
    let terms = t.iter().map(|(m, c)| (*m, Scalar::Prime { residue: *c, modulus: p })).collect();
    Polynomial::from_sorted(ring, terms)
}

fn check_common_ring(gens: &[Polynomial]) -> Result<Option<RingRef>> {
    let ring = match gens.first() {
        None => return Ok(None),
        Some(g) => g.ring().clone(),
    };
    if gens.iter().any(|g| !same_ring(g.ring(), &ring)) {
        return Err(Error::RingMismatch);
    }
    Ok(Some(ring))
}

/// Reduced Groebner basis of the ideal generated by `gens` in `ring`
/// under `order`. Deterministic for fixed input and order.
pub fn groebner_basis_in(ring: &RingRef, gens: &[Polynomial], order: TermOrder) -> Result<GroebnerBasis> {
    if let Some(r) = check_common_ring(gens)? {
        if !r.same_vars(ring) || r.weights() != ring.weights() {
            return Err(Error::RingMismatch);
        }
    }
    let oring = order_ring(ring, order);
    let gens: Vec<Polynomial> =
        gens.iter().map(|g| g.to_ring(&oring)).collect::<Result<_>>()?;
    let ord = OrderCtx { order, weights: oring.weight_slice() };
    let elements = match oring.field() {
        Field::Rational => {
            let input = gens.iter().filter(|g| !g.is_zero()).map(to_int_terms).collect();
            buchberger(&IntDomain, &ord, input)
                .iter()
                .map(|t| from_int_terms(&oring, t))
                .collect()
        }
        Field::Prime(p) => {
            let input = gens.iter().filter(|g| !g.is_zero()).map(to_fp_terms).collect();
            buchberger(&PrimeDomain { p }, &ord, input)
                .iter()
                .map(|t| from_fp_terms(&oring, p, t))
                .collect()
        }
    };
    Ok(GroebnerBasis { ring: oring, elements })
}

/// Reduced Groebner basis of a nonempty generator list.
pub fn groebner_basis(gens: &[Polynomial], order: TermOrder) -> Result<GroebnerBasis> {
    let ring = check_common_ring(gens)?
        .ok_or_else(|| Error::InvalidArgument("empty generator list".into()))?;
    groebner_basis_in(&ring, gens, order)
}

/// Remainder of `f` on division by a Groebner basis; no term of the result
/// is divisible by a leading monomial of the basis.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    if !basis.ring.same_vars(f.ring()) || basis.ring.weights() != f.ring().weights() {
        return Err(Error::RingMismatch);
    }
    let ring = &basis.ring;
    let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
    let mut p = f.to_ring(ring)?;
    let lms = basis.leading_monomials();
    while let Some((m, c)) = p.leading_term().cloned() {
        match lms.iter().position(|l| l.divides(&m)) {
            Some(k) => {
                let q = lms[k].quotient_of(&m).unwrap();
                p = p.sub(&basis.elements[k].mul_term(&q, &c));
            }
            None => {
                rem.push((m, c));
                p = Polynomial::from_sorted(ring, p.terms()[1..].to_vec());
            }
        }
    }
    let out = Polynomial::from_sorted(ring, rem);
    out.to_ring(f.ring())
}

/// S-polynomial of two polynomials (monic leading coefficients assumed
/// away by scaling).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().cloned().expect("nonzero");
    let (mg, cg) = g.leading_term().cloned().expect("nonzero");
    let l = mf.lcm(&mg);
    let a = f.mul_term(&mf.quotient_of(&l).unwrap(), &cf.inv());
    let b = g.mul_term(&mg.quotient_of(&l).unwrap(), &cg.inv());
    a.sub(&b)
}

/// Every S-polynomial of basis pairs reduces to zero.
pub fn satisfies_buchberger_criterion(basis: &GroebnerBasis) -> Result<bool> {
    let el = &basis.elements;
    for i in 0..el.len() {
        for j in i + 1..el.len() {
            if !normal_form(&s_polynomial(&el[i], &el[j]), basis)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A syzygy `(a_1, .., a_m)` with `sum a_i g_i = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SyzygyVector {
    pub entries: Vec<Polynomial>,
    /// Degree in the graded free module (entry degree plus generator degree).
    pub degree: u32,
}

impl SyzygyVector {
    /// Degree of the entries (the shift over the generator degree).
    pub fn entry_degree(&self) -> Option<u32> {
        self.entries.iter().filter(|e| !e.is_zero()).map(|e| e.degree().unwrap()).max()
    }

    pub fn annihilates(&self, gens: &[Polynomial]) -> bool {
        let ring = gens[0].ring();
        let mut acc = Polynomial::zero(ring);
        for (a, g) in self.entries.iter().zip(gens) {
            acc = acc.add(&a.mul(g));
        }
        acc.is_zero()
    }
}

fn equal_degree(gens: &[Polynomial]) -> Result<u32> {
    let ring = check_common_ring(gens)?
        .ok_or_else(|| Error::InvalidArgument("empty generator list".into()))?;
    if !ring.is_standard_graded() {
        return Err(Error::InvalidArgument("syzygies need the standard grading".into()));
    }
    let mut d = None;
    for g in gens {
        let e = g.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if g.is_zero() {
            return Err(Error::InvalidArgument("zero generator".into()));
        }
        match d {
            None => d = Some(e),
            Some(d0) if d0 != e => return Err(Error::MixedDegrees),
            _ => {}
        }
    }
    Ok(d.unwrap())
}

/// Ring `[e_0.., base vars]` encoding the free module `R^k` as the
/// e-linear part of `R[e]/(e)^2`.
fn module_ring(base: &RingRef, k: usize, e_weights: &[u32], order: TermOrder) -> Result<RingRef> {
    let mut vars: Vec<String> = (0..k).map(|i| format!("syz_{i}")).collect();
    vars.extend(base.vars().iter().cloned());
    let mut weights = e_weights.to_vec();
    weights.extend(base.weights().iter().copied());
    let r = Ring::new(vars, base.field())?.with_weights(weights)?.with_order(order);
    Ok(Arc::new(r))
}

fn e_products(ring: &RingRef, k: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for i in 0..k {
        for j in i..k {
            out.push(Polynomial::var(ring, i).mul(&Polynomial::var(ring, j)));
        }
    }
    out
}

fn lift(p: &Polynomial, ring: &RingRef, shift: usize) -> Polynomial {
    p.map_monomials(ring, |m| m.shift(shift))
}

/// Split an e-linear polynomial into its module coordinates `0..k`.
fn coordinates(p: &Polynomial, base: &RingRef, k: usize, first: usize) -> Option<Vec<Polynomial>> {
    let mut parts: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); k];
    for (m, c) in p.terms() {
        let es: Vec<usize> = (0..first + k).filter(|&i| m.exp(i) > 0).collect();
        let edeg: u32 = (0..first + k).map(|i| m.exp(i)).sum();
        if edeg != 1 || es[0] < first {
            return None;
        }
        let mut exps: Vec<u32> = m.exps().iter().map(|&e| e as u32).collect();
        exps[es[0]] = 0;
        let mm = Monomial::new(&exps).unwrap().drop_leading(first + k);
        parts[es[0] - first].push((mm, c.clone()));
    }
    Some(parts.into_iter().map(|t| Polynomial::from_terms(base, t)).collect())
}

/// Generators of the first syzygy module of equal-degree homogeneous forms,
/// read off a module Groebner basis (position-weighted by generator degree).
pub fn first_syzygies(gens: &[Polynomial]) -> Result<Vec<SyzygyVector>> {
    let d = equal_degree(gens)?;
    let base = gens[0].ring().clone();
    let m = gens.len();
    let mut ew = vec![0u32];
    ew.extend(std::iter::repeat_n(d, m));
    let ring = module_ring(&base, m + 1, &ew, TermOrder::Elimination(1))?;
    let mut input = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let lifted = lift(g, &ring, m + 1).mul(&Polynomial::var(&ring, 0));
        input.push(lifted.add(&Polynomial::var(&ring, i + 1)));
    }
    input.extend(e_products(&ring, m + 1));
    let gb = groebner_basis_in(&ring, &input, TermOrder::Elimination(1))?;
    let mut out = Vec::new();
    for g in gb.elements() {
        if g.terms().iter().any(|(mm, _)| mm.exp(0) > 0) {
            continue;
        }
        if let Some(entries) = coordinates(g, &base, m, 1) {
            let deg = g.homogeneous_degree().expect("homogeneous");
            out.push(SyzygyVector { entries, degree: deg });
        }
    }
    Ok(out)
}

/// Whether `v` lies in the submodule of `R^m` generated by `gens`.
pub fn module_contains(gens: &[Vec<Polynomial>], v: &[Polynomial], shifts: &[u32]) -> Result<bool> {
    let m = v.len();
    let base = v
        .iter()
        .chain(gens.iter().flatten())
        .next()
        .map(|p| p.ring().clone())
        .ok_or_else(|| Error::InvalidArgument("empty module data".into()))?;
    let ring = module_ring(&base, m, shifts, TermOrder::Grevlex)?;
    let encode = |vec: &[Polynomial]| -> Polynomial {
        let mut acc = Polynomial::zero(&ring);
        for (i, a) in vec.iter().enumerate() {
            acc = acc.add(&lift(a, &ring, m).mul(&Polynomial::var(&ring, i)));
        }
        acc
    };
    let mut input: Vec<Polynomial> = gens.iter().map(|g| encode(g)).collect();
    input.extend(e_products(&ring, m));
    let gb = groebner_basis_in(&ring, &input, TermOrder::Grevlex)?;
    Ok(gb.normal_form(&encode(v))?.is_zero())
}

/// Koszul syzygies `g_j e_i - g_i e_j` lie in the submodule generated by the
/// syzygies with entries of degree at most one.
pub fn linear_syzygy_test(gens: &[Polynomial]) -> Result<bool> {
    let d = equal_degree(gens)?;
    let syz = first_syzygies(gens)?;
    let linear: Vec<Vec<Polynomial>> = syz
        .into_iter()
        .filter(|s| s.entry_degree().is_none_or(|e| e <= 1))
        .map(|s| s.entries)
        .collect();
    let m = gens.len();
    let ring = gens[0].ring();
    let shifts = vec![d; m];
    for i in 0..m {
        for j in i + 1..m {
            let mut v = vec![Polynomial::zero(ring); m];
            v[i] = gens[j].clone();
            v[j] = gens[i].neg();
            if linear.is_empty() || !module_contains(&linear, &v, &shifts)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
