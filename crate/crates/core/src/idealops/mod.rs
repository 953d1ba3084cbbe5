//! Ideals in graded polynomial rings and the operations on them.

mod hilbert;
mod ringmap;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis_in, GroebnerBasis};
use crate::linalg::{coefficient_matrix, monomials_of_degree, row_polynomial};
use crate::monomial::{Monomial, TermOrder};
use crate::parse::parse_generators;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};

pub use hilbert::{hilbert, HilbertData};
pub use ringmap::{kernel, preimage, RingMap};

/// Iteration guard for [`saturate`] with an explicit ideal.
pub const SATURATION_GUARD: usize = 64;

/// A finitely generated ideal. Clones share the lazily filled caches.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    graded: bool,
    gb: Arc<OnceLock<GroebnerBasis>>,
    saturation: Arc<OnceLock<Ideal>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Product,
    Intersection,
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().same_vars(ring) || g.ring().weights() != ring.weights() {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                kept.push(g.to_ring(ring)?);
            }
        }
        let graded = kept.iter().all(|g| g.is_homogeneous());
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            graded,
            gb: Arc::default(),
            saturation: Arc::default(),
        })
    }

    /// Parse a comma or newline separated generator list.
    pub fn parse(ring: &RingRef, text: &str) -> Result<Ideal> {
        Ideal::new(ring, parse_generators(text, ring)?)
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("empty ideal")
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("unit ideal")
    }

    /// The irrelevant ideal generated by all variables.
    pub fn irrelevant(ring: &RingRef) -> Ideal {
        let vars = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, vars).expect("variables")
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Groebner basis for graded reverse-lex, cached.
    pub fn gb(&self) -> Result<&GroebnerBasis> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = groebner_basis_in(&self.ring, &self.gens, TermOrder::Grevlex)?;
        Ok(self.gb.get_or_init(|| g))
    }

    /// Uncached basis for an arbitrary order.
    pub fn gb_in(&self, order: TermOrder) -> Result<GroebnerBasis> {
        if order == TermOrder::Grevlex {
            return self.gb().cloned();
        }
        groebner_basis_in(&self.ring, &self.gens, order)
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        Ok(self.gb()?.is_unit())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        self.gb()?.contains(f)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals (identical reduced bases).
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.gb()?.elements() == other.gb()?.elements())
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring.same_vars(&other.ring) && self.ring.weights() == other.ring.weights() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Ideal generated by the reduced basis.
    pub fn minimalized(&self) -> Result<Ideal> {
        let gens = self.gb()?.elements().iter().map(|g| g.to_ring(&self.ring)).collect::<Result<_>>()?;
        let out = Ideal::new(&self.ring, gens)?;
        let _ = out.gb.set(self.gb()?.clone());
        Ok(out)
    }

    /// Same generators viewed over another coefficient field (reduction mod p
    /// of integral rationals).
    pub fn change_field(&self, ring: &RingRef) -> Result<Ideal> {
        if ring.vars() != self.ring.vars() {
            return Err(Error::RingMismatch);
        }
        let f = ring.field();
        let mut gens = Vec::new();
        for g in &self.gens {
            let mut terms = Vec::new();
            for (m, c) in g.terms() {
                let c = match c {
                    crate::scalar::Scalar::Rational(q) => f.from_rational(q)?,
                    crate::scalar::Scalar::Prime { residue, .. } => f.from_i64(*residue as i64),
                };
                terms.push((*m, c));
            }
            gens.push(Polynomial::from_terms(ring, terms));
        }
        Ideal::new(ring, gens)
    }

    /// Cached saturation with respect to the irrelevant ideal.
    pub fn saturation(&self) -> Result<&Ideal> {
        if let Some(s) = self.saturation.get() {
            return Ok(s);
        }
        let s = saturate_irrelevant(self)?;
        Ok(self.saturation.get_or_init(|| s))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal({:?})", self.gens)
    }
}

/// Sum, product or intersection of two ideals of one ring.
pub fn combine(i: &Ideal, j: &Ideal, mode: CombineMode) -> Result<Ideal> {
    i.check_ring(j)?;
    match mode {
        CombineMode::Sum => {
            let gens = i.gens.iter().chain(&j.gens).cloned().collect();
            Ideal::new(&i.ring, gens)
        }
        CombineMode::Product => {
            let mut gens = Vec::with_capacity(i.gens.len() * j.gens.len());
            for f in &i.gens {
                for g in &j.gens {
                    gens.push(f.mul(&g.to_ring(&i.ring)?));
                }
            }
            Ideal::new(&i.ring, gens)
        }
        CombineMode::Intersection => intersect(i, j),
    }
}

pub fn sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    combine(i, j, CombineMode::Sum)
}

/// Ring `[aux_0.., base vars]` with the given auxiliary weights and an
/// elimination order for the auxiliary block.
fn extended_ring(base: &RingRef, names: &[String], weights: &[u32], base_weights: &[u32]) -> Result<RingRef> {
    let mut vars = names.to_vec();
    vars.extend(base.vars().iter().cloned());
    let mut w = weights.to_vec();
    w.extend_from_slice(base_weights);
    let r = Ring::new(vars, base.field())?
        .with_weights(w)?
        .with_order(TermOrder::Elimination(names.len()));
    Ok(Arc::new(r))
}

fn lift(p: &Polynomial, ring: &RingRef, shift: usize) -> Polynomial {
    p.map_monomials(ring, |m| m.shift(shift))
}

/// Elements of an elimination basis free of the first `k` variables,
/// moved into `target` (whose variables are the remaining ones).
fn eliminated_part(gb: &GroebnerBasis, k: usize, target: &RingRef) -> Vec<Polynomial> {
    gb.elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| (0..k).all(|i| m.exp(i) == 0)))
        .map(|g| g.map_monomials(target, |m| m.drop_leading(k)))
        .collect()
}

fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if i.is_zero() || j.is_unit()? {
        return Ok(i.clone());
    }
    if j.is_zero() || i.is_unit()? {
        return Ideal::new(&i.ring, j.gens.clone());
    }
    if i.is_subset_of(j)? {
        return Ok(i.clone());
    }
    if j.is_subset_of(i)? {
        return Ideal::new(&i.ring, j.gens.clone());
    }
    let ring = &i.ring;
    let ext = extended_ring(ring, &["_t".to_string()], &[0], ring.weights())?;
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).sub(&t);
    let mut input = Vec::new();
    for f in &i.gens {
        input.push(lift(f, &ext, 1).mul(&t));
    }
    for g in &j.gens {
        input.push(lift(g, &ext, 1).mul(&one_minus_t));
    }
    let gb = groebner_basis_in(&ext, &input, TermOrder::Elimination(1))?;
    Ideal::new(ring, eliminated_part(&gb, 1, ring))
}

/// Intersection of a nonempty list of ideals.
pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
    let mut acc = ideals
        .first()
        .cloned()
        .ok_or_else(|| Error::InvalidArgument("empty ideal list".into()))?;
    for j in &ideals[1..] {
        acc = intersect(&acc, j)?;
    }
    Ok(acc)
}

/// Index of the variable `g` is a scalar multiple of, if any.
fn as_variable(g: &Polynomial) -> Option<usize> {
    if g.len() != 1 {
        return None;
    }
    let m = g.leading_monomial()?;
    if m.degree() != 1 {
        return None;
    }
    (0..m.nvars()).find(|&i| m.exp(i) == 1)
}

/// `(I : x_j)` or `(I : x_j^∞)` for graded `I` from a reverse-lex basis with
/// `x_j` placed last: divide each basis element by `x_j` (once, or as often
/// as possible).
fn variable_colon(i: &Ideal, j: usize, infinite: bool) -> Result<Ideal> {
    let ring = &i.ring;
    let n = ring.nvars();
    let mut perm: Vec<usize> = (0..n).filter(|&k| k != j).collect();
    perm.push(j);
    let mut inverse = vec![0; n];
    for (slot, &src) in perm.iter().enumerate() {
        inverse[src] = slot;
    }
    let vars = perm.iter().map(|&k| ring.vars()[k].clone()).collect();
    let weights = perm.iter().map(|&k| ring.weights()[k]).collect();
    let pring: RingRef = Arc::new(Ring::new(vars, ring.field())?.with_weights(weights)?);
    let gens: Vec<Polynomial> = i.gens.iter().map(|g| g.map_monomials(&pring, |m| m.permute(&perm))).collect();
    let gb = groebner_basis_in(&pring, &gens, TermOrder::Grevlex)?;
    let last = n - 1;
    let mut out = Vec::with_capacity(gb.len());
    for g in gb.elements() {
        let low = g.terms().iter().map(|(m, _)| m.exp(last)).min().unwrap_or(0);
        let e = if infinite { low } else { low.min(1) };
        let mut exps = vec![0u32; n];
        exps[last] = e;
        let div = Monomial::new(&exps)?;
        let q = g.map_monomials(&pring, |m| div.quotient_of(m).expect("divisible"));
        out.push(q.map_monomials(ring, |m| m.permute(&inverse)));
    }
    Ideal::new(ring, out)
}

fn principal_colon(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    if g.is_constant() {
        return Ok(i.clone());
    }
    if i.graded {
        if let Some(j) = as_variable(g) {
            return variable_colon(i, j, false);
        }
    }
    let principal = Ideal::new(&i.ring, vec![g.clone()])?;
    let meet = intersect(i, &principal)?;
    let mut out = Vec::with_capacity(meet.gens.len());
    for f in &meet.gens {
        out.push(f.div_exact(g).ok_or_else(|| Error::InvalidArgument("intersection element not divisible".into()))?);
    }
    Ideal::new(&i.ring, out)
}

/// Ideal quotient `(I : J)`.
pub fn quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.check_ring(j)?;
    if j.is_zero() {
        return Err(Error::InvalidArgument("quotient by the zero ideal".into()));
    }
    if j.is_unit()? || i.is_unit()? {
        return Ok(i.clone());
    }
    let parts: Vec<Ideal> = j
        .gens
        .iter()
        .map(|g| principal_colon(i, &g.to_ring(&i.ring)?))
        .collect::<Result<_>>()?;
    intersect_all(&parts)
}

/// Distinct ideals of a list, by equality of reduced bases.
fn distinct(ideals: Vec<Ideal>) -> Result<Vec<Ideal>> {
    let mut out: Vec<Ideal> = Vec::new();
    for i in ideals {
        let mut seen = false;
        for o in &out {
            if o.equals(&i)? {
                seen = true;
                break;
            }
        }
        if !seen {
            out.push(i);
        }
    }
    Ok(out)
}

fn saturate_irrelevant(i: &Ideal) -> Result<Ideal> {
    if i.is_zero() || i.is_unit()? {
        return Ok(i.clone());
    }
    if !i.graded {
        return saturate_iterated(i, &Ideal::irrelevant(&i.ring));
    }
    // I : m^∞ = ∩_j (I : x_j^∞)
    let parts: Vec<Ideal> = (0..i.ring.nvars())
        .map(|j| variable_colon(i, j, true))
        .collect::<Result<_>>()?;
    let parts = distinct(parts)?;
    let out = intersect_all(&parts)?.minimalized()?;
    let _ = out.saturation.set(out.clone_without_caches());
    Ok(out)
}

impl Ideal {
    fn clone_without_caches(&self) -> Ideal {
        let out = Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            graded: self.graded,
            gb: Arc::default(),
            saturation: Arc::default(),
        };
        if let Some(g) = self.gb.get() {
            let _ = out.gb.set(g.clone());
        }
        out
    }
}

fn saturate_iterated(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut cur = i.clone();
    for _ in 0..SATURATION_GUARD {
        let next = quotient(&cur, j)?;
        if next.equals(&cur)? {
            return cur.minimalized();
        }
        cur = next;
    }
    Err(Error::NonTermination("saturation".into()))
}

/// `(I : J^∞)`; `J` defaults to the irrelevant ideal.
pub fn saturate(i: &Ideal, j: Option<&Ideal>) -> Result<Ideal> {
    match j {
        None => i.saturation().cloned(),
        Some(j) => {
            i.check_ring(j)?;
            if j.is_zero() {
                return Err(Error::InvalidArgument("saturation by the zero ideal".into()));
            }
            saturate_iterated(i, j)
        }
    }
}

/// `I ∩ k[x_k, ..]`: the ideal in the ring of the remaining variables.
pub fn eliminate(i: &Ideal, k: usize) -> Result<Ideal> {
    let ring = &i.ring;
    let n = ring.nvars();
    if k >= n {
        return Err(Error::InvalidArgument(format!("cannot eliminate {k} of {n} variables")));
    }
    let small: RingRef = Arc::new(
        Ring::new(ring.vars()[k..].to_vec(), ring.field())?.with_weights(ring.weights()[k..].to_vec())?,
    );
    if k == 0 {
        return Ideal::new(&small, i.gens.iter().map(|g| g.map_monomials(&small, |m| *m)).collect());
    }
    let gb = groebner_basis_in(ring, &i.gens, TermOrder::Elimination(k))?;
    Ideal::new(&small, eliminated_part(&gb, k, &small))
}

/// Field basis of the degree-`d` piece of a graded ideal, in echelon form.
pub fn graded_basis(i: &Ideal, d: u32) -> Result<Vec<Polynomial>> {
    if !i.graded {
        return Err(Error::NotHomogeneous);
    }
    if !i.ring.is_standard_graded() {
        return Err(Error::InvalidArgument("graded pieces need the standard grading".into()));
    }
    let ring = &i.ring;
    let one = ring.field().one();
    let mut rows = Vec::new();
    for g in &i.gens {
        let e = g.homogeneous_degree().expect("graded");
        if e > d {
            continue;
        }
        for m in monomials_of_degree(ring, d - e) {
            rows.push(g.mul_term(&m, &one));
        }
    }
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    let mons = monomials_of_degree(ring, d);
    let mut mat = coefficient_matrix(&rows, &mons, ring.field());
    let rank = mat.rref().len();
    Ok((0..rank).map(|r| row_polynomial(ring, mat.row(r), &mons)).collect())
}

/// Ring arity minus the Krull dimension of `R/I`.
pub fn codim(i: &Ideal) -> Result<usize> {
    let h = hilbert(i)?;
    Ok(i.ring.nvars() - h.krull_dim)
}

#[cfg(test)]
mod tests;
