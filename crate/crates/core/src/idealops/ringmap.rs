use super::{eliminated_part, extended_ring, Ideal};
use crate::error::{Error, Result};
use crate::groebner::groebner_basis_in;
use crate::monomial::TermOrder;
use crate::poly::Polynomial;
use crate::ring::{same_ring, RingRef};

/// Graded homomorphism `source -> target` sending source variable `i` to
/// `forms[i]`, a form of degree `degree` in the target ring.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: RingRef,
    target: RingRef,
    forms: Vec<Polynomial>,
    degree: u32,
}

impl RingMap {
    pub fn new(source: &RingRef, target: &RingRef, forms: Vec<Polynomial>) -> Result<RingMap> {
        if forms.len() != source.nvars() {
            return Err(Error::ArityMismatch { expected: source.nvars(), got: forms.len() });
        }
        if !source.is_standard_graded() || !target.is_standard_graded() {
            return Err(Error::InvalidArgument("ring maps need standard graded rings".into()));
        }
        if source.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let mut degree = None;
        for f in &forms {
            if !same_ring(f.ring(), target) {
                return Err(Error::RingMismatch);
            }
            if f.is_zero() {
                return Err(Error::InvalidArgument("zero form in ring map".into()));
            }
            let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(Error::MixedDegrees),
                _ => {}
            }
        }
        let degree = degree.ok_or_else(|| Error::InvalidArgument("empty ring map".into()))?;
        if degree == 0 {
            return Err(Error::InvalidArgument("ring map of degree zero".into()));
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), forms, degree })
    }

    pub fn source(&self) -> &RingRef {
        &self.source
    }

    pub fn target(&self) -> &RingRef {
        &self.target
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Image of a source polynomial.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_vars(&self.source) {
            return Err(Error::RingMismatch);
        }
        f.substitute(&self.forms)
    }

    /// Graph ideal `x_i - f_i` in `[target vars, source vars]`, target vars of
    /// weight 1 and source vars of weight `degree`.
    fn graph(&self) -> Result<(RingRef, Vec<Polynomial>)> {
        let k = self.target.nvars();
        let names: Vec<String> = (0..k).map(|i| format!("_p{i}")).collect();
        let weights = vec![1; k];
        let ext = extended_ring(&self.source, &names, &weights, &vec![self.degree; self.source.nvars()])?;
        let mut gens = Vec::with_capacity(self.forms.len());
        for (i, f) in self.forms.iter().enumerate() {
            gens.push(Polynomial::var(&ext, k + i).sub(&lift_target(f, &ext)));
        }
        Ok((ext, gens))
    }

    fn pull_back(&self, extra: Vec<Polynomial>) -> Result<Ideal> {
        let (ext, mut gens) = self.graph()?;
        gens.extend(extra);
        let k = self.target.nvars();
        let gb = groebner_basis_in(&ext, &gens, TermOrder::Elimination(k))?;
        Ideal::new(&self.source, eliminated_part(&gb, k, &self.source))
    }
}

/// Ideal of the closure of the image: the graph ideal with the target
/// variables eliminated.
pub fn kernel(h: &RingMap) -> Result<Ideal> {
    h.pull_back(Vec::new())
}

/// Forms `g` of the source ring with `h(g) ∈ J`, where `J` is an ideal of
/// the target (parameter) ring of `h`.
pub fn preimage(h: &RingMap, j: &Ideal) -> Result<Ideal> {
    if !j.ring().same_vars(&h.target) || !j.ring().is_standard_graded() {
        return Err(Error::RingMismatch);
    }
    let (ext, _) = h.graph()?;
    let lifted = j.gens().iter().map(|g| lift_target(g, &ext)).collect();
    h.pull_back(lifted)
}

fn lift_target(g: &Polynomial, ext: &RingRef) -> Polynomial {
    let k = g.ring().nvars();
    let map: Vec<usize> = (0..k).collect();
    g.map_monomials(ext, |m| m.embed(ext.nvars(), &map))
}
