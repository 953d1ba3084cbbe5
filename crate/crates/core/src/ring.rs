//! Graded polynomial ring descriptors.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder, MAX_VARS};
use crate::scalar::Field;

/// Variables, grading weights, monomial order and coefficient field.
///
/// Rings are shared behind `Arc`; two polynomials are compatible when their
/// rings compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    weights: Vec<u32>,
    order: TermOrder,
    field: Field,
    standard: bool,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(vars: Vec<String>, field: Field) -> Result<Ring> {
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, got: vars.len() });
        }
        if vars.is_empty() {
            return Err(Error::InvalidArgument("a ring needs at least one variable".into()));
        }
        let n = vars.len();
        Ok(Ring { vars, weights: vec![1; n], order: TermOrder::Grevlex, field, standard: true })
    }

    /// `family_0 .. family_n` with the standard grading and grevlex.
    pub fn projective(family: &str, n: usize, field: Field) -> RingRef {
        let vars = (0..=n).map(|i| format!("{family}_{i}")).collect();
        Arc::new(Ring::new(vars, field).expect("valid ring"))
    }

    /// Coordinate ring of P^5 in `x_0..x_5` over the rationals.
    pub fn p5() -> RingRef {
        Ring::projective("x", 5, Field::Rational)
    }

    /// Coordinate ring of P^2 in `t_0..t_2` over the rationals.
    pub fn p2() -> RingRef {
        Ring::projective("t", 2, Field::Rational)
    }

    pub fn with_order(&self, order: TermOrder) -> Ring {
        Ring { order, ..self.clone() }
    }

    pub fn with_field(&self, field: Field) -> Ring {
        Ring { field, ..self.clone() }
    }

    pub fn with_weights(&self, weights: Vec<u32>) -> Result<Ring> {
        if weights.len() != self.vars.len() {
            return Err(Error::ArityMismatch { expected: self.vars.len(), got: weights.len() });
        }
        let standard = weights.iter().all(|&w| w == 1);
        Ok(Ring { weights, standard, ..self.clone() })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_standard_graded(&self) -> bool {
        self.standard
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub(crate) fn weight_slice(&self) -> Option<&[u32]> {
        if self.standard {
            None
        } else {
            Some(&self.weights)
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp_weighted(a, b, self.weight_slice())
    }

    pub fn degree_of(&self, m: &Monomial) -> u32 {
        if self.standard {
            m.degree()
        } else {
            m.weighted_degree(&self.weights)
        }
    }

    pub(crate) fn same_vars(&self, other: &Ring) -> bool {
        self.vars == other.vars && self.field == other.field
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))?;
        if !self.standard {
            write!(f, " weights {:?}", self.weights)?;
        }
        if self.order != TermOrder::Grevlex {
            write!(f, " {:?}", self.order)?;
        }
        Ok(())
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
