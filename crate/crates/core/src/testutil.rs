//! Helpers shared by unit tests.

use crate::linalg::monomials_of_degree;
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::ring::RingRef;

pub(crate) struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed)
    }

    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }
}

pub(crate) fn p(r: &RingRef, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

/// Random form of degree `d` with coefficients in `[-k, k]` and roughly
/// `density` percent of monomials present.
pub(crate) fn random_form(rng: &mut TestRng, r: &RingRef, d: u32, k: i64, density: u64) -> Polynomial {
    let mut terms = Vec::new();
    for m in monomials_of_degree(r, d) {
        if rng.next() % 100 < density {
            terms.push((m, r.field().from_i64(rng.range(-k, k))));
        }
    }
    Polynomial::from_terms(r, terms)
}
