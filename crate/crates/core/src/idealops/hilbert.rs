use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::Ideal;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Hilbert series and polynomial of `R/I`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HilbertData {
    /// Numerator `Q(T)` of the reduced series `Q(T) / (1-T)^krull_dim`.
    pub numerator: Vec<i64>,
    /// Hilbert polynomial coefficients, constant term first (exact rationals
    /// rendered as strings when serialized).
    #[serde(serialize_with = "ser_rationals")]
    pub polynomial: Vec<BigRational>,
    /// Projective dimension; -1 for the empty scheme.
    pub dim: i64,
    pub degree: u64,
    pub krull_dim: usize,
}

fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

type Series = Vec<i128>;

fn trim(mut p: Series) -> Series {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(a: &Series, b: &Series, shift: usize, sign: i128) -> Series {
    let mut out = a.clone();
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        out[i + shift] += sign * c;
    }
    trim(out)
}

fn mul_one_minus(p: &Series, d: usize) -> Series {
    add_shifted(p, p, d, -1)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| (a.degree(), a.exps()).cmp(&(b.degree(), b.exps())));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out.sort_by(|a, b| a.exps().cmp(b.exps()));
    out
}

/// Numerator of the Hilbert series of `k[x]/(gens)` over `(1-T)^n`.
fn numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, Series>) -> Series {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let result = if let Some(k) =
        (0..gens.len()).find(|&k| gens.iter().enumerate().all(|(j, g)| j == k || g.is_coprime(&gens[k])))
    {
        let mut rest = gens.clone();
        let g = rest.remove(k);
        mul_one_minus(&numerator(rest, memo), g.degree() as usize)
    } else {
        // pivot x^e, e minimal, on the most frequent variable: N(I) = N(I + x^e) + T^e N(I : x^e)
        let n = gens[0].nvars();
        let var = (0..n).max_by_key(|&v| (gens.iter().filter(|g| g.exp(v) > 0).count(), n - v)).unwrap();
        let e = gens.iter().map(|g| g.exp(var)).filter(|&e| e > 0).min().unwrap();
        let mut exps = vec![0; n];
        exps[var] = e;
        let pivot = Monomial::new(&exps).expect("pivot");
        let mut plus = gens.clone();
        plus.push(pivot);
        let colon: Vec<Monomial> = gens
            .iter()
            .map(|g| {
                let l = g.lcm(&pivot);
                pivot.quotient_of(&l).expect("lcm divisible")
            })
            .collect();
        let a = numerator(plus, memo);
        let b = numerator(colon, memo);
        add_shifted(&a, &b, e as usize, 1)
    };
    memo.insert(gens, result.clone());
    result
}

/// C(t + a, m) as a polynomial in t.
fn binomial_poly(a: i64, m: usize) -> Vec<BigRational> {
    let mut p = vec![BigRational::one()];
    let mut fact = BigInt::one();
    for j in 0..m {
        // multiply by (t + a - j)
        let c = BigRational::from_integer(BigInt::from(a - j as i64));
        let mut next = vec![BigRational::zero(); p.len() + 1];
        for (i, x) in p.iter().enumerate() {
            next[i + 1] += x;
            next[i] += x * &c;
        }
        p = next;
        fact *= BigInt::from(j + 1);
    }
    let f = BigRational::from_integer(fact);
    p.into_iter().map(|x| x / &f).collect()
}

fn binomial(n: i64, k: usize) -> BigInt {
    if n < 0 || (k as i64) > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k as i64 {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

impl HilbertData {
    /// `dim_k (R/I)_t` from the series.
    pub fn hilbert_function(&self, t: u32) -> BigInt {
        let t = t as i64;
        let d = self.krull_dim;
        let mut acc = BigInt::zero();
        for (i, q) in self.numerator.iter().enumerate() {
            let i = i as i64;
            if i > t {
                break;
            }
            let term = if d == 0 {
                if i == t {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                binomial(t - i + d as i64 - 1, d - 1)
            };
            acc += term * BigInt::from(*q);
        }
        acc
    }

    /// Value of the Hilbert polynomial at `t`.
    pub fn polynomial_at(&self, t: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(t));
        self.polynomial.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
    }
}

/// Hilbert data of `R/I` for a graded ideal in a standard graded ring.
pub fn hilbert(i: &Ideal) -> Result<HilbertData> {
    if !i.is_graded() {
        return Err(Error::NotHomogeneous);
    }
    if !i.ring().is_standard_graded() {
        return Err(Error::InvalidArgument("Hilbert series need the standard grading".into()));
    }
    let n = i.ring().nvars();
    let lms = if i.is_zero() { Vec::new() } else { i.gb()?.leading_monomials() };
    if lms.iter().any(|m| m.is_one()) {
        return Ok(HilbertData { numerator: Vec::new(), polynomial: Vec::new(), dim: -1, degree: 0, krull_dim: 0 });
    }
    let mut memo = HashMap::new();
    let mut q = numerator(lms, &mut memo);
    let mut krull = n;
    while krull > 0 && q.iter().sum::<i128>() == 0 {
        // divide by (1 - T): prefix sums
        let mut acc = 0;
        let mut out = Vec::with_capacity(q.len());
        for c in &q[..q.len() - 1] {
            acc += c;
            out.push(acc);
        }
        q = trim(out);
        krull -= 1;
    }
    let numerator: Vec<i64> = q
        .iter()
        .map(|c| i64::try_from(*c).map_err(|_| Error::InvalidArgument("Hilbert numerator overflow".into())))
        .collect::<Result<_>>()?;
    if krull == 0 {
        return Ok(HilbertData { numerator, polynomial: Vec::new(), dim: -1, degree: 0, krull_dim: 0 });
    }
    let m = krull - 1;
    let mut poly = vec![BigRational::zero(); m + 1];
    for (idx, c) in numerator.iter().enumerate() {
        let b = binomial_poly(m as i64 - idx as i64, m);
        let c = BigRational::from_integer(BigInt::from(*c));
        for (k, x) in b.iter().enumerate() {
            poly[k] += x * &c;
        }
    }
    let degree = numerator.iter().sum::<i64>();
    debug_assert!(degree > 0);
    let lead = poly[m].clone();
    let mut fact = BigRational::one();
    for j in 1..=m {
        fact *= BigRational::from_integer(BigInt::from(j));
    }
    debug_assert_eq!((lead * fact).abs().to_integer().to_i64(), Some(degree));
    Ok(HilbertData { numerator, polynomial: poly, dim: m as i64, degree: degree as u64, krull_dim: krull })
}
