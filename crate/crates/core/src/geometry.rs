//! Scheme-level predicates: smoothness, equality, spans, quadric ranks and
//! plane sections.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::idealops::{codim, graded_basis, hilbert, saturate, sum, Ideal};
use crate::linalg::{coefficient_matrix, span_basis, Matrix};
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};
use crate::scalar::Field;

/// Default cap on the number of Jacobian minors.
pub const DEFAULT_MINOR_CAP: u128 = 100_000;
/// Prime used by the modular smoothness filter.
pub const FILTER_PRIME: u32 = 10_007;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SchemeSummary {
    pub dim: i64,
    pub degree: u64,
    pub codim: usize,
    pub smooth: Option<bool>,
    pub span_codim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum PlaneSectionClass {
    Empty,
    Points { count: u64, reduced: bool },
    Line,
    IrreducibleConic,
    ReducibleConic,
    Other { dim: i64, degree: u64 },
}

/// How a smoothness verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SmoothVerdict {
    /// Exact computation over the ideal's own field.
    Certified,
    /// Smooth after reduction modulo the filter prime only.
    Filtered,
    Singular,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc
}

fn det(m: &[Vec<Polynomial>], ring: &RingRef) -> Polynomial {
    let n = m.len();
    match n {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {
            let mut acc = Polynomial::zero(ring);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let t = m[0][j].mul(&det(&minor, ring));
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// All `c x c` minors of the Jacobian matrix of the generators, reduced to a
/// linearly independent set per degree.
pub fn jacobian_minors(i: &Ideal, c: usize, cap: u128) -> Result<Vec<Polynomial>> {
    let ring = i.ring();
    let gens = i.gens();
    let n = ring.nvars();
    let needed = binomial(gens.len(), c).saturating_mul(binomial(n, c));
    if needed > cap {
        return Err(Error::Budget { what: "Jacobian minors".into(), needed, cap });
    }
    let jac: Vec<Vec<Polynomial>> = gens.iter().map(|g| (0..n).map(|v| g.derivative(v)).collect()).collect();
    let mut minors = Vec::new();
    for rows in combinations(gens.len(), c) {
        for cols in combinations(n, c) {
            let sub: Vec<Vec<Polynomial>> =
                rows.iter().map(|&r| cols.iter().map(|&k| jac[r][k].clone()).collect()).collect();
            let d = det(&sub, ring);
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    let mut by_degree: std::collections::BTreeMap<u32, Vec<Polynomial>> = Default::default();
    for m in minors {
        match m.homogeneous_degree() {
            Some(d) => by_degree.entry(d).or_default().push(m),
            None => return Err(Error::NotHomogeneous),
        }
    }
    Ok(by_degree.into_iter().flat_map(|(d, fs)| span_basis(ring, &fs, d)).collect())
}

/// Jacobian criterion: `codim(minors(c, J) + I) >= n` with `c = codim I`.
pub fn is_smooth_with(i: &Ideal, cap: u128) -> Result<bool> {
    if !i.is_graded() {
        return Err(Error::NotHomogeneous);
    }
    let n = i.ring().nvars();
    let c = codim(i)?;
    if c >= n {
        // the empty scheme is smooth
        return Ok(true);
    }
    if c == 0 {
        return Ok(true);
    }
    let mut gens = jacobian_minors(i, c, cap)?;
    gens.extend(i.gens().iter().cloned());
    let sing = Ideal::new(i.ring(), gens)?;
    Ok(codim(&sing)? >= n)
}

pub fn is_smooth(i: &Ideal) -> Result<bool> {
    is_smooth_with(i, DEFAULT_MINOR_CAP)
}

/// Smoothness of a hypersurface: its partials and the form itself cut out
/// the empty scheme.
pub fn hypersurface_is_smooth(f: &Polynomial) -> Result<bool> {
    let ring = f.ring();
    let mut gens: Vec<Polynomial> = (0..ring.nvars()).map(|v| f.derivative(v)).collect();
    gens.push(f.clone());
    let j = Ideal::new(ring, gens)?;
    saturate(&j, None)?.is_unit()
}

/// Same generators over `F_p`.
pub fn reduce_mod_p(i: &Ideal, p: u32) -> Result<Ideal> {
    let field = Field::prime(p)?;
    let ring: RingRef = Arc::new(i.ring().with_field(field));
    i.change_field(&ring)
}

/// Modular filter first; the exact check runs when `exact` is set or when
/// the reduction is singular (which may be bad reduction).
pub fn smooth_verdict(i: &Ideal, exact: bool, cap: u128) -> Result<SmoothVerdict> {
    if i.ring().field() == Field::Rational {
        let filtered = match reduce_mod_p(i, FILTER_PRIME) {
            Ok(ip) => Some(is_smooth_with(&ip, cap)?),
            Err(Error::DivisionByZero) => None,
            Err(e) => return Err(e),
        };
        if filtered == Some(true) && !exact {
            return Ok(SmoothVerdict::Filtered);
        }
    }
    Ok(if is_smooth_with(i, cap)? { SmoothVerdict::Certified } else { SmoothVerdict::Singular })
}

/// Equal saturations.
pub fn scheme_equal(i: &Ideal, j: &Ideal) -> Result<bool> {
    saturate(i, None)?.equals(&saturate(j, None)?)
}

/// Number of independent linear forms vanishing on the scheme.
pub fn linear_span_codim(i: &Ideal) -> Result<usize> {
    Ok(graded_basis(&saturate(i, None)?, 1)?.len())
}

/// Symmetric matrix of a quadratic form, scaled by 2 to stay integral.
pub fn quadric_matrix(q: &Polynomial) -> Result<Matrix> {
    let ring = q.ring();
    let field = ring.field();
    if field.characteristic() == 2 {
        return Err(Error::InvalidField("quadric ranks need characteristic other than 2".into()));
    }
    match q.homogeneous_degree() {
        Some(2) if !q.is_zero() && ring.is_standard_graded() => {}
        Some(d) if !q.is_zero() => return Err(Error::WrongDegree { expected: 2, got: d }),
        None => return Err(Error::NotHomogeneous),
        _ => return Err(Error::WrongDegree { expected: 2, got: 0 }),
    }
    let n = ring.nvars();
    let mut m = Matrix::zeros(field, n, n);
    let two = field.from_i64(2);
    for (mono, c) in q.terms() {
        let vars: Vec<usize> = (0..n).filter(|&v| mono.exp(v) > 0).collect();
        match vars.as_slice() {
            [v] => m.set(*v, *v, c.mul(&two)),
            [a, b] => {
                m.set(*a, *b, c.clone());
                m.set(*b, *a, c.clone());
            }
            _ => unreachable!("quadratic monomial"),
        }
    }
    Ok(m)
}

pub fn quadratic_rank(q: &Polynomial) -> Result<usize> {
    Ok(quadric_matrix(q)?.rank())
}

/// Coordinates on a linear subspace: ring `u_0..` and images of the ambient
/// variables, from the kernel of the linear forms.
pub fn linear_parametrization(linear: &[Polynomial], ambient: &RingRef) -> Result<(RingRef, Vec<Polynomial>)> {
    let n = ambient.nvars();
    let vars = crate::linalg::monomials_of_degree(ambient, 1);
    let mat = coefficient_matrix(linear, &vars, ambient.field());
    let kernel = mat.nullspace();
    if kernel.is_empty() {
        return Err(Error::InvalidArgument("linear forms cut out the empty set".into()));
    }
    let sub = Ring::projective("u", kernel.len() - 1, ambient.field());
    let mut images = vec![Polynomial::zero(&sub); n];
    for (k, v) in kernel.iter().enumerate() {
        for (col, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = (0..n).find(|&x| vars[col].exp(x) == 1).expect("linear monomial");
            images[var] = images[var].add(&Polynomial::var(&sub, k).scale(c));
        }
    }
    Ok((sub, images))
}

fn restrict(i: &Ideal, images: &[Polynomial], sub: &RingRef) -> Result<Ideal> {
    let gens = i.gens().iter().map(|g| g.substitute(images)).collect::<Result<Vec<_>>>()?;
    Ideal::new(sub, gens)
}

/// Classify `saturate(surface + plane)`, computed inside the plane.
pub fn classify_plane_section(surface: &Ideal, plane: &Ideal) -> Result<PlaneSectionClass> {
    let ring = surface.ring();
    if !plane.ring().same_vars(ring) {
        return Err(Error::RingMismatch);
    }
    if plane.gens().iter().any(|g| g.homogeneous_degree() != Some(1)) {
        return Err(Error::InvalidArgument("plane ideal must be generated by linear forms".into()));
    }
    let linear = graded_basis(plane, 1)?;
    if linear.len() + 3 != ring.nvars() {
        return Err(Error::InvalidArgument(format!(
            "expected {} independent linear forms, got {}",
            ring.nvars() - 3,
            linear.len()
        )));
    }
    let (sub, images) = linear_parametrization(&linear, ring)?;
    let section = saturate(&restrict(surface, &images, &sub)?, None)?;
    let h = hilbert(&section)?;
    Ok(match (h.dim, h.degree) {
        (-1, _) => PlaneSectionClass::Empty,
        (0, k) => PlaneSectionClass::Points { count: k, reduced: is_smooth(&section)? },
        (1, 1) => PlaneSectionClass::Line,
        (1, 2) => {
            let conic = graded_basis(&section, 2)?;
            if conic.len() != 1 {
                return Ok(PlaneSectionClass::Other { dim: 1, degree: 2 });
            }
            if quadratic_rank(&conic[0])? == 3 {
                PlaneSectionClass::IrreducibleConic
            } else {
                PlaneSectionClass::ReducibleConic
            }
        }
        (dim, degree) => PlaneSectionClass::Other { dim, degree },
    })
}

/// Dimension, degree, codimension, span and (optionally) smoothness of the
/// saturated scheme.
pub fn summarize(i: &Ideal, with_smoothness: bool) -> Result<SchemeSummary> {
    let sat = saturate(i, None)?;
    let h = hilbert(&sat)?;
    let smooth = if with_smoothness { Some(is_smooth(&sat)?) } else { None };
    Ok(SchemeSummary {
        dim: h.dim,
        degree: h.degree,
        codim: codim(&sat)?,
        smooth,
        span_codim: graded_basis(&sat, 1)?.len(),
    })
}

/// Scheme cut out by `I + J` (saturated).
pub fn scheme_intersection(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    saturate(&sum(i, j)?, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{p, random_form, TestRng};

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| p(r, s)).collect()).unwrap()
    }

    #[test]
    fn quadric_smoothness_by_rank() {
        let r = Ring::p5();
        assert!(is_smooth(&ideal(&r, &["x_0*x_1+x_2*x_3+x_4*x_5"])).unwrap());
        assert!(!is_smooth(&ideal(&r, &["x_0*x_1+x_2*x_3"])).unwrap());
    }

    #[test]
    fn cone_over_rational_normal_curve_is_singular() {
        // cone over the quartic curve in x_0..x_4 with vertex e_5
        let r = Ring::p5();
        let gens = [
            "x_0*x_2-x_1^2",
            "x_0*x_3-x_1*x_2",
            "x_0*x_4-x_1*x_3",
            "x_1*x_3-x_2^2",
            "x_1*x_4-x_2*x_3",
            "x_2*x_4-x_3^2",
        ];
        let cone = ideal(&r, &gens);
        assert!(!is_smooth(&cone).unwrap());
        // oracle: every partial vanishes at the vertex, so the Jacobian has rank 0 < codim there
        let f = r.field();
        let vertex: Vec<crate::scalar::Scalar> = (0..6).map(|i| f.from_i64((i == 5) as i64)).collect();
        for g in cone.gens() {
            for v in 0..6 {
                assert!(g.derivative(v).eval(&vertex).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn del_pezzo_surface_is_smooth() {
        let r = Ring::p5();
        let dp = ideal(
            &r,
            &[
                "x_2*x_4-x_1*x_5",
                "x_0*x_4-x_1*x_5-x_3*x_5+x_4*x_5",
                "x_2*x_3-x_0*x_5",
                "x_1*x_3-x_1*x_5-x_3*x_5+x_4*x_5",
                "x_0*x_1-x_1*x_2-x_0*x_5+x_1*x_5",
            ],
        );
        assert!(is_smooth(&dp).unwrap());
        assert_eq!(linear_span_codim(&dp).unwrap(), 0);
    }

    #[test]
    fn minor_budget_is_enforced() {
        let r = Ring::p5();
        let i = ideal(&r, &["x_0*x_1", "x_2*x_3", "x_4*x_5"]);
        match is_smooth_with(&i, 10) {
            Err(Error::Budget { needed, cap, .. }) => assert_eq!((needed, cap), (20, 10)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_smoothness_paths_agree_on_cubic_surfaces() {
        let r = Ring::projective("x", 3, Field::Rational);
        let mut rng = TestRng::new(31);
        let mut seen = [0, 0];
        for k in 0..10 {
            let f = if k % 2 == 0 {
                random_form(&mut rng, &r, 3, 3, 60)
            } else {
                // singular at e_0: no x_0^3 or x_0^2*x_i terms
                let g = random_form(&mut rng, &r, 3, 3, 60);
                let terms = g.terms().iter().filter(|(m, _)| m.exp(0) < 2).cloned().collect();
                Polynomial::from_terms(&r, terms)
            };
            if f.is_zero() {
                continue;
            }
            let a = is_smooth(&Ideal::new(&r, vec![f.clone()]).unwrap()).unwrap();
            let b = hypersurface_is_smooth(&f).unwrap();
            assert_eq!(a, b, "{f}");
            if k % 2 == 1 {
                assert!(!a);
            }
            seen[a as usize] += 1;
        }
        assert!(seen[1] >= 3);
    }

    #[test]
    fn scheme_equality() {
        let r = Ring::projective("x", 1, Field::Rational);
        let i = ideal(&r, &["x_0^2", "x_0*x_1"]);
        assert!(scheme_equal(&i, &ideal(&r, &["x_0"])).unwrap());
        let r5 = Ring::p5();
        let j = ideal(&r5, &["x_0*x_1+x_2^2"]);
        assert!(scheme_equal(&j, &sum(&j, &Ideal::zero(&r5)).unwrap()).unwrap());
    }

    #[test]
    fn spans_of_points() {
        let r = Ring::p5();
        assert_eq!(linear_span_codim(&ideal(&r, &["x_0", "x_1", "x_2"])).unwrap(), 3);
        // i coordinate points span a P^{i-1}
        for i in 1..=4usize {
            let mut pts = Vec::new();
            for k in 0..i {
                let gens: Vec<Polynomial> = (0..6).filter(|&v| v != k).map(|v| Polynomial::var(&r, v)).collect();
                pts.push(Ideal::new(&r, gens).unwrap());
            }
            let u = crate::idealops::intersect_all(&pts).unwrap();
            assert_eq!(linear_span_codim(&u).unwrap(), 6 - i);
        }
    }

    #[test]
    fn quadric_ranks() {
        let r = Ring::p5();
        assert_eq!(quadratic_rank(&p(&r, "x_0^2")).unwrap(), 1);
        assert_eq!(quadratic_rank(&p(&r, "x_0*x_1+x_2*x_3+x_4*x_5")).unwrap(), 6);
        assert_eq!(quadratic_rank(&p(&r, "x_0^3")).unwrap_err(), Error::WrongDegree { expected: 2, got: 3 });
    }

    #[test]
    fn quadric_rank_is_invariant_under_coordinate_changes() {
        let r = Ring::p5();
        let mut rng = TestRng::new(13);
        for q in ["x_0^2", "x_0*x_1+x_2^2", "x_0*x_1+x_2*x_3", "x_0*x_1+x_2*x_3+x_4*x_5"] {
            let q = p(&r, q);
            let rank = quadratic_rank(&q).unwrap();
            let mut done = 0;
            while done < 5 {
                let images: Vec<Polynomial> = (0..6).map(|_| random_form(&mut rng, &r, 1, 3, 100)).collect();
                let mat = coefficient_matrix(&images, &crate::linalg::monomials_of_degree(&r, 1), r.field());
                if mat.rank() < 6 {
                    continue;
                }
                done += 1;
                assert_eq!(quadratic_rank(&q.substitute(&images).unwrap()).unwrap(), rank);
            }
        }
    }

    #[test]
    fn plane_sections_of_a_quadric_cone() {
        let r = Ring::p5();
        // quadric cone surface in the P^3 x_3=x_4=0, vertex e_5
        let cone = ideal(&r, &["x_3", "x_4", "x_0*x_1-x_2^2"]);
        let cases = [
            (vec!["x_3", "x_4", "x_5"], PlaneSectionClass::IrreducibleConic),
            (vec!["x_3", "x_4", "x_2"], PlaneSectionClass::ReducibleConic),
            (vec!["x_0", "x_3", "x_4"], PlaneSectionClass::ReducibleConic),
            (vec!["x_1", "x_2", "x_3"], PlaneSectionClass::Line),
            (vec!["x_3-x_0", "x_4-x_1", "x_5-x_2"], PlaneSectionClass::Empty),
            (vec!["x_3-x_0+x_1", "x_4", "x_5"], PlaneSectionClass::Points { count: 2, reduced: true }),
            (vec!["x_3-x_0", "x_4", "x_5"], PlaneSectionClass::Points { count: 2, reduced: false }),
        ];
        for (plane, expected) in cases {
            let plane = ideal(&r, &plane);
            let class = classify_plane_section(&cone, &plane).unwrap();
            assert_eq!(class, expected, "{plane:?}");
            let h = hilbert(&scheme_intersection(&cone, &plane).unwrap()).unwrap();
            let (dim, degree) = match class {
                PlaneSectionClass::Empty => (-1, 0),
                PlaneSectionClass::Points { count, .. } => (0, count),
                PlaneSectionClass::Line => (1, 1),
                PlaneSectionClass::IrreducibleConic | PlaneSectionClass::ReducibleConic => (1, 2),
                PlaneSectionClass::Other { dim, degree } => (dim, degree),
            };
            assert_eq!((h.dim, h.degree), (dim, degree));
        }
        assert!(classify_plane_section(&cone, &ideal(&r, &["x_0", "x_1"])).is_err());
        assert!(classify_plane_section(&cone, &ideal(&r, &["x_0", "x_1^2", "x_2"])).is_err());
    }
}
