//! Randomized construction of smooth complete intersections containing a
//! given scheme, planes meeting a surface in a prescribed subscheme, liaison
//! residuals, and the fixture verifications built on them.

use std::sync::Arc;
use std::time::Instant;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{self, PencilKind};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::geometry::{
    classify_plane_section, is_smooth, linear_span_codim, quadratic_rank, quadric_matrix, scheme_equal,
    smooth_verdict, PlaneSectionClass, SmoothVerdict, DEFAULT_MINOR_CAP,
};
use crate::idealops::{codim, graded_basis, hilbert, intersect_all, kernel, preimage, quotient, saturate, sum, Ideal, RingMap};
use crate::linalg::{monomials_of_degree, row_polynomial, Matrix};
use crate::parse::render_generators;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};
use crate::scalar::Field;

/// Retry bound for [`find_points_on_image`].
pub const POINT_ATTEMPTS: u32 = 32;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RsciConfig {
    /// Coefficients are drawn uniformly from `[-a, a]`.
    pub a: u32,
    pub max_attempts: u32,
    pub seed: u64,
    #[serde(skip)]
    pub field: Field,
    /// Run the exact smoothness check over the rationals instead of stopping
    /// at the modular filter.
    pub exact: bool,
    pub minor_cap: u128,
}

impl Default for RsciConfig {
    fn default() -> Self {
        RsciConfig {
            a: 1,
            max_attempts: 64,
            seed: 0,
            field: Field::Rational,
            exact: false,
            minor_cap: DEFAULT_MINOR_CAP,
        }
    }
}

impl RsciConfig {
    pub fn validate(&self) -> Result<()> {
        if self.a == 0 {
            return Err(Error::InvalidArgument("coefficient bound must be at least 1".into()));
        }
        if self.max_attempts == 0 {
            return Err(Error::InvalidArgument("max attempts must be at least 1".into()));
        }
        Ok(())
    }
}

/// xoshiro256** seeded through SplitMix64; `fork` hands out the current
/// state and jumps 2^128 steps ahead, so forks never overlap.
#[derive(Clone, Debug)]
pub struct Stream(Xoshiro256StarStar);

impl Stream {
    pub fn new(seed: u64) -> Stream {
        Stream(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn fork(&mut self) -> Stream {
        let child = self.0.clone();
        self.0.jump();
        Stream(child)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `[-a, a]` (rejection sampling).
    pub fn coefficient(&mut self, a: u32) -> i64 {
        let n = 2 * a as u64 + 1;
        let zone = u64::MAX - (u64::MAX % n);
        loop {
            let v = self.0.next_u64();
            if v < zone {
                return (v % n) as i64 - a as i64;
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct RsciOutcome {
    pub ideal: Ideal,
    pub attempts: u32,
    pub verdict: SmoothVerdict,
}

fn to_field(i: &Ideal, field: Field) -> Result<Ideal> {
    if i.ring().field() == field {
        return Ok(i.clone());
    }
    let ring: RingRef = Arc::new(i.ring().with_field(field));
    i.change_field(&ring)
}

/// `e` random combinations of the degree-`d` forms vanishing on `V(I)`,
/// resampled until they cut out a smooth complete intersection.
pub fn rsci(i: &Ideal, d: u32, e: usize, cfg: &RsciConfig) -> Result<RsciOutcome> {
    rsci_with(i, d, e, cfg, &mut Stream::new(cfg.seed))
}

pub fn rsci_with(i: &Ideal, d: u32, e: usize, cfg: &RsciConfig, rng: &mut Stream) -> Result<RsciOutcome> {
    cfg.validate()?;
    let i = to_field(i, cfg.field)?;
    let ring = i.ring().clone();
    if e == 0 {
        return Ok(RsciOutcome { ideal: Ideal::zero(&ring), attempts: 0, verdict: SmoothVerdict::Certified });
    }
    let basis = graded_basis(&saturate(&i, None)?, d)?;
    if basis.is_empty() {
        return Err(Error::InvalidArgument(format!("no forms of degree {d} vanish on the scheme")));
    }
    let field = ring.field();
    for attempt in 1..=cfg.max_attempts {
        let mut gens = Vec::with_capacity(e);
        for _ in 0..e {
            let mut g = Polynomial::zero(&ring);
            for b in &basis {
                let c = rng.coefficient(cfg.a);
                if c != 0 {
                    g = g.add(&b.scale(&field.from_i64(c)));
                }
            }
            gens.push(g);
        }
        if gens.iter().any(|g| g.is_zero()) {
            continue;
        }
        let h = Ideal::new(&ring, gens)?;
        if codim(&h)? != e {
            continue;
        }
        let verdict = smooth_verdict(&h, cfg.exact, cfg.minor_cap)?;
        if verdict != SmoothVerdict::Singular {
            return Ok(RsciOutcome { ideal: h, attempts: attempt, verdict });
        }
    }
    Err(Error::RetriesExhausted { op: "rsci".into(), attempts: cfg.max_attempts })
}

/// Ideal of `i` linearly independent reduced points on the image of `h`,
/// the images of random points of the parameter space.
pub fn find_points_on_image(h: &RingMap, i: usize, cfg: &RsciConfig, rng: &mut Stream) -> Result<(Ideal, u32)> {
    let source = h.source();
    if i == 0 {
        return Ok((Ideal::unit(source), 0));
    }
    let target = h.target();
    let n = source.nvars();
    if i > n {
        return Err(Error::InvalidArgument(format!("at most {n} independent points exist")));
    }
    for attempt in 1..=POINT_ATTEMPTS {
        let mut points = Vec::with_capacity(i);
        for _ in 0..i {
            let p = rsci_with(&Ideal::unit(target), 1, target.nvars() - 1, cfg, rng)?;
            points.push(p.ideal);
        }
        let p = intersect_all(&points)?;
        let image = saturate(&preimage(h, &p)?, None)?;
        let hd = hilbert(&image)?;
        if hd.dim == 0 && hd.degree as usize == i && linear_span_codim(&image)? == n - i && is_smooth(&image)? {
            return Ok((image, attempt));
        }
    }
    Err(Error::RetriesExhausted { op: "find_points_on_image".into(), attempts: POINT_ATTEMPTS })
}

#[derive(Clone, Debug)]
pub struct MergeOutcome {
    /// `I_Z ∩ I_P`.
    pub ideal: Ideal,
    pub plane: Ideal,
    pub attempts: u32,
}

/// Union of the image `Z` of `h` with a random plane `P ⊇ Y` such that
/// `Z ∩ P = Y` scheme-theoretically.
pub fn merge_plane(h: &RingMap, y: &Ideal, cfg: &RsciConfig, rng: &mut Stream) -> Result<MergeOutcome> {
    let z = saturate(&kernel(h)?, None)?;
    merge_plane_into(&z, y, cfg, rng)
}

pub fn merge_plane_into(z: &Ideal, y: &Ideal, cfg: &RsciConfig, rng: &mut Stream) -> Result<MergeOutcome> {
    let y = saturate(y, None)?;
    if !z.is_subset_of(&y)? {
        return Err(Error::Containment("Y is not a subscheme of the surface".into()));
    }
    let n = z.ring().nvars();
    let plane_cfg = RsciConfig { max_attempts: 1, ..cfg.clone() };
    for attempt in 1..=cfg.max_attempts {
        let p = match rsci_with(&y, 1, n - 3, &plane_cfg, rng) {
            Ok(p) => p.ideal,
            Err(Error::RetriesExhausted { .. }) => continue,
            Err(e) => return Err(e),
        };
        if scheme_equal(&sum(z, &p)?, &y)? {
            let ideal = intersect_all(&[z.clone(), p.clone()])?;
            return Ok(MergeOutcome { ideal, plane: p, attempts: attempt });
        }
    }
    Err(Error::RetriesExhausted { op: "merge_plane".into(), attempts: cfg.max_attempts })
}

/// Residual scheme of `part` inside `total`: `saturate(total : part)`.
pub fn link(total: &Ideal, part: &Ideal) -> Result<Ideal> {
    let t = saturate(total, None)?;
    let p = saturate(part, None)?;
    if !t.is_subset_of(&p)? {
        return Err(Error::Containment("part is not contained in total".into()));
    }
    saturate(&quotient(&t, &p)?, None)
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// The statement the check verifies.
    pub anchor: String,
    pub pass: bool,
    pub witness: Value,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub fixture: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(fixture: &str) -> VerificationReport {
        VerificationReport { fixture: fixture.to_string(), checks: Vec::new(), pass: true }
    }

    /// Run a check, timing it; errors become failed checks.
    pub fn check(&mut self, name: &str, anchor: &str, f: impl FnOnce() -> Result<(bool, Value)>) -> bool {
        let start = Instant::now();
        let (pass, witness) = match f() {
            Ok(r) => r,
            Err(e) => (false, json!({ "error": e.to_string() })),
        };
        self.checks.push(Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            pass,
            witness,
            millis: start.elapsed().as_millis(),
        });
        self.pass &= pass;
        pass
    }

    pub fn absorb(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.pass &= c.pass;
            self.checks.push(c);
        }
    }
}

fn linear_ideal_of_kernel(kernel: &[Vec<crate::scalar::Scalar>], ring: &RingRef) -> Result<Ideal> {
    let field = ring.field();
    let n = ring.nvars();
    let m = Matrix::from_rows(field, kernel.to_vec());
    let vars = monomials_of_degree(ring, 1);
    let forms: Vec<Polynomial> = m.nullspace().iter().map(|row| row_polynomial(ring, row, &vars)).collect();
    debug_assert!(forms.len() + kernel.len() == n);
    Ideal::new(ring, forms)
}

fn hilbert_witness(i: &Ideal) -> Result<Value> {
    let h = hilbert(i)?;
    Ok(json!({ "dim": h.dim, "degree": h.degree, "polynomial": h.polynomial.iter().map(|q| q.to_string()).collect::<Vec<_>>() }))
}

/// Unique quadric through two quartic scrolls in a cubic, of rank 4, whose
/// vertex line lies in the cubic and is secant to both scrolls.
pub fn verify_rank4_quadric(x: &Ideal, t1: &Ideal, t2: &Ideal) -> VerificationReport {
    let mut r = VerificationReport::new("rank4-quadric");
    let anchor = "a unique rank 4 quadric contains T1 ∪ T2; its vertex is a secant line to T1 and to T2 contained in X";
    if !r.check("distinct scrolls", anchor, || {
        let same = scheme_equal(t1, t2)?;
        Ok((!same, json!({ "equal": same })))
    }) {
        return r;
    }
    r.check("finite intersection", anchor, || {
        let meet = saturate(&sum(t1, t2)?, None)?;
        let h = hilbert(&meet)?;
        Ok((h.dim <= 0, json!({ "dim": h.dim, "degree": h.degree })))
    });
    let mut quadric = None;
    r.check("one quadric through T1 ∪ T2", anchor, || {
        let union = intersect_all(&[t1.clone(), t2.clone()])?;
        let qs = graded_basis(&union, 2)?;
        let ok = qs.len() == 1;
        let w = json!({ "count": qs.len(), "quadrics": render_generators(&qs) });
        if ok {
            quadric = Some(qs[0].clone());
        }
        Ok((ok, w))
    });
    let Some(w) = quadric else { return r };
    let rank_ok = r.check("rank 4", anchor, || {
        let rank = quadratic_rank(&w)?;
        Ok((rank == 4, json!({ "rank": rank })))
    });
    if !rank_ok {
        return r;
    }
    let ring = w.ring().clone();
    let vertex = match quadric_matrix(&w).and_then(|m| linear_ideal_of_kernel(&m.nullspace(), &ring)) {
        Ok(v) => v,
        Err(e) => {
            r.check("vertex line", anchor, || Err(e));
            return r;
        }
    };
    r.check("vertex line in X", anchor, || {
        let ok = x.is_subset_of(&vertex)?;
        Ok((ok, json!({ "line": render_generators(vertex.gens()) })))
    });
    for (k, t) in [t1, t2].into_iter().enumerate() {
        r.check(&format!("vertex secant to T{}", k + 1), anchor, || {
            let meet = saturate(&sum(t, &vertex)?, None)?;
            let h = hilbert(&meet)?;
            Ok((h.dim == 0 && h.degree == 2, json!({ "dim": h.dim, "degree": h.degree })))
        });
    }
    r
}

pub const FIXTURES: [&str; 6] = ["dp-a", "dp-b", "dp-c", "dp-d", "dp-e", "skew-planes"];

fn expected_section(name: &str) -> Option<(PlaneSectionClass, &'static str)> {
    Some(match name {
        "dp-a" => (PlaneSectionClass::IrreducibleConic, "Z∩P is a conic"),
        "dp-b" => (PlaneSectionClass::Empty, "Z∩P = ∅"),
        "dp-c" => (PlaneSectionClass::Points { count: 1, reduced: true }, "Z∩P consists of one point"),
        "dp-d" => (PlaneSectionClass::Points { count: 2, reduced: true }, "Z∩P consists of two points"),
        "dp-e" => (PlaneSectionClass::Points { count: 3, reduced: true }, "Z∩P consists of three points"),
        _ => return None,
    })
}

fn smoothness_check(r: &mut VerificationReport, cubic: &Ideal, cfg: &RsciConfig) {
    r.check("cubic smooth", "the cubic form defines a smooth hypersurface", || {
        let v = smooth_verdict(cubic, true, cfg.minor_cap)?;
        Ok((v != SmoothVerdict::Singular, json!({ "verdict": v })))
    });
}

fn contains_check(r: &mut VerificationReport, name: &str, anchor: &str, cubic: &Ideal, sub: &Ideal) {
    r.check(name, anchor, || {
        let ok = sub.contains(&cubic.gens()[0])?;
        Ok((ok, json!({})))
    });
}

/// Verify one of the bundled fixtures.
pub fn run_fixture(name: &str, cfg: &RsciConfig) -> Result<VerificationReport> {
    let p5 = Ring::p5();
    let surface = catalog::del_pezzo_quintic()?;
    let mut r = VerificationReport::new(name);
    if let Some((class, anchor)) = expected_section(name) {
        let cubic = fixtures::ideal(&format!("{name}-cubic"), &p5)?;
        let plane = fixtures::ideal(&format!("{name}-plane"), &p5)?;
        contains_check(&mut r, "cubic contains del Pezzo", "the cubic contains the quintic del Pezzo surface Z", &cubic, &surface.ideal);
        contains_check(&mut r, "cubic contains plane", "the cubic contains the plane P", &cubic, &plane);
        smoothness_check(&mut r, &cubic, cfg);
        r.check("plane section", anchor, || {
            let got = classify_plane_section(&surface.ideal, &plane)?;
            Ok((got == class, json!({ "expected": class, "got": got })))
        });
        return Ok(r);
    }
    if name != "skew-planes" {
        return Err(Error::UnknownName(name.to_string()));
    }
    skew_planes(&mut r, &p5, &surface, cfg)?;
    Ok(r)
}

fn skew_planes(r: &mut VerificationReport, p5: &RingRef, surface: &catalog::ParamSurface, cfg: &RsciConfig) -> Result<()> {
    let cubic = fixtures::ideal("skew-planes-cubic", p5)?;
    let p1 = fixtures::ideal("skew-planes-p1", p5)?;
    let p2 = fixtures::ideal("skew-planes-p2", p5)?;
    let s = &surface.ideal;
    contains_check(r, "cubic contains del Pezzo", "C contains the del Pezzo quintic S", &cubic, s);
    contains_check(r, "cubic contains P1", "C contains the plane P1", &cubic, &p1);
    contains_check(r, "cubic contains P2", "C contains the plane P2", &cubic, &p2);
    smoothness_check(r, &cubic, cfg);
    r.check("planes disjoint", "two disjoint planes", || {
        let c = codim(&sum(&p1, &p2)?)?;
        Ok((c == 6, json!({ "codim": c })))
    });
    let pencils = catalog::conic_pencils(surface)?;
    let conics = pencils.iter().find(|p| p.kind == PencilKind::ConicsThroughAll).expect("conic pencil");
    let sigma1 = catalog::segre_threefold(conics)?;
    r.check("Σ1 is a cubic threefold scroll containing both planes", "the linear spans of the conics determine a Segre 3-fold Σ1", || {
        let h = hilbert(&sigma1)?;
        let ok = h.dim == 3 && h.degree == 3 && sigma1.is_subset_of(&p1)? && sigma1.is_subset_of(&p2)?;
        Ok((ok, hilbert_witness(&sigma1)?))
    });
    let total1 = sum(&sigma1, &cubic)?;
    let mut residual = None;
    r.check("Σ1∩C minus S has degree 4", "Σ1∩C consists of S and of P1∪P2∪Q", || {
        let res = link(&total1, s)?;
        let h = hilbert(&res)?;
        let ok = h.dim == 2 && h.degree == 4 && res.is_subset_of(&p1)? && res.is_subset_of(&p2)?;
        let w = hilbert_witness(&res)?;
        residual = Some(res);
        Ok((ok, w))
    });
    if let Some(res) = residual {
        let planes = intersect_all(&[p1.clone(), p2.clone()])?;
        r.check("Q is a smooth quadric surface", "with Q a smooth quadric surface", || {
            let q = link(&res, &planes)?;
            let h = hilbert(&q)?;
            let span = linear_span_codim(&q)?;
            let smooth = is_smooth(&q)?;
            let union = intersect_all(&[planes.clone(), q.clone()])?;
            let decomposes = scheme_equal(&union, &res)?;
            let ok = h.dim == 2 && h.degree == 2 && span == 2 && smooth && decomposes;
            Ok((ok, json!({ "dim": h.dim, "degree": h.degree, "span_codim": span, "smooth": smooth, "decomposes": decomposes })))
        });
        r.check("liaison is symmetric", "S and P1∪P2∪Q are linked inside Σ1 via C", || {
            let back = link(&total1, &res)?;
            let ok = scheme_equal(&back, s)?;
            Ok((ok, json!({})))
        });
    }
    let mut scrolls = Vec::new();
    for p in pencils.iter().filter(|p| p.kind != PencilKind::ConicsThroughAll) {
        let label = p.label();
        let mut found = None;
        r.check(
            &format!("T for {label} is a smooth quartic scroll"),
            "Σi∩C consists of S and a smooth quartic rational normal scroll Ti",
            || {
                let sigma = catalog::segre_threefold(p)?;
                let t = link(&sum(&sigma, &cubic)?, s)?;
                let h = hilbert(&t)?;
                let smooth = is_smooth(&t)?;
                let hp: Vec<String> = h.polynomial.iter().map(|q| q.to_string()).collect();
                let ok = h.dim == 2 && h.degree == 4 && hp == ["1", "3", "2"] && smooth;
                found = Some(t);
                Ok((ok, json!({ "dim": h.dim, "degree": h.degree, "polynomial": hp, "smooth": smooth })))
            },
        );
        if let Some(t) = found {
            scrolls.push(t);
        }
    }
    if scrolls.len() >= 2 {
        r.absorb(verify_rank4_quadric(&cubic, &scrolls[0], &scrolls[1]));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
