//! Explicit varieties: quartic scrolls, the quintic del Pezzo surface with
//! its parametrization, conic pencils on it and the threefolds they sweep,
//! and named planes.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::idealops::{eliminate, graded_basis, intersect_all, kernel, preimage, saturate, Ideal, RingMap};
use crate::linalg::{coefficient_matrix, monomials_of_degree, Matrix};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ScrollKind {
    S22,
    S13,
}

/// Base points of the del Pezzo parametrization.
pub const BASE_POINTS: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];

/// A surface in P^5 with a parametrization from P^2.
#[derive(Clone, Debug)]
pub struct ParamSurface {
    pub label: String,
    pub ideal: Ideal,
    pub map: RingMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PencilKind {
    /// Lines through one base point (index 0..4).
    LinesThrough(usize),
    ConicsThroughAll,
}

/// A pencil of plane curves `λ0·g0 + λ1·g1` whose members map to conics.
#[derive(Clone, Debug)]
pub struct ConicPencil {
    pub kind: PencilKind,
    pub base: ParamSurface,
    pub spanning: [Polynomial; 2],
}

/// 2x2 minors of a 2xk matrix of forms.
pub fn minors_2x2(rows: [&[Polynomial]; 2]) -> Vec<Polynomial> {
    let k = rows[0].len();
    let mut out = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            out.push(rows[0][a].mul(&rows[1][b]).sub(&rows[0][b].mul(&rows[1][a])));
        }
    }
    out
}

pub fn quartic_scroll(kind: ScrollKind) -> Ideal {
    quartic_scroll_in(kind, &Ring::p5())
}

pub fn quartic_scroll_in(kind: ScrollKind, ring: &RingRef) -> Ideal {
    let x = |i| Polynomial::var(ring, i);
    let (top, bottom) = match kind {
        ScrollKind::S22 => ([0, 1, 3, 4], [1, 2, 4, 5]),
        ScrollKind::S13 => ([0, 2, 3, 4], [1, 3, 4, 5]),
    };
    let top: Vec<Polynomial> = top.iter().map(|&i| x(i)).collect();
    let bottom: Vec<Polynomial> = bottom.iter().map(|&i| x(i)).collect();
    Ideal::new(ring, minors_2x2([&top, &bottom])).expect("scroll minors")
}

/// Ideal of a point of P^2 given by integer coordinates.
pub fn point_ideal(ring: &RingRef, p: &[i64]) -> Result<Ideal> {
    let field = ring.field();
    let k = p.iter().position(|&c| c != 0).ok_or_else(|| Error::InvalidArgument("zero point".into()))?;
    let mut gens = Vec::new();
    for (j, &c) in p.iter().enumerate() {
        if j == k {
            continue;
        }
        // p_k x_j - p_j x_k
        let g = Polynomial::var(ring, j)
            .scale(&field.from_i64(p[k]))
            .sub(&Polynomial::var(ring, k).scale(&field.from_i64(c)));
        gens.push(g);
    }
    Ideal::new(ring, gens)
}

/// Quadrics of the reduced basis of the ideal of the points, in basis order.
fn conics_through(p2: &RingRef, points: &[Ideal]) -> Result<Vec<Polynomial>> {
    let meet = intersect_all(points)?;
    let out: Vec<Polynomial> =
        meet.gb()?.elements().iter().filter(|g| g.homogeneous_degree() == Some(2)).map(|g| g.to_ring(p2)).collect::<Result<_>>()?;
    Ok(out)
}

/// Cubics through the four base points: `t_i·q` for each quadric `q` of the
/// reduced basis of the point ideal, in basis order.
pub fn del_pezzo_map() -> Result<RingMap> {
    let p2 = Ring::p2();
    let points = BASE_POINTS.iter().map(|p| point_ideal(&p2, p)).collect::<Result<Vec<_>>>()?;
    let mut forms = Vec::with_capacity(6);
    for q in &conics_through(&p2, &points)? {
        for i in 0..3 {
            forms.push(Polynomial::var(&p2, i).mul(q));
        }
    }
    RingMap::new(&Ring::p5(), &p2, forms)
}

pub fn del_pezzo_quintic() -> Result<ParamSurface> {
    let map = del_pezzo_map()?;
    let ideal = fixtures::ideal("delpezzo", map.source())?;
    Ok(ParamSurface { label: "delpezzo".into(), ideal, map })
}

impl ParamSurface {
    /// Saturated kernel of the parametrization.
    pub fn image(&self) -> Result<Ideal> {
        saturate(&kernel(&self.map)?, None)
    }
}

pub fn conic_pencils(s: &ParamSurface) -> Result<Vec<ConicPencil>> {
    let p2 = s.map.target().clone();
    let mut out = Vec::with_capacity(5);
    for (i, p) in BASE_POINTS.iter().enumerate() {
        let lines = graded_basis(&point_ideal(&p2, p)?, 1)?;
        let spanning: [Polynomial; 2] = lines
            .try_into()
            .map_err(|_| Error::InvalidArgument("point ideal must have two linear forms".into()))?;
        out.push(ConicPencil { kind: PencilKind::LinesThrough(i), base: s.clone(), spanning });
    }
    let points = BASE_POINTS.iter().map(|p| point_ideal(&p2, p)).collect::<Result<Vec<_>>>()?;
    let quadrics = conics_through(&p2, &points)?;
    let spanning: [Polynomial; 2] = quadrics
        .try_into()
        .map_err(|_| Error::InvalidArgument("four points must lie on a pencil of conics".into()))?;
    out.push(ConicPencil { kind: PencilKind::ConicsThroughAll, base: s.clone(), spanning });
    Ok(out)
}

impl PencilKind {
    pub fn label(&self) -> String {
        match self {
            PencilKind::LinesThrough(i) => format!("lines-p{}", i + 1),
            PencilKind::ConicsThroughAll => "conics".into(),
        }
    }
}

impl ConicPencil {
    pub fn label(&self) -> String {
        self.kind.label()
    }

    /// The plane curve `λ0·g0 + λ1·g1`.
    pub fn curve(&self, lambda: [i64; 2]) -> Polynomial {
        let f = self.spanning[0].ring().field();
        self.spanning[0]
            .scale(&f.from_i64(lambda[0]))
            .add(&self.spanning[1].scale(&f.from_i64(lambda[1])))
    }

    /// Ideal in P^5 of the image of the member at `λ`.
    pub fn member(&self, lambda: [i64; 2]) -> Result<Ideal> {
        let c = self.curve(lambda);
        if c.is_zero() {
            return Err(Error::InvalidArgument("λ = 0 is not a pencil parameter".into()));
        }
        let j = Ideal::new(self.base.map.target(), vec![c])?;
        saturate(&preimage(&self.base.map, &j)?, None)
    }
}

/// Same polynomial in a ring whose leading variables are those of `f`'s ring.
fn lifted(f: &Polynomial, ring: &RingRef) -> Polynomial {
    let map: Vec<usize> = (0..f.ring().nvars()).collect();
    f.map_monomials(ring, |m| m.embed(ring.nvars(), &map))
}

/// Threefold swept by the planes spanned by the members of the pencil.
///
/// Works in `[t, λ0, λ1, x]`: eliminating `t` from `x - f(t)` and the
/// generic member gives the family of cones over the conics, whose
/// `x`-linear part spans the planes. Planes over parameters where the span
/// jumps are removed before `λ` is eliminated.
pub fn segre_threefold(pencil: &ConicPencil) -> Result<Ideal> {
    let map = &pencil.base.map;
    let p2 = map.target();
    let p5 = map.source();
    let field = p5.field();
    let d = map.degree();
    let mut vars: Vec<String> = p2.vars().to_vec();
    vars.extend(["_l0".to_string(), "_l1".to_string()]);
    vars.extend(p5.vars().iter().cloned());
    let mut weights = vec![1u32; 5];
    weights.extend(vec![d; 6]);
    let big: RingRef = Arc::new(Ring::new(vars, field)?.with_weights(weights)?.with_order(TermOrder::Elimination(3)));
    let l0 = Polynomial::var(&big, 3);
    let l1 = Polynomial::var(&big, 4);
    let mut gens = vec![lifted(&pencil.spanning[0], &big)
        .mul(&l0)
        .add(&lifted(&pencil.spanning[1], &big).mul(&l1))];
    for (i, f) in map.forms().iter().enumerate() {
        gens.push(Polynomial::var(&big, 5 + i).sub(&lifted(f, &big)));
    }
    let family = eliminate(&Ideal::new(&big, gens)?, 3)?;
    let lx = family.ring().clone();
    let linear: Vec<Polynomial> = family
        .gens()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| (2..8).map(|i| m.exp(i)).sum::<u32>() == 1))
        .cloned()
        .collect();
    // forget the weights: the linear part is bihomogeneous, hence standard graded
    let std: RingRef = Arc::new(Ring::new(lx.vars().to_vec(), field)?);
    let linear: Vec<Polynomial> = linear.iter().map(|g| g.map_monomials(&std, |m| *m)).collect();
    let minors = span_minors(&linear, &std)?;
    let planes = Ideal::new(&std, linear)?;
    let pencil_vars = Ideal::new(&std, vec![Polynomial::var(&std, 0), Polynomial::var(&std, 1)])?;
    let clean = saturate(&planes, Some(&Ideal::new(&std, minors)?))?;
    let clean = saturate(&clean, Some(&pencil_vars))?;
    let out = eliminate(&clean, 2)?;
    let out = out.gens().iter().map(|g| g.map_monomials(p5, |m| *m)).collect();
    saturate(&Ideal::new(p5, out)?, None)
}

fn det3(m: [[&Polynomial; 3]; 3]) -> Polynomial {
    let cof = |a: usize, b: usize, c: usize| m[0][a].mul(&m[1][b].mul(m[2][c]).sub(&m[1][c].mul(m[2][b])));
    cof(0, 1, 2).sub(&cof(1, 0, 2)).add(&cof(2, 0, 1))
}

/// Nonzero 3x3 minors of the coefficient matrix (entries forms in λ) of the
/// x-linear forms; they cut out the parameters where the span jumps.
fn span_minors(linear: &[Polynomial], ring: &RingRef) -> Result<Vec<Polynomial>> {
    let r = linear.len();
    let zero = Polynomial::zero(ring);
    let mut rows: Vec<Vec<Polynomial>> = vec![vec![zero.clone(); 6]; r];
    for (k, g) in linear.iter().enumerate() {
        for (m, c) in g.terms() {
            let col = (2..8).find(|&i| m.exp(i) == 1).expect("x-linear");
            let mut e: Vec<u32> = (0..ring.nvars()).map(|i| m.exp(i)).collect();
            e[col] = 0;
            rows[k][col - 2] = rows[k][col - 2].add(&Polynomial::monomial(ring, Monomial::new(&e)?, c.clone()));
        }
    }
    let mut minors = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            for c in b + 1..r {
                for i in 0..6 {
                    for j in i + 1..6 {
                        for k in j + 1..6 {
                            let m = [
                                [&rows[a][i], &rows[a][j], &rows[a][k]],
                                [&rows[b][i], &rows[b][j], &rows[b][k]],
                                [&rows[c][i], &rows[c][j], &rows[c][k]],
                            ];
                            let d = det3(m);
                            if !d.is_zero() {
                                minors.push(d);
                            }
                        }
                    }
                }
            }
        }
    }
    let generic = [[1, 2], [3, -1], [1, 7]]
        .iter()
        .map(|s| specialized_rank(linear, ring, *s))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    if minors.is_empty() || generic != 3 {
        return Err(Error::DegeneratePencil(format!(
            "members span linear spaces of dimension {}",
            5 - generic as i64
        )));
    }
    Ok(minors)
}

fn specialized_rank(linear: &[Polynomial], ring: &RingRef, s: [i64; 2]) -> Result<usize> {
    let field = ring.field();
    let n = ring.nvars();
    let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(ring, i)).collect();
    images[0] = Polynomial::constant(ring, field.from_i64(s[0]));
    images[1] = Polynomial::constant(ring, field.from_i64(s[1]));
    let spec = linear.iter().map(|g| g.substitute(&images)).collect::<Result<Vec<_>>>()?;
    let vars: Vec<Monomial> = monomials_of_degree(ring, 1)[2..].to_vec();
    let mat: Matrix = coefficient_matrix(&spec, &vars, field);
    Ok(mat.rank())
}

/// Linear ideal in the P^5 ring from a list of linear forms.
fn plane(text: &str) -> Result<Ideal> {
    Ideal::parse(&Ring::p5(), text)
}

pub const PLANE_NAMES: [&str; 7] = ["a", "b", "c", "d", "e", "p1", "p2"];

/// Named planes: the five fixture planes `a..e` and the skew pair `p1, p2`.
pub fn standard_planes() -> Result<Vec<(String, Ideal)>> {
    PLANE_NAMES.iter().map(|n| Ok((n.to_string(), named_plane(n)?))).collect()
}

pub fn named_plane(name: &str) -> Result<Ideal> {
    let file = match name {
        "a" | "b" | "c" | "d" | "e" => format!("dp-{name}-plane"),
        "p1" | "p2" => format!("skew-planes-{name}"),
        other => {
            if let Some(k) = other.strip_prefix("coord") {
                // coordinate plane x_{k}=x_{k+1}=x_{k+2}=0
                let k: usize = k.parse().map_err(|_| Error::UnknownName(format!("plane:{other}")))?;
                if k > 3 {
                    return Err(Error::UnknownName(format!("plane:{other}")));
                }
                return plane(&format!("x_{},x_{},x_{}", k, k + 1, k + 2));
            }
            return Err(Error::UnknownName(format!("plane:{other}")));
        }
    };
    fixtures::ideal(&file, &Ring::p5())
}

/// All names accepted by [`lookup`].
pub fn names() -> Vec<String> {
    let mut out = vec!["scroll:s22".to_string(), "scroll:s13".to_string(), "delpezzo".to_string()];
    out.extend(PLANE_NAMES.iter().map(|n| format!("plane:{n}")));
    for k in ["lines-p1", "lines-p2", "lines-p3", "lines-p4", "conics"] {
        out.push(format!("segre:{k}"));
    }
    out
}

/// Ideal of a catalog entry by name.
pub fn lookup(name: &str) -> Result<Ideal> {
    match name {
        "scroll:s22" => Ok(quartic_scroll(ScrollKind::S22)),
        "scroll:s13" => Ok(quartic_scroll(ScrollKind::S13)),
        "delpezzo" => Ok(del_pezzo_quintic()?.ideal),
        _ => {
            if let Some(p) = name.strip_prefix("plane:") {
                return named_plane(p);
            }
            if let Some(k) = name.strip_prefix("segre:") {
                let s = del_pezzo_quintic()?;
                let pencil = conic_pencils(&s)?
                    .into_iter()
                    .find(|p| p.label() == k)
                    .ok_or_else(|| Error::UnknownName(name.to_string()))?;
                return segre_threefold(&pencil);
            }
            Err(Error::UnknownName(name.to_string()))
        }
    }
}


/// Rational map given by the quadrics of `i`: source is a copy of P^5 in
/// `y_0..y_{m-1}`, one variable per generator.
pub fn quadric_system(i: &Ideal) -> Result<RingMap> {
    let gens = graded_basis(i, 2)?;
    if gens.is_empty() {
        return Err(Error::InvalidArgument("no quadrics in the ideal".into()));
    }
    let source = Ring::projective("y", gens.len() - 1, i.ring().field());
    RingMap::new(&source, i.ring(), gens)
}

#[cfg(test)]
mod tests;
