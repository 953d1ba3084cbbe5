//! Integer intersection theory on cubic fourfolds: Gram matrices of
//! sublattices of algebraic 2-cycles, excess and self-intersection formulas,
//! residual classes and bounded searches for surface classes.

use serde::Serialize;

use crate::error::{Error, Result};

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> Result<i128> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else { return Ok(0) };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionLattice {
    pub labels: Vec<String>,
    pub gram: Vec<Vec<i64>>,
}

impl IntersectionLattice {
    pub fn new(labels: &[&str], gram: Vec<Vec<i64>>) -> Result<IntersectionLattice> {
        let n = labels.len();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(Error::ArityMismatch { expected: n, got: gram.len() });
        }
        if let Some((i, j)) = (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).find(|&(i, j)| gram[i][j] != gram[j][i]) {
            return Err(Error::InvalidArgument(format!("Gram matrix not symmetric at ({i}, {j})")));
        }
        Ok(IntersectionLattice { labels: labels.iter().map(|s| s.to_string()).collect(), gram })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// `⟨h², P₁, P₂⟩` for two disjoint planes in a cubic fourfold.
    pub fn skew_planes() -> IntersectionLattice {
        IntersectionLattice::new(&["h^2", "P1", "P2"], vec![vec![3, 1, 1], vec![1, 3, 0], vec![1, 0, 3]])
            .expect("symmetric")
    }

    /// `⟨h², S, P⟩` for a quintic del Pezzo surface `S` and a plane `P`
    /// with `S·P = β`.
    pub fn del_pezzo_and_plane(beta: i64) -> IntersectionLattice {
        IntersectionLattice::new(&["h^2", "S", "P"], vec![vec![3, 5, 1], vec![5, 13, beta], vec![1, beta, 3]])
            .expect("symmetric")
    }

    pub fn pairing(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        let n = self.rank();
        if x.len() != n || y.len() != n {
            return Err(Error::ArityMismatch { expected: n, got: x.len().min(y.len()) });
        }
        Ok(x.iter().zip(&self.gram).map(|(xi, row)| xi * row.iter().zip(y).map(|(g, yj)| g * yj).sum::<i64>()).sum())
    }

    pub fn class(&self, coords: Vec<i64>) -> Result<SurfaceClass> {
        SurfaceClass::new(self, coords)
    }
}

pub fn gram_discriminant(l: &IntersectionLattice) -> i128 {
    determinant(&l.gram).expect("square Gram matrix")
}

/// Discriminant of `⟨h², S, P⟩` in closed form: `29 + 10β - 3β²`.
pub fn del_pezzo_discriminant(beta: i64) -> i64 {
    29 + 10 * beta - 3 * beta * beta
}

/// A class in a lattice whose first basis element is `h²`, with its degree
/// and self-intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceClass {
    pub coords: Vec<i64>,
    pub degree: i64,
    pub self_int: i64,
}

impl SurfaceClass {
    pub fn new(l: &IntersectionLattice, coords: Vec<i64>) -> Result<SurfaceClass> {
        let mut h = vec![0; l.rank()];
        h[0] = 1;
        let degree = l.pairing(&coords, &h)?;
        let self_int = l.pairing(&coords, &coords)?;
        Ok(SurfaceClass { coords, degree, self_int })
    }

    pub fn is_consistent(&self, l: &IntersectionLattice) -> bool {
        SurfaceClass::new(l, self.coords.clone()).is_ok_and(|c| c == *self)
    }
}

/// Numerical invariants of a smooth surface: `h²`, `h·K`, `K²`, topological
/// Euler characteristic and `χ(O)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceNumerics {
    pub h2: i64,
    pub hk: i64,
    pub k2: i64,
    pub chi_top: i64,
    pub chi_o: i64,
}

impl SurfaceNumerics {
    pub const QUARTIC_SCROLL: SurfaceNumerics = SurfaceNumerics { h2: 4, hk: -6, k2: 8, chi_top: 4, chi_o: 1 };
    pub const DEL_PEZZO_QUINTIC: SurfaceNumerics = SurfaceNumerics { h2: 5, hk: -5, k2: 5, chi_top: 7, chi_o: 1 };
    pub const PLANE: SurfaceNumerics = SurfaceNumerics { h2: 1, hk: -3, k2: 9, chi_top: 3, chi_o: 1 };
}

/// `S²` for a smooth surface in a cubic fourfold: `6h² + 3h·K + K² - χ_top`.
pub fn self_int_cubic_fourfold(n: &SurfaceNumerics) -> i64 {
    6 * n.h2 + 3 * n.hk + n.k2 - n.chi_top
}

/// `S²` for a smooth surface in a quadric fourfold:
/// `7h² + 4h·K + 2K² - 12χ(O)`.
pub fn self_int_quadric_fourfold(n: &SurfaceNumerics) -> i64 {
    7 * n.h2 + 4 * n.hk + 2 * n.k2 - 12 * n.chi_o
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Excess {
    pub value: i64,
    pub advisory: Option<String>,
}

/// Multiplicity along a smooth curve `C` of degree `d` and genus `g` of the
/// intersection of two surfaces meeting along it:
/// `3d + K₁·C + K₂·C + 2 - 2g`.
pub fn excess_multiplicity(d: i64, g: i64, k1c: i64, k2c: i64) -> Excess {
    let value = 3 * d + k1c + k2c + 2 - 2 * g;
    let advisory = if d <= 0 { Some(format!("curve degree {d} is outside the formula's domain")) } else { None };
    Excess { value, advisory }
}

/// `T = 3h² - S` in `⟨h², S, P⟩`, with its invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub class: SurfaceClass,
    pub t_h2: i64,
    pub t_sq: i64,
    pub t_p: i64,
}

pub fn residual_class(s: &SurfaceClass, beta: i64) -> Result<Residual> {
    let l = IntersectionLattice::del_pezzo_and_plane(beta);
    if s.coords.len() != 3 {
        return Err(Error::ArityMismatch { expected: 3, got: s.coords.len() });
    }
    let coords = vec![3 - s.coords[0], -s.coords[1], -s.coords[2]];
    let class = SurfaceClass::new(&l, coords)?;
    let t_p = l.pairing(&class.coords, &[0, 0, 1])?;
    Ok(Residual { t_h2: class.degree, t_sq: class.self_int, t_p, class })
}

/// The class of the del Pezzo surface in `⟨h², S, P⟩`.
pub fn del_pezzo_class(beta: i64) -> SurfaceClass {
    SurfaceClass::new(&IntersectionLattice::del_pezzo_and_plane(beta), vec![0, 1, 0]).expect("rank 3")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBox {
    pub a: (i64, i64),
    pub b: (i64, i64),
    pub c: (i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub degree: i64,
    pub self_int: i64,
    pub plane_bounds: (i64, i64),
    pub search_box: SearchBox,
    pub solutions: Vec<[i64; 3]>,
}

fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}

/// Box implied by `3a+b+c = degree` and `a+3b, a+3c ∈ [lo, hi]`:
/// eliminating `b, c` gives `7a = 3·degree - (a+3b) - (a+3c)`.
pub fn derived_box(degree: i64, bounds: (i64, i64)) -> SearchBox {
    let (lo, hi) = bounds;
    let a = (div_ceil(3 * degree - 2 * hi, 7), div_floor(3 * degree - 2 * lo, 7));
    let b = (div_ceil(lo - a.1, 3), div_floor(hi - a.0, 3));
    SearchBox { a, b, c: b }
}

/// Classes `a·h² + b·P₁ + c·P₂` of the given degree and self-intersection
/// whose pairings with both planes lie in `bounds`, enumerated over `search`.
pub fn obstruction_search_in(degree: i64, self_int: i64, bounds: (i64, i64), search: SearchBox) -> SearchResult {
    let l = IntersectionLattice::skew_planes();
    let mut solutions = Vec::new();
    for a in search.a.0..=search.a.1 {
        for b in search.b.0..=search.b.1 {
            for c in search.c.0..=search.c.1 {
                let v = [a, b, c];
                let deg = 3 * a + b + c;
                let p1 = a + 3 * b;
                let p2 = a + 3 * c;
                if deg != degree || p1 < bounds.0 || p1 > bounds.1 || p2 < bounds.0 || p2 > bounds.1 {
                    continue;
                }
                if l.pairing(&v, &v).expect("rank 3") == self_int {
                    solutions.push(v);
                }
            }
        }
    }
    SearchResult { degree, self_int, plane_bounds: bounds, search_box: search, solutions }
}

pub fn obstruction_search(degree: i64, self_int: i64, bounds: (i64, i64)) -> Result<SearchResult> {
    if bounds.0 > bounds.1 {
        return Err(Error::InvalidArgument("empty plane bounds".into()));
    }
    Ok(obstruction_search_in(degree, self_int, bounds, derived_box(degree, bounds)))
}
