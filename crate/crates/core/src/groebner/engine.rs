//! Buchberger's algorithm on a coefficient-domain abstraction.
//!
//! Over the rationals the engine runs fraction-free on primitive integer
//! polynomials; over `F_p` it keeps the basis monic. Pairs are selected by
//! lowest sugar, then smallest lcm, then input index, and pruned with the
//! Gebauer-Moeller update (coprime leading terms and the chain criterion).

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::monomial::{Monomial, TermOrder};

pub(crate) trait Domain {
    type E: Clone + PartialEq + std::fmt::Debug;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn is_one(&self, a: &Self::E) -> bool;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Multipliers `(u, v)` with `u*a == v*b` and `u` nonzero.
    fn cancel(&self, a: &Self::E, b: &Self::E) -> (Self::E, Self::E);
    /// Canonical associate: primitive with positive leading coefficient
    /// over the integers, monic over a field.
    fn normalize(&self, p: &mut Vec<(Monomial, Self::E)>);
}

pub(crate) struct IntDomain;

impl Domain for IntDomain {
    type E = BigInt;
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn cancel(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        let g = a.gcd(b);
        let (mut u, mut v) = (b / &g, a / &g);
        if u.is_negative() {
            u = -u;
            v = -v;
        }
        (u, v)
    }
    fn normalize(&self, p: &mut Vec<(Monomial, BigInt)>) {
        if p.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in p.iter() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if p[0].1.sign() == Sign::Minus {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in p.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
}

pub(crate) struct PrimeDomain {
    pub p: u32,
}

impl PrimeDomain {
    fn inv(&self, a: u32) -> u32 {
        crate::scalar::inv_mod(a, self.p)
    }
}

impl Domain for PrimeDomain {
    type E = u32;
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn cancel(&self, a: &u32, b: &u32) -> (u32, u32) {
        (1, self.mul(a, &self.inv(*b)))
    }
    fn normalize(&self, p: &mut Vec<(Monomial, u32)>) {
        if let Some((_, lc)) = p.first() {
            if *lc != 1 {
                let inv = self.inv(*lc);
                for (_, c) in p.iter_mut() {
                    *c = self.mul(c, &inv);
                }
            }
        }
    }
}

pub(crate) type Terms<E> = Vec<(Monomial, E)>;

pub(crate) struct OrderCtx<'a> {
    pub order: TermOrder,
    pub weights: Option<&'a [u32]>,
}

impl OrderCtx<'_> {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp_weighted(a, b, self.weights)
    }

    fn deg(&self, m: &Monomial) -> u32 {
        match self.weights {
            None => m.degree(),
            Some(w) => m.weighted_degree(w),
        }
    }
}

#[inline]
fn divmask(m: &Monomial) -> u32 {
    let mut mask = 0u32;
    for (i, &e) in m.exps().iter().enumerate() {
        if e >= 1 {
            mask |= 1 << i;
        }
        if e >= 2 {
            mask |= 1 << (16 + i);
        }
    }
    mask
}

/// `u*f - v*(m*g)`.
fn axpy<D: Domain>(
    dom: &D,
    ord: &OrderCtx,
    f: &Terms<D::E>,
    u: &D::E,
    v: &D::E,
    m: &Monomial,
    g: &Terms<D::E>,
) -> Terms<D::E> {
    let scale_f = !dom.is_one(u);
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut gm = g.first().map(|t| t.0.mul(m));
    loop {
        let ord_ij = match (i < f.len(), &gm) {
            (true, Some(gm)) => ord.cmp(&f[i].0, gm),
            (true, None) => Ordering::Greater,
            (false, Some(_)) => Ordering::Less,
            (false, None) => break,
        };
        match ord_ij {
            Ordering::Greater => {
                let c = if scale_f { dom.mul(u, &f[i].1) } else { f[i].1.clone() };
                out.push((f[i].0, c));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.unwrap(), dom.neg(&dom.mul(v, &g[j].1))));
                j += 1;
                gm = g.get(j).map(|t| t.0.mul(m));
            }
            Ordering::Equal => {
                let a = if scale_f { dom.mul(u, &f[i].1) } else { f[i].1.clone() };
                let c = dom.sub(&a, &dom.mul(v, &g[j].1));
                if !dom.is_zero(&c) {
                    out.push((f[i].0, c));
                }
                i += 1;
                j += 1;
                gm = g.get(j).map(|t| t.0.mul(m));
            }
        }
    }
    out
}

pub(crate) struct Basis<E> {
    pub polys: Vec<Terms<E>>,
    lms: Vec<Monomial>,
    masks: Vec<u32>,
    active: Vec<bool>,
}

impl<E: Clone> Basis<E> {
    fn new() -> Self {
        Basis { polys: Vec::new(), lms: Vec::new(), masks: Vec::new(), active: Vec::new() }
    }

    fn push(&mut self, p: Terms<E>) -> usize {
        let lm = p[0].0;
        self.masks.push(divmask(&lm));
        self.lms.push(lm);
        self.polys.push(p);
        self.active.push(true);
        self.polys.len() - 1
    }

    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mask = divmask(m);
        (0..self.polys.len()).find(|&k| {
            self.active[k]
                && Some(k) != skip
                && self.masks[k] & !mask == 0
                && self.lms[k].divides(m)
        })
    }
}

/// Fully reduce `f` (all terms) by the active elements, skipping `skip`.
fn reduce_full<D: Domain>(
    dom: &D,
    ord: &OrderCtx,
    basis: &Basis<D::E>,
    mut f: Terms<D::E>,
    start: usize,
    skip: Option<usize>,
) -> Terms<D::E> {
    let mut k = start;
    let mut steps = 0usize;
    while k < f.len() {
        let m = f[k].0;
        match basis.find_reducer(&m, skip) {
            Some(r) => {
                let g = &basis.polys[r];
                let q = g[0].0.quotient_of(&m).expect("divides");
                let (u, v) = dom.cancel(&f[k].1, &g[0].1);
                f = axpy(dom, ord, &f, &u, &v, &q, g);
                steps += 1;
                if steps.is_multiple_of(32) {
                    dom.normalize(&mut f);
                }
            }
            None => k += 1,
        }
    }
    f
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn spoly<D: Domain>(dom: &D, ord: &OrderCtx, f: &Terms<D::E>, g: &Terms<D::E>) -> Terms<D::E> {
    let l = f[0].0.lcm(&g[0].0);
    let mf = f[0].0.quotient_of(&l).unwrap();
    let mg = g[0].0.quotient_of(&l).unwrap();
    let (u, v) = dom.cancel(&f[0].1, &g[0].1);
    let fm: Terms<D::E> = f.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    axpy(dom, ord, &fm, &u, &v, &mg, g)
}

/// Outcome of a Buchberger run: a reduced basis (domain-normalized, sorted
/// by increasing leading monomial).
pub(crate) fn buchberger<D: Domain>(dom: &D, ord: &OrderCtx, input: Vec<Terms<D::E>>) -> Vec<Terms<D::E>> {
    let mut basis: Basis<D::E> = Basis::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut pending: Vec<(u32, usize, Terms<D::E>)> = input
        .into_iter()
        .enumerate()
        .filter(|(_, p)| !p.is_empty())
        .map(|(k, mut p)| {
            p.sort_by(|a, b| ord.cmp(&b.0, &a.0));
            let s = p.iter().map(|(m, _)| ord.deg(m)).max().unwrap_or(0);
            (s, k, p)
        })
        .collect();
    // process inputs lowest degree first, stable in input order
    pending.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut pending = std::collections::VecDeque::from(pending);

    loop {
        // choose between the next input and the best pair
        let best_pair = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| ord.cmp(&a.lcm, &b.lcm))
                    .then(a.i.cmp(&b.i))
                    .then(a.j.cmp(&b.j))
            })
            .map(|(k, p)| (k, p.sugar));
        let take_input = match (pending.front(), best_pair) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some((s, _, _)), Some((_, ps))) => *s <= ps,
        };
        let (sugar, h) = if take_input {
            let (s, _, p) = pending.pop_front().unwrap();
            (s, p)
        } else {
            let (k, _) = best_pair.unwrap();
            let pr = pairs.swap_remove(k);
            let (fi, gj) = (&basis.polys[pr.i], &basis.polys[pr.j]);
            (pr.sugar, spoly(dom, ord, fi, gj))
        };
        let mut h = reduce_full(dom, ord, &basis, h, 0, None);
        if h.is_empty() {
            continue;
        }
        dom.normalize(&mut h);
        if h[0].0.is_one() {
            // unit ideal
            let mut one = vec![h[0].clone()];
            dom.normalize(&mut one);
            return vec![one];
        }
        let t = h[0].0;
        let new = basis.push(h);
        sugars.push(sugar);
        update(&mut basis, &mut pairs, &sugars, new, t, ord);
    }

    // final interreduction of tails
    let idx: Vec<usize> = (0..basis.polys.len()).filter(|&k| basis.active[k]).collect();
    let mut out = Vec::with_capacity(idx.len());
    for &k in &idx {
        let mut p = reduce_full(dom, ord, &basis, basis.polys[k].clone(), 1, Some(k));
        dom.normalize(&mut p);
        out.push(p);
    }
    out.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    out
}

fn update<E: Clone>(
    basis: &mut Basis<E>,
    pairs: &mut Vec<Pair>,
    sugars: &[u32],
    h: usize,
    t: Monomial,
    ord: &OrderCtx,
) {
    let pair_sugar = |i: usize, lcm: &Monomial| -> u32 {
        let li = basis.lms[i];
        let si = sugars[i] + ord.deg(&li.quotient_of(lcm).unwrap());
        let sh = sugars[h] + ord.deg(&t.quotient_of(lcm).unwrap());
        si.max(sh)
    };
    let olds: Vec<usize> = (0..h).filter(|&k| basis.active[k]).collect();
    let cands: Vec<(usize, Monomial)> = olds.iter().map(|&g| (g, basis.lms[g].lcm(&t))).collect();

    // chain criterion among the new pairs
    let mut keep = vec![true; cands.len()];
    for a in 0..cands.len() {
        let (ga, la) = cands[a];
        if basis.lms[ga].is_coprime(&t) {
            continue;
        }
        for b in 0..cands.len() {
            if a == b || !keep[b] {
                continue;
            }
            let lb = cands[b].1;
            if lb.divides(&la) && (lb != la || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    // keep one representative per lcm; drop coprime pairs
    let mut fresh = Vec::new();
    for (a, &(g, l)) in cands.iter().enumerate() {
        if !keep[a] {
            continue;
        }
        if basis.lms[g].is_coprime(&t) {
            continue;
        }
        fresh.push(Pair { i: g, j: h, lcm: l, sugar: pair_sugar(g, &l) });
    }

    // prune old pairs through the new leading term
    pairs.retain(|p| {
        if !t.divides(&p.lcm) {
            return true;
        }
        let li = basis.lms[p.i].lcm(&t);
        let lj = basis.lms[p.j].lcm(&t);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(fresh);

    for g in olds {
        if t.divides(&basis.lms[g]) {
            basis.active[g] = false;
        }
    }
}

#[allow(dead_code)]
pub(crate) fn reduce_by<D: Domain>(
    dom: &D,
    ord: &OrderCtx,
    gens: &[Terms<D::E>],
    f: Terms<D::E>,
) -> Terms<D::E> {
    let mut b = Basis::new();
    for g in gens {
        if !g.is_empty() {
            b.push(g.clone());
        }
    }
    let mut r = reduce_full(dom, ord, &b, f, 0, None);
    dom.normalize(&mut r);
    r
}
