//! Independent oracles for the integration suites. Nothing here calls the
//! library's own arithmetic beyond constructing values to compare against.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use sternbrocot::rational::ExtendedRational;

/// A point of `Q ∪ {∞}` for the oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ext {
    Fin(BigRational),
    Inf,
}

impl Ext {
    pub fn to_er(&self) -> ExtendedRational {
        match self {
            Ext::Fin(r) => ExtendedRational::from_rational(r),
            Ext::Inf => ExtendedRational::infinity(),
        }
    }
}

/// `a + 1/x` on the projective line.
fn add_recip(a: &BigInt, x: &Ext) -> Ext {
    match x {
        Ext::Inf => Ext::Fin(BigRational::from_integer(a.clone())),
        Ext::Fin(r) if r.is_zero() => Ext::Inf,
        Ext::Fin(r) => Ext::Fin(BigRational::from_integer(a.clone()) + r.recip()),
    }
}

/// `[a0; a1, ..., an]` by the textbook recursion `a0 + 1/[a1; ...]`, with
/// `1/0 = ∞` and `1/∞ = 0`.
pub fn eval_recursive(terms: &[BigInt]) -> Ext {
    let (last, rest) = terms.split_last().expect("nonempty");
    let mut acc = Ext::Fin(BigRational::from_integer(last.clone()));
    for a in rest.iter().rev() {
        acc = add_recip(a, &acc);
    }
    acc
}

pub fn eval_i64(terms: &[i64]) -> ExtendedRational {
    let big: Vec<BigInt> = terms.iter().map(|&t| BigInt::from(t)).collect();
    eval_recursive(&big).to_er()
}

pub fn big(terms: &[i64]) -> Vec<BigInt> {
    terms.iter().map(|&t| BigInt::from(t)).collect()
}

pub fn er(p: i64, q: i64) -> ExtendedRational {
    ExtendedRational::new(p, q).unwrap()
}

/// Plain `i128` 2x2 product, row-major.
pub fn mul2(a: [i128; 4], b: [i128; 4]) -> [i128; 4] {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

/// Number of reduced fractions `p/q` in `[lo, hi]` with `1 <= q <= max_den`,
/// by scanning every numerator.
pub fn gcd_scan_count(lo: (i64, i64), hi: (i64, i64), max_den: i64) -> usize {
    let mut n = 0;
    for q in 1..=max_den {
        let pmin = Integer::div_ceil(&(lo.0 * q), &lo.1);
        let pmax = Integer::div_floor(&(hi.0 * q), &hi.1);
        for p in pmin..=pmax {
            if p.gcd(&q) == 1 {
                n += 1;
            }
        }
    }
    n
}

/// Reduced `(p, q)` with `lo <= p/q <= hi`, `q <= max_den`.
pub fn fractions_in(lo: (i64, i64), hi: (i64, i64), max_den: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for q in 1..=max_den {
        let pmin = Integer::div_ceil(&(lo.0 * q), &lo.1);
        let pmax = Integer::div_floor(&(hi.0 * q), &hi.1);
        for p in pmin..=pmax {
            if p.gcd(&q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

pub fn farey(a: (i64, i64), b: (i64, i64)) -> bool {
    (a.0 * b.1 - b.0 * a.1).abs() == 1
}

/// Every Farey triple among `fracs`, each sorted by value, by brute force.
pub fn brute_triples(fracs: &[(i64, i64)]) -> Vec<[(i64, i64); 3]> {
    let mut sorted = fracs.to_vec();
    sorted.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    let mut out = Vec::new();
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            if !farey(sorted[i], sorted[j]) {
                continue;
            }
            for k in j + 1..sorted.len() {
                if farey(sorted[i], sorted[k]) && farey(sorted[j], sorted[k]) {
                    out.push([sorted[i], sorted[j], sorted[k]]);
                }
            }
        }
    }
    out
}

pub fn to_i64(x: &ExtendedRational) -> (i64, i64) {
    (
        x.numer().try_into().expect("small numerator"),
        x.denom().try_into().expect("small denominator"),
    )
}

/// Scaled integer coordinates of `ν(p/q)`: `(p L / q, L / q)`.
pub fn nu_scaled(v: (i64, i64), l: i128) -> (i128, i128) {
    (v.0 as i128 * l / v.1 as i128, l / v.1 as i128)
}

fn orient(a: (i128, i128), b: (i128, i128), c: (i128, i128)) -> i128 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn on_open_segment(p: (i128, i128), a: (i128, i128), b: (i128, i128)) -> bool {
    orient(a, b, p) == 0
        && p != a
        && p != b
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

/// Whether the relative interiors of two closed segments share a point.
/// Segments that only share an endpoint do not count.
pub fn open_segments_meet(
    a: (i128, i128),
    b: (i128, i128),
    c: (i128, i128),
    d: (i128, i128),
) -> bool {
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    if o1 == 0 && o2 == 0 {
        // collinear: overlap in more than a point
        return on_open_segment(c, a, b)
            || on_open_segment(d, a, b)
            || on_open_segment(a, c, d)
            || on_open_segment(b, c, d)
            || ((a == c && b == d) || (a == d && b == c));
    }
    if on_open_segment(c, a, b)
        || on_open_segment(d, a, b)
        || on_open_segment(a, c, d)
        || on_open_segment(b, c, d)
    {
        return true;
    }
    o1.signum() * o2.signum() < 0 && o3.signum() * o4.signum() < 0
}

/// `a/b < c/d` for positive denominators.
pub fn lt(a: (i64, i64), c: (i64, i64)) -> bool {
    (a.0 as i128) * (c.1 as i128) < (c.0 as i128) * (a.1 as i128)
}

/// Triangles of `tris` whose interior is crossed by the vertical line over `α`:
/// the ray `x = α, y > 0` passes through the open triangle exactly when `α`
/// lies strictly between its leftmost and rightmost vertex.
pub fn ray_triangles(tris: &[[(i64, i64); 3]], alpha: (i64, i64)) -> Vec<[(i64, i64); 3]> {
    tris.iter()
        .filter(|t| lt(t[0], alpha) && lt(alpha, t[2]))
        .copied()
        .collect()
}

/// An edge as two `(p, q)` endpoints.
pub type EdgeI = ((i64, i64), (i64, i64));

/// Edges of a set of triangles.
pub fn triangle_edges(tris: &[[(i64, i64); 3]]) -> Vec<EdgeI> {
    let mut e: Vec<_> = tris
        .iter()
        .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])])
        .collect();
    e.sort();
    e.dedup();
    e
}

/// Funnel edges at `v` whose endpoints lie strictly on opposite sides of `α`.
pub fn crossing_index(edges: &[EdgeI], v: (i64, i64), alpha: (i64, i64)) -> u64 {
    edges
        .iter()
        .filter(|(a, b)| *a == v || *b == v)
        .filter(|(a, b)| (lt(*a, alpha) && lt(alpha, *b)) || (lt(*b, alpha) && lt(alpha, *a)))
        .count() as u64
}

/// A random standard sequence with `1 <= n <= max_n`, terms in `1..=max_term`.
pub fn random_standard(rng: &mut ChaCha8Rng, max_n: usize, max_term: i64) -> Vec<i64> {
    let n = rng.gen_range(1..=max_n);
    let mut t = vec![rng.gen_range(-3..=3)];
    for j in 1..=n {
        let lo = if j == n { 2 } else { 1 };
        t.push(rng.gen_range(lo..=max_term));
    }
    t
}

/// `(p, q)` with `p/q` the value of `X_{a1} ⋯ X_{an} (0, 1)ᵀ`, computed with
/// `i128` matrices.
pub fn column_i128(terms: &[i64]) -> (i128, i128) {
    let mut m = [1, 0, 0, 1];
    for &a in terms {
        m = mul2(m, [0, 1, 1, a as i128]);
    }
    (m[1], m[3])
}
