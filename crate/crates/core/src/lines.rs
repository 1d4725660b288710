//! Families `α_m = [a0; a1, ..., a_{i-1}, m, a_{i+1}, ..., an]` obtained by
//! freeing one slot of a standard sequence, and the pair of extended lines
//! `ℓ⁺`, `ℓ⁻` through `(γ, 0)` that carry every vertex `ν(α_m)`.
//!
//! With `a0 = 0`, write `(r t; s u) = X_{a1} ⋯ X_{a_{i-1}}` and
//! `(v, w)ᵀ = X_{a_{i+1}} ⋯ X_{an} (0, 1)ᵀ`. Then
//! `(r t; s u) X_m (v, w)ᵀ = (P(m), Q(m))ᵀ` with
//!
//! ```text
//! P(m) = t w m + r w + t v
//! Q(m) = u w m + s w + u v
//! ```
//!
//! so `α_m = P(m) / Q(m)`, and a nonzero `a0` translates everything by `a0`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::contfrac::{CfSequence, Term};
use crate::error::{Error, Result};
use crate::matrix::b_matrix;
use crate::rational::{format_rational, nu, ExtendedRational, PlanePoint};

/// An extended Euclidean line: a line through a point `(γ, 0)` on the x-axis
/// together with the infinite point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedLine {
    anchor: ExtendedRational,
    through: PlanePoint,
}

impl ExtendedLine {
    /// Line through `(anchor, 0)` and the finite point `through`, which must
    /// lie off the x-axis.
    pub fn new(anchor: ExtendedRational, through: PlanePoint) -> Result<Self> {
        anchor.finite()?;
        match through.coords() {
            Some((_, y)) if !y.is_zero() => Ok(Self { anchor, through }),
            _ => Err(Error::Invariant(format!(
                "line through ({anchor}, 0) needs a second point off the axis, got {through}"
            ))),
        }
    }

    /// x-intercept `γ`.
    pub fn anchor(&self) -> &ExtendedRational {
        &self.anchor
    }

    pub fn anchor_point(&self) -> PlanePoint {
        PlanePoint::on_axis(self.anchor.to_rational().expect("finite anchor"))
    }

    pub fn through(&self) -> &PlanePoint {
        &self.through
    }

    pub fn slope(&self) -> Option<BigRational> {
        let (x, y) = self.through.coords()?;
        let dx = x - self.anchor.to_rational()?;
        if dx.is_zero() {
            None
        } else {
            Some(y / dx)
        }
    }

    /// Mirror image across the x-axis.
    pub fn reflect(&self) -> Self {
        Self {
            anchor: self.anchor.clone(),
            through: self.through.reflect(),
        }
    }

    /// Same point set: equal anchors and equal directions.
    pub fn same_line(&self, other: &Self) -> bool {
        self.anchor == other.anchor && self.slope() == other.slope()
    }

    pub fn contains(&self, pt: &PlanePoint) -> bool {
        membership(pt, self)
    }
}

impl fmt::Display for ExtendedLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line through ({}, 0) and {}", self.anchor, self.through)
    }
}

#[derive(Serialize)]
struct LineJson<'a> {
    anchor: PlanePoint,
    through: &'a PlanePoint,
}

impl Serialize for ExtendedLine {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        LineJson {
            anchor: self.anchor_point(),
            through: &self.through,
        }
        .serialize(serializer)
    }
}

/// Whether `pt` is on the extended line. The infinite point always is.
///
/// A point `(a/b, 1/b)` lies on the line through `(p/q, 1/q)` and `(t/u, 0)`
/// exactly when `|p t; q u| = |a t; b u|`. Here `a, b, p, q` are recovered
/// from the coordinates as `x/y` and `1/y`, so any finite point off the axis
/// can be tested, including reflected points with `b < 0`.
pub fn membership(pt: &PlanePoint, line: &ExtendedLine) -> bool {
    let Some((x, y)) = pt.coords() else {
        return true;
    };
    let anchor = line.anchor.to_rational().expect("finite anchor");
    if y.is_zero() {
        return *x == anchor;
    }
    let (px, py) = line.through.coords().expect("finite second point");
    let (t, u) = (
        BigRational::from_integer(anchor.numer().clone()),
        BigRational::from_integer(anchor.denom().clone()),
    );
    let (p, q) = (px / py, py.recip());
    let (a, b) = (x / y, y.recip());
    &p * &u - &q * &t == &a * &u - &b * &t
}

/// Which of the two lines carries `ν(α_m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Side {
    Plus,
    Minus,
    Infinite,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "PLUS",
            Side::Minus => "MINUS",
            Side::Infinite => "INFINITE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineFamily {
    base: CfSequence,
    slot: usize,
    gamma: ExtendedRational,
    pub r: BigInt,
    pub s: BigInt,
    pub t: BigInt,
    pub u: BigInt,
    pub v: BigInt,
    pub w: BigInt,
    /// `(tw, rw + tv)`, the numerator for `a0 = 0`.
    pub p_coeffs: (BigInt, BigInt),
    /// `(uw, sw + uv)`.
    pub q_coeffs: (BigInt, BigInt),
    pub shift: BigInt,
}

impl LineFamily {
    /// Frees slot `i` (`1 <= i <= n`) of a standard sequence. The current
    /// value of that slot plays no role.
    pub fn new(base: &CfSequence, slot: usize) -> Result<Self> {
        base.ensure_standard()?;
        let n = base.n();
        if slot == 0 || slot > n {
            return Err(Error::SlotOutOfRange { slot, n });
        }
        let a = base.terms();
        let prefix = b_matrix(&a[1..slot]);
        let suffix = b_matrix(&a[slot + 1..]);
        let (r, t, s, u) = (prefix.a, prefix.b, prefix.c, prefix.d);
        let (v, w) = (suffix.b, suffix.d);
        let shift = a[0].clone();
        let gamma = ExtendedRational::from_column(&t + &shift * &u, u.clone())?;
        let p_coeffs = (&t * &w, &r * &w + &t * &v);
        let q_coeffs = (&u * &w, &s * &w + &u * &v);
        if !q_coeffs.0.is_positive() {
            return Err(Error::Invariant(format!(
                "slope uw = {} of Q is not positive for {base} slot {slot}",
                q_coeffs.0
            )));
        }
        Ok(Self {
            base: base.clone(),
            slot,
            gamma,
            r,
            s,
            t,
            u,
            v,
            w,
            p_coeffs,
            q_coeffs,
            shift,
        })
    }

    /// Builds a family from a bracketed pattern with exactly one hole after
    /// `a0`, e.g. `[0;3,_,4]`.
    pub fn from_pattern(terms: &[Term]) -> Result<Self> {
        let holes: Vec<usize> = terms
            .iter()
            .enumerate()
            .filter(|(_, t)| matches!(t, Term::Hole))
            .map(|(k, _)| k)
            .collect();
        let slot = match holes.as_slice() {
            [k] if *k >= 1 => *k,
            [_] => return Err(Error::Parse("the hole cannot replace a0".into())),
            _ => {
                return Err(Error::Parse(format!(
                    "expected exactly one hole, found {}",
                    holes.len()
                )))
            }
        };
        // any value >= 2 in the hole makes a standard base iff the fixed terms allow one
        let filled = terms
            .iter()
            .map(|t| match t {
                Term::Int(v) => v.clone(),
                Term::Hole => BigInt::from(2),
            })
            .collect();
        Self::new(&CfSequence::new(filled)?, slot)
    }

    pub fn base(&self) -> &CfSequence {
        &self.base
    }

    pub fn slot(&self) -> usize {
        self.slot
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// `γ = [a0; a1, ..., a_{i-1}]`.
    pub fn gamma(&self) -> &ExtendedRational {
        &self.gamma
    }

    /// The pattern with the free slot shown as `_`.
    pub fn pattern(&self) -> String {
        let a = self.base.terms();
        let show = |k: usize| {
            if k == self.slot {
                "_".to_string()
            } else {
                a[k].to_string()
            }
        };
        let tail: Vec<String> = (1..a.len()).map(show).collect();
        format!("[{};{}]", a[0], tail.join(","))
    }

    /// The sequence with `m` in the free slot.
    pub fn substituted(&self, m: &BigInt) -> CfSequence {
        self.base.with_term(self.slot, m.clone())
    }

    pub fn q_at(&self, m: &BigInt) -> BigInt {
        &self.q_coeffs.0 * m + &self.q_coeffs.1
    }

    /// Unshifted numerator `P(m)`.
    pub fn p_at(&self, m: &BigInt) -> BigInt {
        &self.p_coeffs.0 * m + &self.p_coeffs.1
    }

    /// Numerator coefficients including the translation by `a0`, so that
    /// `α_m = (c1 m + c0) / Q(m)`.
    pub fn shifted_p_coeffs(&self) -> (BigInt, BigInt) {
        (
            &self.p_coeffs.0 + &self.shift * &self.q_coeffs.0,
            &self.p_coeffs.1 + &self.shift * &self.q_coeffs.1,
        )
    }

    pub fn alpha(&self, m: &BigInt) -> ExtendedRational {
        let q = self.q_at(m);
        let p = self.p_at(m) + &self.shift * &q;
        ExtendedRational::from_column(p, q)
            .expect("(P(m), Q(m)) is a column of a unimodular matrix")
    }

    pub fn alpha_m(&self, m: i64) -> ExtendedRational {
        self.alpha(&BigInt::from(m))
    }

    /// `(P(m)/Q(m), 1/Q(m))` with the sign of `Q(m)` kept; always on `ℓ⁺`.
    pub fn signed_point(&self, m: &BigInt) -> PlanePoint {
        let q = self.q_at(m);
        if q.is_zero() {
            return PlanePoint::Infinity;
        }
        let p = self.p_at(m) + &self.shift * &q;
        PlanePoint::new(
            BigRational::new(p, q.clone()),
            BigRational::new(BigInt::one(), q),
        )
    }

    /// `(ℓ⁺, ℓ⁻)`: the line through `(γ, 0)` and `ν(α_1)`, and its mirror.
    pub fn lines(&self) -> Result<(ExtendedLine, ExtendedLine)> {
        let one = BigInt::one();
        if !self.q_at(&one).is_positive() {
            return Err(Error::Invariant(format!(
                "Q(1) <= 0 for {}",
                self.pattern()
            )));
        }
        let plus = ExtendedLine::new(self.gamma.clone(), nu(&self.alpha(&one)))?;
        let minus = plus.reflect();
        Ok((plus, minus))
    }

    /// Sign of `Q(m)`: the vertex sits on `ℓ⁺` when positive, `ℓ⁻` when negative.
    pub fn classify(&self, m: i64) -> Side {
        let q = self.q_at(&BigInt::from(m));
        if q.is_zero() {
            Side::Infinite
        } else if q.is_positive() {
            Side::Plus
        } else {
            Side::Minus
        }
    }

    /// The real root `x = -(sw + uv)/(uw)` of `Q`.
    ///
    /// For `n >= 2` it lies in `(-2, 0)`, and in `(-1, 0)` when the free slot
    /// is the first. For `n = 1` it is `0` and the result is flagged.
    pub fn q_root(&self) -> Result<QRoot> {
        let value =
            ExtendedRational::from_column(-self.q_coeffs.1.clone(), self.q_coeffs.0.clone())?;
        let single_term = self.n() == 1;
        if !single_term {
            let lower = if self.slot == 1 { -1 } else { -2 };
            let lo = ExtendedRational::integer(lower);
            if !(lo < value && value < ExtendedRational::zero()) {
                return Err(Error::Invariant(format!(
                    "root {value} of Q for {} is outside ({lower}, 0)",
                    self.pattern()
                )));
            }
        }
        Ok(QRoot {
            value,
            single_term,
        })
    }

    /// Exact `|ν(α_m) - (γ, 0)|²` for `m = 0..=max_m` and `m = -1..=-max_m`.
    pub fn distance_profile(&self, max_m: u64) -> DistanceProfile {
        let anchor = PlanePoint::on_axis(self.gamma.to_rational().expect("finite gamma"));
        let entry = |m: i64| DistanceEntry {
            m,
            dist2: nu(&self.alpha_m(m)).dist2(&anchor),
        };
        let max_m = max_m as i64;
        DistanceProfile {
            forward: (0..=max_m).map(entry).collect(),
            backward: (1..=max_m).map(|k| entry(-k)).collect(),
        }
    }

    /// The other family on the same pair of lines.
    ///
    /// `[…, a, _, …]` with `a >= 2` pairs with `[…, a-1, 1, _, …]` and back:
    /// `X_{a-1} X_1` and `X_a` share their second column, so `γ` and `u` (and
    /// hence `|slope| = u/w`) agree, while the determinant changes sign and
    /// swaps the roles of `ℓ⁺` and `ℓ⁻`. When `i = 1` the split applies to `a0`.
    pub fn partner(&self) -> Result<Self> {
        let a = self.base.terms();
        let i = self.slot;
        let mut terms: Vec<BigInt> = Vec::with_capacity(a.len() + 1);
        let one = BigInt::one();
        let new_slot = if i == 1 || a[i - 1] > one {
            terms.extend_from_slice(&a[..i - 1]);
            terms.push(&a[i - 1] - 1);
            terms.push(one);
            terms.extend_from_slice(&a[i..]);
            i + 1
        } else {
            terms.extend_from_slice(&a[..i - 2]);
            terms.push(&a[i - 2] + 1);
            terms.extend_from_slice(&a[i..]);
            i - 1
        };
        let partner = Self::new(&CfSequence::new(terms)?, new_slot)?;
        if !lines_coincide(self, &partner)? {
            return Err(Error::Invariant(format!(
                "{} and {} do not share their lines",
                self.pattern(),
                partner.pattern()
            )));
        }
        Ok(partner)
    }

    pub fn report(&self, m_range: std::ops::RangeInclusive<i64>) -> Result<LinesReport> {
        let (plus, _) = self.lines()?;
        let sp = self.shifted_p_coeffs();
        Ok(LinesReport {
            pattern: self.pattern(),
            gamma: self.gamma.clone(),
            p: [sp.0.to_string(), sp.1.to_string()],
            q: [self.q_coeffs.0.to_string(), self.q_coeffs.1.to_string()],
            root: self.q_root()?.value,
            line_plus: plus,
            points: m_range
                .map(|m| PointRow {
                    m,
                    alpha: self.alpha_m(m),
                    side: self.classify(m),
                })
                .collect(),
        })
    }
}

/// Both families carry the same unordered pair `{ℓ⁺, ℓ⁻}`.
pub fn lines_coincide(f: &LineFamily, g: &LineFamily) -> Result<bool> {
    let (fp, fm) = f.lines()?;
    let (gp, gm) = g.lines()?;
    Ok((fp.same_line(&gp) && fm.same_line(&gm)) || (fp.same_line(&gm) && fm.same_line(&gp)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRoot {
    pub value: ExtendedRational,
    /// `n = 1`: `Q(m) = m` and the root sits at 0.
    pub single_term: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceEntry {
    pub m: i64,
    /// `None` where `ν(α_m)` is the infinite point.
    pub dist2: Option<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceProfile {
    /// `m = 0, 1, 2, ...`
    pub forward: Vec<DistanceEntry>,
    /// `m = -1, -2, -3, ...`
    pub backward: Vec<DistanceEntry>,
}

fn strictly_decreasing(entries: &[DistanceEntry]) -> bool {
    entries
        .windows(2)
        .all(|w| match (&w[0].dist2, &w[1].dist2) {
            (Some(a), Some(b)) => b < a,
            _ => false,
        })
}

impl DistanceProfile {
    /// Strictly decreasing over `m >= 0` after the last infinite entry.
    pub fn forward_monotone(&self) -> bool {
        let start = self
            .forward
            .iter()
            .rposition(|e| e.dist2.is_none())
            .map_or(0, |k| k + 1);
        strictly_decreasing(&self.forward[start..])
    }

    /// Strictly decreasing over `m <= -2`; `m = -1` is not constrained.
    pub fn backward_monotone(&self) -> bool {
        self.backward.len() < 2 || strictly_decreasing(&self.backward[1..])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointRow {
    pub m: i64,
    pub alpha: ExtendedRational,
    pub side: Side,
}

/// JSON shape of a line family. `P` includes the translation by `a0`.
#[derive(Clone, Debug, Serialize)]
pub struct LinesReport {
    pub pattern: String,
    pub gamma: ExtendedRational,
    #[serde(rename = "P")]
    pub p: [String; 2],
    #[serde(rename = "Q")]
    pub q: [String; 2],
    pub root: ExtendedRational,
    pub line_plus: ExtendedLine,
    pub points: Vec<PointRow>,
}

impl fmt::Display for LinesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family  {}", self.pattern)?;
        writeln!(f, "gamma   {}", self.gamma)?;
        writeln!(f, "P(m)    {} m + {}", self.p[0], self.p[1])?;
        writeln!(f, "Q(m)    {} m + {}", self.q[0], self.q[1])?;
        writeln!(f, "root    {}", self.root)?;
        match self.line_plus.slope() {
            Some(k) => writeln!(
                f,
                "l+      slope {} through ({}, 0)",
                format_rational(&k),
                self.gamma
            )?,
            None => writeln!(f, "l+      vertical through ({}, 0)", self.gamma)?,
        }
        writeln!(f, "{:>6}  {:>16}  side", "m", "alpha_m")?;
        for row in &self.points {
            writeln!(
                f,
                "{:>6}  {:>16}  {}",
                row.m,
                row.alpha.to_string(),
                row.side
            )?;
        }
        Ok(())
    }
}
