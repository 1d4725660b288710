//! Extended rationals `p/q` (with the single infinite value `1/0`), Farey
//! predicates, and the vertex map `p/q ↦ (p/q, 1/q)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction with non-negative denominator, or the point `1/0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtendedRational {
    num: BigInt,
    den: BigInt,
}

impl ExtendedRational {
    /// Normalizes `p/q`: lowest terms, sign on the numerator, and every
    /// `p/0` with `p != 0` collapsed to `1/0`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        Self::from_column(p.into(), q.into())
    }

    /// The quotient of a nonzero integer column `(p, q)`.
    pub fn from_column(p: BigInt, q: BigInt) -> Result<Self> {
        if q.is_zero() {
            if p.is_zero() {
                return Err(Error::ZeroOverZero);
            }
            return Ok(Self::infinity());
        }
        let g = p.gcd(&q);
        let (mut num, mut den) = (p / &g, q / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Self { num, den })
    }

    pub fn infinity() -> Self {
        Self {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn integer(k: impl Into<BigInt>) -> Self {
        Self {
            num: k.into(),
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn from_rational(r: &BigRational) -> Self {
        // BigRational is already reduced with a positive denominator.
        Self {
            num: r.numer().clone(),
            den: r.denom().clone(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_infinite() {
            None
        } else {
            Some(BigRational::new_raw(self.num.clone(), self.den.clone()))
        }
    }

    /// Finite value or an [`Error::Infinite`].
    pub fn finite(&self) -> Result<BigRational> {
        self.to_rational()
            .ok_or_else(|| Error::Infinite(self.to_string()))
    }

    /// Greatest integer `<= self`. `None` for `1/0`.
    pub fn floor(&self) -> Option<BigInt> {
        if self.is_infinite() {
            None
        } else {
            Some(self.num.div_floor(&self.den))
        }
    }

    /// `self + k`; the infinite point is fixed.
    pub fn translate(&self, k: &BigInt) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        Self {
            num: &self.num + k * &self.den,
            den: self.den.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// `ps - rq` for `self = p/q`, `other = r/s`.
    pub fn det(&self, other: &Self) -> BigInt {
        &self.num * &other.den - &other.num * &self.den
    }
}

impl Ord for ExtendedRational {
    /// Numeric order on finite values; `1/0` sorts above everything.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("{}/{}", self.num, self.den))
    }
}

impl fmt::Debug for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in {s:?}")))
        };
        match s.split_once('/') {
            Some((p, q)) => Self::new(parse_int(p)?, parse_int(q)?),
            None => Ok(Self::integer(parse_int(s)?)),
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtendedRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for ExtendedRational {
    fn from(k: i64) -> Self {
        Self::integer(k)
    }
}

/// Formats a rational as `p/q`, including a unit denominator.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// A point of the extended plane `R² ∪ {∞}` with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PlanePoint {
    Finite { x: BigRational, y: BigRational },
    Infinity,
}

impl PlanePoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        PlanePoint::Finite { x, y }
    }

    pub fn on_axis(x: BigRational) -> Self {
        PlanePoint::Finite {
            x,
            y: BigRational::zero(),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, PlanePoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&BigRational, &BigRational)> {
        match self {
            PlanePoint::Finite { x, y } => Some((x, y)),
            PlanePoint::Infinity => None,
        }
    }

    /// Mirror image across the x-axis.
    pub fn reflect(&self) -> Self {
        match self {
            PlanePoint::Finite { x, y } => PlanePoint::Finite {
                x: x.clone(),
                y: -y,
            },
            PlanePoint::Infinity => PlanePoint::Infinity,
        }
    }

    /// Squared Euclidean distance, `None` if either point is infinite.
    pub fn dist2(&self, other: &Self) -> Option<BigRational> {
        let (x0, y0) = self.coords()?;
        let (x1, y1) = other.coords()?;
        let dx = x1 - x0;
        let dy = y1 - y0;
        Some(&dx * &dx + &dy * &dy)
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanePoint::Finite { x, y } => {
                write!(f, "({}, {})", format_rational(x), format_rational(y))
            }
            PlanePoint::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for PlanePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            PlanePoint::Finite { x, y } => {
                let mut st = serializer.serialize_struct("PlanePoint", 2)?;
                st.serialize_field("x", &format_rational(x))?;
                st.serialize_field("y", &format_rational(y))?;
                st.end()
            }
            PlanePoint::Infinity => serializer.serialize_str("inf"),
        }
    }
}

/// `{p/q, r/s}` with `ps - rq = ±1`.
pub fn is_farey_pair(a: &ExtendedRational, b: &ExtendedRational) -> bool {
    a.det(b).abs().is_one()
}

/// Three values that are pairwise Farey pairs.
pub fn is_farey_triple(a: &ExtendedRational, b: &ExtendedRational, c: &ExtendedRational) -> bool {
    is_farey_pair(a, b) && is_farey_pair(b, c) && is_farey_pair(a, c)
}

/// `(p+r)/(q+s)` for a Farey pair `{p/q, r/s}`.
pub fn mediant(a: &ExtendedRational, b: &ExtendedRational) -> Result<ExtendedRational> {
    if !is_farey_pair(a, b) {
        return Err(Error::NotFareyPair(a.to_string(), b.to_string()));
    }
    ExtendedRational::from_column(&a.num + &b.num, &a.den + &b.den)
}

/// The vertex map `p/q ↦ (p/q, 1/q)`; `1/0` goes to the infinite point.
pub fn nu(a: &ExtendedRational) -> PlanePoint {
    match a.to_rational() {
        None => PlanePoint::Infinity,
        Some(x) => PlanePoint::Finite {
            x,
            y: BigRational::new_raw(BigInt::one(), a.den.clone()),
        },
    }
}
