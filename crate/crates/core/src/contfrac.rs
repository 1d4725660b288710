//! Finite continued fractions `[a0; a1, ..., an]` evaluated exactly through
//! products of `X_a = (0 1; 1 a)`.
//!
//! Terms after `a0` may be zero or negative. Such sequences can pass through
//! `1/0` part way if evaluated as nested fractions; the matrix product never
//! does, so it is the definition used everywhere in this crate.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{b_matrix, IntMat2};
use crate::rational::ExtendedRational;

/// A nonempty integer sequence `(a0, ..., an)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CfSequence {
    terms: Vec<BigInt>,
}

impl CfSequence {
    pub fn new(terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { terms })
    }

    pub fn from_i64s(terms: &[i64]) -> Result<Self> {
        Self::new(terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn a0(&self) -> &BigInt {
        &self.terms[0]
    }

    /// `(a1, ..., an)`.
    pub fn tail(&self) -> &[BigInt] {
        &self.terms[1..]
    }

    /// Index of the last term.
    pub fn n(&self) -> usize {
        self.terms.len() - 1
    }

    /// `a_j >= 1` for `j >= 1` and `a_n >= 2`. A lone `(a0)` counts as
    /// standard; the last-term clause is vacuous there.
    pub fn is_standard(&self) -> bool {
        let tail = self.tail();
        match tail.last() {
            None => true,
            Some(last) => tail.iter().all(|t| t.is_positive()) && *last >= BigInt::from(2),
        }
    }

    pub fn ensure_standard(&self) -> Result<()> {
        if self.is_standard() {
            Ok(())
        } else {
            Err(Error::NotStandard(self.to_string()))
        }
    }

    /// Copy with term `j` replaced by `value`.
    pub fn with_term(&self, j: usize, value: BigInt) -> Self {
        let mut terms = self.terms.clone();
        terms[j] = value;
        Self { terms }
    }

    /// The first `k + 1` terms.
    pub fn prefix(&self, k: usize) -> Self {
        Self {
            terms: self.terms[..=k].to_vec(),
        }
    }

    pub fn negated(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|t| -t).collect(),
        }
    }
}

impl fmt::Display for CfSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.terms[0])?;
        for (k, t) in self.tail().iter().enumerate() {
            f.write_str(if k == 0 { ";" } else { "," })?;
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for CfSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CfSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One slot of a bracketed sequence: a number or the hole `_`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Int(BigInt),
    Hole,
}

/// Parses `[a0;a1,...,an]` (or `[a0]`). Holes are returned as [`Term::Hole`];
/// callers that do not accept them should use [`CfSequence::from_str`].
pub fn parse_terms(s: &str) -> Result<Vec<Term>> {
    let bad = |why: &str| Error::Parse(format!("{why} in {s:?}"));
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| bad("expected brackets"))?;
    let (head, rest) = match inner.split_once(';') {
        Some((h, r)) => (h, Some(r)),
        None => (inner, None),
    };
    let term = |t: &str| -> Result<Term> {
        let t = t.trim();
        if t == "_" {
            return Ok(Term::Hole);
        }
        let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(&format!("bad term {t:?}")));
        }
        Ok(Term::Int(t.parse().map_err(|_| bad("bad integer"))?))
    };
    let mut out = vec![term(head)?];
    if let Some(rest) = rest {
        for t in rest.split(',') {
            out.push(term(t)?);
        }
    }
    Ok(out)
}

impl FromStr for CfSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = parse_terms(s)?
            .into_iter()
            .map(|t| match t {
                Term::Int(v) => Ok(v),
                Term::Hole => Err(Error::Parse(format!("unexpected hole in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        CfSequence::new(terms)
    }
}

/// `[a0; a1, ..., an]` as the column `(1 a0; 0 1) X_{a1} ⋯ X_{an} (0, 1)ᵀ`.
/// Total: the result is `1/0` when the bottom entry vanishes.
pub fn evaluate(seq: &CfSequence) -> ExtendedRational {
    let (p, q) = column_value(seq.a0(), seq.tail());
    ExtendedRational::from_column(p, q).expect("unimodular product never yields (0, 0)")
}

fn column_value(a0: &BigInt, tail: &[BigInt]) -> (BigInt, BigInt) {
    // X_t (x, y)ᵀ = (y, x + t y)
    let mut v = (BigInt::zero(), BigInt::one());
    for t in tail.iter().rev() {
        let top = std::mem::take(&mut v.1);
        v.1 = &v.0 + t * &top;
        v.0 = top;
    }
    (&v.0 + a0 * &v.1, v.1)
}

/// The unique standard sequence of a finite value, via the floor-based
/// Euclidean algorithm.
pub fn standard_expansion(x: &ExtendedRational) -> Result<CfSequence> {
    if x.is_infinite() {
        return Err(Error::Infinite(x.to_string()));
    }
    let (mut p, mut q) = (x.numer().clone(), x.denom().clone());
    let mut terms = Vec::new();
    loop {
        let (a, r) = p.div_mod_floor(&q);
        terms.push(a);
        if r.is_zero() {
            break;
        }
        p = std::mem::replace(&mut q, r);
    }
    if terms.len() >= 2 && terms.last().is_some_and(|t| t.is_one()) {
        terms.pop();
        *terms.last_mut().unwrap() += 1;
    }
    CfSequence::new(terms)
}

/// `c_j = [a0; a1, ..., a_j]` for `j = 0..=n`, read off the second column of
/// the running product `(1 a0; 0 1) X_{a1} ⋯ X_{a_j}`.
pub fn convergents(seq: &CfSequence) -> Vec<ExtendedRational> {
    let mut m = IntMat2::shift(seq.a0());
    let mut out = Vec::with_capacity(seq.terms().len());
    let col = |m: &IntMat2| {
        ExtendedRational::from_column(m.b.clone(), m.d.clone())
            .expect("column of unimodular matrix")
    };
    out.push(col(&m));
    for t in seq.tail() {
        m.push_x(t);
        out.push(col(&m));
    }
    out
}

/// Where `[0; a1, ..., aj]` falls for positive terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RangeClass {
    /// `a1 >= 2`: value in `(0, 1/2]`.
    Low,
    /// `a1 = 1`: value in `[1/2, 1]`.
    High,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeReport {
    pub class: RangeClass,
    pub value: ExtendedRational,
    /// Only `(1)` reaches the upper bound 1.
    pub equals_one: bool,
}

pub fn classify_range(terms: &[BigInt]) -> Result<RangeReport> {
    if terms.is_empty() {
        return Err(Error::EmptySequence);
    }
    if let Some(bad) = terms.iter().find(|t| !t.is_positive()) {
        return Err(Error::NonPositiveTerm(bad.to_string()));
    }
    let class = if terms[0].is_one() {
        RangeClass::High
    } else {
        RangeClass::Low
    };
    let equals_one = terms.len() == 1 && terms[0].is_one();
    let m = b_matrix(terms);
    let value = ExtendedRational::from_column(m.b, m.d)?;
    Ok(RangeReport {
        class,
        value,
        equals_one,
    })
}
