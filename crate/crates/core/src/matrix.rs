//! 2×2 integer matrices and their Möbius action on extended rationals.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::ExtendedRational;

/// Row-major `(a b; c d)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    /// `X_a = (0 1; 1 a)`, the building block of continued fractions.
    pub fn x(a: &BigInt) -> Self {
        Self {
            a: BigInt::zero(),
            b: BigInt::one(),
            c: BigInt::one(),
            d: a.clone(),
        }
    }

    /// `(1 k; 0 1)`, translation by `k`.
    pub fn shift(k: &BigInt) -> Self {
        Self {
            a: BigInt::one(),
            b: k.clone(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Column `j` (0 or 1) as `(top, bottom)`.
    pub fn column(&self, j: usize) -> (BigInt, BigInt) {
        match j {
            0 => (self.a.clone(), self.c.clone()),
            1 => (self.b.clone(), self.d.clone()),
            _ => panic!("column index {j} out of range"),
        }
    }

    /// Row `i` (0 or 1) as `(left, right)`.
    pub fn row(&self, i: usize) -> (BigInt, BigInt) {
        match i {
            0 => (self.a.clone(), self.b.clone()),
            1 => (self.c.clone(), self.d.clone()),
            _ => panic!("row index {i} out of range"),
        }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn apply(&self, v: &(BigInt, BigInt)) -> (BigInt, BigInt) {
        (
            &self.a * &v.0 + &self.b * &v.1,
            &self.c * &v.0 + &self.d * &v.1,
        )
    }

    /// Right-multiplies in place by `X_t`.
    pub fn push_x(&mut self, t: &BigInt) {
        // (a b; c d)(0 1; 1 t) = (b, a + bt; d, c + dt)
        let new_b = &self.a + &self.b * t;
        let new_d = &self.c + &self.d * t;
        self.a = std::mem::replace(&mut self.b, new_b);
        self.c = std::mem::replace(&mut self.d, new_d);
    }
}

impl Mul for &IntMat2 {
    type Output = IntMat2;

    fn mul(self, rhs: &IntMat2) -> IntMat2 {
        IntMat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `B_j = X_{t_1} ⋯ X_{t_j}`; the empty product is the identity.
pub fn b_matrix(terms: &[BigInt]) -> IntMat2 {
    let mut m = IntMat2::identity();
    for t in terms {
        m.push_x(t);
    }
    m
}

/// The Möbius map of a nonsingular `M`, defined through the quotient map
/// `(p, q) ↦ p/q` so that `φ_M(p/q) = θ(M (p, q)ᵀ)`. In particular
/// `φ_M(1/0) = a/c`.
pub fn mobius_apply(m: &IntMat2, x: &ExtendedRational) -> Result<ExtendedRational> {
    if m.det().is_zero() {
        return Err(Error::SingularMatrix(m.to_string()));
    }
    let (p, q) = m.apply(&(x.numer().clone(), x.denom().clone()));
    ExtendedRational::from_column(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&t| BigInt::from(t)).collect()
    }

    #[test]
    fn b_matrix_examples() {
        assert_eq!(b_matrix(&[]), IntMat2::identity());
        assert_eq!(b_matrix(&ints(&[2, 1])), IntMat2::new(1, 1, 2, 3));
        assert_eq!(b_matrix(&ints(&[3])), IntMat2::new(0, 1, 1, 3));
    }

    #[test]
    fn push_x_matches_product() {
        let mut m = IntMat2::new(2, -5, 7, 3);
        let t = BigInt::from(-4);
        let expected = &m * &IntMat2::x(&t);
        m.push_x(&t);
        assert_eq!(m, expected);
    }

    #[test]
    fn mobius_examples() {
        let q = |p: i64, d: i64| ExtendedRational::new(p, d).unwrap();
        let x3 = IntMat2::x(&BigInt::from(3));
        assert_eq!(mobius_apply(&x3, &q(1, 2)).unwrap(), q(2, 7));
        assert_eq!(
            mobius_apply(&IntMat2::identity(), &q(-9, 4)).unwrap(),
            q(-9, 4)
        );
        let refl = IntMat2::new(-1, 1, 0, 1);
        assert_eq!(mobius_apply(&refl, &q(5, 9)).unwrap(), q(4, 9));
        // φ(1/0) = a/c
        let m = IntMat2::new(2, 1, 3, 2);
        assert_eq!(
            mobius_apply(&m, &ExtendedRational::infinity()).unwrap(),
            q(2, 3)
        );
        assert!(matches!(
            mobius_apply(&IntMat2::new(2, 4, 1, 2), &q(1, 2)),
            Err(Error::SingularMatrix(_))
        ));
    }
}
