use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::Cyclotomic;
use crate::error::AlgebraError;

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Field element usable as a polynomial or matrix coefficient.
///
/// Elements carry their own field context (a cyclotomic element knows its
/// conductor), so zero and one are produced from an existing element.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn embed_rational(&self, q: &Rational) -> Self;

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }
}

impl Coeff for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn embed_rational(&self, q: &Rational) -> Self {
        q.clone()
    }
    fn is_one_elem(&self) -> bool {
        One::is_one(self)
    }
}

/// A coefficient-domain element: a rational, or an element of a cyclotomic
/// field Q(zeta_k). Operations between different fields are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Cyclotomic(Cyclotomic),
}

impl Scalar {
    fn check_same_field(&self, other: &Scalar) -> Result<(), AlgebraError> {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => Ok(()),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) if a.conductor() == b.conductor() => Ok(()),
            _ => Err(AlgebraError::FieldMismatch {
                left: self.field_name(),
                right: other.field_name(),
            }),
        }
    }

    pub fn field_name(&self) -> String {
        match self {
            Scalar::Rational(_) => "Q".to_string(),
            Scalar::Cyclotomic(c) => format!("Q(zeta_{})", c.conductor()),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.mul_ref(b)),
            _ => unreachable!(),
        })
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.add_ref(b)),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        self.check_same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.sub_ref(b)),
            _ => unreachable!(),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        self.check_same_field(other)?;
        let inv = match other {
            Scalar::Rational(b) => Coeff::inv(b).map(Scalar::Rational),
            Scalar::Cyclotomic(b) => b.inv().map(Scalar::Cyclotomic),
        };
        match inv {
            Some(inv) => self.mul(&inv),
            None => Err(AlgebraError::DivisionByZero),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(a) => Zero::is_zero(a),
            Scalar::Cyclotomic(c) => c.is_zero(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(a) => write!(f, "{a}"),
            Scalar::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

/// Parenthesize a coefficient for display in a sum when it is a compound
/// expression.
pub(crate) fn display_coeff<F: Coeff>(c: &F) -> String {
    let s = c.to_string();
    if s.contains(['+', ' ']) || s[1..].contains('-') {
        format!("({s})")
    } else {
        s
    }
}

pub(crate) fn is_negative_rational(q: &Rational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclotomic::CyclotomicField;

    #[test]
    fn rational_product() {
        let a = Scalar::Rational(frac(2, 3));
        let b = Scalar::Rational(frac(-3, 4));
        assert_eq!(a.mul(&b).unwrap(), Scalar::Rational(frac(-1, 2)));
    }

    #[test]
    fn rationals_are_normalized() {
        let q = frac(6, -8);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(4));
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Scalar::Rational(rat(1));
        let z = Scalar::Cyclotomic(CyclotomicField::new(3).zeta());
        assert!(matches!(a.mul(&z), Err(AlgebraError::FieldMismatch { .. })));
        let w = Scalar::Cyclotomic(CyclotomicField::new(4).zeta());
        assert!(z.mul(&w).is_err());
    }

    #[test]
    fn zeta4_squared() {
        let z = Scalar::Cyclotomic(CyclotomicField::new(4).zeta());
        let sq = z.mul(&z).unwrap();
        let f = CyclotomicField::new(4);
        assert_eq!(sq, Scalar::Cyclotomic(f.from_rational(&rat(-1))));
    }

    #[test]
    fn zeta3_squared() {
        let f = CyclotomicField::new(3);
        let z = Scalar::Cyclotomic(f.zeta());
        let sq = z.mul(&z).unwrap();
        let expected = f.from_coeffs(vec![rat(-1), rat(-1)]);
        assert_eq!(sq, Scalar::Cyclotomic(expected));
    }

    #[test]
    fn division_by_zero() {
        let a = Scalar::Rational(rat(1));
        let z = Scalar::Rational(rat(0));
        assert_eq!(a.div(&z), Err(AlgebraError::DivisionByZero));
    }
}
