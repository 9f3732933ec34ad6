use std::fmt;

use num_traits::{One, Zero};

use super::scalar::{rat, Rational};

/// Power series in t truncated at cohomological degree `truncation`;
/// coefficient `i` is the coefficient of t^i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareSeries {
    coeffs: Vec<Rational>,
}

impl PoincareSeries {
    pub fn zero(truncation: usize) -> Self {
        PoincareSeries {
            coeffs: vec![Rational::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        Self::monomial(truncation, 0, Rational::one())
    }

    /// c * t^d (zero if d exceeds the truncation).
    pub fn monomial(truncation: usize, d: usize, c: Rational) -> Self {
        let mut s = Self::zero(truncation);
        if d <= truncation {
            s.coeffs[d] = c;
        }
        s
    }

    pub fn from_coeffs(truncation: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(truncation + 1, Rational::zero());
        PoincareSeries { coeffs }
    }

    pub fn from_ints(truncation: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(truncation, coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Graded dimension series from per-degree dimensions.
    pub fn from_dims(dims: &[usize]) -> Self {
        PoincareSeries {
            coeffs: dims.iter().map(|&d| rat(d as i64)).collect(),
        }
    }

    /// 1 + t^d
    pub fn one_plus(truncation: usize, d: usize) -> Self {
        Self::one(truncation).add(&Self::monomial(truncation, d, Rational::one()))
    }

    /// 1 - t^d
    pub fn one_minus(truncation: usize, d: usize) -> Self {
        Self::one(truncation).add(&Self::monomial(truncation, d, -Rational::one()))
    }

    /// 1 / (1 - t^d) for d > 0.
    pub fn geometric(truncation: usize, d: usize) -> Self {
        assert!(d > 0);
        let mut s = Self::zero(truncation);
        for i in (0..=truncation).step_by(d) {
            s.coeffs[i] = Rational::one();
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::from_coeffs(n, self.coeffs[..=n.min(self.truncation())].to_vec())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.truncation().min(rhs.truncation());
        PoincareSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.truncation().min(rhs.truncation());
        PoincareSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PoincareSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.truncation().min(rhs.truncation());
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let n = self.truncation();
        let mut out = Self::zero(n);
        out.coeffs[0] = inv0.clone();
        for d in 1..=n {
            let mut s = Rational::zero();
            for i in 1..=d {
                if !self.coeffs[i].is_zero() {
                    s += &self.coeffs[i] * &out.coeffs[d - i];
                }
            }
            out.coeffs[d] = -s * &inv0;
        }
        Some(out)
    }

    /// Substitute t -> t^k.
    pub fn stretch(&self, k: usize) -> Self {
        let n = self.truncation();
        let mut out = Self::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > n {
                break;
            }
            out.coeffs[i * k] = c.clone();
        }
        out
    }

    /// Coefficients as nonnegative integers, when they all are.
    pub fn dims(&self) -> Option<Vec<usize>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() && *c >= Rational::zero() {
                    c.to_integer().try_into().ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// First degree where two series differ, up to the smaller truncation.
    pub fn first_difference(&self, rhs: &Self) -> Option<usize> {
        let n = self.truncation().min(rhs.truncation());
        (0..=n).find(|&i| self.coeffs[i] != rhs.coeffs[i])
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.truncation() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        let g = PoincareSeries::geometric(12, 4);
        assert_eq!(g.inverse().unwrap(), PoincareSeries::one_minus(12, 4));
        assert_eq!(g.mul(&PoincareSeries::one_minus(12, 4)), PoincareSeries::one(12));
    }

    #[test]
    fn exterior_times_polynomial() {
        let s = PoincareSeries::geometric(8, 4).mul(&PoincareSeries::one_plus(8, 3));
        assert_eq!(s.dims().unwrap(), vec![1, 0, 0, 1, 1, 0, 0, 1, 1]);
    }

    #[test]
    fn stretch_and_difference() {
        let s = PoincareSeries::geometric(10, 1).stretch(2);
        assert_eq!(s, PoincareSeries::geometric(10, 2));
        assert_eq!(s.first_difference(&PoincareSeries::geometric(10, 4)), Some(2));
        assert_eq!(s.first_difference(&s), None);
    }
}
