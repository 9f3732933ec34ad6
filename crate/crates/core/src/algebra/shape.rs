//! Catalogue of closed-form ring shapes and their graded dimension series.

use num_traits::{One, Zero};

use super::series::PoincareSeries;
use crate::error::AlgebraError;

/// A graded-connected commutative ring described by its dimension series,
/// or as a free polynomial ring on even-degree generators.
#[derive(Clone, Debug, PartialEq)]
pub enum BaseRing {
    /// Free polynomial ring; generator degrees (even, positive).
    Polynomial(Vec<usize>),
    /// Any ring with the given dimension series (e.g. a Molien series).
    Series(PoincareSeries),
}

#[derive(Clone, Debug, PartialEq)]
pub enum PresentationShape {
    /// The base ring itself.
    FreePolynomial(BaseRing),
    /// base ⊗ Λ(z), deg z = `sphere_degree` (odd).
    TensorExterior { base: BaseRing, sphere_degree: usize },
    /// base[e₋, e₊] / (e₋ e₊).
    TwoNilpotents {
        base: BaseRing,
        minus_degree: usize,
        plus_degree: usize,
    },
    /// even_leg ⊕ e·base[e] inside base[e].
    EvenLegPlusEulerIdeal {
        even_leg: BaseRing,
        base: BaseRing,
        euler_degree: usize,
    },
    /// Tabulated fiber product (even part) and cokernel (odd part).
    FiberProductGeneric { even: PoincareSeries, odd: PoincareSeries },
}

impl PresentationShape {
    pub fn tag(&self) -> &'static str {
        match self {
            PresentationShape::FreePolynomial(_) => "free-polynomial",
            PresentationShape::TensorExterior { .. } => "tensor-with-exterior",
            PresentationShape::TwoNilpotents { .. } => "adjoin-two-nilpotents",
            PresentationShape::EvenLegPlusEulerIdeal { .. } => "even-leg-plus-euler-ideal",
            PresentationShape::FiberProductGeneric { .. } => "fiber-product-generic",
        }
    }
}

fn unsupported(reason: String) -> AlgebraError {
    AlgebraError::UnsupportedShape(reason)
}

fn base_series(base: &BaseRing, n: usize) -> Result<PoincareSeries, AlgebraError> {
    match base {
        BaseRing::Polynomial(degrees) => {
            let mut s = PoincareSeries::one(n);
            for &d in degrees {
                if d == 0 || d % 2 == 1 {
                    return Err(unsupported(format!(
                        "polynomial generator of degree {d} (must be even and positive)"
                    )));
                }
                s = s.mul(&PoincareSeries::geometric(n, d));
            }
            Ok(s)
        }
        BaseRing::Series(s) => {
            if s.truncation() < n {
                return Err(unsupported(format!(
                    "base series truncated at {} < {n}",
                    s.truncation()
                )));
            }
            if !s.coeff(0).is_one() {
                return Err(unsupported("base ring is not connected (c_0 != 1)".into()));
            }
            Ok(s.truncate(n))
        }
    }
}

/// t^d / (1 - t^d)
fn positive_powers(n: usize, d: usize) -> PoincareSeries {
    PoincareSeries::geometric(n, d).sub(&PoincareSeries::one(n))
}

/// Graded dimension series of a catalogue shape, truncated at degree `n`.
pub fn series_from_shape(shape: &PresentationShape, n: usize) -> Result<PoincareSeries, AlgebraError> {
    match shape {
        PresentationShape::FreePolynomial(base) => base_series(base, n),
        PresentationShape::TensorExterior { base, sphere_degree } => {
            if sphere_degree % 2 == 0 {
                return Err(unsupported(format!(
                    "exterior generator of even degree {sphere_degree}"
                )));
            }
            Ok(base_series(base, n)?.mul(&PoincareSeries::one_plus(n, *sphere_degree)))
        }
        PresentationShape::TwoNilpotents {
            base,
            minus_degree,
            plus_degree,
        } => {
            if *minus_degree == 0 || *plus_degree == 0 {
                return Err(unsupported("nilpotent generator of degree 0".into()));
            }
            let extra = positive_powers(n, *minus_degree).add(&positive_powers(n, *plus_degree));
            Ok(base_series(base, n)?.mul(&PoincareSeries::one(n).add(&extra)))
        }
        PresentationShape::EvenLegPlusEulerIdeal {
            even_leg,
            base,
            euler_degree,
        } => {
            if *euler_degree == 0 {
                return Err(unsupported("Euler class of degree 0".into()));
            }
            let leg = base_series(even_leg, n)?;
            let ideal = base_series(base, n)?.mul(&positive_powers(n, *euler_degree));
            Ok(leg.add(&ideal))
        }
        PresentationShape::FiberProductGeneric { even, odd } => {
            if even.truncation() < n || odd.truncation() < n {
                return Err(unsupported("tabulated series shorter than requested".into()));
            }
            if let Some(d) = (0..=n).find(|d| d % 2 == 1 && !even.coeff(*d).is_zero()) {
                return Err(unsupported(format!("even part nonzero in odd degree {d}")));
            }
            if let Some(d) = (0..=n).find(|d| d % 2 == 0 && !odd.coeff(*d).is_zero()) {
                return Err(unsupported(format!("odd part nonzero in even degree {d}")));
            }
            Ok(even.add(odd).truncate(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_one_generator() {
        let s = series_from_shape(&PresentationShape::FreePolynomial(BaseRing::Polynomial(vec![4])), 12).unwrap();
        assert_eq!(s.dims().unwrap(), vec![1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn polynomial_tensor_exterior() {
        // (1 + t^3) / (1 - t^4)
        let shape = PresentationShape::TensorExterior {
            base: BaseRing::Polynomial(vec![4]),
            sphere_degree: 3,
        };
        let s = series_from_shape(&shape, 8).unwrap();
        assert_eq!(s.dims().unwrap(), vec![1, 0, 0, 1, 1, 0, 0, 1, 1]);
    }

    #[test]
    fn two_nilpotents_over_q() {
        let shape = PresentationShape::TwoNilpotents {
            base: BaseRing::Polynomial(vec![]),
            minus_degree: 4,
            plus_degree: 4,
        };
        let s = series_from_shape(&shape, 8).unwrap();
        assert_eq!(s.dims().unwrap(), vec![1, 0, 0, 0, 2, 0, 0, 0, 2]);
    }

    #[test]
    fn unsupported_shapes() {
        let odd_gen = PresentationShape::FreePolynomial(BaseRing::Polynomial(vec![3]));
        assert!(series_from_shape(&odd_gen, 8).is_err());
        let even_sphere = PresentationShape::TensorExterior {
            base: BaseRing::Polynomial(vec![]),
            sphere_degree: 4,
        };
        assert!(series_from_shape(&even_sphere, 8).is_err());
        let short = PresentationShape::FreePolynomial(BaseRing::Series(PoincareSeries::one(4)));
        assert!(series_from_shape(&short, 8).is_err());
    }
}
