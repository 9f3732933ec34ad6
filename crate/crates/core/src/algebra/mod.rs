//! Exact scalars, matrices, graded polynomials and truncated series.

pub mod cyclotomic;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod shape;

pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use matrix::Matrix;
pub use poly::{homogeneous_monomials, Exponents, GradedPolynomial, Polynomial};
pub use scalar::{frac, rat, Coeff, Rational, Scalar};
pub use series::PoincareSeries;
pub use shape::{series_from_shape, BaseRing, PresentationShape};
