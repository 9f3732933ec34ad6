//! Rational Borel equivariant cohomology of cohomogeneity-one actions,
//! computed from Weyl-group data by exact linear algebra.
//!
//! The [`cohomology`] module produces closed-form ring presentations and the
//! degreewise Mayer-Vietoris model; [`verify`] re-derives the dimension
//! series independently and compares.

pub mod algebra;
pub mod cohomology;
pub mod error;
pub mod groups;
pub mod invariants;
pub mod verify;

pub use error::{AlgebraError, CohomologyError, GroupError};
