//! Equivariant cohomology of cohomogeneity-one actions.
//!
//! An interval action is described by the isotropy data H < K± together
//! with torus embeddings and the sphere dimensions of K±/H; a circle action
//! by a group K and the automorphism of its torus induced by translation
//! around the circle.

mod euler;
mod model;
mod present;
mod trichotomy;
mod validate;

use std::fmt;

pub use euler::{euler_generator, EulerClass};
pub use model::{IntervalModel, MVClass, MVDegree, Side};
pub use present::{
    mapping_torus_presentation, present, present_even_even, present_generic, present_odd_even, present_odd_odd,
    Generator, RingPresentation,
};
pub use trichotomy::{trichotomy_classify, TrichotomyCase, TrichotomyReport};
pub use validate::{classify, validate, Check, Classification, ValidationReport};
pub(crate) use validate::freeness_target;

use crate::algebra::Matrix;
use crate::groups::MatrixGroup;

/// A compact group, seen through its maximal torus and Weyl group action.
#[derive(Clone, Debug)]
pub struct SubgroupDatum {
    pub name: String,
    pub rank: usize,
    pub weyl: MatrixGroup,
}

impl SubgroupDatum {
    pub fn new(name: impl Into<String>, weyl: MatrixGroup) -> Self {
        SubgroupDatum {
            name: name.into(),
            rank: weyl.rank(),
            weyl,
        }
    }
}

/// One end of the interval: the isotropy group K± ⊃ H.
#[derive(Clone, Debug)]
pub struct Leg {
    pub group: SubgroupDatum,
    /// r_H x r_K; row i is the image of the i-th basis vector of H's torus.
    pub embedding: Matrix,
    /// Dimension of the (homology) sphere K/H.
    pub sphere_dim: usize,
    pub orientable: bool,
}

impl Leg {
    pub fn is_odd(&self) -> bool {
        self.sphere_dim % 2 == 1
    }
}

/// Optional ambient group G ⊃ H, used only for consistency checks.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub group: SubgroupDatum,
    /// r_H x r_G, same convention as [`Leg::embedding`].
    pub embedding: Matrix,
}

#[derive(Clone, Debug)]
pub struct IntervalSpec {
    pub name: String,
    pub h: SubgroupDatum,
    pub minus: Leg,
    pub plus: Leg,
    pub ambient: Option<Ambient>,
}

impl IntervalSpec {
    pub fn leg(&self, side: Side) -> &Leg {
        match side {
            Side::Minus => &self.minus,
            Side::Plus => &self.plus,
        }
    }

    /// The same action with the two ends exchanged.
    pub fn swapped(&self) -> IntervalSpec {
        IntervalSpec {
            name: self.name.clone(),
            h: self.h.clone(),
            minus: self.plus.clone(),
            plus: self.minus.clone(),
            ambient: self.ambient.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CircleSpec {
    pub name: String,
    pub k: SubgroupDatum,
    /// Automorphism of K's torus induced by the translation element.
    pub translation: Matrix,
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum ActionSpec {
    Interval(IntervalSpec),
    Circle(CircleSpec),
}

impl ActionSpec {
    pub fn name(&self) -> &str {
        match self {
            ActionSpec::Interval(s) => &s.name,
            ActionSpec::Circle(s) => &s.name,
        }
    }
}

/// Which closed form (if any) applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Circle,
    OddOdd,
    OddEven,
    EvenEven,
    GenericMV,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Circle => "circle",
            CaseTag::OddOdd => "odd-odd",
            CaseTag::OddEven => "odd-even",
            CaseTag::EvenEven => "even-even",
            CaseTag::GenericMV => "generic-mv",
        })
    }
}
