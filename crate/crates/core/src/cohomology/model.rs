use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use super::IntervalSpec;
use crate::algebra::linalg::{self, Echelon};
use crate::algebra::{homogeneous_monomials, rat, GradedPolynomial, Rational};
use crate::error::{AlgebraError, CohomologyError};
use crate::invariants::{restrict, InvariantRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Minus,
    Plus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Minus => "minus",
            Side::Plus => "plus",
        })
    }
}

/// A homogeneous class in the Mayer–Vietoris model.
///
/// Even classes are pairs of invariants with equal restrictions to H.
/// Odd classes of degree d are H-invariants of degree d-1 modulo the sum of
/// the two restriction images; `q` is always kept in normal form.
#[derive(Clone, Debug, PartialEq)]
pub enum MVClass {
    Even {
        degree: usize,
        minus: GradedPolynomial,
        plus: GradedPolynomial,
    },
    Odd { degree: usize, q: GradedPolynomial },
}

impl MVClass {
    pub fn degree(&self) -> usize {
        match self {
            MVClass::Even { degree, .. } | MVClass::Odd { degree, .. } => *degree,
        }
    }

    pub fn is_even(&self) -> bool {
        matches!(self, MVClass::Even { .. })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            MVClass::Even { minus, plus, .. } => minus.is_zero() && plus.is_zero(),
            MVClass::Odd { q, .. } => q.is_zero(),
        }
    }
}

impl fmt::Display for MVClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MVClass::Even { minus, plus, .. } => write!(f, "({minus}, {plus})"),
            MVClass::Odd { q, .. } => write!(f, "[{q}]"),
        }
    }
}

/// Bases of the even and odd parts in one degree.
#[derive(Clone, Debug)]
pub struct MVDegree {
    pub degree: usize,
    pub even: Vec<MVClass>,
    pub odd: Vec<MVClass>,
}

/// The degreewise Mayer–Vietoris computation for an interval action.
#[derive(Debug)]
pub struct IntervalModel {
    spec: IntervalSpec,
    h: InvariantRing,
    minus: InvariantRing,
    plus: InvariantRing,
    images: Mutex<HashMap<usize, Arc<Echelon<Rational>>>>,
}

fn check_shape(what: &str, expected: (usize, usize), found: (usize, usize)) -> Result<(), CohomologyError> {
    if expected != found {
        return Err(AlgebraError::ShapeMismatch {
            expected: format!("{what} {}x{}", expected.0, expected.1),
            found: format!("{}x{}", found.0, found.1),
        }
        .into());
    }
    Ok(())
}

impl IntervalModel {
    pub fn new(spec: IntervalSpec) -> Result<Self, CohomologyError> {
        let rh = spec.h.rank;
        check_shape("Weyl group of H", (rh, rh), (spec.h.weyl.rank(), spec.h.weyl.rank()))?;
        for leg in [&spec.minus, &spec.plus] {
            let rk = leg.group.rank;
            check_shape(
                &format!("Weyl group of {}", leg.group.name),
                (rk, rk),
                (leg.group.weyl.rank(), leg.group.weyl.rank()),
            )?;
            check_shape(
                &format!("embedding into {}", leg.group.name),
                (rh, rk),
                (leg.embedding.nrows(), leg.embedding.ncols()),
            )?;
        }
        Ok(IntervalModel {
            h: InvariantRing::new(spec.h.weyl.clone()),
            minus: InvariantRing::new(spec.minus.group.weyl.clone()),
            plus: InvariantRing::new(spec.plus.group.weyl.clone()),
            spec,
            images: Mutex::new(HashMap::new()),
        })
    }

    pub fn spec(&self) -> &IntervalSpec {
        &self.spec
    }

    pub fn h_ring(&self) -> &InvariantRing {
        &self.h
    }

    pub fn leg_ring(&self, side: Side) -> &InvariantRing {
        match side {
            Side::Minus => &self.minus,
            Side::Plus => &self.plus,
        }
    }

    /// ρ*± applied to a polynomial on K±'s torus.
    pub fn restrict(&self, side: Side, p: &GradedPolynomial) -> GradedPolynomial {
        restrict(&self.spec.leg(side).embedding, p).expect("shapes checked at construction")
    }

    fn h_monomials(&self, d: usize) -> Vec<Vec<u32>> {
        homogeneous_monomials(self.spec.h.rank, d)
    }

    /// Echelon form of im ρ*₋ + im ρ*₊ in H-degree `d`.
    pub fn image(&self, d: usize) -> Arc<Echelon<Rational>> {
        if let Some(e) = self.images.lock().unwrap().get(&d) {
            return e.clone();
        }
        let monos = self.h_monomials(d);
        let zero = rat(0);
        let mut e = Echelon::empty(monos.len());
        for side in [Side::Minus, Side::Plus] {
            for b in self.leg_ring(side).invariant_basis(d).iter() {
                e.insert(&self.restrict(side, b).to_vector(&monos, &zero));
            }
        }
        let e = Arc::new(e);
        self.images.lock().unwrap().entry(d).or_insert(e).clone()
    }

    pub fn even_dim(&self, d: usize) -> usize {
        if d % 2 == 1 {
            return 0;
        }
        self.minus.dim(d) + self.plus.dim(d) - self.image(d).rank()
    }

    pub fn odd_dim(&self, d: usize) -> usize {
        if d.is_multiple_of(2) {
            return 0;
        }
        self.h.dim(d - 1) - self.image(d - 1).rank()
    }

    /// Explicit bases of the even part (fiber product) and odd part
    /// (shifted cokernel) in degree `d`.
    pub fn mv_degree(&self, d: usize) -> MVDegree {
        let mut out = MVDegree {
            degree: d,
            even: Vec::new(),
            odd: Vec::new(),
        };
        let zero = rat(0);
        if d.is_multiple_of(2) {
            let monos = self.h_monomials(d);
            let a = self.minus.invariant_basis(d);
            let b = self.plus.invariant_basis(d);
            let mut vectors: Vec<Vec<Rational>> = a
                .iter()
                .map(|p| self.restrict(Side::Minus, p).neg().to_vector(&monos, &zero))
                .collect();
            vectors.extend(b.iter().map(|p| self.restrict(Side::Plus, p).to_vector(&monos, &zero)));
            for c in linalg::left_kernel(&vectors, monos.len(), &zero) {
                out.even.push(MVClass::Even {
                    degree: d,
                    minus: combine(self.spec.minus.group.rank, &a, &c[..a.len()]),
                    plus: combine(self.spec.plus.group.rank, &b, &c[a.len()..]),
                });
            }
        } else {
            let monos = self.h_monomials(d - 1);
            let image = self.image(d - 1);
            let rem: Vec<Vec<Rational>> = self
                .h
                .invariant_basis(d - 1)
                .iter()
                .map(|q| image.reduce(&q.to_vector(&monos, &zero)))
                .collect();
            for row in linalg::rref(&rem, monos.len()).rows {
                out.odd.push(MVClass::Odd {
                    degree: d,
                    q: GradedPolynomial::from_vector(self.spec.h.rank, &monos, &row),
                });
            }
        }
        out
    }

    /// Normal form of an H-polynomial of degree `d` modulo the image.
    pub fn odd_normal_form(&self, d: usize, q: &GradedPolynomial) -> GradedPolynomial {
        let monos = self.h_monomials(d);
        let v = self.image(d).reduce(&q.to_vector(&monos, &rat(0)));
        GradedPolynomial::from_vector(self.spec.h.rank, &monos, &v)
    }

    pub fn unit(&self) -> MVClass {
        MVClass::Even {
            degree: 0,
            minus: GradedPolynomial::constant(self.spec.minus.group.rank, rat(1)),
            plus: GradedPolynomial::constant(self.spec.plus.group.rank, rat(1)),
        }
    }

    pub fn zero_class(&self, d: usize) -> MVClass {
        if d.is_multiple_of(2) {
            MVClass::Even {
                degree: d,
                minus: GradedPolynomial::zero(self.spec.minus.group.rank),
                plus: GradedPolynomial::zero(self.spec.plus.group.rank),
            }
        } else {
            MVClass::Odd {
                degree: d,
                q: GradedPolynomial::zero(self.spec.h.rank),
            }
        }
    }

    /// Product in the model: componentwise on even classes, through ρ*₋ on
    /// the module action, zero on two odd classes.
    pub fn mv_multiply(&self, a: &MVClass, b: &MVClass) -> MVClass {
        match (a, b) {
            (
                MVClass::Even {
                    degree: da,
                    minus: am,
                    plus: ap,
                },
                MVClass::Even {
                    degree: db,
                    minus: bm,
                    plus: bp,
                },
            ) => MVClass::Even {
                degree: da + db,
                minus: am.mul(bm),
                plus: ap.mul(bp),
            },
            (MVClass::Even { degree: de, minus, .. }, MVClass::Odd { degree: dq, q })
            | (MVClass::Odd { degree: dq, q }, MVClass::Even { degree: de, minus, .. }) => {
                let d = de + dq;
                let prod = self.restrict(Side::Minus, minus).mul(q);
                MVClass::Odd {
                    degree: d,
                    q: self.odd_normal_form(d - 1, &prod),
                }
            }
            (MVClass::Odd { degree: da, .. }, MVClass::Odd { degree: db, .. }) => self.zero_class(da + db),
        }
    }

    pub fn add(&self, a: &MVClass, b: &MVClass) -> MVClass {
        match (a, b) {
            (
                MVClass::Even { degree, minus: am, plus: ap },
                MVClass::Even { minus: bm, plus: bp, .. },
            ) => MVClass::Even {
                degree: *degree,
                minus: am.add(bm),
                plus: ap.add(bp),
            },
            (MVClass::Odd { degree, q: a }, MVClass::Odd { q: b, .. }) => MVClass::Odd {
                degree: *degree,
                q: a.add(b),
            },
            _ => panic!("adding classes of different parity"),
        }
    }

    pub fn scale(&self, a: &MVClass, c: &Rational) -> MVClass {
        match a {
            MVClass::Even { degree, minus, plus } => MVClass::Even {
                degree: *degree,
                minus: minus.scale(c),
                plus: plus.scale(c),
            },
            MVClass::Odd { degree, q } => MVClass::Odd {
                degree: *degree,
                q: q.scale(c),
            },
        }
    }

    /// Exact membership test: homogeneity, invariance and (for even
    /// classes) equal restrictions; odd classes must be in normal form.
    pub fn is_valid(&self, c: &MVClass) -> bool {
        let homogeneous_of = |p: &GradedPolynomial, d: usize| p.is_zero() || (p.is_homogeneous() && p.degree() == Some(d));
        match c {
            MVClass::Even { degree, minus, plus } => {
                homogeneous_of(minus, *degree)
                    && homogeneous_of(plus, *degree)
                    && self.minus.is_invariant(minus)
                    && self.plus.is_invariant(plus)
                    && self.restrict(Side::Minus, minus) == self.restrict(Side::Plus, plus)
            }
            MVClass::Odd { degree, q } => {
                *degree % 2 == 1
                    && homogeneous_of(q, degree - 1)
                    && self.h.is_invariant(q)
                    && self.odd_normal_form(degree - 1, q) == *q
            }
        }
    }

    /// Coordinates used to compare classes: concatenated monomial
    /// coordinates for even classes, normal-form coordinates for odd ones.
    pub fn coordinates(&self, c: &MVClass) -> Vec<Rational> {
        let zero = rat(0);
        match c {
            MVClass::Even { degree, minus, plus } => {
                let mut v = minus.to_vector(&homogeneous_monomials(self.spec.minus.group.rank, *degree), &zero);
                v.extend(plus.to_vector(&homogeneous_monomials(self.spec.plus.group.rank, *degree), &zero));
                v
            }
            MVClass::Odd { degree, q } => q.to_vector(&self.h_monomials(degree - 1), &zero),
        }
    }

    /// A preimage of the H-invariant `h` under ρ*± (degreewise solve), if
    /// one exists.
    pub fn lift(&self, side: Side, h: &GradedPolynomial) -> Option<GradedPolynomial> {
        let d = h.degree().unwrap_or(0);
        if h.is_zero() {
            return Some(GradedPolynomial::zero(self.spec.leg(side).group.rank));
        }
        let monos = self.h_monomials(d);
        let zero = rat(0);
        let basis = self.leg_ring(side).invariant_basis(d);
        let mut vectors: Vec<Vec<Rational>> = basis
            .iter()
            .map(|p| self.restrict(side, p).to_vector(&monos, &zero))
            .collect();
        vectors.push(h.neg().to_vector(&monos, &zero));
        let kernel = linalg::left_kernel(&vectors, monos.len(), &zero);
        // need a relation with coefficient 1 on -h
        let last = basis.len();
        let rel = kernel.iter().find(|c| !c[last].is_zero())?;
        let inv = rel[last].recip();
        let coeffs: Vec<Rational> = rel[..last].iter().map(|c| c * &inv).collect();
        Some(combine(self.spec.leg(side).group.rank, &basis, &coeffs))
    }
}

fn combine(nvars: usize, basis: &[GradedPolynomial], coeffs: &[Rational]) -> GradedPolynomial {
    let mut out = GradedPolynomial::zero(nvars);
    for (p, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&p.scale(c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Matrix;
    use crate::cohomology::{Leg, SubgroupDatum};
    use crate::groups::{weyl_standard, MatrixGroup, WeylType};

    fn x(i: usize) -> GradedPolynomial {
        GradedPolynomial::var(1, i, rat(1))
    }

    fn pm_leg(orientable: bool) -> Leg {
        Leg {
            group: SubgroupDatum::new("K", weyl_standard(WeylType::A, 2).unwrap()),
            embedding: Matrix::identity(1),
            sphere_dim: 2,
            orientable,
        }
    }

    fn suspension() -> IntervalModel {
        IntervalModel::new(IntervalSpec {
            name: "suspension".into(),
            h: SubgroupDatum::new("T", MatrixGroup::trivial(1)),
            minus: pm_leg(true),
            plus: pm_leg(true),
            ambient: None,
        })
        .unwrap()
    }

    fn o3_o2() -> IntervalModel {
        IntervalModel::new(IntervalSpec {
            name: "o3".into(),
            h: SubgroupDatum::new("O2", weyl_standard(WeylType::A, 2).unwrap()),
            minus: pm_leg(false),
            plus: pm_leg(false),
            ambient: None,
        })
        .unwrap()
    }

    #[test]
    fn degree_zero_is_the_unit() {
        let m = suspension();
        let deg = m.mv_degree(0);
        assert_eq!(deg.even, vec![m.unit()]);
        assert!(deg.odd.is_empty());
    }

    #[test]
    fn suspension_degree_three() {
        let m = suspension();
        let deg = m.mv_degree(3);
        assert!(deg.even.is_empty());
        assert_eq!(deg.odd, vec![MVClass::Odd { degree: 3, q: x(0) }]);
        assert_eq!(m.odd_dim(3), 1);
        assert_eq!(m.odd_dim(5), 0);
    }

    #[test]
    fn o3_o2_degree_four() {
        let m = o3_o2();
        let deg = m.mv_degree(4);
        assert_eq!(
            deg.even,
            vec![MVClass::Even {
                degree: 4,
                minus: x(0).pow(2),
                plus: x(0).pow(2)
            }]
        );
        assert!(m.mv_degree(5).odd.is_empty());
    }

    #[test]
    fn products() {
        let m = suspension();
        let sq = MVClass::Even {
            degree: 4,
            minus: x(0).pow(2),
            plus: x(0).pow(2),
        };
        let odd = MVClass::Odd { degree: 3, q: x(0) };
        let prod = m.mv_multiply(&sq, &odd);
        assert_eq!(prod, MVClass::Odd { degree: 7, q: x(0).pow(3) });
        assert!(!prod.is_zero());
        assert_eq!(m.mv_multiply(&m.unit(), &odd), odd);
        assert!(m.mv_multiply(&odd, &odd).is_zero());
        assert!(m.is_valid(&prod));
    }

    #[test]
    fn lifts() {
        let m = suspension();
        assert_eq!(m.lift(Side::Minus, &x(0).pow(2)), Some(x(0).pow(2)));
        assert_eq!(m.lift(Side::Minus, &x(0)), None);
    }
}
