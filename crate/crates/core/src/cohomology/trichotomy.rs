use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use super::IntervalSpec;
use crate::algebra::linalg;
use crate::algebra::{frac, homogeneous_monomials, Cyclotomic, CyclotomicField, GradedPolynomial, Matrix, Polynomial};
use crate::error::CohomologyError;
use crate::groups::DihedralData;
use crate::invariants::{act, InvariantRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrichotomyCase {
    I,
    II,
    III,
}

impl fmt::Display for TrichotomyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrichotomyCase::I => "I",
            TrichotomyCase::II => "II",
            TrichotomyCase::III => "III",
        })
    }
}

/// Position of the anti-invariants p± relative to the eigenspaces E_ℓ of
/// r = w₊w₋ acting on the invariants of H.
#[derive(Clone, Debug)]
pub struct TrichotomyReport {
    pub k: usize,
    pub case: TrichotomyCase,
    /// Half the sphere dimensions.
    pub n_minus: usize,
    pub n_plus: usize,
    pub p_minus: GradedPolynomial,
    pub p_plus: GradedPolynomial,
    /// Exponents ℓ with a nonzero E_ℓ-component.
    pub support_minus: Vec<usize>,
    pub support_plus: Vec<usize>,
    /// Case III: j and the E_j-eigenvector q with p± ∝ q − w±q.
    pub j: Option<usize>,
    pub q: Option<Polynomial<Cyclotomic>>,
    /// (degree, [dim E_0, ..., dim E_{k-1}]) for even degrees.
    pub eigen_dims: Vec<(usize, Vec<usize>)>,
}

struct Eigen {
    field: Arc<CyclotomicField>,
    k: usize,
    w_minus: Matrix,
    w_plus: Matrix,
}

impl Eigen {
    fn lift(&self, p: &GradedPolynomial) -> Polynomial<Cyclotomic> {
        p.map_coeffs(|c| self.field.from_rational(c))
    }

    /// r·p = w₊·(w₋·p)
    fn rotate(&self, p: &GradedPolynomial) -> GradedPolynomial {
        act(&self.w_plus, &act(&self.w_minus, p))
    }

    /// (1/k) Σ_j ζ^{-ℓj} r^j p
    fn project(&self, p: &GradedPolynomial, l: usize) -> Polynomial<Cyclotomic> {
        let mut out = Polynomial::zero(p.nvars());
        let mut power = p.clone();
        for j in 0..self.k {
            let z = self.field.zeta_pow(-((l * j) as i64));
            out = out.add(&self.lift(&power).scale(&z));
            power = self.rotate(&power);
        }
        out.scale(&self.field.from_rational(&frac(1, self.k as i64)))
    }

    fn support(&self, p: &GradedPolynomial) -> Vec<usize> {
        (0..self.k).filter(|&l| !self.project(p, l).is_zero()).collect()
    }

    fn eigen_dims(&self, ring: &InvariantRing, d: usize) -> Vec<usize> {
        let monos = homogeneous_monomials(ring.nvars(), d);
        let zero = self.field.zero();
        let basis = ring.invariant_basis(d);
        (0..self.k)
            .map(|l| {
                let rows: Vec<Vec<Cyclotomic>> =
                    basis.iter().map(|b| self.project(b, l).to_vector(&monos, &zero)).collect();
                linalg::rank(&rows, monos.len())
            })
            .collect()
    }
}

fn proportional(a: &Polynomial<Cyclotomic>, b: &Polynomial<Cyclotomic>) -> bool {
    !a.is_zero() && !b.is_zero() && a.monic() == b.monic()
}

fn anti_invariant(ring: &InvariantRing, w: &Matrix, d: usize, which: &str) -> Result<GradedPolynomial, CohomologyError> {
    let phi = ring
        .invariant_basis(d)
        .iter()
        .find(|b| act(w, b) != **b)
        .cloned()
        .ok_or_else(|| CohomologyError::Trichotomy(format!("every invariant of H in degree {d} is fixed by w{which}")))?;
    Ok(phi.sub(&act(w, &phi)).scale(&frac(1, 2)).monic())
}

/// Decide which of the three possible configurations of p± occurs. Exactly
/// one must; anything else means the input data is inconsistent.
pub fn trichotomy_classify(
    spec: &IntervalSpec,
    dd: &DihedralData,
    max_degree: usize,
) -> Result<TrichotomyReport, CohomologyError> {
    let (dm, dp) = (spec.minus.sphere_dim, spec.plus.sphere_dim);
    if dm == 0 || dp == 0 || dm % 2 == 1 || dp % 2 == 1 {
        return Err(CohomologyError::WrongCase {
            expected: "two even-dimensional spheres".into(),
            found: format!("dimensions {dm} and {dp}"),
        });
    }
    let (n_minus, n_plus) = (dm / 2, dp / 2);
    let k = dd.k;
    if (k * (n_minus + n_plus)) % 2 == 1 {
        return Err(CohomologyError::Trichotomy(format!(
            "k(n₋+n₊) = {} is odd",
            k * (n_minus + n_plus)
        )));
    }
    let ring = InvariantRing::new(spec.h.weyl.clone());
    let eig = Eigen {
        field: CyclotomicField::new(k as u32),
        k,
        w_minus: dd.w_minus.clone(),
        w_plus: dd.w_plus.clone(),
    };
    let p_minus = anti_invariant(&ring, &dd.w_minus, dm, "₋")?;
    let p_plus = anti_invariant(&ring, &dd.w_plus, dp, "₊")?;
    let support_minus = eig.support(&p_minus);
    let support_plus = eig.support(&p_plus);

    let mut matches: Vec<(TrichotomyCase, Option<usize>, Option<Polynomial<Cyclotomic>>)> = Vec::new();
    if k == 1 && n_minus == n_plus && p_minus == p_plus && support_minus.iter().chain(&support_plus).all(|&l| l == 0) {
        matches.push((TrichotomyCase::I, None, None));
    }
    if k == 2 && support_minus == [1] && support_plus == [1] {
        matches.push((TrichotomyCase::II, None, None));
    }
    if n_minus == n_plus && k >= 2 {
        let dims = eig.eigen_dims(&ring, dm);
        for j in (1..k).filter(|&j| 2 * j < k && j.gcd(&k) == 1) {
            let pair = vec![j, k - j];
            if support_minus != pair || support_plus != pair || dims[j] != 1 || dims[k - j] != 1 {
                continue;
            }
            let q = eig.project(&p_plus, j);
            let witness = |w: &Matrix, p: &GradedPolynomial| {
                let wq = q.substitute_linear(w, w.ncols()).expect("square");
                proportional(&q.sub(&wq), &eig.lift(p))
            };
            if witness(&dd.w_minus, &p_minus) && witness(&dd.w_plus, &p_plus) {
                matches.push((TrichotomyCase::III, Some(j), Some(q)));
            }
        }
    }
    if matches.len() != 1 {
        let found: Vec<String> = matches.iter().map(|m| m.0.to_string()).collect();
        return Err(CohomologyError::Trichotomy(format!(
            "k = {k}, supports {support_minus:?} and {support_plus:?}; matching cases: [{}]",
            found.join(", ")
        )));
    }
    let (case, j, q) = matches.pop().expect("one match");
    let eigen_dims = (0..=max_degree)
        .step_by(2)
        .map(|d| (d, eig.eigen_dims(&ring, d)))
        .collect();
    Ok(TrichotomyReport {
        k,
        case,
        n_minus,
        n_plus,
        p_minus,
        p_plus,
        support_minus,
        support_plus,
        j,
        q,
        eigen_dims,
    })
}
