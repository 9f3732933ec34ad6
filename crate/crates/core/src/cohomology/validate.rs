use std::fmt;

use super::{ActionSpec, CaseTag, CircleSpec, IntervalModel, IntervalSpec, Leg, Side};
use crate::algebra::linalg::{self, Echelon};
use crate::algebra::{homogeneous_monomials, rat, PoincareSeries, Rational};
use crate::error::CohomologyError;
use crate::groups::{aut_normalizes, close_group, dihedral_parameters, DihedralData, MatrixGroup, DEFAULT_CAP};
use crate::invariants::{molien, restrict, InvariantRing};

/// Outcome of one validation check; `degree` is the first failing degree
/// for degreewise checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub degree: Option<usize>,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            degree: None,
            detail: detail.into(),
        }
    }

    fn fail(name: &str, degree: Option<usize>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            degree,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "ok  " } else { "FAIL" };
        write!(f, "{mark} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub spec: String,
    pub max_degree: usize,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Check every consistency condition of the action spec up to degree `max_degree`.
pub fn validate(spec: &ActionSpec, max_degree: usize) -> ValidationReport {
    let checks = match spec {
        ActionSpec::Interval(s) => validate_interval(s, max_degree),
        ActionSpec::Circle(s) => validate_circle(s),
    };
    ValidationReport {
        spec: spec.name().to_string(),
        max_degree,
        checks,
    }
}

fn leg_label(spec: &IntervalSpec, side: Side) -> String {
    format!("{}/{}", spec.leg(side).group.name, spec.h.name)
}

/// Rank of ρ*(K_d) and whether it lands in the H-invariants.
fn restricted_rank(model: &IntervalModel, side: Side, d: usize) -> (usize, bool) {
    let monos = homogeneous_monomials(model.spec().h.rank, d);
    let zero = rat(0);
    let mut e = Echelon::empty(monos.len());
    let mut invariant = true;
    for b in model.leg_ring(side).invariant_basis(d).iter() {
        let r = model.restrict(side, b);
        invariant &= model.h_ring().is_invariant(&r);
        e.insert(&r.to_vector(&monos, &zero));
    }
    (e.rank(), invariant)
}

/// The series identity relating P_H and P_K across a sphere bundle.
pub(crate) fn freeness_target(p_k: &PoincareSeries, n: usize) -> PoincareSeries {
    let t = p_k.truncation();
    if n % 2 == 1 {
        p_k.mul(&PoincareSeries::one_minus(t, n + 1))
    } else {
        p_k.mul(&PoincareSeries::one_plus(t, n))
    }
}

fn validate_interval(spec: &IntervalSpec, n: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for side in [Side::Minus, Side::Plus] {
        let leg = spec.leg(side);
        let name = format!("sphere-{side}");
        if leg.sphere_dim == 0 {
            checks.push(Check::fail(
                &name,
                None,
                format!("S⁰ leg: {} is a 0-sphere", leg_label(spec, side)),
            ));
        } else {
            checks.push(Check::pass(&name, format!("{} is a {}-sphere", leg_label(spec, side), leg.sphere_dim)));
        }
    }

    let model = match IntervalModel::new(spec.clone()) {
        Ok(m) => m,
        Err(e) => {
            checks.push(Check::fail("shapes", None, e.to_string()));
            return checks;
        }
    };
    if let Some(amb) = &spec.ambient {
        if amb.embedding.nrows() != spec.h.rank
            || amb.embedding.ncols() != amb.group.rank
            || amb.group.weyl.rank() != amb.group.rank
        {
            checks.push(Check::fail("shapes", None, format!("ambient group {} has inconsistent shapes", amb.group.name)));
            return checks;
        }
    }
    checks.push(Check::pass("shapes", "ranks and embeddings agree"));

    let p_h = molien(model.h_ring().group(), n);
    for side in [Side::Minus, Side::Plus] {
        let leg = spec.leg(side);
        let label = leg_label(spec, side);
        let equal_rank = leg.group.rank == spec.h.rank;
        if leg.sphere_dim.is_multiple_of(2) {
            let name = format!("equal-rank-{side}");
            if equal_rank {
                checks.push(Check::pass(&name, format!("{label}: even sphere, equal ranks")));
            } else {
                checks.push(Check::fail(
                    &name,
                    None,
                    format!("{label}: even sphere needs equal ranks, got {} and {}", leg.group.rank, spec.h.rank),
                ));
            }
        }

        let mut not_invariant = None;
        let mut not_injective = None;
        let mut not_surjective = None;
        for d in (0..=n).step_by(2) {
            let (rank, invariant) = restricted_rank(&model, side, d);
            if !invariant && not_invariant.is_none() {
                not_invariant = Some(d);
            }
            if equal_rank && rank != model.leg_ring(side).dim(d) && not_injective.is_none() {
                not_injective = Some(d);
            }
            if leg.is_odd() && rank != model.h_ring().dim(d) && not_surjective.is_none() {
                not_surjective = Some(d);
            }
        }
        let name = format!("restriction-{side}");
        checks.push(match not_invariant {
            None => Check::pass(&name, format!("{label}: restriction lands in the invariants of H")),
            Some(d) => Check::fail(
                &name,
                Some(d),
                format!("{label}: restriction leaves the invariants of H at degree {d}"),
            ),
        });
        if equal_rank {
            let name = format!("injective-{side}");
            checks.push(match not_injective {
                None => Check::pass(&name, format!("{label}: restriction injective to degree {n}")),
                Some(d) => Check::fail(&name, Some(d), format!("{label}: restriction not injective at degree {d}")),
            });
        }
        if leg.is_odd() {
            let name = format!("surjective-{side}");
            checks.push(match not_surjective {
                None => Check::pass(&name, format!("{label}: restriction surjective to degree {n}")),
                Some(d) => Check::fail(&name, Some(d), format!("{label}: restriction not surjective at degree {d}")),
            });
        }

        if leg.orientable && leg.sphere_dim > 0 {
            let name = format!("freeness-{side}");
            let target = freeness_target(&molien(model.leg_ring(side).group(), n), leg.sphere_dim);
            checks.push(match target.first_difference(&p_h) {
                None => Check::pass(&name, format!("{label}: freeness identity holds to degree {n}")),
                Some(d) => Check::fail(&name, Some(d), format!("{label}: freeness identity fails at degree {d}")),
            });
        }
    }

    if let Some(amb) = &spec.ambient {
        let ring = InvariantRing::new(amb.group.weyl.clone());
        let zero = rat(0);
        let mut bad = None;
        'deg: for d in (0..=n).step_by(2) {
            let monos = homogeneous_monomials(spec.h.rank, d);
            let images: Vec<Echelon<Rational>> = [Side::Minus, Side::Plus]
                .iter()
                .map(|&side| {
                    let rows: Vec<Vec<Rational>> = model
                        .leg_ring(side)
                        .invariant_basis(d)
                        .iter()
                        .map(|b| model.restrict(side, b).to_vector(&monos, &zero))
                        .collect();
                    linalg::rref(&rows, monos.len())
                })
                .collect();
            for g in ring.invariant_basis(d).iter() {
                let v = restrict(&amb.embedding, g).expect("shape checked").to_vector(&monos, &zero);
                if images.iter().any(|im| !im.contains(&v)) {
                    bad = Some(d);
                    break 'deg;
                }
            }
        }
        checks.push(match bad {
            None => Check::pass(
                "ambient",
                format!("invariants of {} restrict into both images", amb.group.name),
            ),
            Some(d) => Check::fail(
                "ambient",
                Some(d),
                format!("an invariant of {} restricts outside the leg images at degree {d}", amb.group.name),
            ),
        });
    }
    checks
}

fn validate_circle(spec: &CircleSpec) -> Vec<Check> {
    let mut checks = Vec::new();
    let m = &spec.translation;
    let r = spec.k.rank;
    if spec.k.weyl.rank() != r || m.nrows() != r || m.ncols() != r {
        checks.push(Check::fail(
            "shapes",
            None,
            format!("translation is {}x{}, expected {r}x{r}", m.nrows(), m.ncols()),
        ));
        return checks;
    }
    if !m.is_invertible() {
        checks.push(Check::fail("shapes", None, "translation is not invertible"));
        return checks;
    }
    checks.push(Check::pass("shapes", "translation is an invertible square matrix"));
    if aut_normalizes(m, &spec.k.weyl) {
        checks.push(Check::pass("normalizes", format!("translation normalizes the Weyl group of {}", spec.k.name)));
    } else {
        checks.push(Check::fail(
            "normalizes",
            None,
            format!("translation does not normalize the Weyl group of {}", spec.k.name),
        ));
        return checks;
    }
    match circle_group(spec) {
        Ok(g) => checks.push(Check::pass("finite", format!("extended Weyl group has order {}", g.order()))),
        Err(e) => checks.push(Check::fail("finite", None, e.to_string())),
    }
    checks
}

/// ⟨W(K), translation⟩.
pub(crate) fn circle_group(spec: &CircleSpec) -> Result<MatrixGroup, CohomologyError> {
    if !aut_normalizes(&spec.translation, &spec.k.weyl) {
        return Err(CohomologyError::InvalidSpec(
            "translation does not normalize the Weyl group".into(),
        ));
    }
    let mut gens = spec.k.weyl.generators().to_vec();
    gens.push(spec.translation.clone());
    Ok(close_group(spec.k.rank, &gens, DEFAULT_CAP)?)
}

/// Weyl group of an equal-rank leg moved onto H's torus.
pub(crate) fn transported_weyl(leg: &Leg) -> Result<MatrixGroup, CohomologyError> {
    let m = leg.embedding.transpose();
    if !m.is_square() || !m.is_invertible() {
        return Err(CohomologyError::InvalidSpec(format!(
            "embedding into {} is not invertible",
            leg.group.name
        )));
    }
    Ok(leg.group.weyl.conjugate_by(&m)?)
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub case: CaseTag,
    /// The legs were exchanged so that the odd leg is K₊.
    pub swapped: bool,
    pub dihedral: Option<DihedralData>,
    pub reason: String,
}

fn classified(case: CaseTag, swapped: bool, reason: impl Into<String>) -> Classification {
    Classification {
        case,
        swapped,
        dihedral: None,
        reason: reason.into(),
    }
}

/// Pick the closed form whose hypotheses the action spec meets, falling back to
/// the generic Mayer–Vietoris computation.
pub fn classify(spec: &ActionSpec) -> Classification {
    let s = match spec {
        ActionSpec::Circle(_) => return classified(CaseTag::Circle, false, "circle orbit space"),
        ActionSpec::Interval(s) => s,
    };
    let (m, p) = (&s.minus, &s.plus);
    let orientable = m.orientable && p.orientable;
    match (m.is_odd(), p.is_odd()) {
        (true, true) if orientable => classified(CaseTag::OddOdd, false, "both spheres odd"),
        (false, true) if orientable => classified(CaseTag::OddEven, false, "plus sphere odd, minus sphere even"),
        (true, false) if orientable => classified(CaseTag::OddEven, true, "minus sphere odd, legs exchanged"),
        (false, false) if orientable => {
            if m.sphere_dim == 0 || p.sphere_dim == 0 {
                return classified(CaseTag::GenericMV, false, "0-sphere leg");
            }
            let dd = transported_weyl(m).and_then(|wm| {
                let wp = transported_weyl(p)?;
                Ok(dihedral_parameters(&s.h.weyl, &wm, &wp, DEFAULT_CAP)?)
            });
            match dd {
                Ok(dd) => Classification {
                    case: CaseTag::EvenEven,
                    swapped: false,
                    reason: format!("both spheres even, k = {}", dd.k),
                    dihedral: Some(dd),
                },
                Err(e) => classified(CaseTag::GenericMV, false, format!("even legs without index-two data: {e}")),
            }
        }
        _ => classified(CaseTag::GenericMV, false, "a leg is not orientable"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Matrix;
    use crate::cohomology::SubgroupDatum;
    use crate::groups::{weyl_standard, WeylType};

    fn leg(weyl: MatrixGroup, embedding: Matrix, sphere_dim: usize, orientable: bool) -> Leg {
        Leg {
            group: SubgroupDatum::new("K", weyl),
            embedding,
            sphere_dim,
            orientable,
        }
    }

    fn interval(h: MatrixGroup, minus: Leg, plus: Leg) -> ActionSpec {
        ActionSpec::Interval(IntervalSpec {
            name: "test".into(),
            h: SubgroupDatum::new("H", h),
            minus,
            plus,
            ambient: None,
        })
    }

    fn pm() -> MatrixGroup {
        weyl_standard(WeylType::A, 2).unwrap()
    }

    #[test]
    fn zero_sphere_rejected() {
        let spec = interval(
            MatrixGroup::trivial(1),
            leg(pm(), Matrix::identity(1), 0, true),
            leg(pm(), Matrix::identity(1), 0, true),
        );
        let report = validate(&spec, 20);
        assert!(!report.passed());
        assert!(report.failures().any(|c| c.detail.contains("S⁰ leg")));
    }

    #[test]
    fn mislabeled_sphere_fails_freeness() {
        let c3 = close_group(2, &[Matrix::from_ints(&[&[0, 1], &[-1, -1]])], DEFAULT_CAP).unwrap();
        let s3 = weyl_standard(WeylType::A, 3).unwrap();
        let good = interval(
            c3.clone(),
            leg(s3.clone(), Matrix::identity(2), 6, true),
            leg(s3.clone(), Matrix::identity(2), 6, true),
        );
        assert!(validate(&good, 30).passed());
        let bad = interval(
            c3,
            leg(s3.clone(), Matrix::identity(2), 2, true),
            leg(s3, Matrix::identity(2), 6, true),
        );
        let report = validate(&bad, 30);
        let fail: Vec<&Check> = report.failures().collect();
        assert_eq!(fail.len(), 1);
        assert_eq!(fail[0].name, "freeness-minus");
        assert_eq!(fail[0].degree, Some(2));
    }

    #[test]
    fn odd_leg_must_be_surjective() {
        // U(1) → point is surjective; declaring the point leg against a
        // rank-1 H with trivial Weyl group and K = {±1} is not
        let spec = interval(
            MatrixGroup::trivial(1),
            leg(pm(), Matrix::identity(1), 1, true),
            leg(pm(), Matrix::identity(1), 2, true),
        );
        let report = validate(&spec, 10);
        assert!(report.failures().any(|c| c.name == "surjective-minus" && c.degree == Some(2)));
    }

    #[test]
    fn classification() {
        let even = interval(
            MatrixGroup::trivial(1),
            leg(pm(), Matrix::identity(1), 2, true),
            leg(pm(), Matrix::identity(1), 2, true),
        );
        let c = classify(&even);
        assert_eq!(c.case, CaseTag::EvenEven);
        assert_eq!(c.dihedral.unwrap().k, 1);

        let nonorientable = interval(
            pm(),
            leg(pm(), Matrix::identity(1), 2, false),
            leg(pm(), Matrix::identity(1), 2, false),
        );
        assert_eq!(classify(&nonorientable).case, CaseTag::GenericMV);

        let point = MatrixGroup::trivial(0);
        let odd = interval(
            point.clone(),
            leg(pm(), Matrix::zeros(0, 1), 3, true),
            leg(pm(), Matrix::zeros(0, 1), 3, true),
        );
        assert_eq!(classify(&odd).case, CaseTag::OddOdd);

        let mixed = interval(
            MatrixGroup::trivial(1),
            leg(weyl_standard(WeylType::U, 2).unwrap(), Matrix::from_ints(&[&[0, 1]]), 3, true),
            leg(pm(), Matrix::identity(1), 2, true),
        );
        let c = classify(&mixed);
        assert_eq!((c.case, c.swapped), (CaseTag::OddEven, true));
    }

    #[test]
    fn circle_checks() {
        let spec = ActionSpec::Circle(CircleSpec {
            name: "flip".into(),
            k: SubgroupDatum::new("T", MatrixGroup::trivial(1)),
            translation: Matrix::from_ints(&[&[-1]]),
        });
        assert!(validate(&spec, 10).passed());
        let w = close_group(2, &[Matrix::diagonal(&[-1, 1])], 10).unwrap();
        let bad = ActionSpec::Circle(CircleSpec {
            name: "bad".into(),
            k: SubgroupDatum::new("K", w),
            translation: Matrix::from_ints(&[&[0, 1], &[1, 0]]),
        });
        let report = validate(&bad, 10);
        assert!(report.failures().any(|c| c.name == "normalizes"));
    }
}
