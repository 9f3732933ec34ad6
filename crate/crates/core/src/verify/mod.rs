//! Independent degreewise checks of a presentation against the
//! Mayer–Vietoris model. Nothing here consults the closed-form code paths:
//! dimensions come from invariant bases, restriction and row reduction.

mod products;

use std::fmt;

use rayon::prelude::*;

pub use products::product_spotchecks;

use crate::algebra::{series_from_shape, PoincareSeries};
use crate::cohomology::{freeness_target, ActionSpec, CircleSpec, IntervalModel, IntervalSpec, RingPresentation, Side};
use crate::groups::{close_group, DEFAULT_CAP};
use crate::invariants::{molien, InvariantRing};

pub const DEFAULT_TRIALS: usize = 50;
pub const DEFAULT_SEED: u64 = 0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesRow {
    pub degree: usize,
    pub even_oracle: usize,
    pub odd_oracle: usize,
    pub even_presentation: usize,
    pub odd_presentation: usize,
    /// even(d) - [K₋(d) + K₊(d)] + H(d) - odd(d+1); interval specs only.
    pub exactness_defect: Option<i64>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpotCheck {
    pub kind: String,
    pub trial: usize,
    pub inputs: String,
    pub output: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessRow {
    pub side: Side,
    pub sphere_dim: usize,
    /// Only orientable legs with a positive-dimensional sphere must satisfy
    /// the identity.
    pub required: bool,
    pub first_failure: Option<usize>,
}

impl FreenessRow {
    pub fn passed(&self) -> bool {
        !self.required || self.first_failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub spec: String,
    pub max_degree: usize,
    pub rows: Vec<SeriesRow>,
    pub spotchecks: Vec<SpotCheck>,
    pub freeness: Vec<FreenessRow>,
    /// Set when the presentation's stored series disagrees with its shape.
    pub shape_mismatch: Option<usize>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.shape_mismatch.is_none()
            && self.rows.iter().all(|r| r.matches)
            && self.spotchecks.iter().all(|c| c.passed)
            && self.freeness.iter().all(|f| f.passed())
    }

    pub fn first_mismatch(&self) -> Option<usize> {
        self.rows.iter().find(|r| !r.matches).map(|r| r.degree)
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verification of {} to degree {}: {}", self.spec, self.max_degree, self.verdict())?;
        if let Some(d) = self.first_mismatch() {
            writeln!(f, "  first mismatch at degree {d}")?;
        }
        let failed = self.spotchecks.iter().filter(|c| !c.passed).count();
        writeln!(f, "  product checks: {} run, {failed} failed", self.spotchecks.len())
    }
}

fn split(series: &PoincareSeries, d: usize) -> (usize, usize) {
    let c: usize = series.dims().and_then(|v| v.get(d).copied()).unwrap_or(usize::MAX);
    if d.is_multiple_of(2) {
        (c, 0)
    } else {
        (0, c)
    }
}

/// Degreewise comparison of the presentation's series with the oracle.
pub fn compare_series(spec: &ActionSpec, presentation: &RingPresentation, n: usize) -> VerificationReport {
    let from_shape = series_from_shape(&presentation.shape, n).ok();
    let shape_mismatch = match &from_shape {
        Some(s) => s.first_difference(&presentation.series.truncate(n.min(presentation.series.truncation()))),
        None => Some(0),
    };
    let series = from_shape.unwrap_or_else(|| PoincareSeries::zero(n));
    let rows = match spec {
        ActionSpec::Interval(s) => interval_rows(s, &series, n),
        ActionSpec::Circle(c) => {
            let group = circle_oracle_group(c);
            match group {
                Some(ring) => (0..=n)
                    .into_par_iter()
                    .map(|d| {
                        let even_oracle = if d % 2 == 0 { ring.dim(d) } else { 0 };
                        let odd_oracle = if d % 2 == 1 { ring.dim(d - 1) } else { 0 };
                        let (ep, op) = split(&series, d);
                        SeriesRow {
                            degree: d,
                            even_oracle,
                            odd_oracle,
                            even_presentation: ep,
                            odd_presentation: op,
                            exactness_defect: None,
                            matches: even_oracle == ep && odd_oracle == op,
                        }
                    })
                    .collect(),
                None => Vec::new(),
            }
        }
    };
    VerificationReport {
        spec: spec.name().to_string(),
        max_degree: n,
        rows,
        spotchecks: Vec::new(),
        freeness: Vec::new(),
        shape_mismatch,
    }
}

/// ⟨W(K), translation⟩, enumerated directly.
fn circle_oracle_group(c: &CircleSpec) -> Option<InvariantRing> {
    let mut gens = c.k.weyl.generators().to_vec();
    gens.push(c.translation.clone());
    close_group(c.k.rank, &gens, DEFAULT_CAP).ok().map(InvariantRing::new)
}

fn interval_rows(spec: &IntervalSpec, series: &PoincareSeries, n: usize) -> Vec<SeriesRow> {
    let Ok(model) = IntervalModel::new(spec.clone()) else {
        return Vec::new();
    };
    let p_h = molien(model.h_ring().group(), n + 1);
    let p_m = molien(model.leg_ring(Side::Minus).group(), n + 1);
    let p_p = molien(model.leg_ring(Side::Plus).group(), n + 1);
    let dims: Vec<(usize, usize)> = (0..=n + 1)
        .into_par_iter()
        .map(|d| {
            let m = model.mv_degree(d);
            (m.even.len(), m.odd.len())
        })
        .collect();
    let int = |s: &PoincareSeries, d: usize| -> i64 { s.dims().map(|v| v[d] as i64).unwrap_or(i64::MIN / 4) };
    (0..=n)
        .map(|d| {
            let (even_oracle, odd_oracle) = dims[d];
            let defect = even_oracle as i64 - (int(&p_m, d) + int(&p_p, d)) + int(&p_h, d) - dims[d + 1].1 as i64;
            let (ep, op) = split(series, d);
            SeriesRow {
                degree: d,
                even_oracle,
                odd_oracle,
                even_presentation: ep,
                odd_presentation: op,
                exactness_defect: Some(defect),
                matches: even_oracle == ep && odd_oracle == op && defect == 0,
            }
        })
        .collect()
}

/// Per leg, the series identity P_H = P_K(1 + t^n) (even sphere) or
/// P_H = P_K(1 - t^{n+1}) (odd sphere).
pub fn freeness_checks(spec: &IntervalSpec, n: usize) -> Vec<FreenessRow> {
    let p_h = molien(&spec.h.weyl, n);
    [Side::Minus, Side::Plus]
        .iter()
        .map(|&side| {
            let leg = spec.leg(side);
            let first_failure = if leg.sphere_dim == 0 {
                Some(0)
            } else {
                let target = freeness_target(&molien(&leg.group.weyl, n), leg.sphere_dim);
                target.first_difference(&p_h)
            };
            FreenessRow {
                side,
                sphere_dim: leg.sphere_dim,
                required: leg.orientable && leg.sphere_dim > 0,
                first_failure,
            }
        })
        .collect()
}

/// Series comparison, product spot checks and freeness rows together.
pub fn verify(
    spec: &ActionSpec,
    presentation: &RingPresentation,
    n: usize,
    trials: usize,
    seed: u64,
) -> VerificationReport {
    let mut report = compare_series(spec, presentation, n);
    report.spotchecks = product_spotchecks(spec, presentation, n, trials, seed);
    if let ActionSpec::Interval(s) = spec {
        report.freeness = freeness_checks(s, n);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BaseRing, Matrix, PresentationShape};
    use crate::cohomology::{present, Leg, SubgroupDatum};
    use crate::groups::{weyl_standard, MatrixGroup, WeylType};

    fn su3_s7() -> ActionSpec {
        let g = |m: Matrix| close_group(2, &[m], DEFAULT_CAP).unwrap();
        let leg = |w: MatrixGroup| Leg {
            group: SubgroupDatum::new("U2", w),
            embedding: Matrix::identity(2),
            sphere_dim: 2,
            orientable: true,
        };
        ActionSpec::Interval(IntervalSpec {
            name: "su3_s7".into(),
            h: SubgroupDatum::new("T2", MatrixGroup::trivial(2)),
            minus: leg(g(Matrix::from_ints(&[&[0, 1], &[1, 0]]))),
            plus: leg(g(Matrix::from_ints(&[&[1, 0], &[-1, -1]]))),
            ambient: Some(crate::cohomology::Ambient {
                group: SubgroupDatum::new("SU3", weyl_standard(WeylType::A, 3).unwrap()),
                embedding: Matrix::identity(2),
            }),
        })
    }

    #[test]
    fn su3_s7_matches() {
        let spec = su3_s7();
        let p = present(&spec, 24).unwrap();
        let report = verify(&spec, &p, 24, 10, 0);
        assert!(report.passed(), "{report}");
        assert_eq!(report.rows[7].odd_oracle, 1);
    }

    #[test]
    fn corrupted_shape_is_caught() {
        let spec = su3_s7();
        let mut p = present(&spec, 24).unwrap();
        if let PresentationShape::TensorExterior { base, .. } = &p.shape {
            p.shape = PresentationShape::TensorExterior {
                base: base.clone(),
                sphere_degree: 5,
            };
        }
        p.series = series_from_shape(&p.shape, 24).unwrap();
        let report = compare_series(&spec, &p, 24);
        assert!(!report.passed());
        assert_eq!(report.first_mismatch(), Some(5));

        let mut q = present(&spec, 24).unwrap();
        q.shape = PresentationShape::FreePolynomial(BaseRing::Polynomial(vec![4, 6]));
        assert_eq!(compare_series(&spec, &q, 24).shape_mismatch, Some(7));
    }
}
