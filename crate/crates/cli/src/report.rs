//! The machine report (JSON) and its text rendering.
//!
//! Exact values (series coefficients, polynomial coefficients) are strings
//! holding integers or fractions `p/q`; counts and degrees are plain JSON
//! integers. The schema is described in `docs/report-schema.md`.

use std::fmt::{self, Write as _};

use eqcohom_core::cohomology::{RingPresentation, ValidationReport};
use eqcohom_core::verify::VerificationReport;
use serde::{Deserialize, Serialize};

pub const FORMAT: &str = "eqcohom-report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub format: String,
    pub spec: String,
    pub max_degree: usize,
    pub validation: ValidationSection,
    pub case: Option<String>,
    pub swapped: bool,
    pub k: Option<usize>,
    pub trichotomy: Option<TrichotomySection>,
    pub generators: Vec<GeneratorEntry>,
    pub relations: Vec<String>,
    pub shape: Option<String>,
    pub sphere_degree: Option<usize>,
    pub euler: Vec<EulerEntry>,
    pub series: Vec<String>,
    pub verification: Option<VerificationSection>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationSection {
    pub passed: bool,
    pub checks: Vec<CheckEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub degree: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrichotomySection {
    pub case: String,
    pub k: usize,
    pub j: Option<usize>,
    pub n_minus: usize,
    pub n_plus: usize,
    pub p_minus: String,
    pub p_plus: String,
    pub support_minus: Vec<usize>,
    pub support_plus: Vec<usize>,
    pub q: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    pub degree: usize,
    pub representative: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerEntry {
    pub side: String,
    pub degree: usize,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSection {
    pub verdict: String,
    pub first_mismatch: Option<usize>,
    pub shape_mismatch: Option<usize>,
    pub rows: Vec<RowEntry>,
    pub spotchecks: Vec<SpotCheckEntry>,
    pub freeness: Vec<FreenessEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowEntry {
    pub degree: usize,
    pub even_oracle: usize,
    pub odd_oracle: usize,
    pub even_presentation: usize,
    pub odd_presentation: usize,
    pub exactness_defect: Option<i64>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpotCheckEntry {
    pub kind: String,
    pub trial: usize,
    pub inputs: String,
    pub output: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessEntry {
    pub side: String,
    pub sphere_dim: usize,
    pub required: bool,
    pub first_failure: Option<usize>,
    pub passed: bool,
}

impl Report {
    pub fn new(spec: &str, max_degree: usize, validation: &ValidationReport) -> Self {
        Report {
            format: FORMAT.into(),
            spec: spec.into(),
            max_degree,
            validation: ValidationSection {
                passed: validation.passed(),
                checks: validation
                    .checks
                    .iter()
                    .map(|c| CheckEntry {
                        name: c.name.clone(),
                        passed: c.passed,
                        degree: c.degree,
                        detail: c.detail.clone(),
                    })
                    .collect(),
            },
            case: None,
            swapped: false,
            k: None,
            trichotomy: None,
            generators: Vec::new(),
            relations: Vec::new(),
            shape: None,
            sphere_degree: None,
            euler: Vec::new(),
            series: Vec::new(),
            verification: None,
            error: None,
        }
    }

    pub fn set_presentation(&mut self, p: &RingPresentation) {
        self.case = Some(p.case.to_string());
        self.swapped = p.swapped;
        self.k = p.dihedral.as_ref().map(|d| d.k);
        self.trichotomy = p.trichotomy.as_ref().map(|t| TrichotomySection {
            case: t.case.to_string(),
            k: t.k,
            j: t.j,
            n_minus: t.n_minus,
            n_plus: t.n_plus,
            p_minus: t.p_minus.to_string(),
            p_plus: t.p_plus.to_string(),
            support_minus: t.support_minus.clone(),
            support_plus: t.support_plus.clone(),
            q: t.q.as_ref().map(|q| q.to_string()),
        });
        self.generators = p
            .generators
            .iter()
            .map(|g| GeneratorEntry {
                name: g.name.clone(),
                degree: g.degree,
                representative: g.representative.clone(),
            })
            .collect();
        self.relations = p.relations.clone();
        self.shape = Some(p.shape.tag().to_string());
        self.sphere_degree = p.sphere_degree;
        self.euler = p
            .euler
            .iter()
            .map(|(side, e)| EulerEntry {
                side: side.to_string(),
                degree: e.degree,
                class: e.e.to_string(),
            })
            .collect();
        self.series = p
            .series
            .truncate(self.max_degree.min(p.series.truncation()))
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect();
    }

    pub fn set_verification(&mut self, v: &VerificationReport) {
        self.verification = Some(VerificationSection {
            verdict: v.verdict().into(),
            first_mismatch: v.first_mismatch(),
            shape_mismatch: v.shape_mismatch,
            rows: v
                .rows
                .iter()
                .map(|r| RowEntry {
                    degree: r.degree,
                    even_oracle: r.even_oracle,
                    odd_oracle: r.odd_oracle,
                    even_presentation: r.even_presentation,
                    odd_presentation: r.odd_presentation,
                    exactness_defect: r.exactness_defect,
                    matches: r.matches,
                })
                .collect(),
            spotchecks: v
                .spotchecks
                .iter()
                .map(|c| SpotCheckEntry {
                    kind: c.kind.clone(),
                    trial: c.trial,
                    inputs: c.inputs.clone(),
                    output: c.output.clone(),
                    passed: c.passed,
                })
                .collect(),
            freeness: v
                .freeness
                .iter()
                .map(|f| FreenessEntry {
                    side: f.side.to_string(),
                    sphere_dim: f.sphere_dim,
                    required: f.required,
                    first_failure: f.first_failure,
                    passed: f.passed(),
                })
                .collect(),
        });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "spec {} (max degree {})", self.spec, self.max_degree)?;
        let v = &self.validation;
        writeln!(
            f,
            "validation: {} ({} checks)",
            if v.passed { "pass" } else { "FAIL" },
            v.checks.len()
        )?;
        for c in &v.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            match c.degree {
                Some(d) if !c.passed => writeln!(f, "  {mark} {}: {} (degree {d})", c.name, c.detail)?,
                _ => writeln!(f, "  {mark} {}: {}", c.name, c.detail)?,
            }
        }
        if let Some(e) = &self.error {
            writeln!(f, "error: {e}")?;
        }
        let Some(case) = &self.case else {
            return Ok(());
        };
        write!(f, "case: {case}")?;
        if self.swapped {
            write!(f, " (legs swapped)")?;
        }
        writeln!(f)?;
        if let Some(k) = self.k {
            writeln!(f, "k = {k}")?;
        }
        if let Some(t) = &self.trichotomy {
            match t.j {
                Some(j) => writeln!(f, "trichotomy: case {} (j = {j})", t.case)?,
                None => writeln!(f, "trichotomy: case {}", t.case)?,
            }
            writeln!(f, "  n- = {}, n+ = {}", t.n_minus, t.n_plus)?;
            writeln!(f, "  p- = {}  support {:?}", t.p_minus, t.support_minus)?;
            writeln!(f, "  p+ = {}  support {:?}", t.p_plus, t.support_plus)?;
            if let Some(q) = &t.q {
                writeln!(f, "  q = {q}")?;
            }
        }
        if let Some(shape) = &self.shape {
            writeln!(f, "shape: {shape}")?;
        }
        if let Some(d) = self.sphere_degree {
            writeln!(f, "sphere degree {d}")?;
        }
        writeln!(f, "generators:")?;
        for g in &self.generators {
            match &g.representative {
                Some(r) => writeln!(f, "  {} (degree {}) = {r}", g.name, g.degree)?,
                None => writeln!(f, "  {} (degree {})", g.name, g.degree)?,
            }
        }
        if !self.relations.is_empty() {
            writeln!(f, "relations:")?;
            for r in &self.relations {
                writeln!(f, "  {r}")?;
            }
        }
        for e in &self.euler {
            writeln!(f, "euler class {} (degree {}) = {}", e.side, e.degree, e.class)?;
        }
        writeln!(f, "series: {}", self.series.join(", "))?;
        if let Some(v) = &self.verification {
            writeln!(f, "verification: {}", v.verdict)?;
            let mut line = format!("  {} degrees compared", v.rows.len());
            match v.first_mismatch {
                Some(d) => write!(line, ", first mismatch at degree {d}")?,
                None => write!(line, ", no mismatch")?,
            }
            writeln!(f, "{line}")?;
            if let Some(d) = v.shape_mismatch {
                writeln!(f, "  stored series disagrees with its shape at degree {d}")?;
            }
            let failed: Vec<&SpotCheckEntry> = v.spotchecks.iter().filter(|c| !c.passed).collect();
            writeln!(f, "  product checks: {} run, {} failed", v.spotchecks.len(), failed.len())?;
            for c in failed {
                writeln!(f, "    FAIL {} #{}: {} -> {}", c.kind, c.trial, c.inputs, c.output)?;
            }
            for r in &v.freeness {
                let status = match (r.required, r.first_failure) {
                    (false, _) => "not required".to_string(),
                    (true, None) => "ok".to_string(),
                    (true, Some(d)) => format!("fails at degree {d}"),
                };
                writeln!(f, "  freeness {}: sphere {} {status}", r.side, r.sphere_dim)?;
            }
        }
        Ok(())
    }
}
