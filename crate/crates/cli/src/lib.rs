//! Batch driver: spec text in, report and exit status out.

pub mod bundled;
pub mod report;
pub mod specfile;

use eqcohom_core::cohomology::{present, validate, ActionSpec};
use eqcohom_core::verify::{verify, DEFAULT_SEED, DEFAULT_TRIALS};

pub use report::Report;
pub use specfile::{parse_spec, ParseError};

pub const DEFAULT_MAX_DEGREE: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Parse = 2,
    Validation = 3,
    Mismatch = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub max_degree: usize,
    pub verify: bool,
    pub trials: usize,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            max_degree: DEFAULT_MAX_DEGREE,
            verify: false,
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub status: ExitStatus,
    /// Absent only for parse errors.
    pub report: Option<Report>,
    /// One-line diagnostic for non-success statuses.
    pub message: Option<String>,
}

/// validate, classify and present, then verify when requested.
pub fn run_spec(spec: &ActionSpec, opts: &RunOptions) -> RunOutcome {
    let n = opts.max_degree;
    let validation = validate(spec, n);
    let mut report = Report::new(spec.name(), n, &validation);
    if !validation.passed() {
        let reasons: Vec<String> = validation.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        let message = format!("validation failed: {}", reasons.join("; "));
        report.error = Some(message.clone());
        return RunOutcome {
            status: ExitStatus::Validation,
            report: Some(report),
            message: Some(message),
        };
    }
    let presentation = match present(spec, n) {
        Ok(p) => p,
        Err(e) => {
            let message = format!("no presentation: {e}");
            report.error = Some(message.clone());
            return RunOutcome {
                status: ExitStatus::Validation,
                report: Some(report),
                message: Some(message),
            };
        }
    };
    report.set_presentation(&presentation);
    if opts.verify {
        let v = verify(spec, &presentation, n, opts.trials, opts.seed);
        report.set_verification(&v);
        if !v.passed() {
            let message = match (v.shape_mismatch, v.first_mismatch()) {
                (Some(d), _) => format!("verification failed: stored series disagrees with its shape at degree {d}"),
                (None, Some(d)) => format!("verification failed: first mismatch at degree {d}"),
                (None, None) => "verification failed: product or freeness checks".to_string(),
            };
            return RunOutcome {
                status: ExitStatus::Mismatch,
                report: Some(report),
                message: Some(message),
            };
        }
    }
    RunOutcome {
        status: ExitStatus::Success,
        report: Some(report),
        message: None,
    }
}

pub fn run_source(src: &str, opts: &RunOptions) -> RunOutcome {
    match parse_spec(src) {
        Ok(spec) => run_spec(&spec, opts),
        Err(e) => RunOutcome {
            status: ExitStatus::Parse,
            report: None,
            message: Some(format!("parse error at {e}")),
        },
    }
}
