//! Check-by-check verification of a built algebra.
//!
//! Every check returns a [`CheckResult`]; [`run_all`] runs the registered
//! checks (in parallel when allowed) and reports them in registration order.
//! All decisions are exact.

mod algebra;
mod lie;
mod rep;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::algcore::AlgebraTable;
use crate::construction2::Representation;
use crate::par::{self, Execution};

pub use algebra::{
    check_counit_split, check_dimension, check_idempotent_spectrum, check_jordan_subalgebra, check_nonpa,
    check_operator_chain, check_product, check_simplicity, check_tau_assoc, check_tau_nondeg, check_tau_values,
    check_unit, check_well_defined, dimension_prediction, idempotent_spectrum, DimensionPrediction, PeirceEntry,
};
pub use lie::{
    check_casimir, check_high_wt, check_hwv_regular, check_k_symmetry, check_killing, check_okubo, check_s_of_e_s,
    check_trace_identity, high_wt_table, okubo_numerology, regular_components, HighWtTable,
};
pub use rep::{check_pi_proj, check_sigma};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Wall-clock time; left out of the JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn new(name: &str, status: Status, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            status,
            detail: detail.into(),
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn pass(name: &str, detail: impl Into<String>) -> Self {
        Self::new(name, Status::Pass, detail)
    }

    pub fn fail(name: &str, detail: impl Into<String>, witness: Value) -> Self {
        Self::new(name, Status::Fail, detail).with_witness(witness)
    }

    pub fn skipped(name: &str, reason: impl Into<String>) -> Self {
        Self::new(name, Status::Skipped, reason)
    }

    pub fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Pass when `ok`, otherwise fail with the given witness.
pub(crate) fn verdict(name: &str, ok: bool, detail: impl Into<String>, witness: impl FnOnce() -> Value) -> CheckResult {
    if ok {
        CheckResult::pass(name, detail)
    } else {
        CheckResult::fail(name, detail, witness())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub dim_a: usize,
    pub seed: u64,
    pub tool_version: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(type_name: String, dim_a: usize, seed: u64, checks: Vec<CheckResult>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Inconclusive => summary.inconclusive += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport {
            type_name,
            dim_a,
            seed,
            tool_version: crate::TOOL_VERSION.to_string(),
            checks,
            summary,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> crate::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// Human-readable summary, one line per check.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "type {}  dimA {}  seed {}", self.type_name, self.dim_a, self.seed);
        for c in &self.checks {
            let _ = writeln!(
                s,
                "  {:<13} {:<22} {:>8.2?}  {}",
                format!("[{}]", c.status.label()),
                c.name,
                c.elapsed,
                c.detail
            );
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "{} pass, {} fail, {} inconclusive, {} skipped",
            m.pass, m.fail, m.inconclusive, m.skipped
        );
        s
    }
}

/// Knobs of the suite.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random samples for sampled identities.
    pub samples: usize,
    /// Exhaustive associativity check regardless of size.
    pub exhaustive: bool,
    pub simplicity_trials: usize,
    pub peirce_count: usize,
    pub okubo_samples: usize,
    pub exec: Execution,
    /// Extra representation for the σ checks.
    pub rep: Option<Representation>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 1,
            samples: 100,
            exhaustive: false,
            simplicity_trials: 20,
            peirce_count: 10,
            okubo_samples: 20,
            exec: Execution::default(),
            rep: None,
        }
    }
}

type Check<'a> = Box<dyn Fn() -> CheckResult + Send + Sync + 'a>;

fn timed(f: &Check<'_>) -> CheckResult {
    let t0 = Instant::now();
    let mut r = f();
    r.elapsed = t0.elapsed();
    r
}

/// Runs every registered check.
pub fn run_all(t: &AlgebraTable, cfg: &VerifyConfig) -> VerificationReport {
    let lie = t.lie();
    let s = cfg.seed;
    let n = cfg.samples;
    let checks: Vec<Check<'_>> = vec![
        Box::new(|| check_dimension(t)),
        Box::new(|| check_killing(lie)),
        Box::new(|| check_casimir(lie)),
        Box::new(|| check_trace_identity(lie)),
        Box::new(|| check_s_of_e_s(lie)),
        Box::new(|| check_k_symmetry(t.basis())),
        Box::new(|| check_unit(t)),
        Box::new(|| check_product(t, n.min(20), s)),
        Box::new(|| check_well_defined(t, 10, s)),
        Box::new(|| check_tau_values(t, n.min(20), s)),
        Box::new(|| check_tau_assoc(t, cfg.exhaustive || t.dim() <= 64, n, s, cfg.exec)),
        Box::new(|| check_tau_nondeg(t, cfg.exec)),
        Box::new(|| check_high_wt(t.basis())),
        Box::new(|| check_hwv_regular(t.basis())),
        Box::new(|| check_okubo(lie, cfg.okubo_samples, s)),
        Box::new(|| check_idempotent_spectrum(t, cfg.peirce_count, s)),
        Box::new(|| check_simplicity(t, cfg.simplicity_trials, s)),
        Box::new(|| check_jordan_subalgebra(t)),
        Box::new(|| check_nonpa(t, n, s)),
        Box::new(|| check_counit_split(t, n.min(50), s)),
        Box::new(|| check_operator_chain(t, s)),
        Box::new(|| check_sigma(t, cfg.rep.as_ref())),
        Box::new(|| check_pi_proj(t, cfg.rep.as_ref(), n.min(20), s)),
    ];
    let results = par::map(cfg.exec, &checks, timed);
    VerificationReport::new(t.datum().spec().to_string(), t.dim(), cfg.seed, results)
}

/// Names of the registered checks, in report order.
pub const CHECK_NAMES: [&str; 23] = [
    "dimension",
    "killing_form",
    "casimir",
    "trace_identity",
    "s_of_e_s",
    "k_symmetry",
    "unit",
    "product",
    "well_defined",
    "tau_values",
    "tau_assoc",
    "tau_nondeg",
    "high_wt",
    "hwv_regular",
    "okubo",
    "idempotent_spectrum",
    "simplicity",
    "jordan_subalgebra",
    "nonpa",
    "counit_split",
    "operator_chain",
    "sigma",
    "pi_proj",
];
