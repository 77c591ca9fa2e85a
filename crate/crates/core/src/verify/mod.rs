//! Verification harness: exhaustive finite-field enumeration, seeded sampling
//! and structured reports.
//!
//! Reports are deterministic functions of the configuration: trials draw from
//! per-index random streams, work is split into fixed chunks, and partial
//! results are merged in chunk order. No timing is recorded in reports.

mod count;
mod gl5;
mod lemmas;
mod theorem;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{DimensionVector, Pair};
use crate::error::{Error, Result};
use crate::io::{EntryScalar, MatrixDoc, SUPPORTED_PRIMES};

pub use count::{check_component_count, random_dimension_vector};
pub use gl5::{gl5_expected_components, gl5_fixture_suite, GL5_COMPOSITIONS};
pub use lemmas::{check_lemmas, check_lemmas_for};
pub use theorem::{check_theorem_exhaustive, check_theorem_sampled, run_theorem_exhaustive, run_theorem_sampled};

/// Version of the report JSON layout (see `docs/schemas/report.schema.json`).
pub const REPORT_SCHEMA_VERSION: &str = "1.0.0";

/// Counterexamples kept per check (the ones with the smallest trial index).
pub const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sample,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "sample" => Ok(Mode::Sample),
            _ => Err(Error::InvalidConfig(format!("unknown mode {s:?} (exhaustive|sample)"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Sample => "sample",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub d: DimensionVector,
    pub mode: Mode,
    /// Prime `p` of the field `F_p`.
    pub field: u64,
    /// Trials per sampled population (generic and forced-defect each).
    pub trials: usize,
    pub seed: u64,
    /// Exhaustive mode requires `p^dim(n) <= 2^dim_cap`.
    pub dim_cap: usize,
    /// Minimal observed Richardson frequency among generic samples.
    pub generic_threshold: f64,
}

impl ExperimentConfig {
    pub fn new(d: DimensionVector) -> Self {
        ExperimentConfig {
            d,
            mode: Mode::Sample,
            field: crate::DEFAULT_PRIME,
            trials: 1000,
            seed: 0,
            dim_cap: 20,
            generic_threshold: 0.99,
        }
    }

    /// Number of matrices in the nilradical over `F_p`, if it fits in `u64`.
    pub fn population_size(&self) -> Option<u64> {
        self.field.checked_pow(u32::try_from(self.d.nilradical_dim()).ok()?)
    }

    pub fn validate(&self) -> Result<()> {
        if !SUPPORTED_PRIMES.contains(&self.field) {
            return Err(Error::UnsupportedField(format!(
                "F_{} (supported primes: {SUPPORTED_PRIMES:?})",
                self.field
            )));
        }
        if !(0.0..=1.0).contains(&self.generic_threshold) {
            return Err(Error::InvalidConfig("generic threshold must lie in [0,1]".into()));
        }
        match self.mode {
            Mode::Exhaustive => {
                let cap = 1u128 << self.dim_cap.min(127);
                let feasible = self.population_size().is_some_and(|m| u128::from(m) <= cap);
                if !feasible {
                    let bits = self.d.nilradical_dim() as f64 * (self.field as f64).log2();
                    return Err(Error::InvalidConfig(format!(
                        "exhaustive enumeration of {}^{} matrices needs a budget of 2^{:.1}, above dim cap 2^{}",
                        self.field,
                        self.d.nilradical_dim(),
                        bits,
                        self.dim_cap
                    )));
                }
            }
            Mode::Sample => {
                if self.trials == 0 {
                    return Err(Error::InvalidConfig("sample mode needs at least one trial".into()));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    /// Position in the enumeration or trial index.
    pub index: u64,
    pub context: String,
    pub matrix: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// Non-gating checks are findings: they are reported but do not affect
    /// the overall verdict.
    pub gating: bool,
    pub passed: bool,
    pub population: u64,
    pub violations: u64,
    pub counts: BTreeMap<String, u64>,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, gating: bool) -> Self {
        CheckResult {
            name: name.into(),
            gating,
            passed: true,
            population: 0,
            violations: 0,
            counts: BTreeMap::new(),
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn from_tally(name: impl Into<String>, gating: bool, tally: Tally) -> Self {
        let mut c = CheckResult::new(name, gating);
        c.population = tally.population;
        c.violations = tally.violations;
        c.counts = tally.counts;
        c.counterexamples = tally.examples;
        c.passed = c.violations == 0;
        c
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: String,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<ExperimentConfig>,
    /// `Λ(d)` of the configured dimension vector.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Pair>>,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(config: Option<ExperimentConfig>) -> Self {
        let components = config
            .as_ref()
            .map(|c| crate::composition::lambda_set(&c.d).into_iter().collect());
        VerificationReport {
            schema_version: REPORT_SCHEMA_VERSION.into(),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            config,
            components,
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        if check.gating && !check.passed {
            self.passed = false;
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let verdict = match (c.passed, c.gating) {
                (true, _) => "pass",
                (false, true) => "FAIL",
                (false, false) => "finding",
            };
            s.push_str(&format!(
                "{verdict:<8} {:<32} population={} violations={}\n",
                c.name, c.population, c.violations
            ));
            for n in &c.notes {
                s.push_str(&format!("         note: {n}\n"));
            }
        }
        s.push_str(if self.passed { "overall: pass\n" } else { "overall: FAIL\n" });
        s
    }
}

/// Order-sensitive accumulator: merging tallies in trial order keeps the
/// counterexamples with the smallest indices.
#[derive(Clone, Debug, Default, PartialEq)]
pub(crate) struct Tally {
    pub population: u64,
    pub violations: u64,
    pub counts: BTreeMap<String, u64>,
    pub examples: Vec<Counterexample>,
}

impl Tally {
    pub fn bump(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_insert(0) += 1;
    }

    pub fn violation<S: EntryScalar>(&mut self, index: u64, context: String, a: &crate::Matrix<S>, d: &DimensionVector) {
        self.violations += 1;
        if self.examples.len() < MAX_COUNTEREXAMPLES {
            self.examples.push(Counterexample {
                index,
                context,
                matrix: MatrixDoc::from_matrix(a, d),
            });
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.population += other.population;
        self.violations += other.violations;
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.examples.len());
        self.examples.extend(other.examples.into_iter().take(room));
    }
}

/// Chunk size for parallel enumeration; fixed so that merging is deterministic.
pub(crate) const CHUNK: u64 = 4096;

/// Runs `f` over `0..total` in fixed chunks (in parallel) and merges the
/// per-chunk results in chunk order.
pub(crate) fn chunked<T, F, M>(total: u64, f: F, mut merge: M, init: T) -> T
where
    T: Send,
    F: Fn(std::ops::Range<u64>) -> T + Sync + Send,
    M: FnMut(&mut T, T),
{
    use rayon::prelude::*;
    let chunks: Vec<u64> = (0..total.div_ceil(CHUNK)).collect();
    let parts: Vec<T> = chunks
        .par_iter()
        .map(|&c| f(c * CHUNK..((c + 1) * CHUNK).min(total)))
        .collect();
    let mut acc = init;
    for p in parts {
        merge(&mut acc, p);
    }
    acc
}

/// The `index`-th matrix of the nilradical over `F_p`, digits in base `p`
/// over the pattern positions (row-major).
pub(crate) fn enumerate_matrix<F: crate::FiniteField>(
    bs: &crate::BlockStructure,
    pattern: &[(usize, usize)],
    mut index: u64,
) -> crate::Matrix<F> {
    let n = bs.n();
    let mut a = crate::Matrix::zeros(n, n);
    for &(r, c) in pattern {
        a[(r, c)] = F::from_u64(index % F::ORDER);
        index /= F::ORDER;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[usize]) -> DimensionVector {
        DimensionVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn exhaustive_feasibility() {
        let mut cfg = ExperimentConfig::new(dv(&[1, 1, 1, 1, 1]));
        cfg.mode = Mode::Exhaustive;
        cfg.field = 2;
        assert!(cfg.validate().is_ok());
        cfg.dim_cap = 9;
        assert!(matches!(cfg.validate(), Err(Error::InvalidConfig(_))));
        cfg.dim_cap = 20;
        cfg.field = 32003;
        assert!(cfg.validate().is_err());
        cfg.field = 17;
        assert!(matches!(cfg.validate(), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("sample".parse::<Mode>().unwrap(), Mode::Sample);
        assert!("both".parse::<Mode>().is_err());
    }

    #[test]
    fn chunked_merge_is_ordered() {
        let v = chunked(10_000, |r| vec![r.start], |acc: &mut Vec<u64>, p| acc.extend(p), Vec::new());
        assert_eq!(v, vec![0, 4096, 8192]);
    }
}
