//! Pointwise check of `Z = ∪_{Λ(d)} Z_ij`.

use super::{chunked, enumerate_matrix, CheckResult, ExperimentConfig, Mode, Tally, VerificationReport};
use crate::error::{Error, Result};
use crate::io::EntryScalar;
use crate::linalg::{FiniteField, Matrix};
use crate::sample::{forced_defect, random_nilradical, trial_rng, ForcedDefect};
use crate::strata::{RankTable, Strata};
use crate::with_prime_field;

/// Stream offset separating forced-defect trials from generic trials.
pub(crate) const FORCED_STREAM: u64 = 1 << 40;

/// The `index`-th generic sample.
pub(crate) fn generic_sample<F: FiniteField>(cfg: &ExperimentConfig, index: u64) -> Matrix<F> {
    random_nilradical(&cfg.d, &mut trial_rng(cfg.seed, index))
}

/// The `index`-th forced-defect sample; `None` when `t = 1`.
pub(crate) fn forced_sample<F: FiniteField>(cfg: &ExperimentConfig, index: u64) -> Option<(Matrix<F>, ForcedDefect)> {
    forced_defect(&cfg.d, &mut trial_rng(cfg.seed, FORCED_STREAM + index))
}

/// Evaluates one matrix against the theorem and the Jordan-type criterion.
/// Returns whether the matrix is of Richardson type.
pub(crate) fn theorem_point<F: FiniteField + EntryScalar>(
    st: &Strata,
    a: &Matrix<F>,
    tab: &RankTable,
    index: u64,
    tally: &mut Tally,
) -> bool {
    let d = st.dims();
    let rich = st.is_richardson_unchecked(a);
    let defective = st.table_defective(tab);
    let members = st.table_lambda_membership(tab);
    tally.population += 1;
    tally.bump(if rich { "richardson" } else { "defective" });
    for p in &members {
        tally.bump(&format!("stratum{p}"));
    }
    if rich == defective {
        tally.bump("profile_mismatch");
        tally.violation(index, format!("Jordan type richardson={rich} but window defect={defective}"), a, d);
    }
    if !rich && members.is_empty() {
        tally.bump("uncovered_defective");
        tally.violation(index, "defective matrix outside every Λ-stratum".into(), a, d);
    }
    if rich && !members.is_empty() {
        tally.bump("richardson_in_stratum");
        tally.violation(index, format!("Richardson-type matrix inside {members:?}"), a, d);
    }
    rich
}

fn ensure_keys(c: &mut CheckResult, keys: &[&str]) {
    for k in keys {
        c.counts.entry((*k).to_string()).or_insert(0);
    }
}

const THEOREM_KEYS: [&str; 5] = ["richardson", "defective", "uncovered_defective", "richardson_in_stratum", "profile_mismatch"];

/// Enumerates the whole nilradical over `F` (no feasibility check).
pub fn run_theorem_exhaustive<F: FiniteField + EntryScalar>(cfg: &ExperimentConfig) -> CheckResult {
    let st = Strata::new(&cfg.d);
    let bs = st.blocks().clone();
    let pattern = bs.pattern();
    let total = F::ORDER.pow(pattern.len() as u32);
    let tally = chunked(
        total,
        |range| {
            let mut t = Tally::default();
            for idx in range {
                let a: Matrix<F> = enumerate_matrix(&bs, &pattern, idx);
                let tab = st.rank_table(&a);
                theorem_point(&st, &a, &tab, idx, &mut t);
            }
            t
        },
        |acc, part| acc.merge(part),
        Tally::default(),
    );
    let mut c = CheckResult::from_tally("theorem_exhaustive", true, tally);
    ensure_keys(&mut c, &THEOREM_KEYS);
    for p in st.lambda_pairs() {
        c.counts.entry(format!("stratum{p}")).or_insert(0);
    }
    c.notes.push(format!("all {total} matrices of the nilradical over F_{}", F::ORDER));
    c
}

/// Generic and forced-defect sampling over `F`.
pub fn run_theorem_sampled<F: FiniteField + EntryScalar>(cfg: &ExperimentConfig) -> Vec<CheckResult> {
    let st = Strata::new(&cfg.d);
    let trials = cfg.trials as u64;
    let generic = chunked(
        trials,
        |range| {
            let mut t = Tally::default();
            for idx in range {
                let a: Matrix<F> = generic_sample(cfg, idx);
                let tab = st.rank_table(&a);
                theorem_point(&st, &a, &tab, idx, &mut t);
            }
            t
        },
        |acc, part| acc.merge(part),
        Tally::default(),
    );
    let forced = chunked(
        trials,
        |range| {
            let mut t = Tally::default();
            for idx in range {
                let Some((a, fd)) = forced_sample::<F>(cfg, idx) else { continue };
                let tab = st.rank_table(&a);
                if !st.table_in_zk(&tab, fd.i, fd.j, fd.k) {
                    t.bump("generator_failure");
                    t.violation(idx, format!("forced defect {fd:?} not realised"), &a, &cfg.d);
                }
                theorem_point(&st, &a, &tab, idx, &mut t);
            }
            t
        },
        |acc, part| acc.merge(part),
        Tally::default(),
    );

    let mut g = CheckResult::from_tally("theorem_generic", true, generic);
    ensure_keys(&mut g, &THEOREM_KEYS);
    let freq = g.count("richardson") as f64 / g.population.max(1) as f64;
    g.notes.push(format!(
        "Richardson frequency {:.4} (threshold {:.2}) over F_{}",
        freq,
        cfg.generic_threshold,
        F::ORDER
    ));
    if freq < cfg.generic_threshold {
        g.passed = false;
    }
    let mut f = CheckResult::from_tally("theorem_forced", true, forced);
    ensure_keys(&mut f, &THEOREM_KEYS);
    f.counts.entry("generator_failure".into()).or_insert(0);
    if cfg.d.t() == 1 {
        f.notes.push("t = 1: no windows, nothing to force".into());
    }
    vec![g, f]
}

/// Exhaustive theorem check, dispatching on the configured prime.
pub fn check_theorem_exhaustive(cfg: &ExperimentConfig) -> Result<VerificationReport> {
    if cfg.mode != Mode::Exhaustive {
        return Err(Error::InvalidConfig("exhaustive check needs mode exhaustive".into()));
    }
    cfg.validate()?;
    let check = with_prime_field!(cfg.field, F => run_theorem_exhaustive::<F>(cfg))?;
    let mut report = VerificationReport::new(Some(cfg.clone()));
    report.push(check);
    Ok(report)
}

/// Sampled theorem check, dispatching on the configured prime.
pub fn check_theorem_sampled(cfg: &ExperimentConfig) -> Result<VerificationReport> {
    if cfg.mode != Mode::Sample {
        return Err(Error::InvalidConfig("sampled check needs mode sample".into()));
    }
    cfg.validate()?;
    let checks = with_prime_field!(cfg.field, F => run_theorem_sampled::<F>(cfg))?;
    let mut report = VerificationReport::new(Some(cfg.clone()));
    for c in checks {
        report.push(c);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::DimensionVector;

    fn exhaustive(v: &[usize], p: u64) -> ExperimentConfig {
        let mut cfg = ExperimentConfig::new(DimensionVector::new(v.to_vec()).unwrap());
        cfg.mode = Mode::Exhaustive;
        cfg.field = p;
        cfg
    }

    #[test]
    fn borel_gl5_over_f2() {
        let r = check_theorem_exhaustive(&exhaustive(&[1, 1, 1, 1, 1], 2)).unwrap();
        let c = &r.checks[0];
        assert!(r.passed, "{}", r.summary());
        assert_eq!(c.population, 1024);
        assert_eq!(c.count("richardson"), 64);
        assert_eq!(c.count("defective"), 960);
        assert_eq!(c.count("stratum(1,2)"), 512);
    }

    #[test]
    fn four_one_has_only_zero() {
        let r = check_theorem_exhaustive(&exhaustive(&[4, 1], 2)).unwrap();
        let c = &r.checks[0];
        assert!(r.passed);
        assert_eq!(c.count("defective"), 1);
        assert_eq!(c.count("stratum(1,2)"), 1);
    }

    #[test]
    fn single_block_and_pair() {
        let r = check_theorem_exhaustive(&exhaustive(&[1, 1], 3)).unwrap();
        assert!(r.passed);
        assert_eq!(r.checks[0].count("defective"), 1);
        let r = check_theorem_exhaustive(&exhaustive(&[3], 2)).unwrap();
        assert!(r.passed);
        assert_eq!(r.checks[0].count("richardson"), 1);
    }

    #[test]
    fn sampled_is_seed_stable() {
        let mut cfg = ExperimentConfig::new(DimensionVector::new(vec![3, 1, 2, 2]).unwrap());
        cfg.trials = 200;
        cfg.seed = 11;
        let a = check_theorem_sampled(&cfg).unwrap();
        let b = check_theorem_sampled(&cfg).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert!(a.passed, "{}", a.summary());
        assert_eq!(a.check("theorem_forced").unwrap().count("richardson"), 0);
    }

    #[test]
    fn wrong_mode_is_rejected() {
        let cfg = exhaustive(&[1, 1], 2);
        assert!(check_theorem_sampled(&cfg).is_err());
    }
}
