//! The bound `|Λ(d)| <= t - 1` and its equality cases.

use rand::Rng;

use super::{CheckResult, ExperimentConfig, VerificationReport};
use crate::composition::{lambda_set, DimensionVector};
use crate::error::Result;
use crate::sample::trial_rng;

/// Stream offset for dimension-vector sampling.
const DIMS_STREAM: u64 = 1 << 41;

/// Uniform `t` in `1..=max_t`, parts uniform in `1..=max_part`.
pub fn random_dimension_vector<R: Rng>(rng: &mut R, max_t: usize, max_part: usize) -> DimensionVector {
    let t = rng.gen_range(1..=max_t);
    DimensionVector::new((0..t).map(|_| rng.gen_range(1..=max_part)).collect()).expect("positive parts")
}

/// Whether some `d_i = d_j`, `j - i > 1`, has an intermediate value different
/// from `d_i`.
fn has_gap(d: &DimensionVector) -> bool {
    d.all_pairs()
        .any(|p| p.j - p.i > 1 && d.d(p.i) == d.d(p.j) && (p.i + 1..p.j).any(|l| d.d(l) != d.d(p.i)))
}

/// Checks the bound on `cfg.d` plus `cfg.trials` random vectors
/// (`t <= 9`, parts `<= 6`).
pub fn check_component_count(cfg: &ExperimentConfig) -> Result<VerificationReport> {
    let mut population = vec![cfg.d.clone()];
    population.extend((0..cfg.trials as u64).map(|k| random_dimension_vector(&mut trial_rng(cfg.seed, DIMS_STREAM + k), 9, 6)));

    let mut bound = CheckResult::new("component_bound", true);
    let mut equality = CheckResult::new("component_equality", true);
    let mut gap = CheckResult::new("gap_mechanism", false);
    gap.notes.push(
        "claim: a repeated value d_i = d_j with a different intermediate value forces |Λ| <= t-2".into(),
    );
    for d in &population {
        let t = d.t();
        let size = lambda_set(d).len();
        bound.population += 1;
        if size + 1 > t.max(1) {
            bound.violations += 1;
            bound.notes.push(format!("{d}: |Λ| = {size}"));
        }
        if d.is_monotone() || d.is_pairwise_distinct() {
            equality.population += 1;
            *equality.counts.entry(if d.is_monotone() { "monotone" } else { "distinct" }.into()).or_insert(0) += 1;
            if size + 1 != t {
                equality.violations += 1;
                equality.notes.push(format!("{d}: |Λ| = {size}, t - 1 = {}", t - 1));
            }
        }
        if has_gap(d) {
            gap.population += 1;
            if size + 2 > t {
                gap.violations += 1;
                if gap.notes.len() < 6 {
                    gap.notes.push(format!("{d}: |Λ| = {size} = t - 1"));
                }
            }
        }
    }
    for c in [&mut bound, &mut equality, &mut gap] {
        c.passed = c.violations == 0;
    }
    let mut report = VerificationReport::new(Some(cfg.clone()));
    report.push(bound);
    report.push(equality);
    report.push(gap);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures() {
        let d = DimensionVector::new(vec![7, 5, 2, 3, 5, 1, 2, 6, 5]).unwrap();
        assert_eq!(lambda_set(&d).len(), 4);
        assert_eq!(lambda_set(&DimensionVector::new(vec![1, 2, 3, 4]).unwrap()).len(), 3);
        assert_eq!(lambda_set(&DimensionVector::new(vec![1, 3, 2]).unwrap()).len(), 2);
    }

    #[test]
    fn gap_claim_has_a_counterexample() {
        let d = DimensionVector::new(vec![4, 1, 4, 3]).unwrap();
        assert!(has_gap(&d));
        assert_eq!(lambda_set(&d).len(), 3);
    }

    #[test]
    fn bound_holds_on_samples() {
        let mut cfg = ExperimentConfig::new(DimensionVector::new(vec![2, 1, 2]).unwrap());
        cfg.trials = 500;
        let r = check_component_count(&cfg).unwrap();
        assert!(r.passed, "{}", r.summary());
        assert_eq!(r.check("component_bound").unwrap().population, 501);
    }
}
