//! Pointwise containments between the strata `Z_ij^k`.
//!
//! Each containment is its own check, evaluated on the same population as the
//! theorem check (all matrices in exhaustive mode; generic plus forced-defect
//! samples in sample mode).

use super::theorem::{forced_sample, generic_sample};
use super::{chunked, enumerate_matrix, CheckResult, ExperimentConfig, Mode, Tally, VerificationReport};
use crate::composition::{d_less, gamma_set, kappa, DimensionVector, Pair, PairSet};
use crate::diagram::r_rank;
use crate::error::Result;
use crate::io::EntryScalar;
use crate::linalg::{FiniteField, Matrix};
use crate::strata::{RankTable, Strata};
use crate::tableau::boxes_between;
use crate::with_prime_field;

/// Per-pair data needed by the containments.
struct PairInfo {
    pair: Pair,
    kappa: usize,
    in_gamma: bool,
    in_lambda: bool,
    /// Indices of `d_<[ij]` attaining its maximal value (candidates for `i0 <= j0`).
    maximal_less: Vec<usize>,
    /// Intermediate `l` with `min(d_i,d_j) <= d_l <= max(d_i,d_j)`.
    splitters: Vec<usize>,
    /// `Γ` pairs strictly inside the window, `i <= k < l <= j`.
    gamma_inside: Vec<Pair>,
}

fn pair_infos(d: &DimensionVector) -> Vec<PairInfo> {
    let gamma: PairSet = gamma_set(d);
    let lambda: PairSet = crate::composition::lambda_set(d);
    d.all_pairs()
        .map(|p| {
            let less = d_less(d, p.i, p.j).expect("pair in range");
            let maximal_less = match less.iter().map(|&l| d.d(l)).max() {
                Some(m) => less.iter().copied().filter(|&l| d.d(l) == m).collect(),
                None => Vec::new(),
            };
            let (lo, hi) = (d.d(p.i).min(d.d(p.j)), d.d(p.i).max(d.d(p.j)));
            PairInfo {
                pair: p,
                kappa: kappa(d, p.i, p.j).expect("pair in range"),
                in_gamma: gamma.contains(&p),
                in_lambda: lambda.contains(&p),
                maximal_less,
                splitters: (p.i + 1..p.j).filter(|&l| lo <= d.d(l) && d.d(l) <= hi).collect(),
                gamma_inside: gamma.iter().copied().filter(|q| p.i <= q.i && q.j <= p.j && *q != p).collect(),
            }
        })
        .collect()
}

#[derive(Default)]
struct LemmaTallies {
    below_kappa: Tally,
    above_kappa: Tally,
    outside_gamma: Tally,
    outside_gamma_split: Tally,
    outside_lambda: Tally,
    complement_union: Tally,
}

impl LemmaTallies {
    fn merge(&mut self, o: LemmaTallies) {
        self.below_kappa.merge(o.below_kappa);
        self.above_kappa.merge(o.above_kappa);
        self.outside_gamma.merge(o.outside_gamma);
        self.outside_gamma_split.merge(o.outside_gamma_split);
        self.outside_lambda.merge(o.outside_lambda);
        self.complement_union.merge(o.complement_union);
    }
}

fn lemma_point<F: FiniteField + EntryScalar>(
    st: &Strata,
    infos: &[PairInfo],
    a: &Matrix<F>,
    tab: &RankTable,
    index: u64,
    t: &mut LemmaTallies,
) {
    let d = st.dims();
    let z = |i: usize, j: usize| st.table_in_z(tab, i, j);
    for info in infos {
        let Pair { i, j } = info.pair;
        let in_zij = z(i, j);

        // Z_ij^l ⊆ Z_ij for l < κ
        for l in 1..info.kappa {
            if st.table_in_zk(tab, i, j, l) {
                t.below_kappa.population += 1;
                if !in_zij {
                    t.below_kappa.violation(index, format!("in Z{}^{l} but not Z{} (kappa {})", info.pair, info.pair, info.kappa), a, d);
                }
            }
        }

        // Z_ij^l ⊆ Z_{i j0} ∪ Z_{i0 j} for κ < l <= j - i, for some i0 <= j0
        // among the maximal elements of d_<[ij]
        for l in info.kappa + 1..=j - i {
            if st.table_in_zk(tab, i, j, l) {
                t.above_kappa.population += 1;
                let m = &info.maximal_less;
                debug_assert!(!m.is_empty(), "l > kappa forces d_< nonempty");
                let covered = m
                    .iter()
                    .any(|&i0| m.iter().filter(|&&j0| i0 <= j0).any(|&j0| z(i, j0) || z(i0, j)));
                if !covered {
                    t.above_kappa.violation(
                        index,
                        format!("in Z{}^{l}, not in Z({i},j0) ∪ Z(i0,{j}) for i0 <= j0 in {m:?}", info.pair),
                        a,
                        d,
                    );
                }
            }
        }

        if !in_zij {
            continue;
        }

        // outside Γ: Z_ij ⊆ ∪ Z_kl over Γ pairs inside the window; the
        // single split Z_il ∪ Z_lj is tracked separately
        if !info.in_gamma {
            t.outside_gamma.population += 1;
            if !info.gamma_inside.iter().any(|q| z(q.i, q.j)) {
                t.outside_gamma.violation(index, format!("in Z{} but in no Γ-stratum inside the window", info.pair), a, d);
            }
            t.outside_gamma_split.population += 1;
            if !info.splitters.iter().any(|&l| z(i, l) || z(l, j)) {
                t.outside_gamma_split.violation(
                    index,
                    format!("in Z{} but in no Z(i,l) ∪ Z(l,j) with l in {:?}", info.pair, info.splitters),
                    a,
                    d,
                );
            }
        }

        // Γ \ Λ: Z_ij is covered by Λ-strata
        if info.in_gamma && !info.in_lambda {
            t.outside_lambda.population += 1;
            if st.table_lambda_membership(tab).is_empty() {
                t.outside_lambda.violation(index, format!("in Z{} but in no Λ-stratum", info.pair), a, d);
            }
        }
    }

    // Z = ∪_{all i<j} Z_ij
    if !st.is_richardson_unchecked(a) {
        t.complement_union.population += 1;
        if !infos.iter().any(|info| z(info.pair.i, info.pair.j)) {
            t.complement_union.violation(index, "defective but in no Z_ij".into(), a, d);
        }
    }
}

/// `r_ij^k > 0` exactly for `k <= j - i`, over all windows (symbolic).
fn empty_strata(d: &DimensionVector) -> CheckResult {
    let mut c = CheckResult::new("empty_strata", true);
    for p in d.all_pairs() {
        for k in 1..=p.j - p.i + 2 {
            c.population += 1;
            let r = r_rank(d, p.i, p.j, k).expect("pair in range");
            if (r > 0) != (k <= p.j - p.i) {
                c.violations += 1;
                c.notes.push(format!("r{}^{k} = {r}", p));
            }
        }
    }
    c.passed = c.violations == 0;
    c
}

/// Boxes strictly between `i` and `j` in row `s(i,j)` of `T(d)` equal `κ(i,j) - 1`.
fn kappa_tableau(d: &DimensionVector) -> CheckResult {
    let mut c = CheckResult::new("kappa_tableau", true);
    for p in d.all_pairs() {
        c.population += 1;
        let b = boxes_between(d, p.i, p.j).expect("pair in range");
        let k = kappa(d, p.i, p.j).expect("pair in range");
        if b + 1 != k {
            c.violations += 1;
            c.notes.push(format!("{p}: {b} boxes, kappa {k}"));
        }
    }
    c.passed = c.violations == 0;
    c
}

/// All lemma checks over `F` for the configured population.
pub fn check_lemmas_for<F: FiniteField + EntryScalar>(cfg: &ExperimentConfig) -> Vec<CheckResult> {
    let st = Strata::new(&cfg.d);
    let infos = pair_infos(&cfg.d);
    let tallies = match cfg.mode {
        Mode::Exhaustive => {
            let bs = st.blocks().clone();
            let pattern = bs.pattern();
            let total = F::ORDER.pow(pattern.len() as u32);
            chunked(
                total,
                |range| {
                    let mut t = LemmaTallies::default();
                    for idx in range {
                        let a: Matrix<F> = enumerate_matrix(&bs, &pattern, idx);
                        let tab = st.rank_table(&a);
                        lemma_point(&st, &infos, &a, &tab, idx, &mut t);
                    }
                    t
                },
                |acc, part| acc.merge(part),
                LemmaTallies::default(),
            )
        }
        Mode::Sample => {
            let trials = cfg.trials as u64;
            let mut generic = chunked(
                trials,
                |range| {
                    let mut t = LemmaTallies::default();
                    for idx in range {
                        let a: Matrix<F> = generic_sample(cfg, idx);
                        let tab = st.rank_table(&a);
                        lemma_point(&st, &infos, &a, &tab, idx, &mut t);
                    }
                    t
                },
                |acc, part| acc.merge(part),
                LemmaTallies::default(),
            );
            let forced = chunked(
                trials,
                |range| {
                    let mut t = LemmaTallies::default();
                    for idx in range {
                        let Some((a, _)) = forced_sample::<F>(cfg, idx) else { continue };
                        let tab = st.rank_table(&a);
                        lemma_point(&st, &infos, &a, &tab, idx, &mut t);
                    }
                    t
                },
                |acc, part| acc.merge(part),
                LemmaTallies::default(),
            );
            generic.merge(forced);
            generic
        }
    };
    let mut out = vec![empty_strata(&cfg.d), kappa_tableau(&cfg.d)];
    for (name, tally) in [
        ("below_kappa", tallies.below_kappa),
        ("above_kappa", tallies.above_kappa),
        ("outside_gamma", tallies.outside_gamma),
        ("outside_lambda", tallies.outside_lambda),
        ("complement_union", tallies.complement_union),
    ] {
        out.push(CheckResult::from_tally(name, true, tally));
    }
    let mut split = CheckResult::from_tally("outside_gamma_split", false, tallies.outside_gamma_split);
    split.notes.push("single split: Z_ij ⊆ Z_il ∪ Z_lj for some l with d_l between d_i and d_j".into());
    out.push(split);
    out
}

/// Lemma checks, dispatching on the configured prime.
pub fn check_lemmas(cfg: &ExperimentConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let checks = with_prime_field!(cfg.field, F => check_lemmas_for::<F>(cfg))?;
    let mut report = VerificationReport::new(Some(cfg.clone()));
    for c in checks {
        report.push(c);
    }
    Ok(report)
}
