//! All compositions of 5 with at least two parts, checked exhaustively over F_2.

use super::theorem::run_theorem_exhaustive;
use super::{enumerate_matrix, CheckResult, ExperimentConfig, Mode, VerificationReport};
use crate::composition::{lambda_set, DimensionVector, Pair};
use crate::linalg::{Fp, Matrix};
use crate::strata::Strata;

type F2 = Fp<2>;

/// The fifteen compositions of 5 with `t >= 2`.
pub const GL5_COMPOSITIONS: [&[usize]; 15] = [
    &[1, 1, 1, 1, 1],
    &[1, 1, 1, 2],
    &[2, 1, 1, 1],
    &[1, 1, 2, 1],
    &[1, 2, 1, 1],
    &[2, 2, 1],
    &[1, 2, 2],
    &[2, 1, 2],
    &[1, 3, 1],
    &[3, 1, 1],
    &[1, 1, 3],
    &[4, 1],
    &[1, 4],
    &[3, 2],
    &[2, 3],
];

/// Expected component count for each composition of 5, with the explicit
/// component list where it is known independently of `Λ(d)`.
pub fn gl5_expected_components() -> Vec<(DimensionVector, usize, Option<Vec<Pair>>)> {
    let p = |v: &[(usize, usize)]| Some(v.iter().map(|&x| Pair::from(x)).collect::<Vec<_>>());
    let expected: [(usize, Option<Vec<Pair>>); 15] = [
        (4, p(&[(1, 2), (2, 3), (3, 4), (4, 5)])),
        (3, p(&[(1, 2), (2, 3), (3, 4)])),
        (3, None),
        (2, p(&[(1, 2), (2, 4)])),
        (2, None),
        (2, p(&[(1, 2), (2, 3)])),
        (2, None),
        (1, p(&[(1, 3)])),
        (1, p(&[(1, 3)])),
        (2, None),
        (2, None),
        (1, p(&[(1, 2)])),
        (1, p(&[(1, 2)])),
        (1, None),
        (1, None),
    ];
    GL5_COMPOSITIONS
        .iter()
        .zip(expected)
        .map(|(v, (n, pairs))| (DimensionVector::new(v.to_vec()).expect("valid"), n, pairs))
        .collect()
}

/// For every `Λ` pair with `κ(i,j) < j - i`: matrices where membership in
/// `Z_ij^κ` and in `Z_ij^{j-i}` differ.
fn kappa_vs_top_power(d: &DimensionVector, into: &mut CheckResult) {
    let st = Strata::new(d);
    let bs = st.blocks().clone();
    let pattern = bs.pattern();
    let pairs: Vec<Pair> = st
        .lambda_pairs()
        .iter()
        .copied()
        .filter(|p| st.kappa(p.i, p.j) < p.j - p.i)
        .collect();
    if pairs.is_empty() {
        return;
    }
    let total = 2u64.pow(pattern.len() as u32);
    for p in pairs {
        let mut differ = 0u64;
        let mut first: Option<Matrix<F2>> = None;
        for idx in 0..total {
            let a: Matrix<F2> = enumerate_matrix(&bs, &pattern, idx);
            let tab = st.rank_table(&a);
            into.population += 1;
            if st.table_in_z(&tab, p.i, p.j) != st.table_in_zk(&tab, p.i, p.j, p.j - p.i) {
                differ += 1;
                first.get_or_insert(a);
            }
        }
        if differ > 0 {
            into.violations += differ;
            let ex = first.map(|a| crate::io::elementary_sum(&a)).unwrap_or_default();
            into.notes.push(format!(
                "{d} {p}: kappa = {}, {differ} of {total} matrices differ, e.g. {ex}",
                st.kappa(p.i, p.j)
            ));
        }
    }
}

/// Decomposition and exhaustive F_2 theorem check for every composition of 5.
pub fn gl5_fixture_suite() -> VerificationReport {
    let mut report = VerificationReport::new(None);
    let mut top = CheckResult::new("gl5:kappa_vs_top_power", false);
    for (d, expected, pairs) in gl5_expected_components() {
        let lam: Vec<Pair> = lambda_set(&d).into_iter().collect();
        let mut comp = CheckResult::new(format!("gl5{d}:components"), true);
        comp.population = 1;
        comp.counts.insert("components".into(), lam.len() as u64);
        comp.notes.push(format!("Λ = {lam:?}, expected {expected} components"));
        let mut ok = lam.len() == expected && pairs.as_ref().is_none_or(|p| *p == lam);

        let mut cfg = ExperimentConfig::new(d.clone());
        cfg.mode = Mode::Exhaustive;
        cfg.field = 2;
        let mut thm = run_theorem_exhaustive::<F2>(&cfg);
        thm.name = format!("gl5{d}:theorem");

        if d.t() == 2 && d.parts().contains(&4) {
            // the complement is the zero matrix alone
            let zero_only = thm.count("defective") == 1;
            comp.notes.push(format!("defective matrices over F_2: {}", thm.count("defective")));
            ok &= zero_only;
        }
        comp.passed = ok;
        if !ok {
            comp.violations = 1;
        }
        report.push(comp);
        report.push(thm);
        kappa_vs_top_power(&d, &mut top);
    }
    top.passed = top.violations == 0;
    top.notes.insert(
        0,
        "defining power kappa(i,j) versus the top power j-i of the window, over F_2".into(),
    );
    report.push(top);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_table_matches_lambda() {
        for (d, n, pairs) in gl5_expected_components() {
            let lam: Vec<Pair> = lambda_set(&d).into_iter().collect();
            assert_eq!(lam.len(), n, "{d}");
            if let Some(p) = pairs {
                assert_eq!(p, lam, "{d}");
            }
        }
    }

    #[test]
    fn compositions_are_distinct_and_of_five() {
        let mut all: Vec<&[usize]> = GL5_COMPOSITIONS.to_vec();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 15);
        assert!(all.iter().all(|v| v.iter().sum::<usize>() == 5 && v.len() >= 2));
    }
}
