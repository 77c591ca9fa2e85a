//! Separating witnesses: for `(i,j) ∈ Λ(d)`, a matrix in `Z_ij` lying in no
//! other component `Z_kl`, `(k,l) ∈ Λ(d)`.
//!
//! First the diagram construction: drop one edge of the lowest chain of
//! `L_R(d)` running through columns `i` and `j`, optionally reattaching one
//! edge elsewhere. If no such diagram separates, seeded trials start from an
//! edge-dropped diagram and greedily fill nilradical positions with random
//! nonzero values over `F_p`, keeping each value only if the matrix stays in
//! `Z_ij`.

use serde::Serialize;

use crate::composition::{DimensionVector, Pair};
use crate::diagram::{complete_diagram, phi, LineDiagram};
use crate::error::{Error, Result};
use crate::linalg::{FiniteField, Matrix};
use crate::sample::{random_nonzero, shuffled_pattern, trial_rng};
use crate::strata::Strata;
use rand::seq::SliceRandom;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessConfig {
    pub seed: u64,
    /// Maximum number of randomized trials after the diagram candidates.
    pub budget: usize,
}

impl Default for WitnessConfig {
    fn default() -> Self {
        WitnessConfig {
            seed: 0,
            budget: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessMethod {
    /// `Φ` of an edge-modified complete diagram.
    Diagram { removed: (usize, usize), added: Option<(usize, usize)> },
    /// Greedy random fill, found at the given trial index.
    Search { trial: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness<F: FiniteField> {
    pub pair: Pair,
    pub matrix: Matrix<F>,
    pub method: WitnessMethod,
}

/// Edges of the chain at height `min(d_i, d_j)` of `L_R(d)` lying between
/// columns `i` and `j`.
pub fn lowest_chain_edges(d: &DimensionVector, i: usize, j: usize) -> Result<Vec<(usize, usize)>> {
    d.check_pair(i, j)?;
    let l = complete_diagram(d);
    let s = d.d(i).min(d.d(j));
    Ok(l.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            let (cu, hu) = l.position(u);
            let (cv, hv) = l.position(v);
            hu == s && hv == s && cu >= i && cv <= j
        })
        .collect())
}

fn separates<F: FiniteField>(st: &Strata, a: &Matrix<F>, pair: Pair) -> bool {
    st.in_z_unchecked(a, pair.i, pair.j)
        && st
            .lambda_pairs()
            .iter()
            .filter(|&&q| q != pair)
            .all(|q| !st.in_z_unchecked(a, q.i, q.j))
}

fn diagram_candidates(d: &DimensionVector, pair: Pair) -> Result<Vec<(LineDiagram, WitnessMethod)>> {
    let full = complete_diagram(d);
    let n = d.n();
    let mut out = Vec::new();
    let chain = lowest_chain_edges(d, pair.i, pair.j)?;
    for &e in &chain {
        out.push((full.without_edge(e), WitnessMethod::Diagram { removed: e, added: None }));
    }
    for &e in &chain {
        let base = full.without_edge(e);
        for u in 0..n {
            for v in u + 1..n {
                if (u, v) == e || base.edges().contains(&(u, v)) {
                    continue;
                }
                if let Ok(l) = base.with_edge((u, v)) {
                    out.push((l, WitnessMethod::Diagram { removed: e, added: Some((u, v)) }));
                }
            }
        }
    }
    Ok(out)
}

/// One randomized trial: greedy fill from a random edge-dropped diagram.
fn search_trial<F: FiniteField>(st: &Strata, pair: Pair, chain: &[(usize, usize)], seed: u64, trial: usize) -> Matrix<F> {
    let mut rng = trial_rng(seed, trial as u64);
    let full = complete_diagram(st.dims());
    let e = *chain.choose(&mut rng).expect("chain between i and j is nonempty");
    let mut a: Matrix<F> = phi(&full.without_edge(e));
    let bs = st.blocks();
    let (lo, hi) = (bs.offsets()[pair.i - 1], bs.offsets()[pair.j]);
    for (r, c) in shuffled_pattern(bs, &mut rng) {
        let old = a[(r, c)];
        a[(r, c)] = random_nonzero(&mut rng);
        let inside = (lo..hi).contains(&r) && (lo..hi).contains(&c);
        if inside && !st.in_z_unchecked(&a, pair.i, pair.j) {
            a[(r, c)] = old;
        }
    }
    a
}

/// Finds a separating witness for `pair` over `F`, reusing precomputed strata.
pub fn witness_with<F: FiniteField>(st: &Strata, pair: Pair, cfg: &WitnessConfig) -> Result<Witness<F>> {
    let d = st.dims();
    d.check_pair(pair.i, pair.j)?;
    if !st.lambda_pairs().contains(&pair) {
        return Err(Error::NotInLambda { i: pair.i, j: pair.j });
    }
    for (l, method) in diagram_candidates(d, pair)? {
        let a: Matrix<F> = phi(&l);
        if separates(st, &a, pair) {
            return Ok(Witness { pair, matrix: a, method });
        }
    }
    let chain = lowest_chain_edges(d, pair.i, pair.j)?;
    for trial in 0..cfg.budget {
        let a = search_trial::<F>(st, pair, &chain, cfg.seed, trial);
        if separates(st, &a, pair) {
            return Ok(Witness {
                pair,
                matrix: a,
                method: WitnessMethod::Search { trial },
            });
        }
    }
    Err(Error::WitnessBudgetExhausted {
        i: pair.i,
        j: pair.j,
        budget: cfg.budget,
    })
}

/// Finds a separating witness for `(i,j) ∈ Λ(d)` over `F`.
pub fn witness<F: FiniteField>(d: &DimensionVector, pair: Pair, cfg: &WitnessConfig) -> Result<Witness<F>> {
    witness_with(&Strata::new(d), pair, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Fp;

    type F = Fp<32003>;

    fn dv(v: &[usize]) -> DimensionVector {
        DimensionVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn superdiagonal_gap() {
        let d = dv(&[1, 1, 1, 1, 1]);
        let w = witness::<F>(&d, Pair::new(1, 2), &WitnessConfig::default()).unwrap();
        assert_eq!(w.matrix, Matrix::from_unit_entries(5, [(1, 2), (2, 3), (3, 4)]));
        assert_eq!(w.method, WitnessMethod::Diagram { removed: (0, 1), added: None });
    }

    #[test]
    fn sole_component() {
        let d = dv(&[2, 1, 2]);
        let w = witness::<F>(&d, Pair::new(1, 3), &WitnessConfig::default()).unwrap();
        assert!(Strata::new(&d).in_z(&w.matrix, 1, 3).unwrap());
    }

    #[test]
    fn rejects_non_lambda_pairs() {
        let d = dv(&[2, 1, 2]);
        assert_eq!(
            witness::<F>(&d, Pair::new(1, 2), &WitnessConfig::default()).unwrap_err(),
            Error::NotInLambda { i: 1, j: 2 }
        );
        assert!(witness::<F>(&d, Pair::new(1, 4), &WitnessConfig::default()).is_err());
    }

    #[test]
    fn search_fallback_is_needed_and_works() {
        // no single edge surgery separates (2,3) here
        let d = dv(&[4, 3, 1, 4]);
        let st = Strata::new(&d);
        let w = witness_with::<F>(&st, Pair::new(2, 3), &WitnessConfig::default()).unwrap();
        assert!(matches!(w.method, WitnessMethod::Search { .. }));
        assert_eq!(st.lambda_membership(&w.matrix), vec![Pair::new(2, 3)]);
    }

    #[test]
    fn zero_budget_exhausts() {
        let d = dv(&[4, 3, 1, 4]);
        let cfg = WitnessConfig { seed: 0, budget: 0 };
        assert_eq!(
            witness::<F>(&d, Pair::new(2, 3), &cfg).unwrap_err(),
            Error::WitnessBudgetExhausted { i: 2, j: 3, budget: 0 }
        );
    }
}
