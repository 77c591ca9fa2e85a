//! Rank-defect strata `Z_ij^k = {A ∈ n : rk A[ij]^k < r_ij^k}` and the
//! decomposition of the complement of the Richardson orbit.

use serde::Serialize;

use crate::composition::{kappa, lambda_of, lambda_set, DimensionVector, Pair};
use crate::diagram::r_rank;
use crate::error::{Error, Result};
use crate::linalg::{BlockStructure, ExactScalar, Matrix};
use crate::partition::Partition;
use crate::tableau::{minimal_movement, YoungTableau};

/// Precomputed thresholds for one dimension vector: `r_ij^k` for all windows,
/// `κ(i,j)`, `Λ(d)` and the rank sequence of the Richardson orbit.
///
/// All membership tests go through this so that repeated evaluation (exhaustive
/// enumeration, sampling) does not recompute the combinatorics.
#[derive(Clone, Debug)]
pub struct Strata {
    d: DimensionVector,
    blocks: BlockStructure,
    // r[i][j][k], 1-based i < j, 1 <= k <= j - i
    r: Vec<Vec<Vec<usize>>>,
    kappa: Vec<Vec<usize>>,
    lambda_pairs: Vec<Pair>,
    richardson_ranks: Vec<usize>,
}

impl Strata {
    pub fn new(d: &DimensionVector) -> Self {
        let t = d.t();
        let mut r = vec![vec![Vec::new(); t + 1]; t + 1];
        let mut kap = vec![vec![0; t + 1]; t + 1];
        for p in d.all_pairs() {
            let (i, j) = (p.i, p.j);
            r[i][j] = std::iter::once(0)
                .chain((1..=j - i).map(|k| r_rank(d, i, j, k).expect("pair in range")))
                .collect();
            kap[i][j] = kappa(d, i, j).expect("pair in range");
        }
        let lam = lambda_of(d);
        let richardson_ranks = (0..=lam.part(0))
            .map(|k| lam.parts().iter().map(|&p| p.saturating_sub(k)).sum())
            .collect();
        Strata {
            d: d.clone(),
            blocks: BlockStructure::new(d),
            r,
            kappa: kap,
            lambda_pairs: lambda_set(d).into_iter().collect(),
            richardson_ranks,
        }
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.d
    }

    pub fn blocks(&self) -> &BlockStructure {
        &self.blocks
    }

    pub fn lambda_pairs(&self) -> &[Pair] {
        &self.lambda_pairs
    }

    pub fn kappa(&self, i: usize, j: usize) -> usize {
        self.kappa[i][j]
    }

    /// `r_ij^k`; zero for `k > j - i`.
    pub fn threshold(&self, i: usize, j: usize, k: usize) -> usize {
        self.r[i][j].get(k).copied().unwrap_or(0)
    }

    fn check<S: ExactScalar>(&self, a: &Matrix<S>) -> Result<()> {
        if !self.blocks.is_nilradical(a)? {
            return Err(Error::NotInNilradical);
        }
        Ok(())
    }

    fn check_pair_power(&self, i: usize, j: usize, k: usize) -> Result<()> {
        self.d.check_pair(i, j)?;
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        Ok(())
    }

    /// `rk A[ij]^k`, computed on the extracted window.
    pub fn window_power_rank<S: ExactScalar>(&self, a: &Matrix<S>, i: usize, j: usize, k: usize) -> usize {
        let w = self.blocks.window(a, i, j).expect("window in range");
        w.power(k).expect("square").rank()
    }

    /// Ranks `rk A[ij]^1, ..., rk A[ij]^{j-i}` (index 0 unused, set to the window size).
    pub fn window_rank_sequence<S: ExactScalar>(&self, a: &Matrix<S>, i: usize, j: usize) -> Vec<usize> {
        let w = self.blocks.window(a, i, j).expect("window in range");
        let mut out = vec![w.rows()];
        let mut p = w.clone();
        for k in 1..=j - i {
            if k > 1 {
                p = p.try_mul(&w).expect("square");
            }
            out.push(p.rank());
        }
        out
    }

    /// Membership in `Z_ij^k` without the nilradical precondition check.
    pub fn in_zk_unchecked<S: ExactScalar>(&self, a: &Matrix<S>, i: usize, j: usize, k: usize) -> bool {
        let r = self.threshold(i, j, k);
        r > 0 && self.window_power_rank(a, i, j, k) < r
    }

    pub fn in_z_unchecked<S: ExactScalar>(&self, a: &Matrix<S>, i: usize, j: usize) -> bool {
        self.in_zk_unchecked(a, i, j, self.kappa(i, j))
    }

    pub fn in_zk<S: ExactScalar>(&self, a: &Matrix<S>, i: usize, j: usize, k: usize) -> Result<bool> {
        self.check_pair_power(i, j, k)?;
        self.check(a)?;
        Ok(self.in_zk_unchecked(a, i, j, k))
    }

    pub fn in_z<S: ExactScalar>(&self, a: &Matrix<S>, i: usize, j: usize) -> Result<bool> {
        self.d.check_pair(i, j)?;
        self.check(a)?;
        Ok(self.in_z_unchecked(a, i, j))
    }

    /// Jordan type equals `λ(d)`, tested through the rank sequence of powers of
    /// `A` with early exit.
    pub fn is_richardson_unchecked<S: ExactScalar>(&self, a: &Matrix<S>) -> bool {
        let mut p = a.clone();
        for (k, &expected) in self.richardson_ranks.iter().enumerate().skip(1) {
            if k > 1 {
                p = p.try_mul(a).expect("square");
            }
            // ranks of powers in n are bounded above by the Richardson ranks
            if p.rank() != expected {
                return false;
            }
        }
        true
    }

    pub fn is_richardson<S: ExactScalar>(&self, a: &Matrix<S>) -> Result<bool> {
        self.check(a)?;
        Ok(self.is_richardson_unchecked(a))
    }

    /// All `(i, j, k)` with `k <= j - i` and `A ∈ Z_ij^k`, in lexicographic order.
    pub fn defect_profile_unchecked<S: ExactScalar>(&self, a: &Matrix<S>) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for p in self.d.all_pairs() {
            let ranks = self.window_rank_sequence(a, p.i, p.j);
            for k in 1..=p.j - p.i {
                if ranks[k] < self.threshold(p.i, p.j, k) {
                    out.push((p.i, p.j, k));
                }
            }
        }
        out
    }

    pub fn defect_profile<S: ExactScalar>(&self, a: &Matrix<S>) -> Result<Vec<(usize, usize, usize)>> {
        self.check(a)?;
        Ok(self.defect_profile_unchecked(a))
    }

    /// The `Λ(d)` pairs whose stratum contains `A`.
    pub fn lambda_membership<S: ExactScalar>(&self, a: &Matrix<S>) -> Vec<Pair> {
        self.lambda_pairs
            .iter()
            .copied()
            .filter(|p| self.in_z_unchecked(a, p.i, p.j))
            .collect()
    }
}

/// `rk A[ij]^k` for every window and `1 <= k <= j - i`, computed once per
/// matrix so that many predicates can be evaluated without recomputation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    // ranks[i][j][k], same indexing as the thresholds
    ranks: Vec<Vec<Vec<usize>>>,
}

impl RankTable {
    pub fn rank(&self, i: usize, j: usize, k: usize) -> usize {
        self.ranks[i][j].get(k).copied().unwrap_or(0)
    }
}

impl Strata {
    pub fn rank_table<S: ExactScalar>(&self, a: &Matrix<S>) -> RankTable {
        let t = self.d.t();
        let mut ranks = vec![vec![Vec::new(); t + 1]; t + 1];
        for p in self.d.all_pairs() {
            ranks[p.i][p.j] = self.window_rank_sequence(a, p.i, p.j);
        }
        RankTable { ranks }
    }

    pub fn table_in_zk(&self, tab: &RankTable, i: usize, j: usize, k: usize) -> bool {
        tab.rank(i, j, k) < self.threshold(i, j, k)
    }

    pub fn table_in_z(&self, tab: &RankTable, i: usize, j: usize) -> bool {
        self.table_in_zk(tab, i, j, self.kappa(i, j))
    }

    /// Whether some window power is rank-defective.
    pub fn table_defective(&self, tab: &RankTable) -> bool {
        self.d
            .all_pairs()
            .any(|p| (1..=p.j - p.i).any(|k| self.table_in_zk(tab, p.i, p.j, k)))
    }

    pub fn table_lambda_membership(&self, tab: &RankTable) -> Vec<Pair> {
        self.lambda_pairs
            .iter()
            .copied()
            .filter(|p| self.table_in_z(tab, p.i, p.j))
            .collect()
    }
}

/// Whether `A` is strictly upper block-triangular for `d`.
pub fn in_nilradical<S: ExactScalar>(a: &Matrix<S>, d: &DimensionVector) -> Result<bool> {
    BlockStructure::new(d).is_nilradical(a)
}

pub fn in_zk<S: ExactScalar>(a: &Matrix<S>, d: &DimensionVector, i: usize, j: usize, k: usize) -> Result<bool> {
    Strata::new(d).in_zk(a, i, j, k)
}

/// `A ∈ Z_ij = Z_ij^{κ(i,j)}`.
pub fn in_z<S: ExactScalar>(a: &Matrix<S>, d: &DimensionVector, i: usize, j: usize) -> Result<bool> {
    Strata::new(d).in_z(a, i, j)
}

pub fn is_richardson<S: ExactScalar>(a: &Matrix<S>, d: &DimensionVector) -> Result<bool> {
    Strata::new(d).is_richardson(a)
}

pub fn defect_profile<S: ExactScalar>(a: &Matrix<S>, d: &DimensionVector) -> Result<Vec<(usize, usize, usize)>> {
    Strata::new(d).defect_profile(a)
}

/// Data attached to one component `Z_ij`, `(i,j) ∈ Λ(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumSpec {
    pub pair: Pair,
    pub kappa: usize,
    pub rank_threshold: usize,
    pub codim: usize,
    pub mu: Partition,
    pub tableau: YoungTableau,
}

impl StratumSpec {
    pub fn new(d: &DimensionVector, i: usize, j: usize) -> Result<Self> {
        let k = kappa(d, i, j)?;
        let mv = minimal_movement(d, i, j)?;
        Ok(StratumSpec {
            pair: Pair::new(i, j),
            kappa: k,
            rank_threshold: r_rank(d, i, j, k)?,
            codim: mv.codim,
            mu: mv.mu,
            tableau: mv.tableau,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub d: DimensionVector,
    pub lambda: Partition,
    pub components: Vec<StratumSpec>,
}

/// One [`StratumSpec`] per pair of `Λ(d)`.
pub fn decompose(d: &DimensionVector) -> Decomposition {
    let components = lambda_set(d)
        .into_iter()
        .map(|p| StratumSpec::new(d, p.i, p.j).expect("Λ pairs admit a minimal movement"))
        .collect();
    Decomposition {
        d: d.clone(),
        lambda: lambda_of(d),
        components,
    }
}
