//! Dimension vectors and the index combinatorics attached to them: the
//! Richardson partition, the counts `d_<[ij]` / `d_≥[ij]`, `κ(i,j)`, and the
//! parameter sets `Γ(d) ⊇ Λ(d)`.
//!
//! Block indices and pairs are 1-based throughout, matching the usual
//! `A_ij` notation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A composition `d = (d_1, ..., d_t)` of `n`: the diagonal block sizes of a
/// parabolic subgroup of `GL_n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DimensionVector {
    parts: Vec<usize>,
}

impl DimensionVector {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidDimensionVector("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidDimensionVector(format!(
                "zero part in {parts:?}"
            )));
        }
        Ok(DimensionVector { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `d_i` for 1-based `i`.
    pub fn d(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    /// Number of blocks.
    pub fn t(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Block offsets `o_0 = 0 < o_1 < ... < o_t = n`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut o = Vec::with_capacity(self.t() + 1);
        o.push(0);
        for &p in &self.parts {
            o.push(o.last().unwrap() + p);
        }
        o
    }

    /// `dim n = Σ_{a<b} d_a d_b`.
    pub fn nilradical_dim(&self) -> usize {
        let n = self.n();
        (n * n - self.parts.iter().map(|p| p * p).sum::<usize>()) / 2
    }

    /// The sub-composition `(d_i, ..., d_j)`.
    pub fn slice(&self, i: usize, j: usize) -> Result<DimensionVector> {
        if i == 0 || i > j || j > self.t() {
            return Err(Error::WindowOutOfRange { i, j, t: self.t() });
        }
        DimensionVector::new(self.parts[i - 1..j].to_vec())
    }

    /// Whether the parts are weakly increasing or weakly decreasing.
    pub fn is_monotone(&self) -> bool {
        let w = self.parts.windows(2);
        w.clone().all(|w| w[0] <= w[1]) || w.clone().all(|w| w[0] >= w[1])
    }

    pub fn is_pairwise_distinct(&self) -> bool {
        let set: BTreeSet<_> = self.parts.iter().collect();
        set.len() == self.parts.len()
    }

    pub fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i >= j || j > self.t() {
            return Err(Error::PairOutOfRange { i, j, t: self.t() });
        }
        Ok(())
    }

    /// All pairs `1 <= i < j <= t`.
    pub fn all_pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        let t = self.t();
        (1..=t).flat_map(move |i| (i + 1..=t).map(move |j| Pair { i, j }))
    }
}

impl TryFrom<Vec<usize>> for DimensionVector {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        DimensionVector::new(parts)
    }
}

impl From<DimensionVector> for Vec<usize> {
    fn from(d: DimensionVector) -> Self {
        d.parts
    }
}

impl FromStr for DimensionVector {
    type Err = Error;

    /// Parses a comma-separated list such as `7,5,2,3,5,1,2,6,5`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidDimensionVector(format!("{x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DimensionVector::new(parts)
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{self}")
    }
}

/// A pair of block indices `(i, j)`, 1-based, `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Pair {
    pub i: usize,
    pub j: usize,
}

impl Pair {
    pub const fn new(i: usize, j: usize) -> Self {
        Pair { i, j }
    }
}

impl From<[usize; 2]> for Pair {
    fn from([i, j]: [usize; 2]) -> Self {
        Pair { i, j }
    }
}

impl From<Pair> for [usize; 2] {
    fn from(p: Pair) -> Self {
        [p.i, p.j]
    }
}

impl From<(usize, usize)> for Pair {
    fn from((i, j): (usize, usize)) -> Self {
        Pair { i, j }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Pair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidConfig(format!("malformed pair {s:?}, expected i,j"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let i = a.trim().parse().map_err(|_| bad())?;
        let j = b.trim().parse().map_err(|_| bad())?;
        Ok(Pair { i, j })
    }
}

/// An ordered set of pairs, used for `Γ(d)` and `Λ(d)`.
pub type PairSet = BTreeSet<Pair>;

/// The Richardson partition `λ(d)`: the conjugate of `d` sorted decreasingly,
/// i.e. `λ_h = #{i : d_i >= h}`.
pub fn lambda_of(d: &DimensionVector) -> Partition {
    Partition::from_unsorted(d.parts().to_vec()).conjugate()
}

/// `d_<[ij]` as an index set: `{l : i < l < j, d_l < min(d_i, d_j)}`.
pub fn d_less(d: &DimensionVector, i: usize, j: usize) -> Result<BTreeSet<usize>> {
    d.check_pair(i, j)?;
    let m = d.d(i).min(d.d(j));
    Ok((i + 1..j).filter(|&l| d.d(l) < m).collect())
}

/// `d_≥[ij]` as an index set: `{l : i < l < j, d_l >= min(d_i, d_j)}`.
pub fn d_geq(d: &DimensionVector, i: usize, j: usize) -> Result<BTreeSet<usize>> {
    d.check_pair(i, j)?;
    let m = d.d(i).min(d.d(j));
    Ok((i + 1..j).filter(|&l| d.d(l) >= m).collect())
}

/// `κ(i,j) = 1 + |d_≥[ij]|`.
pub fn kappa(d: &DimensionVector, i: usize, j: usize) -> Result<usize> {
    Ok(1 + d_geq(d, i, j)?.len())
}

fn in_gamma(d: &DimensionVector, i: usize, j: usize) -> bool {
    let (lo, hi) = (d.d(i).min(d.d(j)), d.d(i).max(d.d(j)));
    (i + 1..j).all(|l| d.d(l) < lo || d.d(l) > hi)
}

/// `Γ(d)`: pairs whose intermediate blocks are all strictly below the smaller
/// or strictly above the larger end size. Consecutive pairs always belong.
pub fn gamma_set(d: &DimensionVector) -> PairSet {
    d.all_pairs().filter(|p| in_gamma(d, p.i, p.j)).collect()
}

/// `Λ(d) ⊆ Γ(d)`: the index set of the irreducible components of the
/// complement of the Richardson orbit.
///
/// Clause (i) ranges over every `k ∉ {i, j}`, not only the intermediate ones.
pub fn lambda_set(d: &DimensionVector) -> PairSet {
    let t = d.t();
    d.all_pairs()
        .filter(|p| in_gamma(d, p.i, p.j))
        .filter(|&Pair { i, j }| {
            let (di, dj) = (d.d(i), d.d(j));
            if di == dj {
                return true;
            }
            let (lo, hi) = (di.min(dj), di.max(dj));
            let outside = (1..=t)
                .filter(|&k| k != i && k != j)
                .all(|k| d.d(k) <= lo || d.d(k) >= hi);
            let left = (1..i).all(|k| d.d(k) != dj);
            let right = (j + 1..=t).all(|k| d.d(k) != di);
            outside && left && right
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(v: &[usize]) -> DimensionVector {
        DimensionVector::new(v.to_vec()).unwrap()
    }

    fn pairs(v: &[(usize, usize)]) -> PairSet {
        v.iter().map(|&p| Pair::from(p)).collect()
    }

    const RUNNING: [usize; 9] = [7, 5, 2, 3, 5, 1, 2, 6, 5];

    #[test]
    fn parse_and_reject() {
        assert_eq!("3,1,2,4".parse::<DimensionVector>().unwrap(), dv(&[3, 1, 2, 4]));
        assert!("3,0,2".parse::<DimensionVector>().is_err());
        assert!("".parse::<DimensionVector>().is_err());
        assert!("a,b".parse::<DimensionVector>().is_err());
        assert!(DimensionVector::new(vec![]).is_err());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_of(&dv(&[3, 1, 2, 4])).parts(), &[4, 3, 2, 1]);
        assert_eq!(lambda_of(&dv(&RUNNING)).parts(), &[9, 8, 6, 5, 5, 2, 1]);
        assert_eq!(lambda_of(&dv(&[5])).parts(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn d_less_geq_examples() {
        let d = dv(&RUNNING);
        assert_eq!(d_less(&d, 2, 5).unwrap().len(), 2);
        assert_eq!(d_less(&d, 2, 5).unwrap(), [3, 4].into());
        assert!(d_less(&d, 2, 6).unwrap().is_empty());
        assert_eq!(d_geq(&d, 2, 6).unwrap(), [3, 4, 5].into());
        assert_eq!(d_less(&d, 4, 7).unwrap(), [6].into());
        assert_eq!(d_less(&d, 4, 8).unwrap(), [6, 7].into());
        for i in 1..9 {
            assert!(d_less(&d, i, i + 1).unwrap().is_empty());
            assert!(d_geq(&d, i, i + 1).unwrap().is_empty());
        }
        assert!(d_less(&d, 3, 3).is_err());
        assert!(d_less(&d, 0, 3).is_err());
        assert!(d_less(&d, 3, 10).is_err());
    }

    #[test]
    fn kappa_examples() {
        let d = dv(&RUNNING);
        assert_eq!(kappa(&d, 2, 6).unwrap(), 4);
        assert_eq!(kappa(&d, 4, 7).unwrap(), 2);
        assert_eq!(kappa(&d, 4, 8).unwrap(), 2);
        for i in 1..9 {
            assert_eq!(kappa(&d, i, i + 1).unwrap(), 1);
        }
    }

    #[test]
    fn gamma_lambda_examples() {
        let d = dv(&[1, 3, 4, 2]);
        assert_eq!(gamma_set(&d), pairs(&[(1, 2), (2, 3), (3, 4), (2, 4), (1, 4)]));
        assert_eq!(lambda_set(&d), pairs(&[(2, 3), (2, 4), (1, 4)]));

        let d = dv(&[1, 2, 3, 2]);
        assert_eq!(gamma_set(&d), pairs(&[(1, 2), (2, 3), (3, 4), (2, 4)]));
        assert_eq!(lambda_set(&d), pairs(&[(1, 2), (2, 4)]));

        let d = dv(&RUNNING);
        let mut g = pairs(&[
            (1, 8), (2, 4), (2, 5), (3, 6), (3, 7), (4, 6), (4, 7), (5, 7), (5, 8), (5, 9), (7, 9),
        ]);
        g.extend((1..9).map(|i| Pair::new(i, i + 1)));
        assert_eq!(g.len(), 19);
        assert_eq!(gamma_set(&d), g);
        assert_eq!(lambda_set(&d), pairs(&[(1, 8), (2, 5), (3, 7), (5, 9)]));

        for d in [dv(&[1, 2, 3, 4]), dv(&[6, 4, 3, 1]), dv(&[1, 1, 1, 1, 1])] {
            let consecutive: PairSet = (1..d.t()).map(|i| Pair::new(i, i + 1)).collect();
            assert_eq!(gamma_set(&d), consecutive);
            assert_eq!(lambda_set(&d), consecutive);
        }
    }

    #[test]
    fn single_block_has_no_pairs() {
        let d = dv(&[5]);
        assert!(gamma_set(&d).is_empty());
        assert!(lambda_set(&d).is_empty());
        assert_eq!(d.nilradical_dim(), 0);
    }

    #[test]
    fn nilradical_dim() {
        assert_eq!(dv(&[1, 1, 1, 1, 1]).nilradical_dim(), 10);
        assert_eq!(dv(&[4, 1]).nilradical_dim(), 4);
        assert_eq!(dv(&[2, 4, 7]).nilradical_dim(), 8 + 14 + 28);
    }
}
