//! Seeded random generation of nilradical matrices over prime fields.
//!
//! Every trial gets its own ChaCha8 stream selected by `(seed, index)`, so
//! results do not depend on the order or thread in which trials run.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::composition::DimensionVector;
use crate::linalg::{BlockStructure, FiniteField, Matrix};

/// Independent random stream for trial `index` under `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_element<F: FiniteField, R: Rng>(rng: &mut R) -> F {
    F::from_u64(rng.gen_range(0..F::ORDER))
}

pub fn random_nonzero<F: FiniteField, R: Rng>(rng: &mut R) -> F {
    F::from_u64(rng.gen_range(1..F::ORDER))
}

/// Uniform element of the nilradical for `d` over `F`.
pub fn random_nilradical<F: FiniteField, R: Rng>(d: &DimensionVector, rng: &mut R) -> Matrix<F> {
    let bs = BlockStructure::new(d);
    let mut a = Matrix::zeros(d.n(), d.n());
    for (r, c) in bs.pattern() {
        a[(r, c)] = random_element(rng);
    }
    a
}

/// A defect forced on one window and power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedDefect {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// 0-based vertex whose window row and column were cleared.
    pub vertex: usize,
}

/// A random nilradical matrix with a forced rank defect.
///
/// Picks `(i, j, k)` uniformly among windows and powers `k <= j - i`, a block
/// `a` of minimal size inside the window and a vertex `v` of it, and clears
/// row `v` and column `v` inside the window. The window is then a nilradical
/// element for the vector with `d_a` lowered by one, whose maximal `k`-th
/// power rank is `r_ij^k - 1`.
///
/// Returns `None` for `t = 1`.
pub fn forced_defect<F: FiniteField, R: Rng>(d: &DimensionVector, rng: &mut R) -> Option<(Matrix<F>, ForcedDefect)> {
    let t = d.t();
    let triples: Vec<(usize, usize, usize)> = d
        .all_pairs()
        .flat_map(|p| (1..=p.j - p.i).map(move |k| (p.i, p.j, k)))
        .collect();
    let &(i, j, k) = triples.choose(rng)?;
    debug_assert!(t >= 2);
    let min = (i..=j).map(|l| d.d(l)).min().expect("nonempty window");
    let candidates: Vec<usize> = (i..=j).filter(|&l| d.d(l) == min).collect();
    let a_blk = *candidates.choose(rng).expect("minimum is attained");
    let bs = BlockStructure::new(d);
    let v = rng.gen_range(bs.range(a_blk));
    let mut a = random_nilradical::<F, R>(d, rng);
    let (lo, hi) = (bs.offsets()[i - 1], bs.offsets()[j]);
    for x in lo..hi {
        a[(v, x)] = F::zero();
        a[(x, v)] = F::zero();
    }
    Some((a, ForcedDefect { i, j, k, vertex: v }))
}

/// Shuffled copy of the nilradical positions.
pub fn shuffled_pattern<R: Rng>(bs: &BlockStructure, rng: &mut R) -> Vec<(usize, usize)> {
    let mut pos = bs.pattern();
    pos.shuffle(rng);
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Fp;
    use crate::strata::Strata;

    type F = Fp<32003>;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let d = DimensionVector::new(vec![2, 1, 2]).unwrap();
        let a: Matrix<F> = random_nilradical(&d, &mut trial_rng(7, 3));
        let b: Matrix<F> = random_nilradical(&d, &mut trial_rng(7, 3));
        let c: Matrix<F> = random_nilradical(&d, &mut trial_rng(7, 4));
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(BlockStructure::new(&d).is_nilradical(&a).unwrap());
    }

    #[test]
    fn forced_defects_are_defective() {
        let d = DimensionVector::new(vec![3, 1, 2, 2]).unwrap();
        let st = Strata::new(&d);
        for idx in 0..200 {
            let (a, fd) = forced_defect::<F, _>(&d, &mut trial_rng(1, idx)).unwrap();
            assert!(st.in_zk_unchecked(&a, fd.i, fd.j, fd.k), "{fd:?}");
        }
        assert!(forced_defect::<F, _>(&DimensionVector::new(vec![4]).unwrap(), &mut trial_rng(1, 0)).is_none());
    }
}
