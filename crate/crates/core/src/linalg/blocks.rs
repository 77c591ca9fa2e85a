use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::composition::DimensionVector;
use crate::error::{Error, Result};

/// Block decomposition of `n x n` matrices induced by a dimension vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    d: DimensionVector,
    offsets: Vec<usize>,
}

impl BlockStructure {
    pub fn new(d: &DimensionVector) -> Self {
        BlockStructure {
            d: d.clone(),
            offsets: d.offsets(),
        }
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.d
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn t(&self) -> usize {
        self.d.t()
    }

    pub fn n(&self) -> usize {
        self.offsets[self.t()]
    }

    /// 0-based row/column range `o_{i-1} .. o_i` of block `i` (1-based).
    pub fn range(&self, i: usize) -> std::ops::Range<usize> {
        self.offsets[i - 1]..self.offsets[i]
    }

    /// 1-based block index containing the 0-based coordinate `x`.
    pub fn block_of(&self, x: usize) -> usize {
        self.offsets.partition_point(|&o| o <= x)
    }

    /// Whether position `(r, c)` lies in a block `A_ab` with `a < b`.
    pub fn in_pattern(&self, r: usize, c: usize) -> bool {
        self.block_of(r) < self.block_of(c)
    }

    /// All 0-based nilradical positions, row-major.
    pub fn pattern(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .filter(|&(r, c)| self.in_pattern(r, c))
            .collect()
    }

    fn check_square<S: Scalar>(&self, a: &Matrix<S>) -> Result<()> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        if a.rows() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: a.rows(),
            });
        }
        Ok(())
    }

    /// The `d_i x d_j` block `A_ij` (1-based).
    pub fn block<S: Scalar>(&self, a: &Matrix<S>, i: usize, j: usize) -> Result<Matrix<S>> {
        self.check_square(a)?;
        let t = self.t();
        if i == 0 || j == 0 || i > t || j > t {
            return Err(Error::BlockOutOfRange { i, j, t });
        }
        let (r, c) = (self.range(i), self.range(j));
        Ok(a.submatrix(r.start, r.end, c.start, c.end))
    }

    /// The principal window `A[i,j]` spanning blocks `i..=j` (1-based).
    pub fn window<S: Scalar>(&self, a: &Matrix<S>, i: usize, j: usize) -> Result<Matrix<S>> {
        self.check_square(a)?;
        let t = self.t();
        if i == 0 || i > j || j > t {
            return Err(Error::WindowOutOfRange { i, j, t });
        }
        let (lo, hi) = (self.offsets[i - 1], self.offsets[j]);
        Ok(a.submatrix(lo, hi, lo, hi))
    }

    /// Block structure of the window `i..=j`.
    pub fn restrict(&self, i: usize, j: usize) -> Result<BlockStructure> {
        Ok(BlockStructure::new(&self.d.slice(i, j)?))
    }

    /// Whether every entry outside the strict upper block pattern vanishes.
    pub fn is_nilradical<S: Scalar>(&self, a: &Matrix<S>) -> Result<bool> {
        self.check_square(a)?;
        let n = self.n();
        for r in 0..n {
            for c in 0..n {
                if !self.in_pattern(r, c) && !a[(r, c)].is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `A_ij` for the block structure of `d`.
pub fn block<S: Scalar>(a: &Matrix<S>, d: &DimensionVector, i: usize, j: usize) -> Result<Matrix<S>> {
    BlockStructure::new(d).block(a, i, j)
}

/// `A[i,j]` for the block structure of `d`.
pub fn window<S: Scalar>(a: &Matrix<S>, d: &DimensionVector, i: usize, j: usize) -> Result<Matrix<S>> {
    BlockStructure::new(d).window(a, i, j)
}
