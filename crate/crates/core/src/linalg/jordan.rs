use super::matrix::Matrix;
use super::scalar::ExactScalar;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Ranks `rk A^0, rk A^1, ...` up to and including the first zero.
///
/// Fails if `A^n` is nonzero.
pub fn power_ranks<S: ExactScalar>(a: &Matrix<S>) -> Result<Vec<usize>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut ranks = vec![n];
    let mut p = Matrix::identity(n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n {
            return Err(Error::NotNilpotent);
        }
        p = p.try_mul(a)?;
        ranks.push(p.rank());
    }
    Ok(ranks)
}

/// Jordan type of a nilpotent matrix: the partition with
/// `#{parts >= k} = rk A^{k-1} - rk A^k`.
pub fn jordan_type<S: ExactScalar>(a: &Matrix<S>) -> Result<Partition> {
    let ranks = power_ranks(a)?;
    // column lengths of the Young diagram, then transpose
    let cols: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(Partition::from_unsorted(cols).conjugate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn zero_matrix_is_all_ones() {
        let z: Matrix<BigInt> = Matrix::zeros(4, 4);
        assert_eq!(jordan_type(&z).unwrap().parts(), &[1, 1, 1, 1]);
    }

    #[test]
    fn single_block() {
        let a: Matrix<BigInt> = Matrix::from_unit_entries(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(jordan_type(&a).unwrap().parts(), &[4]);
    }

    #[test]
    fn rejects_non_nilpotent() {
        let i: Matrix<BigInt> = Matrix::identity(3);
        assert_eq!(jordan_type(&i), Err(Error::NotNilpotent));
    }

    #[test]
    fn empty_matrix() {
        let e: Matrix<BigInt> = Matrix::zeros(0, 0);
        assert!(jordan_type(&e).unwrap().is_empty());
    }
}
