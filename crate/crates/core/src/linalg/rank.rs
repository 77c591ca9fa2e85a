//! Exact rank algorithms on row-major scratch buffers.

use std::ops::Div;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::scalar::{Field, Scalar};

/// Fraction-free (Bareiss) elimination over an integral domain.
///
/// Every intermediate entry is a minor of the input, so the division by the
/// previous pivot is exact and coefficients stay bounded by Hadamard's bound.
pub fn bareiss_rank<T>(m: &mut [T], rows: usize, cols: usize) -> usize
where
    T: Scalar + Div<Output = T>,
{
    let mut rank = 0;
    let mut prev = T::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r * cols + c].is_zero()) else {
            continue;
        };
        if piv != rank {
            for k in 0..cols {
                m.swap(piv * cols + k, rank * cols + k);
            }
        }
        let p = m[rank * cols + c].clone();
        for r in rank + 1..rows {
            let f = m[r * cols + c].clone();
            for k in c + 1..cols {
                let v = p.clone() * m[r * cols + k].clone() - f.clone() * m[rank * cols + k].clone();
                m[r * cols + k] = v / prev.clone();
            }
            m[r * cols + c] = T::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// Plain pivoted Gaussian elimination over a field.
pub fn gauss_rank<F: Field>(m: &mut [F], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r * cols + c].is_zero()) else {
            continue;
        };
        if piv != rank {
            for k in 0..cols {
                m.swap(piv * cols + k, rank * cols + k);
            }
        }
        let inv = F::one() / m[rank * cols + c].clone();
        for r in rank + 1..rows {
            if m[r * cols + c].is_zero() {
                continue;
            }
            let f = m[r * cols + c].clone() * inv.clone();
            for k in c + 1..cols {
                let v = m[r * cols + k].clone() - f.clone() * m[rank * cols + k].clone();
                m[r * cols + k] = v;
            }
            m[r * cols + c] = F::zero();
        }
        rank += 1;
    }
    rank
}

/// Scales each row by the lcm of its denominators. Row scaling by nonzero
/// integers preserves rank.
pub fn clear_denominators(m: &[BigRational], rows: usize, cols: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let row = &m[r * cols..(r + 1) * cols];
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        out.extend(row.iter().map(|x| x.numer() * (&l / x.denom())));
    }
    out
}
