//! Scalar domains for exact matrices.
//!
//! Everything above this module is written against [`Scalar`] /
//! [`ExactScalar`]; the concrete domains are arbitrary-precision integers,
//! arbitrary-precision rationals and prime fields `F_p` with a compile-time
//! modulus.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::rank;

/// Commutative ring element with exact arithmetic.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A scalar with exact division by nonzero elements.
pub trait Field: Scalar + Div<Output = Self> {}

impl Field for BigRational {}
impl<const P: u64> Field for Fp<P> {}

/// Which domain a scalar lives in, as written in matrix documents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    /// Integers; ranks are taken over the rationals.
    Z,
    Q,
    Fp(u64),
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Z => write!(f, "Z"),
            Domain::Q => write!(f, "Q"),
            Domain::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// A scalar domain with an exact rank algorithm (over its fraction field).
pub trait ExactScalar: Scalar {
    fn domain() -> Domain;

    /// Rank of the `rows x cols` row-major matrix `data`; `data` is scratch.
    fn rank_in_place(data: &mut [Self], rows: usize, cols: usize) -> usize;
}

impl ExactScalar for BigInt {
    fn domain() -> Domain {
        Domain::Z
    }

    fn rank_in_place(data: &mut [Self], rows: usize, cols: usize) -> usize {
        rank::bareiss_rank(data, rows, cols)
    }
}

impl ExactScalar for BigRational {
    fn domain() -> Domain {
        Domain::Q
    }

    fn rank_in_place(data: &mut [Self], rows: usize, cols: usize) -> usize {
        let mut ints = rank::clear_denominators(data, rows, cols);
        rank::bareiss_rank(&mut ints, rows, cols)
    }
}

impl<const P: u64> ExactScalar for Fp<P> {
    fn domain() -> Domain {
        Domain::Fp(P)
    }

    fn rank_in_place(data: &mut [Self], rows: usize, cols: usize) -> usize {
        rank::gauss_rank(data, rows, cols)
    }
}

/// A finite prime field, usable for sampling and exhaustive enumeration.
pub trait FiniteField: ExactScalar + Field + Copy + Send + Sync {
    const ORDER: u64;

    fn from_u64(v: u64) -> Self;

    fn to_u64(self) -> u64;
}

impl<const P: u64> FiniteField for Fp<P> {
    const ORDER: u64 = P;

    fn from_u64(v: u64) -> Self {
        Fp::new(v)
    }

    fn to_u64(self) -> u64 {
        self.0
    }
}

pub(crate) const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

/// Residue class modulo the prime `P`, stored reduced in `0..P`.
///
/// `P` must be a prime below `2^32` so that products fit in a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const CHECK: () = assert!(is_prime(P) && P < (1 << 32), "modulus must be a prime < 2^32");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp(v % P)
    }

    pub fn from_i64(v: i64) -> Self {
        Fp::new(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let (mut base, mut acc) = (self, Fp::new(1));
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_{P}");
        self.pow(P - 2)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;

    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}
