//! Exact scalars: big rationals, Gaussian rationals and modular helpers.
//!
//! Nothing in this crate touches floating point; every invariant is one of
//! these types.

mod gaussian;
mod rational;

use num_integer::Integer;
use thiserror::Error;

pub use gaussian::GaussianRational;
pub use rational::{is_integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{a} is not invertible modulo {n}")]
    NotCoprime { a: i64, n: i64 },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(i64),
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
}

/// Inverse of `a` modulo `n`, returned in `[1, n-1]`.
pub fn mod_inverse(a: i64, n: i64) -> Result<i64, ExactError> {
    if n < 2 {
        return Err(ExactError::InvalidModulus(n));
    }
    let r = a.rem_euclid(n);
    let eg = r.extended_gcd(&n);
    if eg.gcd != 1 {
        return Err(ExactError::NotCoprime { a, n });
    }
    Ok(eg.x.rem_euclid(n))
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Field operations needed by the exact linear algebra routines.
pub trait FieldElem: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl FieldElem for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        self.recip().expect("pivot is nonzero")
    }
}

impl FieldElem for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        GaussianRational::inv(self).expect("pivot is nonzero")
    }
}
