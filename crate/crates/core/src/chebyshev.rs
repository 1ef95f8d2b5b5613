//! The polynomials `S_k` with `S_0 = 1`, `S_1 = γ`,
//! `S_{k+1} = γ S_k - S_{k-1}`, extended to every integer `k` by the same
//! recursion (so `S_{-1} = 0` and `S_k = -S_{-k-2}`).
//!
//! All routines are generic over the coefficient ring, so the same code
//! serves floats, complex numbers, big integers and [`TracePolynomial`]s.

use std::ops::{Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::TracePolynomial;

/// Largest `|k|` accepted for scalar arguments.
pub const SCALAR_INDEX_BOUND: i64 = 1_000_000;
/// Largest `|k|` accepted for polynomial arguments.
pub const POLY_INDEX_BOUND: i64 = 1_000;

/// Ring operations needed to run the recursion.
pub trait RecurrenceRing: Clone + Zero + One + Sub<Output = Self> + Neg<Output = Self>
where
    for<'a> Self: Mul<&'a Self, Output = Self>,
{
}

impl<T> RecurrenceRing for T
where
    T: Clone + Zero + One + Sub<Output = T> + Neg<Output = T>,
    for<'a> T: Mul<&'a T, Output = T>,
{
}

/// `S_k(γ)` with no index bound.
pub fn cheb_s_unbounded<T>(k: i64, gamma: &T) -> T
where
    T: RecurrenceRing,
    for<'a> T: Mul<&'a T, Output = T>,
{
    if k <= -2 {
        return -cheb_s_unbounded(-k - 2, gamma);
    }
    let (mut prev, mut cur) = (T::zero(), T::one());
    if k == -1 {
        return prev;
    }
    for _ in 0..k {
        let next = cur.clone() * gamma - prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn check_bound(k: i64, bound: i64) -> Result<()> {
    if k.unsigned_abs() > bound.unsigned_abs() {
        return Err(Error::IndexOutOfRange { index: k, bound });
    }
    Ok(())
}

/// `S_k(γ)` for a polynomial argument.
pub fn cheb_s(k: i64, gamma: &TracePolynomial) -> Result<TracePolynomial> {
    check_bound(k, POLY_INDEX_BOUND)?;
    Ok(cheb_s_unbounded(k, gamma))
}

/// `S_k(γ)` for a scalar argument.
pub fn cheb_s_scalar<T>(k: i64, gamma: &T) -> Result<T>
where
    T: RecurrenceRing,
    for<'a> T: Mul<&'a T, Output = T>,
{
    check_bound(k, SCALAR_INDEX_BOUND)?;
    Ok(cheb_s_unbounded(k, gamma))
}

/// Value at index `k` of the sequence with `f_{k+1} = γ f_k - f_{k-1}` and
/// the given `f_0`, `f_1`; equal to `S_{k-1}(γ) f_1 - S_{k-2}(γ) f_0`.
pub fn solve_recurrence<T>(f0: &T, f1: &T, gamma: &T, k: i64) -> T
where
    T: RecurrenceRing,
    for<'a> T: Mul<&'a T, Output = T>,
{
    let a = cheb_s_unbounded(k - 1, gamma);
    let b = cheb_s_unbounded(k - 2, gamma);
    a * f1 - b * f0
}

/// Memoised `S_k(γ)` for one fixed scalar `γ`.
#[derive(Debug, Clone)]
pub struct ChebyshevTable<T> {
    gamma: T,
    // values[i] = S_{i-1}
    values: Vec<T>,
}

impl<T> ChebyshevTable<T>
where
    T: RecurrenceRing,
    for<'a> T: Mul<&'a T, Output = T>,
{
    pub fn new(gamma: T) -> Self {
        ChebyshevTable { gamma, values: vec![T::zero(), T::one()] }
    }

    pub fn gamma(&self) -> &T {
        &self.gamma
    }

    pub fn get(&mut self, k: i64) -> Result<T> {
        check_bound(k, SCALAR_INDEX_BOUND)?;
        if k <= -2 {
            return Ok(-self.get(-k - 2)?);
        }
        let idx = (k + 1) as usize;
        while self.values.len() <= idx {
            let n = self.values.len();
            let next = self.values[n - 1].clone() * &self.gamma - self.values[n - 2].clone();
            self.values.push(next);
        }
        Ok(self.values[idx].clone())
    }
}
