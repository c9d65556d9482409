//! Truncated power series with exact rational coefficients.
//!
//! A series of truncation order `n` stores exactly `n + 1` coefficients
//! (zeros included), so order bookkeeping is explicit rather than inferred
//! from trailing content. Truncated multiplication, reciprocal, and rational
//! powers are everything the coefficient generators need; all three keep the
//! truncation order of their inputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A power series `Σ c_k u^k` truncated at `u^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    /// Exactly `order + 1` entries, ascending powers of `u`.
    coeffs: Vec<BigRational>,
    /// Highest retained power of `u`.
    order: usize,
}

impl PowerSeries {
    /// Builds a series from ascending coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        let order = coeffs.len() - 1;
        PowerSeries { coeffs, order }
    }

    /// The constant series `c` at the given truncation order.
    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        coeffs[0] = c;
        PowerSeries { coeffs, order }
    }

    /// The series of `e^{ℓu}` truncated at the given order.
    pub fn exp_of_linear(ell: &BigRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigRational::one();
        coeffs.push(term.clone());
        for k in 1..=order {
            term = term * ell / BigRational::from_integer(BigInt::from(k));
            coeffs.push(term.clone());
        }
        PowerSeries { coeffs, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `u^k`; panics past the truncation order, where the
    /// value is unknown rather than zero.
    pub fn coeff(&self, k: usize) -> &BigRational {
        assert!(k <= self.order, "coefficient {k} lies beyond truncation order {}", self.order);
        &self.coeffs[k]
    }

    /// Truncated product. Both factors must carry the same order so that no
    /// term of the result silently depends on discarded input.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        assert_eq!(
            self.order, other.order,
            "series products require matching truncation orders"
        );
        let mut out = vec![BigRational::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(self.order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries {
            coeffs: out,
            order: self.order,
        }
    }

    /// Reciprocal series; the constant term must be nonzero.
    pub fn recip(&self) -> PowerSeries {
        let g0 = &self.coeffs[0];
        assert!(!g0.is_zero(), "series reciprocal needs a nonzero constant term");
        let mut out = vec![BigRational::zero(); self.order + 1];
        out[0] = g0.recip();
        for n in 1..=self.order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out[n] = -acc / g0;
        }
        PowerSeries {
            coeffs: out,
            order: self.order,
        }
    }

    /// Raises a series with constant term 1 to an arbitrary rational power
    /// via the Miller recurrence
    /// `n·h_n = Σ_{k=1}^{n} ((α+1)k − n)·g_k·h_{n−k}`.
    pub fn pow_ratio(&self, alpha: &BigRational) -> PowerSeries {
        assert!(
            self.coeffs[0].is_one(),
            "rational powers are defined here only for unit constant term"
        );
        let mut out = vec![BigRational::zero(); self.order + 1];
        out[0] = BigRational::one();
        let a1 = alpha + BigRational::one();
        for n in 1..=self.order {
            let nn = BigRational::from_integer(BigInt::from(n));
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let weight = &a1 * BigRational::from_integer(BigInt::from(k)) - &nn;
                acc += weight * &self.coeffs[k] * &out[n - k];
            }
            out[n] = acc / nn;
        }
        PowerSeries {
            coeffs: out,
            order: self.order,
        }
    }
}
