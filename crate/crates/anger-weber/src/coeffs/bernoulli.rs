//! Generalized Bernoulli polynomial values `B_m^{(κ)}(ℓ)`.
//!
//! These are the Taylor coefficients of `(z/(e^z − 1))^κ · e^{ℓz}`, here
//! evaluated at rational κ and ℓ by exact series composition: build
//! `(e^z − 1)/z`, raise it to the power `−κ` with the Miller recurrence,
//! multiply by the exponential series, and read off the coefficient.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::factorial;
use super::power_series::PowerSeries;

/// `B_m^{(κ)}(ℓ)`, exactly.
pub fn gen_bernoulli(m: usize, kappa: &BigRational, ell: &BigRational) -> BigRational {
    // (e^z − 1)/z = Σ z^k/(k+1)! has unit constant term, so the rational
    // power −κ is well defined as a series.
    let base = PowerSeries::new(
        (0..=m)
            .map(|k| BigRational::new(BigInt::one(), factorial(k + 1)))
            .collect(),
    );
    let powered = base.pow_ratio(&-kappa.clone());
    let shifted = powered.mul(&PowerSeries::exp_of_linear(ell, m));
    shifted.coeff(m) * BigRational::from_integer(factorial(m))
}
