//! Exact generation of every coefficient family the expansions need.
//!
//! All generators work in arbitrary-size rational arithmetic; rounding
//! happens only when a caller converts a finished value into working
//! precision. This is not a luxury: the late-coefficient checks need about
//! 32 correct digits out of a₂₅, and the explicit double-sum route suffers
//! cancellation that would destroy any fixed-precision pipeline.
//!
//! Redundancy is deliberate. a_n(λ) has four routes (differential
//! recurrence, explicit Bernoulli double sum, kernel-polynomial Laplace
//! integral, direct Taylor extraction) that share no intermediate code, and
//! the test suite holds them equal; d_{2n} is cross-checked downstream
//! against quadrature of its integral representation.
//!
//! Caches are per-family mutex-guarded maps: generation serializes, readers
//! clone finished values out, and concurrent use is safe (if contended)
//! from any number of threads.

mod an;
mod bernoulli;
mod d2n;
mod poly;
mod power_series;
mod ratfun;
mod un;

pub use an::{an_lauwerier, an_meijer, an_recurrence, an_taylor};
pub use bernoulli::gen_bernoulli;
pub use d2n::{d2n, d2n_exact, D2Exact};
pub use poly::Polynomial;
pub use power_series::PowerSeries;
pub use ratfun::RationalFunction;
pub use un::{bn_coeff, u_at_icotbeta, un_polynomial};

use num_bigint::BigInt;

/// n! as a big integer.
pub(crate) fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}
