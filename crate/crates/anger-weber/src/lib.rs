//! Arbitrary-precision asymptotics of the Anger–Weber function
//!
//! ```text
//! A₋ν(νx) = (1/π) ∫₀^∞ e^{−ν(x sinh t − t)} dt ,   Re ν > 0, x > 0,
//! ```
//!
//! in its three large-order regimes `x = sec β > 1`, `x = 1`, and
//! `x = sech α < 1`. The crate provides, at user-selected decimal
//! precision:
//!
//! * **Exact coefficient families** ([`coeffs`]): the rational functions
//!   aₙ(λ) by three independent routes (a second-order recurrence, an
//!   explicit double sum over generalized Bernoulli polynomials, and a
//!   polynomial-kernel Laplace integral), the cube-root coefficients d₂ₙ
//!   as exact rationals times 6^{(2n+1)/3}, the Hankel coefficient
//!   polynomials Uₙ(x), and the sub-unit-argument coefficients bₙ.
//! * **Truncated asymptotic evaluators** ([`series`]): the descending
//!   series for A₋ν(ν sec β) and A₋ν(ν) with carried-branch complex
//!   powers, the companion Hankel-function expansions, optimal
//!   truncation, and analytic continuation of the evaluation across
//!   sectors of arg ν via connection formulas.
//! * **Certified remainder bounds** ([`bounds`]): csc-form and
//!   erf-refined bounds attached to every truncation in their validity
//!   sectors, plus signed error-by-excess envelopes on the positive axis.
//! * **Terminant function** ([`terminant`]): the scaled terminant
//!   T̂ₚ(w) on all sheets |arg w| ≤ 3π via an incomplete-gamma
//!   reduction, an independent quadrature route, and its error-function
//!   uniform model near the Stokes transition.
//! * **Hyperasymptotics** ([`hyper`]): exponentially improved
//!   (terminant-corrected) evaluations for both cases and Stokes-line
//!   scans that measure the smooth switching-on of the subdominant
//!   exponential against the erf prediction.
//! * **Late-coefficient asymptotics** ([`latecoeff`]): the inverse
//!   factorial series for (2n)! aₙ(−sec β) with its explicit remainder
//!   bound, the optimal-M rule, and the experimental inverse-factorial
//!   formula for Uₙ(coth α).
//! * **Independent oracles** ([`oracle`]): double-exponential quadrature
//!   of the defining integral, the imaginary-order Hankel profile
//!   iH^{(1)}_{it}(itx) through its modified-Bessel reduction, and
//!   resurgence-identity checks connecting remainders to the profile.
//!
//! Everything numeric flows through [`hpmath`], a small
//! precision-context layer (real/complex arithmetic with explicit
//! working precision, branch-carrying complex values, gamma / erf /
//! incomplete gamma, double-exponential quadrature on the half-line).
//!
//! The `aw` binary (see [`cli`]) exposes evaluation, coefficient dumps,
//! bounds, the late-coefficient table, consistency checks, and Stokes
//! scans with JSON/CSV output.

pub mod bounds;
pub mod coeffs;
pub mod error;
pub mod hpmath;
pub mod series;
pub mod terminant;

pub use error::{AwError, Result};
