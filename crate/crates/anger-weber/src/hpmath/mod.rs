//! Arbitrary-precision arithmetic layer: precision contexts, real and complex
//! scalars, and the special-function primitives everything else is built on.
//!
//! All numerical work in this crate flows through a [`PrecisionContext`],
//! which fixes the number of decimal digits carried and the relative target
//! for quadrature. Routines that need guard digits derive a widened context
//! internally; callers only ever state the accuracy they want at the end.
//!
//! The layer deliberately exposes a small surface:
//!
//! * [`Real`] / [`HPComplex`] — scalars with value-carried precision and, for
//!   complex values, an optional branch argument that may exceed π so powers
//!   can follow an analytic continuation instead of snapping to the
//!   principal sheet.
//! * [`gamma`] — Euler Γ for complex arguments, exact for integers and
//!   half-integers, Stirling elsewhere.
//! * [`erf`] — the error function on the complex plane.
//! * [`upper_incomplete_gamma`] — Γ(a, w) on the principal sheet
//!   |arg w| < π; continuation across cuts is the caller's business.
//! * [`quad_semiinfinite`] — double-exponential quadrature over (0, ∞) for
//!   integrands with at worst an algebraic endpoint singularity at 0 and
//!   exponential decay at infinity.
//!
//! Backed by pure-Rust big floats; a thread-local constants cache keeps the
//! transcendental kernels cheap to call. Everything here is a pure function
//! of its arguments, so concurrent use from multiple threads is safe (each
//! thread warms its own cache).

use std::cell::RefCell;

use astro_float::{Consts, RoundingMode};

mod complex;
mod erf;
mod gamma;
mod incgamma;
mod quad;
mod real;

pub use complex::HPComplex;
pub use erf::{erf, erfc};
pub use gamma::{gamma, gamma_real, ln_gamma_real};
pub use incgamma::upper_incomplete_gamma;
pub use quad::quad_semiinfinite;
pub use real::Real;

/// Rounding used for every big-float operation in the crate. Round-to-even
/// keeps results deterministic across runs and platforms.
pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

/// Binary guard bits added on top of the bits equivalent to the requested
/// decimal digits, so that a handful of rounding errors never shows up in
/// the final decimal place.
const GUARD_BITS: usize = 32;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("big-float constants cache"));
}

/// Runs `f` with the thread-local constants cache. Calls must not nest:
/// callers evaluate one kernel at a time and release the cache before
/// invoking arbitrary user code (closures, integrands).
pub(crate) fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Rounds a wide intermediate back down to the caller's precision.
pub(crate) fn trim_real(x: Real, ctx: &PrecisionContext) -> Real {
    let mut v = x.0;
    let _ = v.set_precision(ctx.bits(), RM);
    Real(v)
}

/// Componentwise [`trim_real`], dropping any carried branch.
pub(crate) fn trim_complex(z: HPComplex, ctx: &PrecisionContext) -> HPComplex {
    let (re, im) = z.into_parts();
    HPComplex::new(trim_real(re, ctx), trim_real(im, ctx))
}

/// Working precision plus quadrature tolerance, passed by reference through
/// the whole crate.
///
/// Invariants enforced at construction: `digits ≥ 16`, and
/// `quad_target ≥ 10^(−digits+5)` — five guard digits always stay between
/// what quadrature promises and what the scalars carry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionContext {
    digits: usize,
    quad_target: f64,
}

impl PrecisionContext {
    /// Context carrying `digits` decimal digits, with the quadrature target
    /// at its tightest permitted value `10^(−digits+5)`.
    ///
    /// `digits` below 16 is bumped up to 16: fewer digits than a double
    /// would defeat the point of this layer.
    pub fn new(digits: usize) -> Self {
        let digits = digits.max(16);
        PrecisionContext {
            digits,
            quad_target: 10f64.powi(-(digits as i32) + 5),
        }
    }

    /// Same digits, explicit quadrature target. Targets tighter than the
    /// invariant allows are clamped to `10^(−digits+5)`.
    pub fn with_quad_target(digits: usize, quad_target: f64) -> Self {
        let digits = digits.max(16);
        let floor = 10f64.powi(-(digits as i32) + 5);
        PrecisionContext {
            digits,
            quad_target: quad_target.max(floor),
        }
    }

    /// Decimal digits carried by scalars created under this context.
    pub fn digits(&self) -> usize {
        self.digits
    }

    /// Relative tolerance the quadrature engine aims for.
    pub fn quad_target(&self) -> f64 {
        self.quad_target
    }

    /// Mantissa length in bits for this context: digits converted to bits
    /// (log₂10 per digit) plus a fixed binary guard.
    pub fn bits(&self) -> usize {
        // 1 decimal digit ≈ 3.3219 bits; round up and add guard bits.
        (self.digits * 3322 + 999) / 1000 + GUARD_BITS
    }

    /// A context with `extra` more decimal digits, quadrature target kept at
    /// the same number of guard digits relative to the new precision.
    pub fn widened(&self, extra: usize) -> Self {
        PrecisionContext::new(self.digits + extra)
    }

    /// `10^(−digits)`: the relative error scale this context works at.
    pub fn eps(&self) -> Real {
        Real::pow10(-(self.digits as i64), self)
    }
}

impl Default for PrecisionContext {
    /// Fifty digits: enough to print 32-digit reference values with a wide
    /// margin, which is the heaviest demand the command-line tools make.
    fn default() -> Self {
        PrecisionContext::new(50)
    }
}
