//! Arbitrary-precision real scalar.
//!
//! [`Real`] wraps a big float and fixes the conventions the rest of the
//! crate relies on: every value knows its own mantissa length, binary
//! operators run at the wider of the two operand precisions, and the
//! transcendental kernels take an explicit [`PrecisionContext`] so the
//! requested accuracy is visible at the call site. Rounding is always
//! round-to-even.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Radix, Sign};

use super::{with_consts, PrecisionContext, RM};

/// Fallback mantissa length for values whose precision cannot be queried
/// (NaN and infinities carry none).
const FALLBACK_BITS: usize = 128;

/// An arbitrary-precision real number.
///
/// Values are created under a [`PrecisionContext`] and carry that context's
/// mantissa length with them; arithmetic between two values runs at the
/// wider of the two lengths, so precision never silently degrades below
/// what either operand had.
#[derive(Debug, Clone)]
pub struct Real(pub(crate) BigFloat);

impl Real {
    // --- constructors -----------------------------------------------------

    /// Zero at the context's precision.
    pub fn zero(ctx: &PrecisionContext) -> Self {
        Real(BigFloat::new(ctx.bits()))
    }

    /// One at the context's precision.
    pub fn one(ctx: &PrecisionContext) -> Self {
        Real::from_i64(1, ctx)
    }

    /// Exact conversion from a machine integer.
    pub fn from_i64(n: i64, ctx: &PrecisionContext) -> Self {
        Real(BigFloat::from_i64(n, ctx.bits()))
    }

    /// Exact conversion from an unsigned machine integer.
    pub fn from_u64(n: u64, ctx: &PrecisionContext) -> Self {
        Real(BigFloat::from_u64(n, ctx.bits()))
    }

    /// Conversion from a double; exact, since doubles are binary floats.
    pub fn from_f64(x: f64, ctx: &PrecisionContext) -> Self {
        Real(BigFloat::from_f64(x, ctx.bits()))
    }

    /// The ratio `num/den`, correctly rounded at the context's precision.
    pub fn from_ratio(num: i64, den: i64, ctx: &PrecisionContext) -> Self {
        Real::from_i64(num, ctx) / Real::from_i64(den, ctx)
    }

    /// Parses a decimal literal such as `-1.25e-3`.
    pub fn parse(s: &str, ctx: &PrecisionContext) -> Self {
        Real(with_consts(|cc| {
            BigFloat::parse(s, Radix::Dec, ctx.bits(), RM, cc)
        }))
    }

    /// Correctly rounded value of an arbitrarily large integer.
    pub fn from_bigint(n: &num_bigint::BigInt, ctx: &PrecisionContext) -> Self {
        Real::parse(&n.to_string(), ctx)
    }

    /// Correctly rounded value of an exact rational.
    pub fn from_bigrational(q: &num_rational::BigRational, ctx: &PrecisionContext) -> Self {
        Real::from_bigint(q.numer(), ctx) / Real::from_bigint(q.denom(), ctx)
    }

    /// π at the context's precision.
    pub fn pi(ctx: &PrecisionContext) -> Self {
        Real::pi_bits(ctx.bits())
    }

    /// π at an explicit mantissa length; the context-free form the complex
    /// layer uses when only an operand's own precision is available.
    pub(crate) fn pi_bits(p: usize) -> Self {
        Real(with_consts(|cc| cc.pi(p, RM)))
    }

    /// ln 10 at the context's precision.
    pub fn ln10(ctx: &PrecisionContext) -> Self {
        Real(with_consts(|cc| cc.ln_10(ctx.bits(), RM)))
    }

    /// Euler's constant γ at the context's precision.
    ///
    /// Computed by the Bessel-ratio scheme: with A = Σ Hₖ(nᵏ/k!)² and
    /// B = Σ (nᵏ/k!)², the ratio A/B − ln n approaches γ with error
    /// O(e^{−4n}), so n grows linearly with the requested digits. Results
    /// are cached per mantissa length (the backing library tables π and
    /// the logarithms but not γ).
    pub fn euler_gamma(ctx: &PrecisionContext) -> Self {
        use std::cell::RefCell;
        use std::collections::HashMap;
        thread_local! {
            static CACHE: RefCell<HashMap<usize, Real>> = RefCell::new(HashMap::new());
        }
        if let Some(hit) =
            CACHE.with(|c| c.borrow().get(&ctx.bits()).cloned())
        {
            return hit;
        }

        let w = ctx.widened(10);
        let n = (w.digits() as f64 * std::f64::consts::LN_10 / 4.0).ceil() as i64 + 2;
        let nf = Real::from_i64(n, &w);
        let mut term = Real::one(&w); // (nᵏ/k!)², k = 0
        let mut harmonic = Real::zero(&w); // Hₖ
        let mut a = Real::zero(&w);
        let mut b = Real::one(&w);
        let eps = w.eps();
        let mut k: i64 = 1;
        loop {
            let kf = Real::from_i64(k, &w);
            let factor = &nf / &kf;
            term = term * &factor * &factor;
            harmonic = harmonic + kf.recip();
            a = a + &term * &harmonic;
            b = b + &term;
            if k > 2 * n && &term * &harmonic < &eps * &b {
                break;
            }
            k += 1;
        }
        let value = super::trim_real(a / b - nf.ln(&w), ctx);
        CACHE.with(|c| c.borrow_mut().insert(ctx.bits(), value.clone()));
        value
    }

    /// `10^k` for a (possibly negative) machine integer `k`.
    pub fn pow10(k: i64, ctx: &PrecisionContext) -> Self {
        let ten = Real::from_i64(10, ctx);
        ten.powi(k, ctx)
    }

    // --- queries -----------------------------------------------------------

    /// Mantissa length in bits; used by operators to pick the result width.
    pub(crate) fn prec(&self) -> usize {
        self.0.mantissa_max_bit_len().unwrap_or(FALLBACK_BITS)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    /// Strictly negative (zero is neither positive nor negative here).
    pub fn is_negative(&self) -> bool {
        !self.0.is_zero() && self.0.is_negative()
    }

    /// Strictly positive.
    pub fn is_positive(&self) -> bool {
        !self.0.is_zero() && self.0.is_positive()
    }

    /// Binary exponent e with |x| ∈ [2^(e−1), 2^e), or `None` for zero/NaN.
    /// Cheap order-of-magnitude probe for guard-digit decisions.
    pub fn mag2(&self) -> Option<i64> {
        if self.0.is_zero() {
            None
        } else {
            self.0.exponent().map(|e| e as i64)
        }
    }

    /// Rough log₁₀|x| as a double, −∞ for zero. Only used to size guard
    /// digits and truncation orders, never in the arithmetic itself.
    pub fn mag10(&self) -> f64 {
        match self.mag2() {
            Some(e) => e as f64 * std::f64::consts::LOG10_2,
            None => f64::NEG_INFINITY,
        }
    }

    /// Nearest double. Values beyond the double range collapse to ±∞.
    pub fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.0.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        // Round a copy down to double-ish precision, then go through the
        // decimal printer; this avoids reaching into raw words.
        let mut v = self.0.clone();
        if v.set_precision(64, RM).is_err() {
            return f64::NAN;
        }
        let s = with_consts(|cc| v.format(Radix::Dec, RM, cc)).unwrap_or_default();
        s.parse::<f64>().unwrap_or(f64::NAN)
    }

    // --- arithmetic helpers ------------------------------------------------

    pub fn abs(&self) -> Self {
        Real(self.0.abs())
    }

    /// 1/x at the value's own precision.
    pub fn recip(&self) -> Self {
        Real(self.0.reciprocal(self.prec(), RM))
    }

    /// `x · num/den` — convenient for π fractions and other simple rational
    /// scalings without spelling out the intermediate constant.
    pub fn scale_ratio(&self, num: i64, den: i64, ctx: &PrecisionContext) -> Self {
        self * &Real::from_ratio(num, den, ctx)
    }

    /// max(self, other) by value.
    pub fn max_val(&self, other: &Real) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// min(self, other) by value.
    pub fn min_val(&self, other: &Real) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Integer power with the usual sign conventions; `x.powi(0)` is 1.
    pub fn powi(&self, n: i64, ctx: &PrecisionContext) -> Self {
        let p = self.prec().max(ctx.bits());
        if n == 0 {
            return Real::from_i64(1, ctx);
        }
        let pos = Real(self.0.powi(n.unsigned_abs() as usize, p, RM));
        if n < 0 {
            Real(pos.0.reciprocal(p, RM))
        } else {
            pos
        }
    }

    /// `x^y` for positive `x` via exp(y ln x); NaN for x ≤ 0.
    pub fn pow(&self, y: &Real, ctx: &PrecisionContext) -> Self {
        let p = self.prec().max(y.prec()).max(ctx.bits());
        Real(with_consts(|cc| self.0.pow(&y.0, p, RM, cc)))
    }

    // --- transcendental kernels ---------------------------------------------

    pub fn sqrt(&self, ctx: &PrecisionContext) -> Self {
        Real(self.0.sqrt(self.prec().max(ctx.bits()), RM))
    }

    pub fn exp(&self, ctx: &PrecisionContext) -> Self {
        let p = self.prec().max(ctx.bits());
        Real(with_consts(|cc| self.0.exp(p, RM, cc)))
    }

    pub fn ln(&self, ctx: &PrecisionContext) -> Self {
        let p = self.prec().max(ctx.bits());
        Real(with_consts(|cc| self.0.ln(p, RM, cc)))
    }

    pub fn sin(&self, ctx: &PrecisionContext) -> Self {
        let p = self.prec().max(ctx.bits());
        Real(with_consts(|cc| self.0.sin(p, RM, cc)))
    }

    pub fn cos(&self, ctx: &PrecisionContext) -> Self {
        let p = self.prec().max(ctx.bits());
        Real(with_consts(|cc| self.0.cos(p, RM, cc)))
    }

    pub fn tan(&self, ctx: &PrecisionContext) -> Self {
        let p = self.prec().max(ctx.bits());
        Real(with_consts(|cc| self.0.tan(p, RM, cc)))
    }

    pub fn atan(&self, ctx: &PrecisionContext) -> Self {
        let p = self.prec().max(ctx.bits());
        Real(with_consts(|cc| self.0.atan(p, RM, cc)))
    }

    pub fn sinh(&self, ctx: &PrecisionContext) -> Self {
        let p = self.prec().max(ctx.bits());
        Real(with_consts(|cc| self.0.sinh(p, RM, cc)))
    }

    pub fn cosh(&self, ctx: &PrecisionContext) -> Self {
        let p = self.prec().max(ctx.bits());
        Real(with_consts(|cc| self.0.cosh(p, RM, cc)))
    }

    pub fn tanh(&self, ctx: &PrecisionContext) -> Self {
        let p = self.prec().max(ctx.bits());
        Real(with_consts(|cc| self.0.tanh(p, RM, cc)))
    }

    /// Principal two-argument arctangent of (y = self, x), in (−π, π].
    pub fn atan2(&self, x: &Real, ctx: &PrecisionContext) -> Self {
        let y = self;
        if x.is_zero() && y.is_zero() {
            return Real::zero(ctx);
        }
        if x.is_zero() {
            let half_pi = Real::pi(ctx) / Real::from_i64(2, ctx);
            return if y.is_positive() { half_pi } else { -half_pi };
        }
        let base = (y / x).atan(ctx);
        if x.is_positive() {
            base
        } else if y.is_negative() {
            base - Real::pi(ctx)
        } else {
            // y ≥ 0, x < 0; the axis point y = 0 lands on +π.
            base + Real::pi(ctx)
        }
    }

    // --- formatting ----------------------------------------------------------

    /// Decimal string with `sig` significant digits, round-half-away at the
    /// last kept digit, in the form `-d.dddde±k` (plain `0` for zero).
    /// Deterministic: used for every number the command-line tools emit.
    pub fn to_decimal_sig(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.0.is_zero() {
            return "0".into();
        }
        if self.0.is_nan() {
            return "NaN".into();
        }
        if self.0.is_inf_pos() {
            return "Inf".into();
        }
        if self.0.is_inf_neg() {
            return "-Inf".into();
        }
        let full = with_consts(|cc| self.0.format(Radix::Dec, RM, cc))
            .unwrap_or_else(|_| "NaN".into());
        round_decimal_repr(&full, sig)
    }

    pub(crate) fn sign_num(&self) -> i32 {
        match self.0.sign() {
            Some(Sign::Pos) => {
                if self.0.is_zero() {
                    0
                } else {
                    1
                }
            }
            Some(Sign::Neg) => -1,
            None => 0,
        }
    }
}

/// Rounds a printer string `[-]d.ddd…e±k` to `sig` significant digits,
/// propagating carries (9.99 → 1.0 with exponent bump).
fn round_decimal_repr(s: &str, sig: usize) -> String {
    let (neg, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let (mant, exp) = match rest.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (rest, 0),
    };
    let digits: Vec<u8> = mant
        .bytes()
        .filter(u8::is_ascii_digit)
        .map(|b| b - b'0')
        .collect();
    // Leading digit position: the printer always emits one digit before the
    // point, so `digits[0]` sits at the 10^exp place.
    let mut kept: Vec<u8> = digits.iter().copied().take(sig).collect();
    while kept.len() < sig {
        kept.push(0);
    }
    let round_up = digits.get(sig).map_or(false, |&d| d >= 5);
    let mut exp = exp;
    if round_up {
        let mut i = kept.len();
        loop {
            if i == 0 {
                // 9.99… rolled all the way over.
                kept.insert(0, 1);
                kept.pop();
                exp += 1;
                break;
            }
            i -= 1;
            if kept[i] == 9 {
                kept[i] = 0;
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push((b'0' + kept[0]) as char);
    if kept.len() > 1 {
        out.push('.');
        for &d in &kept[1..] {
            out.push((b'0' + d) as char);
        }
    }
    if exp >= 0 {
        out.push_str(&format!("e+{exp}"));
    } else {
        out.push_str(&format!("e-{}", -exp));
    }
    out
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Default display keeps a readable number of digits; exact output
        // goes through `to_decimal_sig` with an explicit count.
        write!(f, "{}", self.to_decimal_sig(30))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|s| s.cmp(&0))
    }
}

// Binary operators at the wider of the two operand precisions, for every
// owned/borrowed combination. Macro keeps the sixteen impls honest.
macro_rules! impl_binop {
    ($trait:ident, $method:ident, $bf:ident) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let p = self.prec().max(rhs.prec());
                Real(self.0.$bf(&rhs.0, p, RM))
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, add);
impl_binop!(Sub, sub, sub);
impl_binop!(Mul, mul, mul);
impl_binop!(Div, div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        let mut v = self.0.clone();
        v.inv_sign();
        Real(v)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(mut self) -> Real {
        self.0.inv_sign();
        Real(self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50)
    }

    #[test]
    fn euler_gamma_matches_the_reference_digits() {
        // python3 tools/reference_values.py terminant → euler_gamma
        let ctx = ctx();
        let want = Real::parse(
            "0.577215664901532860606512090082402431042159335939923598805767",
            &ctx,
        );
        let got = Real::euler_gamma(&ctx);
        let diff = (&got - &want).abs().to_f64();
        assert!(diff < 1e-49, "euler gamma off by {diff:e}");
        // Second call is served from the cache and must agree bit-for-bit.
        assert!((&Real::euler_gamma(&ctx) - &got).is_zero());
    }

    #[test]
    fn parse_round_trips_through_decimal_printer() {
        let ctx = ctx();
        let x = Real::parse("1.25e-3", &ctx);
        assert_eq!(x.to_decimal_sig(3), "1.25e-3");
        let y = Real::parse("-9.999951e+2", &ctx);
        // Rounding to five digits carries across the whole mantissa.
        assert_eq!(y.to_decimal_sig(5), "-1.0000e+3");
    }

    #[test]
    fn operators_track_the_wider_precision() {
        let lo = PrecisionContext::new(16);
        let hi = PrecisionContext::new(80);
        let a = Real::from_i64(3, &lo);
        let b = Real::from_i64(7, &hi);
        assert!((&a * &b).prec() >= hi.bits());
    }

    #[test]
    fn pi_matches_reference_digits() {
        let ctx = ctx();
        // First 30 digits of π, a classical value.
        assert_eq!(Real::pi(&ctx).to_decimal_sig(30), "3.14159265358979323846264338328e+0");
    }

    #[test]
    fn atan2_covers_all_quadrants() {
        let ctx = ctx();
        let one = Real::one(&ctx);
        let pi = Real::pi(&ctx);
        let q2 = (&one).atan2(&-&one, &ctx); // (x, y) = (−1, 1) → 3π/4
        let want = &pi * &Real::from_ratio(3, 4, &ctx);
        assert!((q2 - want).abs().to_f64() < 1e-45);
        let q3 = (-&one).atan2(&-&one, &ctx); // → −3π/4
        assert!(q3.is_negative());
        let on_axis = Real::zero(&ctx).atan2(&-&one, &ctx); // → +π
        assert!((on_axis - pi).abs().to_f64() < 1e-45);
    }

    #[test]
    fn powi_handles_negative_exponents() {
        let ctx = ctx();
        let x = Real::from_i64(2, &ctx).powi(-10, &ctx);
        assert!((x.to_f64() - 2f64.powi(-10)).abs() < 1e-18);
    }

    #[test]
    fn to_f64_survives_extreme_exponents() {
        let ctx = ctx();
        let big = Real::pow10(400, &ctx);
        assert!(big.to_f64().is_infinite());
        let small = Real::pow10(-400, &ctx);
        assert_eq!(small.to_f64(), 0.0);
        assert_eq!(Real::zero(&ctx).to_f64(), 0.0);
    }

    #[test]
    fn mag2_brackets_the_value() {
        let ctx = ctx();
        let x = Real::from_f64(12.5, &ctx);
        assert_eq!(x.mag2(), Some(4)); // 12.5 ∈ [2³, 2⁴)
        assert!(Real::zero(&ctx).mag2().is_none());
    }
}
