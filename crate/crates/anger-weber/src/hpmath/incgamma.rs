//! Upper incomplete gamma Γ(a, w) on the principal sheet, arg w ∈ (−π, π]
//! (the negative real axis is taken as its upper-side limit, matching the
//! arg convention of the complex layer).
//!
//! The callers that matter here want Γ(a, w) at very negative `a` (the
//! terminant reduction walks a down one unit per series order), so the
//! evaluation is organized around a stable start plus an integer-step
//! recurrence:
//!
//! 1. shift `a` by an integer to a start point a₀ with Re a₀ ∈ (0, 1]
//!    (a₀ = 0 when `a` is a non-positive integer);
//! 2. evaluate Γ(a₀, w) by the Legendre continued fraction when |w| is
//!    large and w stays away from the negative real axis, otherwise by the
//!    lower-series complement Γ(a₀) − w^{a₀} Σ (−w)ⁿ/(n!(a₀+n)) — or, when
//!    a₀ = 0, by the logarithmic series
//!    Γ(0, w) = −γ − ln w + Σ (−1)^{k+1} wᵏ/(k·k!);
//! 3. walk back to `a` with Γ(a−1, w) = (Γ(a, w) − w^{a−1}e^{−w})/(a−1)
//!    (or its upward form), carrying guard digits sized from the worst
//!    intermediate-to-result ratio Π max(1, |w|/j).
//!
//! Relative accuracy: 100·10^(−digits). Continuation across the cut is the
//! caller's job (the terminant module applies the connection formula).

use crate::error::AwError;
use crate::Result;

use super::gamma::gamma;
use super::{trim_complex as trim_c, HPComplex, PrecisionContext, Real};

/// Γ(a, w) for arg w ∈ (−π, π] (principal sheet, closed on the upper side).
pub fn upper_incomplete_gamma(
    a: &HPComplex,
    w: &HPComplex,
    ctx: &PrecisionContext,
) -> Result<HPComplex> {
    // Γ(a, 0) = Γ(a) for Re a > 0; the integral diverges otherwise.
    if w.is_zero() {
        if a.re.is_positive() {
            return gamma(a, ctx);
        }
        return Err(AwError::InvalidParam(
            "upper_incomplete_gamma(a, 0) requires Re a > 0".into(),
        ));
    }
    let w_val = w.clone().forget_branch();

    // Integer shift to the start point.
    let a_is_int = a.im.is_zero() && a.re.0.is_int();
    let re_a = a.re.to_f64();
    let m: i64 = if a_is_int {
        re_a as i64 // start at a₀ = 0
    } else {
        (re_a - 1.0).ceil() as i64 // Re a₀ ∈ (0, 1]
    };
    let a0 = a - &HPComplex::from_real(Real::from_i64(m, ctx));

    // Guard digits: route cancellation plus recurrence amplification.
    let abs_w = w_val.abs(ctx).to_f64();
    let re_w = w_val.re.to_f64();
    let steps = m.unsigned_abs() as usize;
    let mut amp = 0.0f64; // log₁₀ Π_{j ≤ min(steps, |w|)} (|w|/j)
    if m < 0 {
        let mut j = 1usize;
        while j <= steps && (j as f64) < abs_w {
            amp += (abs_w.ln() - (j as f64).ln()) * std::f64::consts::LOG10_E;
            j += 1;
        }
    }
    let series_guard = ((abs_w + re_w.max(-abs_w)) * std::f64::consts::LOG10_E).max(0.0);
    let w_ctx = ctx.widened(20 + amp.ceil() as usize + series_guard.ceil() as usize);

    // Start value Γ(a₀, w).
    let arg_w = w_val.arg_principal(&w_ctx).to_f64().abs();
    let cf_zone = abs_w >= 6.0 && arg_w <= 2.36; // 3π/4
    let g0 = if cf_zone {
        match incgamma_cf(&a0, &w_val, &w_ctx) {
            Some(g) => g,
            None if a_is_int => e1_series(&w_val, &w_ctx)?,
            None => incgamma_series(&a0, &w_val, &w_ctx)?,
        }
    } else if a_is_int {
        e1_series(&w_val, &w_ctx)?
    } else {
        incgamma_series(&a0, &w_val, &w_ctx)?
    };

    // Recurrence back to a. P tracks w^{a_cur} e^{−w} for the current a.
    let e_neg_w = (-&w_val).exp(&w_ctx).forget_branch();
    let mut g = g0;
    if m > 0 {
        // Upward: Γ(a+1, w) = a·Γ(a, w) + w^a e^{−w}.
        let mut p = w_val.powc(&a0, &w_ctx) * &e_neg_w;
        let mut cur = a0;
        for _ in 0..steps {
            g = &cur * &g + &p;
            p = p * &w_val;
            cur = cur + HPComplex::one(&w_ctx);
        }
    } else if m < 0 {
        // Downward: Γ(a−1, w) = (Γ(a, w) − w^{a−1}e^{−w})/(a−1).
        let a0_minus_1 = &a0 - &HPComplex::one(&w_ctx);
        let mut p = w_val.powc(&a0_minus_1, &w_ctx) * &e_neg_w;
        let mut cur = a0_minus_1;
        for _ in 0..steps {
            g = (&g - &p) / &cur;
            p = p / &w_val;
            cur = cur - HPComplex::one(&w_ctx);
        }
    }
    Ok(trim_c(g, ctx))
}

/// Legendre continued fraction
/// Γ(a, w) = e^{−w} w^a / (w+1−a − 1(1−a)/(w+3−a − 2(2−a)/(w+5−a − …)))
/// via modified Lentz; `None` when it fails to settle in budget.
fn incgamma_cf(a: &HPComplex, w: &HPComplex, ctx: &PrecisionContext) -> Option<HPComplex> {
    let tiny = HPComplex::new(Real::pow10(-(4 * ctx.digits() as i64), ctx), Real::zero(ctx));
    let eps = ctx.eps();
    let one = HPComplex::one(ctx);

    let mut f = tiny.clone();
    let mut c = tiny.clone();
    let mut d = HPComplex::zero(ctx);
    let cap = 400 + 30 * ctx.digits();
    let mut settled = false;
    for n in 0..cap {
        let (an, bn) = if n == 0 {
            (one.clone(), w + &one - a)
        } else {
            let nf = Real::from_u64(n as u64, ctx);
            let n_minus_a = &HPComplex::from_real(nf.clone()) - a;
            (
                -n_minus_a.scale(&nf, ctx),
                w + &HPComplex::from_real(&nf + &nf + Real::one(ctx)) - a,
            )
        };
        d = &bn + &an * &d;
        if d.is_zero() {
            d = tiny.clone();
        }
        c = &bn + &an / &c;
        if c.is_zero() {
            c = tiny.clone();
        }
        d = d.recip(ctx);
        let delta = &c * &d;
        f = f * &delta;
        if (&delta - &one).abs(ctx) < eps {
            settled = true;
            break;
        }
    }
    if !settled {
        return None;
    }
    // With the tiny seed (b₀ folded into the n = 0 step) Lentz converges to
    // 1/(w+1−a − …), the reciprocal of the descending denominator, so the
    // prefactor multiplies f.
    let prefactor = w.powc(a, ctx) * (-w).exp(ctx).forget_branch();
    Some(prefactor * f)
}

/// Complement of the lower series:
/// Γ(a, w) = Γ(a) − w^a Σ_{n≥0} (−w)ⁿ / (n! (a+n)), a not a non-positive
/// integer. The caller supplies a context already widened for the e^{|w|}
/// term growth.
fn incgamma_series(a: &HPComplex, w: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    let abs_w = w.abs(ctx).to_f64();
    let eps = ctx.eps();
    let mut term = HPComplex::one(ctx); // (−w)ⁿ/n!
    let mut sum = &term / a; // Σ term/(a+n), starting at n = 0
    let cap = 1200 + 4 * abs_w.ceil() as usize + 40 * ctx.digits();
    let mut n = 1u64;
    loop {
        term = term * &(-w);
        term = term.scale(&Real::from_u64(n, ctx).recip(), ctx);
        let shifted = &term / &(a + &HPComplex::from_real(Real::from_u64(n, ctx)));
        sum = sum + &shifted;
        if (n as f64) > abs_w && shifted.abs(ctx) < &eps * &sum.abs(ctx) {
            break;
        }
        n += 1;
        if n as usize > cap {
            return Err(AwError::NonConvergence(
                "incomplete-gamma lower series failed to terminate".into(),
            ));
        }
    }
    let g = gamma(a, ctx)?;
    Ok(g - w.powc(a, ctx) * sum)
}

/// Γ(0, w) = −γ − ln w + Σ_{k≥1} (−1)^{k+1} wᵏ/(k·k!): the start value for
/// non-positive integer a when the continued fraction is out of its zone.
/// Valid in every direction, including on the negative real axis (where
/// the principal logarithm's +π branch gives the upper-side limit). The
/// caller supplies a context already widened for the e^{|w|} term growth.
fn e1_series(w: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    let abs_w = w.abs(ctx).to_f64();
    let eps = ctx.eps();
    let one = Real::one(ctx);
    let mut term = HPComplex::one(ctx); // wᵏ/k!
    let mut sum = HPComplex::zero(ctx);
    let cap = 1200 + 4 * abs_w.ceil() as usize + 40 * ctx.digits();
    let mut k = 1u64;
    loop {
        let kf = Real::from_u64(k, ctx);
        term = (term * w).scale(&kf.recip(), ctx);
        let contrib = term.scale(&kf.recip(), ctx);
        if k % 2 == 1 {
            sum = sum + &contrib;
        } else {
            sum = sum - &contrib;
        }
        if (k as f64) > abs_w && contrib.abs(ctx) < &eps * &sum.abs(ctx).max_val(&one) {
            break;
        }
        k += 1;
        if k as usize > cap {
            return Err(AwError::NonConvergence(
                "exponential-integral series failed to terminate".into(),
            ));
        }
    }
    let euler = HPComplex::from_real(Real::euler_gamma(ctx));
    Ok(sum - euler - w.ln_carried(ctx))
}
