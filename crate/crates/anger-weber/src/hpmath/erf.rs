//! Error function on the complex plane.
//!
//! Two routes. The Maclaurin series Σ (−1)ⁿ z^{2n+1}/(n!(2n+1)) converges
//! everywhere but cancels catastrophically once the terms (≈ e^{|z|²})
//! dwarf the result, so it runs with guard digits sized from
//! |z|² + min(0, Re z²) — the actual cancellation depth, which stays small
//! near the imaginary axis where erf itself is huge. When Re z² ≥ 0 and |z|
//! is large enough that those guards get expensive, the Stieltjes continued
//! fraction for erfc takes over (modified Lentz iteration); it converges
//! geometrically precisely where the series is worst. If the fraction ever
//! stalls, the series with full guards is the fallback, so the function is
//! total.
//!
//! Relative accuracy: 10·10^(−digits) for |z| ≤ 50.

use super::{trim_complex as trim_c, HPComplex, PrecisionContext, Real};

/// erf z, entire, odd.
pub fn erf(z: &HPComplex, ctx: &PrecisionContext) -> HPComplex {
    if z.is_zero() {
        return HPComplex::zero(ctx);
    }
    // Odd symmetry: keep Re z ≥ 0 so the fraction's convergence region is
    // parameterized once.
    if z.re.is_negative() {
        return -&erf(&-z, ctx);
    }
    let z2 = z * z;
    let abs2 = z2.abs(ctx).to_f64();
    let re_z2 = z2.re.to_f64();
    let cf_worthwhile = re_z2 >= 0.0 && abs2 >= 1.2 * ctx.digits() as f64 * std::f64::consts::LN_10;
    if cf_worthwhile {
        if let Some(c) = erfc_cf(z, &z2, ctx) {
            return HPComplex::one(ctx) - c;
        }
    }
    erf_series(z, &z2, ctx)
}

/// erfc z = 1 − erf z, with the subtraction done at whatever guard depth
/// keeps the complement's own digits intact.
pub fn erfc(z: &HPComplex, ctx: &PrecisionContext) -> HPComplex {
    if z.re.is_negative() {
        let two = HPComplex::new(Real::from_i64(2, ctx), Real::zero(ctx));
        return two - erfc(&-z, ctx);
    }
    let z2 = z * z;
    let abs2 = z2.abs(ctx).to_f64();
    let re_z2 = z2.re.to_f64();
    if re_z2 >= 0.0 && abs2 >= 1.2 * ctx.digits() as f64 * std::f64::consts::LN_10 {
        if let Some(c) = erfc_cf(z, &z2, ctx) {
            return c;
        }
    }
    // 1 − erf loses about Re z² · log₁₀e digits when erf ≈ 1; widen first.
    let extra = (re_z2.max(0.0) * std::f64::consts::LOG10_E).ceil() as usize + 4;
    let w = ctx.widened(extra);
    let e = erf_series(z, &(z * z), &w);
    trim_c(HPComplex::one(&w) - e, ctx)
}

/// Maclaurin series with cancellation-sized guard digits.
fn erf_series(z: &HPComplex, z2: &HPComplex, ctx: &PrecisionContext) -> HPComplex {
    let abs2 = z2.abs(ctx).to_f64();
    let re_z2 = z2.re.to_f64();
    // log₁₀(max term / result): |z|² + min(0, Re z²), in digits.
    let cancel = ((abs2 + re_z2.min(0.0)) * std::f64::consts::LOG10_E).max(0.0);
    let w = ctx.widened(cancel.ceil() as usize + 12);

    let mz2 = -z2;
    let mut term = z.clone().forget_branch(); // z^{2n+1}/n!
    let mut sum = term.clone();
    let eps = w.eps();
    let mut n = 1i64;
    loop {
        term = term * &mz2;
        term = term.scale(&Real::from_i64(n, &w).recip(), &w);
        let denom = Real::from_i64(2 * n + 1, &w);
        let contrib = term.scale(&denom.recip(), &w);
        sum = sum + &contrib;
        // Terms rise to e^{|z|²} before falling; only stop once they are
        // both past the peak and negligible.
        if (n as f64) > abs2 && contrib.abs(&w) < &eps * &sum.abs(&w) {
            break;
        }
        n += 1;
    }
    let two_over_sqrt_pi = Real::from_i64(2, &w) / Real::pi(&w).sqrt(&w);
    trim_c(sum.scale(&two_over_sqrt_pi, &w), ctx)
}

/// Stieltjes continued fraction for erfc, Re z² ≥ 0:
/// erfc z = e^{−z²}/√π · 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + …)))).
/// Returns `None` if Lentz iteration fails to settle within its budget —
/// callers then fall back to the series.
fn erfc_cf(z: &HPComplex, z2: &HPComplex, ctx: &PrecisionContext) -> Option<HPComplex> {
    let w = ctx.widened(10);
    let tiny = HPComplex::new(Real::pow10(-(4 * w.digits() as i64), &w), Real::zero(&w));
    let eps = w.eps();

    let b = z.clone().forget_branch();
    let mut f = tiny.clone();
    let mut c = tiny.clone();
    let mut d = HPComplex::zero(&w);
    let cap = 200 + 20 * w.digits();
    let mut settled = false;
    for n in 1..=cap {
        // a₁ = 1, aₙ = (n−1)/2 for n ≥ 2; bₙ = z throughout.
        let a = if n == 1 {
            HPComplex::one(&w)
        } else {
            HPComplex::new(Real::from_ratio(n as i64 - 1, 2, &w), Real::zero(&w))
        };
        d = &b + &a * &d;
        if d.is_zero() {
            d = tiny.clone();
        }
        c = &b + &a / &c;
        if c.is_zero() {
            c = tiny.clone();
        }
        d = d.recip(&w);
        let delta = &c * &d;
        f = f * &delta;
        if (&delta - &HPComplex::one(&w)).abs(&w) < eps {
            settled = true;
            break;
        }
    }
    if !settled {
        return None;
    }
    // Seeded with f₀ = tiny (b₀ = 0), Lentz converges to the whole fraction
    // 1/(z + …) itself, so multiply.
    let prefactor = (-z2).exp(&w).forget_branch();
    let sqrt_pi = Real::pi(&w).sqrt(&w);
    Some(trim_c(
        (prefactor * f).scale(&sqrt_pi.recip(), &w),
        ctx,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50)
    }

    fn c(re: f64, im: f64, ctx: &PrecisionContext) -> HPComplex {
        HPComplex::new(Real::from_f64(re, ctx), Real::from_f64(im, ctx))
    }

    fn assert_rel(got: &Real, want: &str, tol: f64, ctx: &PrecisionContext) {
        let wv = Real::parse(want, ctx);
        let denom = wv.abs().max_val(&Real::pow10(-60, ctx));
        let rel = ((got - &wv).abs() / denom).to_f64();
        assert!(rel < tol, "got {got}, want {want}, rel {rel:.3e}");
    }

    #[test]
    fn erf_zero_is_zero() {
        let ctx = ctx();
        assert!(erf(&HPComplex::zero(&ctx), &ctx).is_zero());
    }

    #[test]
    fn erf_limit_along_positive_axis() {
        let ctx = ctx();
        let e = erf(&c(40.0, 0.0, &ctx), &ctx);
        assert!((&e.re - Real::one(&ctx)).abs().to_f64() < 1e-49);
        assert!(e.im.is_zero() || e.im.abs().to_f64() < 1e-49);
    }

    #[test]
    fn erf_one_matches_reference() {
        // python3 tools/reference_values.py hpmath → erf(1)
        let ctx = ctx();
        let e = erf(&c(1.0, 0.0, &ctx), &ctx);
        assert_rel(
            &e.re,
            "0.842700792949714869341220635082609259296066997966302908459938",
            1e-49,
            &ctx,
        );
    }

    #[test]
    fn erf_complex_series_path_matches_reference() {
        // python3 tools/reference_values.py hpmath → erf(2+3j)
        let ctx = ctx();
        let e = erf(&c(2.0, 3.0, &ctx), &ctx);
        assert_rel(
            &e.re,
            "-20.829461427614568389103088451981112874439035666354139833769",
            1e-49,
            &ctx,
        );
        assert_rel(
            &e.im,
            "8.68731827147016314442807875454187155305198964864870102310515",
            1e-49,
            &ctx,
        );
    }

    #[test]
    fn erf_complex_fraction_path_matches_reference() {
        // python3 tools/reference_values.py hpmath → erf(12+9j); |z|² = 225
        // and Re z² = 63 put this on the continued-fraction route at 50
        // digits.
        let ctx = ctx();
        let e = erf(&c(12.0, 9.0, &ctx), &ctx);
        assert_rel(
            &e.re,
            "1.00000000000000000000000000001625212657484417846472742897399",
            1e-49,
            &ctx,
        );
        assert_rel(
            &e.im,
            "2.10027671896110175051204123127981980236653014360960452727963e-30",
            1e-20,
            &ctx,
        );
    }

    #[test]
    fn erfc_large_real_matches_reference() {
        // python3 tools/reference_values.py hpmath → erfc(14.5)
        let ctx = ctx();
        let e = erfc(&c(14.5, 0.0, &ctx), &ctx);
        assert_rel(
            &e.re,
            "1.89939594197950304957420002392922790876015232421273414746066e-93",
            1e-49,
            &ctx,
        );
    }

    #[test]
    fn erf_is_odd() {
        let ctx = ctx();
        let z = c(1.25, -0.75, &ctx);
        let a = erf(&z, &ctx);
        let b = erf(&-&z, &ctx);
        assert!((&a.re + &b.re).abs().to_f64() < 1e-49);
        assert!((&a.im + &b.im).abs().to_f64() < 1e-49);
    }

    #[test]
    fn doubling_digits_refines_the_value() {
        let lo = PrecisionContext::new(25);
        let hi = PrecisionContext::new(50);
        let z_lo = c(3.5, 1.5, &lo);
        let z_hi = c(3.5, 1.5, &hi);
        let a = erf(&z_lo, &lo);
        let b = erf(&z_hi, &hi);
        let rel = ((&a.re - &b.re).abs() / b.re.abs()).to_f64();
        assert!(rel < 10.0 * 1e-25, "rel {rel:.3e}");
    }
}
