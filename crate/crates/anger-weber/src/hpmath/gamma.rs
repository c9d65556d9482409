//! Euler Γ for real and complex arguments.
//!
//! Three routes, picked by argument shape:
//!
//! * positive integers — exact factorial;
//! * half-integers — exact rational multiple of √π, walked up or down from
//!   Γ(1/2) (these show up in tight loops as Γ(2n ± m + ½) ratios, where
//!   exactness costs nothing and removes a noise floor);
//! * everything else — Stirling's series with exact Bernoulli-number
//!   coefficients, after shifting the argument far enough right that the
//!   series bottoms out below the requested precision, with the reflection
//!   formula covering the left half-plane.
//!
//! Relative accuracy is 10·10^(−digits) of the supplied context; internal
//! work runs with guard digits so that the bound holds after the final
//! rounding.

use std::cell::RefCell;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::AwError;
use crate::Result;

use super::{trim_complex as trim_c, trim_real as trim, HPComplex, PrecisionContext, Real};

thread_local! {
    // Exact Bernoulli numbers B_0, B_1, B_2, …, grown on demand. Only the
    // even-index ones feed Stirling's series, but the recurrence produces
    // them all.
    static BERNOULLI: RefCell<Vec<BigRational>> = const { RefCell::new(Vec::new()) };
}

/// Exact Bernoulli number Bₙ (convention B₁ = −1/2).
pub(crate) fn bernoulli(n: usize) -> BigRational {
    BERNOULLI.with(|cell| {
        let mut cache = cell.borrow_mut();
        while cache.len() <= n {
            let m = cache.len();
            if m == 0 {
                cache.push(BigRational::one());
                continue;
            }
            // B_m = −1/(m+1) · Σ_{j<m} C(m+1, j) B_j
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one(); // C(m+1, 0)
            for (j, b) in cache.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * b;
                // C(m+1, j+1) = C(m+1, j)·(m+1−j)/(j+1)
                binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            let b_m = -acc / BigRational::from_integer(BigInt::from(m + 1));
            cache.push(b_m);
        }
        cache[n].clone()
    })
}

/// Largest integer argument routed through the exact factorial; beyond this
/// the Stirling branch is both faster and accurate enough.
const EXACT_INT_LIMIT: i64 = 4000;

/// Γ(x) for real x. Exact for integers and half-integers within range.
pub fn gamma_real(x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let w = ctx.widened(12);

    // Integer arguments: poles on the left, factorials on the right.
    if x.0.is_int() {
        let n = x.to_f64();
        if n <= 0.0 {
            return Err(AwError::GammaPole(format!("gamma({n})")));
        }
        if n <= EXACT_INT_LIMIT as f64 {
            let mut f = BigUint::one();
            for k in 2..(n as u64) {
                f *= k;
            }
            let mut r = Real::parse(&f.to_string(), &w);
            r = trim(r, ctx);
            return Ok(r);
        }
    }

    // Half-integers: x = k + 1/2. Walk from Γ(1/2) = √π.
    let twice = x + x;
    if twice.0.is_int() && twice.abs().to_f64() < 2.0 * EXACT_INT_LIMIT as f64 {
        let k = ((twice.to_f64() - 1.0) / 2.0).round() as i64; // x = k + 1/2
        let mut g = Real::pi(&w).sqrt(&w);
        if k >= 0 {
            // Γ(1/2 + k) = √π · Π_{j=0}^{k−1} (1/2 + j)
            let mut factor = Real::from_ratio(1, 2, &w);
            for _ in 0..k {
                g = &g * &factor;
                factor = factor + Real::one(&w);
            }
        } else {
            // Γ(1/2 − k) downward: divide by (x, x+1, …, −1/2).
            let mut at = Real::from_ratio(2 * k + 1, 2, &w);
            for _ in 0..(-k) {
                g = &g / &at;
                at = at + Real::one(&w);
            }
        }
        return Ok(trim(g, ctx));
    }

    let z = HPComplex::from_real(x.clone());
    let g = gamma_general(&z, ctx)?;
    Ok(g.re)
}

/// ln Γ(x) for real x > 0, Stirling with a right shift. Used where Γ itself
/// would overflow no reasonable exponent budget.
pub fn ln_gamma_real(x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if !x.is_positive() {
        return Err(AwError::InvalidParam(
            "ln_gamma_real requires a positive argument".into(),
        ));
    }
    let w = ctx.widened(12);
    let z = HPComplex::from_real(x.clone());
    let (ln_g, _) = ln_gamma_shifted(&z, &w)?;
    Ok(trim(ln_g.re, ctx))
}

/// Γ(z) for complex z, away from the poles at 0, −1, −2, ….
pub fn gamma(z: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    // Exact real paths first.
    if z.im.is_zero() {
        let x = &z.re;
        let in_exact_range = x.abs().to_f64() < EXACT_INT_LIMIT as f64;
        if in_exact_range && (x.0.is_int() || (x + x).0.is_int()) {
            let g = gamma_real(x, ctx)?;
            return Ok(HPComplex::from_real(g));
        }
    }
    gamma_general(z, ctx)
}

/// Stirling + reflection, no exact shortcuts.
fn gamma_general(z: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    let w = ctx.widened(12);
    let half = Real::from_ratio(1, 2, &w);

    if z.re < half {
        // Reflection: Γ(z) = π / (sin πz · Γ(1−z)).
        let pi = Real::pi(&w);
        let pz = z.scale(&pi, &w);
        let s = csin(&pz, &w);
        if s.is_zero() {
            return Err(AwError::GammaPole(format!(
                "gamma at {}",
                z.to_decimal_sig(6)
            )));
        }
        let one_minus = HPComplex::one(&w) - z;
        let g1 = gamma_shifted_value(&one_minus, &w)?;
        let denom = s * g1;
        let g = HPComplex::from_real(pi) / denom;
        return Ok(trim_c(g, ctx));
    }

    let g = gamma_shifted_value(z, &w)?;
    Ok(trim_c(g, ctx))
}

/// Γ(z) for Re z ≥ 1/2 via exp(ln Γ(z+k)) / (z(z+1)…(z+k−1)).
fn gamma_shifted_value(z: &HPComplex, w: &PrecisionContext) -> Result<HPComplex> {
    let (ln_g, shift) = ln_gamma_shifted(z, w)?;
    let mut g = cexp(&ln_g, w);
    let mut at = z.clone();
    for _ in 0..shift {
        g = g / &at;
        at = at + HPComplex::one(w);
    }
    Ok(g)
}

/// ln Γ(z + k) by Stirling, together with the integer shift k that pushed
/// the argument far enough right for the series to reach the context's
/// precision. Requires Re z > 0.
fn ln_gamma_shifted(z: &HPComplex, w: &PrecisionContext) -> Result<(HPComplex, u64)> {
    // The asymptotic series bottoms out near e^(−2π|z|); |z| ≥ r0 makes the
    // attainable floor comfortably smaller than 10^(−digits).
    let r0 = 0.37 * w.digits() as f64 + 8.0;
    let re = z.re.to_f64();
    let im = z.im.to_f64();
    let shift = if re * re + im * im >= r0 * r0 {
        0u64
    } else {
        ((r0 * r0 - im * im).max(0.0).sqrt() - re).ceil().max(0.0) as u64 + 1
    };
    let zs = z + &HPComplex::from_real(Real::from_u64(shift, w));

    // (z − 1/2)·ln z − z + ln(2π)/2
    let ln_z = zs.ln_carried(w); // Re zs > 0: principal = carried here
    let half = Real::from_ratio(1, 2, w);
    let two_pi = Real::pi(w) + Real::pi(w);
    let mut sum = (&zs - &HPComplex::from_real(half)) * &ln_z - &zs
        + HPComplex::from_real(two_pi.ln(w) / Real::from_i64(2, w));

    // Σ_m B_{2m} / (2m(2m−1) z^{2m−1})
    let inv = zs.recip(w);
    let inv2 = &inv * &inv;
    let mut zpow = inv.clone(); // z^{−(2m−1)}
    let eps = w.eps();
    let mut prev_mag = f64::INFINITY;
    let mut m = 1usize;
    loop {
        let b = bernoulli(2 * m);
        let coeff = b / BigRational::from_integer(BigInt::from((2 * m) * (2 * m - 1)));
        let term = zpow.scale(&Real::from_bigrational(&coeff, w), w);
        let t_abs = term.abs(w);
        sum = sum + &term;
        if t_abs < &eps * &sum.abs(w) {
            break;
        }
        let t_mag = t_abs.mag10();
        if t_mag >= prev_mag {
            // The divergent tail has turned around before reaching the
            // target: the shift heuristic failed (should not happen).
            return Err(AwError::NonConvergence(
                "Stirling series floor above requested precision".into(),
            ));
        }
        prev_mag = t_mag;
        zpow = &zpow * &inv2;
        m += 1;
        if m > 4 * w.digits() {
            return Err(AwError::NonConvergence(
                "Stirling series failed to terminate".into(),
            ));
        }
    }
    Ok((sum, shift))
}

/// sin z = sin x cosh y + i cos x sinh y.
fn csin(z: &HPComplex, ctx: &PrecisionContext) -> HPComplex {
    HPComplex::new(
        z.re.sin(ctx) * z.im.cosh(ctx),
        z.re.cos(ctx) * z.im.sinh(ctx),
    )
}

/// e^z without branch bookkeeping (local helper; the public one on
/// HPComplex carries Im z as a branch).
fn cexp(z: &HPComplex, ctx: &PrecisionContext) -> HPComplex {
    z.exp(ctx).forget_branch()
}


#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50)
    }

    fn assert_close(got: &Real, want: &str, tol: f64, ctx: &PrecisionContext) {
        let w = Real::parse(want, ctx);
        let rel = ((got - &w) / &w).abs().to_f64();
        assert!(rel < tol, "got {got}, want {want}, rel err {rel:.3e}");
    }

    #[test]
    fn gamma_at_one_is_one() {
        let ctx = ctx();
        let g = gamma_real(&Real::one(&ctx), &ctx).unwrap();
        assert_eq!(g.to_decimal_sig(10), "1.000000000e+0");
    }

    #[test]
    fn gamma_at_half_is_sqrt_pi() {
        let ctx = ctx();
        let g = gamma_real(&Real::from_ratio(1, 2, &ctx), &ctx).unwrap();
        let want = Real::pi(&ctx).sqrt(&ctx);
        assert!(((g - want).abs()).to_f64() < 1e-48);
    }

    #[test]
    fn reflection_product_of_thirds() {
        // Γ(1/3)·Γ(2/3) = 2π/√3 = π / sin(π/3).
        let ctx = ctx();
        let a = gamma_real(&Real::from_ratio(1, 3, &ctx), &ctx).unwrap();
        let b = gamma_real(&Real::from_ratio(2, 3, &ctx), &ctx).unwrap();
        let lhs = a * b;
        let pi = Real::pi(&ctx);
        let rhs = (&pi + &pi) / Real::from_i64(3, &ctx).sqrt(&ctx);
        assert!(((&lhs - &rhs) / &rhs).abs().to_f64() < 1e-48);
    }

    #[test]
    fn gamma_one_third_matches_reference() {
        // python3 tools/reference_values.py hpmath → gamma(1/3)
        let ctx = ctx();
        let g = gamma_real(&Real::from_ratio(1, 3, &ctx), &ctx).unwrap();
        assert_close(
            &g,
            "2.678938534707747633655692940974677644128689377957301100950428327590417610167743821709076464868618062",
            1e-49,
            &ctx,
        );
    }

    #[test]
    fn gamma_negative_real_matches_reference() {
        // python3 tools/reference_values.py hpmath → gamma(-7.3)
        let ctx = ctx();
        let g = gamma_real(&Real::parse("-7.3", &ctx), &ctx).unwrap();
        assert_close(
            &g,
            "0.000418387873013547698981703527343144155546883680855483993814546",
            1e-48,
            &ctx,
        );
    }

    #[test]
    fn gamma_complex_matches_reference() {
        // python3 tools/reference_values.py hpmath → gamma(2+3j)
        let ctx = ctx();
        let z = HPComplex::new(Real::from_i64(2, &ctx), Real::from_i64(3, &ctx));
        let g = gamma(&z, &ctx).unwrap();
        assert_close(
            &g.re,
            "-0.0823952726656118836738703143646259774892907379038426752229952",
            1e-48,
            &ctx,
        );
        assert_close(
            &g.im,
            "0.0917742874352593145956674172937769177383779146310396588759891",
            1e-48,
            &ctx,
        );
    }

    #[test]
    fn recurrence_holds_on_a_random_grid() {
        // Γ(z+1) = z·Γ(z), relative agreement 10·10^(−digits).
        use rand::{Rng, SeedableRng};
        let ctx = PrecisionContext::new(30);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0001);
        for _ in 0..100 {
            let re: f64 = rng.gen_range(-20.0..20.0);
            let im: f64 = rng.gen_range(-20.0..20.0);
            let z = HPComplex::new(Real::from_f64(re, &ctx), Real::from_f64(im, &ctx));
            let g = gamma(&z, &ctx).unwrap();
            let zp1 = &z + &HPComplex::one(&ctx);
            let g1 = gamma(&zp1, &ctx).unwrap();
            let rhs = &z * &g;
            let rel = ((&g1 - &rhs).abs(&ctx) / g1.abs(&ctx)).to_f64();
            assert!(rel < 10.0 * 1e-30, "z = {re}+{im}i: rel err {rel:.3e}");
        }
    }

    #[test]
    fn pole_is_reported() {
        let ctx = ctx();
        assert!(gamma_real(&Real::from_i64(-3, &ctx), &ctx).is_err());
        assert!(gamma_real(&Real::zero(&ctx), &ctx).is_err());
    }

    #[test]
    fn factorial_path_is_exact() {
        let ctx = ctx();
        let g = gamma_real(&Real::from_i64(21, &ctx), &ctx).unwrap();
        // 20! = 2432902008176640000
        assert_eq!(g.to_decimal_sig(19), "2.432902008176640000e+18");
    }
}
