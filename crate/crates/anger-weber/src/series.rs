//! Truncated asymptotic evaluators for the three argument regimes.
//!
//! Each evaluator returns an [`AsymptoticValue`]: the partial sum of a
//! descending expansion, the truncation indices that produced it, the
//! certified remainder radius when one exists (attached from
//! [`crate::bounds`]), and a label for the sector of arg ν in which the
//! expansion is valid. Empty sums are exactly zero.
//!
//! Sector tests use the *carried* argument of ν (see
//! [`crate::hpmath::HPComplex::arg_carried`]): a caller who has continued ν
//! around the origin keeps the sheet it is on, and an evaluator refuses to
//! run outside the sector where its expansion represents the function.
//! Crossing sectors is the job of [`continue_sector`], which combines the
//! base-sector series with the companion Hankel expansions through exact
//! connection formulas.
//!
//! Fractional powers ν^{(2n+1)/3} and prefactor square roots are taken on
//! the carried branch, never the principal one, so evaluations vary
//! continuously along whatever path of ν the caller tracks.
//!
//! Everything here is a pure function of its arguments; concurrent use is
//! safe.

use crate::bounds::{bound_secb, bound_x1};
use crate::coeffs::{an_recurrence, bn_coeff, d2n, factorial, u_at_icotbeta};
use crate::error::{AwError, Result};
use crate::hpmath::{gamma_real, HPComplex, PrecisionContext, Real};
use num_bigint::BigInt;
use num_rational::BigRational;

// --- result type ------------------------------------------------------------

/// Truncation indices of a partial sum: a single index for the one-series
/// expansions, a triple for the split expansion at unit argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truncation {
    /// One series truncated before index `N`.
    Single(usize),
    /// Three interleaved series truncated before `n`, `m`, `k`.
    Triple { n: usize, m: usize, k: usize },
}

/// A truncated asymptotic evaluation: value, truncation, optional certified
/// remainder radius, and the arg-ν sector the expansion is valid in.
#[derive(Debug, Clone)]
pub struct AsymptoticValue {
    value: HPComplex,
    truncation: Truncation,
    bound: Option<Real>,
    envelope: Option<Real>,
    sector: String,
}

impl AsymptoticValue {
    pub(crate) fn new(
        value: HPComplex,
        truncation: Truncation,
        bound: Option<Real>,
        sector: &str,
    ) -> Self {
        AsymptoticValue {
            value,
            truncation,
            bound,
            envelope: None,
            sector: sector.to_owned(),
        }
    }

    pub(crate) fn with_envelope(mut self, envelope: Real) -> Self {
        self.envelope = Some(envelope);
        self
    }

    /// The partial sum.
    pub fn value(&self) -> &HPComplex {
        &self.value
    }

    /// Truncation indices used.
    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    /// Certified radius within which the true function lies, when the
    /// expansion in question has a proven bound attached.
    pub fn bound(&self) -> Option<&Real> {
        self.bound.as_ref()
    }

    /// Order-of-magnitude envelope for the remainder of an exponentially
    /// improved evaluation: the magnitude structure of the error estimate
    /// with its unspecified constant set to 1. Guidance only — unlike
    /// [`bound`](Self::bound) it is *not* a certified radius.
    pub fn envelope(&self) -> Option<&Real> {
        self.envelope.as_ref()
    }

    /// Label of the sector of arg ν in which this evaluation is valid.
    pub fn sector(&self) -> &str {
        &self.sector
    }
}

/// Which expansion an optimal-truncation query refers to.
#[derive(Debug, Clone)]
pub enum ExpansionCase {
    /// Argument x = sec β > 1 (carries β).
    Secb(Real),
    /// Argument x = 1.
    X1,
}

pub(crate) const SECTOR_SECB: &str = "|arg nu| < pi/2";
pub(crate) const SECTOR_X1: &str = "|arg nu| < 3*pi/2";
pub(crate) const SECTOR_HANKEL: &str = "-pi/2 < arg nu < 3*pi/2";
pub(crate) const SECTOR_POS_RE: &str = "Re nu > 0";

// --- shared parameter checks --------------------------------------------------

pub(crate) fn check_beta(beta: &Real, ctx: &PrecisionContext) -> Result<()> {
    let half_pi = Real::pi(ctx).scale_ratio(1, 2, ctx);
    if !beta.is_positive() || *beta >= half_pi {
        return Err(AwError::InvalidParam(format!(
            "beta = {} outside (0, pi/2)",
            beta.to_decimal_sig(6)
        )));
    }
    Ok(())
}

/// Carried argument of ν, after checking it lies strictly inside
/// (lo·π/den, hi·π/den); otherwise a sector error naming the range.
fn check_sector(
    nu: &HPComplex,
    lo: i64,
    hi: i64,
    den: i64,
    label: &str,
    ctx: &PrecisionContext,
) -> Result<Real> {
    let theta = nu.arg_carried(ctx);
    let pi = Real::pi(ctx);
    if theta <= pi.scale_ratio(lo, den, ctx) || theta >= pi.scale_ratio(hi, den, ctx) {
        return Err(AwError::Sector(format!(
            "arg nu = {} is outside {label}; continue_sector crosses sector \
             boundaries",
            theta.to_decimal_sig(6)
        )));
    }
    Ok(theta)
}

// --- evaluators: A₋ν(νx) ------------------------------------------------------

/// Truncated descending expansion of A₋ν(ν sec β) for sec β > 1:
///
/// ```text
/// −(1/π) Σ_{n<N} (2n)! aₙ(−sec β) / ν^{2n+1} ,    |arg ν| < π/2 ,
/// ```
///
/// with the certified remainder radius for this (ν, β, N) attached.
///
/// # Errors
///
/// [`AwError::InvalidParam`] unless 0 < β < π/2; [`AwError::Sector`] if the
/// carried argument of ν is not strictly inside (−π/2, π/2).
pub fn eval_secb(
    nu: &HPComplex,
    beta: &Real,
    n_trunc: usize,
    ctx: &PrecisionContext,
) -> Result<AsymptoticValue> {
    check_beta(beta, ctx)?;
    check_sector(nu, -1, 1, 2, SECTOR_SECB, ctx)?;
    let value = secb_main_sum(nu, beta, n_trunc, ctx);
    let bound = bound_secb(nu, beta, n_trunc, ctx)?;
    Ok(AsymptoticValue::new(
        value,
        Truncation::Single(n_trunc),
        Some(bound.radius().clone()),
        SECTOR_SECB,
    ))
}

/// Truncated descending expansion of A₋ν(ν) (argument exactly 1):
///
/// ```text
/// (1/(3π)) Σ_{n<N} d₂ₙ Γ((2n+1)/3) / ν^{(2n+1)/3} ,   |arg ν| < 3π/2 ,
/// ```
///
/// cube roots on the carried branch (positive for positive real ν), with
/// the certified remainder radius attached.
///
/// # Errors
///
/// [`AwError::Sector`] if the carried argument of ν is not strictly inside
/// (−3π/2, 3π/2).
pub fn eval_x1(nu: &HPComplex, n_trunc: usize, ctx: &PrecisionContext) -> Result<AsymptoticValue> {
    check_sector(nu, -3, 3, 2, SECTOR_X1, ctx)?;

    // ν^{−(2n+1)/3} as ascending odd powers of the carried-branch cube root.
    let third = Real::from_ratio(-1, 3, ctx);
    let croot = nu.powf(&third, ctx);
    let croot_sq = &croot * &croot;
    let mut pow = croot.clone();
    let mut sum = HPComplex::zero(ctx);
    for n in 0..n_trunc {
        let order = Real::from_ratio(2 * n as i64 + 1, 3, ctx);
        let coef = d2n(n, ctx) * gamma_real(&order, ctx)?;
        sum = sum + pow.scale(&coef, ctx);
        pow = &pow * &croot_sq;
    }
    let third_pi_inv = Real::pi(ctx).scale_ratio(3, 1, ctx).recip();
    let value = sum.scale(&third_pi_inv, ctx);

    let bound = bound_x1(nu, n_trunc, ctx)?;
    Ok(AsymptoticValue::new(
        value,
        Truncation::Single(n_trunc),
        Some(bound.radius().clone()),
        SECTOR_X1,
    ))
}

/// The bare partial sum −(1/π) Σ_{n<N} (2n)! aₙ(−sec β) ν^{−(2n+1)} with no
/// sector test and no bound: the exponentially improved evaluator reuses it
/// beyond |arg ν| = π/2, where the terminant corrections carry the
/// continuation and this sum is an ingredient rather than a representation.
pub(crate) fn secb_main_sum(
    nu: &HPComplex,
    beta: &Real,
    n_trunc: usize,
    ctx: &PrecisionContext,
) -> HPComplex {
    let lambda = -beta.cos(ctx).recip();
    let inv = nu.recip(ctx);
    let inv_sq = &inv * &inv;
    let mut pow = inv; // ν^{−(2n+1)}, starting at n = 0
    let mut sum = HPComplex::zero(ctx);
    for n in 0..n_trunc {
        let coef = Real::from_bigint(&factorial(2 * n), ctx)
            * an_recurrence(n).eval_real(&lambda, ctx);
        sum = sum + pow.scale(&coef, ctx);
        pow = &pow * &inv_sq;
    }
    sum.scale(&-Real::pi(ctx).recip(), ctx)
}

// --- evaluators: companion Hankel expansions ----------------------------------

/// Truncated descending expansion of H^{(1)}_ν(ν sec β):
///
/// ```text
/// e^{iν(tanβ−β) − πi/4} / (½νπ tan β)^{1/2} · Σ_{m<M} (−1)^m Uₘ(i cot β)/ν^m ,
/// ```
///
/// valid for −π/2 < arg ν < 3π/2. No remainder bound is attached: this
/// evaluator is an ingredient for continuation and exponential improvement,
/// where its remainder is handled analytically rather than numerically.
///
/// # Errors
///
/// [`AwError::InvalidParam`] unless 0 < β < π/2; [`AwError::Sector`]
/// outside the sector.
pub fn eval_hankel_secb(
    nu: &HPComplex,
    beta: &Real,
    m_trunc: usize,
    ctx: &PrecisionContext,
) -> Result<AsymptoticValue> {
    check_beta(beta, ctx)?;
    check_sector(nu, -1, 3, 2, SECTOR_HANKEL, ctx)?;

    let sum = hankel_secb_sum(nu, beta, m_trunc, /*alternating=*/ true, ctx);
    let value = if m_trunc == 0 {
        sum // exact zero; skip the prefactor entirely
    } else {
        hankel_secb_prefactor(nu, beta, /*upper=*/ true, ctx) * sum
    };
    Ok(AsymptoticValue::new(
        value,
        Truncation::Single(m_trunc),
        None,
        SECTOR_HANKEL,
    ))
}

/// Truncated descending expansion of H^{(1)}_ν(ν) (argument exactly 1):
///
/// ```text
/// −(2/(3π)) Σ_{n<N} d₂ₙ e^{2(2n+1)πi/3} sin((2n+1)π/3) Γ((2n+1)/3) / ν^{(2n+1)/3} ,
/// ```
///
/// valid for −π/2 < arg ν < 3π/2. The sine and the phase are evaluated from
/// exact residue tables — in particular sin((2n+1)π/3) vanishes identically
/// for n ≡ 1 (mod 3), and those terms are skipped, not rounded.
///
/// # Errors
///
/// [`AwError::Sector`] outside the sector.
pub fn eval_hankel_x1(
    nu: &HPComplex,
    n_trunc: usize,
    ctx: &PrecisionContext,
) -> Result<AsymptoticValue> {
    check_sector(nu, -1, 3, 2, SECTOR_HANKEL, ctx)?;
    let value = hankel_x1_sum(nu, n_trunc, /*upper=*/ true, ctx);
    Ok(AsymptoticValue::new(
        value,
        Truncation::Single(n_trunc),
        None,
        SECTOR_HANKEL,
    ))
}

/// Shared prefactor e^{±(iν(tanβ−β) − πi/4)} / (½νπ tan β)^{1/2} of the two
/// Hankel expansions at argument sec β (`upper` selects the + sign, i.e.
/// H^{(1)}).
pub(crate) fn hankel_secb_prefactor(
    nu: &HPComplex,
    beta: &Real,
    upper: bool,
    ctx: &PrecisionContext,
) -> HPComplex {
    let tanb = beta.tan(ctx);
    let w = &tanb - beta; // tan β − β > 0
    let quarter_pi = Real::pi(ctx).scale_ratio(1, 4, ctx);
    let mut phase = nu.scale(&w, ctx) - HPComplex::from_real(quarter_pi);
    if !upper {
        phase = -phase;
    }
    let numerator = phase.mul_i(ctx).exp(ctx);
    let half_pi_tan = Real::pi(ctx).scale_ratio(1, 2, ctx) * &tanb;
    let denominator = nu.scale(&half_pi_tan, ctx).sqrt(ctx);
    numerator / denominator
}

/// Σ_{m<M} (∓1)^m Uₘ(i cot β)/ν^m — the series part shared by the two Hankel
/// expansions at argument sec β (`alternating` = true gives the (−1)^m signs
/// of H^{(1)}; false gives the unsigned sum of H^{(2)}).
pub(crate) fn hankel_secb_sum(
    nu: &HPComplex,
    beta: &Real,
    m_trunc: usize,
    alternating: bool,
    ctx: &PrecisionContext,
) -> HPComplex {
    let inv = nu.recip(ctx);
    let mut pow = HPComplex::one(ctx);
    let mut sum = HPComplex::zero(ctx);
    for m in 0..m_trunc {
        let term = u_at_icotbeta(m, beta, ctx) * &pow;
        if alternating && m % 2 == 1 {
            sum = sum - term;
        } else {
            sum = sum + term;
        }
        pow = &pow * &inv;
    }
    sum
}

/// The full unit-argument Hankel partial sum, exact phase tables included
/// (`upper` = true gives H^{(1)}, with phases e^{+2(2n+1)πi/3}; false gives
/// H^{(2)}, with the conjugate phases).
pub(crate) fn hankel_x1_sum(
    nu: &HPComplex,
    n_trunc: usize,
    upper: bool,
    ctx: &PrecisionContext,
) -> HPComplex {
    // Odd multiples of π/3: sin((2n+1)π/3) cycles {+√3/2, 0, −√3/2} as
    // (2n+1) mod 6 runs over {1, 3, 5}, and e^{2(2n+1)πi/3} depends on
    // (2n+1) mod 3 only.
    let half_sqrt3 = Real::from_i64(3, ctx).sqrt(ctx).scale_ratio(1, 2, ctx);
    let third = Real::from_ratio(-1, 3, ctx);
    let croot = nu.powf(&third, ctx);
    let croot_sq = &croot * &croot;
    let mut pow = croot.clone();
    let mut sum = HPComplex::zero(ctx);
    for n in 0..n_trunc {
        let sine_sign = match (2 * n + 1) % 6 {
            1 => 1,
            3 => 0,
            _ => -1, // 5
        };
        if sine_sign != 0 {
            let phase = match (2 * n + 1) % 3 {
                0 => HPComplex::one(ctx),
                1 => HPComplex::new(
                    Real::from_ratio(-1, 2, ctx),
                    half_sqrt3.clone(),
                ),
                _ => HPComplex::new(
                    Real::from_ratio(-1, 2, ctx),
                    -half_sqrt3.clone(),
                ),
            };
            let phase = if upper { phase } else { phase.conj() };
            let order = Real::from_ratio(2 * n as i64 + 1, 3, ctx);
            let coef = d2n(n, ctx)
                * gamma_real(&order, ctx).expect("gamma at positive argument")
                * &half_sqrt3
                * Real::from_i64(sine_sign, ctx);
            sum = sum + (phase * &pow).scale(&coef, ctx);
        }
        pow = &pow * &croot_sq;
    }
    let neg_two_third_pi_inv = -Real::pi(ctx).recip().scale_ratio(2, 3, ctx);
    sum.scale(&neg_two_third_pi_inv, ctx)
}

// --- evaluator: argument below 1 ----------------------------------------------

/// Truncated (exponentially small) expansion of A₋ν(ν sech α) for
/// 0 < sech α < 1:
///
/// ```text
/// √(2/(πν)) e^{ν(α − tanh α)} Σ_{n<N} (½)ₙ bₙ(sech α) / νⁿ ,   Re ν > 0 ,
/// ```
///
/// where (½)ₙ = (2n)!/(4ⁿ n!). No certified bound exists for this regime,
/// so `bound` is always `None`.
///
/// # Errors
///
/// [`AwError::InvalidParam`] unless α > 0 and Re ν > 0.
pub fn eval_0x1(
    nu: &HPComplex,
    alpha: &Real,
    n_trunc: usize,
    ctx: &PrecisionContext,
) -> Result<AsymptoticValue> {
    if !alpha.is_positive() {
        return Err(AwError::InvalidParam(format!(
            "alpha = {} must be positive",
            alpha.to_decimal_sig(6)
        )));
    }
    let (re, _) = nu.clone().into_parts();
    if !re.is_positive() {
        return Err(AwError::InvalidParam(
            "argument below 1 requires Re nu > 0".to_owned(),
        ));
    }

    let inv = nu.recip(ctx);
    let mut pow = HPComplex::one(ctx);
    let mut sum = HPComplex::zero(ctx);
    for n in 0..n_trunc {
        let coef = Real::from_bigrational(&pochhammer_half(n), ctx) * bn_coeff(n, alpha, ctx);
        sum = sum + pow.scale(&coef, ctx);
        pow = &pow * &inv;
    }

    let value = if n_trunc == 0 {
        sum // exact zero
    } else {
        // √(2/(πν)) = (½πν)^{−1/2}, carried branch.
        let half_pi = Real::pi(ctx).scale_ratio(1, 2, ctx);
        let root = nu
            .scale(&half_pi, ctx)
            .powf(&Real::from_ratio(-1, 2, ctx), ctx);
        let growth = nu.scale(&(alpha - alpha.tanh(ctx)), ctx).exp(ctx);
        root * growth * sum
    };
    Ok(AsymptoticValue::new(
        value,
        Truncation::Single(n_trunc),
        None,
        SECTOR_POS_RE,
    ))
}

/// (½)ₙ = Γ(n + ½)/Γ(½) = (2n)!/(4ⁿ n!), exactly.
fn pochhammer_half(n: usize) -> BigRational {
    BigRational::new(
        factorial(2 * n),
        BigInt::from(4).pow(n as u32) * factorial(n),
    )
}

// --- optimal truncation ---------------------------------------------------------

/// The truncation that minimizes the remainder bound, by the closed-form
/// rules: N = round(½|ν|(tan β − β)) for argument sec β, and
/// N = M = K = round(π|ν|) for argument 1 — nearest integer, ties to even,
/// floored at 1.
///
/// The rounding happens in `f64`: the optimum is flat to first order, so
/// double precision on the index cannot cost accuracy in the evaluation.
pub fn optimal_truncation(
    nu: &HPComplex,
    case: &ExpansionCase,
    ctx: &PrecisionContext,
) -> Truncation {
    let abs_nu = nu.abs(ctx).to_f64();
    match case {
        ExpansionCase::Secb(beta) => {
            let b = beta.to_f64();
            let index = 0.5 * abs_nu * (b.tan() - b);
            Truncation::Single(round_floor_one(index))
        }
        ExpansionCase::X1 => {
            let index = std::f64::consts::PI * abs_nu;
            let n = round_floor_one(index);
            Truncation::Triple { n, m: n, k: n }
        }
    }
}

fn round_floor_one(index: f64) -> usize {
    let rounded = index.round_ties_even();
    if rounded >= 1.0 {
        rounded as usize
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::an_meijer;

    fn ctx50() -> PrecisionContext {
        PrecisionContext::new(50)
    }

    fn assert_close(got: &Real, want: &Real, tol: f64, what: &str) {
        let diff = (got - want).abs().to_f64();
        let scale = want.abs().to_f64().max(1e-300);
        assert!(
            diff / scale < tol,
            "{what}: got {}, want {} (rel diff {:e})",
            got.to_decimal_sig(30),
            want.to_decimal_sig(30),
            diff / scale
        );
    }

    fn assert_cclose(got: &HPComplex, want: &HPComplex, tol: f64, what: &str) {
        let ctx = ctx50();
        let diff = (got - want).abs(&ctx).to_f64();
        let scale = want.abs(&ctx).to_f64().max(1e-300);
        assert!(
            diff / scale < tol,
            "{what}: got {}, want {} (rel diff {:e})",
            got.to_decimal_sig(30),
            want.to_decimal_sig(30),
            diff / scale
        );
    }

    #[test]
    fn empty_sums_evaluate_to_exactly_zero() {
        let ctx = ctx50();
        let nu = HPComplex::from_polar(&Real::from_i64(7, &ctx), &Real::from_f64(0.4, &ctx), &ctx);
        let beta = Real::pi(&ctx).scale_ratio(1, 3, &ctx);
        let alpha = Real::one(&ctx);
        assert!(eval_secb(&nu, &beta, 0, &ctx).unwrap().value().is_zero());
        assert!(eval_x1(&nu, 0, &ctx).unwrap().value().is_zero());
        assert!(eval_hankel_secb(&nu, &beta, 0, &ctx).unwrap().value().is_zero());
        assert!(eval_hankel_x1(&nu, 0, &ctx).unwrap().value().is_zero());
        assert!(eval_0x1(&nu, &alpha, 0, &ctx).unwrap().value().is_zero());
    }

    #[test]
    fn leading_term_at_sec_beta_two_is_the_reciprocal_of_ten_pi() {
        // β = π/3 so sec β = 2 and a₀(−2) = 1/(1−2) = −1: the N = 1 sum is
        // −(1/π)(−1)/ν = 1/(10π) at ν = 10.
        let ctx = ctx50();
        let nu = HPComplex::from_real(Real::from_i64(10, &ctx));
        let beta = Real::pi(&ctx).scale_ratio(1, 3, &ctx);
        let got = eval_secb(&nu, &beta, 1, &ctx).unwrap();
        let want = (Real::pi(&ctx) * Real::from_i64(10, &ctx)).recip();
        let (re, im) = got.value().clone().into_parts();
        assert_close(&re, &want, 1e-40, "N = 1 partial sum at sec beta = 2");
        assert!(im.is_zero(), "real nu, real coefficients: got im = {im:?}");
        assert_eq!(got.truncation(), Truncation::Single(1));
        assert_eq!(got.sector(), SECTOR_SECB);
        assert!(got.bound().unwrap().is_positive());
    }

    #[test]
    fn unit_argument_leading_term_matches_both_closed_forms() {
        // d₀ = 6^{1/3} and Γ(1/3): the N = 1 sum at ν = 100 is
        // (1/(3π))·6^{1/3}·Γ(1/3)/100^{1/3}, which the reflection identity
        // Γ(1/3)Γ(2/3) = 2π/√3 rewrites as 2^{4/3}/(3^{7/6}Γ(2/3)·100^{1/3}).
        let ctx = ctx50();
        let nu = HPComplex::from_real(Real::from_i64(100, &ctx));
        let got = eval_x1(&nu, 1, &ctx).unwrap();

        let third = Real::from_ratio(1, 3, &ctx);
        let croot100 = Real::from_i64(100, &ctx).pow(&third, &ctx);
        let want_direct = Real::from_i64(6, &ctx).pow(&third, &ctx)
            * gamma_real(&third, &ctx).unwrap()
            / (Real::pi(&ctx) * Real::from_i64(3, &ctx) * &croot100);
        let want_reflected = Real::from_i64(2, &ctx).pow(&Real::from_ratio(4, 3, &ctx), &ctx)
            / (Real::from_i64(3, &ctx).pow(&Real::from_ratio(7, 6, &ctx), &ctx)
                * gamma_real(&Real::from_ratio(2, 3, &ctx), &ctx).unwrap()
                * &croot100);
        assert_close(&want_direct, &want_reflected, 1e-45, "closed-form identity");

        let (re, im) = got.value().clone().into_parts();
        assert_close(&re, &want_direct, 1e-40, "N = 1 partial sum at x = 1");
        assert!(im.is_zero(), "positive real nu keeps the sum real");
        assert_eq!(got.sector(), SECTOR_X1);
        assert!(got.bound().unwrap().is_positive());
    }

    #[test]
    fn hankel_truncation_one_is_the_bare_prefactor() {
        // M = 1 keeps only U₀ = 1; M = 2 at β = π/4 multiplies in
        // 1 − U₁(i cot π/4)/ν = 1 − (i/3)/20 = 1 − i/60.
        let ctx = ctx50();
        let nu = HPComplex::from_real(Real::from_i64(20, &ctx));
        let beta = Real::pi(&ctx).scale_ratio(1, 4, &ctx);

        let one_term = eval_hankel_secb(&nu, &beta, 1, &ctx).unwrap();
        let pref = hankel_secb_prefactor(&nu, &beta, true, &ctx);
        assert_cclose(one_term.value(), &pref, 1e-40, "M = 1 equals the prefactor");
        assert!(one_term.bound().is_none());

        let two_terms = eval_hankel_secb(&nu, &beta, 2, &ctx).unwrap();
        let ratio = two_terms.value() / one_term.value();
        let want = HPComplex::new(Real::one(&ctx), Real::from_ratio(-1, 60, &ctx));
        assert_cclose(&ratio, &want, 1e-40, "M = 2 over M = 1");
    }

    #[test]
    fn unit_argument_hankel_skips_the_vanishing_terms() {
        // sin(3π/3) = 0 kills the n = 1 term, so N = 2 and N = 1 partial
        // sums coincide exactly; the n = 0 term itself is
        // −(2/(3π))·6^{1/3}·e^{2πi/3}·(√3/2)·Γ(1/3)·ν^{−1/3}.
        let ctx = ctx50();
        let nu = HPComplex::from_real(Real::from_i64(40, &ctx));
        let one = eval_hankel_x1(&nu, 1, &ctx).unwrap();
        let two = eval_hankel_x1(&nu, 2, &ctx).unwrap();
        assert!((one.value() - two.value()).is_zero());

        let third = Real::from_ratio(1, 3, &ctx);
        let scalar = -Real::pi(&ctx).recip().scale_ratio(2, 3, &ctx)
            * Real::from_i64(6, &ctx).pow(&third, &ctx)
            * Real::from_i64(3, &ctx).sqrt(&ctx).scale_ratio(1, 2, &ctx)
            * gamma_real(&third, &ctx).unwrap()
            / Real::from_i64(40, &ctx).pow(&third, &ctx);
        let want = HPComplex::new(
            scalar.scale_ratio(-1, 2, &ctx),
            &scalar * Real::from_i64(3, &ctx).sqrt(&ctx).scale_ratio(1, 2, &ctx),
        );
        assert_cclose(one.value(), &want, 1e-40, "n = 0 unit-argument Hankel term");
    }

    #[test]
    fn sub_unit_argument_leading_term_matches_the_closed_form() {
        // N = 1, α = 1, ν = 10: √(2/(10π))·e^{10(1−tanh 1)}·(1−sech²1)^{−1/4}.
        let ctx = ctx50();
        let nu = HPComplex::from_real(Real::from_i64(10, &ctx));
        let alpha = Real::one(&ctx);
        let got = eval_0x1(&nu, &alpha, 1, &ctx).unwrap();

        let sech = alpha.cosh(&ctx).recip();
        let b0 = (Real::one(&ctx) - &sech * &sech).pow(&Real::from_ratio(-1, 4, &ctx), &ctx);
        let root = (Real::pi(&ctx) * Real::from_i64(5, &ctx)).recip().sqrt(&ctx);
        let growth = (Real::from_i64(10, &ctx) * (Real::one(&ctx) - alpha.tanh(&ctx))).exp(&ctx);
        let want = root * growth * b0;

        let (re, im) = got.value().clone().into_parts();
        assert_close(&re, &want, 1e-40, "N = 1 sub-unit-argument sum");
        assert!(im.abs().to_f64() < 1e-40 * re.abs().to_f64());
        assert_eq!(got.sector(), SECTOR_POS_RE);
        assert!(got.bound().is_none());
    }

    #[test]
    fn optimal_truncation_follows_the_rounding_rules() {
        let ctx = ctx50();
        let nu10 = HPComplex::from_real(Real::from_i64(10, &ctx));
        let beta = Real::pi(&ctx).scale_ratio(1, 3, &ctx);
        // ½·10·(tan(π/3) − π/3) ≈ 3.42 → 3.
        assert_eq!(
            optimal_truncation(&nu10, &ExpansionCase::Secb(beta.clone()), &ctx),
            Truncation::Single(3)
        );
        // 10π ≈ 31.4 → 31, same index three times.
        assert_eq!(
            optimal_truncation(&nu10, &ExpansionCase::X1, &ctx),
            Truncation::Triple { n: 31, m: 31, k: 31 }
        );
        // Tiny |ν| floors at 1.
        let small = HPComplex::from_real(Real::from_f64(0.1, &ctx));
        assert_eq!(
            optimal_truncation(&small, &ExpansionCase::Secb(beta), &ctx),
            Truncation::Single(1)
        );
        assert_eq!(
            optimal_truncation(&small, &ExpansionCase::X1, &ctx),
            Truncation::Triple { n: 1, m: 1, k: 1 }
        );
    }

    #[test]
    fn conjugating_nu_conjugates_the_real_coefficient_series() {
        let ctx = ctx50();
        let beta = Real::pi(&ctx).scale_ratio(1, 3, &ctx);
        let r8 = Real::from_i64(8, &ctx);
        let up = HPComplex::from_polar(&r8, &Real::from_f64(0.9, &ctx), &ctx);
        let down = HPComplex::from_polar(&r8, &Real::from_f64(-0.9, &ctx), &ctx);
        let v_up = eval_secb(&up, &beta, 4, &ctx).unwrap();
        let v_down = eval_secb(&down, &beta, 4, &ctx).unwrap();
        assert_cclose(
            &v_up.value().conj(),
            v_down.value(),
            1e-40,
            "conjugate symmetry at sec beta = 2",
        );

        let r12 = Real::from_i64(12, &ctx);
        let up = HPComplex::from_polar(&r12, &Real::from_f64(2.0, &ctx), &ctx);
        let down = HPComplex::from_polar(&r12, &Real::from_f64(-2.0, &ctx), &ctx);
        let v_up = eval_x1(&up, 5, &ctx).unwrap();
        let v_down = eval_x1(&down, 5, &ctx).unwrap();
        assert_cclose(
            &v_up.value().conj(),
            v_down.value(),
            1e-40,
            "conjugate symmetry at x = 1",
        );
    }

    #[test]
    fn evaluators_refuse_to_run_outside_their_sectors() {
        let ctx = ctx50();
        let beta = Real::pi(&ctx).scale_ratio(1, 3, &ctx);
        let alpha = Real::one(&ctx);
        let at = |r: f64, th: f64| {
            HPComplex::from_polar(&Real::from_f64(r, &ctx), &Real::from_f64(th, &ctx), &ctx)
        };

        // |θ| ≥ π/2 stops the sec β series in both directions.
        for theta in [1.6, -2.0] {
            let err = eval_secb(&at(9.0, theta), &beta, 2, &ctx).unwrap_err();
            assert!(matches!(err, AwError::Sector(_)), "theta = {theta}: {err}");
        }
        // |θ| ≥ 3π/2 stops the unit-argument series.
        let err = eval_x1(&at(9.0, 4.8), 2, &ctx).unwrap_err();
        assert!(matches!(err, AwError::Sector(_)), "{err}");
        // The Hankel sector is lopsided: −π/2 is already out, +π/2 is fine.
        let err = eval_hankel_secb(&at(9.0, -1.6), &beta, 2, &ctx).unwrap_err();
        assert!(matches!(err, AwError::Sector(_)), "{err}");
        assert!(eval_hankel_secb(&at(9.0, 1.6), &beta, 2, &ctx).is_ok());
        let err = eval_hankel_x1(&at(9.0, 4.8), 2, &ctx).unwrap_err();
        assert!(matches!(err, AwError::Sector(_)), "{err}");
        // Argument below 1 needs Re ν > 0 and α > 0.
        let err = eval_0x1(&at(3.0, 2.0), &alpha, 2, &ctx).unwrap_err();
        assert!(matches!(err, AwError::InvalidParam(_)), "{err}");
        let err = eval_0x1(&at(3.0, 0.0), &Real::zero(&ctx), 2, &ctx).unwrap_err();
        assert!(matches!(err, AwError::InvalidParam(_)), "{err}");
        // β outside (0, π/2) is a parameter error, not a sector error.
        let err = eval_secb(&at(9.0, 0.0), &Real::pi(&ctx), 2, &ctx).unwrap_err();
        assert!(matches!(err, AwError::InvalidParam(_)), "{err}");
    }

    #[test]
    fn attached_bound_agrees_with_the_bounds_module() {
        let ctx = ctx50();
        let beta = Real::pi(&ctx).scale_ratio(1, 3, &ctx);
        let nu = HPComplex::from_polar(&Real::from_i64(12, &ctx), &Real::from_f64(0.2, &ctx), &ctx);
        let from_series = eval_secb(&nu, &beta, 2, &ctx).unwrap();
        let direct = bound_secb(&nu, &beta, 2, &ctx).unwrap();
        assert_close(
            from_series.bound().unwrap(),
            direct.radius(),
            1e-45,
            "sec beta bound attachment",
        );

        let from_series = eval_x1(&nu, 3, &ctx).unwrap();
        let direct = bound_x1(&nu, 3, &ctx).unwrap();
        assert_close(
            from_series.bound().unwrap(),
            direct.radius(),
            1e-45,
            "unit-argument bound attachment",
        );
    }

    /// |term_N| / |term_{N−1}| for the sec β series at real ν, computed from
    /// the exact coefficients (via the double-sum route, independent of the
    /// evaluator's recurrence route).
    fn secb_term_ratio(n: usize, nu: i64, beta: &Real, ctx: &PrecisionContext) -> f64 {
        let lambda = -beta.cos(ctx).recip();
        let term = |j: usize| {
            Real::from_bigint(&factorial(2 * j), ctx).abs()
                * an_meijer(j).eval_real(&lambda, ctx).abs()
                * Real::from_i64(nu, ctx).powi(-(2 * j as i64 + 1), ctx)
        };
        (term(n) / term(n - 1)).to_f64()
    }

    #[test]
    fn term_ratios_shrink_at_optimal_truncation_and_grow_past_twice_it() {
        let ctx = ctx50();
        for (beta_num, beta_den) in [(1i64, 6i64), (1, 3)] {
            let beta = Real::pi(&ctx).scale_ratio(beta_num, beta_den, &ctx);
            for nu in [10i64, 20, 40] {
                // At ν = 10, β = π/6 the unrounded optimum ½|ν|(tan β − β)
                // ≈ 0.27 sits below the floor of 1: the series diverges from
                // its very first step there, so the contraction claim cannot
                // apply. Every other grid point has its optimum at or above
                // the floor.
                let floored_past_optimum = beta_den == 6 && nu == 10;

                let nu_c = HPComplex::from_real(Real::from_i64(nu, &ctx));
                let n_opt = match optimal_truncation(
                    &nu_c,
                    &ExpansionCase::Secb(beta.clone()),
                    &ctx,
                ) {
                    Truncation::Single(n) => n,
                    t => panic!("sec beta truncation is single, got {t:?}"),
                };
                if !floored_past_optimum {
                    let at_opt = secb_term_ratio(n_opt, nu, &beta, &ctx);
                    assert!(
                        at_opt <= 1.0,
                        "nu = {nu}, beta = pi*{beta_num}/{beta_den}: \
                         ratio {at_opt} at N = {n_opt} should contract"
                    );
                }
                let past = secb_term_ratio(2 * n_opt + 2, nu, &beta, &ctx);
                assert!(
                    past >= 1.0,
                    "nu = {nu}, beta = pi*{beta_num}/{beta_den}: \
                     ratio {past} at N = {} should grow",
                    2 * n_opt + 2
                );
            }
        }
    }
}
