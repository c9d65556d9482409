//! Certified error bounds for the truncated descending expansions.
//!
//! Every truncation carries a *radius*: an explicit number the true
//! remainder provably cannot exceed in magnitude inside the stated sector
//! of arg ν. Two bound families exist for each argument regime of the
//! expanded function:
//!
//! * a **cosecant** bound, sharp in the interior of the sector but singular
//!   on its boundary rays, and
//! * a **Stokes-line** bound with a fixed `√(N)`-type factor that stays
//!   finite on the boundary rays where the cosecant one blows up.
//!
//! The selectors below always take the smallest formula valid at the given
//! `(arg ν, N)`; the families are stated independently in the literature and
//! choosing the minimum is sound because each is an unconditional upper
//! bound wherever it applies.
//!
//! The driving coefficient in each radius — `(2N)!·|a_N(−sec β)|` or
//! `|d_{2N}|` — is computed from the exact rational representations in
//! [`crate::coeffs`], not from an integral, so the only rounding in a radius
//! comes from the final floating-point evaluation.
//!
//! Everything here is a pure function of its arguments; concurrent use is
//! safe.

use crate::coeffs::{an_recurrence, d2n, factorial};
use crate::error::{AwError, Result};
use crate::hpmath::{gamma_real, HPComplex, PrecisionContext, Real};

/// Which bound formula produced a radius.
///
/// `Csc*` tags the cosecant family (including its factor-1 branch in the
/// interior of the sector); `Stokes*` tags the boundary-safe family with the
/// `√(e(N + c)/2)`-type factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFormula {
    /// Cosecant bound for the `sec β > 1` expansion: factor 1 for
    /// |θ| ≤ π/4, |csc 2θ| for π/4 < |θ| < π/2.
    CscSecb,
    /// Stokes-line bound for the `sec β > 1` expansion: factor
    /// √(e(N + 3/2)/2), finite up to |θ| = π/2.
    StokesSecb,
    /// Cosecant bound for the argument-1 expansion: factor 1 for
    /// |θ| ≤ 3π/4, |csc(2θ/3)| for 3π/4 < |θ| < 3π/2.
    CscX1,
    /// Stokes-line bound for the argument-1 expansion: factor
    /// √(3e(N + 2)/2), finite up to |θ| = 3π/2.
    StokesX1,
}

/// A certified remainder bound: `|remainder| ≤ radius` whenever `valid`.
///
/// When ν lies outside the sector in which *any* of the formulas holds,
/// `valid` is `false` and `radius` is zero — a deliberate non-answer rather
/// than a wrong number. Callers must check [`ErrorBound::is_valid`] before
/// using the radius.
#[derive(Debug, Clone)]
pub struct ErrorBound {
    radius: Real,
    formula_tag: BoundFormula,
    valid: bool,
}

impl ErrorBound {
    /// The certified radius. Meaningful only when [`Self::is_valid`].
    pub fn radius(&self) -> &Real {
        &self.radius
    }

    /// Which formula family produced the radius.
    pub fn formula_tag(&self) -> BoundFormula {
        self.formula_tag
    }

    /// Whether ν lay inside the sector where the bound holds.
    pub fn is_valid(&self) -> bool {
        self.valid
    }

    fn invalid(tag: BoundFormula, ctx: &PrecisionContext) -> Self {
        ErrorBound {
            radius: Real::zero(ctx),
            formula_tag: tag,
            valid: false,
        }
    }
}

/// |csc x| for x in (0, π), computed as 1/sin x.
fn abs_csc(x: &Real, ctx: &PrecisionContext) -> Real {
    x.sin(ctx).abs().recip()
}

/// √(e(2N + c)/4) with c an integer: the boundary-safe factor common to both
/// Stokes-line bounds, parameterised so that c = 3 gives √(e(N + 3/2)/2)
/// and the argument-1 variant can reuse it through √(3e(N+2)/2) directly.
fn stokes_factor_secb(n: usize, ctx: &PrecisionContext) -> Real {
    // √(e(N + 3/2)/2)
    let e = Real::one(ctx).exp(ctx);
    let half_n = Real::from_ratio(2 * n as i64 + 3, 4, ctx);
    (e * half_n).sqrt(ctx)
}

fn stokes_factor_x1(n: usize, ctx: &PrecisionContext) -> Real {
    // √(3e(N + 2)/2)
    let e = Real::one(ctx).exp(ctx);
    let scale = Real::from_ratio(3 * (n as i64 + 2), 2, ctx);
    (e * scale).sqrt(ctx)
}

/// Remainder bound for the order-`n` truncation of the descending series in
/// the `sec β > 1` regime.
///
/// The radius is `(1/π)·(2N)!·|a_N(−sec β)|/|ν|^{2N+1}` times the smallest
/// applicable sector factor:
///
/// * |θ| ≤ π/4 — factor 1;
/// * π/4 < |θ| < π/2 — the smaller of |csc 2θ| and √(e(N + 3/2)/2), the
///   latter admissible for every θ in this range when N ≥ 1 but only above
///   π/4 + arctan((2/(4N+5))^{1/2}) when N = 0;
/// * |θ| = π/2 — √(e(N + 3/2)/2) alone (the cosecant factor diverges here).
///
/// Beyond |θ| = π/2 no bound of either family holds and the result carries
/// `valid = false`. θ is the carried argument of ν, so callers tracking an
/// analytic continuation get the sector test on the right sheet.
///
/// # Errors
///
/// [`AwError::InvalidParam`] unless 0 < β < π/2.
pub fn bound_secb(
    nu: &HPComplex,
    beta: &Real,
    n: usize,
    ctx: &PrecisionContext,
) -> Result<ErrorBound> {
    let half_pi = Real::pi(ctx).scale_ratio(1, 2, ctx);
    if !beta.is_positive() || *beta >= half_pi {
        return Err(AwError::InvalidParam(format!(
            "beta = {} outside (0, pi/2)",
            beta.to_decimal_sig(6)
        )));
    }

    let theta = nu.arg_carried(ctx).abs();
    if theta > half_pi {
        return Ok(ErrorBound::invalid(BoundFormula::StokesSecb, ctx));
    }

    let quarter_pi = Real::pi(ctx).scale_ratio(1, 4, ctx);
    let (factor, tag) = if theta <= quarter_pi {
        (Real::one(ctx), BoundFormula::CscSecb)
    } else if theta < half_pi {
        let csc = abs_csc(&(Real::from_i64(2, ctx) * &theta), ctx);
        let stokes = stokes_factor_secb(n, ctx);
        // For N = 0 the Stokes-line factor is only admissible above
        // π/4 + arctan((2/5)^{1/2}); below that threshold the cosecant
        // factor (finite there) is the only choice.
        let stokes_ok = if n >= 1 {
            true
        } else {
            let threshold =
                &quarter_pi + Real::from_ratio(2, 5, ctx).sqrt(ctx).atan(ctx);
            theta > threshold
        };
        if stokes_ok && stokes < csc {
            (stokes, BoundFormula::StokesSecb)
        } else {
            (csc, BoundFormula::CscSecb)
        }
    } else {
        (stokes_factor_secb(n, ctx), BoundFormula::StokesSecb)
    };

    // (1/π)·(2N)!·|a_N(−sec β)| / |ν|^{2N+1}, with the coefficient taken
    // from its exact rational closed form.
    let lambda = -beta.cos(ctx).recip();
    let a_n = an_recurrence(n).eval_real(&lambda, ctx);
    let fac = Real::from_bigint(&factorial(2 * n), ctx);
    let base = fac * a_n.abs() / (Real::pi(ctx) * nu.abs(ctx).powi(2 * n as i64 + 1, ctx));

    Ok(ErrorBound {
        radius: base * factor,
        formula_tag: tag,
        valid: true,
    })
}

/// Remainder bound for the order-`n` truncation of the descending series in
/// the argument-1 regime.
///
/// The radius is `(1/(3π))·|d_{2N}|·Γ((2N+1)/3)/|ν|^{(2N+1)/3}` times the
/// smallest applicable sector factor:
///
/// * |θ| ≤ 3π/4 — factor 1;
/// * 3π/4 < |θ| < 3π/2 — the smaller of |csc(2θ/3)| and √(3e(N + 2)/2)
///   (both admissible for every N ≥ 0 here);
/// * |θ| = 3π/2 — √(3e(N + 2)/2) alone.
///
/// Beyond |θ| = 3π/2 the result carries `valid = false`. θ is the carried
/// argument of ν.
pub fn bound_x1(nu: &HPComplex, n: usize, ctx: &PrecisionContext) -> Result<ErrorBound> {
    let three_half_pi = Real::pi(ctx).scale_ratio(3, 2, ctx);
    let theta = nu.arg_carried(ctx).abs();
    if theta > three_half_pi {
        return Ok(ErrorBound::invalid(BoundFormula::StokesX1, ctx));
    }

    let three_quarter_pi = Real::pi(ctx).scale_ratio(3, 4, ctx);
    let (factor, tag) = if theta <= three_quarter_pi {
        (Real::one(ctx), BoundFormula::CscX1)
    } else if theta < three_half_pi {
        let csc = abs_csc(&theta.scale_ratio(2, 3, ctx), ctx);
        let stokes = stokes_factor_x1(n, ctx);
        if stokes < csc {
            (stokes, BoundFormula::StokesX1)
        } else {
            (csc, BoundFormula::CscX1)
        }
    } else {
        (stokes_factor_x1(n, ctx), BoundFormula::StokesX1)
    };

    // Driving term: (1/(3π))·|d_{2N}|·Γ((2N+1)/3)/|ν|^{(2N+1)/3}.
    let d = d2n(n, ctx).abs();
    let g = gamma_real(&Real::from_ratio(2 * n as i64 + 1, 3, ctx), ctx)?;
    let three_pi = Real::pi(ctx).scale_ratio(3, 1, ctx);
    let power = nu
        .abs(ctx)
        .pow(&Real::from_ratio(2 * n as i64 + 1, 3, ctx), ctx);
    let base = d * g / (three_pi * power);

    Ok(ErrorBound {
        radius: base * factor,
        formula_tag: tag,
        valid: true,
    })
}

/// Which expansion an excess certificate refers to.
#[derive(Debug, Clone)]
pub enum ExcessCase {
    /// The `sec β > 1` regime; carries β.
    Secb(Real),
    /// The argument-1 regime.
    X1,
}

/// Signed remainder envelope at real positive ν: the true remainder of the
/// order-`n` truncation lies *strictly* between 0 and the signed first
/// omitted term.
///
/// In particular the order-0 truncation errs by excess: the leading
/// asymptotic approximation always overshoots the true value for every
/// positive ν.
#[derive(Debug, Clone)]
pub struct ExcessEnvelope {
    term: Real,
}

impl ExcessEnvelope {
    /// The signed first omitted term — the nonzero endpoint of the open
    /// interval containing the true remainder.
    pub fn omitted_term(&self) -> &Real {
        &self.term
    }

    /// Lower endpoint of the open interval (0 when the omitted term is
    /// positive, the term itself when negative).
    pub fn lower(&self, ctx: &PrecisionContext) -> Real {
        self.term.min_val(&Real::zero(ctx))
    }

    /// Upper endpoint of the open interval.
    pub fn upper(&self, ctx: &PrecisionContext) -> Real {
        self.term.max_val(&Real::zero(ctx))
    }

    /// Whether `r` lies strictly inside the envelope.
    pub fn contains(&self, r: &Real) -> bool {
        if self.term.is_positive() {
            r.is_positive() && *r < self.term
        } else {
            r.is_negative() && *r > self.term
        }
    }
}

/// Signed remainder envelope for real positive ν.
///
/// For positive ν the remainder representations collapse to
/// `R_N = (first omitted term)·Θ` with 0 < Θ < 1, so the true remainder is
/// trapped in the open interval between 0 and that term — same sign,
/// strictly smaller magnitude. The returned envelope records the signed
/// term; its sign alternates with N (positive at N = 0).
///
/// # Errors
///
/// [`AwError::InvalidParam`] if ν ≤ 0, or (in the `Secb` case) if β lies
/// outside (0, π/2).
pub fn excess_certificate(
    nu: &Real,
    case: &ExcessCase,
    n: usize,
    ctx: &PrecisionContext,
) -> Result<ExcessEnvelope> {
    if !nu.is_positive() {
        return Err(AwError::InvalidParam(format!(
            "excess certificate requires real positive nu, got {}",
            nu.to_decimal_sig(6)
        )));
    }

    let term = match case {
        ExcessCase::Secb(beta) => {
            let half_pi = Real::pi(ctx).scale_ratio(1, 2, ctx);
            if !beta.is_positive() || *beta >= half_pi {
                return Err(AwError::InvalidParam(format!(
                    "beta = {} outside (0, pi/2)",
                    beta.to_decimal_sig(6)
                )));
            }
            // −(1/π)·(2N)!·a_N(−sec β)/ν^{2N+1}, kept signed.
            let lambda = -beta.cos(ctx).recip();
            let a_n = an_recurrence(n).eval_real(&lambda, ctx);
            let fac = Real::from_bigint(&factorial(2 * n), ctx);
            -(fac * a_n) / (Real::pi(ctx) * nu.powi(2 * n as i64 + 1, ctx))
        }
        ExcessCase::X1 => {
            // (1/(3π))·d_{2N}·Γ((2N+1)/3)/ν^{(2N+1)/3}, kept signed.
            let d = d2n(n, ctx);
            let g = gamma_real(&Real::from_ratio(2 * n as i64 + 1, 3, ctx), ctx)?;
            let three_pi = Real::pi(ctx).scale_ratio(3, 1, ctx);
            let power = nu.pow(&Real::from_ratio(2 * n as i64 + 1, 3, ctx), ctx);
            d * g / (three_pi * power)
        }
    };

    Ok(ExcessEnvelope { term })
}
