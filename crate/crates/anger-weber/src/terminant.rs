//! The scaled terminant T̂_p(w) — the re-expansion kernel of every
//! remainder in this crate — on all sheets up to |arg w| ≤ 3π, plus its
//! error-function model across the Stokes ray.
//!
//! For |arg w| < π the terminant is the Stieltjes-type integral
//!
//! ```text
//! T̂_p(w) = e^{iπp} w^{1−p} e^{−w} / (2πi) · ∫₀^∞ t^{p−1} e^{−t} / (w + t) dt,
//! ```
//!
//! continued analytically in w elsewhere. Two independent evaluation routes
//! are kept side by side and never collapsed:
//!
//! * [`terminant`] — the incomplete-gamma reduction
//!   T̂_p(w) = e^{iπp} Γ(p) Γ(1−p, w) / (2πi). The reduction continues
//!   cleanly across the cut: one counterclockwise circuit of the origin
//!   sends T̂_p(w) to e^{−2πip} T̂_p(w) + 1 (and one clockwise circuit to
//!   e^{2πip}(T̂_p(w) − 1)), so values off the principal sheet are the
//!   principal value pushed through that relation once per crossing, with
//!   the crossing count read from the carried branch argument of w. Points
//!   exactly on the negative real axis inherit the upper-side limit from
//!   the scalar layer's arg convention; the defining integral's
//!   principal-value ambiguity there never arises.
//! * [`terminant_quadrature`] — direct double-exponential quadrature of the
//!   defining integral, valid strictly inside |arg w| < π, used as a check
//!   on the reduction.
//!
//! Near the ray arg w = π, where the underlying remainder switches on, T̂
//! is uniformly modelled by ½ + ½ erf(c(φ)·√(|w|/2)) with c(φ) the solution
//! of ½c² = 1 + i(φ−π) − e^{i(φ−π)} that vanishes at φ = π ([`c_of_phi`]);
//! the reflected range −3π < φ ≤ −π uses the mirrored form
//! e^{2πip}(−½ + ½ erf(−c̄(−φ)·√(|w|/2))). The model ([`terminant_erf_model`])
//! is the main term only — its error is O(|w|^{−1/2}) for p ~ |w| — and is
//! what the Stokes-smoothing scans compare measured terminants against.
//!
//! Everything here is a pure function of its arguments; concurrent use is
//! safe.

use crate::error::AwError;
use crate::hpmath::{
    erf, gamma_real, quad_semiinfinite, trim_complex, upper_incomplete_gamma, HPComplex,
    PrecisionContext, Real,
};
use crate::Result;

// --- result type -------------------------------------------------------------

/// Which evaluation route produced a terminant value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TerminantRoute {
    /// Incomplete-gamma reduction, continued across sheets by the circuit
    /// relation. The primary route: defined for |arg w| ≤ 3π.
    IncGamma,
    /// Direct quadrature of the defining integral, |arg w| < π only.
    Quadrature,
    /// Error-function main term of the uniform ray asymptotics.
    ErfAsymptotic,
}

/// An evaluated terminant: order, argument (branch kept as given), value,
/// and the route that produced it.
#[derive(Debug, Clone)]
pub struct TerminantEval {
    p: Real,
    w: HPComplex,
    value: HPComplex,
    route: TerminantRoute,
}

impl TerminantEval {
    /// The order p.
    pub fn order(&self) -> &Real {
        &self.p
    }

    /// The argument w, carried branch intact.
    pub fn argument(&self) -> &HPComplex {
        &self.w
    }

    /// The value T̂_p(w).
    pub fn value(&self) -> &HPComplex {
        &self.value
    }

    /// Route used for this evaluation.
    pub fn route(&self) -> TerminantRoute {
        self.route
    }
}

// --- shared checks -----------------------------------------------------------

fn check_order(p: &Real) -> Result<()> {
    if !p.is_finite() || !p.is_positive() {
        return Err(AwError::InvalidParam(format!(
            "terminant order p = {} must be positive",
            p.to_decimal_sig(6)
        )));
    }
    Ok(())
}

fn check_argument(w: &HPComplex) -> Result<()> {
    if w.is_zero() || !w.is_finite() {
        return Err(AwError::InvalidParam(
            "terminant argument w must be nonzero and finite".into(),
        ));
    }
    Ok(())
}

// --- incomplete-gamma route ----------------------------------------------------

/// A continued terminant split along the circuit relations:
/// `T̂ = continued + additive(p, crossings)`, where `continued` is
/// e^{∓2πip·c} times the principal-sheet value — a pure product, so it
/// stays *relatively* accurate however small it is — and the additive part
/// is the polynomial in e^{∓2πip} that the sheet walk generates (0 on the
/// principal sheet, 1 after one counterclockwise crossing, −e^{2πip} after
/// one clockwise).
///
/// Combinations of terminants whose additive parts cancel algebraically
/// must be assembled from these pieces: adding full values first would
/// round the O(1) additive parts against continued parts that can be
/// hundreds of orders of magnitude smaller.
pub(crate) struct TerminantParts {
    pub(crate) continued: HPComplex,
    pub(crate) crossings: i64,
}

/// The additive part of the sheet walk: 0 for `crossings = 0`,
/// Σ_{k<c} e^{−2πipk} after c counterclockwise crossings,
/// −Σ_{1≤k≤|c|} e^{2πipk} after |c| clockwise ones.
pub(crate) fn sheet_additive(p: &Real, crossings: i64, ctx: &PrecisionContext) -> HPComplex {
    let mut additive = HPComplex::zero(ctx);
    if crossings == 0 {
        return additive;
    }
    let two_pi_p = (p + p) * Real::pi(ctx);
    let one = HPComplex::one(ctx);
    if crossings > 0 {
        let rot = HPComplex::from_polar(&Real::one(ctx), &-&two_pi_p, ctx).forget_branch();
        for _ in 0..crossings {
            additive = &rot * &additive + &one;
        }
    } else {
        let rot = HPComplex::from_polar(&Real::one(ctx), &two_pi_p, ctx).forget_branch();
        for _ in 0..-crossings {
            additive = &rot * &(additive - &one);
        }
    }
    additive
}

/// [`terminant`] with the sheet walk left unassembled; same domain and
/// error conditions. `ctx` should already carry whatever widening the
/// caller wants — no extra guard digits are added here.
pub(crate) fn terminant_parts(
    p: &Real,
    w: &HPComplex,
    ctx: &PrecisionContext,
) -> Result<TerminantParts> {
    let phi = w.arg_carried(ctx);
    let phi_f = phi.to_f64();
    if phi_f.abs() > 3.0 * std::f64::consts::PI + 1e-9 {
        return Err(AwError::Sector(format!(
            "terminant argument has arg w = {phi_f:.6}, outside |arg w| <= 3*pi"
        )));
    }
    let base = w.arg_principal(ctx);
    let turns = (&phi - &base).to_f64() / (2.0 * std::f64::consts::PI);
    let crossings = turns.round() as i64;
    if (turns - crossings as f64).abs() > 1e-6 {
        return Err(AwError::InvalidParam(format!(
            "carried branch argument {phi_f:.6} is not congruent to the principal \
             argument modulo 2*pi"
        )));
    }

    // Principal-sheet value e^{iπp} Γ(p) Γ(1−p, w) / (2πi).
    let one_minus_p = HPComplex::from_real(Real::one(ctx) - p);
    let g = upper_incomplete_gamma(&one_minus_p, w, ctx)?;
    let gp = gamma_real(p, ctx)?;
    let pi_wide = Real::pi(ctx);
    let phase = HPComplex::from_polar(&Real::one(ctx), &(p * &pi_wide), ctx).forget_branch();
    let inv_two_pi = (&pi_wide + &pi_wide).recip();
    let mut continued = (phase * g).scale(&gp, ctx).div_i(ctx).scale(&inv_two_pi, ctx);

    if crossings != 0 {
        let two_pi_p = (p + p) * &pi_wide;
        let angle = if crossings > 0 { -&two_pi_p } else { two_pi_p };
        let rot = HPComplex::from_polar(&Real::one(ctx), &angle, ctx).forget_branch();
        for _ in 0..crossings.abs() {
            continued = &rot * &continued;
        }
    }

    Ok(TerminantParts { continued, crossings })
}

/// T̂_p(w) by the incomplete-gamma reduction, for |arg w| ≤ 3π with the
/// argument read from the carried branch of `w`.
///
/// The principal-sheet value is e^{iπp} Γ(p) Γ(1−p, w) / (2πi); each full
/// turn of w recorded in the branch applies one circuit relation
/// (counterclockwise: T̂ ↦ e^{−2πip} T̂ + 1; clockwise the inverse). The
/// crossing count is the difference between the carried and the principal
/// argument, so a branch that is not congruent to the principal argument
/// modulo 2π is rejected rather than silently rounded.
pub fn terminant(p: &Real, w: &HPComplex, ctx: &PrecisionContext) -> Result<TerminantEval> {
    check_order(p)?;
    check_argument(w)?;
    let wide = ctx.widened(10);

    let parts = terminant_parts(p, w, &wide)?;
    let value = parts.continued + sheet_additive(p, parts.crossings, &wide);

    Ok(TerminantEval {
        p: p.clone(),
        w: w.clone(),
        value: trim_complex(value, ctx),
        route: TerminantRoute::IncGamma,
    })
}

// --- quadrature route ----------------------------------------------------------

/// T̂_p(w) by direct quadrature of the defining integral. Valid strictly
/// inside |arg w| < π; everywhere else (including exactly on the negative
/// real axis, where the integrand has a pole on the path) use [`terminant`].
pub fn terminant_quadrature(
    p: &Real,
    w: &HPComplex,
    ctx: &PrecisionContext,
) -> Result<TerminantEval> {
    check_order(p)?;
    check_argument(w)?;
    let wide = ctx.widened(10);

    let phi_f = w.arg_carried(&wide).to_f64();
    if phi_f.abs() >= std::f64::consts::PI {
        return Err(AwError::Sector(format!(
            "defining integral requires |arg w| < pi, got arg w = {phi_f:.6}; \
             use terminant() for continued values"
        )));
    }

    let w_plain = w.clone().forget_branch();
    let p_minus_1 = p - &Real::one(&wide);
    let integral = quad_semiinfinite(
        |t: &Real, c: &PrecisionContext| {
            // t^{p−1} e^{−t} / (w + t)
            let num = t.pow(&p_minus_1, c) * (-t).exp(c);
            let den = HPComplex::new(&w_plain.re + t, w_plain.im.clone());
            Ok(HPComplex::from_real(num) / den)
        },
        &wide,
    )?;

    // e^{iπp} w^{1−p} e^{−w} / (2πi)
    let pi_wide = Real::pi(&wide);
    let phase = HPComplex::from_polar(&Real::one(&wide), &(p * &pi_wide), &wide).forget_branch();
    let w_pow = w.powf(&(Real::one(&wide) - p), &wide);
    let decay = (-w).exp(&wide).forget_branch();
    let inv_two_pi = (&pi_wide + &pi_wide).recip();
    let value = (phase * w_pow * decay * integral)
        .div_i(&wide)
        .scale(&inv_two_pi, &wide);

    Ok(TerminantEval {
        p: p.clone(),
        w: w.clone(),
        value: trim_complex(value, ctx),
        route: TerminantRoute::Quadrature,
    })
}

// --- the implicit phase function c(φ) -------------------------------------------

/// The branch of ½c²(φ) = 1 + i(φ−π) − e^{i(φ−π)} that vanishes at φ = π
/// and expands there as c(φ) = (φ−π) + i(φ−π)²/6 − (φ−π)³/36 − i(φ−π)⁴/270 + ⋯.
///
/// Defined for −π < φ < 3π, which covers both arms of the erf model (the
/// reflected arm evaluates at −φ). The right-hand side never vanishes for
/// φ ≠ π, so the branch is pinned by continuation along the real φ-axis:
/// the quartic polynomial seeds a Newton iteration near φ = π, and farther
/// out the solution is walked toward φ in half-unit steps, re-polishing at
/// each rung. The returned value satisfies the implicit equation with
/// residual at most 10^(−digits+5)·max(1, |rhs|).
pub fn c_of_phi(phi: &Real, ctx: &PrecisionContext) -> Result<HPComplex> {
    // "Exactly the ray" is judged at the caller's resolution: a π rounded
    // to the caller's digits must map to an exact zero, not a residue of
    // the extra guard digits used below.
    if (phi - &Real::pi(ctx)).is_zero() {
        return Ok(HPComplex::zero(ctx));
    }
    let wide = ctx.widened(10);
    let u = phi - &Real::pi(&wide);
    if u.is_zero() {
        return Ok(HPComplex::zero(ctx));
    }
    let u_f = u.to_f64();
    if !u_f.is_finite() || u_f.abs() >= 2.0 * std::f64::consts::PI {
        return Err(AwError::InvalidParam(format!(
            "c_of_phi argument phi = {} lies outside (-pi, 3*pi)",
            phi.to_decimal_sig(6)
        )));
    }

    // Rungs from the seed region toward u, spaced ≤ 1/2 so each Newton
    // start stays well inside the basin of the continued branch.
    let mut rungs: Vec<Real> = Vec::new();
    let mut step = 0.5f64.copysign(u_f);
    while step.abs() + 0.25 < u_f.abs() {
        rungs.push(Real::from_f64(step, &wide));
        step += 0.5f64.copysign(u_f);
    }
    rungs.push(u.clone());

    let seed_u = rungs[0].to_f64();
    let mut c = quartic_seed(seed_u, &wide);
    for rung in &rungs {
        c = newton_polish(c, rung, &wide)?;
    }
    Ok(trim_complex(c, ctx))
}

/// c ≈ u + iu²/6 − u³/36 − iu⁴/270, accurate to ~10⁻⁵ at |u| = 1/2 —
/// comfortably inside the Newton basin.
fn quartic_seed(u: f64, ctx: &PrecisionContext) -> HPComplex {
    let u1 = Real::from_f64(u, ctx);
    let u2 = &u1 * &u1;
    let u3 = &u2 * &u1;
    let u4 = &u2 * &u2;
    HPComplex::new(
        &u1 - &u3.scale_ratio(1, 36, ctx),
        u2.scale_ratio(1, 6, ctx) - u4.scale_ratio(1, 270, ctx),
    )
}

/// 1 + iu − e^{iu}, stably: a power series when |u| < 1/2 (the direct form
/// loses every digit as u → 0), the direct form otherwise.
fn half_c_squared_rhs(u: &Real, ctx: &PrecisionContext) -> HPComplex {
    if u.to_f64().abs() < 0.5 {
        // −Σ_{k≥2} (iu)^k / k!
        let iu = HPComplex::new(Real::zero(ctx), u.clone());
        let mut term = (&iu * &iu).scale(&Real::from_ratio(1, 2, ctx), ctx); // (iu)²/2!
        let mut sum = term.clone();
        let eps = ctx.eps();
        let mut k = 3u64;
        loop {
            term = (&term * &iu).scale(&Real::from_u64(k, ctx).recip(), ctx);
            sum = sum + &term;
            if term.abs(ctx) < &eps * &sum.abs(ctx) {
                break;
            }
            k += 1;
        }
        -sum
    } else {
        let one = Real::one(ctx);
        HPComplex::new(&one - &u.cos(ctx), u - &u.sin(ctx))
    }
}

/// Newton for ½c² = rhs(u) from the supplied start: c ← c/2 + rhs/c.
fn newton_polish(start: HPComplex, u: &Real, ctx: &PrecisionContext) -> Result<HPComplex> {
    let rhs = half_c_squared_rhs(u, ctx);
    let tol = Real::pow10(-(ctx.digits() as i64) + 5, ctx);
    let floor = Real::one(ctx).max_val(&rhs.abs(ctx));
    let half = Real::from_ratio(1, 2, ctx);
    let mut c = start;
    for _ in 0..64 {
        let residual = (&c * &c).scale(&half, ctx) - &rhs;
        if residual.abs(ctx) <= &tol * &floor {
            return Ok(c);
        }
        c = c.scale(&half, ctx) + rhs.clone() / c;
    }
    Err(AwError::NonConvergence(format!(
        "implicit phase equation did not settle at u = {}",
        u.to_decimal_sig(6)
    )))
}

// --- erf model -------------------------------------------------------------------

/// The error-function main term of the uniform terminant asymptotics for
/// p ~ |w|:
///
/// * −π < φ < 3π:   ½ + ½ erf(c(φ)·√(|w|/2));
/// * −3π < φ ≤ −π:  e^{2πip}·(−½ + ½ erf(−c̄(−φ)·√(|w|/2))).
///
/// No remainder term is attached — the model's error is O(|w|^{−1/2})
/// uniformly in φ on those ranges — so this is the reference curve for
/// Stokes-smoothing scans, not a certified evaluation.
pub fn terminant_erf_model(p: &Real, w: &HPComplex, ctx: &PrecisionContext) -> Result<HPComplex> {
    check_order(p)?;
    check_argument(w)?;
    let wide = ctx.widened(10);

    let phi = w.arg_carried(&wide);
    let phi_f = phi.to_f64();
    let pi_f = std::f64::consts::PI;
    if phi_f <= -3.0 * pi_f || phi_f >= 3.0 * pi_f {
        return Err(AwError::Sector(format!(
            "erf model covers -3*pi < arg w < 3*pi, got arg w = {phi_f:.6}"
        )));
    }

    let half = Real::from_ratio(1, 2, &wide);
    let root = w.abs(&wide).scale_ratio(1, 2, &wide).sqrt(&wide);
    let half_c = HPComplex::from_real(half.clone());

    let value = if phi_f > -pi_f {
        let c = c_of_phi(&phi, &wide)?;
        &half_c + &erf(&c.scale(&root, &wide), &wide).scale(&half, &wide)
    } else {
        let c = c_of_phi(&-&phi, &wide)?;
        let arg = (-c.conj()).scale(&root, &wide);
        let inner = erf(&arg, &wide).scale(&half, &wide) - &half_c;
        let two_pi_p = (p + p) * &Real::pi(&wide);
        let rot = HPComplex::from_polar(&Real::one(&wide), &two_pi_p, &wide).forget_branch();
        rot * inner
    };
    Ok(trim_complex(value, ctx))
}
