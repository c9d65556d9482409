//! Double-exponential quadrature over (0, ∞).
//!
//! The half-line is split at t = 1 and both pieces are pulled back to the
//! unit interval:
//!
//! * (0, 1) directly — an algebraic singularity t^α (α > −1) at the origin
//!   is exactly what tanh–sinh absorbs;
//! * (1, ∞) via t = 1 − ln v, so ∫₁^∞ f dt = ∫₀¹ f(1 − ln v)/v dv, which
//!   turns exponential decay e^{−ct} into an integrable endpoint factor
//!   v^{c−1} — again tanh–sinh territory.
//!
//! On (0, 1) the substitution is the logistic form of tanh–sinh,
//! t(u) = 1/(1 + e^{−π sinh u}), whose small-side node q = t(−|u|) is
//! computed to full *relative* precision — no cancellation near the
//! endpoints. Levels double the node density (h = 2^{−k}), reusing all
//! previous evaluations; the level-to-level difference is the error
//! estimate, and two successive doublings that fail to shrink it abort the
//! integral as non-convergent. Node tables are cached per (level, bits)
//! and shared by every integral a thread evaluates.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::error::AwError;
use crate::Result;

use super::{trim_complex, HPComplex, PrecisionContext, Real};

/// Coarsest level: h = 2^{−FIRST_LEVEL} already resolves smooth integrands
/// to a few digits, giving the difference estimator something real to chew
/// on from the first doubling.
const FIRST_LEVEL: u32 = 2;

/// Hard ceiling; h = 2^{−MAX_LEVEL} means tens of thousands of nodes, and
/// an integrand that is still moving at that density violates the
/// analyticity the method assumes.
const MAX_LEVEL: u32 = 11;

/// Safety factor in the truncation window: the window is sized so that even
/// an integrand growing like t^{−11/12} at 0 (or decaying as slowly as
/// e^{−t/12} at ∞, pulled back) is crushed by the double-exponential weight
/// at the last node.
const WINDOW_MARGIN: f64 = 12.0;

/// One tanh–sinh abscissa on (0, 1), stored small-side-first.
#[derive(Clone)]
struct Node {
    /// q = t(−|u|) ∈ (0, 1/2], full relative precision.
    q: Real,
    /// Weight π cosh(u) · q(1−q), again built from the stable small side.
    w: Real,
}

type NodeTable = Rc<Vec<Node>>;

thread_local! {
    // (level, bits, initial-sweep?) → nodes. The initial sweep at
    // FIRST_LEVEL holds every multiple of h including u = 0; refinement
    // tables hold odd multiples only.
    static NODES: RefCell<HashMap<(u32, usize, bool), NodeTable>> = RefCell::new(HashMap::new());
}

/// ∫₀^∞ f(t) dt for f analytic on (0, ∞) with at worst an algebraic
/// singularity at 0 and exponential decay at ∞.
///
/// The integrand is called as `f(t, ctx)` with a context a notch wider than
/// the caller's; it may fail, and failures propagate. The result carries a
/// relative error at most `ctx.quad_target()` per piece, estimated by
/// level-doubling differences.
pub fn quad_semiinfinite<F>(mut f: F, ctx: &PrecisionContext) -> Result<HPComplex>
where
    F: FnMut(&Real, &PrecisionContext) -> Result<HPComplex>,
{
    let w = ctx.widened(10);
    let tol = ctx.quad_target() / 4.0;

    // (0, 1): evaluate f at the node directly; near 0 the node is the
    // stable small side q itself.
    let near = tanh_sinh_unit(&mut |v: &Real, wc: &PrecisionContext| f(v, wc), &w, tol)?;

    // (1, ∞): t = 1 − ln v, dt = −dv/v.
    let far = tanh_sinh_unit(
        &mut |v: &Real, wc: &PrecisionContext| {
            let t = Real::one(wc) - v.ln(wc);
            Ok(f(&t, wc)?.scale(&v.recip(), wc))
        },
        &w,
        tol,
    )?;

    Ok(trim_complex(near + far, ctx))
}

/// Tanh–sinh on (0, 1) with level doubling.
fn tanh_sinh_unit<G>(g: &mut G, ctx: &PrecisionContext, tol: f64) -> Result<HPComplex>
where
    G: FnMut(&Real, &PrecisionContext) -> Result<HPComplex>,
{
    let mut h = Real::from_ratio(1, 1 << FIRST_LEVEL, ctx);

    let first = node_table(FIRST_LEVEL, true, ctx);
    let mut acc = sweep(g, &first, ctx)?;
    let mut estimate = acc.scale(&h, ctx);

    let mut prev_diff = f64::INFINITY;
    let mut prev_shrank = true;
    for level in (FIRST_LEVEL + 1)..=MAX_LEVEL {
        let table = node_table(level, false, ctx);
        h = h.clone() / Real::from_i64(2, ctx);
        acc = acc + sweep(g, &table, ctx)?;
        let refined = acc.scale(&h, ctx);

        let scale = refined.abs(ctx).to_f64().abs();
        let diff = (&refined - &estimate).abs(ctx).to_f64();
        estimate = refined;
        if scale == 0.0 && diff == 0.0 {
            return Ok(estimate); // identically zero integrand
        }
        let rel = if scale > 0.0 { diff / scale } else { diff };
        if rel <= tol {
            return Ok(estimate);
        }
        let shrank = diff < prev_diff;
        if !shrank && !prev_shrank {
            return Err(AwError::NonConvergence(format!(
                "quadrature stalled at level {level}: successive refinements {prev_diff:.3e} → {diff:.3e} stopped shrinking above target {tol:.3e}"
            )));
        }
        prev_shrank = shrank;
        prev_diff = diff;
    }
    Err(AwError::NonConvergence(format!(
        "quadrature exhausted level {MAX_LEVEL} above target {tol:.3e}"
    )))
}

/// Evaluates one node sweep: Σ w·(g(q) + g(1−q)), with u = 0 counted once.
fn sweep<G>(g: &mut G, table: &[Node], ctx: &PrecisionContext) -> Result<HPComplex>
where
    G: FnMut(&Real, &PrecisionContext) -> Result<HPComplex>,
{
    let mut acc = HPComplex::zero(ctx);
    let half = Real::from_ratio(1, 2, ctx);
    for node in table {
        let lo = g(&node.q, ctx)?;
        let contrib = if node.q == half {
            lo // u = 0: q = 1 − q = 1/2, a single abscissa
        } else {
            let hi_t = Real::one(ctx) - &node.q;
            lo + g(&hi_t, ctx)?
        };
        acc = acc + contrib.scale(&node.w, ctx);
    }
    Ok(acc)
}

/// Node table for a level, cached per (level, bits, sweep-kind).
fn node_table(level: u32, initial: bool, ctx: &PrecisionContext) -> NodeTable {
    let key = (level, ctx.bits(), initial);
    if let Some(t) = NODES.with(|n| n.borrow().get(&key).cloned()) {
        return t;
    }
    let table = Rc::new(build_nodes(level, initial, ctx));
    NODES.with(|n| n.borrow_mut().insert(key, Rc::clone(&table)));
    table
}

/// Computes the abscissas u = j·2^{−level} inside the truncation window:
/// every j ≥ 0 for the initial sweep, odd j only for refinements.
fn build_nodes(level: u32, initial: bool, ctx: &PrecisionContext) -> Vec<Node> {
    // Window: π sinh(U) ≈ WINDOW_MARGIN · (digits · ln 10) keeps the weight
    // far below anything an admissible integrand can claw back.
    let target = WINDOW_MARGIN * (ctx.digits() as f64 + 10.0) * std::f64::consts::LN_10
        / std::f64::consts::PI;
    let u_max = target.asinh();
    let h = 2f64.powi(-(level as i32));
    let j_max = (u_max / h).ceil() as u64;

    let pi = Real::pi(ctx);
    let hh = Real::from_ratio(1, 1i64 << level, ctx);
    let mut nodes = Vec::new();
    let mut j = if initial { 0 } else { 1 };
    let step = if initial { 1 } else { 2 };
    while j <= j_max {
        let u = Real::from_u64(j, ctx) * &hh;
        // q = 1/(1 + e^{π sinh u}) — the small side, fully relative.
        let s = &pi * u.sinh(ctx);
        let es = s.exp(ctx);
        let q = (Real::one(ctx) + &es).recip();
        let one_minus_q = &es * &q; // e^s/(1+e^s) = 1 − q, no subtraction
        let w = &pi * u.cosh(ctx) * &q * &one_minus_q;
        nodes.push(Node { q, w });
        j += step;
    }
    nodes
}
