//! Arbitrary-precision complex scalar with an optional carried branch.
//!
//! Most of the asymptotic formulas in this crate live on a Riemann surface:
//! powers like ν^(1/3) or w^(a−1) must follow the analytic continuation of
//! whatever path the argument took, not snap back to the principal sheet.
//! [`HPComplex`] therefore carries, besides `re` and `im`, an optional
//! *unreduced* argument. When present it always agrees with
//! `atan2(im, re)` modulo 2π, but it may lie far outside (−π, π], and
//! [`HPComplex::powf`]/[`HPComplex::powc`] use it as the logarithm's
//! imaginary part.
//!
//! Branch bookkeeping across arithmetic follows the path interpretation:
//! multiplication adds carried arguments, division subtracts them, negation
//! rotates by +π, conjugation flips the sign. Addition and subtraction have
//! no path meaning, so they drop the branch; equality compares values only.

use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{PrecisionContext, Real};

/// Complex number with value-carried precision and optional branch argument.
#[derive(Debug, Clone)]
pub struct HPComplex {
    pub re: Real,
    pub im: Real,
    branch: Option<Real>,
}

impl HPComplex {
    // --- constructors -----------------------------------------------------

    pub fn new(re: Real, im: Real) -> Self {
        HPComplex { re, im, branch: None }
    }

    pub fn zero(ctx: &PrecisionContext) -> Self {
        HPComplex::new(Real::zero(ctx), Real::zero(ctx))
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        HPComplex::new(Real::one(ctx), Real::zero(ctx))
    }

    /// The imaginary unit, carrying arg = π/2.
    pub fn i(ctx: &PrecisionContext) -> Self {
        let half_pi = Real::pi(ctx) / Real::from_i64(2, ctx);
        HPComplex {
            re: Real::zero(ctx),
            im: Real::one(ctx),
            branch: Some(half_pi),
        }
    }

    pub fn from_real(re: Real) -> Self {
        let im = Real(astro_float::BigFloat::new(re.prec()));
        HPComplex { re, im, branch: None }
    }

    /// r·e^{iθ} with the branch argument kept as given (θ may exceed π).
    pub fn from_polar(r: &Real, theta: &Real, ctx: &PrecisionContext) -> Self {
        HPComplex {
            re: r * theta.cos(ctx),
            im: r * theta.sin(ctx),
            branch: Some(theta.clone()),
        }
    }

    /// Attaches a caller-supplied branch argument. The caller asserts that
    /// `theta` equals the principal argument modulo 2π.
    pub fn with_branch(mut self, theta: Real) -> Self {
        self.branch = Some(theta);
        self
    }

    /// Drops any carried branch, leaving a plain value.
    pub fn forget_branch(mut self) -> Self {
        self.branch = None;
        self
    }

    /// Decomposes into (re, im), discarding branch bookkeeping.
    pub(crate) fn into_parts(self) -> (Real, Real) {
        (self.re, self.im)
    }

    // --- queries -----------------------------------------------------------

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// |z| = √(re² + im²).
    pub fn abs(&self, ctx: &PrecisionContext) -> Real {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        (&self.re * &self.re + &self.im * &self.im).sqrt(ctx)
    }

    /// Principal argument in (−π, π], ignoring any carried branch.
    pub fn arg_principal(&self, ctx: &PrecisionContext) -> Real {
        self.im.atan2(&self.re, ctx)
    }

    /// The argument used for powers: the carried branch when present,
    /// otherwise the principal value.
    pub fn arg_carried(&self, ctx: &PrecisionContext) -> Real {
        match &self.branch {
            Some(t) => t.clone(),
            None => self.arg_principal(ctx),
        }
    }

    /// The carried branch argument, if any.
    pub fn branch(&self) -> Option<&Real> {
        self.branch.as_ref()
    }

    pub fn conj(&self) -> Self {
        HPComplex {
            re: self.re.clone(),
            im: -&self.im,
            branch: self.branch.as_ref().map(|t| -t),
        }
    }

    // --- arithmetic --------------------------------------------------------

    fn add_c(&self, rhs: &HPComplex) -> HPComplex {
        HPComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    fn sub_c(&self, rhs: &HPComplex) -> HPComplex {
        HPComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    fn mul_c(&self, rhs: &HPComplex) -> HPComplex {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        let branch = match (&self.branch, &rhs.branch) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        HPComplex { re, im, branch }
    }

    fn div_c(&self, rhs: &HPComplex) -> HPComplex {
        let den = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let re = (&self.re * &rhs.re + &self.im * &rhs.im) / &den;
        let im = (&self.im * &rhs.re - &self.re * &rhs.im) / &den;
        let branch = match (&self.branch, &rhs.branch) {
            (Some(a), Some(b)) => Some(a - b),
            _ => None,
        };
        HPComplex { re, im, branch }
    }

    /// Scaling by a real keeps the path: positive scalars leave the branch
    /// alone, negative ones rotate it by +π, zero clears it.
    pub fn scale(&self, s: &Real, ctx: &PrecisionContext) -> Self {
        let branch = match (&self.branch, s.sign_num()) {
            (Some(t), 1) => Some(t.clone()),
            (Some(t), -1) => Some(t + Real::pi(ctx)),
            _ => None,
        };
        HPComplex {
            re: &self.re * s,
            im: &self.im * s,
            branch,
        }
    }

    /// Multiplication by i: rotation by +π/2.
    pub fn mul_i(&self, ctx: &PrecisionContext) -> Self {
        HPComplex {
            re: -&self.im,
            im: self.re.clone(),
            branch: self
                .branch
                .as_ref()
                .map(|t| t + Real::pi(ctx) / Real::from_i64(2, ctx)),
        }
    }

    /// Division by i: rotation by −π/2.
    pub fn div_i(&self, ctx: &PrecisionContext) -> Self {
        HPComplex {
            re: self.im.clone(),
            im: -&self.re,
            branch: self
                .branch
                .as_ref()
                .map(|t| t - Real::pi(ctx) / Real::from_i64(2, ctx)),
        }
    }

    /// 1/z, following the path backwards.
    pub fn recip(&self, _ctx: &PrecisionContext) -> Self {
        let den = &self.re * &self.re + &self.im * &self.im;
        HPComplex {
            re: &self.re / &den,
            im: -&self.im / &den,
            branch: self.branch.as_ref().map(|t| -t),
        }
    }

    // --- exponentials and powers --------------------------------------------

    /// e^z. The result's carried argument is exactly Im z, unreduced — the
    /// one case where the continuation argument is known in closed form.
    pub fn exp(&self, ctx: &PrecisionContext) -> Self {
        let r = self.re.exp(ctx);
        HPComplex {
            re: &r * self.im.cos(ctx),
            im: &r * self.im.sin(ctx),
            branch: Some(self.im.clone()),
        }
    }

    /// log z = ln|z| + i·arg, with the *carried* argument. The result is a
    /// plain value (its imaginary part already encodes the branch).
    pub fn ln_carried(&self, ctx: &PrecisionContext) -> Self {
        HPComplex::new(self.abs(ctx).ln(ctx), self.arg_carried(ctx))
    }

    /// z^s for real s, computed as exp(s·(ln|z| + i·arg)) with the carried
    /// argument — never the principal one, so continuation survives powers.
    pub fn powf(&self, s: &Real, ctx: &PrecisionContext) -> Self {
        let ln_abs = self.abs(ctx).ln(ctx);
        let theta = self.arg_carried(ctx);
        let r = (s * &ln_abs).exp(ctx);
        let phase = s * &theta;
        HPComplex {
            re: &r * phase.cos(ctx),
            im: &r * phase.sin(ctx),
            branch: Some(phase),
        }
    }

    /// z^s for complex s, same carried-branch logarithm.
    pub fn powc(&self, s: &HPComplex, ctx: &PrecisionContext) -> Self {
        self.ln_carried(ctx).mul_c(s).exp(ctx)
    }

    /// √z along the carried branch.
    pub fn sqrt(&self, ctx: &PrecisionContext) -> Self {
        self.powf(&Real::from_ratio(1, 2, ctx), ctx)
    }

    /// Decimal rendering `re ± im·i` at `sig` significant digits.
    pub fn to_decimal_sig(&self, sig: usize) -> String {
        let im_abs = self.im.abs().to_decimal_sig(sig);
        let sign = if self.im.is_negative() { '-' } else { '+' };
        format!("{} {} {}i", self.re.to_decimal_sig(sig), sign, im_abs)
    }
}

impl PartialEq for HPComplex {
    /// Value equality; carried branches are bookkeeping, not value.
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

macro_rules! impl_cbinop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&HPComplex> for &HPComplex {
            type Output = HPComplex;
            fn $method(self, rhs: &HPComplex) -> HPComplex {
                self.$inner(rhs)
            }
        }
        impl $trait<HPComplex> for &HPComplex {
            type Output = HPComplex;
            fn $method(self, rhs: HPComplex) -> HPComplex {
                self.$inner(&rhs)
            }
        }
        impl $trait<&HPComplex> for HPComplex {
            type Output = HPComplex;
            fn $method(self, rhs: &HPComplex) -> HPComplex {
                self.$inner(rhs)
            }
        }
        impl $trait<HPComplex> for HPComplex {
            type Output = HPComplex;
            fn $method(self, rhs: HPComplex) -> HPComplex {
                self.$inner(&rhs)
            }
        }
    };
}

impl_cbinop!(Add, add, add_c);
impl_cbinop!(Sub, sub, sub_c);
impl_cbinop!(Mul, mul, mul_c);
impl_cbinop!(Div, div, div_c);

impl Neg for &HPComplex {
    type Output = HPComplex;
    fn neg(self) -> HPComplex {
        HPComplex {
            re: -&self.re,
            im: -&self.im,
            // −z = z·e^{iπ}: continue the path counterclockwise.
            branch: self
                .branch
                .as_ref()
                .map(|t| t + Real::pi_bits(t.prec())),
        }
    }
}

impl Neg for HPComplex {
    type Output = HPComplex;
    fn neg(self) -> HPComplex {
        (&self).neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(50)
    }

    #[test]
    fn polar_round_trip_keeps_unreduced_argument() {
        let ctx = ctx();
        // θ = 5π/2 is equivalent to π/2 on the principal sheet…
        let theta = Real::pi(&ctx) * Real::from_ratio(5, 2, &ctx);
        let z = HPComplex::from_polar(&Real::from_i64(3, &ctx), &theta, &ctx);
        assert!((z.arg_carried(&ctx) - &theta).abs().to_f64() < 1e-45);
        // …and the principal argument still agrees modulo 2π.
        let principal = z.arg_principal(&ctx);
        let two_pi = Real::pi(&ctx) * Real::from_i64(2, &ctx);
        let diff = (theta - principal - two_pi).abs();
        assert!(diff.to_f64() < 1e-45);
    }

    #[test]
    fn carried_branch_changes_the_power() {
        let ctx = ctx();
        // z = e^{1.8πi} carried; the principal square root would use −0.2π,
        // the carried one must use 0.9π.
        let theta = Real::pi(&ctx) * Real::from_ratio(9, 5, &ctx);
        let z = HPComplex::from_polar(&Real::one(&ctx), &theta, &ctx);
        let s = z.sqrt(&ctx);
        let want = Real::pi(&ctx) * Real::from_ratio(9, 10, &ctx);
        assert!((s.arg_carried(&ctx) - &want).abs().to_f64() < 1e-45);
        assert!(s.im.is_positive()); // principal root would be in the lower half-plane
    }

    #[test]
    fn multiplication_adds_paths() {
        let ctx = ctx();
        let t1 = Real::pi(&ctx) * Real::from_ratio(9, 10, &ctx);
        let a = HPComplex::from_polar(&Real::one(&ctx), &t1, &ctx);
        let prod = &a * &a; // arg 1.8π, outside the principal range
        let carried = prod.arg_carried(&ctx);
        let want = Real::pi(&ctx) * Real::from_ratio(9, 5, &ctx);
        assert!((carried - want).abs().to_f64() < 1e-44);
    }

    #[test]
    fn exp_carries_its_own_imaginary_part() {
        let ctx = ctx();
        let z = HPComplex::new(Real::zero(&ctx), Real::pi(&ctx) * Real::from_i64(4, &ctx));
        let e = z.exp(&ctx);
        // e^{4πi} = 1, but the path knows it wound twice around.
        assert!((&e.re - Real::one(&ctx)).abs().to_f64() < 1e-45);
        let carried = e.arg_carried(&ctx);
        let want = Real::pi(&ctx) * Real::from_i64(4, &ctx);
        assert!((carried - want).abs().to_f64() < 1e-44);
    }

    #[test]
    fn division_and_i_rotations_are_consistent() {
        let ctx = ctx();
        let z = HPComplex::new(Real::from_i64(2, &ctx), Real::from_i64(-3, &ctx));
        let w = z.mul_i(&ctx).div_i(&ctx);
        assert!((&w.re - &z.re).abs().to_f64() < 1e-45);
        assert!((&w.im - &z.im).abs().to_f64() < 1e-45);
        let q = &z / &z;
        assert!((&q.re - Real::one(&ctx)).abs().to_f64() < 1e-45);
        assert!(q.im.abs().to_f64() < 1e-45);
    }
}
