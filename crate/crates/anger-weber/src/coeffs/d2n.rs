//! The coefficient family d_{2n} for the transition-point expansion.
//!
//! d_{2n} is the t^{2n} Taylor coefficient of `(t³/(sinh t − t))^{(2n+1)/3}`
//! with positive cube roots. Writing `s = t²` and
//! `g(s) = (sinh t − t)/(t³/6) = Σ 6 s^k/(2k+3)!` (unit constant term), the
//! power factors as `6^{(2n+1)/3} · g^{−(2n+1)/3}`, so each d_{2n} is an
//! exact rational multiple of a cube-root power of six. The rational part
//! comes from the Miller recurrence on `g`; the irrational part stays
//! symbolic until a caller asks for a rounded value.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;


use super::factorial;
use super::power_series::PowerSeries;
use crate::hpmath::{PrecisionContext, Real};

static D2N_CACHE: Mutex<Option<HashMap<usize, D2Exact>>> = Mutex::new(None);

/// Exact value `ratio · 6^{third_exponent/3}` with `third_exponent ∈ {0,1,2}`
/// (whole powers of six are folded into the rational part).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D2Exact {
    pub ratio: BigRational,
    pub third_exponent: u32,
}

impl D2Exact {
    /// Rounds into the working precision.
    pub fn to_real(&self, ctx: &PrecisionContext) -> Real {
        let r = Real::from_bigrational(&self.ratio, ctx);
        if self.third_exponent == 0 {
            return r;
        }
        let six = Real::from_i64(6, ctx);
        let e = Real::from_i64(i64::from(self.third_exponent), ctx) / Real::from_i64(3, ctx);
        r * six.pow(&e, ctx)
    }
}

impl std::fmt::Display for D2Exact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.third_exponent == 0 {
            write!(f, "{}", self.ratio)
        } else {
            write!(f, "{} * 6^({}/3)", self.ratio, self.third_exponent)
        }
    }
}

/// d_{2n} in exact form.
pub fn d2n_exact(n: usize) -> D2Exact {
    {
        let cache = D2N_CACHE.lock().expect("coefficient cache poisoned");
        if let Some(hit) = cache.as_ref().and_then(|m| m.get(&n)) {
            return hit.clone();
        }
    }
    // g(s) = Σ 6 s^k/(2k+3)! carried to 2n+4 terms so the powering never
    // consumes its guard order.
    let order = 2 * n + 4;
    let six = BigRational::from_integer(BigInt::from(6));
    let g = PowerSeries::new(
        (0..=order)
            .map(|k| &six / BigRational::from_integer(factorial(2 * k + 3)))
            .collect(),
    );
    let exponent = BigRational::new(BigInt::from(-(2 * n as i64) - 1), BigInt::from(3));
    let powered = g.pow_ratio(&exponent);
    let mut ratio = powered.coeff(n).clone();
    let mut third = (2 * n as u32) + 1;
    while third >= 3 {
        ratio *= &six;
        third -= 3;
    }
    let out = D2Exact {
        ratio,
        third_exponent: third,
    };
    D2N_CACHE
        .lock()
        .expect("coefficient cache poisoned")
        .get_or_insert_with(HashMap::new)
        .insert(n, out.clone());
    out
}

/// d_{2n} rounded into the working precision.
pub fn d2n(n: usize, ctx: &PrecisionContext) -> Real {
    d2n_exact(n).to_real(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hpmath::gamma_real;
    use num_traits::Signed;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn leading_coefficient_is_the_cube_root_of_six() {
        let d0 = d2n_exact(0);
        assert_eq!(d0.ratio, rat(1, 1));
        assert_eq!(d0.third_exponent, 1);
    }

    #[test]
    fn second_coefficient_collapses_to_a_rational() {
        // [s¹] g^{−1} = −1/20, times 6^{3/3} = 6, giving −3/10.
        let d2 = d2n_exact(1);
        assert_eq!(d2.ratio, rat(-3, 10));
        assert_eq!(d2.third_exponent, 0);
    }

    #[test]
    fn exact_ratios_match_the_newton_cube_root_oracle() {
        // python3 tools/reference_values.py coeffs
        // (exact Fraction arithmetic: p = g^{2n+1} by repeated products, then
        // the series cube root of 1/p by Newton iteration — no shared code
        // with the Miller recurrence used here.)
        let want = [
            (rat(1, 1), 1),
            (rat(-3, 10), 0),
            (rat(3, 140), 2),
            (rat(-1, 100), 1),
            (rat(10449, 2156000), 0),
            (rat(-3639, 9100000), 2),
            (rat(151439, 754600000), 1),
            (rat(-24222483, 238238000000i64), 0),
            (rat(49627613499i64, 5740694960000000i64), 2),
        ];
        for (n, (ratio, third)) in want.iter().enumerate() {
            let got = d2n_exact(n);
            assert_eq!(got.third_exponent, *third, "n = {n}");
            assert_eq!(got.ratio, *ratio, "n = {n}");
        }
    }

    #[test]
    fn rounded_value_carries_the_cube_root() {
        let ctx = PrecisionContext::new(50);
        let d0 = d2n(0, &ctx);
        // cbrt(6) = 1.8171205928321396588912117563272605024282…
        let want = Real::parse("1.8171205928321396588912117563272605024282", &ctx);
        assert!(((d0 - &want) / want).abs().to_f64() < 1e-38);
    }

    #[test]
    fn transition_value_identity_holds() {
        // (1/(3π)) d₀ Γ(1/3) = 2^{4/3} / (3^{7/6} Γ(2/3)): the closed form of
        // the leading transition-point term.
        let ctx = PrecisionContext::new(50);
        let pi = Real::pi(&ctx);
        let third = Real::from_ratio(1, 3, &ctx);
        let lhs = d2n(0, &ctx) * gamma_real(&third, &ctx).expect("Γ(1/3) is finite")
            / (Real::from_i64(3, &ctx) * pi);
        let two_43 = Real::from_i64(2, &ctx).pow(&Real::from_ratio(4, 3, &ctx), &ctx);
        let three_76 = Real::from_i64(3, &ctx).pow(&Real::from_ratio(7, 6, &ctx), &ctx);
        let g23 = gamma_real(&Real::from_ratio(2, 3, &ctx), &ctx).expect("Γ(2/3) is finite");
        let rhs = two_43 / (three_76 * g23);
        assert!(((lhs - &rhs) / rhs).abs().to_f64() < 1e-45);
    }

    #[test]
    fn signs_alternate() {
        for n in 0..=10 {
            let d = d2n_exact(n);
            assert_eq!(d.ratio.is_negative(), n % 2 == 1, "n = {n}");
        }
    }
}
