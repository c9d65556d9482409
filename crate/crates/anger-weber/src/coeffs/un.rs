//! The Bessel-type polynomial family U_n(x) and the coefficients built on it.
//!
//! U_n is generated by
//! `U_n = ½ x²(1−x²) U′_{n−1} + (1/8) ∫₀ˣ (1−5t²) U_{n−1}(t) dt`, `U₀ = 1`,
//! has degree exactly 3n, and carries only degrees of the same parity as n.
//! Two evaluations matter downstream: at `x = i·cot β` (oscillatory side,
//! where the parity makes the value purely real or purely imaginary) and at
//! `x = coth α` (monotonic side, where it feeds the b_n coefficients).

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::factorial;
use super::poly::Polynomial;
use crate::hpmath::{HPComplex, PrecisionContext, Real};

static UN_CACHE: Mutex<Vec<Polynomial>> = Mutex::new(Vec::new());

/// U_n(x), exactly, memoized.
pub fn un_polynomial(n: usize) -> Polynomial {
    let mut cache = UN_CACHE.lock().expect("coefficient cache poisoned");
    if cache.is_empty() {
        cache.push(Polynomial::one());
    }
    while cache.len() <= n {
        let prev = cache.last().expect("cache holds at least U₀");
        // ½ x²(1−x²) U′
        let half_front = Polynomial::new(vec![
            BigRational::zero(),
            BigRational::zero(),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::zero(),
            BigRational::new(BigInt::from(-1), BigInt::from(2)),
        ]);
        let lead = half_front.mul(&prev.derivative());
        // (1/8) ∫₀ˣ (1−5t²) U
        let weight = Polynomial::from_integers(&[1, 0, -5]);
        let tail = weight
            .mul(prev)
            .integral()
            .scale(&BigRational::new(BigInt::from(1), BigInt::from(8)));
        cache.push(lead.add(&tail));
    }
    cache[n].clone()
}

/// U_m(i·cot β) for 0 < β < π/2.
///
/// Because U_m carries only parity-m degrees and the argument is purely
/// imaginary, the result is exactly real for even m and exactly imaginary
/// for odd m — the Horner sweep never mixes the components.
pub fn u_at_icotbeta(m: usize, beta: &Real, ctx: &PrecisionContext) -> HPComplex {
    assert!(
        beta.is_positive() && beta < &(Real::pi(ctx) / Real::from_i64(2, ctx)),
        "β must lie in (0, π/2)"
    );
    let cot = beta.tan(ctx).recip();
    let x = HPComplex::new(Real::zero(ctx), cot);
    un_polynomial(m).eval_complex(&x, ctx)
}

/// b_n(sech α) = (−1)ⁿ 2^{2n} n!/((2n)! tanh^{1/2} α) · U_n(coth α), α > 0.
pub fn bn_coeff(n: usize, alpha: &Real, ctx: &PrecisionContext) -> Real {
    assert!(alpha.is_positive(), "α must be positive");
    let th = alpha.tanh(ctx);
    let u = un_polynomial(n).eval_real(&th.recip(), ctx);
    let mut front = BigRational::new(BigInt::from(2).pow(2 * n as u32), factorial(2 * n))
        * BigRational::from_integer(factorial(n));
    if n % 2 == 1 {
        front = -front;
    }
    Real::from_bigrational(&front, ctx) * u / th.sqrt(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn first_two_polynomials_match_closed_forms() {
        assert_eq!(un_polynomial(0), Polynomial::one());
        // U₁ = (3x − 5x³)/24
        let u1 = Polynomial::new(vec![rat(0, 1), rat(3, 24), rat(0, 1), rat(-5, 24)]);
        assert_eq!(un_polynomial(1), u1);
    }

    #[test]
    fn degree_grows_by_three_with_parity_floor() {
        for n in 0..=10 {
            let u = un_polynomial(n);
            assert_eq!(u.degree(), Some(3 * n), "degree of U_{n}");
            let low = u
                .coeffs()
                .iter()
                .position(|c| !c.is_zero())
                .expect("U_n is nonzero");
            assert_eq!(low, n, "lowest degree of U_{n}");
            for (i, c) in u.coeffs().iter().enumerate() {
                if i % 2 != n % 2 {
                    assert!(c.is_zero(), "U_{n} has no parity-breaking term x^{i}");
                }
            }
        }
    }

    #[test]
    fn second_polynomial_reproduces_the_classical_bracket() {
        // U₂(i c) = −c²(385c⁴ + 462c² + 81)/1152 for any c, checked exactly
        // at rational points by splitting even powers of i by hand.
        let u2 = un_polynomial(2);
        for c in [rat(3, 7), rat(11, 4), rat(1, 1)] {
            let mut value = BigRational::zero();
            for (i, coeff) in u2.coeffs().iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                assert!(i % 2 == 0, "U₂ is even");
                // (ic)^{2k} = (−1)^k c^{2k}
                let mut term = coeff.clone();
                for _ in 0..i {
                    term *= &c;
                }
                if (i / 2) % 2 == 1 {
                    term = -term;
                }
                value += term;
            }
            let c2 = &c * &c;
            let bracket = (rat(385, 1) * &c2 * &c2 + rat(462, 1) * &c2 + rat(81, 1))
                * &c2
                / rat(-1152, 1);
            assert_eq!(value, bracket, "c = {c}");
        }
    }

    #[test]
    fn imaginary_argument_respects_parity() {
        let ctx = PrecisionContext::new(50);
        let beta = Real::pi(&ctx) / Real::from_i64(3, &ctx);
        for m in 0..=7 {
            let v = u_at_icotbeta(m, &beta, &ctx);
            if m % 2 == 0 {
                assert!(v.im.is_zero(), "even m = {m} is real");
            } else {
                assert!(v.re.is_zero(), "odd m = {m} is imaginary");
            }
        }
    }

    #[test]
    fn quarter_angle_value_of_u1_is_one_third_i() {
        // U₁(i cot(π/4)) = (3i − 5i³)/24 = i/3.
        let ctx = PrecisionContext::new(50);
        let beta = Real::pi(&ctx) / Real::from_i64(4, &ctx);
        let v = u_at_icotbeta(1, &beta, &ctx);
        let third = Real::from_ratio(1, 3, &ctx);
        assert!(v.re.is_zero());
        assert!((v.im - third).abs().to_f64() < 1e-45);
    }

    #[test]
    fn bn_matches_the_closed_forms() {
        let ctx = PrecisionContext::new(50);
        let alpha = Real::from_ratio(4, 5, &ctx);
        let sech2 = {
            let c = alpha.cosh(&ctx);
            (c.clone() * c).recip()
        };
        let one = Real::one(&ctx);
        let base = one.clone() - &sech2;
        // b₀ = (1 − sech²α)^{−1/4}
        let b0_want = base.pow(&Real::from_ratio(-1, 4, &ctx), &ctx);
        let b0 = bn_coeff(0, &alpha, &ctx);
        assert!(((b0 - &b0_want) / &b0_want).abs().to_f64() < 1e-45);
        // b₁ = (2 + 3sech²α)/(12(1 − sech²α)^{7/4})
        let b1_want = (Real::from_i64(2, &ctx) + Real::from_i64(3, &ctx) * &sech2)
            / (Real::from_i64(12, &ctx) * base.pow(&Real::from_ratio(7, 4, &ctx), &ctx));
        let b1 = bn_coeff(1, &alpha, &ctx);
        assert!(((b1 - &b1_want) / &b1_want).abs().to_f64() < 1e-44);
        // b₂ = (4 + 300sech²α + 81sech⁴α)/(864(1 − sech²α)^{13/4}).
        // The constant term is 4: substituting coth²α = 1/(1 − sech²α) into
        // (81c² − 462c⁴ + 385c⁶)/1152 gives 81 − 462 + 385 = 4 for the
        // sech-free part, and a numerical fit of the ν⁻² coefficient of the
        // defining integral confirms it to seven digits.
        let b2_want = (Real::from_i64(4, &ctx)
            + Real::from_i64(300, &ctx) * &sech2
            + Real::from_i64(81, &ctx) * &sech2 * &sech2)
            / (Real::from_i64(864, &ctx) * base.pow(&Real::from_ratio(13, 4, &ctx), &ctx));
        let b2 = bn_coeff(2, &alpha, &ctx);
        assert!(((b2 - &b2_want) / &b2_want).abs().to_f64() < 1e-44);
    }
}
