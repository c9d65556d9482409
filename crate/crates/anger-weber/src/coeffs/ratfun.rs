//! Rational functions of λ with denominator `c · (1+λ)^m`.
//!
//! Every coefficient a_n(λ) produced in this crate has this shape, so the
//! denominator is stored structurally (positive rational constant plus a
//! power of `1+λ`) instead of as a free polynomial. Canonical form keeps the
//! numerator integer-primitive and divides out every `(1+λ)` factor it
//! shares with the denominator, which makes structural equality the same as
//! mathematical equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Polynomial;
use crate::hpmath::{PrecisionContext, Real};

/// `num / (den_const · (1+λ)^den_pow)` with `den_const > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den_const: BigRational,
    den_pow: usize,
}

impl RationalFunction {
    /// Builds and canonicalizes a rational function from its parts.
    pub fn new(num: Polynomial, den_const: BigRational, den_pow: usize) -> Self {
        assert!(!den_const.is_zero(), "denominator constant must be nonzero");
        let mut rf = RationalFunction {
            num,
            den_const,
            den_pow,
        };
        rf.reduce();
        rf
    }

    /// The numerator polynomial in λ (canonical: integer, primitive).
    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    /// The denominator constant `c` in `c · (1+λ)^m`.
    pub fn den_const(&self) -> &BigRational {
        &self.den_const
    }

    /// The exponent `m` in `c · (1+λ)^m`.
    pub fn den_pow(&self) -> usize {
        self.den_pow
    }

    /// The denominator expanded to an explicit polynomial.
    pub fn denominator(&self) -> Polynomial {
        Polynomial::from_integers(&[1, 1])
            .pow(self.den_pow)
            .scale(&self.den_const)
    }

    /// Canonical form: positive `den_const`, numerator with coprime integer
    /// coefficients, and no `(1+λ)` factor shared with the denominator.
    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den_const = BigRational::one();
            self.den_pow = 0;
            return;
        }
        let one_plus = Polynomial::from_integers(&[1, 1]);
        while self.den_pow > 0 {
            match self.num.divide_exact(&one_plus) {
                Some(q) => {
                    self.num = q;
                    self.den_pow -= 1;
                }
                None => break,
            }
        }
        // num / (c (1+λ)^m) = (num/k) / ((c/k) (1+λ)^m) for the content k.
        let content = self.num.content();
        self.num = self.num.scale(&content.recip());
        self.den_const = &self.den_const / content;
        if self.den_const.is_negative() {
            self.den_const = -self.den_const.clone();
            self.num = self.num.neg();
        }
    }

    /// Sum over the common denominator `c₁·c₂·(1+λ)^{max(m₁,m₂)}`.
    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let one_plus = Polynomial::from_integers(&[1, 1]);
        let m = self.den_pow.max(other.den_pow);
        let a = self
            .num
            .mul(&one_plus.pow(m - self.den_pow))
            .scale(&other.den_const);
        let b = other
            .num
            .mul(&one_plus.pow(m - other.den_pow))
            .scale(&self.den_const);
        RationalFunction::new(a.add(&b), &self.den_const * &other.den_const, m)
    }

    /// Multiplies the numerator by a polynomial.
    pub fn mul_poly(&self, p: &Polynomial) -> RationalFunction {
        RationalFunction::new(self.num.mul(p), self.den_const.clone(), self.den_pow)
    }

    /// Multiplies by a rational scalar.
    pub fn scale_ratio(&self, c: &BigRational) -> RationalFunction {
        RationalFunction::new(self.num.scale(c), self.den_const.clone(), self.den_pow)
    }

    /// Divides the numerator by a polynomial factor it contains exactly;
    /// `None` when the division leaves a remainder.
    pub fn div_num_exact(&self, divisor: &Polynomial) -> Option<RationalFunction> {
        let q = self.num.divide_exact(divisor)?;
        Some(RationalFunction::new(
            q,
            self.den_const.clone(),
            self.den_pow,
        ))
    }

    /// Appends `k` further `(1+λ)` factors to the denominator.
    pub fn div_one_plus(&self, k: usize) -> RationalFunction {
        RationalFunction::new(self.num.clone(), self.den_const.clone(), self.den_pow + k)
    }

    /// Derivative with respect to λ:
    /// `(num′·(1+λ) − m·num) / (c · (1+λ)^{m+1})`.
    pub fn derivative(&self) -> RationalFunction {
        let one_plus = Polynomial::from_integers(&[1, 1]);
        let m = BigRational::from_integer(BigInt::from(self.den_pow as i64));
        let num = self
            .num
            .derivative()
            .mul(&one_plus)
            .sub(&self.num.scale(&m));
        RationalFunction::new(num, self.den_const.clone(), self.den_pow + 1)
    }

    /// Exact evaluation; `None` at the pole λ = −1.
    pub fn eval(&self, lambda: &BigRational) -> Option<BigRational> {
        let base = lambda + BigRational::one();
        if base.is_zero() && self.den_pow > 0 {
            return None;
        }
        let mut den = self.den_const.clone();
        for _ in 0..self.den_pow {
            den *= &base;
        }
        Some(self.num.eval(lambda) / den)
    }

    /// Numeric evaluation at a real point away from λ = −1.
    pub fn eval_real(&self, lambda: &Real, ctx: &PrecisionContext) -> Real {
        let base = Real::one(ctx) + lambda;
        let den = Real::from_bigrational(&self.den_const, ctx) * base.powi(self.den_pow as i64, ctx);
        self.num.eval_real(lambda, ctx) / den
    }

    /// Renders as `p(λ) / (c*(1+λ)^m)` with exact coefficients.
    pub fn to_display_string(&self) -> String {
        let num = self.num.to_term_string("l");
        if self.den_pow == 0 && self.den_const.is_one() {
            return num;
        }
        let den = if self.den_pow == 0 {
            format!("{}", self.den_const)
        } else if self.den_const.is_one() {
            format!("(1+l)^{}", self.den_pow)
        } else {
            format!("{}*(1+l)^{}", self.den_const, self.den_pow)
        };
        format!("({num}) / ({den})")
    }
}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_display_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn reduction_cancels_shared_factors() {
        // (1+λ)² · λ / (6 (1+λ)⁵) → λ / (6 (1+λ)³)
        let num = Polynomial::from_integers(&[1, 1])
            .pow(2)
            .mul(&Polynomial::from_integers(&[0, 1]));
        let rf = RationalFunction::new(num, rat(6, 1), 5);
        assert_eq!(rf.numerator(), &Polynomial::from_integers(&[0, 1]));
        assert_eq!(rf.den_const(), &rat(6, 1));
        assert_eq!(rf.den_pow(), 3);
    }

    #[test]
    fn canonical_form_makes_equality_structural() {
        // 2λ/(4(1+λ)) and λ/(2(1+λ)) are the same function.
        let a = RationalFunction::new(Polynomial::from_integers(&[0, 2]), rat(4, 1), 1);
        let b = RationalFunction::new(Polynomial::from_integers(&[0, 1]), rat(2, 1), 1);
        assert_eq!(a, b);
    }

    #[test]
    fn derivative_matches_quotient_rule_by_value() {
        // f = λ²/(3(1+λ)²); f′ at λ = 1/2 computed symbolically vs. by hand:
        // f′ = (2λ(1+λ) − 2λ²) / (3(1+λ)³) = 2λ / (3(1+λ)³).
        let f = RationalFunction::new(Polynomial::from_integers(&[0, 0, 1]), rat(3, 1), 2);
        let df = f.derivative();
        let want = RationalFunction::new(Polynomial::from_integers(&[0, 2]), rat(3, 1), 3);
        assert_eq!(df, want);
        assert_eq!(
            df.eval(&rat(1, 2)).expect("no pole at 1/2"),
            rat(1, 1) / rat(27, 8) / rat(3, 1)
        );
    }

    #[test]
    fn eval_rejects_the_pole() {
        let f = RationalFunction::new(Polynomial::one(), rat(1, 1), 1);
        assert!(f.eval(&rat(-1, 1)).is_none());
        assert!(f.eval(&rat(0, 1)).is_some());
    }

    #[test]
    fn numeric_and_exact_evaluation_agree() {
        let ctx = PrecisionContext::new(40);
        let f = RationalFunction::new(Polynomial::from_integers(&[-1, 9]), rat(24, 1), 7);
        let exact = f.eval(&rat(5, 3)).expect("away from pole");
        let numeric = f.eval_real(&(Real::from_i64(5, &ctx) / Real::from_i64(3, &ctx)), &ctx);
        let want = Real::from_bigrational(&exact, &ctx);
        assert!(((numeric - &want) / want).abs().to_f64() < 1e-35);
    }
}
