//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros,
//! so the zero polynomial is the empty vector. All arithmetic is exact; the
//! only lossy operations are the numeric evaluation helpers at the bottom,
//! which round once into the caller's working precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::hpmath::{HPComplex, PrecisionContext, Real};

/// A polynomial in one variable with `BigRational` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    /// `coeffs[i]` multiplies `x^i`; the last entry is nonzero.
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![BigRational::one()],
        }
    }

    /// Convenience constructor from small integer coefficients, ascending.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// The monomial `c · x^degree`.
    pub fn monomial(degree: usize, c: BigRational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Polynomial::new(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Multiplies every coefficient by a rational scalar.
    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Integer power by repeated multiplication (exponents here stay small).
    pub fn pow(&self, e: usize) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * BigRational::from_integer(BigInt::from(i)));
        }
        Polynomial::new(out)
    }

    /// Antiderivative vanishing at the origin, `∫₀ˣ p(t) dt`.
    pub fn integral(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(BigRational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push(c / BigRational::from_integer(BigInt::from(i + 1)));
        }
        Polynomial::new(out)
    }

    /// Exact polynomial division: returns the quotient when the remainder is
    /// zero, `None` otherwise (or when dividing by zero).
    pub fn divide_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let nd = self.degree().expect("nonzero polynomial has a degree");
        if nd < dd {
            return None;
        }
        let lead = divisor.coeff(dd);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    let t = &q * d;
                    rem[k + j] -= t;
                }
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Polynomial::new(quot))
        } else {
            None
        }
    }

    /// Positive rational content: gcd of coefficient numerators over lcm of
    /// denominators. The content of the zero polynomial is 1 by convention.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_integer::gcd(num_gcd, c.numer().abs());
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Numeric evaluation at a real point; each coefficient rounds once into
    /// the working precision before the Horner sweep.
    pub fn eval_real(&self, x: &Real, ctx: &PrecisionContext) -> Real {
        let mut acc = Real::zero(ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Real::from_bigrational(c, ctx);
        }
        acc
    }

    /// Numeric evaluation at a complex point.
    pub fn eval_complex(&self, x: &HPComplex, ctx: &PrecisionContext) -> HPComplex {
        let mut acc = HPComplex::zero(ctx);
        for c in self.coeffs.iter().rev() {
            let term = HPComplex::from_real(Real::from_bigrational(c, ctx));
            acc = acc * x + term;
        }
        acc
    }

    /// Renders the polynomial with the given variable name, highest degree
    /// first, e.g. `-5/24*x^3 + 1/8*x`.
    pub fn to_term_string(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let body = match i {
                0 => format!("{c}"),
                1 if c.is_one() => var.to_string(),
                1 => format!("{c}*{var}"),
                _ if c.is_one() => format!("{var}^{i}"),
                _ => format!("{c}*{var}^{i}"),
            };
            parts.push(body);
        }
        let mut out = String::new();
        for (k, part) in parts.iter().enumerate() {
            if k == 0 {
                out.push_str(part);
            } else if let Some(rest) = part.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(part);
            }
        }
        out
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_term_string("x"))
    }
}
