//! The rational coefficient family a_n(λ) by four independent routes.
//!
//! The primary generator is a second-order differential recurrence; the same
//! functions also come out of an explicit double sum over generalized
//! Bernoulli values, out of a kernel-polynomial construction that evaluates a
//! Laplace integral term by term, and out of direct Taylor extraction from
//! the defining power. The routes share no intermediate code, which is the
//! point: agreement between them is the correctness argument for all four.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::factorial;
use super::bernoulli::gen_bernoulli;
use super::poly::Polynomial;
use super::power_series::PowerSeries;
use super::ratfun::RationalFunction;

static RECURRENCE_CACHE: Mutex<Vec<RationalFunction>> = Mutex::new(Vec::new());
static MEIJER_CACHE: Mutex<Option<HashMap<usize, RationalFunction>>> = Mutex::new(None);

/// a_n(λ) by the differential recurrence
/// `a_n = [λ/(1−λ²)] · (λ a″_{n−1} + a′_{n−1}) / (2n(2n−1))`, `a₀ = 1/(1+λ)`.
///
/// The `(1−λ)` factor of `1−λ²` always divides the combined numerator, so the
/// result keeps the canonical `c·(1+λ)^{3n+1}` denominator. Values are
/// memoized; the mutex makes concurrent readers safe (generation is
/// serialized, then cloned out).
pub fn an_recurrence(n: usize) -> RationalFunction {
    let mut cache = RECURRENCE_CACHE.lock().expect("coefficient cache poisoned");
    if cache.is_empty() {
        cache.push(RationalFunction::new(
            Polynomial::one(),
            BigRational::one(),
            1,
        ));
    }
    let lambda = Polynomial::from_integers(&[0, 1]);
    let one_minus = Polynomial::from_integers(&[1, -1]);
    while cache.len() <= n {
        let k = cache.len();
        let prev = cache.last().expect("cache holds at least a₀");
        let d1 = prev.derivative();
        let d2 = d1.derivative();
        let combo = d2.mul_poly(&lambda).add(&d1);
        let next = combo
            .mul_poly(&lambda)
            .div_num_exact(&one_minus)
            .expect("the (1−λ) factor cancels exactly in the a_n recurrence")
            .div_one_plus(1)
            .scale_ratio(&BigRational::new(
                BigInt::one(),
                BigInt::from(2 * k * (2 * k - 1)),
            ));
        cache.push(next);
    }
    cache[n].clone()
}

/// a_n(λ) by the explicit double sum
/// `2^{2n}/((2n)!² (1+λ)^{2n+1}) · Σ_k Σ_j (−1)^j (2n+k)!/((k−j)! j!) ·
/// B_{2n}^{(−j)}(−j/2) · (λ/(1+λ))^k`.
///
/// Clearing `(λ/(1+λ))^k` over the common denominator gives a numerator
/// `Σ_k c_k λ^k (1+λ)^{n−k}` against `(1+λ)^{3n+1}`.
pub fn an_meijer(n: usize) -> RationalFunction {
    {
        let cache = MEIJER_CACHE.lock().expect("coefficient cache poisoned");
        if let Some(hit) = cache.as_ref().and_then(|m| m.get(&n)) {
            return hit.clone();
        }
    }
    let one_plus = Polynomial::from_integers(&[1, 1]);
    let mut num = Polynomial::zero();
    for k in 0..=n {
        let mut c_k = BigRational::zero();
        for j in 0..=k {
            let weight = BigRational::new(
                factorial(2 * n + k),
                factorial(k - j) * factorial(j),
            );
            let b = gen_bernoulli(
                2 * n,
                &BigRational::from_integer(BigInt::from(-(j as i64))),
                &BigRational::new(BigInt::from(-(j as i64)), BigInt::from(2)),
            );
            let term = weight * b;
            if j % 2 == 0 {
                c_k += term;
            } else {
                c_k -= term;
            }
        }
        num = num.add(
            &Polynomial::monomial(k, c_k).mul(&one_plus.pow(n - k)),
        );
    }
    let den_const = BigRational::new(
        factorial(2 * n) * factorial(2 * n),
        BigInt::from(2).pow(2 * n as u32),
    );
    let rf = RationalFunction::new(num, den_const, 3 * n + 1);
    MEIJER_CACHE
        .lock()
        .expect("coefficient cache poisoned")
        .get_or_insert_with(HashMap::new)
        .insert(n, rf.clone());
    rf
}

/// a_n(λ) at a fixed rational λ > −1 by the kernel-polynomial route:
/// `P_n(x) = −Σ_{k=1}^{n} [λ/(2k+1)!] ∫₀ˣ P_{n−k}(t) dt` with `P₀ = 1`, then
/// `a_n = (1/(2n)!) ∫₀^∞ t^{2n} e^{−(1+λ)t} P_n(t) dt`, the integral taken
/// exactly monomial by monomial via `∫ t^m e^{−ct} = m!/c^{m+1}`.
pub fn an_lauwerier(n: usize, lambda: &BigRational) -> BigRational {
    assert!(
        *lambda > BigRational::from_integer(BigInt::from(-1)),
        "the Laplace integral requires λ > −1"
    );
    let mut kernels: Vec<Polynomial> = vec![Polynomial::one()];
    for m in 1..=n {
        let mut p = Polynomial::zero();
        for k in 1..=m {
            let w = lambda / BigRational::from_integer(factorial(2 * k + 1));
            p = p.add(&kernels[m - k].integral().scale(&w));
        }
        kernels.push(p.neg());
    }
    let c = lambda + BigRational::one();
    let mut acc = BigRational::zero();
    let mut c_pow = c.clone();
    for _ in 0..2 * n {
        c_pow *= &c;
    }
    // c_pow = (1+λ)^{2n+1}; extend one factor per extra monomial degree.
    for (m, coeff) in kernels[n].coeffs().iter().enumerate() {
        if m > 0 {
            c_pow *= &c;
        }
        if coeff.is_zero() {
            continue;
        }
        acc += coeff * BigRational::from_integer(factorial(2 * n + m)) / &c_pow;
    }
    acc / BigRational::from_integer(factorial(2 * n))
}

/// a_n(λ) at a fixed rational λ ≠ −1 by direct Taylor extraction:
/// the `u^n` coefficient (u = t²) of `(t/(λ sinh t + t))^{2n+1}`.
///
/// With `s(u) = Σ u^k/(2k+1)!`, the power equals
/// `(1+λ)^{−(2n+1)} · w(u)^{−(2n+1)}` for `w = 1 + [λ/(1+λ)](s − 1)`,
/// which has unit constant term as the Miller recurrence requires. The
/// series carries `2n+4` terms so powering never consumes the guard order.
pub fn an_taylor(n: usize, lambda: &BigRational) -> BigRational {
    let one = BigRational::one();
    let base = lambda + &one;
    assert!(!base.is_zero(), "λ = −1 is the pole of every a_n");
    let order = 2 * n + 4;
    let mu = lambda / &base;
    let mut w = Vec::with_capacity(order + 1);
    w.push(one.clone());
    for k in 1..=order {
        w.push(&mu / BigRational::from_integer(factorial(2 * k + 1)));
    }
    let exponent = BigRational::from_integer(BigInt::from(-(2 * n as i64) - 1));
    let powered = PowerSeries::new(w).pow_ratio(&exponent);
    let mut scale = base.recip();
    for _ in 0..2 * n {
        scale = scale / &base;
    }
    powered.coeff(n) * scale
}
