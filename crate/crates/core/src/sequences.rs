//! Bernoulli, Apostol-Bernoulli, Euler and two-parameter Euler families.
//!
//! Each family has an explicit Stirling-number formula and an independent
//! oracle that reads coefficients off its generating function with the
//! series engine. The two must agree exactly.

use serde::Serialize;

use crate::arith::{binomial, factorial, Rational};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::series::{
    recip_exp_minus_one, recip_scaled_exp_minus_one, recip_scaled_exp_plus_one, LaurentSeries,
};
use crate::stirling::stirling2;

/// Oracle truncation order used when none is given: `n + 8`.
pub fn default_oracle_order(n: u32) -> u32 {
    n + 8
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Bernoulli,
    ApostolBernoulli,
    EulerNumber,
    EulerPolynomial,
    TwoParamEuler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Formula,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Number(Rational),
    Polynomial(Polynomial),
}

/// One computed family member, tagged with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceValue {
    pub family: Family,
    pub n: u32,
    pub alpha: Option<Rational>,
    pub lambda: Option<Rational>,
    pub value: Value,
    pub provenance: Provenance,
}

/// `n! [t^n] series`.
fn egf_coefficient(series: &LaurentSeries, n: u32) -> Result<Rational> {
    Ok(series.coeff(n as i64)? * Rational::from(factorial(n)))
}

/// `B_n` read off `t/(e^t - 1)`.
pub fn bernoulli_oracle(n: u32) -> Rational {
    let series = recip_exp_minus_one(n + 4)
        .expect("order n+4 leaves a nonempty window")
        .shift(1);
    egf_coefficient(&series, n).expect("order n+4 covers t^n")
}

/// `B_{2k}` from the Stirling-number formula, `k >= 1`.
pub fn bernoulli_formula(k: u32) -> Result<Rational> {
    if k == 0 {
        return Err(Error::Domain("the formula gives B_2k for k >= 1".into()));
    }
    let n = 2 * k;
    let s = |a: u32, b: u32| Rational::from(stirling2(a, b as i64));
    let c = |m: u32| Rational::from(binomial(n, m as i64));

    let first: Rational = (1..n).map(|m| s(n + 1, m + 1) * s(n, n - m) / c(m)).sum();
    let second: Rational = (1..=n)
        .map(|m| s(n, m) * s(n + 1, n - m + 1) / c(m - 1))
        .sum();
    let weight = Rational::new(n, n + 1)?;
    Ok(Rational::one() + first - weight * second)
}

/// Apostol-Bernoulli `𝓑_n(λ)` from the Stirling-number formula,
/// `n >= 1`, `λ != 1`.
pub fn apostol_bernoulli_formula(n: u32, lambda: &Rational) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("the formula is stated for n >= 1".into()));
    }
    let shifted = lambda - Rational::one();
    if shifted.is_zero() {
        return Err(Error::Pole("lambda = 1".into()));
    }
    let inv = shifted.recip()?;
    let sum: Rational = (1..=n)
        .map(|k| Rational::from(factorial(k - 1) * stirling2(n, k as i64)) * inv.pow(k))
        .sum();
    Ok(Rational::sign_power(n as i64 - 1) * Rational::from(n as i64) * sum)
}

/// `𝓑_n(λ)` read off `t/(λ e^t - 1)`. At `λ = 1` this is `B_n`.
pub fn apostol_bernoulli_oracle(n: u32, lambda: &Rational, order: u32) -> Result<Rational> {
    if lambda.is_zero() {
        return Err(Error::Domain("lambda must be nonzero".into()));
    }
    let series = recip_scaled_exp_minus_one(&Rational::one(), lambda, order)?.shift(1);
    egf_coefficient(&series, n)
}

/// `Σ_{l=1}^{j} (-1)^(l-1) (l-1)! / 2^(l-1) S(j, l)`, the inner bracket of
/// the Euler polynomial formula.
fn euler_bracket(j: u32) -> Rational {
    let half = Rational::new(1, 2).expect("nonzero");
    (1..=j)
        .map(|l| {
            Rational::sign_power(l as i64 - 1)
                * Rational::from(factorial(l - 1) * stirling2(j, l as i64))
                * half.pow(l - 1)
        })
        .sum()
}

/// Euler polynomial `E_n(x)` from the Stirling-number formula.
pub fn euler_polynomial_formula(n: u32) -> Polynomial {
    Polynomial::new(
        (0..=n)
            .map(|k| {
                Rational::sign_power((n - k) as i64)
                    * Rational::from(binomial(n, k as i64))
                    * euler_bracket(n - k + 1)
            })
            .collect(),
    )
}

/// `E_n(x)` at a rational point, read off `2 e^(xt)/(e^t + 1)`.
pub fn euler_polynomial_oracle(n: u32, x: &Rational, order: u32) -> Result<Rational> {
    let series = LaurentSeries::exp_linear(x, order)?
        .mul(&recip_scaled_exp_plus_one(
            &Rational::one(),
            &Rational::one(),
            order,
        )?)?
        .scale(&Rational::from(2));
    egf_coefficient(&series, n)
}

/// `E_n` read off `2 e^(t/2)/(e^t + 1) = Σ E_k/k! (t/2)^k`.
pub fn euler_number_oracle(n: u32, order: u32) -> Result<Rational> {
    let half = Rational::new(1, 2)?;
    Ok(euler_polynomial_oracle(n, &half, order)? * Rational::from(2).pow(n))
}

/// Even Euler number `E_{2m}` evaluated directly from its own Stirling sum.
fn euler_number_even_sum(m: u32) -> Rational {
    let n = 2 * m;
    let half = Rational::new(1, 2).expect("nonzero");
    let sum: Rational = (0..=n)
        .map(|k| {
            euler_bracket(n - k + 1)
                * Rational::sign_power(k as i64)
                * half.pow(k)
                * Rational::from(binomial(n, k as i64))
        })
        .sum();
    Rational::from(4).pow(m) * sum
}

/// Euler number `E_n = 2^n E_n(1/2)`.
///
/// For even `n` the value is also computed from the direct even-index sum
/// and the two must agree; a mismatch is reported as
/// [`Error::Consistency`].
pub fn euler_number(n: u32) -> Result<Rational> {
    let half = Rational::new(1, 2)?;
    let value = Rational::from(2).pow(n) * euler_polynomial_formula(n).eval(&half);
    if n % 2 == 0 {
        let direct = euler_number_even_sum(n / 2);
        if direct != value {
            return Err(Error::Consistency(format!(
                "E_{n}: {value} from E_n(1/2) but {direct} from the even sum"
            )));
        }
    }
    if !value.is_integer() {
        return Err(Error::Consistency(format!(
            "E_{n} = {value} is not an integer"
        )));
    }
    Ok(value)
}

/// The alternating Stirling sum that equals `2^(2n-1) E_{2n-1}(1/2)`;
/// it vanishes for every `n >= 1`.
pub fn stirling_alternating_sum(n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let top = 2 * n - 1;
    let half = Rational::new(1, 2)?;
    Ok((0..=top)
        .map(|k| {
            euler_bracket(2 * n - k)
                * Rational::sign_power(k as i64)
                * half.pow(k)
                * Rational::from(binomial(top, k as i64))
        })
        .sum())
}

fn check_two_param(alpha: &Rational, lambda: &Rational) -> Result<Rational> {
    if alpha.is_zero() {
        return Err(Error::Domain("alpha must be nonzero".into()));
    }
    let shifted = lambda + Rational::one();
    if shifted.is_zero() {
        return Err(Error::Pole("lambda = -1".into()));
    }
    Ok(shifted)
}

/// True when `λ` lies outside `λ > 0`, where the two-parameter family is
/// defined analytically. Formal computations remain valid there.
pub fn outside_stated_domain(lambda: &Rational) -> bool {
    lambda.is_zero() || lambda.is_negative()
}

/// Two-parameter Euler polynomial `E_n(x; α, λ)` from the Stirling-number
/// formula. Accepts any `λ != -1`.
pub fn two_param_euler_formula(n: u32, alpha: &Rational, lambda: &Rational) -> Result<Polynomial> {
    let inv = check_two_param(alpha, lambda)?.recip()?;
    let neg_alpha = -alpha;
    let coeffs = (0..=n)
        .map(|k| {
            let j = n - k + 1;
            let bracket: Rational = (1..=j)
                .map(|m| {
                    Rational::sign_power(m as i64 - 1)
                        * Rational::from(factorial(m - 1) * stirling2(j, m as i64))
                        * inv.pow(m)
                })
                .sum();
            Rational::from(2)
                * neg_alpha.pow(n - k)
                * Rational::from(binomial(n, k as i64))
                * bracket
        })
        .collect();
    Ok(Polynomial::new(coeffs))
}

/// `E_n(x; α, λ)` at a rational point, read off `2 e^(xz)/(λ e^(αz) + 1)`.
pub fn two_param_euler_oracle(
    n: u32,
    x: &Rational,
    alpha: &Rational,
    lambda: &Rational,
    order: u32,
) -> Result<Rational> {
    if alpha.is_zero() {
        return Err(Error::Domain("alpha must be nonzero".into()));
    }
    if (lambda + Rational::one()).is_zero() {
        // the denominator has no constant term, so this is not a power series
        return Err(Error::DivisionByZeroSeries);
    }
    let series = LaurentSeries::exp_linear(x, order)?
        .mul(&recip_scaled_exp_plus_one(alpha, lambda, order)?)?
        .scale(&Rational::from(2));
    egf_coefficient(&series, n)
}

/// Checks `E_n(x;1,1) = E_n(x)` and `E_n(x;α,λ) = α^n E_n(x/α; 1, λ)` as
/// exact polynomial identities.
pub fn verify_two_param_reductions(n: u32, alpha: &Rational, lambda: &Rational) -> Result<bool> {
    check_two_param(alpha, lambda)?;
    let one = Rational::one();
    let classical = two_param_euler_formula(n, &one, &one)? == euler_polynomial_formula(n);

    let general = two_param_euler_formula(n, alpha, lambda)?;
    let rescaled = two_param_euler_formula(n, &one, lambda)?
        .compose_affine(&alpha.recip()?, &Rational::zero())
        .scale(&alpha.pow(n));
    Ok(classical && general == rescaled)
}
