//! Exact checks of the derivative/power identities for `1/(e^t - 1)` and
//! its relatives, stated as coefficient equalities between truncated
//! Laurent series.
//!
//! Notation used below: `f = 1/(e^t - 1)`, `g = 1/(1 - e^(-t)) = 1 + f`,
//! `h = 1/(e^t + 1)` and `F = 1/(λ e^(αt) - 1)`. Derivatives are with
//! respect to `t`.
//!
//! | id | left side | right side |
//! |----|-----------|------------|
//! | I1 | `f^(k)`   | `Σ λ_{k,m} f^m` |
//! | I2 | `g^(k)`   | `Σ μ_{k,m} g^m` |
//! | I3 | `g^(k)`   | `Σ λ_{k,m} f^m` |
//! | I4 | `f^(k)`   | `Σ μ_{k,m} g^m` |
//! | I5 | `g^k`     | `Σ a_{k,m-1} g^(m-1)` |
//! | I6 | `f^k`     | `Σ b_{k,m-1} f^(m-1)` |
//! | I7 | `g^k`     | `1 + Σ a_{k,m-1} f^(m-1)` |
//! | I8 | `f^k`     | `(-1)^k + Σ b_{k,m-1} g^(m-1)` |
//! | P1 | `h^(k)`   | `Σ (-1)^(m-1) λ_{k,m} h^m` |
//! | P2 | `h^k`     | `(-1)^(k-1) Σ b_{k,m-1} h^(m-1)` |
//! | G1 | `F^(k)`   | `(-1)^k α^k Σ (m-1)! S(k+1,m) F^m` |
//! | G2 | `F^k`     | `1/(k-1)! Σ (-1)^(m-1) α^(1-m) s(k,m) F^(m-1)` |
//!
//! The constant in I8 is `(-1)^k`; a constant of `1` only holds for even
//! `k` because `b_{k,0} = (-1)^(k-1)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{factorial, Rational};
use crate::error::{Error, Result};
use crate::series::{
    recip_exp_minus_one, recip_exp_plus_one, recip_one_minus_exp_neg, recip_scaled_exp_minus_one,
    LaurentSeries,
};
use crate::stirling::{a_coeff, b_coeff, lambda_coeff, mu_coeff, stirling1, stirling2};

/// Smallest comparison window accepted unless configured otherwise.
pub const DEFAULT_MIN_WINDOW: i64 = 8;

/// Truncation order used when none is given: `2k + 10`.
pub fn default_order(k: u32) -> u32 {
    2 * k + 10
}

/// Every check the crate can report on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    I1,
    I2,
    I3,
    I4,
    I5,
    I6,
    I7,
    I8,
    P1,
    P2,
    G1,
    G2,
    /// `s(n,k)` against its determinant form.
    FirstKindDeterminant,
    /// The alternating Stirling sum that encodes vanishing odd Euler numbers.
    StirlingAlternatingSum,
    /// Reductions of the two-parameter Euler polynomials.
    TwoParamReductions,
}

impl IdentityId {
    pub const EIGHT: [IdentityId; 8] = [
        IdentityId::I1,
        IdentityId::I2,
        IdentityId::I3,
        IdentityId::I4,
        IdentityId::I5,
        IdentityId::I6,
        IdentityId::I7,
        IdentityId::I8,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::I1 => "I1",
            IdentityId::I2 => "I2",
            IdentityId::I3 => "I3",
            IdentityId::I4 => "I4",
            IdentityId::I5 => "I5",
            IdentityId::I6 => "I6",
            IdentityId::I7 => "I7",
            IdentityId::I8 => "I8",
            IdentityId::P1 => "P1",
            IdentityId::P2 => "P2",
            IdentityId::G1 => "G1",
            IdentityId::G2 => "G2",
            IdentityId::FirstKindDeterminant => "eq1.15",
            IdentityId::StirlingAlternatingSum => "eq3.4",
            IdentityId::TwoParamReductions => "reductions",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use IdentityId::*;
        [
            I1,
            I2,
            I3,
            I4,
            I5,
            I6,
            I7,
            I8,
            P1,
            P2,
            G1,
            G2,
            FirstKindDeterminant,
            StirlingAlternatingSum,
            TwoParamReductions,
        ]
        .into_iter()
        .find(|id| id.as_str() == s)
        .ok_or_else(|| Error::Domain(format!("unknown identity {s:?}")))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub exponent: i64,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Outcome of one check. `passed` is true iff `first_discrepancy` is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity_id: IdentityId,
    /// Secondary index for checks over pairs `(n, k)` or indexed by `n`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub k: u32,
    pub alpha: Option<Rational>,
    pub lambda: Option<Rational>,
    pub order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<(i64, i64)>,
    pub passed: bool,
    pub first_discrepancy: Option<Discrepancy>,
}

impl VerificationReport {
    /// Report for a check that is not a series comparison.
    pub fn scalar(identity_id: IdentityId, k: u32, passed: bool) -> Self {
        VerificationReport {
            identity_id,
            n: None,
            k,
            alpha: None,
            lambda: None,
            order: None,
            window: None,
            passed,
            first_discrepancy: None,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.identity_id
        )?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        write!(f, " k={}", self.k)?;
        if let Some(a) = &self.alpha {
            write!(f, " alpha={a}")?;
        }
        if let Some(l) = &self.lambda {
            write!(f, " lambda={l}")?;
        }
        if let Some(o) = self.order {
            write!(f, " order={o}")?;
        }
        if let Some((lo, hi)) = self.window {
            write!(f, " window=[{lo},{hi})")?;
        }
        if let Some(d) = &self.first_discrepancy {
            write!(f, " mismatch at t^{}: {} != {}", d.exponent, d.lhs, d.rhs)?;
        }
        Ok(())
    }
}

/// The coefficient families for one `k`, indexed from `m = 1`:
/// `lambda[m-1] = λ_{k,m}` and `a[m-1] = a_{k,m-1}`.
///
/// Fields are public so that tests can inject faults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSet {
    pub k: u32,
    pub lambda: Vec<Rational>,
    pub mu: Vec<Rational>,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

impl CoefficientSet {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("k must be positive".into()));
        }
        let lambda = (1..=k + 1)
            .map(|m| lambda_coeff(k, m).map(Rational::from))
            .collect::<Result<_>>()?;
        let mu = (1..=k + 1)
            .map(|m| mu_coeff(k, m).map(Rational::from))
            .collect::<Result<_>>()?;
        let a = (1..=k).map(|m| a_coeff(k, m)).collect::<Result<_>>()?;
        let b = (1..=k).map(|m| b_coeff(k, m)).collect::<Result<_>>()?;
        Ok(CoefficientSet {
            k,
            lambda,
            mu,
            a,
            b,
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub min_window: i64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            min_window: DEFAULT_MIN_WINDOW,
        }
    }
}

/// `Σ coeffs[m-1] base^m`.
fn power_combination(coeffs: &[Rational], base: &LaurentSeries) -> Result<LaurentSeries> {
    let mut acc = LaurentSeries::zero();
    let mut power = LaurentSeries::one();
    for c in coeffs {
        power = power.mul(base)?;
        acc = acc.add(&power.scale(c))?;
    }
    Ok(acc)
}

/// `Σ coeffs[m-1] base^(m-1)` (derivatives).
fn derivative_combination(coeffs: &[Rational], base: &LaurentSeries) -> Result<LaurentSeries> {
    let mut acc = LaurentSeries::zero();
    let mut current = base.clone();
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            current = current.derivative()?;
        }
        acc = acc.add(&current.scale(c))?;
    }
    Ok(acc)
}

fn alternating(coeffs: &[Rational]) -> Vec<Rational> {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| Rational::sign_power(i as i64) * c)
        .collect()
}

/// Both sides of identity `id` (one of I1-I8, P1, P2) built from `coeffs`.
pub fn identity_sides(
    id: IdentityId,
    order: u32,
    coeffs: &CoefficientSet,
) -> Result<(LaurentSeries, LaurentSeries)> {
    use IdentityId::*;
    let k = coeffs.k;
    let sign_k = Rational::sign_power(k as i64);
    let sides = match id {
        I1 | I2 | I3 | I4 | I5 | I6 | I7 | I8 => {
            let f = recip_exp_minus_one(order)?;
            let g = recip_one_minus_exp_neg(order)?;
            match id {
                I1 => (f.nth_derivative(k)?, power_combination(&coeffs.lambda, &f)?),
                I2 => (g.nth_derivative(k)?, power_combination(&coeffs.mu, &g)?),
                I3 => (g.nth_derivative(k)?, power_combination(&coeffs.lambda, &f)?),
                I4 => (f.nth_derivative(k)?, power_combination(&coeffs.mu, &g)?),
                I5 => (g.pow(k)?, derivative_combination(&coeffs.a, &g)?),
                I6 => (f.pow(k)?, derivative_combination(&coeffs.b, &f)?),
                I7 => (
                    g.pow(k)?,
                    derivative_combination(&coeffs.a, &f)?.add(&LaurentSeries::one())?,
                ),
                I8 => (
                    f.pow(k)?,
                    derivative_combination(&coeffs.b, &g)?.add(&LaurentSeries::constant(sign_k))?,
                ),
                _ => unreachable!(),
            }
        }
        P1 | P2 => {
            let h = recip_exp_plus_one(order)?;
            match id {
                P1 => (
                    h.nth_derivative(k)?,
                    power_combination(&alternating(&coeffs.lambda), &h)?,
                ),
                P2 => (
                    h.pow(k)?,
                    derivative_combination(&coeffs.b, &h)?.scale(&-sign_k),
                ),
                _ => unreachable!(),
            }
        }
        other => {
            return Err(Error::Domain(format!(
                "{other} is not an identity over 1/(e^t±1)"
            )))
        }
    };
    Ok(sides)
}

fn check_params(k: u32, alpha: &Rational, lambda: &Rational) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    if alpha.is_zero() {
        return Err(Error::Domain("alpha must be nonzero".into()));
    }
    if lambda.is_zero() {
        return Err(Error::Domain("lambda must be nonzero".into()));
    }
    Ok(())
}

/// Both sides of G1: `F^(k)` and `(-1)^k α^k Σ (m-1)! S(k+1,m) F^m`.
pub fn general_derivative_sides(
    k: u32,
    alpha: &Rational,
    lambda: &Rational,
    order: u32,
) -> Result<(LaurentSeries, LaurentSeries)> {
    check_params(k, alpha, lambda)?;
    let base = recip_scaled_exp_minus_one(alpha, lambda, order)?;
    let coeffs: Vec<Rational> = (1..=k + 1)
        .map(|m| Rational::from(factorial(m - 1) * stirling2(k + 1, m as i64)))
        .collect();
    let prefactor = Rational::sign_power(k as i64) * alpha.pow(k);
    let rhs = power_combination(&coeffs, &base)?.scale(&prefactor);
    Ok((base.nth_derivative(k)?, rhs))
}

/// Both sides of G2: `F^k` and `1/(k-1)! Σ (-1)^(m-1) α^(1-m) s(k,m) F^(m-1)`.
pub fn general_power_sides(
    k: u32,
    alpha: &Rational,
    lambda: &Rational,
    order: u32,
) -> Result<(LaurentSeries, LaurentSeries)> {
    check_params(k, alpha, lambda)?;
    let base = recip_scaled_exp_minus_one(alpha, lambda, order)?;
    let coeffs: Vec<Rational> = (1..=k)
        .map(|m| {
            let scale = Rational::sign_power(m as i64 - 1) * alpha.powi(1 - m as i32)?;
            Ok(scale * Rational::from(stirling1(k, m as i64)))
        })
        .collect::<Result<_>>()?;
    let prefactor = Rational::from(factorial(k - 1)).recip()?;
    let rhs = derivative_combination(&coeffs, &base)?.scale(&prefactor);
    Ok((base.pow(k)?, rhs))
}

/// Compares two sides on their common window and fills in a report.
pub fn compare_sides(
    lhs: &LaurentSeries,
    rhs: &LaurentSeries,
    config: VerifyConfig,
) -> Result<((i64, i64), Option<Discrepancy>)> {
    let (_, hi) = lhs.common_window(rhs).ok_or_else(|| {
        Error::PrecisionExhausted("both sides are exact; nothing to bound".into())
    })?;
    let lo = [lhs, rhs]
        .iter()
        .map(|s| s.valuation().unwrap_or(s.offset()))
        .min()
        .expect("two sides");
    if hi - lo < config.min_window {
        return Err(Error::PrecisionExhausted(format!(
            "comparison window [{lo}, {hi}) holds fewer than {} coefficients",
            config.min_window
        )));
    }
    let diff = lhs
        .first_difference(rhs, lo, hi)?
        .map(|(exponent, lhs, rhs)| Discrepancy { exponent, lhs, rhs });
    Ok(((lo, hi), diff))
}

fn series_report(
    identity_id: IdentityId,
    k: u32,
    params: Option<(&Rational, &Rational)>,
    order: u32,
    sides: (LaurentSeries, LaurentSeries),
    config: VerifyConfig,
) -> Result<VerificationReport> {
    let (window, first_discrepancy) = compare_sides(&sides.0, &sides.1, config)?;
    Ok(VerificationReport {
        identity_id,
        n: None,
        k,
        alpha: params.map(|(a, _)| a.clone()),
        lambda: params.map(|(_, l)| l.clone()),
        order: Some(order),
        window: Some(window),
        passed: first_discrepancy.is_none(),
        first_discrepancy,
    })
}

/// Checks one of I1-I8 (or P1/P2) against an explicit coefficient set.
pub fn verify_with_coefficients(
    id: IdentityId,
    order: u32,
    coeffs: &CoefficientSet,
    config: VerifyConfig,
) -> Result<VerificationReport> {
    let sides = identity_sides(id, order, coeffs)?;
    series_report(id, coeffs.k, None, order, sides, config)
}

/// Checks one of the eight identities I1-I8 for the given `k`.
pub fn verify_identity(id: IdentityId, k: u32, order: u32) -> Result<VerificationReport> {
    if !IdentityId::EIGHT.contains(&id) {
        return Err(Error::Domain(format!("{id} is not one of I1..I8")));
    }
    verify_with_coefficients(id, order, &CoefficientSet::new(k)?, VerifyConfig::default())
}

/// Checks P1 or P2, the identities for `1/(e^t + 1)`.
pub fn verify_plus_identities(id: IdentityId, k: u32, order: u32) -> Result<VerificationReport> {
    if !matches!(id, IdentityId::P1 | IdentityId::P2) {
        return Err(Error::Domain(format!("{id} is not P1 or P2")));
    }
    verify_with_coefficients(id, order, &CoefficientSet::new(k)?, VerifyConfig::default())
}

/// Checks G1 for `F = 1/(λ e^(αt) - 1)`.
pub fn verify_general_derivative(
    k: u32,
    alpha: &Rational,
    lambda: &Rational,
    order: u32,
) -> Result<VerificationReport> {
    let sides = general_derivative_sides(k, alpha, lambda, order)?;
    series_report(
        IdentityId::G1,
        k,
        Some((alpha, lambda)),
        order,
        sides,
        VerifyConfig::default(),
    )
}

/// Checks G2 for `F = 1/(λ e^(αt) - 1)`.
pub fn verify_general_power(
    k: u32,
    alpha: &Rational,
    lambda: &Rational,
    order: u32,
) -> Result<VerificationReport> {
    let sides = general_power_sides(k, alpha, lambda, order)?;
    series_report(
        IdentityId::G2,
        k,
        Some((alpha, lambda)),
        order,
        sides,
        VerifyConfig::default(),
    )
}
