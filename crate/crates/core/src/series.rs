//! Truncated formal Laurent series over [`Rational`].
//!
//! A series stores coefficients for exponents `offset .. offset + len`.
//! Every coefficient below `offset` is zero. A truncated series knows its
//! coefficients only below `precision` (exclusive); an exact series is a
//! finite Laurent polynomial whose remaining coefficients are all zero.
//!
//! Precision propagation is pessimistic:
//!
//! * sum: minimum of the operand precisions
//! * product: `min(p_a + v_b, p_b + v_a)` with `v` the valuation
//! * derivative: `p - 1`
//! * reciprocal of a series with valuation `v`: `p - 2v - 1`

use crate::arith::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    offset: i64,
    /// Exclusive bound on known exponents; `None` for exact series.
    precision: Option<i64>,
    coeffs: Vec<Rational>,
}

fn min_precision(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn exhausted(what: impl Into<String>) -> Error {
    Error::PrecisionExhausted(what.into())
}

impl LaurentSeries {
    /// Exact Laurent polynomial `Σ coeffs[i] t^(offset + i)`.
    pub fn exact(offset: i64, coeffs: Vec<Rational>) -> Self {
        LaurentSeries {
            offset,
            precision: None,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        Self::exact(0, Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::exact(0, vec![c])
    }

    /// Exact `c t^exponent`.
    pub fn monomial(c: Rational, exponent: i64) -> Self {
        Self::exact(exponent, vec![c])
    }

    /// Truncated series with coefficients for `offset .. precision`.
    pub fn truncated(offset: i64, precision: i64, mut coeffs: Vec<Rational>) -> Result<Self> {
        if precision <= offset {
            return Err(exhausted(format!("empty window [{offset}, {precision})")));
        }
        coeffs.resize((precision - offset) as usize, Rational::zero());
        Ok(LaurentSeries {
            offset,
            precision: Some(precision),
            coeffs,
        })
    }

    /// `e^(alpha t)` known for exponents `0 .. order`.
    pub fn exp_linear(alpha: &Rational, order: u32) -> Result<Self> {
        if order == 0 {
            return Err(exhausted("exp_linear needs order >= 1"));
        }
        let mut coeffs = Vec::with_capacity(order as usize);
        let mut term = Rational::one();
        for n in 0..order {
            if n > 0 {
                term = term * alpha / Rational::from(n as i64);
            }
            coeffs.push(term.clone());
        }
        Self::truncated(0, order as i64, coeffs)
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    /// One past the last stored exponent.
    fn stored_end(&self) -> i64 {
        self.offset + self.coeffs.len() as i64
    }

    /// First exponent with a nonzero coefficient inside the window.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.offset + i as i64)
    }

    /// Lower bound on the mathematical valuation; `None` means exactly zero.
    fn valuation_bound(&self) -> Option<i64> {
        self.valuation().or(self.precision)
    }

    /// Coefficient of `t^exponent`.
    pub fn coeff(&self, exponent: i64) -> Result<Rational> {
        if let Some(p) = self.precision {
            if exponent >= p {
                return Err(exhausted(format!(
                    "coefficient t^{exponent} requested, known below t^{p}"
                )));
            }
        }
        if exponent < self.offset || exponent >= self.stored_end() {
            return Ok(Rational::zero());
        }
        Ok(self.coeffs[(exponent - self.offset) as usize].clone())
    }

    fn coeff_ref(&self, exponent: i64) -> Option<&Rational> {
        if exponent < self.offset {
            return None;
        }
        self.coeffs.get((exponent - self.offset) as usize)
    }

    /// `(exponent, coefficient)` pairs across the stored window.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    /// Forgets every coefficient from `precision` on.
    pub fn truncate(&self, precision: i64) -> Result<Self> {
        let precision = min_precision(self.precision, Some(precision)).expect("bounded");
        let keep: Vec<Rational> = (self.offset..precision.max(self.offset))
            .map(|e| self.coeff_ref(e).cloned().unwrap_or_else(Rational::zero))
            .collect();
        Self::truncated(self.offset, precision, keep)
    }

    fn build(
        offset: i64,
        precision: Option<i64>,
        end: i64,
        f: impl Fn(i64) -> Rational,
    ) -> Result<Self> {
        if let Some(p) = precision {
            if p <= offset {
                return Err(exhausted(format!("result window [{offset}, {p}) is empty")));
            }
        }
        let coeffs = (offset..end.max(offset)).map(f).collect();
        Ok(LaurentSeries {
            offset,
            precision,
            coeffs,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        let offset = self.offset.min(other.offset);
        let precision = min_precision(self.precision, other.precision);
        let end = precision.unwrap_or_else(|| self.stored_end().max(other.stored_end()));
        let zero = Rational::zero();
        Self::build(offset, precision, end, |e| {
            op(
                self.coeff_ref(e).unwrap_or(&zero),
                other.coeff_ref(e).unwrap_or(&zero),
            )
        })
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentSeries {
            offset: self.offset,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (Some(va), Some(vb)) = (self.valuation_bound(), other.valuation_bound()) else {
            return Ok(Self::zero());
        };
        let precision = min_precision(
            self.precision.map(|p| p + vb),
            other.precision.map(|p| p + va),
        );
        let offset = self.offset + other.offset;
        let end = precision.unwrap_or_else(|| self.stored_end() + other.stored_end() - 1);
        Self::build(offset, precision, end, |e| {
            let lo = self.offset.max(e - other.stored_end() + 1);
            let hi = self.stored_end().min(e - other.offset + 1);
            let mut acc = Rational::zero();
            for i in lo..hi {
                let (Some(x), Some(y)) = (self.coeff_ref(i), other.coeff_ref(e - i)) else {
                    continue;
                };
                if !x.is_zero() && !y.is_zero() {
                    acc += x * y;
                }
            }
            acc
        })
    }

    /// Multiplies by the exact monomial `t^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentSeries {
            offset: self.offset + shift,
            precision: self.precision.map(|p| p + shift),
            coeffs: self.coeffs.clone(),
        }
    }

    /// `self^exp`; `self^0` is the exact constant 1.
    pub fn pow(&self, exp: u32) -> Result<Self> {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn derivative(&self) -> Result<Self> {
        let precision = self.precision.map(|p| p - 1);
        let offset = self.offset - 1;
        let end = precision.unwrap_or(self.stored_end() - 1);
        Self::build(offset, precision, end, |e| {
            let src = e + 1;
            match self.coeff_ref(src) {
                Some(c) => c * Rational::from(src),
                None => Rational::zero(),
            }
        })
    }

    pub fn nth_derivative(&self, n: u32) -> Result<Self> {
        (0..n).try_fold(self.clone(), |acc, _| acc.derivative())
    }

    /// Multiplicative inverse.
    ///
    /// The valuation must lie inside the window. Exact inputs are only
    /// accepted when they are monomials; truncate other exact series first.
    pub fn reciprocal(&self) -> Result<Self> {
        let v = self.valuation().ok_or(Error::DivisionByZeroSeries)?;
        let lead = self.coeff_ref(v).expect("valuation inside storage").clone();
        let inv_lead = lead.recip()?;

        let Some(p) = self.precision else {
            if self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1 {
                return Ok(Self::monomial(inv_lead, -v));
            }
            return Err(exhausted(
                "reciprocal of an exact non-monomial needs a truncation order",
            ));
        };

        let precision = p - 2 * v - 1;
        let len = precision + v;
        if len <= 0 {
            return Err(exhausted(format!(
                "reciprocal of series with valuation {v} known below t^{p} has an empty window"
            )));
        }
        let unit: Vec<&Rational> = (0..len)
            .map(|i| self.coeff_ref(v + i).expect("inside window"))
            .collect();
        let mut out: Vec<Rational> = Vec::with_capacity(len as usize);
        out.push(inv_lead.clone());
        for n in 1..len as usize {
            let mut acc = Rational::zero();
            for i in 1..=n {
                if !unit[i].is_zero() {
                    acc += unit[i] * &out[n - i];
                }
            }
            out.push(-(acc * &inv_lead));
        }
        Self::truncated(-v, precision, out)
    }

    /// First exponent in `[lo, hi)` where the two series differ, together
    /// with both coefficients.
    pub fn first_difference(
        &self,
        other: &Self,
        lo: i64,
        hi: i64,
    ) -> Result<Option<(i64, Rational, Rational)>> {
        for s in [self, other] {
            if let Some(p) = s.precision {
                if hi > p {
                    return Err(exhausted(format!(
                        "comparison window [{lo}, {hi}) exceeds precision {p}"
                    )));
                }
            }
        }
        for e in lo..hi {
            let (a, b) = (self.coeff(e)?, other.coeff(e)?);
            if a != b {
                return Ok(Some((e, a, b)));
            }
        }
        Ok(None)
    }

    /// True iff every coefficient in `[lo, hi)` agrees.
    pub fn equal_on_window(&self, other: &Self, lo: i64, hi: i64) -> Result<bool> {
        Ok(self.first_difference(other, lo, hi)?.is_none())
    }

    /// Widest range `[lo, hi)` on which both series are known.
    pub fn common_window(&self, other: &Self) -> Option<(i64, i64)> {
        let lo = self.offset.min(other.offset);
        let hi = min_precision(self.precision, other.precision)?;
        Some((lo, hi))
    }
}

/// `1/(λ e^(αt) + σ)` with the exponential known below `t^order`.
fn reciprocal_of_exp(
    alpha: &Rational,
    lambda: &Rational,
    sigma: i64,
    order: u32,
) -> Result<LaurentSeries> {
    LaurentSeries::exp_linear(alpha, order)?
        .scale(lambda)
        .add(&LaurentSeries::constant(Rational::from(sigma)))?
        .reciprocal()
}

/// `1/(e^t - 1)`, valuation -1.
pub fn recip_exp_minus_one(order: u32) -> Result<LaurentSeries> {
    reciprocal_of_exp(&Rational::one(), &Rational::one(), -1, order)
}

/// `1/(1 - e^(-t))`, valuation -1.
pub fn recip_one_minus_exp_neg(order: u32) -> Result<LaurentSeries> {
    reciprocal_of_exp(&-Rational::one(), &-Rational::one(), 1, order)
}

/// `1/(e^t + 1)`, a power series with constant term 1/2.
pub fn recip_exp_plus_one(order: u32) -> Result<LaurentSeries> {
    reciprocal_of_exp(&Rational::one(), &Rational::one(), 1, order)
}

/// `1/(λ e^(αt) - 1)`. Has a simple pole at the origin when `λ = 1`.
pub fn recip_scaled_exp_minus_one(
    alpha: &Rational,
    lambda: &Rational,
    order: u32,
) -> Result<LaurentSeries> {
    reciprocal_of_exp(alpha, lambda, -1, order)
}

/// `1/(λ e^(αt) + 1)`.
pub fn recip_scaled_exp_plus_one(
    alpha: &Rational,
    lambda: &Rational,
    order: u32,
) -> Result<LaurentSeries> {
    reciprocal_of_exp(alpha, lambda, 1, order)
}

impl std::fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| format!("{c}*t^{e}"))
            .collect();
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        match self.precision {
            Some(p) => write!(f, "{body} + O(t^{p})"),
            None => write!(f, "{body}"),
        }
    }
}
