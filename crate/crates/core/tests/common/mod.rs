#![allow(dead_code)]

use euler_stirling::{LaurentSeries, Rational};
use proptest::prelude::*;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

/// Truncated series with offset in -2..=2 and 4..=9 known coefficients.
pub fn arb_series() -> impl Strategy<Value = LaurentSeries> {
    (-2i64..=2, 4usize..=9)
        .prop_flat_map(|(offset, len)| (Just(offset), prop::collection::vec(small_rational(), len)))
        .prop_map(|(offset, coeffs)| {
            let precision = offset + coeffs.len() as i64;
            LaurentSeries::truncated(offset, precision, coeffs).unwrap()
        })
}

/// Like [`arb_series`] but with a nonzero leading coefficient.
pub fn arb_unit_led_series() -> impl Strategy<Value = LaurentSeries> {
    (
        arb_series(),
        small_rational().prop_filter("nonzero", |r| !r.is_zero()),
    )
        .prop_map(|(s, lead)| {
            let mut coeffs: Vec<Rational> = s.terms().map(|(_, c)| c.clone()).collect();
            coeffs[0] = lead;
            LaurentSeries::truncated(s.offset(), s.precision().unwrap(), coeffs).unwrap()
        })
}

/// Exact agreement on the widest window both series know.
pub fn agree(a: &LaurentSeries, b: &LaurentSeries) -> bool {
    let (lo, hi) = a.common_window(b).expect("truncated");
    assert!(hi > lo, "empty common window");
    a.equal_on_window(b, lo, hi).unwrap()
}
