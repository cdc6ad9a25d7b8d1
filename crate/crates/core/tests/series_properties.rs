use euler_stirling::series::{recip_exp_minus_one, LaurentSeries};
use euler_stirling::{factorial, stirling2, Rational};
use proptest::prelude::*;

mod common;
use common::{agree, arb_series, arb_unit_led_series};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mul_commutes(a in arb_series(), b in arb_series()) {
        prop_assert!(agree(&a.mul(&b).unwrap(), &b.mul(&a).unwrap()));
    }

    #[test]
    fn mul_associates(a in arb_series(), b in arb_series(), c in arb_series()) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert!(agree(&left, &right));
    }

    #[test]
    fn mul_distributes(a in arb_series(), b in arb_series(), c in arb_series()) {
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert!(agree(&left, &right));
    }

    #[test]
    fn derivative_is_a_derivation(a in arb_series(), b in arb_series()) {
        let left = a.mul(&b).unwrap().derivative().unwrap();
        let right = a.derivative().unwrap().mul(&b).unwrap()
            .add(&a.mul(&b.derivative().unwrap()).unwrap()).unwrap();
        prop_assert!(agree(&left, &right));
    }

    #[test]
    fn reciprocal_is_an_involution(a in arb_unit_led_series()) {
        let back = a.reciprocal().unwrap().reciprocal().unwrap();
        prop_assert!(agree(&back, &a));
    }

    #[test]
    fn reciprocal_inverts(a in arb_unit_led_series()) {
        let prod = a.mul(&a.reciprocal().unwrap()).unwrap();
        prop_assert!(agree(&prod, &LaurentSeries::one()));
    }
}

#[test]
fn second_kind_generating_function() {
    for k in 1..=10u32 {
        let order = 17;
        let base = LaurentSeries::exp_linear(&Rational::one(), order)
            .unwrap()
            .sub(&LaurentSeries::one())
            .unwrap();
        let series = base
            .pow(k)
            .unwrap()
            .scale(&Rational::from(factorial(k)).recip().unwrap());
        for n in 0..=(k + 15) {
            let expected = Rational::from(stirling2(n, k as i64)) / Rational::from(factorial(n));
            assert_eq!(series.coeff(n as i64).unwrap(), expected, "k={k} n={n}");
        }
    }
}

#[test]
fn first_kind_generating_function() {
    use euler_stirling::stirling1;
    // [ln(1+x)]^m / m! with ln(1+x) = Σ (-1)^(n+1) x^n / n
    let order = 16i64;
    let log = LaurentSeries::truncated(
        0,
        order,
        (0..order)
            .map(|n| {
                if n == 0 {
                    Rational::zero()
                } else {
                    Rational::sign_power(n + 1) / Rational::from(n)
                }
            })
            .collect(),
    )
    .unwrap();
    for m in 1..=6u32 {
        let series = log
            .pow(m)
            .unwrap()
            .scale(&Rational::from(factorial(m)).recip().unwrap());
        for k in 0..order {
            let expected =
                Rational::from(stirling1(k as u32, m as i64)) / Rational::from(factorial(k as u32));
            assert_eq!(series.coeff(k).unwrap(), expected, "m={m} k={k}");
        }
    }
}

#[test]
fn bernoulli_two_from_higher_order_oracle() {
    let t_over = recip_exp_minus_one(30).unwrap().shift(1);
    assert_eq!(
        t_over.coeff(2).unwrap() * Rational::from(2),
        Rational::new(1, 6).unwrap()
    );
}
