use euler_stirling::series::recip_scaled_exp_minus_one;
use euler_stirling::verify::{
    default_order, general_derivative_sides, general_power_sides, identity_sides,
    verify_with_coefficients, CoefficientSet, VerifyConfig,
};
use euler_stirling::{factorial, IdentityId, LaurentSeries, Rational};

#[test]
fn paired_identities_share_right_sides() {
    for k in 1..=10 {
        let coeffs = CoefficientSet::new(k).unwrap();
        let order = default_order(k);
        let (lhs1, rhs1) = identity_sides(IdentityId::I1, order, &coeffs).unwrap();
        let (lhs3, rhs3) = identity_sides(IdentityId::I3, order, &coeffs).unwrap();
        let (lhs2, rhs2) = identity_sides(IdentityId::I2, order, &coeffs).unwrap();
        let (lhs4, rhs4) = identity_sides(IdentityId::I4, order, &coeffs).unwrap();
        assert_eq!(rhs1, rhs3, "k={k}");
        assert_eq!(rhs2, rhs4, "k={k}");
        // f and g differ by a constant, so their derivatives coincide
        let (lo, hi) = lhs1.common_window(&lhs3).unwrap();
        assert!(lhs1.equal_on_window(&lhs3, lo, hi).unwrap());
        assert!(lhs2.equal_on_window(&lhs4, lo, hi).unwrap());
    }
}

#[test]
fn general_identities_specialize() {
    let one = Rational::one();
    for k in 1..=8 {
        let order = default_order(k);
        let coeffs = CoefficientSet::new(k).unwrap();
        assert_eq!(
            general_derivative_sides(k, &one, &one, order).unwrap(),
            identity_sides(IdentityId::I1, order, &coeffs).unwrap(),
            "G1 vs I1 at k={k}"
        );
        let (g_lhs, g_rhs) = general_power_sides(k, &one, &one, order).unwrap();
        let (i_lhs, i_rhs) = identity_sides(IdentityId::I6, order, &coeffs).unwrap();
        assert_eq!(g_lhs, i_lhs, "k={k}");
        let (lo, hi) = g_rhs.common_window(&i_rhs).unwrap();
        assert!(
            g_rhs.equal_on_window(&i_rhs, lo, hi).unwrap(),
            "G2 vs I6 at k={k}"
        );
    }
}

#[test]
fn first_kind_rhs_equals_b_coefficient_rhs() {
    // Σ b_{k,m-1} α^(1-m) F^(m-1) against the first-kind right side of G2
    for (alpha, lambda) in [
        (Rational::one(), Rational::one()),
        (Rational::from(2), Rational::new(-1, 2).unwrap()),
    ] {
        for k in 1..=10 {
            let order = default_order(k);
            let coeffs = CoefficientSet::new(k).unwrap();
            let base = recip_scaled_exp_minus_one(&alpha, &lambda, order).unwrap();
            let mut rhs = LaurentSeries::zero();
            let mut current = base.clone();
            for (i, b) in coeffs.b.iter().enumerate() {
                if i > 0 {
                    current = current.derivative().unwrap();
                }
                let scale = b * alpha.powi(-(i as i32)).unwrap();
                rhs = rhs.add(&current.scale(&scale)).unwrap();
            }
            let (_, g_rhs) = general_power_sides(k, &alpha, &lambda, order).unwrap();
            assert_eq!(rhs, g_rhs, "k={k} alpha={alpha} lambda={lambda}");
        }
    }
}

#[test]
fn b_coefficients_match_scaled_first_kind() {
    use euler_stirling::stirling1;
    for k in 1..=10u32 {
        let coeffs = CoefficientSet::new(k).unwrap();
        for m in 1..=k {
            let expected = Rational::sign_power(m as i64 - 1)
                * Rational::from(stirling1(k, m as i64))
                / Rational::from(factorial(k - 1));
            assert_eq!(coeffs.b[(m - 1) as usize], expected, "k={k} m={m}");
        }
    }
}

#[test]
fn single_coefficient_faults_are_detected() {
    for k in [1u32, 3, 6] {
        let order = default_order(k);
        let clean = CoefficientSet::new(k).unwrap();
        let faults: Vec<(IdentityId, Box<dyn Fn(&mut CoefficientSet)>)> = vec![
            (IdentityId::I1, Box::new(|c| c.lambda[0] += Rational::one())),
            (
                IdentityId::I1,
                Box::new(|c| *c.lambda.last_mut().unwrap() += Rational::one()),
            ),
            (IdentityId::I2, Box::new(|c| c.mu[0] += Rational::one())),
            (IdentityId::I5, Box::new(|c| c.a[0] += Rational::one())),
            (
                IdentityId::I6,
                Box::new(|c| *c.b.last_mut().unwrap() += Rational::one()),
            ),
            (IdentityId::P1, Box::new(|c| c.lambda[0] += Rational::one())),
        ];
        for (id, corrupt) in faults {
            let mut coeffs = clean.clone();
            corrupt(&mut coeffs);
            let report =
                verify_with_coefficients(id, order, &coeffs, VerifyConfig::default()).unwrap();
            assert!(!report.passed, "{id} k={k} should fail");
            assert!(report.first_discrepancy.is_some());
            let good =
                verify_with_coefficients(id, order, &clean, VerifyConfig::default()).unwrap();
            assert!(good.passed);
        }
    }
}
