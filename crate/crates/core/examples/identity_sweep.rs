//! Check the eight derivative/power identities, the "+" pair and the
//! generalized pair over a range of k, printing one line per check.
//!
//! cargo run --release --example identity_sweep -- 6

use euler_stirling::verify::{
    default_order, verify_general_derivative, verify_general_power, verify_identity,
    verify_plus_identities,
};
use euler_stirling::{parse_rational, IdentityId, VerificationReport};

fn main() -> euler_stirling::Result<()> {
    let k_max: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let mut reports: Vec<VerificationReport> = Vec::new();

    for k in 1..=k_max {
        let order = default_order(k);
        for id in IdentityId::EIGHT {
            reports.push(verify_identity(id, k, order)?);
        }
        for id in [IdentityId::P1, IdentityId::P2] {
            reports.push(verify_plus_identities(id, k, order)?);
        }
        for (a, l) in [("1", "2"), ("-1/2", "1"), ("3", "-5/3")] {
            let (alpha, lambda) = (parse_rational(a)?, parse_rational(l)?);
            reports.push(verify_general_derivative(k, &alpha, &lambda, order)?);
            reports.push(verify_general_power(k, &alpha, &lambda, order)?);
        }
    }

    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} checks, {failed} failed", reports.len());
    if failed > 0 {
        std::process::exit(3);
    }
    Ok(())
}
