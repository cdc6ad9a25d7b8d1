//! The two-parameter Euler polynomials E_n(x; alpha, lambda) and their
//! reductions to the classical and Apostol cases.
//!
//! cargo run --example two_param_euler -- 3/2 2

use euler_stirling::parse_rational;
use euler_stirling::sequences::{
    outside_stated_domain, two_param_euler_formula, two_param_euler_oracle,
    verify_two_param_reductions,
};

fn main() -> euler_stirling::Result<()> {
    let mut args = std::env::args().skip(1);
    let alpha = parse_rational(&args.next().unwrap_or_else(|| "1/2".into()))?;
    let lambda = parse_rational(&args.next().unwrap_or_else(|| "3".into()))?;
    if outside_stated_domain(&lambda) {
        println!("note: lambda <= 0, the formula is checked against the series only");
    }

    let x = parse_rational("2/3")?;
    for n in 0..=5 {
        let p = two_param_euler_formula(n, &alpha, &lambda)?;
        assert_eq!(
            p.eval(&x),
            two_param_euler_oracle(n, &x, &alpha, &lambda, n + 8)?
        );
        println!("E_{n}(x; {alpha}, {lambda}) = {p}");
    }

    let ok = (0..=10).try_fold(true, |acc, n| {
        Ok::<_, euler_stirling::Error>(acc && verify_two_param_reductions(n, &alpha, &lambda)?)
    })?;
    println!(
        "\nreductions for n <= 10: {}",
        if ok { "hold" } else { "FAIL" }
    );
    Ok(())
}
