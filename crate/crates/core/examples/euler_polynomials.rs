//! Euler polynomials, Euler numbers and the alternating Stirling sum.

use euler_stirling::parse_rational;
use euler_stirling::sequences::{
    euler_number, euler_polynomial_formula, euler_polynomial_oracle, stirling_alternating_sum,
};

fn main() -> euler_stirling::Result<()> {
    let half = parse_rational("1/2")?;
    for n in 0..=6 {
        let p = euler_polynomial_formula(n);
        assert_eq!(p.eval(&half), euler_polynomial_oracle(n, &half, n + 8)?);
        println!("E_{n}(x) = {p}");
    }

    println!();
    for n in 0..=12 {
        println!("E_{n:<2} = {}", euler_number(n)?);
    }

    // a double alternating sum over S(2n-k, l); it restates E_{2n-1} = 0
    println!();
    for n in 1..=8 {
        println!(
            "alternating Stirling sum, n={n}: {}",
            stirling_alternating_sum(n)?
        );
    }
    Ok(())
}
