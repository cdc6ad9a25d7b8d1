//! Bernoulli numbers two ways: the closed form in Stirling numbers, and the
//! coefficients of t/(e^t - 1).

use euler_stirling::sequences::{bernoulli_formula, bernoulli_oracle};

fn main() -> euler_stirling::Result<()> {
    for n in 0..=20u32 {
        let oracle = bernoulli_oracle(n);
        let formula = if n >= 2 && n % 2 == 0 {
            let b = bernoulli_formula(n / 2)?;
            assert_eq!(b, oracle);
            "agrees"
        } else {
            "-"
        };
        println!("B_{n:<2} = {oracle:<16} formula: {formula}");
    }
    Ok(())
}
