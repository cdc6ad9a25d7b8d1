//! Apostol-Bernoulli numbers for a few rational lambda.
//!
//! cargo run --example apostol_bernoulli -- 1/2

use euler_stirling::sequences::{
    apostol_bernoulli_formula, apostol_bernoulli_oracle, default_oracle_order,
};
use euler_stirling::{parse_rational, Rational};

fn main() -> euler_stirling::Result<()> {
    let lambdas: Vec<Rational> = match std::env::args().nth(1) {
        Some(s) => vec![parse_rational(&s)?],
        None => ["2", "-1", "1/2", "-5/3"]
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<_, _>>()?,
    };

    for lambda in &lambdas {
        println!("lambda = {lambda}");
        for n in 1..=8 {
            let f = apostol_bernoulli_formula(n, lambda)?;
            let o = apostol_bernoulli_oracle(n, lambda, default_oracle_order(n))?;
            assert_eq!(f, o);
            println!("  B_{n}({lambda}) = {f}");
        }
    }

    // lambda = 1 is a pole of the closed form; the series still works
    match apostol_bernoulli_formula(2, &Rational::one()) {
        Err(e) => println!("\nformula at lambda=1: {e}"),
        Ok(v) => println!("\nformula at lambda=1: {v}"),
    }
    println!(
        "oracle  at lambda=1: B_2 = {}",
        apostol_bernoulli_oracle(2, &Rational::one(), 10)?
    );
    Ok(())
}
