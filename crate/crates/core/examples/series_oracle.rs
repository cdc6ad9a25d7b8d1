//! Truncated Laurent series: the reciprocal kernels, precision tracking,
//! and reading a generating function back off.

use euler_stirling::series::{recip_exp_minus_one, recip_exp_plus_one};
use euler_stirling::{LaurentSeries, Rational};

fn show(name: &str, s: &LaurentSeries) {
    let terms: Vec<String> = s
        .terms()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| format!("{c}*t^{e}"))
        .collect();
    let tail = s
        .precision()
        .map(|p| format!(" + O(t^{p})"))
        .unwrap_or_default();
    println!("{name} = {}{tail}", terms.join(" + "));
}

fn main() -> euler_stirling::Result<()> {
    let g = recip_exp_minus_one(6)?;
    show("1/(e^t-1)", &g);
    show("1/(e^t+1)", &recip_exp_plus_one(6)?);

    // precision drops with each derivative
    let d2 = g.nth_derivative(2)?;
    show("(1/(e^t-1))''", &d2);

    // t/(e^t-1) carries B_n/n! as coefficients
    let g = recip_exp_minus_one(8)?;
    let t = LaurentSeries::monomial(Rational::one(), 1);
    let bern = t.mul(&g)?;
    for n in 0..6i64 {
        let mut factorial = Rational::one();
        for i in 1..=n {
            factorial *= &Rational::from(i);
        }
        println!("B_{n} = {}", bern.coeff(n)? * factorial);
    }

    // 1 + t + t^2/2 + ... inverted then inverted again
    let e = LaurentSeries::exp_linear(&Rational::one(), 8)?;
    let back = e.reciprocal()?.reciprocal()?;
    let (lo, hi) = e.common_window(&back).expect("overlapping windows");
    println!(
        "\n1/(1/e^t) == e^t on [{lo},{hi}): {}",
        e.equal_on_window(&back, lo, hi)?
    );
    Ok(())
}
