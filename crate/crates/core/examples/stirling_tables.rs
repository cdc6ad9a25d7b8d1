//! Print small Stirling tables and the a/b coefficients built from them.
//!
//! cargo run --example stirling_tables -- 8

use euler_stirling::stirling::{a_coeff, b_coeff, m_determinant, stirling1, stirling2};

fn main() -> euler_stirling::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);

    println!("S(n,k), second kind");
    for row in 0..=n {
        let cells: Vec<String> = (0..=row as i64)
            .map(|k| stirling2(row, k).to_string())
            .collect();
        println!("{row:>3}: {}", cells.join(" "));
    }

    println!("\ns(n,k), first kind (signed)");
    for row in 0..=n {
        let cells: Vec<String> = (0..=row as i64)
            .map(|k| stirling1(row, k).to_string())
            .collect();
        println!("{row:>3}: {}", cells.join(" "));
    }

    println!("\nM_2(2,1) = {}", m_determinant(2, 2, 1)?);
    let k = 4;
    for m in 1..=k {
        println!(
            "a({k},{m}) = {:<8} b({k},{m}) = {}",
            a_coeff(k, m)?,
            b_coeff(k, m)?
        );
    }
    Ok(())
}
