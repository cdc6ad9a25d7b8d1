//! Exact Stirling, Bernoulli, Apostol-Bernoulli and Euler computations.
//!
//! Every family is computed twice: once from an explicit formula in
//! Stirling numbers of the second kind, and once by expanding its
//! generating function as a truncated Laurent series over exact rationals.
//! The [`verify`] module uses the same series engine to check the
//! derivative and power identities for `1/(e^t - 1)` and its relatives.
//!
//! Runnable programs, one per capability (`cargo run --example <name>`):
//!
//! | example | covers |
//! |---|---|
//! | `stirling_tables` | [`stirling2`], [`stirling1`], the determinant coefficients |
//! | `bernoulli` | Bernoulli numbers, formula against series |
//! | `apostol_bernoulli` | Apostol-Bernoulli numbers for rational lambda |
//! | `euler_polynomials` | Euler polynomials and numbers |
//! | `two_param_euler` | `E_n(x; alpha, lambda)` and its reductions |
//! | `series_oracle` | [`LaurentSeries`] arithmetic and precision |
//! | `identity_sweep` | every identity in [`verify`] over a range of k |
//!
//! ```
//! use euler_stirling::{stirling2, sequences::bernoulli_oracle, Rational};
//!
//! assert_eq!(stirling2(4, 2), 7.into());
//! assert_eq!(bernoulli_oracle(2), Rational::new(1, 6).unwrap());
//! ```

pub mod arith;
pub mod cli;
pub mod error;
pub mod matrix;
pub mod polynomial;
pub mod sequences;
pub mod series;
pub mod stirling;
pub mod verify;

pub use arith::{binomial, factorial, parse_rational, Integer, Rational};
pub use error::{Error, Result};
pub use polynomial::Polynomial;
pub use series::LaurentSeries;
pub use stirling::{stirling1, stirling2, StirlingKind, StirlingTable};
pub use verify::{IdentityId, VerificationReport};
