//! Stirling numbers of both kinds and the coefficient families built on them.
//!
//! Both kinds are served from memoized triangular tables grown by their
//! recurrences. The explicit alternating sum for `S(n, k)` and the
//! determinant form of `s(n, k)` are kept as independent checks.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, Integer, Rational};
use crate::error::{Error, Result};
use crate::matrix::determinant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// `S(n, k)`, set partitions into `k` blocks.
    Second,
    /// Signed `s(n, k)`, coefficients of the falling factorial.
    FirstSigned,
}

/// Triangular table `rows[n][k]` for `0 <= k <= n`, extended on demand.
/// Entries never change once computed.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<Integer>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind) -> Self {
        StirlingTable {
            kind,
            rows: vec![vec![Integer::one()]],
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    /// Number of completed rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Grows the table so that row `n` exists.
    pub fn ensure(&mut self, n: u32) {
        while self.rows.len() <= n as usize {
            let m = self.rows.len();
            let prev = &self.rows[m - 1];
            let mut row = vec![Integer::zero(); m + 1];
            for k in 1..=m {
                let diag = &prev[k - 1];
                let same = prev.get(k);
                row[k] = match (self.kind, same) {
                    (_, None) => diag.clone(),
                    // S(m,k) = k S(m-1,k) + S(m-1,k-1)
                    (StirlingKind::Second, Some(s)) => diag + s * k,
                    // s(m,k) = s(m-1,k-1) - (m-1) s(m-1,k)
                    (StirlingKind::FirstSigned, Some(s)) => diag - s * (m - 1),
                };
            }
            self.rows.push(row);
        }
    }

    /// Value at `(n, k)` if row `n` has been computed; zero outside the triangle.
    pub fn get(&self, n: u32, k: i64) -> Option<Integer> {
        let row = self.rows.get(n as usize)?;
        if k < 0 || k > n as i64 {
            return Some(Integer::zero());
        }
        Some(row[k as usize].clone())
    }

    pub fn row(&self, n: u32) -> Option<&[Integer]> {
        self.rows.get(n as usize).map(Vec::as_slice)
    }
}

fn shared(kind: StirlingKind) -> &'static RwLock<StirlingTable> {
    static SECOND: OnceLock<RwLock<StirlingTable>> = OnceLock::new();
    static FIRST: OnceLock<RwLock<StirlingTable>> = OnceLock::new();
    let cell = match kind {
        StirlingKind::Second => &SECOND,
        StirlingKind::FirstSigned => &FIRST,
    };
    cell.get_or_init(|| RwLock::new(StirlingTable::new(kind)))
}

fn lookup(kind: StirlingKind, n: u32, k: i64) -> Integer {
    let table = shared(kind);
    if let Some(v) = table.read().expect("stirling table poisoned").get(n, k) {
        return v;
    }
    let mut guard = table.write().expect("stirling table poisoned");
    guard.ensure(n);
    guard.get(n, k).expect("row just computed")
}

/// Stirling number of the second kind `S(n, k)`; zero outside `0 <= k <= n`
/// and at `k = 0 < n`.
pub fn stirling2(n: u32, k: i64) -> Integer {
    lookup(StirlingKind::Second, n, k)
}

/// Signed Stirling number of the first kind `s(n, k)`.
pub fn stirling1(n: u32, k: i64) -> Integer {
    lookup(StirlingKind::FirstSigned, n, k)
}

/// `S(n, k)` from the closed alternating sum `(1/k!) Σ (-1)^(k-l) C(k,l) l^n`.
/// Independent of the recurrence table.
pub fn stirling2_explicit(n: u32, k: i64) -> Integer {
    if k < 0 || k > n as i64 {
        return Integer::zero();
    }
    if k == 0 {
        return if n == 0 {
            Integer::one()
        } else {
            Integer::zero()
        };
    }
    let k = k as u32;
    let sum = (1..=k).fold(Integer::zero(), |acc, l| {
        let term = binomial(k, l as i64) * num_traits::pow(Integer::from(l), n as usize);
        if (k - l) % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    });
    sum / factorial(k)
}

fn signed(exp: i64, value: Integer) -> Integer {
    if exp.rem_euclid(2) == 0 {
        value
    } else {
        -value
    }
}

fn check_lambda_range(k: u32, m: u32) -> Result<()> {
    if k == 0 || m == 0 || m > k + 1 {
        return Err(Error::Domain(format!(
            "need k >= 1 and 1 <= m <= k+1, got k={k}, m={m}"
        )));
    }
    Ok(())
}

/// `λ_{k,m} = (-1)^k (m-1)! S(k+1, m)` for `1 <= m <= k+1`.
pub fn lambda_coeff(k: u32, m: u32) -> Result<Integer> {
    check_lambda_range(k, m)?;
    Ok(signed(
        k as i64,
        factorial(m - 1) * stirling2(k + 1, m as i64),
    ))
}

/// `μ_{k,m} = (-1)^(m-1) (m-1)! S(k+1, m)` for `1 <= m <= k+1`.
pub fn mu_coeff(k: u32, m: u32) -> Result<Integer> {
    check_lambda_range(k, m)?;
    Ok(signed(
        m as i64 - 1,
        factorial(m - 1) * stirling2(k + 1, m as i64),
    ))
}

/// The `j × j` determinant `M_j(k, i)`.
///
/// Row `r` (1-based) starts with `C(k, i+r-1) / (i+r-2)!`; the entry in
/// column `c >= 2` is `S(i+c-1, i+r-1)`, which vanishes below the
/// subdiagonal.
pub fn m_determinant(j: u32, k: u32, i: u32) -> Result<Rational> {
    if j == 0 || k == 0 || i == 0 {
        return Err(Error::Domain(format!(
            "need j, k, i >= 1, got j={j}, k={k}, i={i}"
        )));
    }
    let matrix = (1..=j)
        .map(|r| {
            let lower = i + r - 1;
            let mut row = Vec::with_capacity(j as usize);
            row.push(
                Rational::new(binomial(k, lower as i64), factorial(lower - 1))
                    .expect("factorial is nonzero"),
            );
            row.extend((2..=j).map(|c| Rational::from(stirling2(i + c - 1, lower as i64))));
            row
        })
        .collect();
    Ok(determinant(matrix))
}

fn check_a_range(k: u32, m: u32) -> Result<()> {
    if k == 0 || m == 0 || m > k {
        return Err(Error::Domain(format!("need 1 <= m <= k, got k={k}, m={m}")));
    }
    Ok(())
}

/// The coefficient written `a_{k,m-1}` in the power-to-derivatives
/// identities, indexed here by `m` (`1 <= m <= k`):
/// `(-1)^(m^2+1) M_{k-m+1}(k, m)`.
pub fn a_coeff(k: u32, m: u32) -> Result<Rational> {
    check_a_range(k, m)?;
    let m2 = m as i64 * m as i64;
    Ok(Rational::sign_power(m2 + 1) * m_determinant(k - m + 1, k, m)?)
}

/// `b_{k,m-1} = (-1)^(k-m) a_{k,m-1}`, indexed by `m` (`1 <= m <= k`).
pub fn b_coeff(k: u32, m: u32) -> Result<Rational> {
    Ok(Rational::sign_power(k as i64 - m as i64) * a_coeff(k, m)?)
}

/// Checks `s(n,k) = (-1)^(n+k^2) (n-1)! M_{n-k+1}(n, k)` exactly.
pub fn verify_first_kind_determinant_relation(n: u32, k: u32) -> Result<bool> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    let det = m_determinant(n - k + 1, n, k)?;
    let rhs = Rational::sign_power(n as i64 + k as i64 * k as i64)
        * Rational::from(factorial(n - 1))
        * det;
    Ok(rhs == Rational::from(stirling1(n, k as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Integer {
        Integer::from(n)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    /// Counts set partitions of `{0..n}` into exactly `k` nonempty blocks
    /// by enumerating restricted growth strings.
    fn count_partitions(n: usize, k: usize) -> u64 {
        fn go(pos: usize, n: usize, k: usize, used: usize) -> u64 {
            if pos == n {
                return (used == k) as u64;
            }
            let mut total = 0;
            for block in 0..=used.min(k.saturating_sub(1)) {
                let next = if block == used { used + 1 } else { used };
                if next <= k {
                    total += go(pos + 1, n, k, next);
                }
            }
            total
        }
        go(0, n, k, 0)
    }

    #[test]
    fn stirling2_examples() {
        assert_eq!(count_partitions(4, 2), 7);
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling2_explicit(5, 3), int(25));
        assert_eq!(stirling2(5, 3), int(25));
        for n in 0..10 {
            assert_eq!(stirling2(n, n as i64), int(1));
        }
    }

    #[test]
    fn stirling2_matches_partition_count() {
        for n in 0..=8usize {
            for k in 0..=n {
                assert_eq!(
                    stirling2(n as u32, k as i64),
                    int(count_partitions(n, k) as i64),
                    "S({n},{k})"
                );
            }
        }
    }

    #[test]
    fn out_of_triangle_is_zero() {
        assert_eq!(stirling2(3, 4), int(0));
        assert_eq!(stirling2(3, -1), int(0));
        assert_eq!(stirling2(3, 0), int(0));
        assert_eq!(stirling2(0, 0), int(1));
        assert_eq!(stirling1(3, 0), int(0));
        assert_eq!(stirling1(2, 5), int(0));
    }

    #[test]
    fn table_boundary_invariants() {
        let mut second = StirlingTable::new(StirlingKind::Second);
        let mut first = StirlingTable::new(StirlingKind::FirstSigned);
        second.ensure(15);
        first.ensure(15);
        assert_eq!(second.len(), 16);
        for n in 1..=15 {
            assert_eq!(second.get(n, 1), Some(int(1)));
            assert_eq!(second.get(n, n as i64), Some(int(1)));
            assert_eq!(second.get(n, 0), Some(int(0)));
            assert_eq!(first.get(n, n as i64), Some(int(1)));
            assert_eq!(first.get(n, 0), Some(int(0)));
        }
        assert_eq!(second.get(16, 1), None);
        let before = second.row(10).unwrap().to_vec();
        second.ensure(30);
        assert_eq!(second.row(10).unwrap(), &before[..]);
    }

    #[test]
    fn recurrence_matches_explicit_sum() {
        for n in 1..=25u32 {
            for k in 1..=n as i64 {
                assert_eq!(stirling2(n, k), stirling2_explicit(n, k), "S({n},{k})");
            }
        }
    }

    #[test]
    fn stirling1_examples() {
        assert_eq!(stirling1(3, 2), int(-3));
        assert_eq!(stirling1(4, 2), int(11));
        for n in 0..10 {
            assert_eq!(stirling1(n, n as i64), int(1));
        }
    }

    #[test]
    fn stirling1_is_falling_factorial() {
        // Expand x(x-1)...(x-n+1) directly, coefficient vector indexed by degree.
        let mut poly = vec![int(1)];
        for n in 1..=20u32 {
            let shift = int(n as i64 - 1);
            let mut next = vec![int(0); poly.len() + 1];
            for (d, c) in poly.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &shift;
            }
            poly = next;
            for (k, c) in poly.iter().enumerate() {
                assert_eq!(&stirling1(n, k as i64), c, "s({n},{k})");
            }
        }
    }

    #[test]
    fn lambda_mu_examples() {
        assert_eq!(lambda_coeff(1, 1).unwrap(), int(-1));
        assert_eq!(lambda_coeff(2, 2).unwrap(), int(3));
        assert_eq!(lambda_coeff(2, 3).unwrap(), int(2));
        assert_eq!(mu_coeff(2, 2).unwrap(), int(-3));
        assert_eq!(mu_coeff(1, 1).unwrap(), int(1));
        assert!(matches!(lambda_coeff(2, 4), Err(Error::Domain(_))));
        assert!(matches!(mu_coeff(2, 0), Err(Error::Domain(_))));
        assert!(matches!(lambda_coeff(0, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn mu_is_sign_flipped_lambda() {
        for k in 1..=12u32 {
            for m in 1..=k + 1 {
                let sign = if (k + m - 1) % 2 == 0 {
                    int(1)
                } else {
                    int(-1)
                };
                assert_eq!(mu_coeff(k, m).unwrap(), sign * lambda_coeff(k, m).unwrap());
            }
        }
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(m_determinant(1, 3, 3).unwrap(), q(1, 2));
        assert_eq!(m_determinant(2, 2, 1).unwrap(), q(1, 1));
        assert_eq!(m_determinant(1, 1, 1).unwrap(), q(1, 1));
        assert!(m_determinant(0, 1, 1).is_err());
    }

    #[test]
    fn a_b_examples() {
        assert_eq!(a_coeff(1, 1).unwrap(), q(1, 1));
        assert_eq!(a_coeff(2, 1).unwrap(), q(1, 1));
        assert_eq!(a_coeff(2, 2).unwrap(), q(-1, 1));
        assert_eq!(b_coeff(2, 1).unwrap(), q(-1, 1));
        assert_eq!(b_coeff(2, 2).unwrap(), q(-1, 1));
        assert_eq!(b_coeff(1, 1).unwrap(), q(1, 1));
        assert!(matches!(a_coeff(2, 3), Err(Error::Domain(_))));
        assert!(matches!(b_coeff(3, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn square_sign_equals_linear_sign() {
        for m in 0..50i64 {
            assert_eq!(Rational::sign_power(m * m + 1), Rational::sign_power(m + 1));
        }
    }

    #[test]
    fn first_kind_determinant_relation() {
        assert!(verify_first_kind_determinant_relation(3, 3).unwrap());
        assert!(verify_first_kind_determinant_relation(4, 2).unwrap());
        assert!(verify_first_kind_determinant_relation(1, 1).unwrap());
        for n in 1..=12 {
            for k in 1..=n {
                assert!(
                    verify_first_kind_determinant_relation(n, k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
        assert!(verify_first_kind_determinant_relation(2, 3).is_err());
    }

    #[test]
    fn concurrent_lookups_agree() {
        let handles: Vec<_> = (0..8u32)
            .map(|t| {
                std::thread::spawn(move || (0..60).map(|n| stirling2(n + t, 3)).collect::<Vec<_>>())
            })
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let got = h.join().unwrap();
            for (n, v) in got.into_iter().enumerate() {
                assert_eq!(v, stirling2_explicit(n as u32 + t as u32, 3));
            }
        }
    }
}
