//! Exact determinants over [`Rational`].

use crate::arith::Rational;

/// Determinant of a square matrix by fraction-exact Gaussian elimination,
/// pivoting on the first nonzero entry of each column.
///
/// The empty matrix has determinant 1.
pub fn determinant(mut rows: Vec<Vec<Rational>>) -> Rational {
    let n = rows.len();
    assert!(
        rows.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );

    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let pivot_value = rows[col][col].clone();
        det *= &pivot_value;
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot_value;
            for c in col..n {
                let delta = &factor * &rows[col][c];
                rows[r][c] -= &delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    // Leibniz expansion over all permutations.
    fn leibniz(m: &[Vec<Rational>]) -> Rational {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.len();
        permutations(n)
            .into_iter()
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let prod = (0..n).fold(Rational::one(), |acc, i| acc * &m[i][p[i]]);
                if inversions % 2 == 0 {
                    prod
                } else {
                    -prod
                }
            })
            .sum()
    }

    #[test]
    fn small_cases() {
        assert_eq!(determinant(vec![]), q(1));
        assert_eq!(determinant(vec![vec![q(2), q(1)], vec![q(1), q(1)]]), q(1));
        // needs a row swap
        assert_eq!(determinant(vec![vec![q(0), q(1)], vec![q(1), q(0)]]), q(-1));
        assert_eq!(determinant(vec![vec![q(1), q(2)], vec![q(2), q(4)]]), q(0));
    }

    #[test]
    fn agrees_with_leibniz() {
        // deterministic pseudo-random entries, including zeros and fractions
        let mut state = 12345u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for n in 1..=5 {
            for _ in 0..20 {
                let m: Vec<Vec<Rational>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| Rational::new(next(), next().abs() + 1).unwrap())
                            .collect()
                    })
                    .collect();
                assert_eq!(determinant(m.clone()), leibniz(&m));
            }
        }
    }
}
