use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::{close_group, MatrixGroup, DEFAULT_CAP};
use crate::algebra::{rat, Matrix, Rational};
use crate::error::GroupError;

/// Classical Weyl group families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeylType {
    /// S_n permuting coordinates of the sum-zero hyperplane, realized in
    /// rank n-1 by eliminating the last coordinate.
    A,
    /// Signed permutations of n coordinates.
    B,
    C,
    /// Permutations with an even number of sign changes.
    D,
    /// S_n permuting n coordinates (the Weyl group of U(n)).
    U,
    /// Identity only.
    Torus,
    Trivial,
}

impl FromStr for WeylType {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "A" => WeylType::A,
            "B" => WeylType::B,
            "C" => WeylType::C,
            "D" => WeylType::D,
            "U" => WeylType::U,
            "torus" => WeylType::Torus,
            "trivial" => WeylType::Trivial,
            _ => {
                return Err(GroupError::InvalidType {
                    kind: s.to_string(),
                    n: 0,
                })
            }
        })
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WeylType::A => "A",
            WeylType::B => "B",
            WeylType::C => "C",
            WeylType::D => "D",
            WeylType::U => "U",
            WeylType::Torus => "torus",
            WeylType::Trivial => "trivial",
        };
        f.write_str(s)
    }
}

fn permutation_matrix(n: usize, perm: &[usize]) -> Matrix {
    let mut rows = vec![vec![Rational::zero(); n]; n];
    for (i, &j) in perm.iter().enumerate() {
        rows[i][j] = rat(1);
    }
    Matrix::from_rows(rows).expect("square")
}

fn transposition(n: usize, i: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(i, i + 1);
    p
}

/// Substitution matrix of a permutation of t_1..t_n acting on the sum-zero
/// model with coordinates t_1..t_{n-1} and t_n = -(t_1 + ... + t_{n-1}).
fn sum_zero_permutation(n: usize, perm: &[usize]) -> Matrix {
    let r = n - 1;
    let rows = (0..r)
        .map(|i| {
            let target = perm[i];
            if target < r {
                (0..r).map(|j| rat((j == target) as i64)).collect()
            } else {
                vec![rat(-1); r]
            }
        })
        .collect();
    Matrix::from_rows(rows).unwrap_or_else(|_| Matrix::zeros(r, r))
}

/// The standard Weyl group action of the given type.
pub fn weyl_standard(kind: WeylType, n: usize) -> Result<MatrixGroup, GroupError> {
    let invalid = || GroupError::InvalidType {
        kind: kind.to_string(),
        n,
    };
    let (rank, gens): (usize, Vec<Matrix>) = match kind {
        WeylType::Torus | WeylType::Trivial => (n, vec![]),
        WeylType::A => {
            if n == 0 {
                return Err(invalid());
            }
            let gens = (0..n - 1).map(|i| sum_zero_permutation(n, &transposition(n, i))).collect();
            (n - 1, gens)
        }
        WeylType::U => {
            if n == 0 {
                return Err(invalid());
            }
            (n, (0..n - 1).map(|i| permutation_matrix(n, &transposition(n, i))).collect())
        }
        WeylType::B | WeylType::C => {
            if n == 0 {
                return Err(invalid());
            }
            let mut gens: Vec<Matrix> = (0..n - 1).map(|i| permutation_matrix(n, &transposition(n, i))).collect();
            let mut signs = vec![1; n];
            signs[n - 1] = -1;
            gens.push(Matrix::diagonal(&signs));
            (n, gens)
        }
        WeylType::D => {
            if n == 0 {
                return Err(invalid());
            }
            let mut gens: Vec<Matrix> = (0..n - 1).map(|i| permutation_matrix(n, &transposition(n, i))).collect();
            if n >= 2 {
                // swap the last two coordinates and negate both
                let mut rows = vec![vec![Rational::zero(); n]; n];
                for (i, row) in rows.iter_mut().enumerate().take(n - 2) {
                    row[i] = rat(1);
                }
                rows[n - 2][n - 1] = rat(-1);
                rows[n - 1][n - 2] = rat(-1);
                gens.push(Matrix::from_rows(rows).expect("square"));
            }
            (n, gens)
        }
    };
    close_group(rank, &gens, DEFAULT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn classical_orders() {
        for n in 1..=4 {
            assert_eq!(weyl_standard(WeylType::B, n).unwrap().order(), (1 << n) * factorial(n));
            assert_eq!(weyl_standard(WeylType::C, n).unwrap().order(), (1 << n) * factorial(n));
            assert_eq!(weyl_standard(WeylType::D, n).unwrap().order(), (1 << (n - 1)) * factorial(n));
            let a = weyl_standard(WeylType::A, n).unwrap();
            assert_eq!(a.order(), factorial(n));
            assert_eq!(a.rank(), n - 1);
            assert_eq!(weyl_standard(WeylType::U, n).unwrap().order(), factorial(n));
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(weyl_standard(WeylType::C, 2).unwrap().order(), 8);
        let a1 = weyl_standard(WeylType::A, 2).unwrap();
        assert_eq!((a1.order(), a1.rank()), (2, 1));
        assert_eq!(a1.elements()[1], Matrix::from_ints(&[&[-1]]));
        let t = weyl_standard(WeylType::Torus, 3).unwrap();
        assert_eq!((t.order(), t.rank()), (1, 3));
        assert_eq!(weyl_standard(WeylType::Trivial, 0).unwrap().order(), 1);
        assert!(weyl_standard(WeylType::A, 0).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("C".parse::<WeylType>().unwrap(), WeylType::C);
        assert!("E".parse::<WeylType>().is_err());
    }
}
