//! Fraction-free (Bareiss) elimination over the rationals.
//!
//! Each row is first scaled to integers by the lcm of its denominators; the
//! elimination then runs entirely in `BigInt`, every division being exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Integer rows plus the product of the per-row scale factors.
struct Cleared {
    rows: Vec<Vec<BigInt>>,
    scale: BigInt,
}

fn clear_denominators(rows: &[Vec<BigRational>]) -> Cleared {
    let mut scale = BigInt::one();
    let rows = rows
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            scale *= &lcm;
            row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect();
    Cleared { rows, scale }
}

/// Upper-triangularizes the leading `n` columns in place.
///
/// Returns `None` when a column has no nonzero pivot, otherwise whether an odd
/// number of row swaps occurred.
fn bareiss_forward(rows: &mut [Vec<BigInt>], n: usize) -> Option<bool> {
    let mut odd_swaps = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..rows.len()).find(|&i| !rows[i][k].is_zero())?;
        if pivot != k {
            rows.swap(pivot, k);
            odd_swaps = !odd_swaps;
        }
        let (head, tail) = rows.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            let factor = row[k].clone();
            for j in (k + 1)..row.len() {
                let v = &row[j] * &pivot_row[k] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot_row[k].clone();
    }
    Some(odd_swaps)
}

fn check_square(matrix: &[Vec<BigRational>]) -> Result<usize> {
    let n = matrix.len();
    if let Some(bad) = matrix.iter().find(|row| row.len() != n) {
        return Err(Error::out_of_range("matrix row length", bad.len()));
    }
    Ok(n)
}

/// Exact determinant; the empty matrix has determinant 1.
pub fn determinant(matrix: &[Vec<BigRational>]) -> Result<BigRational> {
    let n = check_square(matrix)?;
    if n == 0 {
        return Ok(BigRational::one());
    }
    let Cleared { mut rows, scale } = clear_denominators(matrix);
    let Some(odd_swaps) = bareiss_forward(&mut rows, n) else {
        return Ok(BigRational::zero());
    };
    let mut det = rows[n - 1][n - 1].clone();
    if odd_swaps {
        det = -det;
    }
    Ok(BigRational::new(det, scale))
}

/// Solves `matrix · x = rhs` exactly.
pub fn solve(matrix: &[Vec<BigRational>], rhs: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = check_square(matrix)?;
    if rhs.len() != n {
        return Err(Error::out_of_range("right-hand side length", rhs.len()));
    }
    let augmented: Vec<Vec<BigRational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| row.iter().cloned().chain(std::iter::once(b.clone())).collect())
        .collect();
    let Cleared { mut rows, .. } = clear_denominators(&augmented);
    bareiss_forward(&mut rows, n).ok_or_else(|| Error::ZeroPivot("linear solve".into()))?;
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(rows[i][n].clone());
        for j in (i + 1)..n {
            acc -= BigRational::from_integer(rows[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(rows[i][i].clone());
    }
    Ok(x)
}

/// Cofactor expansion, exponential time. Test helper for small matrices.
pub fn determinant_by_expansion(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut total = BigRational::zero();
    for (col, entry) in matrix[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entry * determinant_by_expansion(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn needs_pivoting() {
        let m = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(determinant(&m).unwrap(), int(-1));
        let x = solve(&m, &[int(3), int(4)]).unwrap();
        assert_eq!(x, vec![int(4), int(3)]);
    }

    #[test]
    fn rational_entries() {
        let m = vec![vec![int(2), int(0)], vec![int(0), rat(16, 3)]];
        assert_eq!(determinant(&m).unwrap(), rat(32, 3));
        assert_eq!(determinant(&[]).unwrap(), int(1));
    }

    #[test]
    fn singular() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(determinant(&m).unwrap(), int(0));
        assert!(matches!(solve(&m, &[int(1), int(1)]), Err(Error::ZeroPivot(_))));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<BigRational>>> {
        (1usize..=4).prop_flat_map(|n| {
            prop::collection::vec(
                prop::collection::vec((-6i64..=6, 1i64..=4).prop_map(|(a, b)| rat(a, b)), n),
                n,
            )
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_expansion(m in small_matrix()) {
            prop_assert_eq!(determinant(&m).unwrap(), determinant_by_expansion(&m));
        }

        #[test]
        fn solve_round_trips(m in small_matrix()) {
            let n = m.len();
            let rhs: Vec<BigRational> = (0..n).map(|i| int(i as i64 + 1)).collect();
            if let Ok(x) = solve(&m, &rhs) {
                for (row, b) in m.iter().zip(&rhs) {
                    let lhs = row.iter().zip(&x).fold(BigRational::zero(), |acc, (a, v)| acc + a * v);
                    prop_assert_eq!(&lhs, b);
                }
            } else {
                prop_assert!(determinant(&m).unwrap().is_zero());
            }
        }
    }
}
