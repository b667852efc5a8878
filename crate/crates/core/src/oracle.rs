//! Brute-force weighted enumeration of domain-wall configurations by a row
//! transfer scan over bitmask states.
//!
//! In the line picture, `N` lines enter through the top and leave through the
//! left edge. Scanning each row right to left, a cell sees the vertical edge
//! above it (`top`) and the horizontal edge to its right (`right`):
//!
//! | top | right | bottom | left | ASM entry |
//! |-----|-------|--------|------|-----------|
//! | 0   | 0     | 0      | 0    | 0         |
//! | 1   | 1     | 1      | 1    | 0         |
//! | 1   | 0     | 1      | 0    | 0         |
//! | 1   | 0     | 0      | 1    | +1        |
//! | 0   | 1     | 0      | 1    | 0         |
//! | 0   | 1     | 1      | 0    | −1 (×x)   |

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hankel::EnumerationTable;

pub const DEFAULT_LIMIT: usize = 7;

/// `Σ_k c_k x^k`, with `c_k` the number of matrices having `k` entries −1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightPolynomial {
    coeffs: Vec<BigInt>,
}

impl WeightPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn evaluate(&self, x: u32) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    fn add_assign(&mut self, other: &Self, shift: usize) {
        if self.coeffs.len() < other.coeffs.len() + shift {
            self.coeffs.resize(other.coeffs.len() + shift, BigInt::zero());
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            self.coeffs[k + shift] += c;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other, 0);
        out
    }
}

/// `(vertical mask, horizontal edge, r)` with `r = 0` while undetermined.
type CellState = (u32, bool, usize);

/// Generating polynomials of refined enumerations, indexed `r − 1`.
pub fn transfer_refined(n: usize) -> Result<Vec<WeightPolynomial>> {
    transfer_refined_with_limit(n, DEFAULT_LIMIT)
}

pub fn transfer_refined_with_limit(n: usize, limit: usize) -> Result<Vec<WeightPolynomial>> {
    if n == 0 || n > limit || n > 31 {
        return Err(Error::OracleLimit { n, limit });
    }
    let full: u32 = (1u32 << n) - 1;
    let mut rows: HashMap<(u32, usize), WeightPolynomial> = HashMap::new();
    rows.insert((full, 0), WeightPolynomial::one());

    for row in 0..n {
        let r_here = n - row;
        let mut cells: HashMap<CellState, WeightPolynomial> =
            rows.into_iter().map(|((mask, r), w)| ((mask, false, r), w)).collect();
        for col in (0..n).rev() {
            let bit = 1u32 << col;
            let mut next: HashMap<CellState, WeightPolynomial> = HashMap::new();
            let mut push = |key: CellState, w: &WeightPolynomial, shift: usize| {
                next.entry(key).or_default().add_assign(w, shift);
            };
            for (&(mask, right, r), w) in &cells {
                let top = mask & bit != 0;
                match (top, right) {
                    (false, false) | (true, true) => push((mask, right, r), w, 0),
                    (true, false) => {
                        push((mask, false, r), w, 0);
                        let r = if col == n - 1 { r_here } else { r };
                        push((mask & !bit, true, r), w, 0);
                    }
                    (false, true) => {
                        push((mask, true, r), w, 0);
                        push((mask | bit, false, r), w, 1);
                    }
                }
            }
            cells = next;
        }
        rows = HashMap::new();
        for ((mask, left, r), w) in cells {
            if left {
                rows.entry((mask, r)).or_default().add_assign(&w, 0);
            }
        }
    }

    let mut out = vec![WeightPolynomial::default(); n];
    for ((mask, r), w) in rows {
        debug_assert_eq!(mask, 0);
        if mask == 0 && r >= 1 {
            out[r - 1].add_assign(&w, 0);
        }
    }
    Ok(out)
}

/// Refined and total counts at weight `x ∈ {0, 1, 2, 3}`.
pub fn oracle_counts(n: usize, x: u32) -> Result<EnumerationTable> {
    if x > 3 {
        return Err(Error::UnsupportedWeight(x));
    }
    let polys = transfer_refined(n)?;
    let refined: Vec<BigInt> = polys.iter().map(|p| p.evaluate(x)).collect();
    Ok(EnumerationTable {
        weight_x: x,
        size: n,
        total: refined.iter().sum(),
        refined,
    })
}
