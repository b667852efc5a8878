//! Product formulas for the x-enumerations and the refined correlators at
//! the free-fermion and ice points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinat::{binomial, factorial, int};
use crate::error::{Error, Result};
use crate::exact::{QuadScalar, Radicand};
use crate::orthopoly::term_coefficients;

fn fact(n: usize) -> BigRational {
    BigRational::from_integer(factorial(n))
}

fn exact_integer(v: BigRational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonInteger {
            what: what(),
            value: v.to_string(),
        })
    }
}

/// `∏_{k=1}^{N} (3k−2)! / (2N−k)!`.
pub fn asm_count(n: usize) -> BigInt {
    let v = (1..=n).fold(BigRational::one(), |acc, k| acc * fact(3 * k - 2) / fact(2 * n - k));
    exact_integer(v, || format!("A({n})")).expect("product formula is integral")
}

/// `∏_{k=1}^{N} (3k−2)!(k−1)! / ((2k−1)!(2k−2)!)`.
pub fn asm_count_first_form(n: usize) -> BigInt {
    let v = (1..=n).fold(BigRational::one(), |acc, k| {
        acc * fact(3 * k - 2) * fact(k - 1) / (fact(2 * k - 1) * fact(2 * k - 2))
    });
    exact_integer(v, || format!("A({n})")).expect("product formula is integral")
}

/// `A(2m+1; 3)` and `A(2m+2; 3)`.
fn three_count(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let m = (n - 1) / 2;
    let odd = (1..=m).fold(num_traits::pow(int(3), m * (m + 1)), |acc, k| {
        let ratio = fact(3 * k - 1) / fact(m + k);
        acc * &ratio * &ratio
    });
    let value = if n % 2 == 1 {
        odd
    } else {
        let w = fact(2 * m + 1);
        odd * num_traits::pow(int(3), m) * fact(3 * m + 2) * fact(m) / (&w * &w)
    };
    exact_integer(value, || format!("A({n}; 3)")).expect("product formula is integral")
}

/// `A(N; x)` for `x ∈ {0, 1, 2, 3}`; `A(0; x) = 1`.
pub fn closed_count(n: usize, x: u32) -> Result<BigInt> {
    match x {
        0 => Ok(factorial(n)),
        1 => Ok(asm_count(n)),
        2 => Ok(BigInt::one() << (n * n.saturating_sub(1) / 2)),
        3 => Ok(three_count(n)),
        _ => Err(Error::UnsupportedWeight(x)),
    }
}

fn check_row(n: usize, r: usize) -> Result<()> {
    if n == 0 || r == 0 || r > n {
        return Err(Error::out_of_range("r", format!("{r} for N = {n}")));
    }
    Ok(())
}

/// `H_N^{(r)} = binom(N+r−2, N−1)·binom(2N−1−r, N−1) / binom(3N−2, N−1)`.
pub fn ice_correlator_closed(n: usize, r: usize) -> Result<BigRational> {
    check_row(n, r)?;
    let (n, r) = (n as i64, r as i64);
    Ok(BigRational::new(
        binomial(n + r - 2, n - 1) * binomial(2 * n - 1 - r, n - 1),
        binomial(3 * n - 2, n - 1),
    ))
}

/// `A(N, r; x)` for `x ∈ {1, 2}` from the refined product formulas.
pub fn closed_refined(n: usize, r: usize, x: u32) -> Result<BigInt> {
    check_row(n, r)?;
    let total = BigRational::from_integer(closed_count(n, x)?);
    let ratio = match x {
        1 => ice_correlator_closed(n, r)?,
        2 => BigRational::new(binomial(n as i64 - 1, r as i64 - 1), BigInt::one() << (n - 1)),
        _ => return Err(Error::UnsupportedWeight(x)),
    };
    exact_integer(ratio * total, || format!("A({n}, {r}; {x})"))
}

/// `α = tan²(φ/2)`, positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeFermionParameter {
    alpha: BigRational,
}

impl FreeFermionParameter {
    pub fn new(alpha: BigRational) -> Result<Self> {
        if alpha.is_positive() {
            Ok(Self { alpha })
        } else {
            Err(Error::out_of_range("alpha", alpha))
        }
    }

    /// λ = π/2, where φ = π/2 and α = 1.
    pub fn symmetric() -> Self {
        Self { alpha: int(1) }
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }
}

fn normalize(mut h: Vec<BigRational>) -> Vec<BigRational> {
    let total: BigRational = h.iter().sum();
    h.iter_mut().for_each(|v| *v /= &total);
    h
}

/// Free-fermion correlator from `α r H^{(r+1)} = (N−r) H^{(r)}`, normalized.
pub fn recurrence_refined_ff(n: usize, alpha: &FreeFermionParameter) -> Vec<BigRational> {
    let a = alpha.alpha();
    let mut h = vec![BigRational::one()];
    for r in 1..n {
        let prev = h.last().expect("seeded");
        h.push(prev * int((n - r) as i64) / (a * int(r as i64)));
    }
    normalize(h)
}

/// `H_N^{(r)} = binom(N−1, r−1) α^{N−r} / (1+α)^{N−1}`.
pub fn ff_correlator_closed(n: usize, alpha: &FreeFermionParameter) -> Vec<BigRational> {
    let a = alpha.alpha();
    let denom = num_traits::pow(a + int(1), n - 1);
    (1..=n)
        .map(|r| {
            BigRational::from_integer(binomial(n as i64 - 1, r as i64 - 1)) * num_traits::pow(a.clone(), n - r) / &denom
        })
        .collect()
}

/// `α r H^{(r+1)} − (N−r) H^{(r)}` for `r = 1..N−1`.
pub fn ff_recurrence_residuals(h: &[BigRational], alpha: &FreeFermionParameter) -> Vec<BigRational> {
    let n = h.len();
    (1..n)
        .map(|r| alpha.alpha() * int(r as i64) * &h[r] - int((n - r) as i64) * &h[r - 1])
        .collect()
}

/// Ice correlator from `r(r−2N+1) H^{(r+1)} = (r−N)(N+r−1) H^{(r)}`, normalized.
pub fn recurrence_refined_ice(n: usize) -> Vec<BigRational> {
    let nn = n as i64;
    let mut h = vec![BigRational::one()];
    for r in 1..nn {
        let prev = h.last().expect("seeded");
        h.push(prev * int((r - nn) * (nn + r - 1)) / int(r * (r - 2 * nn + 1)));
    }
    normalize(h)
}

/// `r(r−2N+1) H^{(r+1)} − (r−N)(N+r−1) H^{(r)}` for `r = 1..N−1`.
pub fn ice_recurrence_residuals(h: &[BigRational]) -> Vec<BigRational> {
    let nn = h.len() as i64;
    (1..nn)
        .map(|r| {
            let i = r as usize;
            int(r * (r - 2 * nn + 1)) * &h[i] - int((r - nn) * (nn + r - 1)) * &h[i - 1]
        })
        .collect()
}

/// Coefficients of `H_N(z) = (2N−1)!(2N−2)!/((N−1)!(3N−2)!) · ₂F₁(1−N, N; 2−2N; z)`
/// in increasing powers of `z`.
pub fn generating_function_ice(n: usize) -> Result<Vec<BigRational>> {
    if n == 0 {
        return Err(Error::out_of_range("N", n));
    }
    let nn = n as i64;
    let terms = term_coefficients(&[int(1 - nn), int(nn)], &[int(2 - 2 * nn)])?;
    let prefactor = fact(2 * n - 1) * fact(2 * n - 2) / (fact(n - 1) * fact(3 * n - 2));
    Ok(terms.into_iter().map(|t| t * &prefactor).collect())
}

/// `H_N(1)`, which is 1 by Chu–Vandermonde.
pub fn generating_function_ice_at_one(n: usize) -> Result<QuadScalar> {
    let sum: BigRational = generating_function_ice(n)?.iter().sum();
    Ok(QuadScalar::from_rational(sum, Radicand::Three))
}

/// True when every entry of the slice is zero.
pub fn all_zero(values: &[BigRational]) -> bool {
    values.iter().all(Zero::is_zero)
}
