//! Hankel determinants, the partition function, and the bordered-determinant
//! boundary correlator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::exact::{QuadScalar, TaylorSeries, TrigKind};
use crate::linalg;
use crate::moments::{cot_derivative_moments, SpecialPoint};

/// `[q_{j+k}]` for `0 ≤ j, k < n`.
pub fn hankel_matrix(q: &[BigRational], n: usize) -> Result<Vec<Vec<BigRational>>> {
    if n > 0 && q.len() < 2 * n - 1 {
        return Err(Error::InsufficientMoments {
            needed: 2 * n - 2,
            available: q.len(),
        });
    }
    Ok((0..n).map(|j| (0..n).map(|k| q[j + k].clone()).collect()).collect())
}

/// Determinant of the `n × n` Hankel matrix built from `q`.
pub fn hankel_determinant(q: &[BigRational], n: usize) -> Result<BigRational> {
    linalg::determinant(&hankel_matrix(q, n)?)
}

/// Reduced determinant `det[q_{j+k}]` at a special point.
pub fn reduced_determinant(point: SpecialPoint, n: usize) -> Result<BigRational> {
    if n == 0 {
        return Ok(BigRational::one());
    }
    let ms = cot_derivative_moments(point, 2 * n - 2);
    hankel_determinant(ms.reduced_moments(), n)
}

/// `det Z`, restoring the `tan η` factor of every column.
pub fn moment_determinant(point: SpecialPoint, n: usize) -> Result<QuadScalar> {
    let reduced = reduced_determinant(point, n)?;
    Ok(point.tan_eta().pow(n as i64)?.scale(&reduced))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionValue {
    pub value: QuadScalar,
    pub point: SpecialPoint,
    pub size: usize,
}

fn superfactorial_squared(n: usize) -> BigRational {
    let prod = (1..n).fold(BigInt::one(), |acc, k| acc * factorial(k));
    BigRational::from_integer(&prod * &prod)
}

/// `Z_N = (cos²η)^{N²} / ∏_{k<N} (k!)² · det Z` at λ = π/2.
pub fn partition_function(point: SpecialPoint, n: usize) -> Result<PartitionValue> {
    if n == 0 {
        return Err(Error::out_of_range("N", n));
    }
    let det = moment_determinant(point, n)?;
    let prefactor = num_traits::pow(point.vertex_product(), n * n) / superfactorial_squared(n);
    Ok(PartitionValue {
        value: det.scale(&prefactor),
        point,
        size: n,
    })
}

/// `x^{−1/2}` at the point, as an exact scalar.
fn inverse_sqrt_weight(point: SpecialPoint) -> QuadScalar {
    let rad = point.radicand();
    match point {
        SpecialPoint::Ice => QuadScalar::one(rad),
        SpecialPoint::FreeFermion => QuadScalar::from_parts((0, 1), (1, 2), rad),
        SpecialPoint::MinusHalf => QuadScalar::from_parts((0, 1), (1, 3), rad),
    }
}

/// `A(N; x) = (1 − x/4)^{−N²/2} x^{−N/2} Z_N`, with `1 − x/4 = cos²η`.
///
/// All surds must cancel; a non-integer result is reported as an error.
pub fn enumeration_from_partition(point: SpecialPoint, n: usize) -> Result<BigInt> {
    let z = partition_function(point, n)?.value;
    let inv_cos = point.cos_eta().inv()?;
    let value = &(&z * &inv_cos.pow((n * n) as i64)?) * &inverse_sqrt_weight(point).pow(n as i64)?;
    value.to_integer().ok_or_else(|| Error::NonInteger {
        what: format!("A({n}; {})", point.weight_x()),
        value: value.to_string(),
    })
}

/// Boundary correlator `H_N^{(r)}` and polarization `G_N^{(r)}`, `r = 1..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelatorTable {
    pub point: SpecialPoint,
    pub size: usize,
    pub h: Vec<BigRational>,
    pub g: Vec<BigRational>,
    /// The raw ratio summed to −1 and was negated.
    pub sign_flipped: bool,
}

impl CorrelatorTable {
    pub fn from_h(point: SpecialPoint, h: Vec<BigRational>, sign_flipped: bool) -> Self {
        let g = h
            .iter()
            .scan(BigRational::zero(), |acc, v| {
                *acc += v;
                Some(acc.clone())
            })
            .collect();
        Self {
            point,
            size: h.len(),
            h,
            g,
            sign_flipped,
        }
    }

    /// Checks `ΣH = 1`, the palindrome, and `0 ≤ G ≤ 1` nondecreasing.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |detail: String| Error::NonzeroResidual {
            what: format!("correlator table N={} at {}", self.size, self.point),
            detail,
        };
        if self.g.last() != Some(&BigRational::one()) {
            return Err(fail(format!("G_N = {:?}", self.g.last())));
        }
        if self.h.iter().ne(self.h.iter().rev()) {
            return Err(fail("H is not palindromic".into()));
        }
        if self.h.iter().any(|v| v < &BigRational::zero()) {
            return Err(fail("negative H entry".into()));
        }
        Ok(())
    }
}

/// `c_j = ∂_ε^j [sin ε]^{r−1}[sin(ε−2η)]^{N−r} / [cos(ε−η)]^{N−1}` at `ε = 0`.
fn bordered_column(point: SpecialPoint, n: usize, r: usize) -> Result<Vec<QuadScalar>> {
    let order = n - 1;
    let rad = point.radicand();
    let sin_eps = TaylorSeries::trig(TrigKind::Sin, &QuadScalar::zero(rad), &QuadScalar::one(rad), order)?;
    let sin_shift = TaylorSeries::trig(TrigKind::Sin, &-point.sin_two_eta(), &point.cos_two_eta(), order)?;
    let cos_shift = TaylorSeries::trig(TrigKind::Cos, &-point.sin_eta(), &point.cos_eta(), order)?;
    let numer = sin_eps.pow(r - 1).mul(&sin_shift.pow(n - r), order)?;
    let series = numer.div(&cos_shift.pow(n - 1), order)?;
    (0..n).map(|j| series.derivative_at_zero(j)).collect()
}

/// `H_N^{(r)} = (N−1)! sin 2η / (cos η)^{N+1} · det H / det Z`.
///
/// Only the last column of `H` differs from `Z`, so by Cramer's rule
/// `det H / det Z = w · c / tan η` with `w` the last row of the reduced inverse.
pub fn boundary_correlator_det(point: SpecialPoint, n: usize) -> Result<CorrelatorTable> {
    if n == 0 {
        return Err(Error::out_of_range("N", n));
    }
    let ms = cot_derivative_moments(point, 2 * n - 2);
    let reduced = hankel_matrix(ms.reduced_moments(), n)?;
    let mut unit = vec![BigRational::zero(); n];
    unit[n - 1] = BigRational::one();
    let w = linalg::solve(&reduced, &unit)?;

    let prefactor = point
        .sin_two_eta()
        .scale(&BigRational::from_integer(factorial(n - 1)))
        .checked_div(&point.cos_eta().pow(n as i64 + 1)?)?
        .checked_div(&point.tan_eta())?;

    let rad = point.radicand();
    let mut h = Vec::with_capacity(n);
    for r in 1..=n {
        let column = bordered_column(point, n, r)?;
        let ratio = w
            .iter()
            .zip(&column)
            .fold(QuadScalar::zero(rad), |acc, (wj, cj)| &acc + &cj.scale(wj));
        h.push((&prefactor * &ratio).expect_rational(&format!("H_{n}^({r})"))?);
    }

    let total: BigRational = h.iter().sum();
    let sign_flipped = if total == BigRational::one() {
        false
    } else if total == -BigRational::one() {
        h.iter_mut().for_each(|v| *v = -v.clone());
        true
    } else {
        return Err(Error::NonzeroResidual {
            what: format!("correlator normalization N={n} at {point}"),
            detail: format!("sum of H = {total}"),
        });
    };
    Ok(CorrelatorTable::from_h(point, h, sign_flipped))
}

/// Total and refined x-enumerations for one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationTable {
    pub weight_x: u32,
    pub size: usize,
    pub total: BigInt,
    pub refined: Vec<BigInt>,
}

impl EnumerationTable {
    /// Scales a normalized correlator by the total, requiring integers.
    pub fn from_correlator(weight_x: u32, total: BigInt, h: &[BigRational]) -> Result<Self> {
        let scale = BigRational::from_integer(total.clone());
        let refined = h
            .iter()
            .enumerate()
            .map(|(i, hr)| {
                let v = hr * &scale;
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::NonInteger {
                        what: format!("A({}, {}; {weight_x})", h.len(), i + 1),
                        value: v.to_string(),
                    })
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            weight_x,
            size: h.len(),
            total,
            refined,
        })
    }

    pub fn is_palindromic(&self) -> bool {
        self.refined.iter().eq(self.refined.iter().rev())
    }

    pub fn refined_sum(&self) -> BigInt {
        self.refined.iter().sum()
    }
}

/// `A(N, r; x) = H_N^{(r)} · A(N; x)` via the determinant route.
pub fn refined_from_correlator(point: SpecialPoint, n: usize) -> Result<EnumerationTable> {
    let total = enumeration_from_partition(point, n)?;
    let table = boundary_correlator_det(point, n)?;
    EnumerationTable::from_correlator(point.weight_x(), total, &table.h)
}

/// Block factorization of the chessboard Hankel determinant:
/// `D_{2m} = D⁽⁰⁾_m D⁽¹⁾_m` and `D_{2m+1} = D⁽⁰⁾_{m+1} D⁽¹⁾_m`.
///
/// Compares reduced determinants; the `tan η` powers match on both sides.
pub fn factorization_check(point: SpecialPoint, m: usize) -> Result<bool> {
    let ms = cot_derivative_moments(point, 4 * m + 2);
    let block = |sigma: usize, size: usize| -> Result<BigRational> {
        let q = ms.even_subsequence(sigma, size)?;
        hankel_determinant(&q, size)
    };
    let full = |size: usize| hankel_determinant(ms.reduced_moments(), size);
    let even = full(2 * m)? == block(0, m)? * block(1, m)?;
    let odd = full(2 * m + 1)? == block(0, m + 1)? * block(1, m)?;
    Ok(even && odd)
}

/// `A(N; x)` for `x = 0`, the number of permutation matrices.
pub fn permutation_count(n: usize) -> BigInt {
    factorial(n)
}
