//! Refined 3-enumeration: the boundary correlator at x = 3 built from the
//! coefficients `B_{2m}^{(r)}`, together with the chain of generating
//! functions and hypergeometric identities that produce them.
//!
//! All Laurent polynomials here live over radicand −3 so that
//! `q = e^{iπ/3} = 1/2 + (1/2)√−3` is available.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::closed_forms::closed_count;
use crate::combinat::{binomial, factorial, generalized_binomial, int, pochhammer, rat};
use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, QuadScalar, Radicand};
use crate::hankel::EnumerationTable;
use crate::orthopoly::term_coefficients;

const RAD: Radicand = Radicand::MinusThree;

fn fact(n: usize) -> BigRational {
    BigRational::from_integer(factorial(n))
}

fn pow3(e: usize) -> BigRational {
    num_traits::pow(int(3), e)
}

fn laurent(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_rational_terms(RAD, terms.iter().map(|&(e, c)| (e, int(c))))
}

fn q_root() -> QuadScalar {
    QuadScalar::from_parts((1, 2), (1, 2), RAD)
}

/// `B_{2m}^{(r)}` for `r = 0..=2m`, normalized to sum 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BCoefficients {
    pub m: usize,
    pub values: Vec<BigRational>,
}

impl BCoefficients {
    /// `B^{(r)}`, zero outside `0..=2m`.
    pub fn get(&self, r: i64) -> BigRational {
        usize::try_from(r)
            .ok()
            .and_then(|i| self.values.get(i).cloned())
            .unwrap_or_else(BigRational::zero)
    }

    /// Reads `B^{(r)}` off the coefficient of `z^{r−m}` in `E_m(z)`.
    pub fn from_generating(m: usize, e: &LaurentPoly) -> Result<Self> {
        let terms = e.to_rational_terms("E_m(z)")?;
        let mm = m as i64;
        if terms.keys().any(|&k| k.abs() > mm) {
            return Err(Error::out_of_range("E_m exponent", format!("beyond ±{m}")));
        }
        let values = (-mm..=mm)
            .map(|k| terms.get(&k).cloned().unwrap_or_else(BigRational::zero))
            .collect();
        Ok(Self { m, values })
    }

    pub fn check_invariants(&self) -> Result<()> {
        let fail = |detail: String| Error::NonzeroResidual {
            what: format!("B coefficients, m = {}", self.m),
            detail,
        };
        if self.values.len() != 2 * self.m + 1 {
            return Err(fail(format!("length {}", self.values.len())));
        }
        let sum: BigRational = self.values.iter().sum();
        if !sum.is_one() {
            return Err(fail(format!("sum {sum}")));
        }
        if !self.values.iter().eq(self.values.iter().rev()) {
            return Err(fail("not palindromic".into()));
        }
        if let Some(v) = self.values.iter().find(|v| !v.is_positive()) {
            return Err(fail(format!("nonpositive entry {v}")));
        }
        Ok(())
    }
}

/// Double-sum closed form for `B_{2m}^{(r)}`.
pub fn b_closed_form(m: usize) -> BCoefficients {
    let mm = m as i64;
    let prefactor = fact(2 * m + 1) * fact(m) / (pow3(m) * fact(3 * m + 2));
    let values = (0..=2 * mm)
        .map(|r| {
            let sum: BigInt = ((r - mm).max(0)..=r / 2)
                .map(|l| {
                    BigInt::from(2 * mm + 2 - r + 2 * l)
                        * binomial(3 * mm + 3, r - 2 * l)
                        * binomial(2 * mm + l - r + 1, mm + 1)
                        * binomial(mm + l + 1, mm + 1)
                        * (BigInt::one() << (r - 2 * l) as usize)
                })
                .sum();
            &prefactor * BigRational::from_integer(sum)
        })
        .collect();
    BCoefficients { m, values }
}

fn series_at_quarter(upper: &[BigRational], lower: &[BigRational]) -> Result<BigRational> {
    let quarter = rat(1, 4);
    let mut power = BigRational::one();
    let mut acc = BigRational::zero();
    for c in term_coefficients(upper, lower)? {
        acc += c * &power;
        power *= &quarter;
    }
    Ok(acc)
}

/// `B_{2m}^{(r)}` as two terminating `₄F₃` series at argument 1/4, reflected
/// through `r → 2m − r` for the upper half.
pub fn b_hypergeometric(m: usize, r: usize) -> Result<BigRational> {
    if r > 2 * m {
        return Err(Error::out_of_range("r", format!("{r} for m = {m}")));
    }
    let r = if r > m { 2 * m - r } else { r };
    let (mm, rr) = (m as i64, r as i64);
    let prefactor =
        BigRational::from_integer((BigInt::one() << r) * binomial(3 * mm + 3, rr) * binomial(2 * mm + 1 - rr, mm + 1))
            / (pow3(m) * BigRational::from_integer(binomial(3 * mm + 2, mm + 1)));
    let lower = [rat(3 * mm + 4 - rr, 2), rat(3 * mm + 5 - rr, 2), int(mm - rr + 1)];
    let tail = [int(mm + 2), int(2 * mm + 2 - rr)];
    let with = |second: BigRational| -> Vec<BigRational> {
        let mut v = vec![rat(1 - rr, 2), second];
        v.extend(tail.iter().cloned());
        v
    };
    let mut bracket = int(2) * series_at_quarter(&with(rat(-rr, 2)), &lower)?;
    if r > 0 {
        bracket -= rat(rr, mm + 1) * series_at_quarter(&with(rat(2 - rr, 2)), &lower)?;
    }
    Ok(prefactor * bracket)
}

/// The five coefficients of the relation at `r`, multiplying
/// `E^{(r−2)}, …, E^{(r+2)}`.
fn five_term_coefficients(m: i64, r: i64) -> [BigRational; 5] {
    [
        int(2 * (r - m - 2) * (r + m + 1)),
        int(5 * r * r + 10 * r * m + r - 3 * m * m - 9 * m - 6),
        int(2 * (1 + 8 * m) * r),
        int(-(5 * r * r - 10 * r * m - r - 3 * m * m - 9 * m - 6)),
        int(-2 * (r - m - 1) * (r + m + 2)),
    ]
}

/// Left-hand side of the five-term relation at `r` for `E^{(s)} = B^{(m+s)}`.
pub fn five_term_residual(b: &BCoefficients, r: i64) -> BigRational {
    let m = b.m as i64;
    five_term_coefficients(m, r)
        .iter()
        .zip(r - 2..=r + 2)
        .map(|(c, s)| c * b.get(m + s))
        .sum()
}

/// Solves the five-term relation downward from `E^{(m)} = 1`, then checks
/// every relation not used in the solve.
pub fn solve_five_term(m: usize) -> Result<BCoefficients> {
    let mm = m as i64;
    let mut b = BCoefficients {
        m,
        values: vec![BigRational::zero(); 2 * m + 1],
    };
    b.values[2 * m] = BigRational::one();
    for r in (-mm + 2..=mm + 1).rev() {
        let [pivot, ..] = five_term_coefficients(mm, r);
        if pivot.is_zero() {
            return Err(Error::ZeroPivot(format!("five-term relation at r = {r}")));
        }
        let rest = five_term_residual(&b, r);
        let idx = (mm + r - 2) as usize;
        b.values[idx] = -rest / pivot;
    }
    let total: BigRational = b.values.iter().sum();
    b.values.iter_mut().for_each(|v| *v /= &total);
    for r in (-mm - 2..-mm + 2).chain([mm + 2]) {
        let res = five_term_residual(&b, r);
        if !res.is_zero() {
            return Err(Error::NonzeroResidual {
                what: format!("five-term relation, m = {m}, r = {r}"),
                detail: res.to_string(),
            });
        }
    }
    Ok(b)
}

/// `Σ_k c_k (z+2)^{deg−k} z^{−k} (1+2z)^k`, i.e. `(z+2)^deg · ₂F₁(upper; lower; w)`
/// with `w = (1+2z)/(z(z+2))`.
fn z_plus_two_series(deg: usize, upper: &[BigRational], lower: &[BigRational]) -> Result<LaurentPoly> {
    let zp2 = laurent(&[(1, 1), (0, 2)]);
    let numer = laurent(&[(0, 1), (1, 2)]);
    let mut acc = LaurentPoly::zero(RAD);
    for (k, c) in term_coefficients(upper, lower)?.into_iter().enumerate() {
        let term = zp2
            .pow((deg - k) as u32)
            .mul(&numer.pow(k as u32))
            .shift_exponents(-(k as i64))
            .scale_rational(&c);
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `E_m(z) = Σ_r B_{2m}^{(r)} z^{r−m}` from its two-term `₂F₁` representation.
pub fn e_generating(m: usize) -> Result<LaurentPoly> {
    let mm = m as i64;
    let prefactor = fact(2 * m) * fact(2 * m + 2) / (pow3(m) * fact(m + 1) * fact(3 * m + 2));
    let mut bracket =
        z_plus_two_series(m, &[int(-mm), int(mm + 2)], &[int(-2 * mm - 1)])?.scale_rational(&int(2 * mm + 1));
    if m > 0 {
        let second = z_plus_two_series(m - 1, &[int(1 - mm), int(mm + 2)], &[int(-2 * mm)])?;
        bracket = bracket.sub(&second.scale_rational(&int(3 * mm)));
    }
    Ok(bracket.scale_rational(&prefactor))
}

/// `γ_0, …, γ_{2m+1}` from the closed form with `γ_0 = 1`.
pub fn gamma_sequence(m: usize) -> Vec<BigRational> {
    let head = int(-(m as i64)) - rat(2, 3);
    let third = rat(1, 3);
    (0..=2 * m + 1)
        .map(|k| {
            let l = k / 2;
            let sign = if l % 2 == 0 { int(1) } else { int(-1) };
            let depth = l + k % 2;
            sign * pochhammer(&head, depth) / pochhammer(&third, depth)
                * BigRational::from_integer(binomial(m as i64, l as i64))
        })
        .collect()
}

fn gamma_coefficients(m: i64, k: i64) -> [BigRational; 3] {
    let back = 3 * (2 * m - k);
    [
        int((3 * k + 2) * (3 * k + 3)),
        int(6 * (3 * m + 2 - 3 * k)),
        int(-(back + 7) * (back + 6)),
    ]
}

/// `γ` from the three-term recurrence, run forward from `γ_0 = 1`.
pub fn gamma_by_recurrence(m: usize) -> Vec<BigRational> {
    let mm = m as i64;
    let mut g = vec![BigRational::one()];
    for k in 0..=2 * mm {
        let [up, mid, down] = gamma_coefficients(mm, k);
        let prev = if k > 0 {
            &g[k as usize - 1] * &down
        } else {
            BigRational::zero()
        };
        let next = -(mid * &g[k as usize] + prev) / up;
        g.push(next);
    }
    g
}

/// Recurrence residuals for `k = 0..=2m+1`, with `γ_{−1} = γ_{2m+2} = 0`.
pub fn gamma_residuals(m: usize, gamma: &[BigRational]) -> Vec<BigRational> {
    let mm = m as i64;
    let at = |k: i64| -> BigRational {
        usize::try_from(k)
            .ok()
            .and_then(|i| gamma.get(i).cloned())
            .unwrap_or_else(BigRational::zero)
    };
    (0..=2 * mm + 1)
        .map(|k| {
            let [up, mid, down] = gamma_coefficients(mm, k);
            up * at(k + 1) + mid * at(k) + down * at(k - 1)
        })
        .collect()
}

/// `Σ_k binom(m+a, k) binom(m−a, m−k) (x^{e−6k} − x^{−e+6k})` with `e = 3m + 3a`.
fn antisymmetric_sum(m: usize, a: &BigRational, top: i64) -> LaurentPoly {
    let mr = int(m as i64);
    let plus = &mr + a;
    let minus = &mr - a;
    let terms = (0..=m).flat_map(|k| {
        let c = generalized_binomial(&plus, k) * generalized_binomial(&minus, m - k);
        let e = top - 6 * k as i64;
        [(e, c.clone()), (-e, -c)]
    });
    LaurentPoly::from_rational_terms(RAD, terms)
}

pub fn f_poly(m: usize) -> LaurentPoly {
    antisymmetric_sum(m, &rat(1, 3), 3 * m as i64 + 1)
}

pub fn g_poly(m: usize) -> LaurentPoly {
    antisymmetric_sum(m, &rat(2, 3), 3 * m as i64 + 2)
}

/// `c_m = (3m+1)·3^{m+1} m! (2m+2)! / (3m+3)!`.
pub fn h_normalization(m: usize) -> BigRational {
    int(3 * m as i64 + 1) * pow3(m + 1) * fact(m) * fact(2 * m + 2) / fact(3 * m + 3)
}

/// `(f_m, g_m, h_m)` with `h_m = c_m (g_m + (3m+2)/(3m+1) f_m)`.
pub fn fgh_polys(m: usize) -> (LaurentPoly, LaurentPoly, LaurentPoly) {
    let mm = m as i64;
    let f = f_poly(m);
    let g = g_poly(m);
    let h = g
        .add(&f.scale_rational(&rat(3 * mm + 2, 3 * mm + 1)))
        .scale_rational(&h_normalization(m));
    (f, g, h)
}

/// `Σ_k γ_k (x^{n_k} − x^{−n_k})` with `n_k = 3m + 2 − 3k`, proportional to
/// `h_m(e^{iφ})` written in exponentials.
pub fn h_from_gamma(m: usize) -> LaurentPoly {
    let mm = m as i64;
    let terms = gamma_sequence(m).into_iter().enumerate().flat_map(|(k, c)| {
        let e = 3 * mm + 2 - 3 * k as i64;
        [(e, c.clone()), (-e, -c)]
    });
    LaurentPoly::from_rational_terms(RAD, terms)
}

/// True when `p` is a rational multiple of `reference`.
pub fn proportional(p: &LaurentPoly, reference: &LaurentPoly) -> Result<bool> {
    let Some(top) = reference.max_exponent() else {
        return Ok(p.is_zero());
    };
    let ratio = p.coeff(top).checked_div(&reference.coeff(top))?;
    Ok(reference.scale(&ratio) == *p)
}

/// `Q_m(x)` from the `₂F₁(−m, m+1; −2m; ·)` representation over radicand −3.
pub fn q_poly(m: usize) -> Result<LaurentPoly> {
    let mm = m as i64;
    let q = q_root();
    let q_inv = q.inv()?;
    let denom = (&q - &q_inv).inv()?;
    let x = LaurentPoly::x(RAD);
    let x_inv = LaurentPoly::monomial(QuadScalar::one(RAD), -1);
    let s = x_inv.scale(&q).sub(&x.scale(&q_inv)).scale(&denom);
    let t = x.scale(&q).sub(&x_inv.scale(&q_inv)).scale(&denom);
    let mut acc = LaurentPoly::zero(RAD);
    for (k, c) in term_coefficients(&[int(-mm), int(mm + 1)], &[int(-2 * mm)])?
        .into_iter()
        .enumerate()
    {
        acc = acc.add(&s.pow((m - k) as u32).mul(&t.pow(k as u32)).scale_rational(&c));
    }
    let prefactor = fact(2 * m) / (pow3(m) * fact(m) * fact(m));
    let out = acc.scale_rational(&prefactor);
    if !out.is_rational() {
        return Err(Error::IrrationalResidue {
            what: format!("Q_{m}"),
            value: out.to_string(),
        });
    }
    Ok(out)
}

fn x_minus_inv() -> LaurentPoly {
    laurent(&[(1, 1), (-1, -1)])
}

/// Checks `f_m = (x − x^{−1})^{2m+1} Q_m`.
pub fn f_q_identity(m: usize) -> Result<bool> {
    Ok(x_minus_inv().pow(2 * m as u32 + 1).mul(&q_poly(m)?) == f_poly(m))
}

/// `V_m(x)` assembled from `Q_m` and `Q_{m+1}`.
pub fn v_poly(m: usize) -> Result<LaurentPoly> {
    let mm = m as i64;
    let a = laurent(&[(1, 1), (0, -1), (-1, 1)]);
    let b = laurent(&[(1, 1), (0, -2), (-1, 1)]);
    let bracket = a
        .pow(2)
        .mul(&q_poly(m)?)
        .sub(&b.mul(&q_poly(m + 1)?).scale_rational(&rat(3 * mm + 3, 3 * mm + 2)));
    Ok(bracket.scale_rational(&(h_normalization(m) * rat(3 * mm + 2, 2 * (3 * mm + 1)))))
}

/// Compares `V_m(x₀)` with `(x₀ − 1 + x₀^{−1})^m E_m(−(x₀ − q)/(q x₀ − 1))`
/// at `2m + 1` rational sample points, enough to pin down `V_m`.
pub fn v_e_consistency(m: usize) -> Result<bool> {
    let v = v_poly(m)?;
    let e = e_generating(m)?;
    let q = q_root();
    let one = QuadScalar::one(RAD);
    for sample in 2..(2 * m as i64 + 4) {
        let x0 = QuadScalar::from_integer(sample, RAD);
        let z = (&x0 - &q).checked_div(&(&(&q * &x0) - &one))?.scale(&int(-1));
        let weight = (&(&x0 - &one) + &x0.inv()?).pow(m as i64)?;
        if v.evaluate_at(&x0)? != &weight * &e.evaluate_at(&z)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `g_m = (3m+2)/(2(3m+1)) (x³ + x^{−3}) f_m − 3(m+1)/(2(3m+1)) f_{m+1}`.
pub fn gff_identity(m: usize) -> bool {
    let mm = m as i64;
    let cube = laurent(&[(3, 1), (-3, 1)]);
    let rhs = cube
        .mul(&f_poly(m))
        .scale_rational(&rat(3 * mm + 2, 2 * (3 * mm + 1)))
        .sub(&f_poly(m + 1).scale_rational(&rat(3 * (mm + 1), 2 * (3 * mm + 1))));
    rhs == g_poly(m)
}

/// Rewrites a Laurent polynomial symmetric under `z → 1/z` as a polynomial in
/// `u = z + 1 + z^{−1}`, lowest degree first.
pub fn to_u_basis(p: &LaurentPoly) -> Result<Vec<BigRational>> {
    let u = laurent(&[(1, 1), (0, 1), (-1, 1)]);
    let mut rest = p.clone();
    let top = rest.max_exponent().unwrap_or(0).max(0);
    let mut out = vec![BigRational::zero(); top as usize + 1];
    for d in (0..=top).rev() {
        let c = rest.coeff(d).expect_rational("u-basis coefficient")?;
        if !c.is_zero() {
            rest = rest.sub(&u.pow(d as u32).scale_rational(&c));
            out[d as usize] = c;
        }
    }
    if !rest.is_zero() {
        return Err(Error::NotPolynomial(format!("{p} in u = z + 1 + 1/z")));
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    Ok(out)
}

/// `Ψ_m^{(k)} = (z+2)^m ₂F₁(−m, k+1; −m−k; (z^{−1}+2)/(z+2))` in the `u` basis.
pub fn psi(m: usize, k: usize) -> Result<Vec<BigRational>> {
    let (mm, kk) = (m as i64, k as i64);
    let zp2 = laurent(&[(1, 1), (0, 2)]);
    let zinv_p2 = laurent(&[(-1, 1), (0, 2)]);
    let mut acc = LaurentPoly::zero(RAD);
    for (j, c) in term_coefficients(&[int(-mm), int(kk + 1)], &[int(-mm - kk)])?
        .into_iter()
        .enumerate()
    {
        acc = acc.add(&zp2.pow((m - j) as u32).mul(&zinv_p2.pow(j as u32)).scale_rational(&c));
    }
    let out = to_u_basis(&acc)?;
    if out.len() != m + 1 {
        return Err(Error::NotPolynomial(format!("Ψ_{m}^({k}) of degree {}", out.len() - 1)));
    }
    Ok(out)
}

fn dense_add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigRational::zero) + b.get(i).cloned().unwrap_or_else(BigRational::zero)
        })
        .collect();
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn dense_scale(a: &[BigRational], c: &BigRational) -> Vec<BigRational> {
    a.iter().map(|v| v * c).collect()
}

/// Multiplies by `slope·u + constant`.
fn dense_linear(a: &[BigRational], slope: i64, constant: i64) -> Vec<BigRational> {
    let shifted: Vec<BigRational> = std::iter::once(BigRational::zero())
        .chain(a.iter().map(|v| v * int(slope)))
        .collect();
    dense_add(&shifted, &dense_scale(a, &int(constant)))
}

/// Checks both three-term relations among the `Ψ_m^{(k)}` at the given `(m, k)`.
pub fn psi_identities(m: usize, k: usize) -> Result<bool> {
    if m == 0 {
        return Err(Error::out_of_range("m", m));
    }
    let (mm, kk) = (m as i64, k as i64);
    let decrease = dense_add(
        &dense_linear(&psi(m, k)?, 1, 3),
        &dense_scale(
            &dense_linear(&psi(m - 1, k)?, 2, 3),
            &-rat(mm * (mm + 2 * kk + 1), (mm + kk + 1) * (mm + kk)),
        ),
    );
    let mix = dense_add(
        &dense_scale(&psi(m, k)?, &rat(mm + 2 * kk + 2, 2 * (mm + kk + 1))),
        &dense_scale(&dense_linear(&psi(m - 1, k + 1)?, 1, 3), &rat(mm, 2 * (mm + kk + 1))),
    );
    Ok(decrease == psi(m + 1, k)? && mix == psi(m, k + 1)?)
}

/// `(2m+1) Ψ_m^{(m+1)} − 3m Ψ_{m−1}^{(m+1)}` with its prefactor, which is
/// `E_m` in the `u` basis.
pub fn e_from_psi(m: usize) -> Result<Vec<BigRational>> {
    let mm = m as i64;
    let prefactor = fact(2 * m) * fact(2 * m + 2) / (pow3(m) * fact(m + 1) * fact(3 * m + 2));
    let mut out = dense_scale(&psi(m, m + 1)?, &int(2 * mm + 1));
    if m > 0 {
        out = dense_add(&out, &dense_scale(&psi(m - 1, m + 1)?, &int(-3 * mm)));
    }
    Ok(dense_scale(&out, &prefactor))
}

/// Correlator and refined 3-enumeration of size `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedThreeTable {
    pub size: usize,
    pub h: Vec<BigRational>,
    pub a: Vec<BigInt>,
}

impl RefinedThreeTable {
    pub fn total(&self) -> BigInt {
        self.a.iter().sum()
    }

    pub fn into_enumeration(self) -> EnumerationTable {
        EnumerationTable {
            weight_x: 3,
            size: self.size,
            total: self.a.iter().sum(),
            refined: self.a,
        }
    }
}

/// `H_N^{(r)}` from `B_{2m}`: `(B^{(r−1)} + B^{(r−2)})/2` for `N = 2m+2` and
/// `(2B^{(r−1)} + 5B^{(r−2)} + 2B^{(r−3)})/9` for `N = 2m+3`.
pub fn correlator_from_b(n: usize, b: &BCoefficients) -> Vec<BigRational> {
    (1..=n as i64)
        .map(|r| {
            if n.is_multiple_of(2) {
                (b.get(r - 1) + b.get(r - 2)) / int(2)
            } else {
                (int(2) * b.get(r - 1) + int(5) * b.get(r - 2) + int(2) * b.get(r - 3)) / int(9)
            }
        })
        .collect()
}

pub fn assemble(n: usize) -> Result<RefinedThreeTable> {
    if n == 0 {
        return Err(Error::out_of_range("N", n));
    }
    let h = if n == 1 {
        vec![BigRational::one()]
    } else {
        let m = if n.is_multiple_of(2) { (n - 2) / 2 } else { (n - 3) / 2 };
        correlator_from_b(n, &b_closed_form(m))
    };
    let total = BigRational::from_integer(closed_count(n, 3)?);
    let a = h
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let value = v * &total;
            if value.is_integer() {
                Ok(value.to_integer())
            } else {
                Err(Error::NonInteger {
                    what: format!("A({n}, {}; 3)", i + 1),
                    value: value.to_string(),
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RefinedThreeTable { size: n, h, a })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(v: &[(i64, i64)]) -> Vec<BigRational> {
        v.iter().map(|&(a, b)| rat(a, b)).collect()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn b_small() {
        assert_eq!(b_closed_form(1).values, rats(&[(1, 5), (3, 5), (1, 5)]));
        assert_eq!(b_closed_form(0).values, vec![int(1)]);
        let b2 = b_closed_form(2);
        b2.check_invariants().unwrap();
        assert_eq!(b2.values.len(), 5);
    }

    #[test]
    fn b_routes_agree() {
        for m in 0..=6 {
            let closed = b_closed_form(m);
            closed.check_invariants().unwrap();
            assert_eq!(solve_five_term(m).unwrap(), closed, "m = {m}");
            for r in 0..=2 * m {
                assert_eq!(b_hypergeometric(m, r).unwrap(), closed.values[r], "m = {m}, r = {r}");
            }
        }
        assert!(b_hypergeometric(1, 3).is_err());
    }

    #[test]
    fn generating_function() {
        let e1 = e_generating(1).unwrap();
        assert_eq!(
            e1,
            LaurentPoly::from_rational_terms(RAD, [(-1, rat(1, 5)), (0, rat(3, 5)), (1, rat(1, 5))])
        );
        assert_eq!(e_generating(0).unwrap(), LaurentPoly::one(RAD));
        for m in 0..=5 {
            let e = e_generating(m).unwrap();
            assert_eq!(e.invert_variable(), e);
            assert!(e.evaluate_at(&QuadScalar::one(RAD)).unwrap().is_one());
            assert_eq!(BCoefficients::from_generating(m, &e).unwrap(), b_closed_form(m));
        }
    }

    #[test]
    fn gamma() {
        let g0 = gamma_sequence(0);
        assert_eq!(&g0[1] / &g0[0], int(-2));
        for m in 0..=6 {
            let g = gamma_sequence(m);
            assert_eq!(g.len(), 2 * m + 2);
            assert!(gamma_residuals(m, &g).iter().all(Zero::is_zero), "m = {m}");
            let forward = gamma_by_recurrence(m);
            assert_eq!(forward, g);
            assert!(gamma_residuals(m, &forward).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn f_g_h() {
        let f1 = LaurentPoly::from_rational_terms(
            RAD,
            [(4, rat(2, 3)), (-4, rat(-2, 3)), (-2, rat(4, 3)), (2, rat(-4, 3))],
        );
        assert_eq!(f_poly(1), f1);
        assert_eq!(f_poly(0), x_minus_inv());
        for m in 0..=4 {
            let (f, g, h) = fgh_polys(m);
            for p in [&f, &g, &h] {
                assert_eq!(p.invert_variable(), p.neg());
            }
            assert!(proportional(&h, &h_from_gamma(m)).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn q_and_v() {
        let q1 = LaurentPoly::from_rational_terms(RAD, [(1, rat(2, 3)), (-1, rat(2, 3))]);
        assert_eq!(q_poly(1).unwrap(), q1);
        assert_eq!(q_poly(0).unwrap(), LaurentPoly::one(RAD));
        assert_eq!(v_poly(0).unwrap(), LaurentPoly::one(RAD));
        for m in 0..=4 {
            assert!(f_q_identity(m).unwrap(), "m = {m}");
            let v = v_poly(m).unwrap();
            assert!(v.evaluate_at(&QuadScalar::one(RAD)).unwrap().is_one());
            assert_eq!(v.invert_variable(), v);
            assert!(v.is_rational());
            assert!(v.min_exponent().unwrap() >= -(m as i64));
            assert!(v_e_consistency(m).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn gauss_relations() {
        for m in [0, 1, 5] {
            assert!(gff_identity(m));
        }
        assert!(psi_identities(1, 1).unwrap());
        assert!(psi_identities(3, 4).unwrap());
        assert_eq!(psi(0, 3).unwrap(), vec![int(1)]);
        assert_eq!(psi(1, 0).unwrap(), vec![int(3), int(1)]);
        for m in 0..=4 {
            let e = to_u_basis(&e_generating(m).unwrap()).unwrap();
            assert_eq!(e_from_psi(m).unwrap(), e);
        }
    }

    #[test]
    fn assembled_tables() {
        let t = assemble(4).unwrap();
        assert_eq!(t.a, ints(&[9, 36, 36, 9]));
        assert_eq!(t.h, rats(&[(1, 10), (2, 5), (2, 5), (1, 10)]));
        assert_eq!(assemble(5).unwrap().a, ints(&[90, 495, 855, 495, 90]));
        assert_eq!(assemble(2).unwrap().a, ints(&[1, 1]));
        assert_eq!(assemble(3).unwrap().a, ints(&[2, 5, 2]));
        assert_eq!(assemble(1).unwrap().a, ints(&[1]));
    }
}
