//! Difference equations and forward-shift identities, checked as exact
//! polynomial identities over the Gaussian rationals.

use num_rational::BigRational;

use super::families::{family_polynomial, FamilyTag};
use crate::combinat::{int, rat};
use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, QuadScalar, Radicand};

const RAD: Radicand = Radicand::MinusOne;

fn i_unit() -> QuadScalar {
    QuadScalar::sqrt_radicand(RAD)
}

fn constant(c: BigRational) -> LaurentPoly {
    LaurentPoly::constant(QuadScalar::from_rational(c, RAD))
}

/// `c + k·i·y` in the variable `y`.
fn affine(c: BigRational, k: i64) -> LaurentPoly {
    constant(c).add(&LaurentPoly::monomial(i_unit().scale(&int(k)), 1))
}

/// Embeds dense rational coefficients in `x` as a polynomial in `y = x/scale`.
fn in_family_variable(coeffs: &[BigRational], scale: i64) -> LaurentPoly {
    LaurentPoly::from_rational_terms(
        RAD,
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (k as i64, c * num_traits::pow(int(scale), k))),
    )
}

/// `p(y + shift·i)`.
fn shifted(p: &LaurentPoly, shift: i64) -> Result<LaurentPoly> {
    p.compose(&LaurentPoly::x(RAD).add(&LaurentPoly::constant(i_unit().scale(&int(shift)))))
}

/// Residual of the family's second-order difference equation in its own
/// variable, with rational coefficients cleared. Zero for every valid `n`.
pub fn difference_equation_residual(tag: FamilyTag, n: usize) -> Result<LaurentPoly> {
    let p = in_family_variable(&family_polynomial(tag, n)?, tag.variable_scale());
    residual_for(tag, &p, n)
}

fn residual_for(tag: FamilyTag, p: &LaurentPoly, n: usize) -> Result<LaurentPoly> {
    let up = shifted(p, 1)?;
    let down = shifted(p, -1)?;
    let nn = int(n as i64);
    let residual = match tag {
        FamilyTag::MeixnerPollaczek => {
            // e^{iφ} = i, cos φ = 0, sin φ = 1, α = 1/2
            let i = LaurentPoly::constant(i_unit());
            let forward = i.mul(&affine(rat(1, 2), -1));
            let backward = i.mul(&affine(rat(1, 2), 1));
            let middle = i.scale_rational(&(int(-2) * (&nn + rat(1, 2))));
            forward.mul(&up).add(&middle.mul(p)).add(&backward.mul(&down))
        }
        FamilyTag::ContinuousHahn => {
            let (a, b, c, d) = (rat(1, 3), rat(2, 3), rat(1, 3), rat(2, 3));
            let total = &a + &b + &c + &d - int(1);
            let fwd = affine(c, -1).mul(&affine(d, -1));
            let bwd = affine(a, 1).mul(&affine(b, 1));
            let middle = fwd.add(&bwd).add(&constant(&nn * (&nn + total)));
            fwd.mul(&up).sub(&middle.mul(p)).add(&bwd.mul(&down))
        }
        _ => {
            let [a, b, c] = tag.dual_hahn_params().expect("dual Hahn tag");
            let two_iy = affine(int(0), 2);
            let one = constant(int(1));
            let fwd = affine(a.clone(), -1)
                .mul(&affine(b.clone(), -1))
                .mul(&affine(c.clone(), -1))
                .mul(&two_iy.add(&one));
            let bwd = affine(a, 1)
                .mul(&affine(b, 1))
                .mul(&affine(c, 1))
                .mul(&two_iy.sub(&one));
            let denom = two_iy.mul(&two_iy.sub(&one)).mul(&two_iy.add(&one));
            let middle = fwd.add(&bwd).add(&denom.scale_rational(&nn));
            fwd.mul(&up).sub(&middle.mul(p)).add(&bwd.mul(&down))
        }
    };
    Ok(residual)
}

/// Both shift identities for the tilde family at index `m`:
/// `ũ_{2m+2}(x+3i) − ũ_{2m+2}(x−3i) = −i(m+1)(x/3)·u⁽¹⁾_{2m}(x)` and
/// `ũ_{2m}(x+3i) + ũ_{2m}(x−3i) = 2·u⁽⁰⁾_{2m}(x)`.
pub fn shift_identities(m: usize) -> Result<bool> {
    let in_x = |tag, n| -> Result<LaurentPoly> { Ok(in_family_variable(&family_polynomial(tag, n)?, 1)) };
    let shift3 = |p: &LaurentPoly, s: i64| shifted(p, 3 * s);

    let tilde_next = in_x(FamilyTag::DualHahnShifted, m + 1)?;
    let lhs = shift3(&tilde_next, 1)?.sub(&shift3(&tilde_next, -1)?);
    let factor = LaurentPoly::monomial(i_unit().scale(&rat(-(m as i64 + 1), 3)), 1);
    let rhs = factor.mul(&in_x(FamilyTag::DualHahnOdd, m)?);
    let forward = lhs == rhs;

    let tilde = in_x(FamilyTag::DualHahnShifted, m)?;
    let lhs = shift3(&tilde, 1)?.add(&shift3(&tilde, -1)?);
    let rhs = in_x(FamilyTag::DualHahnEven, m)?.scale_rational(&int(2));
    Ok(forward && lhs == rhs)
}

/// Turns a nonzero residual into an error naming the top offending term.
pub fn expect_zero(residual: &LaurentPoly, what: impl Into<String>) -> Result<()> {
    if residual.is_zero() {
        return Ok(());
    }
    let (e, c) = residual.terms().last().expect("nonzero");
    Err(Error::NonzeroResidual {
        what: what.into(),
        detail: format!("coefficient of y^{e} is {c}"),
    })
}
