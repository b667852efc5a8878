//! Orthogonal polynomial families and the product formula for the Hankel
//! determinant.

mod families;
mod hyper;
mod identities;

pub use families::{
    family_polynomial, family_polynomial_complex, family_polynomials, moment_functional, printed_leading, printed_norm,
    FamilyTag, PolyFamily,
};
pub use hyper::{
    hyper_terminating, pochhammer_poly, term_coefficients, termination_order, HyperArgument, HyperValue, HypergeomTerm,
};
pub use identities::{difference_equation_residual, expect_zero, shift_identities};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::combinat::{factorial, int};
use crate::error::{Error, Result};
use crate::exact::{QuadScalar, Radicand};
use crate::moments::SpecialPoint;

/// `∏_{n<size} h_n / κ_n²` from the printed norms and leading coefficients.
pub fn norm_product(tag: FamilyTag, size: usize) -> Result<QuadScalar> {
    let rad = match tag {
        FamilyTag::MeixnerPollaczek => Radicand::Two,
        _ => Radicand::Three,
    };
    let mut acc = QuadScalar::one(rad);
    for n in 0..size {
        let h = printed_norm(tag, n).ok_or(Error::NotPolynomial(format!("{tag} has no printed norm")))?;
        let kappa = printed_leading(tag, n);
        acc = &acc * &h.scale(&(BigRational::one() / (&kappa * &kappa)));
    }
    Ok(acc)
}

/// `det Z` through the product formula, using the even/odd block split at
/// the point Δ = −1/2.
pub fn product_determinant(point: SpecialPoint, n: usize) -> Result<QuadScalar> {
    match point {
        SpecialPoint::FreeFermion => norm_product(FamilyTag::MeixnerPollaczek, n),
        SpecialPoint::Ice => norm_product(FamilyTag::ContinuousHahn, n),
        SpecialPoint::MinusHalf => {
            let even = norm_product(FamilyTag::DualHahnEven, n.div_ceil(2))?;
            let odd = norm_product(FamilyTag::DualHahnOdd, n / 2)?;
            Ok(&even * &odd)
        }
    }
}

/// Printed block determinants `2^{2m²∓m} 3^{m²/2} ∏ k!(3k)!` (σ = 0) and
/// `… ∏ k!(3k+2)!` (σ = 1).
pub fn block_closed_form(sigma: usize, m: usize) -> Result<QuadScalar> {
    if sigma > 1 {
        return Err(Error::out_of_range("sigma", sigma));
    }
    let m2 = (m * m) as i64;
    let two_exp = if sigma == 0 {
        2 * m2 - m as i64
    } else {
        2 * m2 + m as i64
    };
    let mut product = BigInt::one();
    for k in 0..m {
        product *= factorial(k) * factorial(3 * k + 2 * sigma);
    }
    let rational = BigRational::from_integer(product)
        * num_traits::pow(int(2), two_exp as usize)
        * num_traits::pow(int(3), (m2 / 2) as usize);
    let value = QuadScalar::from_rational(rational, Radicand::Three);
    Ok(if m2 % 2 == 1 {
        &value * &QuadScalar::sqrt_radicand(Radicand::Three)
    } else {
        value
    })
}
