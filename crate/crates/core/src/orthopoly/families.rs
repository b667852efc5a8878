//! The orthogonal families attached to the three special points, stored as
//! rational coefficient vectors in the moment variable `x`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::hyper::{hyper_terminating, HyperArgument, HypergeomTerm};
use crate::combinat::{factorial, int, pochhammer, rat};
use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, QuadScalar, Radicand};
use crate::moments::{MomentSequence, SpecialPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// Meixner–Pollaczek `P_n^{(1/2)}(x/4; π/2)`.
    MeixnerPollaczek,
    /// Continuous Hahn `p_n(x/6; 1/3, 2/3, 1/3, 2/3)`.
    ContinuousHahn,
    /// Continuous dual Hahn `S_n(x²/36; 0, 1/3, 2/3)`.
    DualHahnEven,
    /// Continuous dual Hahn `S_n(x²/36; 1, 1/3, 2/3)`.
    DualHahnOdd,
    /// Continuous dual Hahn `S_n(x²/36; 1/2, −1/6, 1/6)`.
    DualHahnShifted,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 5] = [
        FamilyTag::MeixnerPollaczek,
        FamilyTag::ContinuousHahn,
        FamilyTag::DualHahnEven,
        FamilyTag::DualHahnOdd,
        FamilyTag::DualHahnShifted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::MeixnerPollaczek => "meixner-pollaczek",
            FamilyTag::ContinuousHahn => "continuous-hahn",
            FamilyTag::DualHahnEven => "dual-hahn-0",
            FamilyTag::DualHahnOdd => "dual-hahn-1",
            FamilyTag::DualHahnShifted => "dual-hahn-tilde",
        }
    }

    /// Dual Hahn parameters `(a, b, c)`.
    pub fn dual_hahn_params(self) -> Option<[BigRational; 3]> {
        match self {
            FamilyTag::DualHahnEven => Some([int(0), rat(1, 3), rat(2, 3)]),
            FamilyTag::DualHahnOdd => Some([int(1), rat(1, 3), rat(2, 3)]),
            FamilyTag::DualHahnShifted => Some([rat(1, 2), rat(-1, 6), rat(1, 6)]),
            _ => None,
        }
    }

    /// Whether `p_n` has degree `2n` in `x`.
    pub fn is_even_family(self) -> bool {
        self.dual_hahn_params().is_some()
    }

    /// The scale `s` with the family variable equal to `x / s`.
    pub fn variable_scale(self) -> i64 {
        match self {
            FamilyTag::MeixnerPollaczek => 4,
            _ => 6,
        }
    }

    /// The point and moment shift σ whose functional makes the family orthogonal.
    pub fn functional(self) -> Option<(SpecialPoint, usize)> {
        match self {
            FamilyTag::MeixnerPollaczek => Some((SpecialPoint::FreeFermion, 0)),
            FamilyTag::ContinuousHahn => Some((SpecialPoint::Ice, 0)),
            FamilyTag::DualHahnEven => Some((SpecialPoint::MinusHalf, 0)),
            FamilyTag::DualHahnOdd => Some((SpecialPoint::MinusHalf, 1)),
            FamilyTag::DualHahnShifted => None,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFamily {
    pub tag: FamilyTag,
    /// `coeffs[n][k]` is the coefficient of `x^k` in `p_n`.
    pub coeffs: Vec<Vec<BigRational>>,
    /// Printed norms `h_n`; absent where no closed form is known.
    pub norms: Vec<Option<QuadScalar>>,
    pub leading: Vec<BigRational>,
}

fn imaginary_unit() -> QuadScalar {
    QuadScalar::sqrt_radicand(Radicand::MinusOne)
}

/// `c + s·i·x/scale` over radicand −1.
fn complex_linear(c: &BigRational, sign: i64, scale: i64) -> LaurentPoly {
    let rad = Radicand::MinusOne;
    let slope = QuadScalar::new(BigRational::zero(), rat(sign, scale), rad);
    LaurentPoly::constant(QuadScalar::from_rational(c.clone(), rad)).add(&LaurentPoly::monomial(slope, 1))
}

/// `p_n(x)` as built from its hypergeometric form, before the realness check.
pub fn family_polynomial_complex(tag: FamilyTag, n: usize) -> Result<LaurentPoly> {
    let rad = Radicand::MinusOne;
    let one = QuadScalar::one(rad);
    let minus_n = int(-(n as i64));
    let (term, prefactor) = match tag {
        FamilyTag::MeixnerPollaczek => (
            HypergeomTerm::new(
                vec![minus_n],
                vec![int(1)],
                HyperArgument::Scalar(QuadScalar::from_integer(2, rad)),
            )
            .with_poly_upper(vec![complex_linear(&rat(1, 2), 1, 4)]),
            imaginary_unit().pow(n as i64)?,
        ),
        FamilyTag::ContinuousHahn => (
            HypergeomTerm::new(
                vec![minus_n, int(n as i64 + 1)],
                vec![rat(2, 3), int(1)],
                HyperArgument::Scalar(one.clone()),
            )
            .with_poly_upper(vec![complex_linear(&rat(1, 3), 1, 6)]),
            imaginary_unit().pow(n as i64)?.scale(&pochhammer(&rat(2, 3), n)),
        ),
        _ => {
            let [a, b, c] = tag.dual_hahn_params().expect("dual Hahn tag");
            let ab = &a + &b;
            let ac = &a + &c;
            let pre = pochhammer(&ab, n) * pochhammer(&ac, n);
            (
                HypergeomTerm::new(vec![minus_n], vec![ab, ac], HyperArgument::Scalar(one.clone()))
                    .with_poly_upper(vec![complex_linear(&a, 1, 6), complex_linear(&a, -1, 6)]),
                QuadScalar::from_rational(pre, rad),
            )
        }
    };
    Ok(hyper_terminating(&term)?.into_laurent().scale(&prefactor))
}

/// Dense rational coefficients of `p_n`, asserting that every imaginary part cancels.
pub fn family_polynomial(tag: FamilyTag, n: usize) -> Result<Vec<BigRational>> {
    let p = family_polynomial_complex(tag, n)?;
    let terms = p.to_rational_terms(&format!("{tag} p_{n}"))?;
    let degree = terms.keys().next_back().copied().unwrap_or(0);
    let mut dense = vec![BigRational::zero(); degree as usize + 1];
    for (e, c) in terms {
        dense[e as usize] = c;
    }
    Ok(dense)
}

fn sqrt3(r: BigRational) -> QuadScalar {
    QuadScalar::new(BigRational::zero(), r, Radicand::Three)
}

fn fact(n: usize) -> BigRational {
    BigRational::from_integer(factorial(n))
}

/// `h_n` as printed for the family, including the surd factor.
pub fn printed_norm(tag: FamilyTag, n: usize) -> Option<QuadScalar> {
    let pow27 = || num_traits::pow(int(27), n);
    match tag {
        FamilyTag::MeixnerPollaczek => Some(QuadScalar::from_integer(2, Radicand::Two)),
        // 2(3n+1)! / ((2n+1)·3^{3n+1/2}·n!), with 3^{−1/2} = √3/3
        FamilyTag::ContinuousHahn => Some(sqrt3(
            int(2) * fact(3 * n + 1) / (int(2 * n as i64 + 1) * pow27() * int(3) * fact(n)),
        )),
        FamilyTag::DualHahnEven => Some(sqrt3(int(2) * fact(n) * fact(3 * n) / pow27())),
        FamilyTag::DualHahnOdd => Some(sqrt3(int(8) * fact(n) * fact(3 * n + 2) / pow27())),
        FamilyTag::DualHahnShifted => None,
    }
}

/// Leading coefficient `κ_n` in `x` (in `x²` for the dual Hahn families).
pub fn printed_leading(tag: FamilyTag, n: usize) -> BigRational {
    match tag {
        FamilyTag::MeixnerPollaczek => BigRational::one() / (num_traits::pow(int(2), n) * fact(n)),
        FamilyTag::ContinuousHahn => fact(2 * n) / (num_traits::pow(int(6), n) * fact(n) * fact(n)),
        _ => num_traits::pow(rat(-1, 36), n),
    }
}

pub fn family_polynomials(tag: FamilyTag, n_max: usize) -> Result<PolyFamily> {
    let coeffs = (0..=n_max)
        .map(|n| family_polynomial(tag, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyFamily {
        tag,
        coeffs,
        norms: (0..=n_max).map(|n| printed_norm(tag, n)).collect(),
        leading: (0..=n_max).map(|n| printed_leading(tag, n)).collect(),
    })
}

impl PolyFamily {
    /// Checks `deg p_n` and that its top coefficient equals `κ_n`.
    pub fn check_leading(&self) -> Result<()> {
        for (n, (p, kappa)) in self.coeffs.iter().zip(&self.leading).enumerate() {
            let degree = if self.tag.is_even_family() { 2 * n } else { n };
            if p.len() != degree + 1 || &p[degree] != kappa {
                return Err(Error::NonzeroResidual {
                    what: format!("{} leading coefficient of p_{n}", self.tag),
                    detail: format!("expected degree {degree} with {kappa}, got {:?}", p.last()),
                });
            }
        }
        Ok(())
    }
}

/// `L_σ[p·q]` with `L_σ[x^k] = m_{k+2σ}`.
pub fn moment_functional(
    ms: &MomentSequence,
    sigma: usize,
    p: &[BigRational],
    q: &[BigRational],
) -> Result<QuadScalar> {
    let mut product = vec![BigRational::zero(); (p.len() + q.len()).saturating_sub(1)];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            product[i + j] += a * b;
        }
    }
    let mut reduced = BigRational::zero();
    for (k, c) in product.iter().enumerate() {
        if !c.is_zero() {
            reduced += c * ms.reduced(k + 2 * sigma)?;
        }
    }
    Ok(ms.point().tan_eta().scale(&reduced))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moments::cot_derivative_moments;

    #[test]
    fn continuous_hahn_low_degree() {
        let fam = family_polynomials(FamilyTag::ContinuousHahn, 2).unwrap();
        assert_eq!(fam.coeffs[0], vec![int(1)]);
        assert_eq!(fam.coeffs[1], vec![int(0), rat(1, 3)]);
        assert_eq!(
            fam.norms[0].clone().unwrap(),
            QuadScalar::from_parts((0, 1), (2, 3), Radicand::Three)
        );
        assert_eq!(
            fam.norms[1].clone().unwrap(),
            QuadScalar::from_parts((0, 1), (16, 81), Radicand::Three)
        );
        fam.check_leading().unwrap();
    }

    #[test]
    fn dual_hahn_even_degree_one() {
        let p = family_polynomial(FamilyTag::DualHahnEven, 1).unwrap();
        assert_eq!(p, vec![rat(2, 9), int(0), rat(-1, 36)]);
    }

    #[test]
    fn meixner_pollaczek_degree_one() {
        let p = family_polynomial(FamilyTag::MeixnerPollaczek, 1).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p[1], rat(1, 2));
    }

    #[test]
    fn functional_examples() {
        let ice = cot_derivative_moments(SpecialPoint::Ice, 4);
        let fam = family_polynomials(FamilyTag::ContinuousHahn, 1).unwrap();
        let l00 = moment_functional(&ice, 0, &fam.coeffs[0], &fam.coeffs[0]).unwrap();
        assert_eq!(l00, fam.norms[0].clone().unwrap());
        assert!(moment_functional(&ice, 0, &fam.coeffs[0], &fam.coeffs[1])
            .unwrap()
            .is_zero());

        let ff = cot_derivative_moments(SpecialPoint::FreeFermion, 4);
        let mp = family_polynomials(FamilyTag::MeixnerPollaczek, 1).unwrap();
        let l11 = moment_functional(&ff, 0, &mp.coeffs[1], &mp.coeffs[1]).unwrap();
        assert_eq!(l11, QuadScalar::from_integer(2, Radicand::Two));
    }
}
