//! Terminating generalized hypergeometric series `pFq`.

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, QuadScalar, Radicand};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperArgument {
    Scalar(QuadScalar),
    Laurent(LaurentPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperValue {
    Scalar(QuadScalar),
    Laurent(LaurentPoly),
}

impl HyperValue {
    pub fn into_laurent(self) -> LaurentPoly {
        match self {
            HyperValue::Scalar(s) => LaurentPoly::constant(s),
            HyperValue::Laurent(p) => p,
        }
    }

    pub fn into_scalar(self) -> Option<QuadScalar> {
        match self {
            HyperValue::Scalar(s) => Some(s),
            HyperValue::Laurent(_) => None,
        }
    }
}

/// `pFq(upper, poly_upper; lower; argument)`.
///
/// Termination is driven by the rational upper parameters; `poly_upper`
/// holds parameters that depend on a polynomial variable, such as `1/3 + ix/6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergeomTerm {
    pub upper: Vec<BigRational>,
    pub poly_upper: Vec<LaurentPoly>,
    pub lower: Vec<BigRational>,
    pub argument: HyperArgument,
}

impl HypergeomTerm {
    pub fn new(upper: Vec<BigRational>, lower: Vec<BigRational>, argument: HyperArgument) -> Self {
        Self {
            upper,
            poly_upper: Vec::new(),
            lower,
            argument,
        }
    }

    pub fn with_poly_upper(mut self, params: Vec<LaurentPoly>) -> Self {
        self.poly_upper = params;
        self
    }

    fn radicand(&self) -> Radicand {
        match &self.argument {
            HyperArgument::Scalar(s) => s.radicand(),
            HyperArgument::Laurent(p) => p.radicand(),
        }
    }
}

fn nonpositive_integer(a: &BigRational) -> Option<usize> {
    (a.is_integer() && !a.is_positive()).then(|| (-a.to_integer()).to_usize().expect("small parameter"))
}

/// The last nonzero index `K = min{−a : a a nonpositive integer upper parameter}`.
pub fn termination_order(upper: &[BigRational]) -> Result<usize> {
    upper
        .iter()
        .filter_map(nonpositive_integer)
        .min()
        .ok_or(Error::NotTerminating)
}

/// Rational term ratios `∏(a)_k / (∏(b)_k · k!)` for `k = 0..=K`.
///
/// A lower parameter `b = −j` is admissible as long as `K ≤ j`.
pub fn term_coefficients(upper: &[BigRational], lower: &[BigRational]) -> Result<Vec<BigRational>> {
    let order = termination_order(upper)?;
    for b in lower {
        if let Some(j) = nonpositive_integer(b) {
            if order > j {
                return Err(Error::LowerParameterPole {
                    param: b.to_string(),
                    k: j + 1,
                });
            }
        }
    }
    let mut out = Vec::with_capacity(order + 1);
    let mut term = BigRational::one();
    for k in 0..=order {
        out.push(term.clone());
        if k == order {
            break;
        }
        let kk = BigRational::from_integer(k.into());
        for a in upper {
            term *= a + &kk;
        }
        for b in lower {
            term /= b + &kk;
        }
        term /= BigRational::from_integer((k + 1).into());
    }
    Ok(out)
}

/// `(a)_k` for a polynomial parameter.
pub fn pochhammer_poly(a: &LaurentPoly, k: usize) -> LaurentPoly {
    let rad = a.radicand();
    let mut acc = LaurentPoly::one(rad);
    for i in 0..k {
        let shift = LaurentPoly::constant(QuadScalar::from_integer(i as i64, rad));
        acc = acc.mul(&a.add(&shift));
    }
    acc
}

pub fn hyper_terminating(spec: &HypergeomTerm) -> Result<HyperValue> {
    let coeffs = term_coefficients(&spec.upper, &spec.lower)?;
    let rad = spec.radicand();
    for p in &spec.poly_upper {
        if p.radicand() != rad {
            return Err(Error::RadicandMismatch {
                left: rad,
                right: p.radicand(),
            });
        }
    }
    if spec.poly_upper.is_empty() {
        if let HyperArgument::Scalar(z) = &spec.argument {
            let mut acc = QuadScalar::zero(rad);
            let mut power = QuadScalar::one(rad);
            for c in &coeffs {
                acc = &acc + &power.scale(c);
                power = &power * z;
            }
            return Ok(HyperValue::Scalar(acc));
        }
    }
    let argument = match &spec.argument {
        HyperArgument::Scalar(z) => LaurentPoly::constant(z.clone()),
        HyperArgument::Laurent(p) => p.clone(),
    };
    let mut acc = LaurentPoly::zero(rad);
    let mut power = LaurentPoly::one(rad);
    let mut poch: Vec<LaurentPoly> = spec.poly_upper.iter().map(|_| LaurentPoly::one(rad)).collect();
    for (k, c) in coeffs.iter().enumerate() {
        let term = poch.iter().fold(power.scale_rational(c), |t, p| t.mul(p));
        acc = acc.add(&term);
        if k + 1 < coeffs.len() {
            power = power.mul(&argument);
            for (p, a) in poch.iter_mut().zip(&spec.poly_upper) {
                let shifted = a.add(&LaurentPoly::constant(QuadScalar::from_integer(k as i64, rad)));
                *p = p.mul(&shifted);
            }
        }
    }
    Ok(HyperValue::Laurent(acc))
}
