//! Finitely supported Laurent polynomials over [`QuadScalar`].

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::{QuadScalar, Radicand};
use crate::error::{Error, Result};

/// `Σ c_e x^e` with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, QuadScalar>,
    radicand: Radicand,
}

impl LaurentPoly {
    pub fn zero(radicand: Radicand) -> Self {
        Self {
            terms: BTreeMap::new(),
            radicand,
        }
    }

    pub fn constant(c: QuadScalar) -> Self {
        Self::monomial(c, 0)
    }

    pub fn one(radicand: Radicand) -> Self {
        Self::constant(QuadScalar::one(radicand))
    }

    pub fn monomial(c: QuadScalar, exp: i64) -> Self {
        let mut p = Self::zero(c.radicand());
        p.set(exp, c);
        p
    }

    /// The variable `x` itself.
    pub fn x(radicand: Radicand) -> Self {
        Self::monomial(QuadScalar::one(radicand), 1)
    }

    pub fn from_terms<I>(radicand: Radicand, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, QuadScalar)>,
    {
        let mut p = Self::zero(radicand);
        for (e, c) in terms {
            if c.radicand() != radicand {
                return Err(Error::RadicandMismatch {
                    left: radicand,
                    right: c.radicand(),
                });
            }
            let sum = &p.coeff(e) + &c;
            p.set(e, sum);
        }
        Ok(p)
    }

    /// Builds from rational coefficients.
    pub fn from_rational_terms<I>(radicand: Radicand, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        Self::from_terms(
            radicand,
            terms
                .into_iter()
                .map(|(e, c)| (e, QuadScalar::from_rational(c, radicand))),
        )
        .expect("uniform radicand")
    }

    pub fn radicand(&self) -> Radicand {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> QuadScalar {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| QuadScalar::zero(self.radicand))
    }

    fn set(&mut self, exp: i64, c: QuadScalar) {
        if c.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &QuadScalar)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.radicand == other.radicand {
            Ok(())
        } else {
            Err(Error::RadicandMismatch {
                left: self.radicand,
                right: other.radicand,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let sum = &out.coeff(*e) + c;
            out.set(*e, sum);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut acc: BTreeMap<i64, QuadScalar> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let prod = ca * cb;
                acc.entry(ea + eb).and_modify(|v| *v = &*v + &prod).or_insert(prod);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self {
            terms: acc,
            radicand: self.radicand,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other)
            .unwrap_or_else(|e| panic!("LaurentPoly::add: {e}"))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other)
            .unwrap_or_else(|e| panic!("LaurentPoly::sub: {e}"))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other)
            .unwrap_or_else(|e| panic!("LaurentPoly::mul: {e}"))
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            radicand: self.radicand,
        }
    }

    pub fn scale(&self, k: &QuadScalar) -> Self {
        let mut out = Self::zero(self.radicand);
        for (e, c) in &self.terms {
            out.set(*e, c * k);
        }
        out
    }

    pub fn scale_rational(&self, k: &BigRational) -> Self {
        let mut out = Self::zero(self.radicand);
        for (e, c) in &self.terms {
            out.set(*e, c.scale(k));
        }
        out
    }

    /// Multiplies by `x^shift`.
    pub fn shift_exponents(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
            radicand: self.radicand,
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.radicand);
        let mut sq = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// `x → x⁻¹`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
            radicand: self.radicand,
        }
    }

    pub fn evaluate_at(&self, point: &QuadScalar) -> Result<QuadScalar> {
        if point.radicand() != self.radicand {
            return Err(Error::RadicandMismatch {
                left: self.radicand,
                right: point.radicand(),
            });
        }
        if point.is_zero() {
            if self.min_exponent().is_some_and(|e| e < 0) {
                return Err(Error::EvaluationAtZero);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = QuadScalar::zero(self.radicand);
        for (e, c) in &self.terms {
            acc = &acc + &(c * &point.pow(*e)?);
        }
        Ok(acc)
    }

    /// `p(inner(x))` for a polynomial `p` (no negative exponents).
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check(inner)?;
        if self.min_exponent().is_some_and(|e| e < 0) {
            return Err(Error::NotPolynomial(format!("{self}")));
        }
        let Some(top) = self.max_exponent() else {
            return Ok(self.clone());
        };
        // Horner
        let mut acc = Self::zero(self.radicand);
        for e in (0..=top).rev() {
            acc = acc.mul(inner).add(&Self::constant(self.coeff(e)));
        }
        Ok(acc)
    }

    /// Exchanges every coefficient for its Galois conjugate.
    pub fn conj(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
            radicand: self.radicand,
        }
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(QuadScalar::is_rational)
    }

    pub fn to_rational_terms(&self, what: &str) -> Result<BTreeMap<i64, BigRational>> {
        self.terms
            .iter()
            .map(|(e, c)| Ok((*e, c.expect_rational(what)?)))
            .collect()
    }

    /// Re-tags a rational Laurent polynomial.
    pub fn with_radicand(&self, radicand: Radicand) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((*e, c.with_radicand(radicand)?)))
            .collect::<Result<_>>()?;
        Ok(Self { terms, radicand })
    }

    /// Sum of coefficients, i.e. the value at x = 1.
    pub fn coefficient_sum(&self) -> QuadScalar {
        self.terms
            .values()
            .fold(QuadScalar::zero(self.radicand), |acc, c| &acc + c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{e}")?,
            }
        }
        Ok(())
    }
}
