//! Truncated Taylor series with exact coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{factorial_rational, QuadScalar, Radicand};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigKind {
    Sin,
    Cos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Div,
}

/// `c_0 + c_1 ε + … + c_K ε^K + O(ε^{K+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorSeries {
    coeffs: Vec<QuadScalar>,
    radicand: Radicand,
}

impl TaylorSeries {
    /// Builds a series of order `order`, padding with zeros or truncating.
    pub fn from_coeffs(mut coeffs: Vec<QuadScalar>, order: usize, radicand: Radicand) -> Result<Self> {
        for c in &coeffs {
            if c.radicand() != radicand {
                return Err(Error::RadicandMismatch {
                    left: radicand,
                    right: c.radicand(),
                });
            }
        }
        coeffs.resize(order + 1, QuadScalar::zero(radicand));
        Ok(Self { coeffs, radicand })
    }

    pub fn from_rationals(coeffs: &[BigRational], order: usize, radicand: Radicand) -> Self {
        let c = coeffs
            .iter()
            .map(|r| QuadScalar::from_rational(r.clone(), radicand))
            .collect();
        Self::from_coeffs(c, order, radicand).expect("uniform radicand")
    }

    pub fn constant(c: QuadScalar, order: usize) -> Self {
        let radicand = c.radicand();
        Self::from_coeffs(vec![c], order, radicand).expect("uniform radicand")
    }

    pub fn one(order: usize, radicand: Radicand) -> Self {
        Self::constant(QuadScalar::one(radicand), order)
    }

    /// The truncation order K.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn radicand(&self) -> Radicand {
        self.radicand
    }

    pub fn coeffs(&self) -> &[QuadScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&QuadScalar> {
        self.coeffs.get(n)
    }

    /// Expansion of `sin(ε+θ)` or `cos(ε+θ)` given `sin θ` and `cos θ`.
    pub fn trig(kind: TrigKind, phase_sin: &QuadScalar, phase_cos: &QuadScalar, order: usize) -> Result<Self> {
        let radicand = phase_sin.radicand();
        let norm = phase_sin
            .checked_mul(phase_sin)?
            .checked_add(&phase_cos.checked_mul(phase_cos)?)?;
        if !norm.is_one() {
            return Err(Error::PhaseNotNormalized(norm.to_string()));
        }
        // sin(ε+θ) = sinθ·cos ε + cosθ·sin ε
        // cos(ε+θ) = cosθ·cos ε − sinθ·sin ε
        let (even, odd) = match kind {
            TrigKind::Sin => (phase_sin.clone(), phase_cos.clone()),
            TrigKind::Cos => (phase_cos.clone(), -phase_sin),
        };
        let coeffs = (0..=order)
            .map(|n| {
                let base = if n % 2 == 0 { &even } else { &odd };
                let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
                base.scale(&(BigRational::from_integer(BigInt::from(sign)) / factorial_rational(n)))
            })
            .collect();
        Ok(Self { coeffs, radicand })
    }

    fn check(&self, other: &Self, order: usize) -> Result<()> {
        if self.radicand != other.radicand {
            return Err(Error::RadicandMismatch {
                left: self.radicand,
                right: other.radicand,
            });
        }
        let available = self.order().min(other.order());
        if order > available {
            return Err(Error::TruncationExceeded {
                requested: order,
                available,
            });
        }
        Ok(())
    }

    pub fn combine(&self, other: &Self, op: SeriesOp, order: usize) -> Result<Self> {
        match op {
            SeriesOp::Add => self.add(other, order),
            SeriesOp::Mul => self.mul(other, order),
            SeriesOp::Div => self.div(other, order),
        }
    }

    pub fn add(&self, other: &Self, order: usize) -> Result<Self> {
        self.check(other, order)?;
        let coeffs = (0..=order).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect();
        Ok(Self {
            coeffs,
            radicand: self.radicand,
        })
    }

    pub fn mul(&self, other: &Self, order: usize) -> Result<Self> {
        self.check(other, order)?;
        let mut coeffs = vec![QuadScalar::zero(self.radicand); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(Self {
            coeffs,
            radicand: self.radicand,
        })
    }

    pub fn div(&self, other: &Self, order: usize) -> Result<Self> {
        self.check(other, order)?;
        if other.coeffs[0].is_zero() {
            return Err(Error::SeriesNotInvertible);
        }
        let inv0 = other.coeffs[0].inv()?;
        let mut out: Vec<QuadScalar> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                if !other.coeffs[k].is_zero() {
                    acc = &acc - &(&other.coeffs[k] * &out[n - k]);
                }
            }
            out.push(&acc * &inv0);
        }
        Ok(Self {
            coeffs: out,
            radicand: self.radicand,
        })
    }

    /// `self^exp` truncated to this series' own order.
    pub fn pow(&self, exp: usize) -> Self {
        let order = self.order();
        let mut acc = Self::one(order, self.radicand);
        for _ in 0..exp {
            acc = acc.mul(self, order).expect("same order and radicand");
        }
        acc
    }

    /// `j!·c_j`, the j-th derivative at ε = 0.
    pub fn derivative_at_zero(&self, j: usize) -> Result<QuadScalar> {
        let c = self.coeffs.get(j).ok_or(Error::TruncationExceeded {
            requested: j,
            available: self.order(),
        })?;
        Ok(c.scale(&factorial_rational(j)))
    }
}
