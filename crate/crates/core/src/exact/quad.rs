//! Exact scalars `a + b·√d` for a small fixed set of radicands.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The square-free radicands that occur at the special points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Radicand {
    /// √−3, hosts q = e^{iπ/3} = 1/2 + (1/2)√−3.
    MinusThree,
    /// √−1 = i.
    MinusOne,
    Two,
    Three,
}

impl Radicand {
    pub const ALL: [Radicand; 4] = [Radicand::MinusThree, Radicand::MinusOne, Radicand::Two, Radicand::Three];

    pub fn value(self) -> i64 {
        match self {
            Radicand::MinusThree => -3,
            Radicand::MinusOne => -1,
            Radicand::Two => 2,
            Radicand::Three => 3,
        }
    }

    pub fn from_value(d: i64) -> Result<Self> {
        match d {
            -3 => Ok(Radicand::MinusThree),
            -1 => Ok(Radicand::MinusOne),
            2 => Ok(Radicand::Two),
            3 => Ok(Radicand::Three),
            _ => Err(Error::out_of_range("radicand", d)),
        }
    }

    pub fn is_real(self) -> bool {
        self.value() > 0
    }

    fn as_rational(self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.value()))
    }
}

impl fmt::Display for Radicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// An element `rational + surd·√radicand` of a quadratic extension of ℚ.
///
/// Arithmetic between scalars with different radicands is an error. The
/// `checked_*` methods report it; the operator impls panic on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    rational: BigRational,
    surd: BigRational,
    radicand: Radicand,
}

impl QuadScalar {
    pub fn new(rational: BigRational, surd: BigRational, radicand: Radicand) -> Self {
        Self {
            rational,
            surd,
            radicand,
        }
    }

    pub fn from_rational(r: BigRational, radicand: Radicand) -> Self {
        Self::new(r, BigRational::zero(), radicand)
    }

    pub fn from_integer(i: impl Into<BigInt>, radicand: Radicand) -> Self {
        Self::from_rational(BigRational::from_integer(i.into()), radicand)
    }

    /// `n/d` as a scalar.
    pub fn ratio(n: i64, d: i64, radicand: Radicand) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()), radicand)
    }

    /// `(a/b) + (c/d)·√radicand` from small integers.
    pub fn from_parts(a: (i64, i64), c: (i64, i64), radicand: Radicand) -> Self {
        Self::new(
            BigRational::new(a.0.into(), a.1.into()),
            BigRational::new(c.0.into(), c.1.into()),
            radicand,
        )
    }

    pub fn zero(radicand: Radicand) -> Self {
        Self::from_rational(BigRational::zero(), radicand)
    }

    pub fn one(radicand: Radicand) -> Self {
        Self::from_rational(BigRational::one(), radicand)
    }

    /// The generator √radicand itself.
    pub fn sqrt_radicand(radicand: Radicand) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), radicand)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.surd
    }

    pub fn radicand(&self) -> Radicand {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rational.is_one() && self.surd.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.rational.clone())
    }

    /// Lossless conversion to ℚ, failing with a labelled error otherwise.
    pub fn expect_rational(&self, what: &str) -> Result<BigRational> {
        self.to_rational().ok_or_else(|| Error::IrrationalResidue {
            what: what.to_string(),
            value: self.to_string(),
        })
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Re-tags a rational scalar. Fails if a surd part is present.
    pub fn with_radicand(&self, radicand: Radicand) -> Result<Self> {
        if self.radicand == radicand {
            return Ok(self.clone());
        }
        if !self.is_rational() {
            return Err(Error::RadicandMismatch {
                left: self.radicand,
                right: radicand,
            });
        }
        Ok(Self::from_rational(self.rational.clone(), radicand))
    }

    /// Galois conjugate `a − b√d`.
    pub fn conj(&self) -> Self {
        Self::new(self.rational.clone(), -&self.surd, self.radicand)
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        &self.rational * &self.rational - self.radicand.as_rational() * &self.surd * &self.surd
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.rational * k, &self.surd * k, self.radicand)
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
        Ok(Self::new(
            &self.rational + &other.rational,
            &self.surd + &other.surd,
            self.radicand,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(
            &self.rational - &other.rational,
            &self.surd - &other.surd,
            self.radicand,
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_rational() {
            return Ok(other.scale(&self.rational));
        }
        if other.is_rational() {
            return Ok(self.scale(&other.rational));
        }
        let d = self.radicand.as_rational();
        let rational = &self.rational * &other.rational + d * &self.surd * &other.surd;
        let surd = &self.rational * &other.surd + &self.surd * &other.rational;
        Ok(Self::new(rational, surd, self.radicand))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.rational.recip(), self.radicand));
        }
        // The radicands are not squares, so the norm of a nonzero element is nonzero.
        let n = self.norm();
        Ok(Self::new(&self.rational / &n, -&self.surd / &n, self.radicand))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if other.is_rational() {
            if other.rational.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(self.scale(&other.rational.recip()));
        }
        self.checked_mul(&other.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.radicand);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Exact sign for real radicands; `None` for the imaginary ones unless
    /// the value is rational.
    pub fn signum(&self) -> Option<Ordering> {
        if self.is_rational() {
            return Some(self.rational.cmp(&BigRational::zero()));
        }
        if !self.radicand.is_real() {
            return None;
        }
        let zero = BigRational::zero();
        let a = self.rational.cmp(&zero);
        let b = self.surd.cmp(&zero);
        if a == b || a == Ordering::Equal {
            return Some(b);
        }
        // Opposite signs: compare a² against d·b².
        let lhs = &self.rational * &self.rational;
        let rhs = self.radicand.as_rational() * &self.surd * &self.surd;
        Some(match lhs.cmp(&rhs) {
            Ordering::Greater => a,
            Ordering::Less => b,
            Ordering::Equal => Ordering::Equal,
        })
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Some(Ordering::Greater)
    }

    /// Floating-point approximation of a real value, for display only.
    pub fn to_f64(&self) -> Option<f64> {
        if !self.is_rational() && !self.radicand.is_real() {
            return None;
        }
        let a = self.rational.to_f64()?;
        let b = self.surd.to_f64()?;
        Some(a + b * (self.radicand.value() as f64).sqrt())
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.surd.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "{}*sqrt({})", self.surd, self.radicand),
            (false, false) => {
                let sign = if self.surd.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{} {} {}*sqrt({})",
                    self.rational,
                    sign,
                    self.surd.abs(),
                    self.radicand
                )
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("QuadScalar::{}: {}", stringify!($method), e),
                }
            }
        }
        impl $trait<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar::new(-self.rational, -self.surd, self.radicand)
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -self.clone()
    }
}
