//! Hankel moments of the domain-wall weight at the three special points.
//!
//! With `u = cot(λ−η)` and `v = cot(λ+η)` the weight is `u − v`, and both
//! satisfy `w′ = −(1 + w²)`. Every λ-derivative is therefore `P_k(u) − P_k(v)`
//! for integer polynomials `P_0(w) = w`, `P_{k+1} = −(1 + w²)·P_k′`. At
//! λ = π/2 we have `u = t = tan η` and `v = −t`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{int, rat};
use crate::error::{Error, Result};
use crate::exact::{QuadScalar, Radicand, TaylorSeries, TrigKind};

/// The three points on the line λ = π/2 where the weight x is 1, 2 or 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialPoint {
    /// η = π/6, Δ = 1/2, x = 1.
    Ice,
    /// η = π/4, Δ = 0, x = 2.
    FreeFermion,
    /// η = π/3, Δ = −1/2, x = 3.
    MinusHalf,
}

impl SpecialPoint {
    pub const ALL: [SpecialPoint; 3] = [SpecialPoint::Ice, SpecialPoint::FreeFermion, SpecialPoint::MinusHalf];

    pub fn from_weight(x: u32) -> Result<Self> {
        match x {
            1 => Ok(SpecialPoint::Ice),
            2 => Ok(SpecialPoint::FreeFermion),
            3 => Ok(SpecialPoint::MinusHalf),
            _ => Err(Error::UnsupportedWeight(x)),
        }
    }

    pub fn weight_x(self) -> u32 {
        match self {
            SpecialPoint::Ice => 1,
            SpecialPoint::FreeFermion => 2,
            SpecialPoint::MinusHalf => 3,
        }
    }

    pub fn radicand(self) -> Radicand {
        match self {
            SpecialPoint::FreeFermion => Radicand::Two,
            _ => Radicand::Three,
        }
    }

    pub fn tan_eta_squared(self) -> BigRational {
        match self {
            SpecialPoint::Ice => rat(1, 3),
            SpecialPoint::FreeFermion => int(1),
            SpecialPoint::MinusHalf => int(3),
        }
    }

    fn q(self, a: (i64, i64), b: (i64, i64)) -> QuadScalar {
        QuadScalar::from_parts(a, b, self.radicand())
    }

    pub fn tan_eta(self) -> QuadScalar {
        match self {
            SpecialPoint::Ice => self.q((0, 1), (1, 3)),
            SpecialPoint::FreeFermion => self.q((1, 1), (0, 1)),
            SpecialPoint::MinusHalf => self.q((0, 1), (1, 1)),
        }
    }

    pub fn sin_eta(self) -> QuadScalar {
        match self {
            SpecialPoint::Ice => self.q((1, 2), (0, 1)),
            SpecialPoint::FreeFermion => self.q((0, 1), (1, 2)),
            SpecialPoint::MinusHalf => self.q((0, 1), (1, 2)),
        }
    }

    pub fn cos_eta(self) -> QuadScalar {
        match self {
            SpecialPoint::Ice => self.q((0, 1), (1, 2)),
            SpecialPoint::FreeFermion => self.q((0, 1), (1, 2)),
            SpecialPoint::MinusHalf => self.q((1, 2), (0, 1)),
        }
    }

    pub fn sin_two_eta(self) -> QuadScalar {
        &(&self.sin_eta() * &self.cos_eta()) * &QuadScalar::from_integer(2, self.radicand())
    }

    pub fn cos_two_eta(self) -> QuadScalar {
        let c = self.cos_eta();
        let s = self.sin_eta();
        &(&c * &c) - &(&s * &s)
    }

    /// `sin(λ−η)·sin(λ+η)` at λ = π/2, which is `cos²η`.
    pub fn vertex_product(self) -> BigRational {
        match self {
            SpecialPoint::Ice => rat(3, 4),
            SpecialPoint::FreeFermion => rat(1, 2),
            SpecialPoint::MinusHalf => rat(1, 4),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SpecialPoint::Ice => "ice",
            SpecialPoint::FreeFermion => "free-fermion",
            SpecialPoint::MinusHalf => "minus-half",
        }
    }
}

impl fmt::Display for SpecialPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Reduced moments `q_k` with `m_k = tan η · q_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence {
    point: SpecialPoint,
    reduced: Arc<Vec<BigRational>>,
}

impl MomentSequence {
    pub fn point(&self) -> SpecialPoint {
        self.point
    }

    pub fn reduced_moments(&self) -> &[BigRational] {
        &self.reduced
    }

    /// Highest available index K.
    pub fn order(&self) -> usize {
        self.reduced.len() - 1
    }

    pub fn reduced(&self, k: usize) -> Result<&BigRational> {
        self.reduced.get(k).ok_or(Error::InsufficientMoments {
            needed: k,
            available: self.reduced.len(),
        })
    }

    /// The true moment `m_k` including the `tan η` factor.
    pub fn moment(&self, k: usize) -> Result<QuadScalar> {
        Ok(self.point.tan_eta().scale(self.reduced(k)?))
    }

    /// `q_{2n+2σ}` for `n = 0..=2m−2`, the entries of the σ-th even block.
    pub fn even_subsequence(&self, sigma: usize, m: usize) -> Result<Vec<BigRational>> {
        if sigma > 1 {
            return Err(Error::out_of_range("sigma", sigma));
        }
        if m == 0 {
            return Ok(Vec::new());
        }
        (0..=2 * m - 2)
            .map(|n| self.reduced(2 * n + 2 * sigma).cloned())
            .collect()
    }
}

/// Integer polynomials `R_k(s)` with `q_k = R_k(tan²η)`, for `k = 0..=order`.
///
/// Odd indices come out as the zero polynomial.
pub fn reduced_moment_polynomials(order: usize) -> Vec<Vec<BigInt>> {
    let derivs = cot_derivative_polynomials(order);
    derivs
        .iter()
        .take(order + 1)
        .enumerate()
        .map(|(k, p)| {
            if k % 2 == 1 {
                // P_k is even in w, so P_k(t) − P_k(−t) vanishes.
                return Vec::new();
            }
            // P_k(t) − P_k(−t) = 2·Σ_{odd j} c_j t^j = t·Σ 2c_{2i+1} s^i
            p.iter().skip(1).step_by(2).map(|c| c * BigInt::from(2)).collect()
        })
        .collect()
}

fn cot_derivative_polynomials(order: usize) -> Arc<Vec<Vec<BigInt>>> {
    static CACHE: OnceLock<RwLock<Arc<Vec<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(Arc::new(vec![vec![BigInt::zero(), BigInt::one()]])));
    {
        let polys = cache.read().expect("moment cache poisoned");
        if polys.len() > order {
            return Arc::clone(&polys);
        }
    }
    let mut guard = cache.write().expect("moment cache poisoned");
    if guard.len() <= order {
        let mut polys: Vec<Vec<BigInt>> = guard.as_ref().clone();
        while polys.len() <= order {
            let next = next_cot_derivative(polys.last().expect("nonempty"));
            polys.push(next);
        }
        *guard = Arc::new(polys);
    }
    Arc::clone(&guard)
}

/// `−(1 + w²)·P′(w)`.
fn next_cot_derivative(p: &[BigInt]) -> Vec<BigInt> {
    let deriv: Vec<BigInt> = p.iter().enumerate().skip(1).map(|(j, c)| c * BigInt::from(j)).collect();
    let mut out = vec![BigInt::zero(); deriv.len() + 2];
    for (j, c) in deriv.iter().enumerate() {
        out[j] -= c;
        out[j + 2] -= c;
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn evaluate(poly: &[BigInt], s: &BigRational) -> BigRational {
    poly.iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * s + BigRational::from_integer(c.clone())
    })
}

type PointCache = RwLock<HashMap<SpecialPoint, Arc<Vec<BigRational>>>>;

fn point_cache() -> &'static PointCache {
    static CACHE: OnceLock<PointCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Reduced moments `q_0..=q_K` at `point`.
///
/// Results are cached per point and extended on demand; concurrent callers
/// see either the old prefix or a longer one, never a partial fill.
pub fn cot_derivative_moments(point: SpecialPoint, order: usize) -> MomentSequence {
    if let Some(cached) = point_cache()
        .read()
        .expect("moment cache poisoned")
        .get(&point)
        .filter(|v| v.len() > order)
    {
        return MomentSequence {
            point,
            reduced: Arc::new(cached[..=order].to_vec()),
        };
    }
    let s = point.tan_eta_squared();
    let values: Vec<BigRational> = reduced_moment_polynomials(order)
        .iter()
        .map(|p| evaluate(p, &s))
        .collect();
    let shared = Arc::new(values);
    let mut cache = point_cache().write().expect("moment cache poisoned");
    let entry = cache.entry(point).or_insert_with(|| Arc::clone(&shared));
    if entry.len() < shared.len() {
        *entry = Arc::clone(&shared);
    }
    MomentSequence { point, reduced: shared }
}

/// Moments `m_0..=m_K` read off the Taylor expansion of
/// `sin 2η / (cos(ε−η) cos(ε+η))` around ε = 0.
pub fn series_moments(point: SpecialPoint, order: usize) -> Result<Vec<QuadScalar>> {
    let (sin, cos) = (point.sin_eta(), point.cos_eta());
    let left = TaylorSeries::trig(TrigKind::Cos, &-&sin, &cos, order)?;
    let right = TaylorSeries::trig(TrigKind::Cos, &sin, &cos, order)?;
    let denom = left.mul(&right, order)?;
    let numer = TaylorSeries::constant(point.sin_two_eta(), order);
    let weight = numer.div(&denom, order)?;
    (0..=order).map(|k| weight.derivative_at_zero(k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(point: SpecialPoint, k: usize) -> Vec<BigRational> {
        cot_derivative_moments(point, k).reduced_moments().to_vec()
    }

    #[test]
    fn low_order_examples() {
        assert_eq!(q(SpecialPoint::Ice, 2), vec![int(2), int(0), rat(16, 3)]);
        assert_eq!(q(SpecialPoint::FreeFermion, 2), vec![int(2), int(0), int(8)]);
        assert_eq!(q(SpecialPoint::MinusHalf, 2), vec![int(2), int(0), int(16)]);
        for p in SpecialPoint::ALL {
            assert_eq!(q(p, 1)[1], int(0));
        }
    }

    #[test]
    fn even_blocks() {
        let mh = cot_derivative_moments(SpecialPoint::MinusHalf, 4);
        assert_eq!(mh.even_subsequence(0, 1).unwrap(), vec![int(2)]);
        assert_eq!(mh.even_subsequence(1, 1).unwrap(), vec![int(16)]);
        let ice = cot_derivative_moments(SpecialPoint::Ice, 4);
        let block = ice.even_subsequence(0, 2).unwrap();
        assert_eq!(block[..2], [int(2), rat(16, 3)]);
        assert_eq!(block[2], ice.reduced_moments()[4]);
        assert!(matches!(
            ice.even_subsequence(1, 2),
            Err(Error::InsufficientMoments { needed: 6, .. })
        ));
    }

    #[test]
    fn low_polynomials() {
        // q_2 = 4 + 4s, q_4 = 16(2 + 5s + 3s²)
        reduced_moment_polynomials(12);
        let polys = reduced_moment_polynomials(4);
        assert_eq!(polys.len(), 5);
        assert_eq!(polys[0], vec![BigInt::from(2)]);
        assert_eq!(polys[2], vec![BigInt::from(4), BigInt::from(4)]);
        assert!(polys[3].is_empty());
        assert_eq!(polys[4], vec![BigInt::from(32), BigInt::from(80), BigInt::from(48)]);
    }

    #[test]
    fn cache_returns_consistent_prefixes() {
        let long = cot_derivative_moments(SpecialPoint::Ice, 12);
        let short = cot_derivative_moments(SpecialPoint::Ice, 6);
        assert_eq!(short.reduced_moments(), &long.reduced_moments()[..=6]);
        assert_eq!(
            short.moment(0).unwrap(),
            QuadScalar::from_parts((0, 1), (2, 3), Radicand::Three)
        );
    }

    #[test]
    fn trig_values_are_consistent() {
        for p in SpecialPoint::ALL {
            let s = p.sin_eta();
            let c = p.cos_eta();
            assert!((&(&s * &s) + &(&c * &c)).is_one());
            assert_eq!(&p.tan_eta() * &c, s);
            assert_eq!((&c * &c).to_rational().unwrap(), p.vertex_product());
            let t = p.tan_eta();
            assert_eq!((&t * &t).to_rational().unwrap(), p.tan_eta_squared());
        }
        assert!(SpecialPoint::FreeFermion.cos_two_eta().is_zero());
    }

    #[test]
    fn series_route_agrees() {
        for p in SpecialPoint::ALL {
            let ms = cot_derivative_moments(p, 10);
            let series = series_moments(p, 10).unwrap();
            for (k, m) in series.iter().enumerate() {
                assert_eq!(m, &ms.moment(k).unwrap(), "{p} k = {k}");
            }
        }
    }
}
