//! Memoized factorials, binomials and Pochhammer symbols.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

/// `n!`, cached in a process-wide table that only ever grows.
pub fn factorial(n: usize) -> BigInt {
    {
        let t = table().read().expect("factorial table poisoned");
        if let Some(v) = t.get(n) {
            return v.clone();
        }
    }
    let mut t = table().write().expect("factorial table poisoned");
    while t.len() <= n {
        let k = t.len();
        let next = &t[k - 1] * BigInt::from(k);
        t.push(next);
    }
    t[n].clone()
}

/// Binomial coefficient; zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Rising factorial `(a)_k = a(a+1)⋯(a+k−1)`.
pub fn pochhammer(a: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += BigRational::one();
    }
    acc
}

/// `binom(a, k) = a(a−1)⋯(a−k+1)/k!` for rational `a`.
pub fn generalized_binomial(a: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term -= BigRational::one();
    }
    acc / BigRational::from_integer(factorial(k))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
