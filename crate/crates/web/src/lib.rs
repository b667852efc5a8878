//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string; exact values travel as decimal strings
//! next to a float for plotting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use wasm_bindgen::prelude::*;

use square_ice::closed_forms::{closed_count, ff_correlator_closed, FreeFermionParameter};
use square_ice::verify::refined_closed_route;

const MAX_SIZE: usize = 40;

#[derive(Serialize, Debug, PartialEq)]
struct Entry {
    r: usize,
    exact: String,
    approx: f64,
}

#[derive(Serialize, Debug, PartialEq)]
struct Distribution {
    n: usize,
    x: u32,
    total: String,
    entries: Vec<Entry>,
}

#[derive(Serialize, Debug, PartialEq)]
struct CountRow {
    n: usize,
    counts: Vec<String>,
}

fn check_size(n: usize) -> Result<(), String> {
    if (1..=MAX_SIZE).contains(&n) {
        Ok(())
    } else {
        Err(format!("N must lie in 1..={MAX_SIZE}"))
    }
}

fn ratio_f64(num: &BigInt, den: &BigInt) -> f64 {
    BigRational::new(num.clone(), den.clone()).to_f64().unwrap_or(f64::NAN)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// Refined counts `A(N, r; x)` with the probabilities `A(N, r; x)/A(N; x)`.
pub fn refined_json(n: usize, x: u32) -> Result<String, String> {
    check_size(n)?;
    let total = closed_count(n, x).map_err(|e| e.to_string())?;
    let row = refined_closed_route(n, x).map_err(|e| e.to_string())?;
    let entries = row
        .iter()
        .enumerate()
        .map(|(i, a)| Entry {
            r: i + 1,
            exact: a.to_string(),
            approx: ratio_f64(a, &total),
        })
        .collect();
    to_json(&Distribution {
        n,
        x,
        total: total.to_string(),
        entries,
    })
}

/// Free-fermion boundary correlator at `α = numer/denom`.
pub fn free_fermion_json(n: usize, numer: u32, denom: u32) -> Result<String, String> {
    check_size(n)?;
    if numer == 0 || denom == 0 {
        return Err("alpha must be a positive fraction".into());
    }
    let alpha = FreeFermionParameter::new(BigRational::new(numer.into(), denom.into())).map_err(|e| e.to_string())?;
    let entries = ff_correlator_closed(n, &alpha)
        .into_iter()
        .enumerate()
        .map(|(i, h)| Entry {
            r: i + 1,
            approx: h.to_f64().unwrap_or(f64::NAN),
            exact: h.to_string(),
        })
        .collect();
    to_json(&Distribution {
        n,
        x: 2,
        total: "1".into(),
        entries,
    })
}

/// `A(N; x)` for `x = 0, 1, 2, 3` and `N = 1..=max_n`.
pub fn counts_json(max_n: usize) -> Result<String, String> {
    check_size(max_n)?;
    let rows = (1..=max_n)
        .map(|n| {
            let counts = (0..=3)
                .map(|x| closed_count(n, x).map(|c| c.to_string()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            Ok(CountRow { n, counts })
        })
        .collect::<Result<Vec<_>, String>>()?;
    to_json(&rows)
}

#[wasm_bindgen]
pub fn refined_distribution(n: usize, x: u32) -> Result<String, JsError> {
    refined_json(n, x).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn free_fermion_correlator(n: usize, alpha_numer: u32, alpha_denom: u32) -> Result<String, JsError> {
    free_fermion_json(n, alpha_numer, alpha_denom).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn counts_table(max_n: usize) -> Result<String, JsError> {
    counts_json(max_n).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refined_five_at_three() {
        let v: serde_json::Value = serde_json::from_str(&refined_json(5, 3).unwrap()).unwrap();
        assert_eq!(v["total"], "2025");
        let exact: Vec<&str> = v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["exact"].as_str().unwrap())
            .collect();
        assert_eq!(exact, ["90", "495", "855", "495", "90"]);
        assert!(refined_json(0, 1).is_err());
        assert!(refined_json(3, 4).is_err());
    }

    #[test]
    fn free_fermion_alpha() {
        let v: serde_json::Value = serde_json::from_str(&free_fermion_json(2, 2, 1).unwrap()).unwrap();
        assert_eq!(v["entries"][0]["exact"], "2/3");
        assert_eq!(v["entries"][1]["exact"], "1/3");
        assert!(free_fermion_json(3, 0, 1).is_err());
    }

    #[test]
    fn counts() {
        let v: serde_json::Value = serde_json::from_str(&counts_json(4).unwrap()).unwrap();
        assert_eq!(v[3]["counts"], serde_json::json!(["24", "42", "64", "90"]));
    }
}
