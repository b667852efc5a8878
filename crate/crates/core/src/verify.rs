//! Batteries of cross-route checks, grouped into suites.
//!
//! Checks within a run execute in parallel; the returned outcomes always come
//! back in the order the checks were declared.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::closed_forms::{closed_count, closed_refined};
use crate::error::{Error, Result};
use crate::exact::QuadScalar;
use crate::hankel::{
    enumeration_from_partition, factorization_check, moment_determinant, partition_function, refined_from_correlator,
};
use crate::moments::{cot_derivative_moments, series_moments, SpecialPoint};
use crate::orthopoly::{
    block_closed_form, difference_equation_residual, family_polynomials, moment_functional, norm_product,
    product_determinant, shift_identities, FamilyTag,
};
use crate::refined3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Moments,
    Orthopoly,
    Determinant,
    Refined3,
    Appendix,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Moments,
        Suite::Orthopoly,
        Suite::Determinant,
        Suite::Refined3,
        Suite::Appendix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Moments => "moments",
            Suite::Orthopoly => "orthopoly",
            Suite::Determinant => "determinant",
            Suite::Refined3 => "refined3",
            Suite::Appendix => "appendix",
        }
    }

    /// Parses a suite name, with `all` expanding to every suite.
    pub fn parse_selection(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        name.parse().map(|s| vec![s])
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::out_of_range("suite", s))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

type CheckFn = Box<dyn Fn() -> Result<bool> + Send + Sync>;

struct Check {
    suite: Suite,
    name: String,
    run: CheckFn,
}

fn check(suite: Suite, name: String, run: impl Fn() -> Result<bool> + Send + Sync + 'static) -> Check {
    Check {
        suite,
        name,
        run: Box::new(run),
    }
}

fn moments_checks(max: usize, out: &mut Vec<Check>) {
    for point in SpecialPoint::ALL {
        out.push(check(
            Suite::Moments,
            format!("chessboard {point} K={max}"),
            move || {
                let ms = cot_derivative_moments(point, max);
                Ok(ms.reduced_moments().iter().enumerate().all(
                    |(k, q)| {
                        if k % 2 == 1 {
                            q.is_zero()
                        } else {
                            q.is_positive()
                        }
                    },
                ))
            },
        ));
        let order = max.min(16);
        out.push(check(
            Suite::Moments,
            format!("series route {point} K={order}"),
            move || {
                let ms = cot_derivative_moments(point, order);
                let series = series_moments(point, order)?;
                for (k, m) in series.iter().enumerate() {
                    if m != &ms.moment(k)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ));
    }
}

fn orthogonality(tag: FamilyTag, n_max: usize) -> Result<bool> {
    let (point, sigma) = tag
        .functional()
        .ok_or_else(|| Error::NotPolynomial(format!("{tag} has no moment functional")))?;
    let degree = if tag.is_even_family() { 4 * n_max } else { 2 * n_max };
    let ms = cot_derivative_moments(point, degree + 2 * sigma);
    let family = family_polynomials(tag, n_max)?;
    family.check_leading()?;
    for j in 0..=n_max {
        for k in 0..=j {
            let value = moment_functional(&ms, sigma, &family.coeffs[j], &family.coeffs[k])?;
            let expected = if j == k {
                family.norms[j]
                    .clone()
                    .ok_or(Error::NotPolynomial(format!("{tag} norm")))?
            } else {
                QuadScalar::zero(value.radicand())
            };
            if value != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn orthopoly_checks(max: usize, out: &mut Vec<Check>) {
    let orthogonal = [
        FamilyTag::MeixnerPollaczek,
        FamilyTag::ContinuousHahn,
        FamilyTag::DualHahnEven,
        FamilyTag::DualHahnOdd,
    ];
    for tag in orthogonal {
        out.push(check(
            Suite::Orthopoly,
            format!("orthogonality {tag} n<={max}"),
            move || orthogonality(tag, max),
        ));
    }
    for tag in FamilyTag::ALL {
        out.push(check(
            Suite::Orthopoly,
            format!("difference equation {tag} n<={max}"),
            move || {
                for n in 0..=max {
                    if !difference_equation_residual(tag, n)?.is_zero() {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ));
    }
    out.push(check(
        Suite::Orthopoly,
        format!("shift identities m<={max}"),
        move || {
            for m in 0..=max {
                if !shift_identities(m)? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    ));
}

fn determinant_checks(max: usize, out: &mut Vec<Check>) {
    for point in SpecialPoint::ALL {
        for n in 1..=max {
            out.push(check(
                Suite::Determinant,
                format!("det = norm product {point} N={n}"),
                move || Ok(moment_determinant(point, n)? == product_determinant(point, n)?),
            ));
            out.push(check(
                Suite::Determinant,
                format!("A(N;x) two routes {point} N={n}"),
                move || Ok(enumeration_from_partition(point, n)? == closed_count(n, point.weight_x())?),
            ));
        }
        out.push(check(
            Suite::Determinant,
            format!("block factorization {point} m<={}", max / 2),
            move || {
                for m in 0..=max / 2 {
                    if !factorization_check(point, m)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ));
    }
    out.push(check(
        Suite::Determinant,
        format!("block closed forms m<={}", max / 2 + 1),
        move || {
            for m in 0..=max / 2 + 1 {
                for (sigma, tag) in [(0, FamilyTag::DualHahnEven), (1, FamilyTag::DualHahnOdd)] {
                    if block_closed_form(sigma, m)? != norm_product(tag, m)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        },
    ));
    out.push(check(
        Suite::Determinant,
        format!("free-fermion Z_N = 1 N<={max}"),
        move || {
            for n in 1..=max {
                if !partition_function(SpecialPoint::FreeFermion, n)?.value.is_one() {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    ));
}

fn refined3_checks(max: usize, out: &mut Vec<Check>) {
    for m in 0..=max {
        out.push(check(Suite::Refined3, format!("B routes m={m}"), move || {
            let closed = refined3::b_closed_form(m);
            closed.check_invariants()?;
            let generated = refined3::BCoefficients::from_generating(m, &refined3::e_generating(m)?)?;
            let hyper = (0..=2 * m)
                .map(|r| refined3::b_hypergeometric(m, r))
                .collect::<Result<Vec<_>>>()?;
            Ok(refined3::solve_five_term(m)? == closed && generated == closed && hyper == closed.values)
        }));
        out.push(check(Suite::Refined3, format!("gamma routes m={m}"), move || {
            let gamma = refined3::gamma_sequence(m);
            Ok(refined3::gamma_residuals(m, &gamma).iter().all(Zero::is_zero)
                && refined3::gamma_by_recurrence(m) == gamma)
        }));
        out.push(check(Suite::Refined3, format!("h from gamma m={m}"), move || {
            let (_, _, h) = refined3::fgh_polys(m);
            refined3::proportional(&h, &refined3::h_from_gamma(m))
        }));
    }
    for n in 1..=max {
        out.push(check(
            Suite::Refined3,
            format!("assemble vs determinant N={n}"),
            move || {
                let table = refined3::assemble(n)?;
                let det = refined_from_correlator(SpecialPoint::MinusHalf, n)?;
                Ok(table.a == det.refined)
            },
        ));
    }
}

fn appendix_checks(max: usize, out: &mut Vec<Check>) {
    for m in 0..=max {
        out.push(check(
            Suite::Appendix,
            format!("f = (x-1/x)^(2m+1) Q m={m}"),
            move || refined3::f_q_identity(m),
        ));
        out.push(check(Suite::Appendix, format!("g from f m={m}"), move || {
            Ok(refined3::gff_identity(m))
        }));
        out.push(check(Suite::Appendix, format!("V from Q matches E m={m}"), move || {
            refined3::v_e_consistency(m)
        }));
        out.push(check(Suite::Appendix, format!("E from psi m={m}"), move || {
            let e = refined3::to_u_basis(&refined3::e_generating(m)?)?;
            Ok(refined3::e_from_psi(m)? == e)
        }));
    }
    for m in 1..=max.max(1) {
        for k in 0..=max {
            out.push(check(
                Suite::Appendix,
                format!("psi relations m={m} k={k}"),
                move || refined3::psi_identities(m, k),
            ));
        }
    }
}

fn declare(suite: Suite, max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    match suite {
        Suite::Moments => moments_checks(max, &mut out),
        Suite::Orthopoly => orthopoly_checks(max, &mut out),
        Suite::Determinant => determinant_checks(max, &mut out),
        Suite::Refined3 => refined3_checks(max, &mut out),
        Suite::Appendix => appendix_checks(max, &mut out),
    }
    out
}

/// Runs the given suites with size parameter `max`.
pub fn run_suites(suites: &[Suite], max: usize) -> Vec<CheckOutcome> {
    let checks: Vec<Check> = suites.iter().flat_map(|&s| declare(s, max)).collect();
    checks
        .par_iter()
        .map(|c| {
            let (passed, detail) = match (c.run)() {
                Ok(true) => (true, None),
                Ok(false) => (false, Some("routes disagree".to_string())),
                Err(e) => (false, Some(e.to_string())),
            };
            CheckOutcome {
                suite: c.suite,
                name: c.name.clone(),
                passed,
                detail,
            }
        })
        .collect()
}

/// Every refined row `A(N, r; x)` computable by the closed or pipeline route.
pub fn refined_closed_route(n: usize, x: u32) -> Result<Vec<BigInt>> {
    match x {
        3 => Ok(refined3::assemble(n)?.a),
        _ => (1..=n).map(|r| closed_refined(n, r, x)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("appendix".parse::<Suite>().unwrap(), Suite::Appendix);
        assert_eq!(Suite::parse_selection("all").unwrap().len(), 5);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_run_passes_in_order() {
        let outcomes = run_suites(&Suite::ALL, 3);
        let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).collect();
        assert!(failed.is_empty(), "{failed:?}");
        let again = run_suites(&Suite::ALL, 3);
        assert_eq!(outcomes, again);
        assert_eq!(outcomes.first().unwrap().suite, Suite::Moments);
        assert_eq!(outcomes.last().unwrap().suite, Suite::Appendix);
    }
}
