//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact. Criteria with a runtime budget fail when the
//! budget is exceeded even if the values agree.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use square_ice::closed_forms::{
    asm_count, asm_count_first_form, closed_count, closed_refined, ice_correlator_closed, recurrence_refined_ff,
    recurrence_refined_ice, FreeFermionParameter,
};
use square_ice::combinat::rat;
use square_ice::exact::QuadScalar;
use square_ice::hankel::{enumeration_from_partition, moment_determinant, partition_function, refined_from_correlator};
use square_ice::moments::{cot_derivative_moments, SpecialPoint};
use square_ice::oracle::oracle_counts;
use square_ice::orthopoly::{
    block_closed_form, difference_equation_residual, family_polynomials, moment_functional, product_determinant,
    shift_identities, FamilyTag,
};
use square_ice::refined3;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: square_ice::Error) -> String {
    e.to_string()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn totals_triple_route() -> Outcome {
    for n in 1..=6 {
        for x in 1..=3u32 {
            let point = SpecialPoint::from_weight(x).map_err(err)?;
            let closed = closed_count(n, x).map_err(err)?;
            let det = enumeration_from_partition(point, n).map_err(err)?;
            let oracle = oracle_counts(n, x).map_err(err)?.total;
            ensure(closed == det && det == oracle, || {
                format!("A({n};{x}): closed {closed}, determinant {det}, oracle {oracle}")
            })?;
        }
    }
    let pinned = [(4, 1, 42), (4, 2, 64), (4, 3, 90), (5, 3, 2025)];
    for (n, x, v) in pinned {
        let got = closed_count(n, x).map_err(err)?;
        ensure(got == BigInt::from(v), || format!("A({n};{x}) = {got}, expected {v}"))?;
    }
    Ok(())
}

fn scaled(h: &[BigRational], total: &BigInt) -> Result<Vec<BigInt>, String> {
    h.iter()
        .map(|v| {
            let a = v * BigRational::from_integer(total.clone());
            a.is_integer()
                .then(|| a.to_integer())
                .ok_or_else(|| format!("non-integer {a}"))
        })
        .collect()
}

fn refined_triple_route() -> Outcome {
    for n in 1..=6 {
        for x in 1..=3u32 {
            let point = SpecialPoint::from_weight(x).map_err(err)?;
            let total = closed_count(n, x).map_err(err)?;
            let closed = match x {
                1 => scaled(&recurrence_refined_ice(n), &total)?,
                2 => scaled(&recurrence_refined_ff(n, &FreeFermionParameter::symmetric()), &total)?,
                _ => refined3::assemble(n).map_err(err)?.a,
            };
            let det = refined_from_correlator(point, n).map_err(err)?.refined;
            let oracle = oracle_counts(n, x).map_err(err)?.refined;
            ensure(closed == det && det == oracle, || {
                format!("A({n},r;{x}): closed {closed:?}, determinant {det:?}, oracle {oracle:?}")
            })?;
        }
    }
    let row = refined3::assemble(5).map_err(err)?.a;
    ensure(row == big(&[90, 495, 855, 495, 90]), || format!("A(5,r;3) = {row:?}"))
}

fn determinant_products() -> Outcome {
    for point in SpecialPoint::ALL {
        for n in 1..=10 {
            let det = moment_determinant(point, n).map_err(err)?;
            let product = product_determinant(point, n).map_err(err)?;
            ensure(det == product, || {
                format!("{point} N={n}: det {det}, product {product}")
            })?;
            if point == SpecialPoint::MinusHalf {
                let blocks =
                    &block_closed_form(0, n.div_ceil(2)).map_err(err)? * &block_closed_form(1, n / 2).map_err(err)?;
                ensure(det == blocks, || {
                    format!("N={n}: det {det}, block closed forms {blocks}")
                })?;
            }
        }
    }
    Ok(())
}

fn free_fermion_partition() -> Outcome {
    for n in 1..=10 {
        let z = partition_function(SpecialPoint::FreeFermion, n).map_err(err)?.value;
        ensure(z.is_one(), || format!("Z_{n} = {z}"))?;
    }
    Ok(())
}

fn orthogonality() -> Outcome {
    let tags = [
        FamilyTag::MeixnerPollaczek,
        FamilyTag::ContinuousHahn,
        FamilyTag::DualHahnEven,
        FamilyTag::DualHahnOdd,
    ];
    for tag in tags {
        let (point, sigma) = tag.functional().ok_or_else(|| format!("{tag}: no functional"))?;
        let ms = cot_derivative_moments(point, 40);
        let family = family_polynomials(tag, 8).map_err(err)?;
        family.check_leading().map_err(err)?;
        for j in 0..=8 {
            for k in 0..=8 {
                let value = moment_functional(&ms, sigma, &family.coeffs[j], &family.coeffs[k]).map_err(err)?;
                let expected = if j == k {
                    family.norms[j].clone().ok_or_else(|| format!("{tag}: no norm"))?
                } else {
                    QuadScalar::zero(value.radicand())
                };
                ensure(value == expected, || {
                    format!("{tag} L[p{j} p{k}] = {value}, expected {expected}")
                })?;
            }
        }
    }
    Ok(())
}

fn difference_equations() -> Outcome {
    for tag in FamilyTag::ALL {
        for n in 0..=8 {
            let residual = difference_equation_residual(tag, n).map_err(err)?;
            ensure(residual.is_zero(), || format!("{tag} n={n}: residual {residual}"))?;
        }
    }
    for m in 0..=8 {
        ensure(shift_identities(m).map_err(err)?, || {
            format!("shift identities fail at m={m}")
        })?;
    }
    Ok(())
}

fn refined_three_consistency() -> Outcome {
    let b1 = refined3::b_closed_form(1).values;
    ensure(b1 == [rat(1, 5), rat(3, 5), rat(1, 5)], || format!("B(m=1) = {b1:?}"))?;
    for m in 0..=8 {
        let closed = refined3::b_closed_form(m);
        closed.check_invariants().map_err(err)?;
        let five = refined3::solve_five_term(m).map_err(err)?;
        let generated =
            refined3::BCoefficients::from_generating(m, &refined3::e_generating(m).map_err(err)?).map_err(err)?;
        ensure(five == closed, || format!("m={m}: five-term solve differs"))?;
        ensure(generated == closed, || format!("m={m}: generating function differs"))?;
        for r in 0..=2 * m {
            let hyper = refined3::b_hypergeometric(m, r).map_err(err)?;
            ensure(hyper == closed.values[r], || {
                format!("m={m} r={r}: 4F3 form gives {hyper}")
            })?;
        }
    }
    Ok(())
}

fn appendix_identities() -> Outcome {
    for m in 0..=8 {
        ensure(refined3::f_q_identity(m).map_err(err)?, || {
            format!("f/Q identity fails at m={m}")
        })?;
        ensure(refined3::gff_identity(m), || format!("g/f identity fails at m={m}"))?;
    }
    for m in 1..=6 {
        for k in 0..=6 {
            ensure(refined3::psi_identities(m, k).map_err(err)?, || {
                format!("Ψ relations fail at m={m}, k={k}")
            })?;
        }
    }
    Ok(())
}

fn integrality() -> Outcome {
    for n in 1..=20 {
        let table = refined3::assemble(n).map_err(err)?;
        let total = closed_count(n, 3).map_err(err)?;
        ensure(table.total() == total, || {
            format!("N={n}: row sum {} vs {total}", table.total())
        })?;
        ensure(table.a.iter().eq(table.a.iter().rev()), || {
            format!("N={n}: not palindromic")
        })?;
    }
    Ok(())
}

fn headline_closed_forms() -> Outcome {
    let known: [i64; 10] = [1, 2, 7, 42, 429, 7436, 218348, 10850216, 911835460, 129534272700];
    for (n, &a) in (1..=10).zip(&known) {
        ensure(asm_count(n) == BigInt::from(a), || format!("A({n}) = {}", asm_count(n)))?;
        ensure(asm_count_first_form(n) == BigInt::from(a), || {
            format!("A({n}) first form differs")
        })?;
        let ice = refined_from_correlator(SpecialPoint::Ice, n).map_err(err)?.refined;
        let ff = refined_from_correlator(SpecialPoint::FreeFermion, n)
            .map_err(err)?
            .refined;
        let mut sum = BigRational::zero();
        for r in 1..=n {
            sum += ice_correlator_closed(n, r).map_err(err)?;
            let a1 = closed_refined(n, r, 1).map_err(err)?;
            let a2 = closed_refined(n, r, 2).map_err(err)?;
            ensure(a1 == ice[r - 1], || {
                format!("A({n},{r};1) = {a1}, determinant {}", ice[r - 1])
            })?;
            ensure(a2 == ff[r - 1], || {
                format!("A({n},{r};2) = {a2}, determinant {}", ff[r - 1])
            })?;
        }
        ensure(sum == BigRational::from_integer(1.into()), || {
            format!("N={n}: ratios sum to {sum}")
        })?;
    }
    Ok(())
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: 1,
        title: "total counts, three routes, N<=6",
        budget: Some(Duration::from_secs(5)),
        run: totals_triple_route,
    },
    Criterion {
        id: 2,
        title: "refined counts, three routes, N<=6",
        budget: Some(Duration::from_secs(10)),
        run: refined_triple_route,
    },
    Criterion {
        id: 3,
        title: "Hankel determinant = norm products, N<=10",
        budget: Some(Duration::from_secs(5)),
        run: determinant_products,
    },
    Criterion {
        id: 4,
        title: "free-fermion Z_N = 1, N<=10",
        budget: None,
        run: free_fermion_partition,
    },
    Criterion {
        id: 5,
        title: "orthogonality with printed norms, j,k<=8",
        budget: None,
        run: orthogonality,
    },
    Criterion {
        id: 6,
        title: "difference equations n<=8, shift identities m<=8",
        budget: None,
        run: difference_equations,
    },
    Criterion {
        id: 7,
        title: "B coefficients by four routes, m<=8",
        budget: None,
        run: refined_three_consistency,
    },
    Criterion {
        id: 8,
        title: "cubic-transformation and Gauss-relation identities",
        budget: None,
        run: appendix_identities,
    },
    Criterion {
        id: 9,
        title: "A(N,r;3) integral and summing to A(N;3), N<=20",
        budget: Some(Duration::from_secs(30)),
        run: integrality,
    },
    Criterion {
        id: 10,
        title: "headline product formulas, N<=10",
        budget: None,
        run: headline_closed_forms,
    },
];

fn main() -> ExitCode {
    let mut failures = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, c.budget) {
            (Err(msg), _) => Err(msg.clone()),
            (Ok(()), Some(budget)) if elapsed > budget => Err(format!("took {elapsed:.2?}, budget {budget:?}")),
            (Ok(()), _) => Ok(()),
        };
        match verdict {
            Ok(()) => println!("PASS  [{:>2}] {} ({elapsed:.2?})", c.id, c.title),
            Err(msg) => {
                failures += 1;
                println!("FAIL  [{:>2}] {} ({elapsed:.2?}): {msg}", c.id, c.title);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        CRITERIA.len() - failures,
        CRITERIA.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
