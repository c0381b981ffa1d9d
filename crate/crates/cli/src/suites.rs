//! Named identity suites behind `verify --suite`.
//!
//! Every check is deterministic: the "random" pairs in the convolution suite
//! come from a counter-seeded ChaCha stream, so repeated runs produce
//! byte-identical reports.

use clap::ValueEnum;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tautring::{
    curve_class, factorial, fourier_backward, fourier_forward, fourier_of_wd, fundamental_class,
    intersection_number, newton_class, theta_mul, theta_power, verify_convolution_law,
    verify_double_fourier, verify_double_fourier_convolution, verify_dual_formula,
    verify_product_law, w_class, JacobianContext, NewtonElement, PontryaginElement,
    PontryaginMonomial, Rat,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "lowercase")]
pub enum Suite {
    Fourier,
    Dual,
    Convolution,
    Poincare,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Fourier => "fourier",
            Suite::Dual => "dual",
            Suite::Convolution => "convolution",
            Suite::Poincare => "poincare",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            ok: true,
            detail: detail.into(),
        }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            ok: false,
            detail: detail.into(),
        }
    }

    fn from_flag(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            CheckResult::pass(name, detail)
        } else {
            CheckResult::fail(name, detail)
        }
    }
}

pub fn run_suite(ctx: &JacobianContext, suite: Suite) -> Vec<CheckResult> {
    match suite {
        Suite::Fourier => fourier_checks(ctx),
        Suite::Dual => dual_checks(ctx),
        Suite::Convolution => convolution_checks(ctx),
        Suite::Poincare => poincare_checks(ctx),
        Suite::All => {
            let mut all = fourier_checks(ctx);
            all.extend(dual_checks(ctx));
            all.extend(convolution_checks(ctx));
            all.extend(poincare_checks(ctx));
            all
        }
    }
}

fn single_p(ctx: &JacobianContext, m: PontryaginMonomial) -> PontryaginElement {
    PontryaginElement::from_terms(ctx, [(m, Rat::from_integer(1.into()))])
}

fn fourier_checks(ctx: &JacobianContext) -> Vec<CheckResult> {
    let mut checks = Vec::new();

    let newton_basis = tautring::newton::surviving_monomials(ctx);
    let mut failures = Vec::new();
    for m in &newton_basis {
        let x = NewtonElement::from_terms(ctx, [(m.clone(), Rat::from_integer(1.into()))]);
        let v = verify_double_fourier(&x);
        if !v.ok {
            failures.push(format!("{m}: {}", v.detail));
        }
    }
    checks.push(CheckResult::from_flag(
        "double_transform_intersection_basis",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} basis monomials", newton_basis.len())
        } else {
            failures.join("; ")
        },
    ));

    let pont_basis = tautring::pontryagin::surviving_monomials(ctx);
    let mut failures = Vec::new();
    for m in &pont_basis {
        let x = single_p(ctx, m.clone());
        let v = verify_double_fourier_convolution(&x);
        if !v.ok {
            failures.push(format!("{m}: {}", v.detail));
        }
    }
    checks.push(CheckResult::from_flag(
        "double_transform_convolution_basis",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} basis monomials", pont_basis.len())
        } else {
            failures.join("; ")
        },
    ));

    // Backward transform of the curve class is minus the sum of the
    // generators.
    let lhs = fourier_backward(&curve_class(ctx));
    let mut rhs = NewtonElement::zero(ctx);
    for k in 1..ctx.genus() {
        rhs = rhs
            .sub(&newton_class(ctx, k).expect("in-range generator"))
            .expect("same context");
    }
    checks.push(CheckResult::from_flag(
        "curve_transform_is_minus_generator_sum",
        lhs == rhs,
        "",
    ));

    // The top w-class is the point class; its transform is the unit.
    let g = ctx.genus();
    let w_top = w_class(ctx, g).expect("w^g exists");
    checks.push(CheckResult::from_flag(
        "top_w_transform_is_fundamental",
        fourier_forward(&w_top) == fundamental_class(ctx),
        "",
    ));

    // Both routes to the transform of w^d agree for every d.
    let mut failures = Vec::new();
    for d in 1..=g {
        match fourier_of_wd(ctx, d) {
            Ok((via_transform, closed_form)) => {
                if via_transform != closed_form {
                    failures.push(format!("d={d}: routes disagree"));
                }
            }
            Err(e) => failures.push(format!("d={d}: {e}")),
        }
    }
    checks.push(CheckResult::from_flag(
        "w_transform_routes_agree",
        failures.is_empty(),
        if failures.is_empty() {
            format!("d = 1..={g}")
        } else {
            failures.join("; ")
        },
    ));

    checks
}

fn dual_checks(ctx: &JacobianContext) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    for r in 0..=ctx.genus() {
        let name = format!("dual_formula_r{r}");
        match verify_dual_formula(ctx, r) {
            Ok(v) => checks.push(CheckResult::from_flag(name, v.ok, v.detail)),
            Err(e) => checks.push(CheckResult::fail(name, e.to_string())),
        }
    }
    checks
}

const PAIR_COUNT: u32 = 100;

/// Fixed seed stream per (genus, purpose) so reports never vary run to run.
fn seeded_rng(ctx: &JacobianContext, purpose: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x7461_7574 + ctx.genus() as u64 * 1000 + purpose)
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.random_range(-9i64..=9);
    let den = rng.random_range(1i64..=9);
    Rat::new(num.into(), den.into())
}

fn random_newton(ctx: &JacobianContext, basis: &[tautring::NewtonMonomial], rng: &mut ChaCha8Rng) -> NewtonElement {
    let count = rng.random_range(1..=3usize);
    NewtonElement::from_terms(
        ctx,
        (0..count).map(|_| {
            let m = basis[rng.random_range(0..basis.len())].clone();
            (m, random_rat(rng))
        }),
    )
}

fn random_pontryagin(
    ctx: &JacobianContext,
    basis: &[PontryaginMonomial],
    rng: &mut ChaCha8Rng,
) -> PontryaginElement {
    let count = rng.random_range(1..=3usize);
    PontryaginElement::from_terms(
        ctx,
        (0..count).map(|_| {
            let m = basis[rng.random_range(0..basis.len())].clone();
            (m, random_rat(rng))
        }),
    )
}

fn convolution_checks(ctx: &JacobianContext) -> Vec<CheckResult> {
    let mut checks = Vec::new();

    let newton_basis = tautring::newton::surviving_monomials(ctx);
    let mut rng = seeded_rng(ctx, 1);
    let mut failures = Vec::new();
    for i in 0..PAIR_COUNT {
        let a = random_newton(ctx, &newton_basis, &mut rng);
        let b = random_newton(ctx, &newton_basis, &mut rng);
        match verify_product_law(&a, &b) {
            Ok(v) if v.ok => {}
            Ok(v) => failures.push(format!("pair {i}: {}", v.detail)),
            Err(e) => failures.push(format!("pair {i}: {e}")),
        }
    }
    checks.push(CheckResult::from_flag(
        "transform_turns_products_into_convolutions",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{PAIR_COUNT} random pairs")
        } else {
            failures.join("; ")
        },
    ));

    let pont_basis = tautring::pontryagin::surviving_monomials(ctx);
    let mut rng = seeded_rng(ctx, 2);
    let mut failures = Vec::new();
    for i in 0..PAIR_COUNT {
        let a = random_pontryagin(ctx, &pont_basis, &mut rng);
        let b = random_pontryagin(ctx, &pont_basis, &mut rng);
        match verify_convolution_law(&a, &b) {
            Ok(v) if v.ok => {}
            Ok(v) => failures.push(format!("pair {i}: {}", v.detail)),
            Err(e) => failures.push(format!("pair {i}: {e}")),
        }
    }
    checks.push(CheckResult::from_flag(
        "transform_turns_convolutions_into_products",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{PAIR_COUNT} random pairs")
        } else {
            failures.join("; ")
        },
    ));

    checks
}

fn poincare_checks(ctx: &JacobianContext) -> Vec<CheckResult> {
    let g = ctx.genus();
    let mut checks = Vec::new();

    let top = theta_power(ctx, g);
    let expected = Rat::from_integer(factorial(g));
    let got = intersection_number(&top);
    checks.push(match got {
        Ok(d) if d == expected => CheckResult::pass(
            "top_theta_power_degree_is_genus_factorial",
            format!("degree {}", tautring::format_rat(&d)),
        ),
        Ok(d) => CheckResult::fail(
            "top_theta_power_degree_is_genus_factorial",
            format!(
                "degree {} != {}",
                tautring::format_rat(&d),
                tautring::format_rat(&expected)
            ),
        ),
        Err(e) => CheckResult::fail("top_theta_power_degree_is_genus_factorial", e.to_string()),
    });

    checks.push(CheckResult::from_flag(
        "theta_power_beyond_top_vanishes",
        theta_power(ctx, g + 1).is_zero(),
        "",
    ));

    // One multiplication step from the unit: theta * [J] = <0^(g-1)>/(g-1)!.
    let stepped = theta_mul(&fundamental_class(ctx));
    let expected = single_p(ctx, PontryaginMonomial::zeros(g as usize - 1))
        .mul_scalar(&Rat::new(1.into(), factorial(g - 1)));
    checks.push(CheckResult::from_flag(
        "unit_step_lands_on_normalized_zero_chain",
        stepped == expected,
        "",
    ));

    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_small_generic_contexts() {
        for g in 2..=4 {
            let ctx = JacobianContext::new(g).unwrap();
            for check in run_suite(&ctx, Suite::All) {
                assert!(check.ok, "g={g} {}: {}", check.name, check.detail);
            }
        }
    }

    #[test]
    fn suites_pass_under_gonality() {
        let ctx = JacobianContext::with_gonality(5, 3).unwrap();
        for check in run_suite(&ctx, Suite::All) {
            assert!(check.ok, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn suite_output_is_deterministic() {
        let ctx = JacobianContext::new(4).unwrap();
        let first = run_suite(&ctx, Suite::Convolution);
        let second = run_suite(&ctx, Suite::Convolution);
        assert_eq!(first, second);
    }

    #[test]
    fn all_concatenates_in_fixed_order() {
        let ctx = JacobianContext::new(3).unwrap();
        let all = run_suite(&ctx, Suite::All);
        let mut expected = run_suite(&ctx, Suite::Fourier);
        expected.extend(run_suite(&ctx, Suite::Dual));
        expected.extend(run_suite(&ctx, Suite::Convolution));
        expected.extend(run_suite(&ctx, Suite::Poincare));
        assert_eq!(all, expected);
    }
}
