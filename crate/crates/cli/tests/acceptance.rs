//! Acceptance gate: one test per release criterion, each printing a
//! `[AC-nn] PASS` line (visible under `--nocapture`).  Every identity is
//! exact — no tolerances, only equality of rationals.

use std::io::Cursor;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tautring::{
    curve_class, factorial, fourier_backward, fourier_forward, fundamental_class,
    hyperelliptic_report, intersection_number, newton_class, theta_mul, theta_mul_ktuple,
    theta_power, trigonal_report, verify_double_fourier, verify_double_fourier_convolution,
    verify_dual_formula, w_class, JacobianContext, KTuple, NewtonElement, PontryaginElement,
    PontryaginMonomial, Rat, ScaleDirection,
};
use tautring_cli::suites::{run_suite, Suite};

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn single_p(ctx: &JacobianContext, parts: Vec<u32>) -> PontryaginElement {
    PontryaginElement::from_terms(ctx, [(PontryaginMonomial::new(parts), rat(1, 1))])
}

#[test]
fn ac01_top_theta_powers_have_factorial_degree() {
    let start = Instant::now();
    for g in 2..=8u32 {
        let ctx = JacobianContext::new(g).unwrap();
        let degree = intersection_number(&theta_power(&ctx, g)).unwrap();
        assert_eq!(degree, Rat::from_integer(factorial(g)), "genus {g}");
        assert!(theta_power(&ctx, g + 1).is_zero(), "genus {g}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "took {elapsed:?}, budget 10s");
    println!("[AC-01] PASS — deg(theta^g) = g! and theta^(g+1) = 0 for g = 2..=8 in {elapsed:?}");
}

#[test]
fn ac02_unit_law_through_the_full_pipeline() {
    for g in 2..=8u32 {
        let ctx = JacobianContext::new(g).unwrap();
        let stepped = theta_mul(&fundamental_class(&ctx));
        let expected = single_p(&ctx, vec![0; g as usize - 1])
            .mul_scalar(&Rat::new(1.into(), factorial(g - 1)));
        assert_eq!(stepped, expected, "genus {g}");
    }
    println!("[AC-02] PASS — theta * [J] = <0^(g-1)>/(g-1)! for g = 2..=8");
}

#[test]
fn ac03_backward_transform_of_curve_is_minus_generator_sum() {
    for g in 2..=10u32 {
        let ctx = JacobianContext::new(g).unwrap();
        let lhs = fourier_backward(&curve_class(&ctx));
        let mut rhs = NewtonElement::zero(&ctx);
        for k in 1..g {
            rhs = rhs.sub(&newton_class(&ctx, k).unwrap()).unwrap();
        }
        assert_eq!(lhs, rhs, "genus {g}");
    }
    println!("[AC-03] PASS — transform of C is -(N^1 + ... + N^(g-1)) for g = 2..=10");
}

#[test]
fn ac04_double_transform_is_parity_times_sign_on_every_survivor() {
    for g in 2..=7u32 {
        let ctx = JacobianContext::new(g).unwrap();
        for m in tautring::newton::surviving_monomials(&ctx) {
            let x = NewtonElement::from_terms(&ctx, [(m.clone(), rat(1, 1))]);
            let v = verify_double_fourier(&x);
            assert!(v.ok, "genus {g}, monomial {m}: {}", v.detail);
        }
        for m in tautring::pontryagin::surviving_monomials(&ctx) {
            let x = PontryaginElement::from_terms(&ctx, [(m.clone(), rat(1, 1))]);
            let v = verify_double_fourier_convolution(&x);
            assert!(v.ok, "genus {g}, monomial {m}: {}", v.detail);
        }
    }
    println!("[AC-04] PASS — double transform matches on every surviving monomial, g = 2..=7");
}

#[test]
fn ac05_product_laws_on_a_hundred_random_pairs_per_genus() {
    for g in 2..=6u32 {
        let ctx = JacobianContext::new(g).unwrap();
        let checks = run_suite(&ctx, Suite::Convolution);
        assert_eq!(checks.len(), 2);
        for check in checks {
            assert!(check.ok, "genus {g}, {}: {}", check.name, check.detail);
            assert!(check.detail.contains("100"), "pair count changed");
        }
    }
    println!("[AC-05] PASS — both product laws hold on 100 random pairs per genus, g = 2..=6");
}

#[test]
fn ac06_exponential_identity_for_the_transform() {
    for g in 2..=6u32 {
        let ctx = JacobianContext::new(g).unwrap();
        for r in 0..=g {
            let v = verify_dual_formula(&ctx, r).unwrap();
            assert!(v.ok, "genus {g}, r {r}: {}", v.detail);
        }
    }
    // Hand anchor: at genus 2, r = 1 both sides equal -<0>.
    let ctx = JacobianContext::new(2).unwrap();
    let lhs = theta_power(&ctx, 1).mul_scalar(&rat(-1, 1));
    let expected = single_p(&ctx, vec![0]).mul_scalar(&rat(-1, 1));
    assert_eq!(lhs, expected);
    println!("[AC-06] PASS — exponential transform identity for r = 0..=g, g = 2..=6; g=2 r=1 anchor is -<0>");
}

#[test]
fn ac07_hyperelliptic_presentations() {
    for g in 2..=10u32 {
        let report = hyperelliptic_report(g).unwrap();
        assert!(report.verdict, "genus {g}: {:?}", report.diagnostics);
        assert!(report.diagnostics.is_empty());
        assert_eq!(report.relations, vec![(g + 1, 0)]);
        assert_eq!(report.lambda_table.len(), g as usize);
        assert!(report.lambda_table.values().all(|l| *l != rat(0, 1)));
    }
    println!("[AC-07] PASS — single-generator quotient verified for g = 2..=10");
}

#[test]
fn ac08_trigonal_staircases() {
    for g in 3..=9u32 {
        let report = trigonal_report(g).unwrap();
        assert!(report.verdict, "genus {g}: {:?}", report.diagnostics);
        let k = report.k.expect("trigonal reports carry k");
        assert_eq!(k, g / 3, "model-maximal k at genus {g}");
        let mut expected: Vec<(u32, u32)> = (0..=k).map(|s| (g + 1 - 3 * s, s)).collect();
        expected.push((0, k + 1));
        expected.sort_unstable();
        assert_eq!(report.relations, expected, "genus {g}");
    }
    println!("[AC-08] PASS — two-generator staircase with k = floor(g/3) for g = 3..=9");
}

#[test]
fn ac09_results_are_node_set_independent() {
    for g in 2..=6u32 {
        let low: Vec<i64> = (1..g as i64).collect();
        let high: Vec<i64> = (2..=g as i64).collect();
        let (low, high) = if g == 2 {
            (vec![1], vec![2])
        } else {
            (low, high)
        };
        let ctx_a = JacobianContext::new(g).unwrap().with_nodes(low).unwrap();
        let ctx_b = JacobianContext::new(g).unwrap().with_nodes(high).unwrap();

        let doc = |x: &PontryaginElement| {
            serde_json::to_string(&tautring_cli::document::serialize_pontryagin(x)).unwrap()
        };
        for m in tautring::pontryagin::surviving_monomials(&ctx_a) {
            let a = theta_mul(&PontryaginElement::from_terms(&ctx_a, [(m.clone(), rat(1, 1))]));
            let b = theta_mul(&PontryaginElement::from_terms(&ctx_b, [(m.clone(), rat(1, 1))]));
            assert_eq!(doc(&a), doc(&b), "genus {g}, monomial {m}");
        }
        for j in 0..=g + 1 {
            let a = theta_power(&ctx_a, j);
            let b = theta_power(&ctx_b, j);
            assert_eq!(doc(&a), doc(&b), "genus {g}, power {j}");
        }
        assert_eq!(
            intersection_number(&theta_power(&ctx_a, g)).unwrap(),
            intersection_number(&theta_power(&ctx_b, g)).unwrap()
        );
    }
    println!("[AC-09] PASS — bit-identical results under node sets {{1..g-1}} and {{2..g}}, g = 2..=6");
}

#[test]
fn ac10_hand_derived_anchors() {
    let ctx = JacobianContext::new(2).unwrap();

    let steps = theta_mul_ktuple(&ctx, &KTuple::new(vec![1, 1])).unwrap();
    assert_eq!(
        steps,
        vec![
            (rat(6, 1), KTuple::new(vec![1])),
            (rat(-1, 1), KTuple::new(vec![2])),
        ]
    );

    let squared = theta_power(&ctx, 2);
    assert_eq!(squared, single_p(&ctx, vec![]).mul_scalar(&rat(2, 1)));

    let n1 = newton_class(&ctx, 1).unwrap();
    assert_eq!(
        fourier_forward(&n1),
        single_p(&ctx, vec![0]).mul_scalar(&rat(-1, 1))
    );

    for g in 2..=10u32 {
        let ctx = JacobianContext::new(g).unwrap();
        let w_top = w_class(&ctx, g).unwrap();
        assert_eq!(fourier_forward(&w_top), fundamental_class(&ctx), "genus {g}");
    }
    println!("[AC-10] PASS — theta*[1,1] = 6[1]-[2]; theta^2 = 2[pt]; F(N^1) = -<0>; F(w^g) = 1 for g = 2..=10");
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.random_range(-9i64..=9);
    let den = rng.random_range(1i64..=9);
    rat(num, den)
}

fn random_newton(ctx: &JacobianContext, rng: &mut ChaCha8Rng) -> NewtonElement {
    let basis = tautring::newton::surviving_monomials(ctx);
    let count = rng.random_range(1..=3usize);
    NewtonElement::from_terms(
        ctx,
        (0..count).map(|_| (basis[rng.random_range(0..basis.len())].clone(), random_rat(rng))),
    )
}

fn random_pontryagin(ctx: &JacobianContext, rng: &mut ChaCha8Rng) -> PontryaginElement {
    let basis = tautring::pontryagin::surviving_monomials(ctx);
    let count = rng.random_range(1..=3usize);
    PontryaginElement::from_terms(
        ctx,
        (0..count).map(|_| (basis[rng.random_range(0..basis.len())].clone(), random_rat(rng))),
    )
}

#[test]
fn ac11_scaling_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5343414c45);
    for g in 2..=6u32 {
        let ctx = JacobianContext::new(g).unwrap();
        for k in -3..=3i64 {
            for _ in 0..10 {
                // Pullback after pushforward is multiplication by k^(2g).
                let x = random_newton(&ctx, &mut rng);
                let through = x
                    .scale(k, ScaleDirection::Pushforward)
                    .scale(k, ScaleDirection::Pullback);
                let factor = Rat::from_integer(tautring::int_pow(k, 2 * g));
                assert_eq!(through, x.mul_scalar(&factor), "genus {g}, k {k}");

                let y = random_pontryagin(&ctx, &mut rng);
                let through = y
                    .scale(k, ScaleDirection::Pushforward)
                    .scale(k, ScaleDirection::Pullback);
                assert_eq!(through, y.mul_scalar(&factor), "genus {g}, k {k}");

                // Pushforward respects convolution, pullback respects products.
                let a = random_pontryagin(&ctx, &mut rng);
                let b = random_pontryagin(&ctx, &mut rng);
                let lhs = a.star_mul(&b).unwrap().scale(k, ScaleDirection::Pushforward);
                let rhs = a
                    .scale(k, ScaleDirection::Pushforward)
                    .star_mul(&b.scale(k, ScaleDirection::Pushforward))
                    .unwrap();
                assert_eq!(lhs, rhs, "genus {g}, k {k}");

                let a = random_newton(&ctx, &mut rng);
                let b = random_newton(&ctx, &mut rng);
                let lhs = a.mul(&b).unwrap().scale(k, ScaleDirection::Pullback);
                let rhs = a
                    .scale(k, ScaleDirection::Pullback)
                    .mul(&b.scale(k, ScaleDirection::Pullback))
                    .unwrap();
                assert_eq!(lhs, rhs, "genus {g}, k {k}");
            }
        }
    }
    println!("[AC-11] PASS — k^* after k_* is k^(2g); k_* respects *, k^* respects ·, k = -3..=3, g = 2..=6");
}

#[test]
fn ac12_cli_verify_all_is_green_and_deterministic() {
    let start = Instant::now();
    for g in 2..=6u32 {
        let genus = g.to_string();
        let args = ["tautring", "verify", "--suite", "all", "--genus", &genus];
        let mut first = Vec::new();
        let mut second = Vec::new();
        for out in [&mut first, &mut second] {
            let mut stdin = Cursor::new(Vec::new());
            let mut err = Vec::new();
            let code = tautring_cli::run(args, &mut stdin, out, &mut err);
            assert_eq!(code, 0, "genus {g} stderr: {}", String::from_utf8_lossy(&err));
        }
        assert_eq!(first, second, "output changed between runs at genus {g}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget 60s");
    println!("[AC-12] PASS — verify --suite all exits 0 and is byte-stable for g = 2..=6 in {elapsed:?}");
}
