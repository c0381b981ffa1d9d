//! Shared fixtures for the criterion benchmarks.

use tautring::{
    rat, JacobianContext, NewtonElement, NewtonMonomial, PontryaginElement, PontryaginMonomial,
};

/// A dense intersection-side element touching every surviving generator.
pub fn dense_newton(ctx: &JacobianContext) -> NewtonElement {
    let mut terms = Vec::new();
    let g = ctx.genus() as i64;
    for i in 1..g {
        terms.push((NewtonMonomial::new(vec![i as u32]), rat(2 * i + 1, i + 2)));
        if i + 1 < g {
            terms.push((
                NewtonMonomial::new(vec![i as u32, (i + 1) as u32]),
                rat(-i, 3),
            ));
        }
    }
    NewtonElement::from_terms(ctx, terms)
}

/// A convolution-side element with a mix of tuple lengths.
pub fn dense_pontryagin(ctx: &JacobianContext) -> PontryaginElement {
    let mut terms = Vec::new();
    let g = ctx.genus();
    for r in 1..=g.min(4) {
        let tuple: Vec<u32> = (0..r).map(|j| j % 2).collect();
        terms.push((PontryaginMonomial::new(tuple), rat(r as i64 + 1, 2)));
    }
    PontryaginElement::from_terms(ctx, terms)
}
