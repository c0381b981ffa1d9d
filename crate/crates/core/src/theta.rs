//! Multiplication by the theta divisor on the convolution side.
//!
//! Theta never multiplies Pontryagin monomials directly: each monomial is
//! rewritten through the bridge into the working basis of tuples
//! [k1,...,kr] (convolutions of pushed-forward curve classes), one exact
//! recursion step is applied there, and the results are expanded back. The
//! recursion's coefficients mix the degree of theta on the embedded curve
//! (g points) with the diagonal/base-point correction from restricting the
//! addition map; they are validated by the identity suite rather than taken
//! on faith (unit law, Poincare degree, node-set independence, transform
//! consistency).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::context::JacobianContext;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::pontryagin::{expand_ktuple, fundamental_class, KTuple, PontryaginElement};

/// Sign of the exponential in the convolution series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rat>, key: K, value: Rat) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(value);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += value;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// One recursion step in the working basis:
///
///   theta * [k1,...,kr] = sum_i (g k_i^2 + k_i (K - k_i)) [..k̂_i..]
///                       - sum_{i<j} k_i k_j [..k̂_i..k̂_j.., k_i+k_j]
///
/// with K = k1+...+kr. Merged entries that hit zero drop out (the class
/// collapses under the zero map).
pub fn theta_mul_ktuple(ctx: &JacobianContext, kt: &KTuple) -> Result<Vec<(Rat, KTuple)>> {
    if kt.has_zero_entry() {
        return Err(Error::ZeroTupleEntry);
    }
    let g = BigInt::from(ctx.genus());
    let entries = kt.entries();
    let total: BigInt = entries.iter().map(|&k| BigInt::from(k)).sum();
    let mut acc: BTreeMap<KTuple, Rat> = BTreeMap::new();
    for (i, &ki_raw) in entries.iter().enumerate() {
        let ki = BigInt::from(ki_raw);
        let coef = &g * &ki * &ki + &ki * (&total - &ki);
        let rest: Vec<i64> = entries
            .iter()
            .enumerate()
            .filter(|&(pos, _)| pos != i)
            .map(|(_, &k)| k)
            .collect();
        accumulate(&mut acc, KTuple::new(rest), Rat::from_integer(coef));
    }
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let merged = entries[i]
                .checked_add(entries[j])
                .expect("tuple entry overflow");
            if merged == 0 {
                continue;
            }
            let coef = -(BigInt::from(entries[i]) * BigInt::from(entries[j]));
            let mut rest: Vec<i64> = entries
                .iter()
                .enumerate()
                .filter(|&(pos, _)| pos != i && pos != j)
                .map(|(_, &k)| k)
                .collect();
            rest.push(merged);
            accumulate(&mut acc, KTuple::new(rest), Rat::from_integer(coef));
        }
    }
    Ok(acc.into_iter().map(|(t, c)| (c, t)).collect())
}

/// Multiplication by theta. Every monomial goes out through the bridge into
/// tuples, takes one recursion step, and comes back through expansion; the
/// three passes share work by merging partial states on sorted keys.
/// Codimension rises by exactly one; levels are preserved termwise.
pub fn theta_mul(x: &PontryaginElement) -> PontryaginElement {
    let ctx = x.context();
    let table = ctx.bridge_table();
    let nodes = table.nodes().to_vec();

    // monomials -> working basis
    let mut tuples: BTreeMap<KTuple, Rat> = BTreeMap::new();
    for (m, coef) in x.terms() {
        let mut partial: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
        partial.insert(Vec::new(), Rat::one());
        for &s in m.parts() {
            let row = table.row(s as usize);
            let mut next: BTreeMap<Vec<i64>, Rat> = BTreeMap::new();
            for (tup, c) in &partial {
                for (pos, rc) in row.iter().enumerate() {
                    if rc.is_zero() {
                        continue;
                    }
                    let mut key = tup.clone();
                    let node = nodes[pos];
                    let at = key.partition_point(|&x| x <= node);
                    key.insert(at, node);
                    accumulate(&mut next, key, c * rc);
                }
            }
            partial = next;
        }
        for (tup, c) in partial {
            accumulate(&mut tuples, KTuple::new(tup), coef * c);
        }
    }

    // one theta step per distinct tuple
    let mut stepped: BTreeMap<KTuple, Rat> = BTreeMap::new();
    for (kt, c) in &tuples {
        let step = theta_mul_ktuple(ctx, kt).expect("bridge nodes are nonzero");
        for (rc, out) in step {
            accumulate(&mut stepped, out, c * rc);
        }
    }

    // back to monomials
    let mut result = PontryaginElement::zero(ctx);
    for (kt, c) in stepped {
        for (m, mc) in expand_ktuple(ctx, &kt).terms() {
            result.add_term(m.clone(), mc * &c);
        }
    }
    result
}

/// theta^j as an element: theta^0 is the fundamental class, each further
/// power is one more theta_mul (left fold for determinism).
pub fn theta_power(ctx: &JacobianContext, j: u32) -> PontryaginElement {
    let mut x = fundamental_class(ctx);
    for _ in 0..j {
        if x.is_zero() {
            break;
        }
        x = theta_mul(&x);
    }
    x
}

/// Degree of a top-codimension class: the coefficient of the point class.
/// Any term with factors left is not top-codimension and is rejected.
pub fn intersection_number(x: &PontryaginElement) -> Result<Rat> {
    let mut deg = Rat::zero();
    for (m, c) in x.terms() {
        if m.factor_count() == 0 {
            deg = c.clone();
        } else {
            return Err(Error::NotTopCodimension);
        }
    }
    Ok(deg)
}

/// e^theta . x = sum_j theta^j x / j! (intersection powers; finite because
/// codimension strictly rises).
pub fn exp_theta_mul(x: &PontryaginElement) -> PontryaginElement {
    let ctx = x.context();
    let mut sum = x.clone();
    let mut power = x.clone();
    let mut jfact = BigInt::one();
    let mut j: u32 = 1;
    while !power.is_zero() && j <= ctx.genus() + 1 {
        power = theta_mul(&power);
        jfact *= j;
        if !power.is_zero() {
            sum = sum
                .add(&power.mul_scalar(&Rat::from_integer(jfact.clone()).recip()))
                .expect("same context");
        }
        j += 1;
    }
    sum
}

/// e^{±theta} * x = sum_j (±1)^j (theta^j / j!) * x (convolution powers).
pub fn exp_theta_convolve(x: &PontryaginElement, sign: Sign) -> PontryaginElement {
    let ctx = x.context();
    let mut sum = PontryaginElement::zero(ctx);
    let mut theta_j = fundamental_class(ctx);
    let mut jfact = BigInt::one();
    for j in 0..=ctx.genus() {
        if j > 0 {
            theta_j = theta_mul(&theta_j);
            jfact *= j;
        }
        if theta_j.is_zero() {
            break;
        }
        let mut coef = Rat::from_integer(jfact.clone()).recip();
        if sign == Sign::Minus && j % 2 == 1 {
            coef = -coef;
        }
        sum = sum
            .add(&theta_j.star_mul(x).expect("same context").mul_scalar(&coef))
            .expect("same context");
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{factorial, rat_int};
    use crate::pontryagin::{point_class, surviving_monomials, PontryaginMonomial};

    fn ctx(g: u32) -> JacobianContext {
        JacobianContext::new(g).unwrap()
    }

    fn single(c: &JacobianContext, parts: Vec<u32>) -> PontryaginElement {
        PontryaginElement::from_terms(c, [(PontryaginMonomial::new(parts), rat_int(1))])
    }

    #[test]
    fn recursion_base_cases() {
        // [1] -> g*[] and [k] -> g k^2 []
        for g in 2..=6u32 {
            let c = ctx(g);
            for k in 1..=5i64 {
                let out = theta_mul_ktuple(&c, &KTuple::new(vec![k])).unwrap();
                assert_eq!(out, vec![(rat_int(g as i64 * k * k), KTuple::empty())]);
            }
        }
    }

    #[test]
    fn recursion_pair_anchor_g2() {
        // theta * [1,1] = 6[1] - [2] at g=2
        let c = ctx(2);
        let out = theta_mul_ktuple(&c, &KTuple::new(vec![1, 1])).unwrap();
        assert_eq!(
            out,
            vec![
                (rat_int(6), KTuple::new(vec![1])),
                (rat_int(-1), KTuple::new(vec![2])),
            ]
        );
    }

    #[test]
    fn recursion_rejects_zero_entries() {
        let c = ctx(3);
        assert_eq!(
            theta_mul_ktuple(&c, &KTuple::new(vec![1, 0])).unwrap_err(),
            Error::ZeroTupleEntry
        );
    }

    #[test]
    fn recursion_drops_zero_merges() {
        // [1,-1]: the merge entry 1+(-1)=0 disappears
        let c = ctx(3);
        let out = theta_mul_ktuple(&c, &KTuple::new(vec![-1, 1])).unwrap();
        // positions: k=-1 coef g*1 + (-1)*(0-(-1)) = 3-1 = 2; k=1 likewise 2
        assert_eq!(
            out,
            vec![
                (rat_int(2), KTuple::new(vec![-1])),
                (rat_int(2), KTuple::new(vec![1])),
            ]
        );
    }

    #[test]
    fn theta_squared_is_twice_point_at_g2() {
        let c = ctx(2);
        let out = theta_mul(&single(&c, vec![0]));
        assert_eq!(out, point_class(&c).mul_scalar(&rat_int(2)));
    }

    #[test]
    fn theta_on_point_class_vanishes() {
        for g in 2..=5u32 {
            assert!(theta_mul(&point_class(&ctx(g))).is_zero());
        }
    }

    #[test]
    fn unit_law_through_full_pipeline() {
        // theta * [J] = theta: <0^{g-1}>/(g-1)!
        for g in 2..=6u32 {
            let c = ctx(g);
            let theta = theta_mul(&fundamental_class(&c));
            let expect = PontryaginElement::from_terms(
                &c,
                [(
                    PontryaginMonomial::zeros(g as usize - 1),
                    Rat::from_integer(factorial(g - 1)).recip(),
                )],
            );
            assert_eq!(theta, expect, "g={g}");
        }
    }

    #[test]
    fn poincare_degree() {
        for g in 2..=6u32 {
            let c = ctx(g);
            assert_eq!(
                intersection_number(&theta_power(&c, g)).unwrap(),
                Rat::from_integer(factorial(g)),
                "g={g}"
            );
            assert!(theta_power(&c, g + 1).is_zero(), "g={g}");
        }
    }

    #[test]
    fn projection_formula_oracle() {
        // deg(theta * k_*C) = g k^2
        for g in 2..=6u32 {
            let c = ctx(g);
            for k in 1..=5i64 {
                let x = theta_mul(&expand_ktuple(&c, &KTuple::new(vec![k])));
                assert_eq!(intersection_number(&x).unwrap(), rat_int(g as i64 * k * k));
            }
        }
    }

    #[test]
    fn theta_preserves_level_and_raises_codimension() {
        for g in 2..=6u32 {
            let c = ctx(g);
            for m in surviving_monomials(&c) {
                let out = theta_mul(&PontryaginElement::from_terms(
                    &c,
                    [(m.clone(), rat_int(1))],
                ));
                if let Some((p, s)) = out.homogeneous_bidegree() {
                    assert_eq!(p, m.codimension(g) + 1, "g={g} m={m}");
                    assert_eq!(s, m.level(), "g={g} m={m}");
                } else {
                    assert!(out.is_zero(), "g={g} m={m}: mixed bidegrees");
                }
            }
        }
    }

    #[test]
    fn node_set_independence_small() {
        for g in 2..=4u32 {
            let a = ctx(g);
            let b = JacobianContext::new(g)
                .unwrap()
                .with_nodes((2..=g as i64).collect())
                .unwrap();
            for m in surviving_monomials(&a) {
                let xa = theta_mul(&PontryaginElement::from_terms(&a, [(m.clone(), rat_int(1))]));
                let xb = theta_mul(&PontryaginElement::from_terms(&b, [(m.clone(), rat_int(1))]));
                // compare coefficient maps (contexts differ by nodes)
                let ta: Vec<_> = xa.terms().map(|(mm, cc)| (mm.clone(), cc.clone())).collect();
                let tb: Vec<_> = xb.terms().map(|(mm, cc)| (mm.clone(), cc.clone())).collect();
                assert_eq!(ta, tb, "g={g} m={m}");
            }
        }
    }

    #[test]
    fn hyperelliptic_chain_closed_form() {
        // with gonality 2 the chain theta * <0^a> = a(g+1-a) <0^{a-1}> holds
        for g in 2..=10u32 {
            let c = JacobianContext::with_gonality(g, 2).unwrap();
            for a in 1..=g {
                let out = theta_mul(&single(&c, vec![0; a as usize]));
                let expect = single(&c, vec![0; a as usize - 1])
                    .mul_scalar(&rat_int(a as i64 * (g + 1 - a) as i64));
                assert_eq!(out, expect, "g={g} a={a}");
            }
        }
    }

    #[test]
    fn exp_theta_mul_examples() {
        let c = ctx(2);
        assert_eq!(exp_theta_mul(&point_class(&c)), point_class(&c));
        // e^theta . [J] = sum theta^j/j!
        let full = exp_theta_mul(&fundamental_class(&c));
        let expect = theta_power(&c, 0)
            .add(&theta_power(&c, 1))
            .unwrap()
            .add(&theta_power(&c, 2).mul_scalar(&Rat::from_integer(factorial(2)).recip()))
            .unwrap();
        assert_eq!(full, expect);
    }

    #[test]
    fn exp_theta_convolve_examples() {
        let c = ctx(2);
        // point class is the *-unit: the series is sum theta^j/j!
        let series = exp_theta_convolve(&point_class(&c), Sign::Plus);
        let expect = theta_power(&c, 0)
            .add(&theta_power(&c, 1))
            .unwrap()
            .add(&theta_power(&c, 2).mul_scalar(&Rat::from_integer(factorial(2)).recip()))
            .unwrap();
        assert_eq!(series, expect);
        // hand anchor: (theta e^theta) * e^{-theta} at g=2
        let x = single(&c, vec![0]).add(&point_class(&c).mul_scalar(&rat_int(2))).unwrap();
        let out = exp_theta_convolve(&x, Sign::Minus);
        let expect = single(&c, vec![0])
            .neg()
            .add(&point_class(&c).mul_scalar(&rat_int(2)))
            .unwrap();
        assert_eq!(out, expect);
    }
}
