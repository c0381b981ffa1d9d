//! The intersection-product side: a bidegree-truncated polynomial algebra on
//! generators N^1, ..., N^{g-1}. N^1 is the theta divisor; a product of
//! generators with index sum p sits in codimension p at level p minus the
//! factor count.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::context::{JacobianContext, ScaleDirection};
use crate::error::{Error, Result};
use crate::exact::{format_rat, int_pow, rat, rat_int, Rat};

/// A product of Newton generators, stored as the sorted list of factor
/// indices with repetition: `[1, 1, 2]` is (N^1)^2 N^2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NewtonMonomial {
    indices: Vec<u32>,
}

impl NewtonMonomial {
    pub fn new(indices: impl Into<Vec<u32>>) -> Self {
        let mut indices = indices.into();
        indices.sort_unstable();
        NewtonMonomial { indices }
    }

    /// The empty product, representing 1 (the fundamental class).
    pub fn unit() -> Self {
        NewtonMonomial { indices: Vec::new() }
    }

    pub fn generator(k: u32) -> Self {
        NewtonMonomial { indices: vec![k] }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn factor_count(&self) -> usize {
        self.indices.len()
    }

    /// Codimension p = sum of the factor indices.
    pub fn codimension(&self) -> u64 {
        self.indices.iter().map(|&i| i as u64).sum()
    }

    /// Level s = p - (number of factors); each N^i contributes level i-1.
    pub fn level(&self) -> u64 {
        self.codimension() - self.indices.len() as u64
    }

    fn merged(&self, other: &Self) -> Self {
        let mut indices = Vec::with_capacity(self.indices.len() + other.indices.len());
        indices.extend_from_slice(&self.indices);
        indices.extend_from_slice(&other.indices);
        NewtonMonomial::new(indices)
    }
}

impl Ord for NewtonMonomial {
    /// Lexicographic on exponent vectors (e_1, e_2, ...): the first generator
    /// index where the exponents differ decides.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.indices.as_slice();
        let mut b = other.indices.as_slice();
        loop {
            match (a.first(), b.first()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(&ia), Some(&ib)) => {
                    if ia != ib {
                        // the smaller index is the first coordinate where
                        // exactly one side has a positive exponent
                        return if ia < ib { Ordering::Greater } else { Ordering::Less };
                    }
                    let ca = a.iter().take_while(|&&x| x == ia).count();
                    let cb = b.iter().take_while(|&&x| x == ib).count();
                    if ca != cb {
                        return ca.cmp(&cb);
                    }
                    a = &a[ca..];
                    b = &b[cb..];
                }
            }
        }
    }
}

impl PartialOrd for NewtonMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NewtonMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "1");
        }
        let mut rest = self.indices.as_slice();
        let mut first = true;
        while let Some(&i) = rest.first() {
            let e = rest.iter().take_while(|&&x| x == i).count();
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "N{i}")?;
            } else {
                write!(f, "N{i}^{e}")?;
            }
            rest = &rest[e..];
        }
        Ok(())
    }
}

/// Exact linear combination of surviving Newton monomials over a fixed context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonElement {
    context: JacobianContext,
    terms: BTreeMap<NewtonMonomial, Rat>,
}

impl NewtonElement {
    pub fn zero(ctx: &JacobianContext) -> Self {
        NewtonElement {
            context: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The ring unit 1 (empty monomial).
    pub fn one(ctx: &JacobianContext) -> Self {
        let mut x = Self::zero(ctx);
        x.add_term(NewtonMonomial::unit(), rat_int(1));
        x
    }

    /// Collect terms into canonical form: killed monomials dropped, zero
    /// coefficients removed, duplicates merged.
    pub fn from_terms(
        ctx: &JacobianContext,
        terms: impl IntoIterator<Item = (NewtonMonomial, Rat)>,
    ) -> Self {
        let mut x = Self::zero(ctx);
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    }

    pub(crate) fn add_term(&mut self, m: NewtonMonomial, c: Rat) {
        if c.is_zero() || !self.context.newton_survives(m.indices()) {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn context(&self) -> &JacobianContext {
        &self.context
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NewtonMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coefficient(&self, m: &NewtonMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.context != other.context {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.mul_scalar(&rat_int(-1))
    }

    pub fn mul_scalar(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(&self.context);
        }
        NewtonElement {
            context: self.context.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Intersection product. Bidegrees add termwise; kill rules apply to the
    /// result.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.context != other.context {
            return Err(Error::ContextMismatch);
        }
        let mut out = Self::zero(&self.context);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.merged(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Terms of exactly bidegree (p, s).
    pub fn project(&self, p: u64, s: u64) -> Self {
        NewtonElement {
            context: self.context.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.codimension() == p && m.level() == s)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The scaling operator attached to multiplication by k on the variety:
    /// each (p, s)-term picks up k^{2p-s} (pullback) or k^{2g-2p+s}
    /// (pushforward), with 0^0 = 1.
    pub fn scale(&self, k: i64, direction: ScaleDirection) -> Self {
        let g = self.context.genus() as u64;
        let mut out = Self::zero(&self.context);
        for (m, c) in &self.terms {
            let (p, s) = (m.codimension(), m.level());
            let e = match direction {
                ScaleDirection::Pullback => 2 * p - s,
                ScaleDirection::Pushforward => 2 * g - 2 * p + s,
            };
            out.add_term(m.clone(), c * Rat::from_integer(int_pow(k, e as u32)));
        }
        out
    }

    /// Some((p, s)) if every term shares one bidegree; None for zero or mixed.
    pub fn homogeneous_bidegree(&self) -> Option<(u64, u64)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let bd = (first.codimension(), first.level());
        for m in it {
            if (m.codimension(), m.level()) != bd {
                return None;
            }
        }
        Some(bd)
    }
}

impl fmt::Display for NewtonElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{} * {}", format_rat(c), m)?;
        }
        Ok(())
    }
}

/// The k-th Newton generator as an element: the generator for k <= g-1
/// (subject to gonality kills), zero for k = g.
pub fn newton_class(ctx: &JacobianContext, k: u32) -> Result<NewtonElement> {
    let g = ctx.genus();
    if k < 1 || k > g {
        return Err(Error::IndexOutOfRange {
            what: "newton generator index",
            value: k as i64,
            min: 1,
            max: g as i64,
        });
    }
    Ok(NewtonElement::from_terms(
        ctx,
        [(NewtonMonomial::generator(k), rat_int(1))],
    ))
}

/// The d-th elementary class w^d expressed through the Newton generators:
/// e_d from the Newton recurrence with power sums p_i = i! * N^i (and N^k = 0
/// for k >= g). w^0 = 1, w^1 = theta.
pub fn w_class(ctx: &JacobianContext, d: u32) -> Result<NewtonElement> {
    let g = ctx.genus();
    if d > g {
        return Err(Error::IndexOutOfRange {
            what: "w-class index",
            value: d as i64,
            min: 0,
            max: g as i64,
        });
    }
    // e_j = (1/j) * sum_{i=1}^{j} (-1)^{i-1} e_{j-i} p_i
    let mut elementary: Vec<NewtonElement> = vec![NewtonElement::one(ctx)];
    for j in 1..=d {
        let mut acc = NewtonElement::zero(ctx);
        for i in 1..=j {
            let power_sum = if i < g {
                newton_class(ctx, i)?.mul_scalar(&Rat::from_integer(crate::exact::factorial(i)))
            } else {
                NewtonElement::zero(ctx)
            };
            if power_sum.is_zero() {
                continue;
            }
            let signed = if (i - 1) % 2 == 0 {
                power_sum
            } else {
                power_sum.neg()
            };
            acc = acc.add(&elementary[(j - i) as usize].mul(&signed)?)?;
        }
        elementary.push(acc.mul_scalar(&rat(1, j as i64)));
    }
    Ok(elementary[d as usize].clone())
}

/// Every monomial the kill rules admit for this context, in canonical order.
pub fn surviving_monomials(ctx: &JacobianContext) -> Vec<NewtonMonomial> {
    fn collect(
        ctx: &JacobianContext,
        cur: &mut Vec<u32>,
        next_min: u32,
        sum: u32,
        out: &mut Vec<NewtonMonomial>,
    ) {
        if ctx.newton_survives(cur) {
            out.push(NewtonMonomial::new(cur.clone()));
        }
        let g = ctx.genus();
        for i in next_min..=ctx.component_count() {
            if sum + i > g {
                break;
            }
            cur.push(i);
            collect(ctx, cur, i, sum + i, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    collect(ctx, &mut Vec::new(), 1, 0, &mut out);
    out.sort();
    out
}
