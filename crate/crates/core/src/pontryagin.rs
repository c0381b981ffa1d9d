//! The convolution side: linear combinations of Pontryagin monomials
//! ⟨s1,...,sr⟩, the convolution products of level components of the curve
//! class. A monomial with r factors sits in codimension g-r; its level is the
//! sum of its parts. The empty monomial is the point class, the unit for the
//! Pontryagin product, and ⟨0,...,0⟩ (g zeros) is g! times the fundamental
//! class.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::context::{JacobianContext, ScaleDirection};
use crate::error::{Error, Result};
use crate::exact::{factorial, format_rat, int_pow, rat_int, Rat};

/// ⟨s1,...,sr⟩ with parts stored sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PontryaginMonomial {
    parts: Vec<u32>,
}

impl PontryaginMonomial {
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        parts.sort_unstable();
        PontryaginMonomial { parts }
    }

    /// ⟨⟩, the point class.
    pub fn point() -> Self {
        PontryaginMonomial { parts: Vec::new() }
    }

    /// ⟨0^count⟩.
    pub fn zeros(count: usize) -> Self {
        PontryaginMonomial {
            parts: vec![0; count],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn factor_count(&self) -> usize {
        self.parts.len()
    }

    /// Level t = sum of parts.
    pub fn level(&self) -> u64 {
        self.parts.iter().map(|&s| s as u64).sum()
    }

    /// Codimension g - r. Meaningful for monomials with at most g factors
    /// (anything longer is the zero class and never stored).
    pub fn codimension(&self, genus: u32) -> u64 {
        (genus as u64).saturating_sub(self.parts.len() as u64)
    }

    fn merged(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        PontryaginMonomial::new(parts)
    }
}

impl Ord for PontryaginMonomial {
    /// Factor count first, then lexicographic on the sorted parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts
            .len()
            .cmp(&other.parts.len())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for PontryaginMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PontryaginMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, s) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ">")
    }
}

/// [k1,...,kr]: the convolution product of the pushed-forward curve classes
/// k_i*C, stored sorted. The working basis of the theta recursion. Any zero
/// entry makes the class zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KTuple {
    entries: Vec<i64>,
}

impl KTuple {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        let mut entries = entries.into();
        entries.sort_unstable();
        KTuple { entries }
    }

    pub fn empty() -> Self {
        KTuple { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn has_zero_entry(&self) -> bool {
        self.entries.contains(&0)
    }
}

impl fmt::Display for KTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

/// Exact linear combination of surviving Pontryagin monomials over a context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PontryaginElement {
    context: JacobianContext,
    terms: BTreeMap<PontryaginMonomial, Rat>,
}

impl PontryaginElement {
    pub fn zero(ctx: &JacobianContext) -> Self {
        PontryaginElement {
            context: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        ctx: &JacobianContext,
        terms: impl IntoIterator<Item = (PontryaginMonomial, Rat)>,
    ) -> Self {
        let mut x = Self::zero(ctx);
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    }

    pub(crate) fn add_term(&mut self, m: PontryaginMonomial, c: Rat) {
        if c.is_zero() || !self.context.pontryagin_survives(m.parts()) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&PontryaginMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &PontryaginMonomial) -> Rat {
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
        PontryaginElement {
            context: self.context.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Pontryagin product: bilinear concatenation of part tuples. Each term's
    /// codimension is the sum of the factors' codimensions minus g.
    pub fn star_mul(&self, other: &Self) -> Result<Self> {
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

    /// Scaling operators: a monomial with r factors at level t picks up
    /// k^{2(g-r)-t} under pullback, k^{2r+t} under pushforward (0^0 = 1).
    pub fn scale(&self, k: i64, direction: ScaleDirection) -> Self {
        let g = self.context.genus() as u64;
        let mut out = Self::zero(&self.context);
        for (m, c) in &self.terms {
            let r = m.factor_count() as u64;
            let t = m.level();
            let e = match direction {
                ScaleDirection::Pullback => 2 * (g - r) - t,
                ScaleDirection::Pushforward => 2 * r + t,
            };
            out.add_term(m.clone(), c * Rat::from_integer(int_pow(k, e as u32)));
        }
        out
    }

    /// Terms of exactly bidegree (p, s).
    pub fn project(&self, p: u64, s: u64) -> Self {
        let g = self.context.genus();
        PontryaginElement {
            context: self.context.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.codimension(g) == p && m.level() == s)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Some((p, s)) if every term shares one bidegree; None for zero or mixed.
    pub fn homogeneous_bidegree(&self) -> Option<(u64, u64)> {
        let g = self.context.genus();
        let mut it = self.terms.keys();
        let first = it.next()?;
        let bd = (first.codimension(g), first.level());
        for m in it {
            if (m.codimension(g), m.level()) != bd {
                return None;
            }
        }
        Some(bd)
    }
}

impl fmt::Display for PontryaginElement {
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

/// ⟨⟩, the unit for the Pontryagin product.
pub fn point_class(ctx: &JacobianContext) -> PontryaginElement {
    PontryaginElement::from_terms(ctx, [(PontryaginMonomial::point(), rat_int(1))])
}

/// ⟨0^g⟩/g!, the fundamental class — the unit for the intersection product.
pub fn fundamental_class(ctx: &JacobianContext) -> PontryaginElement {
    PontryaginElement::from_terms(
        ctx,
        [(
            PontryaginMonomial::zeros(ctx.genus() as usize),
            Rat::from_integer(factorial(ctx.genus())).recip(),
        )],
    )
}

/// The full curve class: the sum of its surviving level components ⟨s⟩.
pub fn curve_class(ctx: &JacobianContext) -> PontryaginElement {
    PontryaginElement::from_terms(
        ctx,
        (0..ctx.component_count()).map(|s| (PontryaginMonomial::new(vec![s]), rat_int(1))),
    )
}

/// Multilinear expansion of [k1,...,kr] into Pontryagin monomials: each k_i*C
/// contributes Σ_s k_i^{2+s} C_(s) over the surviving components.
///
/// Partial products are collected by sorted part-multiset. The kill rules
/// bound the admissible level (t = 0 or t < g-r), and a partial level never
/// decreases, so branches beyond the bound are pruned as they appear; this
/// keeps the state space polynomial where the naive product of choices is
/// exponential in r.
pub fn expand_ktuple(ctx: &JacobianContext, kt: &KTuple) -> PontryaginElement {
    let g = ctx.genus() as u64;
    let r = kt.len() as u64;
    if kt.has_zero_entry() || r > g {
        return PontryaginElement::zero(ctx);
    }
    let cap = (g - r).saturating_sub(1);
    let pmax = ctx.component_count();
    let mut partial: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
    partial.insert(Vec::new(), rat_int(1));
    for &k in kt.entries() {
        let mut next: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (parts, c) in &partial {
            let t: u64 = parts.iter().map(|&s| s as u64).sum();
            for s in 0..pmax {
                if t + s as u64 > cap {
                    break;
                }
                let coef = c * Rat::from_integer(int_pow(k, 2 + s));
                let mut key = parts.clone();
                let pos = key.partition_point(|&x| x <= s);
                key.insert(pos, s);
                match next.entry(key) {
                    Entry::Vacant(v) => {
                        v.insert(coef);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() += coef;
                    }
                }
            }
        }
        partial = next;
    }
    PontryaginElement::from_terms(
        ctx,
        partial
            .into_iter()
            .map(|(parts, c)| (PontryaginMonomial { parts }, c)),
    )
}

/// The bridge: coefficients expressing the level component C_(s) through the
/// pushed-forward curve classes over this context's nodes. Components killed
/// by a gonality assumption return the empty combination.
pub fn component_in_ktuples(ctx: &JacobianContext, s: u32) -> Result<Vec<(Rat, KTuple)>> {
    let g = ctx.genus();
    if s + 2 > g {
        return Err(Error::IndexOutOfRange {
            what: "component level",
            value: s as i64,
            min: 0,
            max: g as i64 - 2,
        });
    }
    if s >= ctx.component_count() {
        return Ok(Vec::new());
    }
    let table = ctx.bridge_table();
    Ok(table
        .row(s as usize)
        .iter()
        .zip(table.nodes())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, &k)| (c.clone(), KTuple::new(vec![k])))
        .collect())
}

/// Every monomial the kill rules admit for this context, in canonical order.
/// Kills are upward-closed under appending parts, so dead prefixes prune
/// their whole subtree.
pub fn surviving_monomials(ctx: &JacobianContext) -> Vec<PontryaginMonomial> {
    fn collect(
        ctx: &JacobianContext,
        cur: &mut Vec<u32>,
        next_min: u32,
        out: &mut Vec<PontryaginMonomial>,
    ) {
        if !ctx.pontryagin_survives(cur) {
            return;
        }
        out.push(PontryaginMonomial::new(cur.clone()));
        if cur.len() as u64 == ctx.genus() as u64 {
            return;
        }
        for s in next_min..ctx.component_count() {
            cur.push(s);
            collect(ctx, cur, s, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    collect(ctx, &mut Vec::new(), 0, &mut out);
    out.sort();
    out
}
