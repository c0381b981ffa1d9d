//! JSON interchange format for elements of either basis.
//!
//! A document carries its own genus/gonality so files are self-describing;
//! the CLI cross-checks them against the flags before parsing.  Coefficients
//! travel as exact `"numerator/denominator"` strings — never floats.

use serde::{Deserialize, Serialize};
use tautring::{
    format_rat, parse_rat, JacobianContext, NewtonElement, NewtonMonomial, PontryaginElement,
    PontryaginMonomial,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Newton,
    Pontryagin,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Newton => write!(f, "newton"),
            Side::Pontryagin => write!(f, "pontryagin"),
        }
    }
}

/// One term: a monomial as an integer list plus an exact coefficient.
///
/// Newton-side monomials list generator indices with repetition
/// (`[1,1,2]` is (N^1)^2 * N^2); convolution-side monomials list parts
/// (`[0,0,1]` is <0,0,1>).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDocument {
    pub monomial: Vec<i64>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDocument {
    pub genus: u32,
    #[serde(default)]
    pub gonality: Option<u32>,
    pub side: Side,
    pub terms: Vec<TermDocument>,
}

/// An element of either basis, as parsed from a document.
pub enum ParsedElement {
    Newton(NewtonElement),
    Pontryagin(PontryaginElement),
}

fn in_range(side: Side, entry: i64, genus: u32) -> bool {
    match side {
        Side::Newton => entry >= 1 && entry <= genus as i64,
        Side::Pontryagin => entry >= 0 && entry < genus as i64,
    }
}

/// Builds an element from a document, accumulating duplicate monomials and
/// normalizing killed ones away with a warning per dropped term.
///
/// Out-of-range monomial entries and malformed coefficients are structural
/// errors (the caller maps them to the usage/parse exit code); killed but
/// in-range monomials are not.
pub fn parse_document(
    doc: &ElementDocument,
    ctx: &JacobianContext,
    warnings: &mut Vec<String>,
) -> Result<ParsedElement, String> {
    for (i, term) in doc.terms.iter().enumerate() {
        for &entry in &term.monomial {
            if !in_range(doc.side, entry, ctx.genus()) {
                return Err(format!(
                    "term {i}: monomial entry {entry} out of range for the {} side at genus {}",
                    doc.side,
                    ctx.genus()
                ));
            }
        }
    }

    let mut coeffs = Vec::with_capacity(doc.terms.len());
    for (i, term) in doc.terms.iter().enumerate() {
        match parse_rat(&term.coeff) {
            Some(c) => coeffs.push(c),
            None => return Err(format!("term {i}: malformed coefficient {:?}", term.coeff)),
        }
    }

    let monomials = || {
        doc.terms
            .iter()
            .map(|t| t.monomial.iter().map(|&e| e as u32).collect::<Vec<u32>>())
    };
    match doc.side {
        Side::Newton => {
            for indices in monomials() {
                if !ctx.newton_survives(&indices) {
                    warnings.push(format!(
                        "dropped killed monomial {indices:?} on the newton side"
                    ));
                }
            }
            let element = NewtonElement::from_terms(
                ctx,
                monomials()
                    .zip(coeffs)
                    .map(|(indices, c)| (NewtonMonomial::new(indices), c)),
            );
            Ok(ParsedElement::Newton(element))
        }
        Side::Pontryagin => {
            for parts in monomials() {
                if !ctx.pontryagin_survives(&parts) {
                    warnings.push(format!(
                        "dropped killed monomial {parts:?} on the pontryagin side"
                    ));
                }
            }
            let element = PontryaginElement::from_terms(
                ctx,
                monomials()
                    .zip(coeffs)
                    .map(|(parts, c)| (PontryaginMonomial::new(parts), c)),
            );
            Ok(ParsedElement::Pontryagin(element))
        }
    }
}

pub fn serialize_newton(x: &NewtonElement) -> ElementDocument {
    let ctx = x.context();
    ElementDocument {
        genus: ctx.genus(),
        gonality: ctx.gonality(),
        side: Side::Newton,
        terms: x
            .terms()
            .map(|(m, c)| TermDocument {
                monomial: m.indices().iter().map(|&i| i as i64).collect(),
                coeff: format_rat(c),
            })
            .collect(),
    }
}

pub fn serialize_pontryagin(x: &PontryaginElement) -> ElementDocument {
    let ctx = x.context();
    ElementDocument {
        genus: ctx.genus(),
        gonality: ctx.gonality(),
        side: Side::Pontryagin,
        terms: x
            .terms()
            .map(|(m, c)| TermDocument {
                monomial: m.parts().iter().map(|&p| p as i64).collect(),
                coeff: format_rat(c),
            })
            .collect(),
    }
}
