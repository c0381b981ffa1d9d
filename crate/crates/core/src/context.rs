//! The ambient setting every element carries: genus, an optional gonality
//! assumption, and the node set used by the curve-component bridge.
//!
//! The context also centralizes the forced vanishing ("kill") rules. A
//! bidegree (p, s) — codimension p, level s — is forced to zero when p < 0,
//! p > g, s >= g, s > 0 with s >= p, p = g with s > 0, or p <= 1 with s > 0.
//! The set is closed under the Fourier bidegree swap (p, s) -> (g-p+s, s), so
//! the same rules govern both multiplication sides.

use crate::error::{Error, Result};
use crate::exact::{vandermonde_coefficients, CoefficientTable};

/// Direction of the scaling operators attached to multiplication by an
/// integer k on the variety: pullback acts by k^{2p-s} on a (p, s)-class,
/// pushforward by k^{2g-2p+s}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaleDirection {
    Pullback,
    Pushforward,
}

/// Genus, optional gonality, and bridge nodes. Immutable once built; every
/// element records the context it belongs to, and binary operations insist
/// the contexts agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianContext {
    genus: u32,
    gonality: Option<u32>,
    nodes: Vec<i64>,
}

impl JacobianContext {
    /// Context with no gonality assumption. Requires g >= 2.
    pub fn new(genus: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall { genus, min: 2 });
        }
        let count = genus - 1;
        Ok(JacobianContext {
            genus,
            gonality: None,
            nodes: (1..=count as i64).collect(),
        })
    }

    /// Context for a curve admitting a degree-d map to the line; 2 <= d <= g+1.
    /// This kills the curve components C_(s) for s >= d-1 and the Newton
    /// generators N^k for k >= d, and shrinks the bridge to the d-1 surviving
    /// components.
    pub fn with_gonality(genus: u32, gonality: u32) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusTooSmall { genus, min: 2 });
        }
        if gonality < 2 || gonality > genus + 1 {
            return Err(Error::GonalityOutOfRange { genus, gonality });
        }
        let count = (genus - 1).min(gonality - 1);
        Ok(JacobianContext {
            genus,
            gonality: Some(gonality),
            nodes: (1..=count as i64).collect(),
        })
    }

    /// Same context with a custom bridge node set (must be distinct, nonzero,
    /// and exactly one node per surviving curve component).
    pub fn with_nodes(mut self, nodes: Vec<i64>) -> Result<Self> {
        if nodes.len() != self.component_count() as usize {
            return Err(Error::NodeCountMismatch {
                expected: self.component_count() as usize,
                got: nodes.len(),
            });
        }
        // Validation of distinctness/nonzeroness happens in the table builder.
        vandermonde_coefficients(&nodes, 2)?;
        self.nodes = nodes;
        Ok(self)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn gonality(&self) -> Option<u32> {
        self.gonality
    }

    pub fn nodes(&self) -> &[i64] {
        &self.nodes
    }

    /// Number of potentially nonzero curve components C_(0), ..., C_(count-1):
    /// g-1 generically, d-1 under a gonality-d assumption.
    pub fn component_count(&self) -> u32 {
        match self.gonality {
            Some(d) => (self.genus - 1).min(d - 1),
            None => self.genus - 1,
        }
    }

    /// Exact table expressing each surviving C_(s) through the pushed-forward
    /// curve classes k_*C over this context's nodes.
    pub fn bridge_table(&self) -> CoefficientTable {
        vandermonde_coefficients(&self.nodes, 2)
            .expect("context nodes are validated at construction")
    }

    /// Does the product of Newton generators with these indices survive the
    /// kill rules? On such monomials the rules reduce to: dead iff some
    /// factor index is out of range (k >= g, or k >= d under gonality d),
    /// the codimension exceeds g, or the codimension equals g at positive level.
    pub fn newton_survives(&self, indices: &[u32]) -> bool {
        let g = self.genus as u64;
        let index_bound = match self.gonality {
            Some(d) => (d as u64).min(g),
            None => g,
        };
        let mut p: u64 = 0;
        for &i in indices {
            if i == 0 || i as u64 >= index_bound {
                return false;
            }
            p += i as u64;
        }
        if p > g {
            return false;
        }
        let s = p - indices.len() as u64; // each factor N^i sits at level i-1
        !(p == g && s > 0)
    }

    /// Does the convolution monomial with these parts survive? Dead iff more
    /// than g factors, a part references a dead curve component, or the level
    /// t is positive with t >= g - r (the codimension).
    pub fn pontryagin_survives(&self, parts: &[u32]) -> bool {
        let g = self.genus as u64;
        let r = parts.len() as u64;
        if r > g {
            return false;
        }
        let cap = self.component_count() as u64;
        let mut t: u64 = 0;
        for &s in parts {
            if s as u64 >= cap {
                return false;
            }
            t += s as u64;
        }
        !(t > 0 && t + r >= g)
    }
}
