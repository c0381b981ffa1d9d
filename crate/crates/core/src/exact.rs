//! Exact rational arithmetic plus the tiny combinatorics and linear algebra
//! the rest of the crate leans on. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient type used throughout: arbitrary-precision rationals, kept in
/// lowest terms with positive denominator by the backing library.
pub type Rat = BigRational;

/// `n/d` as a [`Rat`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical textual form `numer/denom`, denominator always spelled out.
pub fn format_rat(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Inverse of [`format_rat`], also accepting bare integers: parses `"a/b"`
/// or `"a"` into a normalized rational; `None` on malformed input or a zero
/// denominator.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

/// `n!`
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// `(Σ counts)! / Π counts_i!` — interleavings of groups of identical items.
pub fn multinomial(counts: &[u32]) -> BigInt {
    let total: u32 = counts.iter().sum();
    let mut acc = factorial(total);
    for &c in counts {
        acc /= factorial(c); // exact: each partial quotient is itself a multinomial
    }
    acc
}

/// `base^exp` with the convention `0^0 = 1`.
pub fn int_pow(base: i64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// Exact inverse of the power matrix of a node set: row `s` holds coefficients
/// `c_{s,k}` with `Σ_k c_{s,k} · k^{offset+t} = δ_{s,t}` over the nodes `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    nodes: Vec<i64>,
    offset: u32,
    rows: Vec<Vec<Rat>>,
}

impl CoefficientTable {
    pub fn nodes(&self) -> &[i64] {
        &self.nodes
    }

    pub fn offset(&self) -> u32 {
        self.offset
    }

    pub fn dim(&self) -> usize {
        self.nodes.len()
    }

    /// Coefficient of the node at `node_pos` in the expression for component `s`.
    pub fn coeff(&self, s: usize, node_pos: usize) -> &Rat {
        &self.rows[s][node_pos]
    }

    pub fn row(&self, s: usize) -> &[Rat] {
        &self.rows[s]
    }
}

/// Invert `M[i][j] = nodes[i]^(offset+j)` exactly. The matrix is a Vandermonde
/// matrix times a nonzero diagonal, hence invertible for distinct nonzero nodes.
pub fn vandermonde_coefficients(nodes: &[i64], offset: u32) -> Result<CoefficientTable> {
    for (i, &k) in nodes.iter().enumerate() {
        if k == 0 {
            return Err(Error::ZeroNode);
        }
        if nodes[..i].contains(&k) {
            return Err(Error::DuplicateNode(k));
        }
    }
    let n = nodes.len();
    // Augmented [M | I], then Gauss-Jordan. Dimensions stay below the genus,
    // so clarity beats pivoting sophistication; pivot on numerator magnitude
    // to keep intermediate entries tame.
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rat::from_integer(int_pow(nodes[i], offset + j as u32)))
                .chain((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .max_by_key(|&r| m[r][col].numer().abs())
            .expect("distinct nonzero nodes give an invertible matrix");
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in &mut m[col] {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..2 * n {
                    let sub = &f * &m[col][j];
                    m[r][j] -= sub;
                }
            }
        }
    }
    let rows = m.into_iter().map(|row| row[n..].to_vec()).collect();
    Ok(CoefficientTable {
        nodes: nodes.to_vec(),
        offset,
        rows,
    })
}
