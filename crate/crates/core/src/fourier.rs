//! The Fourier transform as explicit basis maps between the two sides, and
//! executable verifiers for its defining identities.
//!
//! The transform is defined on basis symbols: a product of Newton generators
//! with index sum p maps to the convolution monomial of the shifted indices
//! with sign (-1)^{g+p}, and conversely ⟨s1,...,sr⟩ maps to
//! (-1)^r N^{s1+1}...N^{sr+1}. Everything else (the involution property, the
//! exchange of products, the theta-exponential formula) is then a theorem the
//! verifiers check exactly rather than an assumption.

use std::fmt;

use crate::context::{JacobianContext, ScaleDirection};
use crate::error::{Error, Result};
use crate::exact::{factorial, rat_int, Rat};
use crate::newton::{newton_class, NewtonElement, NewtonMonomial};
use crate::pontryagin::{curve_class, point_class, PontryaginElement, PontryaginMonomial};
use crate::theta::{exp_theta_convolve, exp_theta_mul, theta_power, Sign};

/// Outcome of an identity check; `detail` carries a readable diff on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    pub detail: String,
}

impl Verification {
    fn compare<T: fmt::Display + PartialEq>(lhs: &T, rhs: &T) -> Self {
        if lhs == rhs {
            Verification {
                ok: true,
                detail: String::new(),
            }
        } else {
            Verification {
                ok: false,
                detail: format!("lhs = {lhs}\nrhs = {rhs}"),
            }
        }
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            write!(f, "ok")
        } else {
            write!(f, "MISMATCH\n{}", self.detail)
        }
    }
}

/// Transform from the intersection side to the convolution side:
/// N^{i1}...N^{ir} with index sum p maps to (-1)^{g+p} ⟨i1-1,...,ir-1⟩.
pub fn fourier_forward(x: &NewtonElement) -> PontryaginElement {
    let ctx = x.context();
    let g = ctx.genus() as u64;
    let mut out = PontryaginElement::zero(ctx);
    for (m, c) in x.terms() {
        let sign = if (g + m.codimension()) % 2 == 0 { 1 } else { -1 };
        let parts: Vec<u32> = m.indices().iter().map(|&i| i - 1).collect();
        out.add_term(PontryaginMonomial::new(parts), c * rat_int(sign));
    }
    out
}

/// Transform from the convolution side to the intersection side:
/// ⟨s1,...,sr⟩ maps to (-1)^r N^{s1+1}...N^{sr+1}.
pub fn fourier_backward(x: &PontryaginElement) -> NewtonElement {
    let ctx = x.context();
    let mut out = NewtonElement::zero(ctx);
    for (m, c) in x.terms() {
        let sign = if m.factor_count() % 2 == 0 { 1 } else { -1 };
        let indices: Vec<u32> = m.parts().iter().map(|&s| s + 1).collect();
        out.add_term(NewtonMonomial::new(indices), c * rat_int(sign));
    }
    out
}

fn genus_sign(ctx: &JacobianContext) -> Rat {
    rat_int(if ctx.genus() % 2 == 0 { 1 } else { -1 })
}

/// Applying the transform twice equals (-1)^g times the (-1)-pullback.
pub fn verify_double_fourier(x: &NewtonElement) -> Verification {
    let lhs = fourier_backward(&fourier_forward(x));
    let rhs = x
        .scale(-1, ScaleDirection::Pullback)
        .mul_scalar(&genus_sign(x.context()));
    Verification::compare(&lhs, &rhs)
}

/// Same identity entered from the convolution side.
pub fn verify_double_fourier_convolution(x: &PontryaginElement) -> Verification {
    let lhs = fourier_forward(&fourier_backward(x));
    let rhs = x
        .scale(-1, ScaleDirection::Pullback)
        .mul_scalar(&genus_sign(x.context()));
    Verification::compare(&lhs, &rhs)
}

/// The transform turns the Pontryagin product into the intersection product:
/// F(x*y) = Fx . Fy.
pub fn verify_convolution_law(a: &PontryaginElement, b: &PontryaginElement) -> Result<Verification> {
    let lhs = fourier_backward(&a.star_mul(b)?);
    let rhs = fourier_backward(a).mul(&fourier_backward(b))?;
    Ok(Verification::compare(&lhs, &rhs))
}

/// Mirrored law: F(x.y) = (-1)^g Fx * Fy.
pub fn verify_product_law(a: &NewtonElement, b: &NewtonElement) -> Result<Verification> {
    let lhs = fourier_forward(&a.mul(b)?);
    let rhs = fourier_forward(a)
        .star_mul(&fourier_forward(b))?
        .mul_scalar(&genus_sign(a.context()));
    Ok(Verification::compare(&lhs, &rhs))
}

/// The theta-exponential formula for the transform, checked on the level-0
/// monomial ⟨0^r⟩ where both sides are independently computable:
/// LHS = F⟨0^r⟩ = (-1)^r theta^r, RHS = e^theta.((x e^theta) * e^{-theta}).
pub fn verify_dual_formula(ctx: &JacobianContext, r: u32) -> Result<Verification> {
    let g = ctx.genus();
    if r > g {
        return Err(Error::IndexOutOfRange {
            what: "zero-block length",
            value: r as i64,
            min: 0,
            max: g as i64,
        });
    }
    let x = PontryaginElement::from_terms(ctx, [(PontryaginMonomial::zeros(r as usize), rat_int(1))]);
    let sign = rat_int(if r % 2 == 0 { 1 } else { -1 });
    let lhs = theta_power(ctx, r).mul_scalar(&sign);
    let rhs = exp_theta_mul(&exp_theta_convolve(&exp_theta_mul(&x), Sign::Minus));
    Ok(Verification::compare(&lhs, &rhs))
}

/// F(w^{g-d}) two independent ways: through the d-th convolution power of the
/// curve class, and through the closed form (-1)^d (N^1+...+N^{g-1})^d / d!.
/// Returns the pair for equality testing.
pub fn fourier_of_wd(ctx: &JacobianContext, d: u32) -> Result<(NewtonElement, NewtonElement)> {
    let g = ctx.genus();
    if d > g {
        return Err(Error::IndexOutOfRange {
            what: "convolution power",
            value: d as i64,
            min: 0,
            max: g as i64,
        });
    }
    let c = curve_class(ctx);
    let mut cd = point_class(ctx);
    for _ in 0..d {
        cd = cd.star_mul(&c).expect("same context");
    }
    let dfact_inv = Rat::from_integer(factorial(d)).recip();
    let via_convolution = fourier_backward(&cd).mul_scalar(&dfact_inv);

    let mut newton_sum = NewtonElement::zero(ctx);
    for k in 1..g {
        newton_sum = newton_sum.add(&newton_class(ctx, k)?).expect("same context");
    }
    let mut power = NewtonElement::one(ctx);
    for _ in 0..d {
        power = power.mul(&newton_sum).expect("same context");
    }
    let sign = rat_int(if d % 2 == 0 { 1 } else { -1 });
    let closed_form = power.mul_scalar(&sign).mul_scalar(&dfact_inv);
    Ok((via_convolution, closed_form))
}
