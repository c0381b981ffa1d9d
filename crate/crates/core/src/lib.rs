//! Exact symbolic calculator for tautological classes on the Jacobian of a
//! genus-g curve.
//!
//! Everything lives over one of two bases for the same space of classes:
//!
//! * the **Newton side** ([`NewtonElement`]): polynomials in the generators
//!   N^1, ..., N^{g-1} under the intersection product, with N^1 the theta
//!   divisor;
//! * the **Pontryagin side** ([`PontryaginElement`]): combinations of
//!   convolution monomials ⟨s1, ..., sr⟩ built from the level components of
//!   the curve class under the Pontryagin product.
//!
//! The Fourier transform moves between the two sides, multiplication by theta
//! is computed on the Pontryagin side through an exact recursion over
//! pushed-forward curve classes, and gonality assumptions shrink both sides
//! simultaneously. All arithmetic is exact rational; nothing is ever rounded.
//!
//! The model imposes only the universal forced relations (dimension bounds,
//! level restrictions in extreme codimensions, and gonality kills). It is a
//! canonical quotient-cover of the actual tautological ring of any particular
//! curve: identities verified here hold for every curve, and vanishing here
//! implies vanishing there, but nonvanishing in the model does not certify
//! nonvanishing for a given curve.

pub mod context;
pub mod error;
pub mod exact;
pub mod fourier;
pub mod gonality;
pub mod newton;
pub mod pontryagin;
pub mod theta;

pub use context::{JacobianContext, ScaleDirection};
pub use error::{Error, Result};
pub use exact::{
    factorial, format_rat, int_pow, multinomial, parse_rat, rat, rat_int,
    vandermonde_coefficients,
    CoefficientTable, Rat,
};
pub use newton::{newton_class, w_class, NewtonElement, NewtonMonomial};
pub use pontryagin::{
    component_in_ktuples, curve_class, expand_ktuple, fundamental_class, point_class, KTuple,
    PontryaginElement, PontryaginMonomial,
};
pub use gonality::{
    apply_gonality, dimension_table, generator_bound, hyperelliptic_report, trigonal_report,
    DimensionTable, GeneratorDescription, PresentationReport,
};
pub use fourier::{
    fourier_backward, fourier_forward, fourier_of_wd, verify_convolution_law,
    verify_double_fourier, verify_double_fourier_convolution, verify_dual_formula,
    verify_product_law, Verification,
};
pub use theta::{
    exp_theta_convolve, exp_theta_mul, intersection_number, theta_mul, theta_mul_ktuple,
    theta_power, Sign,
};
