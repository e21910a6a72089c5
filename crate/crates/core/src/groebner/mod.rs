//! Buchberger-based ideal engine: normal forms, quotients, saturation,
//! elimination, Hilbert functions and polynomials.

mod engine;
pub mod hilbert;
pub mod ideal;
pub mod order;
pub mod solve;

pub use hilbert::{hilbert_function, hilbert_polynomial, HilbertPolynomial};
pub use ideal::{buchberger, eliminate, ideal_quotient, intersect, leading_monomial, normal_form, poly_gcd, saturate, GroebnerBasis, Ideal};
pub use order::MonomialOrder;
pub use solve::{affine_rational_points, projective_rational_points};
