//! Polynomials in `K[x_1..x_m, y_1..y_n]` over the rationals and Gröbner bases.

mod groebner;
mod order;
mod polynomial;

pub use groebner::{
    buchberger, divide, initial_ideal, is_groebner_basis, normal_form, s_polynomial, Division,
    GroebnerBasis, GroebnerLimits,
};
pub use order::{MonomialOrder, RingMonomial};
pub use polynomial::{rational, Polynomial};
