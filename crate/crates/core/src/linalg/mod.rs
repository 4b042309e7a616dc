//! Exact linear algebra over a prime field.

mod elim;
mod field;
mod matrix;
mod poly;

pub use elim::{
    cokernel_basis, column_space, intersect, inverse, is_invertible, kernel_basis, rank, rref, solve, Echelon,
};
pub use field::{is_prime, prime, set_prime, Fp, DEFAULT_PRIME};
pub use matrix::Matrix;
pub use poly::{char_poly, char_poly_factors, factor, Poly};
