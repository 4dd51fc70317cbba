//! Exact integer linear algebra: dense matrices, polynomials, Smith normal
//! form and finitely generated abelian groups.

mod matrix;
mod poly;
mod snf;

pub use matrix::IntMatrix;
pub use poly::IntPoly;
pub use snf::{cokernel, smith_normal_form, AbelianGroup, SmithForm};
