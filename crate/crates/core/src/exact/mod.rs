//! Exact arithmetic: rationals, the fields ℚ(√2) and ℚ(ζ_n), dense matrices,
//! sparse polynomials, truncated power series, row reduction and integer HNF.

mod cyclotomic;
pub mod hnf;
pub mod linalg;
mod matrix;
mod poly;
mod rational;
mod scalar;
mod series;
mod sqrt2;

pub use cyclotomic::{table as cyclotomic_table, Cyclotomic, CyclotomicTable, SUPPORTED_CONDUCTORS};
pub use matrix::{berkowitz, Matrix};
pub use poly::{base_p_var_name, binary_var_name, monomials_of_degree, Exponent, Poly, RatPoly};
pub use rational::Rational;
pub use scalar::Scalar;
pub use series::{inverse_product, rational_function, Series};
pub use sqrt2::SqrtTwo;
