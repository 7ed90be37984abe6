//! Exact arithmetic: rationals, prime fields, polynomials, truncated series,
//! linear algebra over Q and Z, resultants.

pub mod field;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod resultant;
pub mod series;
pub mod snf;
pub mod univariate;

pub use field::{parse_rational, q, qf, rational_to_string, Field, Gf, Q};
pub use matrix::{quadratic_gram, IntMatrix, Matrix, RatMatrix};
pub use poly::{poly, var_names, Monomial, MultiPoly};
pub use resultant::{resultant_binary, resultant_in};
pub use series::{series_implicit_solve, series_implicit_system, TruncatedSeries, DEFAULT_JET};
pub use snf::{smith_normal_form, Smith};
