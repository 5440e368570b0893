//! Exact scalar, polynomial, rational-function and matrix arithmetic.
//!
//! Everything here is immutable after construction and every operation is a
//! pure function; floats never appear except through explicit shadow
//! conversions in [`scalar::rat_to_f64`].

pub mod laurent;
pub mod linsolve;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod scalar;

pub use laurent::{ratio_subst, Laurent2};
pub use linsolve::{solve_general, solve_square, Field, LinearSolution};
pub use matrix::{embed_pair, embed_single, Mat, Ring};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use scalar::{
    format_rat, is_nonnegative, parse_rat, pow_i, rat, rat_int, rat_to_f64, FromRat, Int, Rat,
};
