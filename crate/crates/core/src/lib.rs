//! Exact computer algebra for the matrix-coefficient basis of `C[z, 1/N]`,
//! invariant pairings, `gl(2, H_C)` actions and ladder-type integral operators
//! on quaternionic spaces, plus floating-point cross-checks.

pub mod actions;
pub mod basis;
pub mod checks;
pub mod error;
pub mod ladder;
pub mod mat2;
pub mod numeric;
pub mod parse;
pub mod poly;
pub mod pairings;
pub mod qi;
pub mod tensor;
pub mod zh;

pub use error::{Error, Result};
pub use mat2::Mat2;
pub use parse::parse_zh;
pub use poly::{Alphabet, Monomial, Poly, Var};
pub use qi::Qi;
pub use zh::Zh;
