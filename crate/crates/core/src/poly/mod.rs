//! Exact multivariate polynomials over `F_p` and `QQ`.

mod coeff;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use coeff::{Coeff, Field};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use polynomial::{poly_arith, ArithOp, Poly, Term};
pub use ring::Ring;

pub(crate) use polynomial::reduce_terms;
