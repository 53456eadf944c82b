//! Coefficient fields, monomials, term orders, rings and polynomials.

mod field;
mod monomial;
mod order;
mod parse;
mod poly;
mod ring;

pub use field::{Coeff, CoefficientField};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub(crate) use parse::{tokenize, PolyParser, Tok, Token};
pub use parse::{parse_polynomial, parse_polynomials};
pub use poly::{Homogeneity, Polynomial, Term};
pub use ring::{Ring, RingMode, RingRef, DEFAULT_DEGREE_CAP};
