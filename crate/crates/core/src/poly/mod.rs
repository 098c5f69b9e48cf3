//! Exact sparse multivariate polynomials over the rationals.

mod format;
mod monomial;
mod polynomial;
mod series;
mod space;
mod symmetric;

pub use format::TermJson;
pub use monomial::{grevlex_cmp, lex_cmp, Monomial};
pub use polynomial::{Coeff, Polynomial, Substitution};
pub use series::{series_coefficient, TruncatedPowerSeries};
pub use space::{Family, Var, VariableSpace};
pub use symmetric::{binomial, complete_symmetric, elementary_symmetric};
