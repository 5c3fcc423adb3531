//! Exact scalars, p-adic approximations and Laurent polynomials.

pub mod laurent;
pub mod padic;
pub mod scalar;

pub use laurent::LaurentPoly;
pub use padic::PAdic;
pub use scalar::{
    format_rational, parse_rational, unit_ball_check, valuation, ExactDiv, Field, Rational, Ring,
};
