//! Exact computation of Fox-derivative Alexander matrices, Fitting-ideal
//! GCDs ("twisted Alexander polynomials"), their zeros, block-triangular
//! representation extensions and first cohomology of local systems, for
//! finitely presented pro-p groups given by integer-exponent presentations.
//!
//! The algebra is generic over the scalar field ([`Field`]); the concrete
//! aliases below fix it to exact rationals, which is what the command line
//! and the bundled corpus use.

pub mod algebra;
pub mod cohomology;
pub mod corpus;
pub mod error;
pub mod extensions;
pub mod fitting;
pub mod fox;
pub mod matrix;
pub mod presentation;
pub mod zeros;

pub use algebra::{Field, LaurentPoly, PAdic, Rational, Ring};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use fox::{MatrixRep, Representation, TensorRep};
pub use matrix::Matrix;
pub use presentation::{Presentation, Relator, Word};

/// Laurent polynomials in γ with rational coefficients.
pub type RatLaurent = LaurentPoly<Rational>;
/// Matrices over `Q`.
pub type RatMatrix = Matrix<Rational>;
/// Matrices over `Q[γ, γ⁻¹]`.
pub type LaurentMatrix = Matrix<RatLaurent>;
/// Matrices over finite-precision p-adic numbers.
pub type PAdicMatrix = Matrix<PAdic>;
