//! Exact computer algebra for finitely presented bialgebras.
//!
//! The library builds the quotient coalgebra `B⊘B = (B⊗B)/(B⊗B)B⁺` of a
//! bialgebra presentation, solves for the left integrals living in its dual
//! convolution algebra, compares them with classical integrals on `B*`, and
//! computes antipodes, Hopf envelopes and the associated smash products.
//! All arithmetic is over arbitrary-precision rationals; there is no
//! floating point anywhere.

pub mod error;
pub mod linalg;
pub mod order;
pub mod poly;
pub mod qbinom;
pub mod rewrite;
pub mod scalar;
pub mod word;

pub mod endo;
pub mod presentation;
pub mod catalog;
pub mod format;
pub mod oslash;
pub mod morphism;
pub mod integrals;
pub mod antipode;
pub mod envelope;
pub mod smash;

pub use error::{Error, Result};
pub use order::{deglex_compare, MonomialOrder};
pub use poly::{nc_mul, NcPoly, TensorPoly};
pub use qbinom::q_binomial;
pub use scalar::Scalar;
pub use word::Word;
