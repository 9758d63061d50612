//! Exact two-parameter Fock space computations on extended Young diagrams.
//!
//! The modules build on each other in order: [`coeffring`] supplies the
//! Laurent coefficients, [`diagram`] the basis, [`fock`] vectors and
//! operators, [`glinf`] and [`affinec`] the two generator actions, and
//! [`audit`] evaluates relations over truncated bases.

pub mod affinec;
pub mod audit;
pub mod coeffring;
mod cursor;
pub mod diagram;
pub mod error;
pub mod fock;
pub mod glinf;

pub use coeffring::{LaurentPoly, Monomial, QuarterElem, QuarterShift, RingElem};
pub use diagram::{enumerate, Corner, CornerKind, Diagram};
pub use error::{Error, Result};
pub use fock::{FockVector, LinearOp};
