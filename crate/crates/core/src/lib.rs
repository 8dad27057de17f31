//! Exact computations in finite-dimensional nilpotent quotients of free
//! associative algebras: normal forms, structure constants, Lie and group
//! Engel conditions, nilpotency class and the Baker-Campbell-Hausdorff group.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! parallel drivers live in the `engel` companion crate.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod bch;
pub mod error;
pub mod expr;
pub mod freealg;
pub mod generic;
pub mod group;
pub mod lie;
mod linalg;
pub mod presentation;
pub mod quotient;
pub mod scalars;
pub mod witness;

pub use algebra::Associative;
pub use error::{Error, ParseError, ParseErrorKind, PresentationError, ScalarError};
pub use freealg::{FreeAlgebra, FreePolynomial, Word};
pub use presentation::{Clause, Presentation};
pub use quotient::{AlgebraElement, ElementRing, QuotientAlgebra};
pub use scalars::{Field, PolyRing, PrimeField, Rationals, Ring, ScalarRing};
pub use witness::{Verdict, Witness};
