//! Exact computations in ½ℤ-graded Lie algebras given by structure constants,
//! built around the extended Schrödinger-Virasoro algebra.
//!
//! The crate works entirely over the rationals. It provides
//!
//! * brackets of basis vectors and linear combinations ([`Bracket`], [`Esv`]),
//! * a small text format for bracket tables ([`dsl`]),
//! * tensor powers with the diagonal adjoint action ([`tensor`]),
//! * coboundary cobrackets, the Yang-Baxter element `c(r)` and related
//!   identities ([`bialgebra`]),
//! * windowed linear-algebra checks of first-cohomology statements
//!   ([`cohomology`]),
//! * check suites with deterministic reports, driven by the `esv` binary
//!   ([`report`]).
//!
//! ```
//! use esv::{BasisVector as B, Bracket, Esv, AlgebraElement};
//!
//! // [L_1, L_2] = L_3
//! assert_eq!(Esv.bracket_basis(B::l(1), B::l(2)), AlgebraElement::basis(B::l(3)));
//! ```

pub mod basis;
pub mod bialgebra;
pub mod bracket;
pub mod cohomology;
pub mod dsl;
pub mod element;
pub mod error;
pub mod linalg;
pub mod report;
pub mod tensor;

pub use basis::{basis_window, BasisVector, Family, GeneratorSet, HalfDegree};
pub use bracket::{Bracket, Esv};
pub use element::AlgebraElement;
pub use error::{Error, Result};
pub use linalg::{rat, Rational};
pub use tensor::TensorElement;

// The guide's code listings are compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/dsl.md")]
    mod dsl {}
    #[doc = include_str!("../../../book/src/tensors.md")]
    mod tensors {}
    #[doc = include_str!("../../../book/src/bialgebras.md")]
    mod bialgebras {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
