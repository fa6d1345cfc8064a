//! Fundamental groups of bound quiver presentations.
//!
//! The crate computes the homotopy relation of a bound quiver `(Q, I)` from
//! the minimal relations of `I`, extracts a finite presentation of
//! `π₁(Q, I)`, identifies the group with Tietze moves, Smith normal form and
//! Todd–Coxeter enumeration, and builds the coproduct, product, covering and
//! presentation-change constructions that realize several groups as
//! fundamental groups of presentations of one algebra.

pub mod change;
pub mod constructions;
pub mod error;
pub mod group;
pub mod linalg;
pub mod pi1;
pub mod quiver;
pub mod relations;
pub mod union_find;

pub use error::{Error, Result};
