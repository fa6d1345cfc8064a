//! Exact linear algebra: rational and prime-field scalars, dense and sparse
//! row reduction, kernels, subspace membership and Smith normal form.

pub mod matrix;
pub mod scalar;
pub mod smith;
pub mod sparse;

pub use matrix::{subspace_membership, Matrix};
pub use scalar::{format_rational, parse_rational, rational, Field, Fp, Rational, F5, F7};
pub use smith::{smith_decomposition, smith_normal_form, SmithDecomposition};
pub use sparse::{SparseEchelon, SparseRref, SparseVec};
