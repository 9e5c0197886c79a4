//! Exact determinantal identities of Sylvester type.
//!
//! Scalars are arbitrary-precision rationals. Two independent determinant
//! engines are provided: [`det_reference`] (memoized Laplace expansion) and
//! [`det_bareiss`] (fraction-free elimination). The [`identities`] module
//! verifies Sylvester's identity and its generalizations exactly, and
//! [`fraction_free`] certifies elimination intermediates as bordered minors.
//!
//! All row and column indices are 1-based.

pub mod det;
pub mod elimination;
pub mod error;
pub mod fraction_free;
pub mod identities;
pub mod index;
pub mod matrix;
pub mod report;
pub mod rng;
pub mod scalar;

pub use det::{det_reference, extended_minor, leading_minor, minor_det};
pub use elimination::{det_bareiss, EliminationTrace};
pub use error::{Error, Result};
pub use index::{enumerate_permutations, IndexList, PairClass, PermutationWithSign};
pub use matrix::Matrix;
pub use report::IdentityReport;
pub use rng::SeedStream;
pub use scalar::Scalar;
