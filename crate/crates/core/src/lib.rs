//! Exact finite-dimensional verification of A-rings with grouplike
//! characters, Frobenius systems and their trace maps, Hopf smash products,
//! corings with grouplike elements, and a brute-force FBN oracle for finite
//! rings.
//!
//! All arithmetic is exact: prime fields `F_p` and the rationals.

pub mod algebra;
pub mod character;
pub mod cli;
pub mod coring;
pub mod corpus;
pub mod error;
pub mod fbn;
pub mod field;
pub mod frobext;
pub mod hopf;
pub mod io;
pub mod matrix;
pub mod module;
pub mod morita;
pub mod report;
pub mod subspace;
pub mod tensor;

pub use algebra::{Algebra, AlgebraElement, AlgebraMap, Side};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use report::Report;
pub use subspace::{EnumCaps, Subspace};
