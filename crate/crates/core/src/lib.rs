//! Exact verification of finite-dimensional Z2-graded quasi-Hopf
//! superalgebras given by structure constants.

pub mod algebra;
pub mod checks;
pub mod document;
pub mod drinfeld;
pub mod fixtures;
pub mod linalg;
pub mod map;
pub mod report;
pub mod scalar;
pub mod structure;
pub mod suite;
pub mod tensor;
pub mod twist;

pub use algebra::GradedAlgebra;
pub use map::StructureMap;
pub use report::{CheckReport, Status};
pub use scalar::{FieldSpec, Scalar};
pub use tensor::TensorElement;
pub use structure::QhsaStructure;
