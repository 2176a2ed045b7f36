//! Nilpotent Lie superalgebras of class two and the skew-supersymmetric
//! bilinear maps that classify them.
pub mod battery;
pub mod catalog;
pub mod field;
pub mod invariants;
pub mod liesuper;
pub mod linalg;
pub mod par;
pub mod sske;

pub use field::{Field, FieldError, Scalar};
pub use liesuper::{LieError, LieSuper, NilpotencyClass};
pub use linalg::{Basis, Dims, GradedSubspace, GradedVector, LinalgError, LinearMap, Parity, SuperSpace};
pub use sske::{SkewSuperMap, SskeError};
