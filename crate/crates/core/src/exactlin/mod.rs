//! Exact scalars, based spaces, sparse vectors, linear maps and quotients.

mod linmap;
mod quotient;
pub mod reduce;
mod scalar;
mod space;
pub mod tensor;
mod vector;

pub use linmap::LinMap;
pub use quotient::{quotient_space, QuotientSpace, ReductionPath, DENSE_QUOTIENT_MAX_DIM};
pub use scalar::{Field, Scalar};
pub use space::Space;
pub use vector::{Accumulator, Element, Vector, DENSE_ACCUMULATOR_MAX_DIM};
