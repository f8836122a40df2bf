//! Exact analysis of linear hypersurfaces `a(X)Y = F(X,Z,T)` in affine
//! 4-space: structure of the coordinate ring, plane coordinate tests with
//! certificates, and a rectifiability verdict.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod fields;
pub mod filtration;
pub mod hyperplane;
pub mod parse;
pub mod plane;
pub mod poly;
pub mod report;
pub mod verifier;

pub use error::{Error, Result};
pub use fields::{Elem, Field, FieldKind};
pub use poly::{MonomialOrder, MultiPoly};
