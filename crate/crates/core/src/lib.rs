//! Exact arithmetic for ℤ₂-graded algebras whose products carry their own
//! parity: structure constants, identity checks with full counterexample
//! lists, the standard constructions, operator search and a worked-example
//! catalog.

pub mod catalog;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod format;
pub mod identities;
pub mod linalg;
pub mod map;
pub mod product;
pub mod report;
pub mod scalar;
pub mod search;
pub mod space;
pub mod ternary;

pub use constructions::Representation;
pub use error::{Error, Result};
pub use format::{parse_document, serialize_document, Document};
pub use identities::{IdentityKind, Mode, Side};
pub use map::HomLinearMap;
pub use product::SuperProduct;
pub use report::{CheckReport, Counterexample};
pub use scalar::{Parity, Scalar};
pub use space::{SuperSpace, Vector};
