//! Exact Schubert calculus on Grassmannians.

pub mod composition;
pub mod error;
pub mod grassmann;
pub mod lr;
pub mod oracle;
pub mod partition;
pub mod wreath;

pub use error::{Error, Result};
pub use grassmann::{GrassmannianShape, SchubertProblem};
pub use lr::SchurExpansion;
pub use partition::{Partition, Rectangle, SkewShape};
