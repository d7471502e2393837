pub mod error;
pub mod identities;
pub mod klr;
pub mod symfunc;
pub mod thick;

pub use error::{Error, Result};
pub use klr::{CartanSln, ThinDiagram, ThinElement};
pub use symfunc::{ExactPoly, Partition, QLaurent};
pub use thick::{ThickDiagram, ThickObject};
