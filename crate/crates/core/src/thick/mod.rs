//! Thick strands: divided-power idempotents, splitters, decorated thick
//! lines and thick crossings, compiled to thin elements.

mod cache;
mod diagram;
mod generators;
mod object;

pub use cache::{load_cache, save_cache, CacheStatus};
pub use diagram::ThickDiagram;
pub use generators::{dot_vector, generator, idempotent, merge, split, thick_cross, thick_dot, GenKey, RawWords};
pub use object::{Strand, ThickObject};
