//! Thin KLR diagrams: colored strands with dots and crossings, reduced to a
//! normal form, with the polynomial representation as a second opinion.

mod cartan;
mod element;
mod polyrep;
pub mod perm;
mod reduce;
mod text;

pub use cartan::{link, pairing, CartanSln, Color, Link};
pub use element::{Gen, ThinDiagram, ThinElement};
pub use polyrep::{monomial_family, Family, Orientation, PolyRep};
pub use reduce::{clear_caches, Basis};
