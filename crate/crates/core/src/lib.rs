//! Link diagrams and their polynomial invariants, with the combinatorics needed
//! to study positive and almost positive diagrams: Seifert circles and the
//! Murasugi decomposition, the Kauffman bracket and Jones polynomial, the
//! HOMFLY polynomial by skein resolution, and even valence graphs of special
//! alternating diagrams.
//!
//! The crate is `no_std` (it needs `alloc`).

#![no_std]

extern crate alloc;

pub mod bracket;
pub mod diagram;
pub mod evgraph;
pub mod laurent;
pub mod seifert;
pub mod skein;
mod unionfind;

pub use diagram::{Braid, Diagram, DiagramError, End, Sign};
pub use laurent::{Exp4, LaurentPoly1, LaurentPoly2, PolyError, Var};
pub use unionfind::UnionFind;
