//! Symplectic quandles over finite rings and quandle coloring invariants of
//! classical and virtual links.
//!
//! * [`ring`]: `Z_n` and `GF(p^m)`, free modules `R^d`, alternating Gram matrices.
//! * [`quandle`]: operation tables, axioms, duals, orbits, subquandles, isomorphism.
//! * [`symplectic`]: the quandle `x ▷ y = x + ⟨x,y⟩ y`, radicals, symplectic bases,
//!   isometry.
//! * [`link`]: signed Gauss codes and their knot-quandle presentations.
//! * [`invariants`]: colorings, the counting invariant, Φ_E and Φ_sqp.

pub mod error;
pub mod invariants;
pub mod link;
pub mod poly;
pub mod quandle;
pub mod ring;
pub mod symplectic;

pub use error::{Error, Result};
pub use invariants::{InvariantSummary, TargetQuandle};
pub use link::{GaussCode, Presentation};
pub use poly::{InvariantPolynomial, TermOrder};
pub use quandle::QuandleTable;
pub use ring::{FiniteRing, FreeModule, GramMatrix, ModuleVector, RingSpec};
pub use symplectic::SymplecticSpace;
