//! Exact computation with left-orderings on groups carrying a finite
//! rational series.
//!
//! The crate supports three group families, all with decidable normal forms:
//!
//! * `F1` — rank-one-by-cyclic groups ⟨a,b | bab⁻¹ = a^r⟩ with rational
//!   r > 0, r ≠ 1, acting faithfully on the line by affine maps;
//! * towers — poly-infinite-cyclic groups with ±1 conjugation signs between
//!   the levels of their series (the Klein bottle group is the two-level
//!   tower with sign −1);
//! * `G(n)` — a rank-one group extended by the Baumslag–Solitar group
//!   B(1,3), presented as ⟨a,b,c | bab⁻¹=a⁻¹, cbc⁻¹=b³, cac⁻¹=aⁿ⟩ and
//!   modeled as a split extension.
//!
//! On top of the group arithmetic it builds total ordering oracles
//! (lexicographic sign vectors, point-evaluation orderings at a side-tagged
//! rational parameter, reversals, extensions by a convex subgroup), compares
//! oracles in the standard ultrametric on the space of left-orderings,
//! realizes orderings as actions on the line by the max/min/midpoint rule,
//! and counts orderings from a rational-series descriptor.

pub mod classify;
pub mod dynreal;
pub mod error;
pub mod exact;
pub mod groups;
pub mod orders;
pub mod space;

pub use error::{Error, Result};
