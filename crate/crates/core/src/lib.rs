//! Short-circuit closure of odd-strand pure braids into long knots.
//!
//! The strands of a braid on `2n + 1` strands are joined in turn at the
//! bottom and at the top, leaving the top of strand 1 and the bottom of
//! strand `2n + 1` open. Around that map this crate provides braid
//! arithmetic, long-knot diagrams, plat closures, the Kauffman bracket and
//! Jones polynomial, the Vassiliev invariants `v2` and `v3`, Magnus
//! expansions for lower-central-series checks, and the two-sided group
//! actions whose orbits are the fibres of the closure.

pub mod batch;
pub mod braid;
pub mod closure;
pub mod coset;
pub mod error;
pub mod invariants;
pub mod lcs;
pub mod search;
pub mod suites;

pub use error::{Error, Result};
