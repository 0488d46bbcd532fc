//! Knot invariants: Kauffman bracket, Jones polynomial, writhe and the
//! Vassiliev invariants of degree 2 and 3.

mod bracket;
mod fingerprint;
mod jones;
mod laurent;
mod vassiliev;

pub use bracket::{kauffman_bracket, DEFAULT_CROSSING_CAP};
pub use fingerprint::{fingerprint, Fingerprint};
pub use jones::{jones, writhe};
pub use laurent::{LaurentPoly, Variable};
pub use vassiliev::{arrow_pattern_counts, casson_v2, vassiliev_v3, V3_PATTERNS};
