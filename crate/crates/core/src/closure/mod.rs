//! Long-knot diagrams and the closures that produce them from braids.

mod build;
mod codes;
mod diagram;
mod simplify;

pub use build::{
    bridge_upper_bound, plat_close, plat_word_for, short_circuit_close, t_braid, PlatPairing,
};
pub use codes::{parse_gauss_code, parse_pd_code, to_gauss_code, to_pd_code};
pub use diagram::{CrossingRecord, GaussEntry, LongKnotDiagram};
pub use simplify::simplify;
