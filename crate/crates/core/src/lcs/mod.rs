//! Lower-central-series tools: Magnus expansions, a Johnson-filtration
//! lower bound for commutator depth, sampling of iterated commutators and
//! vanishing reports for low-order invariants.

mod gamma;
mod johnson;
mod series;

pub use gamma::{
    n_triviality_certificate, sample_gamma, CertificateReport, InvariantValue, Verdict,
};
pub use johnson::{artin_series, johnson_degree, johnson_degree_by_words};
pub use series::{magnus_expand, magnus_expand_rank, TruncatedSeries, DEFAULT_MAX_DEGREE};
