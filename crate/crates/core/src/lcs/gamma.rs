//! Sampling from the lower central series and n-triviality reports.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{random_a_generator, PureBraid};
use crate::closure::{short_circuit_close, simplify};
use crate::error::{Error, Result};
use crate::invariants::{casson_v2, vassiliev_v3};

/// Redraws allowed when a commutator cancels to the trivial word.
const MAX_REDRAWS: usize = 64;

/// A left-normed commutator `[[…[g_1, g_2], g_3]…, g_n]` of random
/// A-generators on `strands` strands, so an element of the `n`-th
/// lower-central-series term. Draws that reduce to the empty word are
/// redrawn from the same stream, up to a fixed number of times.
pub fn sample_gamma(n: usize, strands: usize, seed: u64) -> Result<PureBraid> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "commutator depth must be at least 1".into(),
        ));
    }
    if strands.is_multiple_of(2) {
        return Err(Error::EvenStrands(strands));
    }
    if strands < 3 {
        return Err(Error::InvalidArgument(
            "sampling needs at least 3 strands".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = PureBraid::identity(strands);
    for _ in 0..MAX_REDRAWS {
        let mut acc = random_a_generator(strands, &mut rng).to_braid(strands)?;
        for _ in 1..n {
            let g = random_a_generator(strands, &mut rng).to_braid(strands)?;
            acc = acc.commutator(&g)?;
        }
        if !acc.is_empty() {
            return Ok(acc);
        }
        last = acc;
    }
    Ok(last)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ConsistentWithNTrivial,
    NotNTrivial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantValue {
    pub name: String,
    pub value: i64,
}

/// Values of the implemented Vassiliev invariants of order below `n` on
/// the closure of a braid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub braid: String,
    pub n: usize,
    pub values: Vec<InvariantValue>,
    pub verdict: Verdict,
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "braid: {}", self.braid)?;
        writeln!(f, "n: {}", self.n)?;
        for v in &self.values {
            writeln!(f, "{}: {}", v.name, v.value)?;
        }
        let verdict = match self.verdict {
            Verdict::ConsistentWithNTrivial => "consistent with n-trivial",
            Verdict::NotNTrivial => "not n-trivial",
        };
        write!(f, "verdict: {verdict}")
    }
}

/// Closes `b` and evaluates every implemented invariant of order `< n`
/// (`v2` from `n = 3`, `v3` from `n = 4`). All zero is reported as
/// consistent with `n`-triviality, which is not a proof of it.
pub fn n_triviality_certificate(b: &PureBraid, n: usize) -> Result<CertificateReport> {
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedOrder(n));
    }
    let d = simplify(&short_circuit_close(b)?);
    let mut values = Vec::new();
    if n >= 3 {
        values.push(InvariantValue {
            name: "v2".into(),
            value: casson_v2(&d),
        });
    }
    if n >= 4 {
        values.push(InvariantValue {
            name: "v3".into(),
            value: vassiliev_v3(&d),
        });
    }
    let verdict = if values.iter().all(|v| v.value == 0) {
        Verdict::ConsistentWithNTrivial
    } else {
        Verdict::NotNTrivial
    };
    Ok(CertificateReport {
        braid: b.to_string(),
        n,
        values,
        verdict,
    })
}
