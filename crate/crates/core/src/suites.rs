//! Seeded randomized verification suites.
//!
//! Each suite is a batch of independent cases. Case `i` of a run with seed
//! `s` draws everything from its own case seed, derived from `s` and `i`,
//! so a failing case can be replayed alone with [`check_case`].

use std::fmt;
use std::str::FromStr;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::batch;
use crate::braid::{random_pure_braid, AGenerator, PureBraid};
use crate::closure::{plat_close, plat_word_for, short_circuit_close, PlatPairing};
use crate::coset::{apply_action, hb_generators, ht_generators};
use crate::error::{Error, Result};
use crate::invariants::{fingerprint, Fingerprint};
use crate::lcs::{johnson_degree, n_triviality_certificate, sample_gamma, Verdict};

/// Crossing cap used by the suites; random cases stay well below it.
pub const SUITE_CROSSING_CAP: usize = 120;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// Closure unchanged by adding two trivial strands.
    Stabilize,
    /// Closure of a tensor product is the connected sum of the closures.
    Tensor,
    /// Top and bottom generator actions keep the closure fixed.
    Orbit,
    /// Iterated commutators close to knots with vanishing low invariants.
    Lcs,
    /// Plat closure of `t · i(x)` agrees with the closure of `x`.
    Plat,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Stabilize,
        Suite::Tensor,
        Suite::Orbit,
        Suite::Lcs,
        Suite::Plat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Stabilize => "stabilize",
            Suite::Tensor => "tensor",
            Suite::Orbit => "orbit",
            Suite::Lcs => "lcs",
            Suite::Plat => "plat",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

/// Seed of case `index` in a run seeded with `seed`.
pub fn case_seed(seed: u64, index: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng.next_u64()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseFailure {
    pub index: usize,
    pub case_seed: u64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub count: usize,
    pub passed: usize,
    pub failures: Vec<CaseFailure>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite {}: {}/{} passed (seed {})",
            self.suite, self.passed, self.count, self.seed
        )?;
        for c in &self.failures {
            write!(
                f,
                "\nFAIL case {} (case seed {}): {}",
                c.index, c.case_seed, c.detail
            )?;
        }
        Ok(())
    }
}

fn odd_strands(rng: &mut ChaCha8Rng, choices: &[usize]) -> usize {
    choices[rng.gen_range(0..choices.len())]
}

fn fp(b: &PureBraid, cap: usize) -> Result<Fingerprint> {
    fingerprint(&short_circuit_close(b)?, cap)
}

fn fail(msg: String) -> Result<()> {
    Err(Error::InvalidArgument(msg))
}

fn stabilize_case(rng: &mut ChaCha8Rng, cap: usize) -> Result<()> {
    let s = odd_strands(rng, &[3, 5, 7]);
    let b = random_pure_braid(s, 16, rng);
    let (small, large) = (fp(&b, cap)?, fp(&b.include(s + 2)?, cap)?);
    if small != large {
        return fail(format!(
            "{b} on {s} strands: {small:?} vs {large:?} after stabilizing"
        ));
    }
    Ok(())
}

fn tensor_case(rng: &mut ChaCha8Rng, cap: usize) -> Result<()> {
    let b1 = random_pure_braid(odd_strands(rng, &[3, 5]), 12, rng);
    let b2 = random_pure_braid(odd_strands(rng, &[3, 5]), 12, rng);
    let (d1, d2) = (short_circuit_close(&b1)?, short_circuit_close(&b2)?);
    let product = fp(&b1.tensor(&b2)?, cap)?;
    let expected = fingerprint(&d1, cap)?.connect(&fingerprint(&d2, cap)?)?;
    let summed = fingerprint(&d1.connect_sum(&d2), cap)?;
    if product != expected || summed != expected {
        return fail(format!(
            "[{b1}] ⊗ [{b2}]: tensor {product:?}, connected sum {summed:?}, expected {expected:?}"
        ));
    }
    Ok(())
}

fn orbit_case(rng: &mut ChaCha8Rng, cap: usize) -> Result<()> {
    let s = odd_strands(rng, &[3, 5, 7, 9]);
    let b = random_pure_braid(s, 12, rng);
    let gens = if rng.gen_bool(0.5) {
        ht_generators(s)?
    } else {
        hb_generators(s)?
    };
    let g = &gens[rng.gen_range(0..gens.len())];
    let e = if rng.gen_bool(0.5) { 1 } else { -1 };
    let (before, after) = (fp(&b, cap)?, fp(&apply_action(&b, g, e)?, cap)?);
    if before != after {
        return fail(format!(
            "{b} on {s} strands under {g}^{e}: {before:?} vs {after:?}"
        ));
    }
    Ok(())
}

fn lcs_case(rng: &mut ChaCha8Rng) -> Result<()> {
    let n = rng.gen_range(3..=4);
    let s = odd_strands(rng, &[3, 5]);
    let b = sample_gamma(n, s, rng.next_u64())?;
    let report = n_triviality_certificate(&b, n)?;
    if report.verdict != Verdict::ConsistentWithNTrivial {
        return fail(format!("commutator of depth {n}: {report}"));
    }
    let jd = johnson_degree(&b, 4);
    if jd < n {
        return fail(format!(
            "commutator of depth {n} has Johnson degree {jd}: {b}"
        ));
    }
    Ok(())
}

fn plat_case(rng: &mut ChaCha8Rng, cap: usize) -> Result<()> {
    let x = random_pure_braid(odd_strands(rng, &[3, 5]), 12, rng);
    let w = plat_word_for(&x)?;
    let plat = fingerprint(&plat_close(&w, &PlatPairing::standard(w.strands())?)?, cap)?;
    let short = fp(&x, cap)?;
    if !plat.matches_up_to_mirror(&short) {
        return fail(format!("{x}: plat {plat:?} vs closure {short:?}"));
    }
    Ok(())
}

/// Runs one case from its case seed. `Err` carries the failure detail or
/// the error that stopped the case.
pub fn check_case(
    suite: Suite,
    case_seed: u64,
    crossing_cap: usize,
) -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed);
    let out = match suite {
        Suite::Stabilize => stabilize_case(&mut rng, crossing_cap),
        Suite::Tensor => tensor_case(&mut rng, crossing_cap),
        Suite::Orbit => orbit_case(&mut rng, crossing_cap),
        Suite::Lcs => lcs_case(&mut rng),
        Suite::Plat => plat_case(&mut rng, crossing_cap),
    };
    out.map_err(|e| match e {
        Error::InvalidArgument(msg) => msg,
        other => other.to_string(),
    })
}

fn collect(
    suite: Suite,
    seed: u64,
    outcomes: Vec<(usize, u64, std::result::Result<(), String>)>,
) -> SuiteReport {
    let count = outcomes.len();
    let failures: Vec<CaseFailure> = outcomes
        .into_iter()
        .filter_map(|(index, case_seed, r)| {
            r.err().map(|detail| CaseFailure {
                index,
                case_seed,
                detail,
            })
        })
        .collect();
    SuiteReport {
        suite,
        seed,
        count,
        passed: count - failures.len(),
        failures,
    }
}

/// Runs `count` cases, in parallel when the feature is enabled.
pub fn run_suite(suite: Suite, seed: u64, count: usize, crossing_cap: usize) -> SuiteReport {
    let outcomes = batch::map_range(count, |i| {
        let cs = case_seed(seed, i);
        (i, cs, check_case(suite, cs, crossing_cap))
    });
    collect(suite, seed, outcomes)
}

/// [`run_suite`] on the current thread only.
pub fn run_suite_sequential(
    suite: Suite,
    seed: u64,
    count: usize,
    crossing_cap: usize,
) -> SuiteReport {
    let idx: Vec<usize> = (0..count).collect();
    let outcomes = batch::map_sequential(&idx, |&i| {
        let cs = case_seed(seed, i);
        (i, cs, check_case(suite, cs, crossing_cap))
    });
    collect(suite, seed, outcomes)
}

/// A pure braid on 3 strands closing to the trefoil, used by the orbit
/// walks as a non-trivial starting point.
pub fn trefoil_braid() -> PureBraid {
    AGenerator::new(1, 3, 1)
        .and_then(|g| g.to_braid(3))
        .expect("fixed generator")
}
