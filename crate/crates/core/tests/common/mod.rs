//! Shared helpers for the integration tests: independent oracles, fixtures
//! and a seeded corpus of diagrams.

#![allow(dead_code)]

pub mod oracles;

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use shortcircuit::braid::{parse_word, random_pure_braid, PureBraid, SigmaWord};
use shortcircuit::closure::{plat_close, short_circuit_close, LongKnotDiagram, PlatPairing};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

#[derive(Debug, Deserialize)]
pub struct KnotFixture {
    pub word: String,
    pub strands: usize,
    pub jones: String,
    pub v2: i64,
    pub v3: i64,
    pub bridge_upper_bound: usize,
}

pub fn knot_fixtures() -> std::collections::BTreeMap<String, KnotFixture> {
    let text = std::fs::read_to_string(fixture_path("knots.json")).expect("fixture file");
    serde_json::from_str(&text).expect("fixture json")
}

pub fn fixture_braid(f: &KnotFixture) -> PureBraid {
    PureBraid::new(parse_word(&f.word, Some(f.strands)).unwrap()).unwrap()
}

/// Diagrams from short-circuit closures on 3–9 strands, plat closures of
/// random words on 4 and 6 strands (one-component ones only), connected
/// sums and mirrors, each with a label for failure messages.
pub fn corpus(seed: u64, count: usize, max_len: usize) -> Vec<(String, LongKnotDiagram)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(String, LongKnotDiagram)> = Vec::new();
    while out.len() < count {
        match rng.gen_range(0..4) {
            0 | 1 => {
                let s = [3, 5, 7, 9][rng.gen_range(0..4)];
                let b = random_pure_braid(s, max_len, &mut rng);
                out.push((
                    format!("closure of [{b}] on {s}"),
                    short_circuit_close(&b).unwrap(),
                ));
            }
            2 => {
                let s = [4, 6][rng.gen_range(0..2)];
                let len = rng.gen_range(0..=max_len);
                let letters: Vec<i32> = (0..len)
                    .map(|_| {
                        let k = rng.gen_range(1..s as i32);
                        if rng.gen_bool(0.5) {
                            k
                        } else {
                            -k
                        }
                    })
                    .collect();
                let w = SigmaWord::from_signed(s, &letters).unwrap();
                if let Ok(d) = plat_close(&w, &PlatPairing::standard(s).unwrap()) {
                    out.push((format!("plat closure of [{w}]"), d));
                }
            }
            _ => {
                if out.len() >= 2 {
                    let i = rng.gen_range(0..out.len());
                    let j = rng.gen_range(0..out.len());
                    let d = out[i].1.connect_sum(&out[j].1.mirror());
                    if d.crossing_count() <= 2 * max_len {
                        out.push((format!("({}) # mirror({})", out[i].0, out[j].0), d));
                    }
                }
            }
        }
    }
    out
}
