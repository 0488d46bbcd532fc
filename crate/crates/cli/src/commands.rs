use serde::Serialize;
use serde_json::{json, Value};

use shortcircuit::braid::{parse_word, PureBraid, SigmaWord};
use shortcircuit::closure::{
    bridge_upper_bound, parse_gauss_code, parse_pd_code, plat_close, plat_word_for,
    short_circuit_close, simplify, to_gauss_code, to_pd_code, LongKnotDiagram, PlatPairing,
};
use shortcircuit::coset::{orbit_log, random_orbit_walk_with_moves};
use shortcircuit::invariants::{fingerprint, writhe, Fingerprint, DEFAULT_CROSSING_CAP};
use shortcircuit::lcs::{johnson_degree, n_triviality_certificate, sample_gamma};
use shortcircuit::search::enumerate_knots;
use shortcircuit::suites::{run_suite, Suite, SUITE_CROSSING_CAP};
use shortcircuit::{Error, Result};

use crate::{Cli, Command, InputFormat, LcsCommand, SuiteName, WordArgs};

/// Rendered result of a command. `text` and `json` carry the same fields.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            code: 0,
        }
    }
}

/// 2 for unparseable input, 4 when a resource cap stopped the work, 3 for
/// every other domain error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::WordTooLong { .. } | Error::CrossingCap { .. } | Error::CoefficientOverflow => 4,
        _ => 3,
    }
}

fn round_up_odd(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n + 1
    } else {
        n
    }
}

fn round_up_even(n: usize) -> usize {
    n + n % 2
}

fn parse(w: &WordArgs) -> Result<SigmaWord> {
    parse_word(&w.word, w.strands)
}

/// A pure braid on an odd strand count; an inferred even count is rounded
/// up by one trivial strand.
fn parse_pure(word: &str, strands: Option<usize>) -> Result<PureBraid> {
    let w = parse_word(word, strands)?;
    let w = match strands {
        Some(_) => w,
        None => w.include(round_up_odd(w.strands()))?,
    };
    PureBraid::new(w)
}

fn diagram_fields(d: &LongKnotDiagram) -> (String, Value) {
    let (gauss, pd) = (to_gauss_code(d), to_pd_code(d));
    let text = format!(
        "crossings: {}\nwrithe: {}\ngauss: {gauss}\npd: {pd}",
        d.crossing_count(),
        d.writhe()
    );
    let v =
        json!({ "crossings": d.crossing_count(), "writhe": d.writhe(), "gauss": gauss, "pd": pd });
    (text, v)
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Some(a), Value::Object(b)) = (a.as_object_mut(), b) {
        a.extend(b);
    }
    a
}

fn fingerprint_text(f: &Fingerprint) -> String {
    format!("jones: {}\nv2: {}\nv3: {}", f.jones, f.v2, f.v3)
}

fn fingerprint_json(f: &Fingerprint) -> Value {
    json!({ "jones": f.jones.to_string(), "v2": f.v2, "v3": f.v3 })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for part in text.split(',') {
        let bad = || Error::Parse {
            pos,
            msg: format!("expected a pair like 1-2, got {part:?}"),
        };
        let (a, b) = part.trim().split_once('-').ok_or_else(bad)?;
        out.push((
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ));
        pos += part.len() + 1;
    }
    Ok(out)
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Close {
            word,
            simplify: simp,
        } => {
            let b = parse_pure(&word.word, word.strands)?;
            let mut d = short_circuit_close(&b)?;
            if *simp {
                d = simplify(&d);
            }
            let (text, v) = diagram_fields(&d);
            Ok(Outcome::ok(
                format!("strands: {}\n{text}", b.strands()),
                merge(json!({ "strands": b.strands() }), v),
            ))
        }
        Command::Plat {
            word,
            wrap,
            top,
            bottom,
            simplify: simp,
        } => {
            let w = if *wrap {
                plat_word_for(&parse_pure(&word.word, word.strands)?)?
            } else {
                let w = parse(word)?;
                match word.strands {
                    Some(_) => w,
                    None => w.include(round_up_even(w.strands()))?,
                }
            };
            let n = w.strands();
            let standard = PlatPairing::standard(n)?;
            let top = top
                .as_deref()
                .map(parse_pairs)
                .transpose()?
                .unwrap_or_else(|| standard.top().to_vec());
            let bottom = bottom
                .as_deref()
                .map(parse_pairs)
                .transpose()?
                .unwrap_or_else(|| standard.bottom().to_vec());
            let mut d = plat_close(&w, &PlatPairing::new(n, top, bottom)?)?;
            if *simp {
                d = simplify(&d);
            }
            let (text, v) = diagram_fields(&d);
            Ok(Outcome::ok(
                format!("word: {w}\nstrands: {n}\n{text}"),
                merge(json!({ "word": w.to_string(), "strands": n }), v),
            ))
        }
        Command::Invariants {
            input,
            format,
            strands,
            simplify: simp,
        } => {
            let cap = cli.cap.unwrap_or(DEFAULT_CROSSING_CAP);
            let (d, bridge) = match format {
                InputFormat::Braid => {
                    let b = parse_pure(input, *strands)?;
                    (short_circuit_close(&b)?, Some(bridge_upper_bound(&b)))
                }
                InputFormat::Gauss => (parse_gauss_code(input)?, None),
                InputFormat::Pd => (parse_pd_code(input)?, None),
            };
            let d = if *simp { simplify(&d) } else { d };
            let f = fingerprint(&d, cap)?;
            let bridge_text = bridge.map_or("n/a".to_string(), |b| b.to_string());
            Ok(Outcome::ok(
                format!(
                    "{}\nwrithe: {}\nbridge_upper_bound: {bridge_text}",
                    fingerprint_text(&f),
                    writhe(&d)
                ),
                merge(
                    fingerprint_json(&f),
                    json!({ "writhe": writhe(&d), "bridge_upper_bound": bridge }),
                ),
            ))
        }
        Command::Tensor {
            first,
            second,
            strands1,
            strands2,
        } => {
            let cap = cli.cap.unwrap_or(DEFAULT_CROSSING_CAP);
            let b1 = parse_pure(first, *strands1)?;
            let b2 = parse_pure(second, *strands2)?;
            let t = b1.tensor(&b2)?;
            let tf = fingerprint(&short_circuit_close(&t)?, cap)?;
            let sum = short_circuit_close(&b1)?.connect_sum(&short_circuit_close(&b2)?);
            let sf = fingerprint(&sum, cap)?;
            let same = tf == sf;
            let text = format!(
                "word: {t}\nstrands: {}\ntensor: {}\nconnected_sum: {}\nmatch: {same}",
                t.strands(),
                fingerprint_text(&tf).replace('\n', ", "),
                fingerprint_text(&sf).replace('\n', ", "),
            );
            let v = json!({
                "word": t.to_string(),
                "strands": t.strands(),
                "tensor": fingerprint_json(&tf),
                "connected_sum": fingerprint_json(&sf),
                "match": same,
            });
            Ok(Outcome {
                text,
                json: v,
                code: if same { 0 } else { 1 },
            })
        }
        Command::Orbit { word, steps, seed } => {
            let cap = cli.cap.unwrap_or(SUITE_CROSSING_CAP);
            let b = parse_pure(&word.word, word.strands)?;
            let (walk, moves) = random_orbit_walk_with_moves(&b, *steps, *seed)?;
            let log = orbit_log(&walk, &moves, cap)?;
            let text = log
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::ok(text, to_value(&log)))
        }
        Command::Lcs { action } => lcs(action),
        Command::Verify { suite, seed, count } => {
            let cap = cli.cap.unwrap_or(SUITE_CROSSING_CAP);
            let suite = match suite {
                SuiteName::Stabilize => Suite::Stabilize,
                SuiteName::Tensor => Suite::Tensor,
                SuiteName::Orbit => Suite::Orbit,
                SuiteName::Lcs => Suite::Lcs,
                SuiteName::Plat => Suite::Plat,
            };
            let report = run_suite(suite, *seed, *count, cap);
            let code = if report.ok() { 0 } else { 1 };
            Ok(Outcome {
                text: report.to_string(),
                json: to_value(&report),
                code,
            })
        }
        Command::Search { strands, max_len } => {
            let cap = cli.cap.unwrap_or(DEFAULT_CROSSING_CAP);
            let hits = enumerate_knots(*strands, *max_len, cap)?;
            let text = hits
                .iter()
                .map(|h| {
                    let word = if h.word.is_empty() { "(empty)" } else { &h.word };
                    format!(
                        "{word}: jones {}, v2 {}, v3 {}, crossings {}, bridge_upper_bound {}, occurrences {}",
                        h.fingerprint.jones,
                        h.fingerprint.v2,
                        h.fingerprint.v3,
                        h.crossings,
                        h.bridge_upper_bound,
                        h.occurrences
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::ok(text, to_value(&hits)))
        }
    }
}

fn lcs(action: &LcsCommand) -> Result<Outcome> {
    match action {
        LcsCommand::Sample {
            n,
            strands,
            seed,
            dmax,
        } => {
            let b = sample_gamma(*n, *strands, *seed)?;
            let jd = johnson_degree(&b, *dmax);
            let (text, v) = match n_triviality_certificate(&b, *n) {
                Ok(r) => (r.to_string(), to_value(&r)),
                Err(Error::UnsupportedOrder(_)) => (
                    format!("braid: {b}\nn: {n}"),
                    json!({ "braid": b.to_string(), "n": n }),
                ),
                Err(e) => return Err(e),
            };
            Ok(Outcome::ok(
                format!("{text}\njohnson_degree: {jd}"),
                merge(v, json!({ "johnson_degree": jd })),
            ))
        }
        LcsCommand::Certify { word, n } => {
            let b = parse_pure(&word.word, word.strands)?;
            let r = n_triviality_certificate(&b, *n)?;
            Ok(Outcome::ok(r.to_string(), to_value(&r)))
        }
        LcsCommand::Johnson { word, dmax } => {
            if *dmax == 0 {
                return Err(Error::InvalidArgument("dmax must be at least 1".into()));
            }
            let b = parse_pure(&word.word, word.strands)?;
            let jd = johnson_degree(&b, *dmax);
            Ok(Outcome::ok(
                format!("braid: {b}\njohnson_degree: {jd}"),
                json!({ "braid": b.to_string(), "johnson_degree": jd }),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(
            exit_code(&Error::Parse {
                pos: 0,
                msg: String::new()
            }),
            2
        );
        assert_eq!(exit_code(&Error::NotPure), 3);
        assert_eq!(
            exit_code(&Error::CrossingCap {
                crossings: 5,
                cap: 4
            }),
            4
        );
        assert_eq!(exit_code(&Error::WordTooLong { len: 5, cap: 4 }), 4);
    }

    #[test]
    fn strand_rounding() {
        assert_eq!(round_up_odd(2), 3);
        assert_eq!(round_up_odd(3), 3);
        assert_eq!(round_up_even(3), 4);
        assert_eq!(parse_pure("A(1,2)", None).unwrap().strands(), 3);
        assert_eq!(parse_pure("", None).unwrap().strands(), 1);
    }

    #[test]
    fn pair_lists() {
        assert_eq!(parse_pairs("1-2, 3-4").unwrap(), vec![(1, 2), (3, 4)]);
        assert!(matches!(
            parse_pairs("1-2,3"),
            Err(Error::Parse { pos: 4, .. })
        ));
    }
}
