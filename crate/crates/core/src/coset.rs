//! The two-sided actions whose orbits are the fibres of the short-circuit
//! closure.
//!
//! `H^T` acts on the top (left) of a braid and is generated by `A_{i,i+1}`
//! and the cabled generators `φ_i(A_{i,j})` for even `i`; `H^B` acts on
//! the bottom (right) with `i` odd. Strand pair `(i, i+1)` is joined at the
//! top for even `i` and at the bottom for odd `i`, so each generator can
//! be slid off through the corresponding cap.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::{AGenerator, PureBraid, SigmaWord};
use crate::closure::short_circuit_close;
use crate::error::{Error, Result};
use crate::invariants::{fingerprint, Fingerprint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    T,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    /// `A_{i,i+1}`.
    Adjacent,
    /// `φ_i(A_{i,j})`: `A_{i,j}` on one strand fewer with strand `i` doubled.
    Doubled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetGenerator {
    pub side: Side,
    pub kind: GeneratorKind,
    pub i: usize,
    /// Partner strand; `i + 1` for the adjacent kind.
    pub j: usize,
    pub braid: PureBraid,
}

impl CosetGenerator {
    pub fn name(&self) -> String {
        match self.kind {
            GeneratorKind::Adjacent => format!("A({},{})", self.i, self.j),
            GeneratorKind::Doubled => format!("phi{}(A({},{}))", self.i, self.i, self.j),
        }
    }
}

impl fmt::Display for CosetGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}:{}", self.side, self.name())
    }
}

fn generators(strands: usize, side: Side) -> Result<Vec<CosetGenerator>> {
    if strands.is_multiple_of(2) {
        return Err(Error::EvenStrands(strands));
    }
    if strands < 3 {
        return Err(Error::InvalidArgument(format!(
            "need at least 3 strands, got {strands}"
        )));
    }
    let first = match side {
        Side::T => 2,
        Side::B => 1,
    };
    let mut out = Vec::new();
    for i in (first..strands).step_by(2) {
        let braid = AGenerator::new(i, i + 1, 1)?.to_braid(strands)?;
        out.push(CosetGenerator {
            side,
            kind: GeneratorKind::Adjacent,
            i,
            j: i + 1,
            braid,
        });
    }
    for i in (first..strands).step_by(2) {
        for j in (1..strands).filter(|&j| j != i) {
            let base = AGenerator::new(i, j, 1)?.to_braid(strands - 1)?;
            let braid = base.double_strand(i)?;
            out.push(CosetGenerator {
                side,
                kind: GeneratorKind::Doubled,
                i,
                j,
                braid,
            });
        }
    }
    Ok(out)
}

/// Generators of `H^T` that fit on `strands` strands (odd, at least 3).
pub fn ht_generators(strands: usize) -> Result<Vec<CosetGenerator>> {
    generators(strands, Side::T)
}

/// Generators of `H^B` that fit on `strands` strands (odd, at least 3).
pub fn hb_generators(strands: usize) -> Result<Vec<CosetGenerator>> {
    generators(strands, Side::B)
}

/// `g^e · b` for a top generator, `b · g^e` for a bottom one, after
/// including both into the larger strand count. The result is freely
/// reduced.
pub fn apply_action(b: &PureBraid, g: &CosetGenerator, exponent: i32) -> Result<PureBraid> {
    if exponent != 1 && exponent != -1 {
        return Err(Error::InvalidArgument(format!(
            "exponent must be ±1, got {exponent}"
        )));
    }
    for s in [b.strands(), g.braid.strands()] {
        if s % 2 == 0 {
            return Err(Error::EvenStrands(s));
        }
    }
    let ge = g.braid.pow(exponent)?;
    let out = match g.side {
        Side::T => ge.mul(b)?,
        Side::B => b.mul(&ge)?,
    };
    Ok(out.free_reduce())
}

/// One action in a walk or a search path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitMove {
    pub side: Side,
    pub generator: String,
    pub exponent: i32,
}

fn all_generators(strands: usize) -> Result<Vec<CosetGenerator>> {
    let mut gens = ht_generators(strands)?;
    gens.extend(hb_generators(strands)?);
    Ok(gens)
}

/// A walk of `steps` uniformly random actions (generator of either side,
/// exponent ±1) on the strand count of `b`, together with the moves taken.
pub fn random_orbit_walk_with_moves(
    b: &PureBraid,
    steps: usize,
    seed: u64,
) -> Result<(Vec<PureBraid>, Vec<OrbitMove>)> {
    let gens = all_generators(b.strands())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut walk = vec![b.clone()];
    let mut moves = Vec::with_capacity(steps);
    for _ in 0..steps {
        let g = &gens[rng.gen_range(0..gens.len())];
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        let next = apply_action(walk.last().expect("nonempty"), g, e)?;
        moves.push(OrbitMove {
            side: g.side,
            generator: g.name(),
            exponent: e,
        });
        walk.push(next);
    }
    Ok((walk, moves))
}

/// Elements of the orbit of `b` visited by a seeded random walk, starting
/// with `b` itself.
pub fn random_orbit_walk(b: &PureBraid, steps: usize, seed: u64) -> Result<Vec<PureBraid>> {
    Ok(random_orbit_walk_with_moves(b, steps, seed)?.0)
}

/// One line of an orbit log; step 0 is the starting braid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub step: usize,
    pub side: Option<Side>,
    pub generator: Option<String>,
    pub exponent: Option<i32>,
    pub word_length: usize,
    pub fingerprint: Fingerprint,
}

impl fmt::Display for OrbitRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let action = match (&self.side, &self.generator, self.exponent) {
            (Some(s), Some(g), Some(e)) => format!("{s:?} {g}^{e}"),
            _ => "start".to_string(),
        };
        write!(
            f,
            "step {}: {action}, length {}, jones {}, v2 {}, v3 {}",
            self.step,
            self.word_length,
            self.fingerprint.jones,
            self.fingerprint.v2,
            self.fingerprint.v3
        )
    }
}

/// Fingerprints of every element of a walk.
pub fn orbit_log(
    walk: &[PureBraid],
    moves: &[OrbitMove],
    crossing_cap: usize,
) -> Result<Vec<OrbitRecord>> {
    walk.iter()
        .enumerate()
        .map(|(step, b)| {
            let mv = step.checked_sub(1).map(|k| &moves[k]);
            Ok(OrbitRecord {
                step,
                side: mv.map(|m| m.side),
                generator: mv.map(|m| m.generator.clone()),
                exponent: mv.map(|m| m.exponent),
                word_length: b.len(),
                fingerprint: fingerprint(&short_circuit_close(b)?, crossing_cap)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchOutcome {
    /// Applying `from_a` to `a` and `from_b` to `b` gives the same freely
    /// reduced word, so the two braids lie in one double coset.
    Found {
        meeting: String,
        from_a: Vec<OrbitMove>,
        from_b: Vec<OrbitMove>,
    },
    /// No common word within the depth and node budget. Says nothing about
    /// whether the braids share a double coset.
    NotFoundWithinBudget { explored: usize },
}

type Parents = HashMap<SigmaWord, Option<(SigmaWord, OrbitMove)>>;

fn path_to(parents: &Parents, mut w: SigmaWord) -> Vec<OrbitMove> {
    let mut path = Vec::new();
    while let Some(Some((prev, mv))) = parents.get(&w) {
        path.push(mv.clone());
        w = prev.clone();
    }
    path.reverse();
    path
}

/// Breadth-first search from both ends at once, alternating sides, for a
/// freely reduced word reachable from `a` and from `b` by generator
/// actions. Words are compared literally, so a miss is never evidence that
/// the braids are in different double cosets.
pub fn orbit_search(
    a: &PureBraid,
    b: &PureBraid,
    max_depth: usize,
    node_budget: usize,
) -> Result<SearchOutcome> {
    let strands = a.strands().max(b.strands());
    let gens = all_generators(strands)?;
    let start = [
        a.include(strands)?.free_reduce(),
        b.include(strands)?.free_reduce(),
    ];
    let mut parents: [Parents; 2] = [HashMap::new(), HashMap::new()];
    let mut frontier: [VecDeque<PureBraid>; 2] = [VecDeque::new(), VecDeque::new()];
    for k in 0..2 {
        parents[k].insert(start[k].word().clone(), None);
        frontier[k].push_back(start[k].clone());
    }
    let found = |w: &SigmaWord, parents: &[Parents; 2]| {
        Ok::<_, Error>(SearchOutcome::Found {
            meeting: w.to_string(),
            from_a: path_to(&parents[0], w.clone()),
            from_b: path_to(&parents[1], w.clone()),
        })
    };
    if start[0] == start[1] {
        return found(start[0].word(), &parents);
    }
    for depth in 0..2 * max_depth {
        let k = depth % 2;
        let layer: Vec<PureBraid> = frontier[k].drain(..).collect();
        for x in layer {
            for g in &gens {
                for e in [1, -1] {
                    let y = apply_action(&x, g, e)?;
                    let key = y.word().clone();
                    if parents[k].contains_key(&key) {
                        continue;
                    }
                    let mv = OrbitMove {
                        side: g.side,
                        generator: g.name(),
                        exponent: e,
                    };
                    parents[k].insert(key.clone(), Some((x.word().clone(), mv)));
                    if parents[1 - k].contains_key(&key) {
                        return found(&key, &parents);
                    }
                    if parents[0].len() + parents[1].len() >= node_budget {
                        return Ok(SearchOutcome::NotFoundWithinBudget {
                            explored: parents[0].len() + parents[1].len(),
                        });
                    }
                    frontier[k].push_back(y);
                }
            }
        }
    }
    Ok(SearchOutcome::NotFoundWithinBudget {
        explored: parents[0].len() + parents[1].len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::random_pure_braid;
    use crate::closure::bridge_upper_bound;

    fn fp(b: &PureBraid) -> Fingerprint {
        fingerprint(&short_circuit_close(b).unwrap(), 60).unwrap()
    }

    #[test]
    fn generator_counts() {
        assert_eq!(ht_generators(3).unwrap().len(), 2);
        assert_eq!(hb_generators(3).unwrap().len(), 2);
        assert_eq!(ht_generators(5).unwrap().len(), 8);
        assert_eq!(hb_generators(5).unwrap().len(), 8);
        assert_eq!(ht_generators(7).unwrap().len(), 3 + 3 * 5);
        assert!(ht_generators(4).is_err());
        assert!(hb_generators(1).is_err());
    }

    #[test]
    fn generator_parity_and_purity() {
        for s in [3, 5, 7] {
            for g in ht_generators(s).unwrap() {
                assert_eq!(g.i % 2, 0);
                assert_eq!(g.side, Side::T);
                assert!(g.braid.word().is_pure());
                assert_eq!(g.braid.strands(), s);
            }
            for g in hb_generators(s).unwrap() {
                assert_eq!(g.i % 2, 1);
                assert!(g.braid.word().is_pure());
            }
        }
        let names: Vec<String> = hb_generators(3).unwrap().iter().map(|g| g.name()).collect();
        assert_eq!(names, ["A(1,2)", "phi1(A(1,2))"]);
    }

    #[test]
    fn lists_extend_under_stabilization() {
        for side in [Side::T, Side::B] {
            let small = generators(5, side).unwrap();
            let large = generators(7, side).unwrap();
            for g in &small {
                let lifted = g.braid.include(7).unwrap();
                let same = large
                    .iter()
                    .find(|h| h.kind == g.kind && h.i == g.i && h.j == g.j);
                assert_eq!(same.map(|h| &h.braid), Some(&lifted), "{g}");
            }
        }
    }

    #[test]
    fn top_actions_on_trivial_braid_give_unknot() {
        for g in ht_generators(5).unwrap() {
            for e in [1, -1] {
                let r = apply_action(&PureBraid::identity(5), &g, e).unwrap();
                assert!(fp(&r).is_unknot(), "{g}^{e}");
            }
        }
    }

    #[test]
    fn action_then_inverse_cancels() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let b = random_pure_braid(5, 12, &mut rng).free_reduce();
        for g in ht_generators(5)
            .unwrap()
            .iter()
            .chain(&hb_generators(5).unwrap())
        {
            let there = apply_action(&b, g, 1).unwrap();
            let back = apply_action(&there, g, -1).unwrap();
            assert_eq!(back, b);
        }
    }

    #[test]
    fn actions_preserve_fingerprints() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let b = random_pure_braid(5, 10, &mut rng);
            let before = fp(&b);
            for g in all_generators(5).unwrap() {
                let after =
                    fp(&apply_action(&b, &g, if rng.gen_bool(0.5) { 1 } else { -1 }).unwrap());
                assert_eq!(after, before, "{b} under {g}");
            }
        }
    }

    #[test]
    fn walks() {
        let b = AGenerator::new(1, 3, 1).unwrap().to_braid(3).unwrap();
        assert_eq!(random_orbit_walk(&b, 0, 1).unwrap(), vec![b.clone()]);
        let (walk, moves) = random_orbit_walk_with_moves(&b, 10, 4).unwrap();
        assert_eq!(walk.len(), 11);
        let log = orbit_log(&walk, &moves, 60).unwrap();
        assert!(log.iter().all(|r| r.fingerprint == log[0].fingerprint));
        assert_eq!(log[0].fingerprint.v2, 1);
        assert!(log[0].to_string().starts_with("step 0: start"));
        assert!(walk.iter().all(|w| bridge_upper_bound(w) <= 2));
    }

    #[test]
    fn search_finds_a_short_path() {
        let b = AGenerator::new(1, 3, 1).unwrap().to_braid(3).unwrap();
        let g = &ht_generators(3).unwrap()[1];
        let h = &hb_generators(3).unwrap()[0];
        let target = apply_action(&apply_action(&b, g, 1).unwrap(), h, -1).unwrap();
        match orbit_search(&b, &target, 2, 10_000).unwrap() {
            SearchOutcome::Found { from_a, from_b, .. } => {
                assert!(from_a.len() + from_b.len() <= 2)
            }
            other => panic!("expected a path, got {other:?}"),
        }
    }

    #[test]
    fn search_reports_budget() {
        let b = AGenerator::new(1, 3, 1).unwrap().to_braid(3).unwrap();
        let out = orbit_search(&PureBraid::identity(3), &b, 3, 50).unwrap();
        assert!(matches!(out, SearchOutcome::NotFoundWithinBudget { .. }));
    }
}
