//! Kauffman bracket by tangle contraction.
//!
//! The bracket only depends on how smoothing each crossing reconnects the
//! four edges around it, so it is computed straight from the Gauss code.
//! Crossings are absorbed one at a time into a growing tangle. A partial
//! state is the way the processed tangle pairs up its boundary edges; all
//! smoothings with the same pairing are summed into one polynomial, which
//! keeps the work proportional to the number of pairings on the frontier
//! rather than `2^n`.
//!
//! At a positive crossing the A-smoothing is the oriented one (over-in to
//! under-out, under-in to over-out); at a negative crossing it is the
//! other one.

use std::collections::HashMap;

use super::laurent::{LaurentPoly, Variable};
use crate::closure::LongKnotDiagram;
use crate::error::{Error, Result};

pub const DEFAULT_CROSSING_CAP: usize = 40;

/// Edges incident to one crossing, as slots
/// `[over_in, over_out, under_in, under_out]`.
#[derive(Debug, Clone, Copy)]
struct Incidence {
    edges: [usize; 4],
}

/// Smoothing pairs of slots for the A and B states.
fn smoothing_pairs(sign: i8) -> [[(usize, usize); 2]; 2] {
    let oriented = [(0, 3), (2, 1)];
    let unoriented = [(0, 2), (1, 3)];
    if sign > 0 {
        [oriented, unoriented]
    } else {
        [unoriented, oriented]
    }
}

fn incidences(d: &LongKnotDiagram) -> Vec<Incidence> {
    d.visit_positions()
        .into_iter()
        .map(|(po, pu)| Incidence {
            edges: [po, po + 1, pu, pu + 1],
        })
        .collect()
}

/// Slot ends: slots 0 and 2 hold the head of their edge, 1 and 3 the tail.
fn slot_is_head(slot: usize) -> bool {
    slot.is_multiple_of(2)
}

struct Layout {
    /// Crossing at each visit index.
    at_visit: Vec<usize>,
    edges: usize,
}

impl Layout {
    /// Crossing at the far end of `edge`, seen from an end of the given kind.
    fn far_crossing(&self, edge: usize, from_head: bool) -> Option<usize> {
        if from_head {
            // the tail of edge e sits at visit e - 1
            edge.checked_sub(1).map(|v| self.at_visit[v])
        } else if edge + 1 < self.edges {
            Some(self.at_visit[edge])
        } else {
            None
        }
    }
}

/// Chooses the next crossing greedily so the frontier (edges with exactly
/// one processed end) stays small.
fn processing_order(inc: &[Incidence], edges: usize) -> Vec<usize> {
    let n = inc.len();
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut touched = vec![0u8; edges];
    for _ in 0..n {
        let mut best: Option<(i64, usize)> = None;
        for x in (0..n).filter(|&x| !done[x]) {
            let mut delta = 0i64;
            let es = inc[x].edges;
            for (s, &e) in es.iter().enumerate() {
                if es[..s].contains(&e) {
                    continue;
                }
                let k = es.iter().filter(|&&f| f == e).count() as u8;
                delta += ((touched[e] + k == 1) as i64) - ((touched[e] == 1) as i64);
            }
            if best.is_none_or(|(b, _)| delta < b) {
                best = Some((delta, x));
            }
        }
        let (_, x) = best.expect("unprocessed crossing exists");
        done[x] = true;
        for &e in &inc[x].edges {
            touched[e] += 1;
        }
        order.push(x);
    }
    order
}

/// External connection of a slot while absorbing a crossing.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Link {
    Slot(usize),
    Terminal(u32),
}

type State = Vec<(u32, u32)>;

fn normalize(mut pairs: Vec<(u32, u32)>) -> State {
    for p in pairs.iter_mut() {
        if p.0 > p.1 {
            *p = (p.1, p.0);
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Kauffman bracket normalized so the long unknot has value 1, with loop
/// value `-A^2 - A^-2`.
pub fn kauffman_bracket(d: &LongKnotDiagram, crossing_cap: usize) -> Result<LaurentPoly> {
    let n = d.crossing_count();
    if n > crossing_cap {
        return Err(Error::CrossingCap {
            crossings: n,
            cap: crossing_cap,
        });
    }
    let delta = LaurentPoly::from_terms(Variable::A, &[(2, -1), (-2, -1)]);
    let mut delta_pows = vec![LaurentPoly::one(Variable::A)];
    let inc = incidences(d);
    let layout = Layout {
        at_visit: d.passages().iter().map(|&(c, _)| c).collect(),
        edges: 2 * n + 1,
    };
    let order = processing_order(&inc, layout.edges);

    let mut processed = vec![false; n];
    let mut states: HashMap<State, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one(Variable::A));

    for &x in &order {
        let edges = inc[x].edges;
        let pairs = smoothing_pairs(d.sign(x));
        let mut next: HashMap<State, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (state, poly) in &states {
            let mate: HashMap<u32, u32> =
                state.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
            // external link of each slot
            let mut ext = [Link::Terminal(0); 4];
            let mut consumed: Vec<u32> = Vec::new();
            for s in 0..4 {
                let e = edges[s];
                let head = slot_is_head(s);
                match layout.far_crossing(e, head) {
                    Some(y) if y == x => {
                        let other = (0..4)
                            .find(|&t| t != s && edges[t] == e && slot_is_head(t) != head)
                            .expect("loop edge has both ends here");
                        ext[s] = Link::Slot(other);
                    }
                    Some(y) if processed[y] => {
                        let f = mate[&(e as u32)];
                        consumed.push(e as u32);
                        // does the path come back to this crossing?
                        let back = (0..4).find(|&t| {
                            edges[t] as u32 == f
                                && layout
                                    .far_crossing(edges[t], slot_is_head(t))
                                    .is_some_and(|z| z != x && processed[z])
                        });
                        ext[s] = match back {
                            Some(t) => Link::Slot(t),
                            None => Link::Terminal(f),
                        };
                    }
                    _ => ext[s] = Link::Terminal(e as u32),
                }
            }
            let base: Vec<(u32, u32)> = state
                .iter()
                .filter(|(a, b)| !consumed.contains(a) && !consumed.contains(b))
                .copied()
                .collect();
            for (smoothing, a_exp) in [(pairs[0], 1), (pairs[1], -1)] {
                let mut partner = [0usize; 4];
                for &(p, q) in &smoothing {
                    partner[p] = q;
                    partner[q] = p;
                }
                let mut seen = [false; 4];
                let mut new_pairs = base.clone();
                for s in 0..4 {
                    if seen[s] {
                        continue;
                    }
                    if let Link::Terminal(t0) = ext[s] {
                        let mut cur = s;
                        loop {
                            seen[cur] = true;
                            let nxt = partner[cur];
                            seen[nxt] = true;
                            match ext[nxt] {
                                Link::Terminal(t1) => {
                                    new_pairs.push((t0, t1));
                                    break;
                                }
                                Link::Slot(t) => cur = t,
                            }
                        }
                    }
                }
                let mut loops = 0;
                for s in 0..4 {
                    if seen[s] {
                        continue;
                    }
                    loops += 1;
                    let mut cur = s;
                    while !seen[cur] {
                        seen[cur] = true;
                        let nxt = partner[cur];
                        seen[nxt] = true;
                        match ext[nxt] {
                            Link::Slot(t) => cur = t,
                            Link::Terminal(_) => unreachable!("terminals are walked first"),
                        }
                    }
                }
                while delta_pows.len() <= loops {
                    let last = delta_pows.last().expect("nonempty").mul(&delta)?;
                    delta_pows.push(last);
                }
                let term = poly.mul(&delta_pows[loops])?.mul_monomial(1, a_exp)?;
                next.entry(normalize(new_pairs))
                    .or_insert_with(|| LaurentPoly::zero(Variable::A))
                    .add_assign(&term)?;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
        processed[x] = true;
    }

    let mut total = LaurentPoly::zero(Variable::A);
    for (state, poly) in states {
        debug_assert!(n == 0 || state == vec![(0, 2 * n as u32)]);
        total.add_assign(&poly)?;
    }
    Ok(total)
}
