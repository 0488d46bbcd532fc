use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One visit of the long knot to a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussEntry {
    pub crossing: usize,
    pub over: bool,
    pub sign: i8,
}

/// A crossing with its PD quadruple: edge labels counterclockwise starting
/// from the incoming under-edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingRecord {
    pub id: usize,
    pub sign: i8,
    pub pd: [usize; 4],
}

/// An oriented long-knot diagram, stored as its based signed Gauss code.
///
/// Crossings are numbered `0..n` in order of first visit. Edges are
/// numbered `0..=2n` along the knot: edge `p` enters the `p`-th visit, so
/// edges `0` and `2n` are the two open ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LongKnotDiagram {
    signs: Vec<i8>,
    passages: Vec<(usize, bool)>,
}

impl LongKnotDiagram {
    pub fn unknot() -> Self {
        LongKnotDiagram {
            signs: Vec::new(),
            passages: Vec::new(),
        }
    }

    /// Validates and canonically relabels a signed Gauss sequence. Crossing
    /// ids in the input are arbitrary.
    pub fn from_gauss(entries: &[GaussEntry]) -> Result<Self> {
        let mut seen: HashMap<usize, (usize, usize, i8)> = HashMap::new();
        for e in entries {
            if e.sign != 1 && e.sign != -1 {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {} has sign {}",
                    e.crossing, e.sign
                )));
            }
            let slot = seen.entry(e.crossing).or_insert((0, 0, e.sign));
            if slot.2 != e.sign {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {} visited with different signs",
                    e.crossing
                )));
            }
            if e.over {
                slot.0 += 1;
            } else {
                slot.1 += 1;
            }
        }
        for (id, (o, u, _)) in &seen {
            if (*o, *u) != (1, 1) {
                return Err(Error::InvalidDiagram(format!(
                    "crossing {id} must be visited once over and once under"
                )));
            }
        }
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut signs = Vec::new();
        let mut passages = Vec::with_capacity(entries.len());
        for e in entries {
            let next = relabel.len();
            let id = *relabel.entry(e.crossing).or_insert_with(|| {
                signs.push(e.sign);
                next
            });
            passages.push((id, e.over));
        }
        Ok(LongKnotDiagram { signs, passages })
    }

    /// Assumes `passages` and `signs` are consistent; relabels.
    pub(crate) fn from_parts(signs: &[i8], passages: &[(usize, bool)]) -> Self {
        let mut relabel = vec![usize::MAX; signs.len()];
        let mut new_signs = Vec::new();
        let mut out = Vec::with_capacity(passages.len());
        for &(c, over) in passages {
            if relabel[c] == usize::MAX {
                relabel[c] = new_signs.len();
                new_signs.push(signs[c]);
            }
            out.push((relabel[c], over));
        }
        LongKnotDiagram {
            signs: new_signs,
            passages: out,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, crossing: usize) -> i8 {
        self.signs[crossing]
    }

    /// `(crossing, is_over)` for each visit, from the start end to the
    /// finish end.
    pub fn passages(&self) -> &[(usize, bool)] {
        &self.passages
    }

    pub fn gauss(&self) -> Vec<GaussEntry> {
        self.passages
            .iter()
            .map(|&(c, over)| GaussEntry {
                crossing: c,
                over,
                sign: self.signs[c],
            })
            .collect()
    }

    pub fn arc_count(&self) -> usize {
        self.passages.len() + 1
    }

    /// Visit indices `(over, under)` of every crossing.
    pub fn visit_positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.signs.len()];
        for (p, &(c, over)) in self.passages.iter().enumerate() {
            if over {
                pos[c].0 = p;
            } else {
                pos[c].1 = p;
            }
        }
        pos
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub fn crossings(&self) -> Vec<CrossingRecord> {
        self.visit_positions()
            .into_iter()
            .enumerate()
            .map(|(id, (po, pu))| {
                let sign = self.signs[id];
                // positive: the over strand runs from the fourth slot to the second
                let pd = if sign > 0 {
                    [pu, po + 1, pu + 1, po]
                } else {
                    [pu, po, pu + 1, po + 1]
                };
                CrossingRecord { id, sign, pd }
            })
            .collect()
    }

    /// Rebuilds a diagram from PD quadruples whose edge labels run
    /// `0..=2n` along the long knot.
    pub fn from_pd(records: &[[usize; 4]]) -> Result<Self> {
        let n = records.len();
        let mut passages: Vec<Option<(usize, bool)>> = vec![None; 2 * n];
        let mut signs = Vec::with_capacity(n);
        let bad = |msg: String| Error::InvalidDiagram(msg);
        for (id, &[a, b, c, d]) in records.iter().enumerate() {
            if c != a + 1 {
                return Err(bad(format!(
                    "X({a},{b},{c},{d}): under strand must run a -> a+1"
                )));
            }
            let (sign, over_in) = if b == d + 1 {
                (1i8, d)
            } else if d == b + 1 {
                (-1i8, b)
            } else {
                return Err(bad(format!(
                    "X({a},{b},{c},{d}): over edges are not consecutive"
                )));
            };
            for (p, over) in [(a, false), (over_in, true)] {
                match passages.get_mut(p) {
                    Some(slot @ None) => *slot = Some((id, over)),
                    _ => {
                        return Err(bad(format!(
                            "edge {p} enters more than one crossing or is out of range"
                        )))
                    }
                }
            }
            signs.push(sign);
        }
        let passages: Vec<(usize, bool)> = passages
            .into_iter()
            .map(|p| p.ok_or_else(|| bad("edge labels are not contiguous".into())))
            .collect::<Result<_>>()?;
        Ok(LongKnotDiagram::from_parts(&signs, &passages))
    }

    /// Concatenation of long knots: the finish of `self` is glued to the
    /// start of `other`.
    pub fn connect_sum(&self, other: &LongKnotDiagram) -> LongKnotDiagram {
        let offset = self.signs.len();
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        let mut passages = self.passages.clone();
        passages.extend(other.passages.iter().map(|&(c, o)| (c + offset, o)));
        LongKnotDiagram::from_parts(&signs, &passages)
    }

    /// Mirror image: every crossing switches, so over/under and the sign
    /// both flip.
    pub fn mirror(&self) -> LongKnotDiagram {
        LongKnotDiagram {
            signs: self.signs.iter().map(|s| -s).collect(),
            passages: self.passages.iter().map(|&(c, o)| (c, !o)).collect(),
        }
    }

    /// The same knot traversed from the other end. Crossing signs are
    /// unchanged since both strands reverse.
    pub fn reverse(&self) -> LongKnotDiagram {
        let rev: Vec<(usize, bool)> = self.passages.iter().rev().copied().collect();
        LongKnotDiagram::from_parts(&self.signs, &rev)
    }
}
