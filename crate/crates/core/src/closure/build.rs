//! Closing braid boxes into long knots.
//!
//! The braid is drawn top to bottom. Strand ends at the top and bottom are
//! joined by nested arcs outside the box, which add no crossings, so every
//! letter of the word becomes exactly one crossing of the diagram.
//!
//! Crossing signs follow the right-hand rule on the tangent directions:
//! the crossing is positive when `over × under` points out of the page.
//! For a letter `σ_k^e` whose left and right strands are traversed with
//! directions `d_L, d_R` (+1 downward, -1 upward) that works out to
//! `-e · d_L · d_R`.

use serde::{Deserialize, Serialize};

use super::diagram::LongKnotDiagram;
use crate::braid::{PureBraid, SigmaWord};
use crate::error::{Error, Result};

/// A perfect matching of strand ends at the top and at the bottom of a
/// braid box, positions numbered `1..=2n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlatPairing {
    top: Vec<(usize, usize)>,
    bottom: Vec<(usize, usize)>,
}

fn partner_table(pairs: &[(usize, usize)], n: usize, what: &str) -> Result<Vec<Option<usize>>> {
    let mut partner = vec![None; n + 1];
    for &(a, b) in pairs {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPairing(format!(
                "{what} pair ({a},{b}) invalid for {n} ends"
            )));
        }
        if partner[a].is_some() || partner[b].is_some() {
            return Err(Error::InvalidPairing(format!(
                "{what} end used twice in ({a},{b})"
            )));
        }
        partner[a] = Some(b);
        partner[b] = Some(a);
    }
    if partner[1..].iter().any(Option::is_none) {
        return Err(Error::InvalidPairing(format!(
            "{what} pairing does not cover every end"
        )));
    }
    Ok(partner)
}

impl PlatPairing {
    pub fn new(ends: usize, top: Vec<(usize, usize)>, bottom: Vec<(usize, usize)>) -> Result<Self> {
        if !ends.is_multiple_of(2) {
            return Err(Error::InvalidPairing(format!(
                "{ends} ends cannot be paired"
            )));
        }
        partner_table(&top, ends, "top")?;
        partner_table(&bottom, ends, "bottom")?;
        Ok(PlatPairing { top, bottom })
    }

    /// Caps `(1,2), (3,4), …` at both ends.
    pub fn standard(ends: usize) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = (1..ends).step_by(2).map(|a| (a, a + 1)).collect();
        PlatPairing::new(ends, pairs.clone(), pairs)
    }

    pub fn top(&self) -> &[(usize, usize)] {
        &self.top
    }

    pub fn bottom(&self) -> &[(usize, usize)] {
        &self.bottom
    }
}

/// How the ends of a braid box are joined. `None` marks an open end of the
/// long knot.
struct Ends {
    top: Vec<Option<usize>>,
    bottom: Vec<Option<usize>>,
}

struct Box_ {
    /// Per letter: (left strand, right strand, letter sign). Strands are
    /// named by their top position, 1-based.
    rows: Vec<(usize, usize, i8)>,
    /// Rows each strand takes part in, in top-to-bottom order.
    strand_rows: Vec<Vec<usize>>,
    /// Bottom position of each strand, and the inverse.
    bottom_of: Vec<usize>,
    strand_at_bottom: Vec<usize>,
}

impl Box_ {
    fn new(word: &SigmaWord) -> Self {
        let n = word.strands();
        let mut at: Vec<usize> = (0..=n).collect();
        let mut rows = Vec::with_capacity(word.len());
        let mut strand_rows = vec![Vec::new(); n + 1];
        for (r, l) in word.letters().iter().enumerate() {
            let (left, right) = (at[l.pos], at[l.pos + 1]);
            rows.push((left, right, l.sign));
            strand_rows[left].push(r);
            strand_rows[right].push(r);
            at.swap(l.pos, l.pos + 1);
        }
        let mut bottom_of = vec![0; n + 1];
        for (pos, &s) in at.iter().enumerate().skip(1) {
            bottom_of[s] = pos;
        }
        Box_ {
            rows,
            strand_rows,
            bottom_of,
            strand_at_bottom: at,
        }
    }
}

/// Counts closed components of a box with the given end joins, treating
/// open ends as joined to each other.
fn component_count(bx: &Box_, ends: &Ends) -> usize {
    let n = bx.bottom_of.len() - 1;
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut union = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    };
    let mut open = Vec::new();
    for pos in 1..=n {
        match ends.top[pos] {
            Some(q) => union(pos, q),
            None => open.push(pos),
        }
        match ends.bottom[pos] {
            Some(q) => union(bx.strand_at_bottom[pos], bx.strand_at_bottom[q]),
            None => open.push(bx.strand_at_bottom[pos]),
        }
    }
    if open.len() == 2 {
        union(open[0], open[1]);
    }
    (1..=n).filter(|&s| find(&mut parent, s) == s).count()
}

/// Traces the single component starting downward from the top of
/// `start`, until an open end is reached or the curve closes up.
fn trace(word: &SigmaWord, ends: &Ends, start: usize) -> Result<LongKnotDiagram> {
    let bx = Box_::new(word);
    let n = word.strands();
    let components = component_count(&bx, ends);
    if components != 1 {
        return Err(Error::MultiComponent(components));
    }
    let mut direction = vec![0i8; n + 1];
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(2 * bx.rows.len());
    let mut strand = start;
    let mut down = true;
    loop {
        if direction[strand] != 0 {
            break;
        }
        direction[strand] = if down { 1 } else { -1 };
        let rows = &bx.strand_rows[strand];
        if down {
            order.extend(rows.iter().map(|&r| (r, strand)));
            let next = ends.bottom[bx.bottom_of[strand]];
            match next {
                Some(q) => {
                    strand = bx.strand_at_bottom[q];
                    down = false;
                }
                None => break,
            }
        } else {
            order.extend(rows.iter().rev().map(|&r| (r, strand)));
            match ends.top[strand] {
                Some(q) if q == start => break,
                Some(q) => {
                    strand = q;
                    down = true;
                }
                None => break,
            }
        }
    }
    debug_assert!(direction[1..].iter().all(|&d| d != 0));
    let signs: Vec<i8> = bx
        .rows
        .iter()
        .map(|&(l, r, e)| -e * direction[l] * direction[r])
        .collect();
    let passages: Vec<(usize, bool)> = order
        .into_iter()
        .map(|(row, s)| {
            let (l, _, e) = bx.rows[row];
            let over = if e > 0 { s == l } else { s != l };
            (row, over)
        })
        .collect();
    Ok(LongKnotDiagram::from_parts(&signs, &passages))
}

/// The short-circuit closure of a pure braid on `2n + 1` strands: bottoms
/// of `(1,2), (3,4), …` joined, tops of `(2,3), (4,5), …` joined, the knot
/// entering at the top of strand 1 and leaving at the bottom of `2n + 1`.
pub fn short_circuit_close(b: &PureBraid) -> Result<LongKnotDiagram> {
    let n = b.strands();
    if n.is_multiple_of(2) {
        return Err(Error::EvenStrands(n));
    }
    if !b.word().is_pure() {
        return Err(Error::NotPure);
    }
    let mut top = vec![None; n + 1];
    let mut bottom = vec![None; n + 1];
    for a in (1..n).step_by(2) {
        bottom[a] = Some(a + 1);
        bottom[a + 1] = Some(a);
        top[a + 1] = Some(a + 2);
        top[a + 2] = Some(a + 1);
    }
    trace(b.word(), &Ends { top, bottom }, 1)
}

/// Plat closure of an arbitrary braid word, cut open on the cap through
/// top position 1 and oriented downward from that position.
pub fn plat_close(word: &SigmaWord, pairing: &PlatPairing) -> Result<LongKnotDiagram> {
    let n = word.strands();
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidPairing(format!(
            "plat closure needs an even strand count, got {n}"
        )));
    }
    let top = partner_table(&pairing.top, n, "top")?;
    let bottom = partner_table(&pairing.bottom, n, "bottom")?;
    trace(word, &Ends { top, bottom }, 1)
}

/// `σ_1 σ_2 … σ_{2n-1}` on `2n` strands: the strand at position 1 is
/// carried over all the others to position `2n`. Capping its top with the
/// standard pairing joins tops `(2,3), (4,5), …` and the two outermost
/// ends, which is how a short-circuit closure looks from above.
pub fn t_braid(n: usize) -> Result<SigmaWord> {
    if n < 1 {
        return Err(Error::InvalidArgument("t_braid needs n >= 1".into()));
    }
    let letters: Vec<i32> = (1..2 * n as i32).collect();
    SigmaWord::from_signed(2 * n, &letters)
}

/// `t_{n+1} · i(x)` for `x` on `2n + 1` strands, ready for a standard plat
/// closure.
pub fn plat_word_for(x: &PureBraid) -> Result<SigmaWord> {
    let n = x.strands();
    if n.is_multiple_of(2) {
        return Err(Error::EvenStrands(n));
    }
    let t = t_braid(n.div_ceil(2))?;
    t.concat(&x.word().include(n + 1)?)
}

/// Largest bridge number the short-circuit closure can have, from the
/// smallest odd strand count `2n + 1` that carries every letter: `n + 1`.
pub fn bridge_upper_bound(b: &PureBraid) -> usize {
    let used = b.word().max_position();
    let strands = if used == 0 { 1 } else { used + 1 };
    let odd = if strands % 2 == 0 {
        strands + 1
    } else {
        strands
    };
    (odd - 1) / 2 + 1
}
