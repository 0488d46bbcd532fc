//! Vassiliev invariants from based Gauss-diagram formulas.
//!
//! A based arrow diagram is written as the sequence of its arrow ends
//! along the long knot: an uppercase letter is the over-visit of a
//! crossing, the lowercase letter the under-visit of the same crossing,
//! and letters are assigned in order of first appearance. The pairing
//! `⟨D, G⟩` sums, over all sets of crossings of `G` whose visits form the
//! pattern `D`, the product of their signs.

use std::collections::HashMap;

use crate::closure::LongKnotDiagram;

/// Canonical pattern string for a set of crossings.
fn pattern_of(visits: &[(usize, usize)], crossings: &[usize]) -> String {
    let mut ends: Vec<(usize, usize, bool)> = Vec::with_capacity(2 * crossings.len());
    for (k, &c) in crossings.iter().enumerate() {
        let (po, pu) = visits[c];
        ends.push((po, k, true));
        ends.push((pu, k, false));
    }
    ends.sort_unstable();
    let mut letter = [u8::MAX; 8];
    let mut next = 0u8;
    let mut out = String::with_capacity(ends.len());
    for (_, k, over) in ends {
        if letter[k] == u8::MAX {
            letter[k] = next;
            next += 1;
        }
        let base = if over { b'A' } else { b'a' };
        out.push((base + letter[k]) as char);
    }
    out
}

/// Signed counts of every based arrow pattern with up to `max_arrows`
/// arrows (at most 3) occurring in `d`.
pub fn arrow_pattern_counts(d: &LongKnotDiagram, max_arrows: usize) -> HashMap<String, i64> {
    assert!(
        max_arrows <= 3,
        "patterns are enumerated for at most 3 arrows"
    );
    let visits = d.visit_positions();
    let signs = d.signs();
    let n = signs.len();
    let mut counts: HashMap<String, i64> = HashMap::new();
    let mut add = |set: &[usize]| {
        let w: i64 = set.iter().map(|&c| signs[c] as i64).product();
        *counts.entry(pattern_of(&visits, set)).or_insert(0) += w;
    };
    for a in 0..n {
        if max_arrows >= 1 {
            add(&[a]);
        }
        for b in a + 1..n {
            if max_arrows >= 2 {
                add(&[a, b]);
            }
            if max_arrows >= 3 {
                for c in b + 1..n {
                    add(&[a, b, c]);
                }
            }
        }
    }
    counts.retain(|_, v| *v != 0);
    counts
}

/// Degree-2 invariant `⟨AbaB, G⟩`: pairs of crossings met as over-visit of
/// the first, under-visit of the second, under-visit of the first, then
/// over-visit of the second. Equals the second Conway coefficient.
pub fn casson_v2(d: &LongKnotDiagram) -> i64 {
    let visits = d.visit_positions();
    let signs = d.signs();
    let mut total = 0;
    for (a, &(oa, ua)) in visits.iter().enumerate() {
        for (b, &(ob, ub)) in visits.iter().enumerate() {
            if oa < ub && ub < ua && ua < ob {
                total += (signs[a] * signs[b]) as i64;
            }
        }
    }
    total
}

/// Patterns whose pairings sum to the degree-3 invariant, normalized to
/// vanish on the unknot and to be `+1` on the right-handed trefoil.
pub const V3_PATTERNS: [&str; 5] = ["ABaCbc", "AbCaBc", "AbCacB", "aBcAbC", "aBcbAC"];

/// Packs a pattern string into an integer key: 3 bits per arrow end.
fn pattern_key(pattern: &[u8]) -> u32 {
    pattern.iter().fold(0u32, |acc, &ch| {
        let sym = if ch.is_ascii_uppercase() {
            (ch - b'A') << 1 | 1
        } else {
            (ch - b'a') << 1
        };
        acc << 3 | sym as u32
    })
}

/// Degree-3 invariant: the sum of the pairings with [`V3_PATTERNS`].
pub fn vassiliev_v3(d: &LongKnotDiagram) -> i64 {
    let targets: Vec<u32> = V3_PATTERNS
        .iter()
        .map(|p| pattern_key(p.as_bytes()))
        .collect();
    let visits = d.visit_positions();
    let signs = d.signs();
    let n = signs.len();
    let mut total = 0i64;
    let mut buf = [0u8; 6];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut ends = [
                    (visits[a].0, 0u8, true),
                    (visits[a].1, 0, false),
                    (visits[b].0, 1, true),
                    (visits[b].1, 1, false),
                    (visits[c].0, 2, true),
                    (visits[c].1, 2, false),
                ];
                ends.sort_unstable_by_key(|e| e.0);
                let mut letter = [u8::MAX; 3];
                let mut next = 0;
                for (slot, &(_, k, over)) in ends.iter().enumerate() {
                    let k = k as usize;
                    if letter[k] == u8::MAX {
                        letter[k] = next;
                        next += 1;
                    }
                    buf[slot] = if over { b'A' } else { b'a' } + letter[k];
                }
                if targets.contains(&pattern_key(&buf)) {
                    total += (signs[a] * signs[b] * signs[c]) as i64;
                }
            }
        }
    }
    total
}
