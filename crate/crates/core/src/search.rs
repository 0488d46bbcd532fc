//! Bounded enumeration of A-generator words and the knots they close to.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::batch;
use crate::braid::{a_word, AGenerator};
use crate::closure::{bridge_upper_bound, short_circuit_close, simplify};
use crate::error::{Error, Result};
use crate::invariants::{fingerprint, Fingerprint};

/// A knot type found by [`enumerate_knots`], with the first word (in
/// enumeration order) that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub word: String,
    pub fingerprint: Fingerprint,
    /// Crossings left after simplification.
    pub crossings: usize,
    pub bridge_upper_bound: usize,
    /// Number of enumerated words with this fingerprint.
    pub occurrences: usize,
}

/// All words of length `0..=max_len` in the letters `A(i,j)^{±1}` on
/// `strands` strands, shortest first, then lexicographically by letter
/// index (letters ordered by `(i, j)`, positive before negative).
pub fn a_words(strands: usize, max_len: usize) -> Vec<Vec<AGenerator>> {
    let mut letters = Vec::new();
    for i in 1..strands {
        for j in i + 1..=strands {
            for e in [1, -1] {
                letters.push(AGenerator::new(i, j, e).expect("distinct indices"));
            }
        }
    }
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<AGenerator>> = vec![Vec::new()];
    for _ in 0..max_len {
        let next: Vec<Vec<AGenerator>> = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn render_a_word(word: &[AGenerator]) -> String {
    word.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Closes every word from [`a_words`] and groups them by fingerprint, in
/// order of first appearance.
pub fn enumerate_knots(
    strands: usize,
    max_len: usize,
    crossing_cap: usize,
) -> Result<Vec<SearchHit>> {
    if strands.is_multiple_of(2) || strands < 3 {
        return Err(Error::InvalidArgument(format!(
            "search needs an odd strand count ≥ 3, got {strands}"
        )));
    }
    let words = a_words(strands, max_len);
    let results = batch::map(&words, |w| -> Result<(Fingerprint, usize, usize)> {
        let b = a_word(strands, w)?;
        let d = short_circuit_close(&b)?;
        Ok((
            fingerprint(&d, crossing_cap)?,
            simplify(&d).crossing_count(),
            bridge_upper_bound(&b),
        ))
    });
    let mut hits: Vec<SearchHit> = Vec::new();
    let mut index: HashMap<Fingerprint, usize> = HashMap::new();
    for (w, r) in words.iter().zip(results) {
        let (fp, crossings, bridge) = r?;
        match index.get(&fp) {
            Some(&k) => hits[k].occurrences += 1,
            None => {
                index.insert(fp.clone(), hits.len());
                hits.push(SearchHit {
                    word: render_a_word(w),
                    fingerprint: fp,
                    crossings,
                    bridge_upper_bound: bridge,
                    occurrences: 1,
                });
            }
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_counts() {
        assert_eq!(a_words(3, 0).len(), 1);
        assert_eq!(a_words(3, 2).len(), 1 + 6 + 36);
        assert_eq!(render_a_word(&a_words(3, 1)[2]), "A(1,2)^-1");
    }

    #[test]
    fn length_one_words_in_p3() {
        let hits = enumerate_knots(3, 1, 40).unwrap();
        assert!(hits[0].fingerprint.is_unknot());
        assert_eq!(hits[0].word, "");
        // only A(1,3) knots: a left-handed trefoil
        assert_eq!(hits.len(), 2);
        assert_eq!(hits[1].word, "A(1,3)");
        assert_eq!((hits[1].fingerprint.v2, hits[1].fingerprint.v3), (1, -1));
        assert_eq!(hits[1].bridge_upper_bound, 2);
    }
}
