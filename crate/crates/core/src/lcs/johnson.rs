//! Johnson-filtration degree of a pure braid through its Artin action.

use super::series::{magnus_expand_rank, TruncatedSeries};
use crate::braid::{PureBraid, SigmaWord};

/// Magnus images `M(φ(x_j))` of the Artin action, together with their
/// inverses, computed letter by letter on series so that the free-group
/// images never have to be written out.
pub fn artin_series(word: &SigmaWord, max_degree: usize) -> Vec<TruncatedSeries> {
    let k = word.strands();
    let mut img: Vec<TruncatedSeries> = (1..=k)
        .map(|g| TruncatedSeries::generator(g, k, max_degree))
        .collect();
    let mut inv: Vec<TruncatedSeries> = (1..=k)
        .map(|g| TruncatedSeries::generator_inverse(g, k, max_degree))
        .collect();
    for l in word.letters() {
        let (a, b) = (l.pos - 1, l.pos);
        let (s, si, t, ti) = (
            img[a].clone(),
            inv[a].clone(),
            img[b].clone(),
            inv[b].clone(),
        );
        if l.sign > 0 {
            img[a] = s.mul(&t).mul(&si);
            inv[a] = s.mul(&ti).mul(&si);
            img[b] = s;
            inv[b] = si;
        } else {
            img[b] = ti.mul(&s).mul(&t);
            inv[b] = ti.mul(&si).mul(&t);
            img[a] = t;
            inv[a] = ti;
        }
    }
    img
}

/// Largest `n ≤ dmax` such that every deviation `φ(x_j)·x_j^-1` of the
/// Artin action has Magnus expansion `1 + (terms of degree ≥ n + 1)`.
///
/// Membership of `b` in the `n`-th lower-central-series term forces a
/// value of at least `n`; a smaller value refutes membership. The
/// converse is not claimed.
pub fn johnson_degree(b: &PureBraid, dmax: usize) -> usize {
    assert!(dmax >= 1, "dmax must be at least 1");
    let k = b.strands();
    let images = artin_series(b.word(), dmax);
    let mut lowest = dmax + 1;
    for (j, s) in images.iter().enumerate() {
        let dev = s.mul(&TruncatedSeries::generator_inverse(j + 1, k, dmax));
        if let Some(d) = dev.lowest_nonconstant_degree() {
            lowest = lowest.min(d);
        }
    }
    lowest - 1
}

/// Same value computed from the free-group images; exponentially slower on
/// long words, kept as a cross-check.
pub fn johnson_degree_by_words(b: &PureBraid, dmax: usize) -> crate::Result<usize> {
    let k = b.strands();
    let act = crate::braid::artin_action(b.word())?;
    let mut lowest = dmax + 1;
    for j in 1..=k {
        let dev = act
            .image(j)
            .mul(&crate::braid::FreeGroupWord::generator(j).inverse());
        if let Some(d) = magnus_expand_rank(&dev, k, dmax).lowest_nonconstant_degree() {
            lowest = lowest.min(d);
        }
    }
    Ok(lowest - 1)
}
