use super::diagram::LongKnotDiagram;

/// Removes Reidemeister I kinks and Reidemeister II bigons until none are
/// left.
///
/// On the Gauss code a kink is a crossing whose two visits are adjacent,
/// and a bigon is a pair of crossings visited consecutively twice, once
/// both over and once both under, with opposite signs. For a long knot
/// both patterns bound an empty disc, so the moves are always realizable.
pub fn simplify(d: &LongKnotDiagram) -> LongKnotDiagram {
    let signs = d.signs().to_vec();
    let mut seq: Vec<(usize, bool)> = d.passages().to_vec();
    while let Some(remove) = find_move(&seq, &signs) {
        seq.retain(|(c, _)| !remove.contains(c));
    }
    LongKnotDiagram::from_parts(&signs, &seq)
}

fn find_move(seq: &[(usize, bool)], signs: &[i8]) -> Option<Vec<usize>> {
    if let Some(w) = seq.windows(2).find(|w| w[0].0 == w[1].0) {
        return Some(vec![w[0].0]);
    }
    let mut pos = vec![[usize::MAX; 2]; signs.len()];
    for (p, &(c, over)) in seq.iter().enumerate() {
        pos[c][over as usize] = p;
    }
    for w in seq.windows(2) {
        let ((a, oa), (b, ob)) = (w[0], w[1]);
        if oa != ob || !oa || signs[a] == signs[b] {
            continue;
        }
        // both over here; the under visits must be adjacent too
        let (qa, qb) = (pos[a][0], pos[b][0]);
        if qa.abs_diff(qb) == 1 {
            return Some(vec![a, b]);
        }
    }
    None
}
