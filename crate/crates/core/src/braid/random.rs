use rand::Rng;

use super::generators::AGenerator;
use super::word::PureBraid;

/// Uniform `A_{i,j}^{±1}` with `1 ≤ i < j ≤ strands`.
pub fn random_a_generator<R: Rng + ?Sized>(strands: usize, rng: &mut R) -> AGenerator {
    assert!(strands >= 2, "need at least two strands for an A-generator");
    let i = rng.gen_range(1..strands);
    let j = rng.gen_range(i + 1..=strands);
    let e = if rng.gen_bool(0.5) { 1 } else { -1 };
    AGenerator::new(i, j, e).expect("indices are distinct")
}

/// A random product of A-generators whose σ-word has at most `max_len`
/// letters. Generators that would overshoot the budget are skipped, and
/// the loop stops after a few consecutive misses.
pub fn random_pure_braid<R: Rng + ?Sized>(
    strands: usize,
    max_len: usize,
    rng: &mut R,
) -> PureBraid {
    let mut acc = PureBraid::identity(strands);
    if strands < 2 {
        return acc;
    }
    let target = rng.gen_range(0..=max_len);
    let mut misses = 0;
    while misses < 8 {
        let g = random_a_generator(strands, rng);
        let gw = g.to_braid(strands).expect("generator fits");
        if acc.len() + gw.len() > target {
            misses += 1;
            continue;
        }
        acc = acc.mul(&gw).expect("same strand count");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn respects_length_and_purity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for strands in 1..=7 {
            for _ in 0..50 {
                let b = random_pure_braid(strands, 16, &mut rng);
                assert!(b.len() <= 16);
                assert_eq!(b.strands(), strands);
                assert!(b.word().is_pure());
            }
        }
    }
}
