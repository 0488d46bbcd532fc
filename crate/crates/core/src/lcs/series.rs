//! Truncated noncommutative power series and the Magnus expansion.

use std::collections::BTreeMap;
use std::fmt;

use crate::braid::FreeGroupWord;
use crate::error::{Error, Result};

/// Default truncation degree for Magnus computations.
pub const DEFAULT_MAX_DEGREE: usize = 5;

/// A power series in noncommuting variables `X_1 … X_rank`, truncated above
/// `max_degree`.
///
/// Coefficients are stored densely, one slot per monomial of degree at
/// most `max_degree`; a monomial `X_{g_1} … X_{g_l}` sits at
/// `offset[l] + Σ (g_i - 1)·rank^(l-i)`. The map view returned by
/// [`TruncatedSeries::terms`] lists only nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    rank: usize,
    max_degree: usize,
    coeffs: Vec<i128>,
}

fn offsets(rank: usize, max_degree: usize) -> Vec<usize> {
    let mut off = Vec::with_capacity(max_degree + 2);
    let mut acc = 0;
    let mut width = 1;
    for _ in 0..=max_degree {
        off.push(acc);
        acc += width;
        width *= rank;
    }
    off.push(acc);
    off
}

impl TruncatedSeries {
    pub fn zero(rank: usize, max_degree: usize) -> Self {
        let size = offsets(rank, max_degree)[max_degree + 1];
        TruncatedSeries {
            rank,
            max_degree,
            coeffs: vec![0; size],
        }
    }

    pub fn one(rank: usize, max_degree: usize) -> Self {
        let mut s = Self::zero(rank, max_degree);
        s.coeffs[0] = 1;
        s
    }

    /// `1 + X_gen`.
    pub fn generator(gen: usize, rank: usize, max_degree: usize) -> Self {
        assert!(
            (1..=rank).contains(&gen),
            "generator X_{gen} outside rank {rank}"
        );
        let mut s = Self::one(rank, max_degree);
        if max_degree >= 1 {
            s.coeffs[gen] = 1;
        }
        s
    }

    /// `1 - X_gen + X_gen^2 - …`, the inverse of `1 + X_gen`.
    pub fn generator_inverse(gen: usize, rank: usize, max_degree: usize) -> Self {
        assert!(
            (1..=rank).contains(&gen),
            "generator X_{gen} outside rank {rank}"
        );
        let mut s = Self::zero(rank, max_degree);
        let off = offsets(rank, max_degree);
        let mut idx = 0;
        for (d, &o) in off.iter().enumerate().take(max_degree + 1) {
            s.coeffs[o + idx] = if d % 2 == 0 { 1 } else { -1 };
            idx = idx * rank + (gen - 1);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn constant(&self) -> i128 {
        self.coeffs[0]
    }

    /// Coefficient of `X_{word[0]} X_{word[1]} …` (1-based generators).
    pub fn coeff(&self, word: &[usize]) -> i128 {
        if word.len() > self.max_degree || word.iter().any(|&g| g == 0 || g > self.rank) {
            return 0;
        }
        let off = offsets(self.rank, self.max_degree);
        let idx = word.iter().fold(0, |acc, &g| acc * self.rank + (g - 1));
        self.coeffs[off[word.len()] + idx]
    }

    /// Nonzero coefficients keyed by monomial, ordered by degree then
    /// lexicographically.
    pub fn terms(&self) -> BTreeMap<(usize, Vec<usize>), i128> {
        let off = offsets(self.rank, self.max_degree);
        let mut out = BTreeMap::new();
        for d in 0..=self.max_degree {
            for (idx, &c) in self.coeffs[off[d]..off[d + 1]].iter().enumerate() {
                if c != 0 {
                    out.insert((d, self.decode(d, idx)), c);
                }
            }
        }
        out
    }

    fn decode(&self, degree: usize, mut idx: usize) -> Vec<usize> {
        let mut word = vec![0; degree];
        for slot in word.iter_mut().rev() {
            *slot = idx % self.rank + 1;
            idx /= self.rank;
        }
        word
    }

    /// Same series over a larger alphabet.
    pub fn promote(&self, rank: usize) -> TruncatedSeries {
        if rank == self.rank {
            return self.clone();
        }
        assert!(rank > self.rank, "cannot shrink the alphabet");
        let mut out = Self::zero(rank, self.max_degree);
        let off = offsets(rank, self.max_degree);
        for ((d, word), c) in self.terms() {
            let idx = word.iter().fold(0, |acc, &g| acc * rank + (g - 1));
            out.coeffs[off[d] + idx] = c;
        }
        out
    }

    fn aligned(&self, other: &TruncatedSeries) -> (TruncatedSeries, TruncatedSeries) {
        let rank = self.rank.max(other.rank);
        let deg = self.max_degree.min(other.max_degree);
        (
            self.promote(rank).truncate(deg),
            other.promote(rank).truncate(deg),
        )
    }

    /// Drops every term above `degree`.
    pub fn truncate(&self, degree: usize) -> TruncatedSeries {
        if degree >= self.max_degree {
            return self.clone();
        }
        let size = offsets(self.rank, degree)[degree + 1];
        TruncatedSeries {
            rank: self.rank,
            max_degree: degree,
            coeffs: self.coeffs[..size].to_vec(),
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let (mut a, b) = self.aligned(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i128) -> TruncatedSeries {
        let mut out = self.clone();
        out.coeffs.iter_mut().for_each(|c| *c *= k);
        out
    }

    /// Product, truncated to the smaller of the two degrees.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        if self.rank != other.rank || self.max_degree != other.max_degree {
            let (a, b) = self.aligned(other);
            return a.mul(&b);
        }
        let (k, d) = (self.rank, self.max_degree);
        let off = offsets(k, d);
        let mut out = Self::zero(k, d);
        let mut width = vec![1usize; d + 1];
        for l in 1..=d {
            width[l] = width[l - 1] * k;
        }
        for la in 0..=d {
            for (ia, &ca) in self.coeffs[off[la]..off[la + 1]].iter().enumerate() {
                if ca == 0 {
                    continue;
                }
                for lb in 0..=d - la {
                    let base = off[la + lb] + ia * width[lb];
                    let src = &other.coeffs[off[lb]..off[lb + 1]];
                    let dst = &mut out.coeffs[base..base + width[lb]];
                    for (o, &cb) in dst.iter_mut().zip(src) {
                        *o += ca * cb;
                    }
                }
            }
        }
        out
    }

    /// Inverse of a series with constant term 1, as `Σ (1 - S)^n`.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        if self.constant() != 1 {
            return Err(Error::InvalidArgument(
                "series inverse needs constant term 1".into(),
            ));
        }
        let one = Self::one(self.rank, self.max_degree);
        let n = one.sub(self);
        let mut acc = one.clone();
        let mut power = one;
        for _ in 0..self.max_degree {
            power = power.mul(&n);
            acc = acc.add(&power);
        }
        Ok(acc)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Lowest degree `≥ 1` carrying a nonzero coefficient, if any.
    pub fn lowest_nonconstant_degree(&self) -> Option<usize> {
        let off = offsets(self.rank, self.max_degree);
        (1..=self.max_degree).find(|&d| self.coeffs[off[d]..off[d + 1]].iter().any(|&c| c != 0))
    }
}

impl fmt::Display for TruncatedSeries {
    /// Terms by degree, e.g. `1 + X1X2 - X2X1`; coefficients other than
    /// `±1` are written as `3*X1X1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (n, ((d, word), c)) in terms.into_iter().enumerate() {
            let mono: String = word.iter().map(|g| format!("X{g}")).collect();
            let (neg, mag) = (c < 0, c.unsigned_abs());
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if d == 0 {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Magnus expansion `x_g ↦ 1 + X_g` of a free-group word, truncated above
/// `max_degree`, over the alphabet of the largest generator in `w`.
pub fn magnus_expand(w: &FreeGroupWord, max_degree: usize) -> TruncatedSeries {
    let rank = w.letters().iter().map(|l| l.gen).max().unwrap_or(1);
    magnus_expand_rank(w, rank, max_degree)
}

/// [`magnus_expand`] over a fixed alphabet `X_1 … X_rank`.
pub fn magnus_expand_rank(w: &FreeGroupWord, rank: usize, max_degree: usize) -> TruncatedSeries {
    assert!(max_degree >= 1, "truncation degree must be at least 1");
    let gens: Vec<TruncatedSeries> = (1..=rank)
        .map(|g| TruncatedSeries::generator(g, rank, max_degree))
        .collect();
    let invs: Vec<TruncatedSeries> = (1..=rank)
        .map(|g| TruncatedSeries::generator_inverse(g, rank, max_degree))
        .collect();
    let mut acc = TruncatedSeries::one(rank, max_degree);
    for l in w.letters() {
        let factor = if l.sign > 0 {
            &gens[l.gen - 1]
        } else {
            &invs[l.gen - 1]
        };
        acc = acc.mul(factor);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(l: &[i32]) -> FreeGroupWord {
        FreeGroupWord::from_signed(l)
    }

    #[test]
    fn generator_and_inverse() {
        assert_eq!(magnus_expand(&fw(&[1]), 3).to_string(), "1 + X1");
        assert_eq!(
            magnus_expand(&fw(&[-1]), 3).to_string(),
            "1 - X1 + X1X1 - X1X1X1"
        );
    }

    #[test]
    fn commutator_degree_two() {
        let c = fw(&[1]).commutator(&fw(&[2]));
        let s = magnus_expand(&c, 2);
        assert_eq!(s.to_string(), "1 + X1X2 - X2X1");
        assert_eq!(s.coeff(&[1, 2]), 1);
        assert_eq!(s.coeff(&[2, 1]), -1);
        assert_eq!(s.lowest_nonconstant_degree(), Some(2));
    }

    #[test]
    fn multiplicative() {
        let u = fw(&[1, 2, -1, 3, 3]);
        let v = fw(&[-3, 2, 2, 1]);
        let lhs = magnus_expand_rank(&u.mul(&v), 3, 4);
        let rhs = magnus_expand_rank(&u, 3, 4).mul(&magnus_expand_rank(&v, 3, 4));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_round_trip() {
        let s = magnus_expand_rank(&fw(&[1, 2, -1, 2]), 2, 5);
        assert!(s.mul(&s.inverse().unwrap()).is_one());
        assert!(s.inverse().unwrap().mul(&s).is_one());
        assert!(TruncatedSeries::zero(2, 3).inverse().is_err());
    }

    #[test]
    fn promote_preserves_terms() {
        let s = magnus_expand(&fw(&[2, -1]), 3);
        let p = s.promote(4);
        assert_eq!(p.rank(), 4);
        assert_eq!(p.to_string(), s.to_string());
        assert_eq!(
            p.mul(&magnus_expand_rank(&fw(&[4]), 4, 3)).coeff(&[2, 4]),
            1
        );
    }

    #[test]
    fn nested_commutators_deepen() {
        let x: Vec<FreeGroupWord> = (1..=3).map(FreeGroupWord::generator).collect();
        let mut c = x[0].clone();
        for depth in 2..=4 {
            c = c.commutator(&x[(depth - 1) % 3]);
            let s = magnus_expand_rank(&c, 3, 5);
            assert_eq!(s.lowest_nonconstant_degree(), Some(depth), "depth {depth}");
        }
        assert!(magnus_expand_rank(&FreeGroupWord::identity(), 3, 5).is_one());
    }
}
