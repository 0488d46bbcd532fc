use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_LETTERS: usize = 100_000;

static MAX_LETTERS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_LETTERS);

/// Sets the word-length cap enforced by operations that grow words
/// (concatenation, commutators, cabling).
pub fn set_max_letters(cap: usize) {
    MAX_LETTERS.store(cap, Ordering::Relaxed);
}

pub fn max_letters() -> usize {
    MAX_LETTERS.load(Ordering::Relaxed)
}

fn check_len(len: usize) -> Result<()> {
    let cap = max_letters();
    if len > cap {
        return Err(Error::WordTooLong { len, cap });
    }
    Ok(())
}

/// One Artin generator `σ_pos^sign`. With braids drawn top to bottom,
/// `σ_k` carries the strand at position `k` over the strand at `k + 1`;
/// `σ_k^-1` carries it under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub pos: usize,
    pub sign: i8,
}

impl Letter {
    pub fn new(pos: usize, sign: i8) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Letter { pos, sign }
    }

    pub fn inverse(self) -> Self {
        Letter {
            pos: self.pos,
            sign: -self.sign,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign > 0 {
            write!(f, "s{}", self.pos)
        } else {
            write!(f, "s{}^-1", self.pos)
        }
    }
}

/// A braid word over `σ_1 … σ_{strands-1}`, read from the top of the braid
/// down. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SigmaWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl SigmaWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::OutOfRange { index: 0, strands });
        }
        for l in &letters {
            if l.pos == 0 || l.pos >= strands {
                return Err(Error::OutOfRange {
                    index: l.pos,
                    strands,
                });
            }
            if l.sign != 1 && l.sign != -1 {
                return Err(Error::InvalidArgument(format!("letter sign {}", l.sign)));
            }
        }
        check_len(letters.len())?;
        Ok(SigmaWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        SigmaWord {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    /// Builds a word from signed positions: `3` is `σ_3`, `-3` is `σ_3^-1`.
    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&p| {
                if p == 0 {
                    Err(Error::OutOfRange { index: 0, strands })
                } else {
                    Ok(Letter::new(
                        p.unsigned_abs() as usize,
                        if p > 0 { 1 } else { -1 },
                    ))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SigmaWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, or 0 for the empty word.
    pub fn max_position(&self) -> usize {
        self.letters.iter().map(|l| l.pos).max().unwrap_or(0)
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters
            .iter()
            .map(|l| l.pos as i32 * l.sign as i32)
            .collect()
    }

    pub fn free_reduce(&self) -> SigmaWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top.pos == l.pos && top.sign == -l.sign => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        SigmaWord {
            strands: self.strands,
            letters: out,
        }
    }

    pub fn inverse(&self) -> SigmaWord {
        SigmaWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self` followed by `other` (self on top). Strand counts must agree.
    pub fn concat(&self, other: &SigmaWord) -> Result<SigmaWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        check_len(self.letters.len() + other.letters.len())?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(SigmaWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn pow(&self, exponent: i32) -> Result<SigmaWord> {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let reps = exponent.unsigned_abs() as usize;
        check_len(base.len() * reps)?;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        Ok(SigmaWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn include(&self, new_strands: usize) -> Result<SigmaWord> {
        if new_strands < self.strands {
            return Err(Error::BadInclusion {
                from: self.strands,
                to: new_strands,
            });
        }
        Ok(SigmaWord {
            strands: new_strands,
            letters: self.letters.clone(),
        })
    }

    pub fn shift(&self, offset: usize) -> SigmaWord {
        SigmaWord {
            strands: self.strands + offset,
            letters: self
                .letters
                .iter()
                .map(|l| Letter::new(l.pos + offset, l.sign))
                .collect(),
        }
    }

    /// Permutation taking each top position to the bottom position where
    /// its strand ends, composing the transpositions in word order.
    pub fn permutation(&self) -> Permutation {
        // at[p] = strand currently at position p (0-based)
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.pos - 1, l.pos);
        }
        let mut images = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos + 1;
        }
        Permutation { images }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// For each letter, the `(left, right)` strands it crosses, named by
    /// their top position (1-based). The left strand moves right.
    pub fn crossing_strands(&self) -> Vec<(usize, usize)> {
        let mut at: Vec<usize> = (1..=self.strands).collect();
        self.letters
            .iter()
            .map(|l| {
                let pair = (at[l.pos - 1], at[l.pos]);
                at.swap(l.pos - 1, l.pos);
                pair
            })
            .collect()
    }

    /// Signed crossing counts per unordered strand pair. For a pure braid
    /// every count is even and half of it is the linking number.
    pub fn pair_crossing_counts(&self) -> BTreeMap<(usize, usize), i64> {
        let mut counts = BTreeMap::new();
        for (l, (a, b)) in self.letters.iter().zip(self.crossing_strands()) {
            *counts.entry((a.min(b), a.max(b))).or_insert(0) += l.sign as i64;
        }
        counts.retain(|_, v| *v != 0);
        counts
    }

    /// Deletes every crossing involving `strand` (named by top position)
    /// and closes up the positions.
    pub fn erase_strand(&self, strand: usize) -> Result<SigmaWord> {
        if strand == 0 || strand > self.strands || self.strands == 1 {
            return Err(Error::OutOfRange {
                index: strand,
                strands: self.strands,
            });
        }
        let mut pos = strand;
        let mut letters = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if l.pos == pos {
                pos += 1;
            } else if l.pos + 1 == pos {
                pos -= 1;
            } else if l.pos + 1 < pos {
                letters.push(*l);
            } else {
                letters.push(Letter::new(l.pos - 1, l.sign));
            }
        }
        Ok(SigmaWord {
            strands: self.strands - 1,
            letters,
        })
    }

    /// Replaces `strand` (named by top position) with two parallel copies.
    /// A crossing between the cable and another strand becomes two
    /// crossings with the same sign; other crossings are shifted past it.
    pub fn double_strand(&self, strand: usize) -> Result<SigmaWord> {
        if strand == 0 || strand > self.strands {
            return Err(Error::OutOfRange {
                index: strand,
                strands: self.strands,
            });
        }
        let mut cable = strand;
        let mut letters = Vec::with_capacity(self.letters.len() * 2);
        for l in &self.letters {
            let k = l.pos;
            if k == cable {
                letters.push(Letter::new(k + 1, l.sign));
                letters.push(Letter::new(k, l.sign));
                cable = k + 1;
            } else if k + 1 == cable {
                letters.push(Letter::new(k, l.sign));
                letters.push(Letter::new(k + 1, l.sign));
                cable = k;
            } else if k + 1 < cable {
                letters.push(*l);
            } else {
                letters.push(Letter::new(k + 1, l.sign));
            }
        }
        check_len(letters.len())?;
        Ok(SigmaWord {
            strands: self.strands + 1,
            letters,
        })
    }
}

impl fmt::Display for SigmaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Images of strand positions, 1-based: `images[p - 1]` is where the strand
/// starting at top position `p` ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images[p - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| p == i + 1)
    }
}

/// A braid whose strand permutation is trivial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PureBraid(SigmaWord);

impl PureBraid {
    pub fn new(word: SigmaWord) -> Result<Self> {
        if !word.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(PureBraid(word))
    }

    pub fn identity(strands: usize) -> Self {
        PureBraid(SigmaWord::identity(strands))
    }

    pub fn word(&self) -> &SigmaWord {
        &self.0
    }

    pub fn into_word(self) -> SigmaWord {
        self.0
    }

    pub fn strands(&self) -> usize {
        self.0.strands()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn free_reduce(&self) -> PureBraid {
        PureBraid(self.0.free_reduce())
    }

    pub fn inverse(&self) -> PureBraid {
        PureBraid(self.0.inverse())
    }

    pub fn include(&self, new_strands: usize) -> Result<PureBraid> {
        Ok(PureBraid(self.0.include(new_strands)?))
    }

    pub fn shift(&self, offset: usize) -> PureBraid {
        PureBraid(self.0.shift(offset))
    }

    /// Product with `self` on top, including the smaller braid first.
    pub fn mul(&self, other: &PureBraid) -> Result<PureBraid> {
        let n = self.strands().max(other.strands());
        let a = self.0.include(n)?;
        let b = other.0.include(n)?;
        Ok(PureBraid(a.concat(&b)?))
    }

    pub fn pow(&self, exponent: i32) -> Result<PureBraid> {
        Ok(PureBraid(self.0.pow(exponent)?))
    }

    /// `a b a^-1 b^-1`, freely reduced.
    pub fn commutator(&self, other: &PureBraid) -> Result<PureBraid> {
        let ab = self.mul(other)?;
        let ba = other.mul(self)?;
        Ok(ab.mul(&ba.inverse())?.free_reduce())
    }

    pub fn double_strand(&self, strand: usize) -> Result<PureBraid> {
        Ok(PureBraid(self.0.double_strand(strand)?))
    }

    pub fn linking_number(&self, i: usize, j: usize) -> i64 {
        let key = (i.min(j), i.max(j));
        self.0
            .pair_crossing_counts()
            .get(&key)
            .copied()
            .unwrap_or(0)
            / 2
    }

    /// Tensor product of odd-strand pure braids: the first factor on strands
    /// `1..=2n+1`, the second on `2n+1..=2(n+m)+1`, sharing strand `2n+1`.
    pub fn tensor(&self, other: &PureBraid) -> Result<PureBraid> {
        let (s1, s2) = (self.strands(), other.strands());
        for s in [s1, s2] {
            if s % 2 == 0 {
                return Err(Error::EvenStrands(s));
            }
        }
        let total = s1 + s2 - 1;
        let top = self.0.include(total)?;
        let bottom = other.0.shift(s1 - 1);
        Ok(PureBraid(top.concat(&bottom)?))
    }
}

impl fmt::Display for PureBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
