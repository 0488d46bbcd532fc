//! Free groups and the Artin action of braids on them.
//!
//! Convention: `σ_k` acts by `x_k ↦ x_k x_{k+1} x_k^-1`, `x_{k+1} ↦ x_k`,
//! and a word `s_1 s_2 … s_m` acts as the composite `s_1 ∘ s_2 ∘ … ∘ s_m`,
//! so `artin_action(a·b) = artin_action(a) ∘ artin_action(b)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::{max_letters, SigmaWord};
use crate::error::{Error, Result};

/// A letter `x_gen^sign` with 1-based generator index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeLetter {
    pub gen: usize,
    pub sign: i8,
}

/// A freely reduced word in the free group on `x_1, x_2, …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FreeGroupWord {
    letters: Vec<FreeLetter>,
}

impl FreeGroupWord {
    pub fn identity() -> Self {
        FreeGroupWord::default()
    }

    pub fn generator(gen: usize) -> Self {
        FreeGroupWord {
            letters: vec![FreeLetter { gen, sign: 1 }],
        }
    }

    /// Signed generator indices: `2` is `x_2`, `-2` is `x_2^-1`.
    pub fn from_signed(letters: &[i32]) -> Self {
        let mut w = FreeGroupWord::identity();
        for &l in letters {
            assert!(l != 0, "free generator index must be nonzero");
            w.push(FreeLetter {
                gen: l.unsigned_abs() as usize,
                sign: if l > 0 { 1 } else { -1 },
            });
        }
        w
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, l: FreeLetter) {
        match self.letters.last() {
            Some(top) if top.gen == l.gen && top.sign == -l.sign => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| FreeLetter {
                    gen: l.gen,
                    sign: -l.sign,
                })
                .collect(),
        }
    }

    pub fn commutator(&self, other: &FreeGroupWord) -> FreeGroupWord {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    /// Replaces each `x_g` with `images[g - 1]`.
    pub fn substitute(&self, images: &[FreeGroupWord]) -> FreeGroupWord {
        let mut out = FreeGroupWord::identity();
        for l in &self.letters {
            let img = &images[l.gen - 1];
            if l.sign > 0 {
                for &m in &img.letters {
                    out.push(m);
                }
            } else {
                for m in img.letters.iter().rev() {
                    out.push(FreeLetter {
                        gen: m.gen,
                        sign: -m.sign,
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            if l.sign > 0 {
                write!(f, "x{}", l.gen)?;
            } else {
                write!(f, "x{}^-1", l.gen)?;
            }
        }
        Ok(())
    }
}

/// An endomorphism of the free group on `x_1 … x_k`, given by the images of
/// the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeEndo {
    images: Vec<FreeGroupWord>,
}

impl FreeEndo {
    pub fn identity(rank: usize) -> Self {
        FreeEndo {
            images: (1..=rank).map(FreeGroupWord::generator).collect(),
        }
    }

    pub fn from_images(images: Vec<FreeGroupWord>) -> Self {
        FreeEndo { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeGroupWord] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> &FreeGroupWord {
        &self.images[gen - 1]
    }

    pub fn apply(&self, w: &FreeGroupWord) -> FreeGroupWord {
        w.substitute(&self.images)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeEndo) -> FreeEndo {
        FreeEndo {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }
}

/// The Artin action of a braid on the free group of rank `strands`.
pub fn artin_action(word: &SigmaWord) -> Result<FreeEndo> {
    let mut images: Vec<FreeGroupWord> =
        (1..=word.strands()).map(FreeGroupWord::generator).collect();
    let cap = max_letters();
    // images ← images ∘ σ: the new images are words in the old ones
    for l in word.letters() {
        let (k, k1) = (l.pos - 1, l.pos);
        let (a, b) = (images[k].clone(), images[k1].clone());
        if l.sign > 0 {
            images[k] = a.mul(&b).mul(&a.inverse());
            images[k1] = a;
        } else {
            // σ^-1: x_k ↦ x_{k+1}, x_{k+1} ↦ x_{k+1}^-1 x_k x_{k+1}
            images[k1] = b.inverse().mul(&a).mul(&b);
            images[k] = b;
        }
        let len = images[k].len().max(images[k1].len());
        if len > cap {
            return Err(Error::WordTooLong { len, cap });
        }
    }
    Ok(FreeEndo { images })
}
