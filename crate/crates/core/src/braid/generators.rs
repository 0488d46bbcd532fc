use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::{Letter, PureBraid, SigmaWord};
use crate::error::{Error, Result};

/// The standard pure braid generator `A_{i,j}^exponent`, stored with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AGenerator {
    i: usize,
    j: usize,
    exponent: i32,
}

impl AGenerator {
    /// `A_{i,j}` and `A_{j,i}` name the same generator; the pair is sorted.
    pub fn new(i: usize, j: usize, exponent: i32) -> Result<Self> {
        if i == j || i == 0 || j == 0 {
            return Err(Error::InvalidArgument(format!(
                "A({i},{j}) needs distinct positive indices"
            )));
        }
        if exponent == 0 {
            return Err(Error::InvalidArgument(
                "A-generator exponent must be nonzero".into(),
            ));
        }
        Ok(AGenerator {
            i: i.min(j),
            j: i.max(j),
            exponent,
        })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn exponent(&self) -> i32 {
        self.exponent
    }

    pub fn inverse(&self) -> Self {
        AGenerator {
            exponent: -self.exponent,
            ..*self
        }
    }

    /// Expands to `(σ_{j-1} … σ_{i+1}) σ_i² (σ_{i+1}^-1 … σ_{j-1}^-1)`
    /// raised to the exponent.
    pub fn expand(&self, strands: usize) -> Result<SigmaWord> {
        if self.j > strands {
            return Err(Error::OutOfRange {
                index: self.j,
                strands,
            });
        }
        let (i, j) = (self.i, self.j);
        let mut letters = Vec::with_capacity(2 * (j - i));
        letters.extend((i + 1..j).rev().map(|k| Letter::new(k, 1)));
        letters.push(Letter::new(i, 1));
        letters.push(Letter::new(i, 1));
        letters.extend((i + 1..j).map(|k| Letter::new(k, -1)));
        SigmaWord::new(strands, letters)?.pow(self.exponent)
    }

    pub fn to_braid(&self, strands: usize) -> Result<PureBraid> {
        // purity holds by construction
        PureBraid::new(self.expand(strands)?)
    }
}

impl fmt::Display for AGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            1 => write!(f, "A({},{})", self.i, self.j),
            e => write!(f, "A({},{})^{}", self.i, self.j, e),
        }
    }
}

/// Product of A-generators, left to right, on the given strand count.
pub fn a_word(strands: usize, gens: &[AGenerator]) -> Result<PureBraid> {
    let mut acc = PureBraid::identity(strands);
    for g in gens {
        acc = acc.mul(&g.to_braid(strands)?)?;
    }
    Ok(acc)
}
