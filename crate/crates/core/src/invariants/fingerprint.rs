use serde::{Deserialize, Serialize};

use super::jones::jones;
use super::laurent::LaurentPoly;
use super::vassiliev::{casson_v2, vassiliev_v3};
use crate::closure::{simplify, LongKnotDiagram};
use crate::error::Result;

/// Invariant summary used to compare knots: Jones polynomial, `v2`, `v3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub jones: LaurentPoly,
    pub v2: i64,
    pub v3: i64,
}

impl Fingerprint {
    pub fn mirrored(&self) -> Fingerprint {
        Fingerprint {
            jones: self.jones.invert_variable(),
            v2: self.v2,
            v3: -self.v3,
        }
    }

    pub fn matches_up_to_mirror(&self, other: &Fingerprint) -> bool {
        self == other || *self == other.mirrored()
    }

    /// Multiplies Jones and adds `v2`, `v3`: the fingerprint of a
    /// connected sum.
    pub fn connect(&self, other: &Fingerprint) -> Result<Fingerprint> {
        Ok(Fingerprint {
            jones: self.jones.mul(&other.jones)?,
            v2: self.v2 + other.v2,
            v3: self.v3 + other.v3,
        })
    }

    pub fn is_unknot(&self) -> bool {
        self.v2 == 0 && self.v3 == 0 && self.jones == LaurentPoly::one(self.jones.var())
    }
}

/// Fingerprint of the simplified diagram. The crossing cap applies after
/// simplification.
pub fn fingerprint(d: &LongKnotDiagram, crossing_cap: usize) -> Result<Fingerprint> {
    let s = simplify(d);
    Ok(Fingerprint {
        jones: jones(&s, crossing_cap)?,
        v2: casson_v2(&s),
        v3: vassiliev_v3(&s),
    })
}
