use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variable {
    A,
    T,
}

impl Variable {
    fn name(self) -> &'static str {
        match self {
            Variable::A => "A",
            Variable::T => "t",
        }
    }
}

/// Sparse integer Laurent polynomial in one variable. Zero coefficients
/// are never stored, so the empty map is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    var: Variable,
    terms: BTreeMap<i32, i128>,
}

impl LaurentPoly {
    pub fn zero(var: Variable) -> Self {
        LaurentPoly {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Variable) -> Self {
        Self::monomial(var, 1, 0)
    }

    pub fn monomial(var: Variable, coeff: i128, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        LaurentPoly { var, terms }
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(var: Variable, terms: &[(i32, i128)]) -> Self {
        let mut p = LaurentPoly::zero(var);
        for &(e, c) in terms {
            p.add_term(e, c).expect("small literal coefficients");
        }
        p
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i128 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i32, coeff: i128) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = entry.checked_add(coeff).ok_or(Error::CoefficientOverflow)?;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &LaurentPoly) -> Result<()> {
        for (e, c) in other.terms() {
            self.add_term(e, c)?;
        }
        Ok(())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let c = c1.checked_mul(c2).ok_or(Error::CoefficientOverflow)?;
                out.add_term(e1 + e2, c)?;
            }
        }
        Ok(out)
    }

    /// Multiplies by `coeff · var^exp`.
    pub fn mul_monomial(&self, coeff: i128, exp: i32) -> Result<LaurentPoly> {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            for (e, c) in self.terms() {
                terms.insert(
                    e + exp,
                    c.checked_mul(coeff).ok_or(Error::CoefficientOverflow)?,
                );
            }
        }
        Ok(LaurentPoly {
            var: self.var,
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::one(self.var);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `p(x) ↦ p(x^-1)`.
    pub fn invert_variable(&self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Substitutes `var^exp ↦ new_var^(exp / divisor)`, requiring every
    /// exponent to be divisible.
    pub fn rescale(&self, new_var: Variable, divisor: i32) -> Result<LaurentPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            if e % divisor != 0 {
                return Err(Error::NonIntegralExponent);
            }
            terms.insert(e / divisor, c);
        }
        Ok(LaurentPoly {
            var: new_var,
            terms,
        })
    }

    /// Value at 1, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> i128 {
        self.terms.values().sum()
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms `c*x^e` in increasing exponent order; a constant term is
    /// printed as the bare coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{}^{e}", self.var.name())?;
            }
        }
        Ok(())
    }
}
