use super::bracket::kauffman_bracket;
use super::laurent::{LaurentPoly, Variable};
use crate::closure::LongKnotDiagram;
use crate::error::Result;

pub fn writhe(d: &LongKnotDiagram) -> i64 {
    d.writhe()
}

/// Jones polynomial `V(t) = (-A^3)^-w ⟨D⟩` with `A^-4 = t`.
pub fn jones(d: &LongKnotDiagram, crossing_cap: usize) -> Result<LaurentPoly> {
    let bracket = kauffman_bracket(d, crossing_cap)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalized = bracket.mul_monomial(sign, (-3 * w) as i32)?;
    normalized.rescale(Variable::T, -4)
}
