//! Gluing a finite Boolean algebra to a perfect algebra.

use crate::algebra::mv::{first_atom, MvAlgebra, MvValue};
use crate::error::{Error, Result};

/// The subalgebra `{(b, p) ∈ B × P : [a <= b] = p mod Rad(P)}`, with `a` the
/// first atom of `B` in canonical order.
///
/// Its Boolean part is `{(b, [a <= b])} ≅ B` and its radical is `{0} × Rad(P)`.
pub fn glue_boolean_perfect(boolean: &MvAlgebra, perfect: &MvAlgebra) -> Result<MvAlgebra> {
    if !boolean.is_finite() {
        return Err(Error::Domain(format!("{boolean} is not finite")));
    }
    if let Some(x) = boolean.enumerate(0).into_iter().find(|x| !boolean.is_boolean(x)) {
        return Err(Error::Domain(format!("{boolean} is not Boolean: {x} ⊕ {x} ≠ {x}")));
    }
    if first_atom(boolean).is_none() {
        return Err(Error::Domain(format!("{boolean} has no atom")));
    }
    if perfect.lex_group().is_none() {
        return Err(Error::Unsupported(format!("{perfect} was not built by delta")));
    }
    Ok(MvAlgebra::Glued {
        boolean: Box::new(boolean.clone()),
        perfect: Box::new(perfect.clone()),
    })
}

/// Projection of a glued element onto its perfect coordinate.
pub fn perfect_coordinate(x: &MvValue) -> Option<&MvValue> {
    match x {
        MvValue::Tuple(xs) if xs.len() == 2 => Some(&xs[1]),
        _ => None,
    }
}
