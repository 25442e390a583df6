//! `Θ_pt`: from a subgroup of `Q` to its positive cone with a top.

use crate::algebra::lgroup::{GroupElem, LGroup};
use crate::error::Result;
use crate::functors::cone::{theta_perfect, ConeValue, TopCone};
use crate::functors::constructions::delta;
use crate::qpoints::characteristic::Characteristic;
use crate::qpoints::invariants::{hom_exists, HomExistence};
use crate::report::{witness, CheckReport};

/// `θ(Δ(G_chi))`, read as a cone with a top.
pub fn theta_pt(chi: &Characteristic) -> TopCone {
    theta_perfect(&delta(&LGroup::q_subgroup(chi.clone()))).expect("delta builds a perfect algebra")
}

/// `x ↦ r·x` on finite cone elements, fixing `⊤`.
pub fn scale_cone_value(r: &crate::rational::Rational, x: &ConeValue) -> ConeValue {
    match x {
        ConeValue::Top => ConeValue::Top,
        ConeValue::Finite(GroupElem::Scalar(q)) => ConeValue::Finite(GroupElem::Scalar(r * q)),
        ConeValue::Finite(g) => ConeValue::Finite(g.clone()),
    }
}

/// When a scale `r` with `r·G_src ⊆ G_dst` exists, checks that `x ↦ r·x`
/// sends `Θ_pt(src)` into `Θ_pt(dst)` preserving `+`, order and `⊤` on the
/// bounded fragment. Reports `valid` with a note when no scale exists.
pub fn check_theta_pt_functoriality(src: &Characteristic, dst: &Characteristic, bound: u64) -> Result<CheckReport> {
    let r = match hom_exists(src, dst) {
        HomExistence::Exists { scale } => scale,
        HomExistence::Absent { certificate } => {
            return Ok(CheckReport::valid(0).with_detail("no_morphism_certificate", certificate));
        }
    };
    let (s, t) = (theta_pt(src), theta_pt(dst));
    let elems = s.enumerate(bound);
    let mut checked = 0;
    for x in &elems {
        let fx = scale_cone_value(&r, x);
        if !t.contains(&fx) {
            return Ok(CheckReport::counterexample("lands in target cone", witness([("x", x)]), checked));
        }
        for y in &elems {
            checked += 1;
            let fy = scale_cone_value(&r, y);
            let ok = scale_cone_value(&r, &s.add(x, y)) == t.add(&fx, &fy) && s.leq(x, y) == t.leq(&fx, &fy);
            if !ok {
                return Ok(CheckReport::counterexample("preserves sum and order", witness([("x", x), ("y", y)]), checked));
            }
        }
    }
    Ok(CheckReport::valid_up_to_bound(checked)
        .with_detail("bound", bound)
        .with_detail("scale", r))
}
