pub mod characteristic;
pub mod flat;
pub mod invariants;
pub mod point;

pub use characteristic::{is_prime, Characteristic, DefaultExponent, Exponent};
pub use flat::{check_flatness, frobenius_action, group_from_action, FrobeniusAction, MonoidAction};
pub use invariants::{
    classify_regularity, common_measure, find_divisible_between, gp_invariant, hom_exists, GpInvariant,
    HomExistence, Regularity,
};
pub use point::{check_theta_pt_functoriality, theta_pt};
