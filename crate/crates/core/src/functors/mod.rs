pub mod cone;
pub mod constructions;
pub mod glue;
pub mod morphism;
pub mod props;
pub mod recognize;

pub use cone::{f_equiv, theta_perfect, theta_perfect_inverse, verify_cone_iso, ConeValue, TopCone};
pub use constructions::{
    boolean_part, delta, delta_inverse, detrop, gamma, gamma_embed, mv_from_semifield, theta, theta_star, trop,
};
pub use glue::glue_boolean_perfect;
pub use morphism::{theta_on_morphism, MorphismRule, MvMorphism, ThetaMorphism};
pub use props::{check_closure, check_duality, check_radical_placement, check_sum_decomposition};
pub use recognize::{recognize_theta_image, FiniteBisemiring};
