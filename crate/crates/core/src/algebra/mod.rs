pub mod bisemiring;
pub mod check;
pub mod element;
pub mod lgroup;
pub mod mv;
pub mod semifield;

pub use bisemiring::{Bisemiring, Carrier};
pub use check::{check_mv_axioms, enumerate_or_sample, CheckMode};
pub use element::{Infinitesimality, MvConnective, MvElement};
pub use lgroup::{GroupElem, LGroup, LGroupOp};
pub use mv::{MvAlgebra, MvValue};
pub use semifield::{Semifield, SemifieldOp, TropValue};
