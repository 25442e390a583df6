pub mod algebra;
pub mod error;
pub mod export;
pub mod functors;
pub mod logic;
pub mod qpoints;
pub mod rational;
pub mod report;
pub mod shorthand;

pub use error::{Error, Result};
pub use rational::Rational;
pub use report::{CheckReport, Verdict};
