pub mod algebra;
pub mod casimir;
pub mod decomposition;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod linalg;
pub mod rational;
pub mod suite;
pub mod vogel;
pub mod wedge;

pub use error::{Error, Result};
pub use rational::Rational;
