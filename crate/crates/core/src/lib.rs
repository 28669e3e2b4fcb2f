// Dense index loops read more clearly than iterator chains in the linear algebra.
#![allow(clippy::needless_range_loop)]

pub mod algebra_core;
pub mod cli;
pub mod cocharacter;
pub mod codimension;
pub mod decomposition;
pub mod equivariance;
pub mod error;
pub mod exact_math;
pub mod exponent;

pub use error::{Error, Result};
