//! Structure-constant algebras, products of subspaces, radicals, centers,
//! annihilators, quotients and subalgebras.

pub mod algebra;
pub mod constructions;
pub mod quotient;
pub mod radical;

pub use algebra::{Algebra, AlgebraKind, ValidationReport};
pub use quotient::{QuotientAlgebra, Subalgebra};
pub use radical::RadicalReport;
