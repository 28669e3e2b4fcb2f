//! Exact arithmetic and linear algebra over `Q(z_m)`.

pub mod echelon;
pub mod factor;
pub mod field;
pub mod matrix;
pub mod meataxe;
pub mod modular;
pub mod poly;
pub mod subspace;

pub use echelon::Echelon;
pub use field::{cyclotomic_polynomial, parse_scalar, Field, Scalar};
pub use matrix::Matrix;
pub use poly::Poly;
pub use subspace::Subspace;
