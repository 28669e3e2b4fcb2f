//! The associative algebra of operators attached to a structure.

use crate::exact_math::meataxe::enveloping_algebra;
use crate::exact_math::{Echelon, Field, Matrix};

/// A basis of a subalgebra of `End(A)` (always containing the identity).
#[derive(Clone, Debug)]
pub struct OperatorAlgebra {
    pub basis: Vec<Matrix>,
}

impl OperatorAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Linear span of the given matrices, keeping an independent subset.
    pub fn span(field: &Field, n: usize, mats: &[Matrix]) -> OperatorAlgebra {
        let mut ech = Echelon::new(field, n * n);
        let basis = mats.iter().filter(|m| ech.push(m.entries())).cloned().collect();
        OperatorAlgebra { basis }
    }

    /// Unital associative algebra generated by the matrices.
    pub fn generated(field: &Field, n: usize, gens: &[Matrix]) -> OperatorAlgebra {
        OperatorAlgebra {
            basis: enveloping_algebra(field, n, gens),
        }
    }
}
