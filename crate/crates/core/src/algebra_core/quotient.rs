//! Quotient algebras and subalgebras as new structure-constant algebras,
//! together with the linear maps relating them to the parent.

use crate::error::{Error, Result};
use crate::exact_math::{Matrix, Scalar, Subspace};

use super::algebra::Algebra;

/// `A / I` with projection `A -> A/I` and a linear section `A/I -> A`.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub algebra: Algebra,
    pub ideal: Subspace,
    /// `k x n` matrix of the projection.
    pub projection: Matrix,
    /// `n x k` matrix of the coordinate section (`projection * section = id`).
    pub section: Matrix,
}

/// A subalgebra `U` with its own basis (the canonical basis of `U`).
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: Algebra,
    pub space: Subspace,
    /// `n x k` matrix whose columns are the basis of `U`.
    pub inclusion: Matrix,
}

impl QuotientAlgebra {
    /// The operator induced on `A/I` by an operator preserving `I`.
    pub fn induced(&self, op: &Matrix) -> Matrix {
        &(&self.projection * op) * &self.section
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }

    pub fn lift(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.section.apply(v)
    }
}

impl Subalgebra {
    /// Coordinates in the subalgebra basis of a vector of `U`.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.space.coordinates(v)
    }

    /// Restriction of an operator preserving `U`.
    pub fn restricted(&self, op: &Matrix) -> Result<Matrix> {
        let cols: Result<Vec<Vec<Scalar>>> = self
            .space
            .basis()
            .iter()
            .map(|b| {
                self.space
                    .coordinates(&op.apply(b))
                    .ok_or_else(|| Error::InvalidInput("operator does not preserve the subalgebra".into()))
            })
            .collect();
        Ok(Matrix::from_columns(op.field(), self.space.dim(), &cols?))
    }
}

impl Algebra {
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientAlgebra> {
        if !self.is_ideal(ideal) {
            return Err(Error::InvalidInput(
                "quotient by a subspace that is not an ideal".into(),
            ));
        }
        let field = self.field().clone();
        let n = self.dim();
        let mut is_pivot = vec![false; n];
        for &p in ideal.pivots() {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let k = free.len();
        // Reduction modulo the rref basis leaves support on free coordinates.
        let proj_cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| {
                let r = ideal.reduce(&self.basis_vector(j));
                free.iter().map(|&f| r[f].clone()).collect()
            })
            .collect();
        let projection = Matrix::from_columns(&field, k, &proj_cols);
        let section = Matrix::from_fn(
            &field,
            n,
            k,
            |r, c| if free[c] == r { field.one() } else { field.zero() },
        );
        let names: Vec<String> = free.iter().map(|&f| format!("[{}]", self.names()[f])).collect();
        let algebra = Algebra::from_fn(&field, self.kind(), k, names, |i, j| {
            projection.apply(self.basis_product(free[i], free[j]))
        });
        Ok(QuotientAlgebra {
            algebra,
            ideal: ideal.clone(),
            projection,
            section,
        })
    }

    pub fn subalgebra(&self, space: &Subspace) -> Result<Subalgebra> {
        if !self.is_subalgebra(space) {
            return Err(Error::InvalidInput("subspace is not closed under the product".into()));
        }
        let field = self.field().clone();
        let basis = space.basis().to_vec();
        let k = basis.len();
        let algebra = Algebra::from_fn(
            &field,
            self.kind(),
            k,
            (1..=k).map(|i| format!("u{i}")).collect(),
            |i, j| space.coordinates(&self.mul(&basis[i], &basis[j])).expect("closed"),
        );
        Ok(Subalgebra {
            algebra,
            space: space.clone(),
            inclusion: Matrix::from_columns(&field, self.dim(), &basis),
        })
    }
}
