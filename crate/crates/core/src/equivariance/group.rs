//! Finite groups acting by automorphisms and anti-automorphisms.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::algebra_core::{Algebra, ValidationReport};
use crate::error::{Error, Result};
use crate::exact_math::matrix::vec_sub;
use crate::exact_math::{Field, Matrix, Scalar};

/// Default bound on the order of a generated group.
pub const DEFAULT_GROUP_BOUND: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Automorphism,
    AntiAutomorphism,
}

impl Parity {
    pub fn compose(self, other: Parity) -> Parity {
        if self == other {
            Parity::Automorphism
        } else {
            Parity::AntiAutomorphism
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub matrix: Matrix,
    pub parity: Parity,
}

impl GroupElement {
    pub fn new(matrix: Matrix, parity: Parity) -> GroupElement {
        GroupElement { matrix, parity }
    }

    pub fn automorphism(matrix: Matrix) -> GroupElement {
        GroupElement::new(matrix, Parity::Automorphism)
    }

    pub fn anti(matrix: Matrix) -> GroupElement {
        GroupElement::new(matrix, Parity::AntiAutomorphism)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            matrix: &self.matrix * &other.matrix,
            parity: self.parity.compose(other.parity),
        }
    }

    fn key(&self) -> (Vec<Scalar>, Parity) {
        (self.matrix.entries().to_vec(), self.parity)
    }
}

/// A finite group `G` of (anti-)automorphisms, stored with all elements, the
/// multiplication table and the subgroup `G_0` of automorphisms.
#[derive(Clone, Debug)]
pub struct GroupAction {
    generators: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

impl GroupAction {
    /// Closes the generators under composition, failing once more than
    /// `bound` elements appear.
    pub fn generate(field: &Field, dim: usize, generators: Vec<GroupElement>, bound: usize) -> Result<GroupAction> {
        for g in &generators {
            if g.matrix.rows() != dim || g.matrix.cols() != dim {
                return Err(Error::dim(format!("group generator is not {dim} x {dim}")));
            }
            if g.matrix.inverse().is_none() {
                return Err(Error::InvalidInput("group generator is not invertible".into()));
            }
        }
        let id = GroupElement::automorphism(Matrix::identity(field, dim));
        let mut index: HashMap<(Vec<Scalar>, Parity), usize> = HashMap::new();
        index.insert(id.key(), 0);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let h = g.compose(&elements[i]);
                let key = h.key();
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(key) {
                    if elements.len() >= bound {
                        return Err(Error::GroupTooLarge(bound));
                    }
                    e.insert(elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b).key()]).collect())
            .collect();
        let inverses = table
            .iter()
            .map(|row| row.iter().position(|&k| k == 0).expect("finite group"))
            .collect();
        Ok(GroupAction {
            generators,
            elements,
            table,
            inverses,
        })
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Index of `elements[i] ∘ elements[j]`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Indices of the automorphisms, the subgroup `G_0` of index at most 2.
    pub fn even_part(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| self.elements[i].parity == Parity::Automorphism)
            .collect()
    }

    pub fn has_anti(&self) -> bool {
        self.elements.iter().any(|g| g.parity == Parity::AntiAutomorphism)
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        self.elements.iter().map(|g| g.matrix.clone()).collect()
    }

    /// Same group with every element replaced by `f(matrix)`; the table is
    /// kept, so `f` must be multiplicative (e.g. an induced action).
    pub fn map_matrices(&self, f: impl Fn(&Matrix) -> Matrix) -> GroupAction {
        let conv = |g: &GroupElement| GroupElement::new(f(&g.matrix), g.parity);
        GroupAction {
            generators: self.generators.iter().map(conv).collect(),
            elements: self.elements.iter().map(conv).collect(),
            table: self.table.clone(),
            inverses: self.inverses.clone(),
        }
    }

    /// Checks that each generator respects (or reverses) the product.
    pub fn validate(&self, a: &Algebra) -> ValidationReport {
        let mut checked = 0;
        for (gi, g) in self.generators.iter().enumerate() {
            let images: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| g.matrix.column(i)).collect();
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    checked += 1;
                    let lhs = g.matrix.apply(a.basis_product(i, j));
                    let rhs = match g.parity {
                        Parity::Automorphism => a.mul(&images[i], &images[j]),
                        Parity::AntiAutomorphism => a.mul(&images[j], &images[i]),
                    };
                    if lhs != rhs {
                        let what = match g.parity {
                            Parity::Automorphism => "automorphism",
                            Parity::AntiAutomorphism => "anti-automorphism",
                        };
                        return ValidationReport::fail(
                            checked,
                            format!(
                                "generator {gi} is not an {what}: image of {}*{} differs by {}",
                                a.names()[i],
                                a.names()[j],
                                a.render(&vec_sub(&lhs, &rhs))
                            ),
                        );
                    }
                }
            }
        }
        ValidationReport::ok(checked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::constructions::matrix_algebra;

    fn diag(field: &Field, entries: &[i64]) -> Matrix {
        Matrix::from_fn(field, entries.len(), entries.len(), |i, j| {
            if i == j {
                field.from_int(entries[i])
            } else {
                field.zero()
            }
        })
    }

    #[test]
    fn sign_action_and_transpose_on_m2() {
        let q = Field::rationals();
        let a = matrix_algebra(&q, 2);
        let psi = GroupElement::automorphism(diag(&q, &[1, -1, -1, 1]));
        let transpose = GroupElement::anti(Matrix::from_ints(
            &q,
            &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]],
        ));
        let g = GroupAction::generate(&q, 4, vec![psi, transpose.clone()], DEFAULT_GROUP_BOUND).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.even_part().len(), 2);
        assert!(g.validate(&a).valid);
        for i in 0..g.order() {
            assert_eq!(g.product(i, g.inverse(i)), 0);
        }
        let wrong = GroupAction::generate(&q, 4, vec![GroupElement::automorphism(transpose.matrix)], 16).unwrap();
        assert!(!wrong.validate(&a).valid);
    }

    #[test]
    fn bound_is_enforced() {
        let q = Field::rationals();
        let g = GroupElement::automorphism(diag(&q, &[2]));
        assert!(matches!(
            GroupAction::generate(&q, 1, vec![g], 8),
            Err(Error::GroupTooLarge(8))
        ));
    }
}
