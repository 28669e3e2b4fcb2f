//! Radicals, nilradicals, centers and annihilators.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_math::meataxe::enveloping_algebra;
use crate::exact_math::{Matrix, Scalar, Subspace};

use super::algebra::{Algebra, AlgebraKind};

#[derive(Clone, Debug)]
pub struct RadicalReport {
    /// `J(A)` for associative algebras, the solvable radical for Lie algebras.
    pub radical: Subspace,
    /// Least `p` with `J^p = 0`; for Lie algebras the length of the derived
    /// series of `R` (least `p` with `R^(p) = 0`, counting `R^(1) = R`).
    pub nilpotency_index: usize,
    pub semisimple_quotient_dim: usize,
}

#[derive(Serialize)]
pub struct RadicalSummary {
    pub dim: usize,
    pub nilpotency_index: usize,
    pub semisimple_quotient_dim: usize,
    pub basis: Vec<String>,
}

impl RadicalReport {
    pub fn summary(&self, a: &Algebra) -> RadicalSummary {
        RadicalSummary {
            dim: self.radical.dim(),
            nilpotency_index: self.nilpotency_index,
            semisimple_quotient_dim: self.semisimple_quotient_dim,
            basis: self.radical.basis().iter().map(|v| a.render(v)).collect(),
        }
    }
}

/// Vectors `x = sum c_i b_i` (with `b_i` the rows of `basis`) satisfying the
/// linear conditions whose values on `b_i` are `values[i]`.
fn solve_conditions(a: &Algebra, basis: &[Vec<Scalar>], values: &[Vec<Scalar>]) -> Subspace {
    let field = a.field();
    let rows = values.first().map_or(0, Vec::len);
    let m = Matrix::from_fn(field, rows, basis.len(), |r, c| values[c][r].clone());
    let ker = m.kernel();
    let vecs: Vec<Vec<Scalar>> = ker
        .basis()
        .iter()
        .map(|c| {
            let mut v = a.zero_vector();
            for (ci, b) in c.iter().zip(basis) {
                crate::exact_math::matrix::axpy(&mut v, ci, b);
            }
            v
        })
        .collect();
    Subspace::span(field, a.dim(), &vecs)
}

fn standard_basis(a: &Algebra) -> Vec<Vec<Scalar>> {
    (0..a.dim()).map(|i| a.basis_vector(i)).collect()
}

impl Algebra {
    /// Gram matrix of `tr(L_x L_y)` on the basis (the Killing form for Lie
    /// algebras).
    pub fn trace_form(&self) -> Matrix {
        let ls = self.left_mults();
        Matrix::from_fn(self.field(), self.dim(), self.dim(), |i, j| (&ls[i] * &ls[j]).trace())
    }

    /// Jacobson radical (associative) or solvable radical (Lie).
    pub fn radical(&self) -> Result<RadicalReport> {
        let basis = standard_basis(self);
        let gram = self.trace_form();
        let radical = match self.kind() {
            AlgebraKind::Associative => {
                // Kernel of tr(L_{xy}) over y in the unitization of A.
                let ls = self.left_mults();
                let values: Vec<Vec<Scalar>> = (0..self.dim())
                    .map(|i| {
                        let mut col: Vec<Scalar> = (0..self.dim()).map(|j| gram.get(i, j).clone()).collect();
                        col.push(ls[i].trace());
                        col
                    })
                    .collect();
                solve_conditions(self, &basis, &values)
            }
            AlgebraKind::Lie => {
                // [L, L] orthogonal for the Killing form.
                let derived = self.product(&self.full_subspace(), &self.full_subspace())?;
                let values: Vec<Vec<Scalar>> = (0..self.dim())
                    .map(|i| {
                        derived
                            .basis()
                            .iter()
                            .map(|d| crate::exact_math::matrix::dot(gram.row(i), d))
                            .collect()
                    })
                    .collect();
                if derived.is_zero() {
                    self.full_subspace()
                } else {
                    solve_conditions(self, &basis, &values)
                }
            }
        };
        let nilpotency_index = match self.kind() {
            AlgebraKind::Associative => self
                .nilpotency_index(&radical)?
                .ok_or_else(|| Error::Inconsistency("trace-form radical is not nilpotent".into()))?,
            AlgebraKind::Lie => {
                let series = self.derived_series(&radical)?;
                if !series.last().unwrap().is_zero() {
                    return Err(Error::Inconsistency("Killing-form radical is not solvable".into()));
                }
                series.len()
            }
        };
        if !self.is_ideal(&radical) {
            return Err(Error::Inconsistency("computed radical is not an ideal".into()));
        }
        Ok(RadicalReport {
            semisimple_quotient_dim: self.dim() - radical.dim(),
            radical,
            nilpotency_index,
        })
    }

    /// Largest nilpotent ideal of a Lie algebra: the elements `x` of the
    /// solvable radical whose `ad x` is nilpotent.
    pub fn nilradical(&self) -> Result<Subspace> {
        if self.kind() != AlgebraKind::Lie {
            return Err(Error::Unsupported("nilradical is defined here for Lie algebras".into()));
        }
        let r = self.radical()?.radical;
        if r.is_zero() {
            return Ok(r);
        }
        // ad(R) is simultaneously triangularizable, so ad x is nilpotent iff
        // tr(ad x * e) = 0 for all e in the unital algebra generated by ad(R).
        let ads: Vec<Matrix> = r.basis().iter().map(|x| self.left_mult(x)).collect();
        let env = enveloping_algebra(self.field(), self.dim(), &ads);
        let values: Vec<Vec<Scalar>> = ads
            .iter()
            .map(|ad| env.iter().map(|e| (ad * e).trace()).collect())
            .collect();
        let n = solve_conditions(self, r.basis(), &values);
        if !self.is_ideal(&n) {
            return Err(Error::Inconsistency("computed nilradical is not an ideal".into()));
        }
        if self.nilpotency_index(&n)?.is_none() {
            return Err(Error::Inconsistency("computed nilradical is not nilpotent".into()));
        }
        Ok(n)
    }

    pub fn center(&self) -> Subspace {
        let basis = standard_basis(self);
        let values: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|i| {
                (0..self.dim())
                    .flat_map(|j| {
                        let ij = self.basis_product(i, j);
                        let ji = self.basis_product(j, i);
                        match self.kind() {
                            AlgebraKind::Lie => ij.to_vec(),
                            AlgebraKind::Associative => ij.iter().zip(ji).map(|(a, b)| a - b).collect(),
                        }
                    })
                    .collect()
            })
            .collect();
        solve_conditions(self, &basis, &values)
    }

    /// `Ann(I/J)`: elements acting trivially on the module `I/J`
    /// (`[x, I] ⊆ J` for Lie algebras, `xI + Ix ⊆ J` for associative ones).
    pub fn annihilator(&self, i: &Subspace, j: &Subspace) -> Result<Subspace> {
        if !i.contains_subspace(j)? {
            return Err(Error::InvalidInput("J is not contained in I".into()));
        }
        let basis = standard_basis(self);
        let values: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|k| {
                let x = &basis[k];
                let mut out = Vec::new();
                for u in i.basis() {
                    out.extend(j.reduce(&self.mul(x, u)));
                    if self.kind() == AlgebraKind::Associative {
                        out.extend(j.reduce(&self.mul(u, x)));
                    }
                }
                out
            })
            .collect();
        if i.is_zero() {
            return Ok(self.full_subspace());
        }
        Ok(solve_conditions(self, &basis, &values))
    }
}
