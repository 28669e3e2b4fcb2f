//! Subspaces of a coordinate space, stored in canonical reduced row echelon
//! form so that equal subspaces are structurally equal.

use std::fmt;

use super::echelon::Echelon;
use super::field::{Field, Scalar};
use super::matrix::{kernel_from_rref, Matrix};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        let basis = (0..ambient)
            .map(|i| super::matrix::unit_vector(field, ambient, i))
            .collect();
        Subspace {
            field: field.clone(),
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(field: &Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let mut e = Echelon::new(field, ambient);
        if vectors.len() > 64 {
            for block in vectors.chunks(64) {
                e.extend_parallel(block);
            }
        } else {
            for v in vectors {
                e.push(v);
            }
        }
        Subspace::from_echelon(&e)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: &Field, ambient: usize, indices: &[usize]) -> Subspace {
        let vs: Vec<Vec<Scalar>> = indices
            .iter()
            .map(|&i| super::matrix::unit_vector(field, ambient, i))
            .collect();
        Subspace::span(field, ambient, &vs)
    }

    pub(crate) fn from_echelon(e: &Echelon) -> Subspace {
        let (basis, pivots) = e.rref();
        Subspace {
            field: e.field().clone(),
            ambient: e.cols(),
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis as the rows of a matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.field, self.ambient, self.basis.clone()).expect("consistent rows")
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::dim(format!(
                "ambient dimensions {} and {} differ",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut e = Echelon::new(&self.field, self.ambient);
        for v in self.basis.iter().chain(&other.basis) {
            e.push(v);
        }
        Ok(Subspace::from_echelon(&e))
    }

    /// Orthogonal complement for the standard (bilinear) dot product.
    pub fn orthogonal(&self) -> Subspace {
        let basis = kernel_from_rref(&self.field, self.ambient, &self.basis, &self.pivots);
        Subspace::span(&self.field, self.ambient, &basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        Ok(self.orthogonal().sum(&other.orthogonal())?.orthogonal())
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        // Reduce against the rref basis: coordinates are the pivot entries.
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                super::matrix::axpy(&mut r, &-c, b);
            }
        }
        super::matrix::vec_is_zero(&r)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    /// A subspace `C` of `w` with `(self ∩ w) ⊕ C = w`, built greedily from
    /// the basis of `w`.
    pub fn complement_in(&self, w: &Subspace) -> Result<Subspace> {
        self.check(w)?;
        let inside = self.intersect(w)?;
        let mut e = Echelon::new(&self.field, self.ambient);
        for v in inside.basis() {
            e.push(v);
        }
        let mut chosen = Vec::new();
        for v in w.basis() {
            if e.push(v) {
                chosen.push(v.clone());
            }
        }
        Ok(Subspace::span(&self.field, self.ambient, &chosen))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (b, c) in self.basis.iter().zip(&coords) {
            super::matrix::axpy(&mut r, &-c, b);
        }
        super::matrix::vec_is_zero(&r).then_some(coords)
    }

    /// Image under a linear map given by a matrix acting on column vectors.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vec<Scalar>> = self.basis.iter().map(|v| m.apply(v)).collect();
        Subspace::span(&self.field, m.rows(), &vs)
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|v| self.contains_vector(&m.apply(v)))
    }

    /// Projection of `v` onto coordinates of the quotient `F^n / self`,
    /// i.e. the remainder after reduction against the basis.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                super::matrix::axpy(&mut r, &-c, b);
            }
        }
        r
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) [", self.dim(), self.ambient)?;
        for v in &self.basis {
            let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, " ({})", s.join(", "))?;
        }
        write!(f, " ]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_examples() {
        let q = Field::rationals();
        let e1 = Subspace::coordinate(&q, 3, &[0]);
        let e2 = Subspace::coordinate(&q, 3, &[1]);
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
        let u = Subspace::coordinate(&q, 3, &[0, 1]);
        let v = Subspace::coordinate(&q, 3, &[1, 2]);
        assert_eq!(u.intersect(&v).unwrap(), e2);
        assert!(u.contains_vector(&[q.one(), q.one(), q.zero()]));
        assert!(!u.contains_vector(&[q.zero(), q.zero(), q.one()]));
    }

    #[test]
    fn complement_and_coordinates() {
        let q = Field::rationals();
        let u = Subspace::coordinate(&q, 3, &[0]);
        let w = Subspace::full(&q, 3);
        let c = u.complement_in(&w).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(u.intersect(&c).unwrap().is_zero());
        let s = Subspace::span(&q, 3, &[vec![q.one(), q.from_int(2), q.zero()]]);
        let coords = s.coordinates(&[q.from_int(3), q.from_int(6), q.zero()]).unwrap();
        assert_eq!(coords, vec![q.from_int(3)]);
        assert!(s.coordinates(&[q.one(), q.zero(), q.zero()]).is_none());
    }

    #[test]
    fn mismatched_ambient_is_error() {
        let q = Field::rationals();
        assert!(Subspace::zero(&q, 2).sum(&Subspace::zero(&q, 3)).is_err());
    }
}
