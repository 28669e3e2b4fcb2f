//! Structure-constant algebras.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_math::matrix::{axpy, unit_vector, vec_is_zero};
use crate::exact_math::meataxe::close_subspace;
use crate::exact_math::{Field, Matrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Associative,
    Lie,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Associative => write!(f, "associative"),
            AlgebraKind::Lie => write!(f, "lie"),
        }
    }
}

/// Outcome of an exhaustive check on basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    /// Number of basis tuples examined.
    pub checked: usize,
    /// Human-readable description of the first failure.
    pub violation: Option<String>,
}

impl ValidationReport {
    pub(crate) fn ok(checked: usize) -> Self {
        ValidationReport {
            valid: true,
            checked,
            violation: None,
        }
    }

    pub(crate) fn fail(checked: usize, msg: String) -> Self {
        ValidationReport {
            valid: false,
            checked,
            violation: Some(msg),
        }
    }

    /// Turns a failed report into a validation error.
    pub fn into_result(self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::Validation(v)),
        }
    }
}

/// A finite-dimensional algebra given by structure constants:
/// `e_i * e_j = sum_k c[i][j][k] e_k` (the bracket for Lie algebras).
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    kind: AlgebraKind,
    dim: usize,
    /// `table[i * dim + j]` is the coordinate vector of `e_i * e_j`.
    table: Vec<Vec<Scalar>>,
    names: Vec<String>,
}

impl Algebra {
    /// Builds an algebra from `table[i][j][k]`; checks shapes only.
    pub fn new(
        field: &Field,
        kind: AlgebraKind,
        table: Vec<Vec<Vec<Scalar>>>,
        names: Option<Vec<String>>,
    ) -> Result<Algebra> {
        let dim = table.len();
        let mut flat = Vec::with_capacity(dim * dim);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::dim(format!(
                    "table row {i} has {} entries (expected {dim})",
                    row.len()
                )));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::dim(format!(
                        "product e{}*e{} has {} coordinates (expected {dim})",
                        i + 1,
                        j + 1,
                        v.len()
                    )));
                }
                for x in &v {
                    field.check(x.field())?;
                }
                flat.push(v);
            }
        }
        let names = match names {
            Some(n) if n.len() == dim => n,
            Some(n) => return Err(Error::dim(format!("{} basis names for dimension {dim}", n.len()))),
            None => (1..=dim).map(|i| format!("e{i}")).collect(),
        };
        Ok(Algebra {
            field: field.clone(),
            kind,
            dim,
            table: flat,
            names,
        })
    }

    /// Builds an algebra from a product function on basis indices.
    pub fn from_fn(
        field: &Field,
        kind: AlgebraKind,
        dim: usize,
        names: Vec<String>,
        mut f: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Algebra {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                table.push(f(i, j));
            }
        }
        Algebra {
            field: field.clone(),
            kind,
            dim,
            table,
            names,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The algebra with scalars extended to `target`.
    pub fn extend_scalars(&self, target: &Field) -> Result<Algebra> {
        let table = self
            .table
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| self.field.embed(x, target))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Algebra {
            field: target.clone(),
            kind: self.kind,
            dim: self.dim,
            table,
            names: self.names.clone(),
        })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn is_lie(&self) -> bool {
        self.kind == AlgebraKind::Lie
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Coordinates of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim + j]
    }

    /// Structure constants as nested vectors `c[i][j][k]`.
    pub fn table(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(&self.field, self.dim, i)
    }

    /// The product (or bracket) of two coordinate vectors.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    /// Left multiplication `L_x` (the adjoint map for Lie algebras).
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Right multiplication `R_x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// `L_{e_i}` for every basis element.
    pub fn left_mults(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| {
                Matrix::from_fn(&self.field, self.dim, self.dim, |r, c| {
                    self.basis_product(i, c)[r].clone()
                })
            })
            .collect()
    }

    /// `R_{e_i}` for every basis element.
    pub fn right_mults(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| {
                Matrix::from_fn(&self.field, self.dim, self.dim, |r, c| {
                    self.basis_product(c, i)[r].clone()
                })
            })
            .collect()
    }

    /// Multiplication operators whose common invariant subspaces are the
    /// two-sided ideals.
    pub fn multiplication_operators(&self) -> Vec<Matrix> {
        match self.kind {
            AlgebraKind::Lie => self.left_mults(),
            AlgebraKind::Associative => {
                let mut ops = self.left_mults();
                ops.extend(self.right_mults());
                ops
            }
        }
    }

    fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Exhaustive check of associativity, or anticommutativity and Jacobi.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut checked = 0;
        match self.kind {
            AlgebraKind::Associative => {
                for i in 0..n {
                    for j in 0..n {
                        let ij = self.basis_product(i, j).to_vec();
                        for k in 0..n {
                            checked += 1;
                            let lhs = self.mul(&ij, &self.basis_vector(k));
                            let rhs = self.mul(&self.basis_vector(i), self.basis_product(j, k));
                            if lhs != rhs {
                                return ValidationReport::fail(
                                    checked,
                                    format!(
                                        "associativity fails on ({a}, {b}, {c}): ({a}{b}){c} = {} but {a}({b}{c}) = {}",
                                        self.render(&lhs),
                                        self.render(&rhs),
                                        a = self.name(i),
                                        b = self.name(j),
                                        c = self.name(k),
                                    ),
                                );
                            }
                        }
                    }
                }
            }
            AlgebraKind::Lie => {
                for i in 0..n {
                    for j in i..n {
                        checked += 1;
                        let sum: Vec<Scalar> = self
                            .basis_product(i, j)
                            .iter()
                            .zip(self.basis_product(j, i))
                            .map(|(a, b)| a + b)
                            .collect();
                        if !vec_is_zero(&sum) {
                            let msg = if i == j {
                                format!(
                                    "[{a}, {a}] = {} is not zero",
                                    self.render(self.basis_product(i, i)),
                                    a = self.name(i)
                                )
                            } else {
                                format!(
                                    "anticommutativity fails on ({a}, {b}): [{a}, {b}] + [{b}, {a}] = {}",
                                    self.render(&sum),
                                    a = self.name(i),
                                    b = self.name(j)
                                )
                            };
                            return ValidationReport::fail(checked, msg);
                        }
                    }
                }
                for i in 0..n {
                    for j in i + 1..n {
                        for k in j + 1..n {
                            checked += 1;
                            let (a, b, c) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                            let t1 = self.mul(&self.mul(&a, &b), &c);
                            let t2 = self.mul(&self.mul(&b, &c), &a);
                            let t3 = self.mul(&self.mul(&c, &a), &b);
                            let s: Vec<Scalar> = t1
                                .iter()
                                .zip(&t2)
                                .zip(&t3)
                                .map(|((x, y), z)| x + y + z.clone())
                                .collect();
                            if !vec_is_zero(&s) {
                                return ValidationReport::fail(
                                    checked,
                                    format!(
                                        "Jacobi identity fails on ({}, {}, {}): sum = {}",
                                        self.name(i),
                                        self.name(j),
                                        self.name(k),
                                        self.render(&s)
                                    ),
                                );
                            }
                        }
                    }
                }
            }
        }
        ValidationReport::ok(checked)
    }

    /// Renders a coordinate vector as a linear combination of basis names.
    pub fn render(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.names[i].clone()
                } else if c.coeffs().len() > 1 {
                    format!("({c})*{}", self.names[i])
                } else {
                    format!("{c}*{}", self.names[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(&self.field, self.dim)
    }

    pub fn full_subspace(&self) -> Subspace {
        Subspace::full(&self.field, self.dim)
    }

    /// Span of all products `u v` with `u` in `U`, `v` in `V`.
    pub fn product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        if u.ambient_dim() != self.dim || v.ambient_dim() != self.dim {
            return Err(Error::dim("subspace ambient dimension differs from the algebra"));
        }
        let mut prods = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis() {
            for b in v.basis() {
                let p = self.mul(a, b);
                if !vec_is_zero(&p) {
                    prods.push(p);
                }
            }
        }
        Ok(Subspace::span(&self.field, self.dim, &prods))
    }

    /// Smallest two-sided ideal containing the given vectors.
    pub fn ideal_generated(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        close_subspace(&self.field, &self.multiplication_operators(), vectors, self.dim)
    }

    pub fn is_ideal(&self, u: &Subspace) -> bool {
        self.multiplication_operators().iter().all(|m| u.is_invariant_under(m))
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> bool {
        u.basis()
            .iter()
            .all(|a| u.basis().iter().all(|b| u.contains_vector(&self.mul(a, b))))
    }

    /// `I^1 = I`, `I^{k+1} = I^k I`; for Lie algebras the lower central
    /// series of the ideal, `I^{k+1} = [I^k, I]`. Stops at zero or when the
    /// sequence stabilizes.
    pub fn powers(&self, ideal: &Subspace) -> Result<Vec<Subspace>> {
        let mut out = vec![ideal.clone()];
        loop {
            let last = out.last().unwrap();
            if last.is_zero() {
                break;
            }
            let next = self.product(last, ideal)?;
            if &next == last {
                break;
            }
            out.push(next);
        }
        Ok(out)
    }

    /// Least `p` with `I^p = 0`, or `None` if the powers stabilize above zero.
    pub fn nilpotency_index(&self, ideal: &Subspace) -> Result<Option<usize>> {
        let pw = self.powers(ideal)?;
        Ok(if pw.last().unwrap().is_zero() {
            Some(pw.len())
        } else {
            None
        })
    }

    /// Derived series `D_1 = I`, `D_{k+1} = [D_k, D_k]`, until it stabilizes.
    pub fn derived_series(&self, ideal: &Subspace) -> Result<Vec<Subspace>> {
        let mut out = vec![ideal.clone()];
        loop {
            let last = out.last().unwrap();
            if last.is_zero() {
                break;
            }
            let next = self.product(last, last)?;
            if &next == last {
                break;
            }
            out.push(next);
        }
        Ok(out)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} algebra of dimension {} over Q(z{})",
            self.kind,
            self.dim,
            self.field.conductor()
        )?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.basis_product(i, j);
                if !vec_is_zero(p) {
                    writeln!(f, "  {} * {} = {}", self.names[i], self.names[j], self.render(p))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::constructions::{matrix_algebra, sl2, upper_triangular};

    #[test]
    fn classical_algebras_validate() {
        let q = Field::rationals();
        assert!(matrix_algebra(&q, 2).validate().valid);
        assert!(sl2(&q).validate().valid);
    }

    #[test]
    fn constructed_counterexample_names_the_triple() {
        let q = Field::rationals();
        let (o, z) = (q.one(), q.zero());
        let table = vec![
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
            vec![vec![o.clone(), z.clone()], vec![z.clone(), z.clone()]],
        ];
        let a = Algebra::new(&q, AlgebraKind::Associative, table, None).unwrap();
        let r = a.validate();
        assert!(!r.valid);
        assert!(r.violation.unwrap().contains("(e1, e1, e1)"));
    }

    #[test]
    fn products_in_ut2() {
        let q = Field::rationals();
        let a = upper_triangular(&q, 2); // basis e11, e12, e22
        let s = |i: &[usize]| Subspace::coordinate(&q, 3, i);
        assert_eq!(a.product(&s(&[0]), &s(&[1])).unwrap(), s(&[1]));
        assert!(a.product(&s(&[1]), &s(&[1])).unwrap().is_zero());
        assert!(a.product(&s(&[2]), &s(&[1])).unwrap().is_zero());
    }
}
