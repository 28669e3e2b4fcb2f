//! Lie algebras acting by derivations.

use crate::algebra_core::{Algebra, ValidationReport};
use crate::exact_math::matrix::vec_sub;
use crate::exact_math::{Echelon, Matrix, Scalar};

#[derive(Clone, Debug)]
pub struct DerivationAction {
    generators: Vec<Matrix>,
    /// Whether the span of the generators is required to be a Lie algebra.
    require_closure: bool,
}

impl DerivationAction {
    pub fn new(generators: Vec<Matrix>) -> DerivationAction {
        DerivationAction {
            generators,
            require_closure: false,
        }
    }

    pub fn with_closure_check(mut self, on: bool) -> DerivationAction {
        self.require_closure = on;
        self
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn map_matrices(&self, f: impl Fn(&Matrix) -> Matrix) -> DerivationAction {
        DerivationAction {
            generators: self.generators.iter().map(f).collect(),
            require_closure: self.require_closure,
        }
    }

    /// Leibniz rule on all basis pairs, and optionally closure of the span
    /// under commutators.
    pub fn validate(&self, a: &Algebra) -> ValidationReport {
        let n = a.dim();
        let mut checked = 0;
        for (k, d) in self.generators.iter().enumerate() {
            if d.rows() != n || d.cols() != n {
                return ValidationReport::fail(checked, format!("derivation {k} is not {n} x {n}"));
            }
            let images: Vec<Vec<Scalar>> = (0..n).map(|i| d.column(i)).collect();
            for i in 0..n {
                for j in 0..n {
                    checked += 1;
                    let lhs = d.apply(a.basis_product(i, j));
                    let mut rhs = a.mul(&images[i], &a.basis_vector(j));
                    for (r, s) in rhs.iter_mut().zip(a.mul(&a.basis_vector(i), &images[j])) {
                        *r += &s;
                    }
                    if lhs != rhs {
                        return ValidationReport::fail(
                            checked,
                            format!(
                                "Leibniz rule fails for derivation {k} on ({}, {}): defect {}",
                                a.names()[i],
                                a.names()[j],
                                a.render(&vec_sub(&lhs, &rhs))
                            ),
                        );
                    }
                }
            }
        }
        if self.require_closure && !self.generators.is_empty() {
            let mut span = Echelon::new(a.field(), n * n);
            for d in &self.generators {
                span.push(d.entries());
            }
            for (i, x) in self.generators.iter().enumerate() {
                for y in &self.generators[i + 1..] {
                    checked += 1;
                    if !span.contains(x.commutator(y).entries()) {
                        return ValidationReport::fail(
                            checked,
                            "derivations are not closed under the commutator".into(),
                        );
                    }
                }
            }
        }
        ValidationReport::ok(checked)
    }
}
