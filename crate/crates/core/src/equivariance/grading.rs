//! Gradings by finitely generated abelian groups `Z^a x Z_{m_1} x ...`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra_core::{Algebra, ValidationReport};
use crate::error::{Error, Result};
use crate::exact_math::matrix::vec_is_zero;
use crate::exact_math::{Matrix, Scalar, Subspace};

/// A group element as an integer tuple.
pub type Label = Vec<i64>;

/// `Z^a x prod Z_{m_i}`, one modulus per coordinate (`0` for `Z`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingGroup {
    pub moduli: Vec<u64>,
}

impl GradingGroup {
    pub fn new(moduli: Vec<u64>) -> GradingGroup {
        GradingGroup { moduli }
    }

    pub fn cyclic(m: u64) -> GradingGroup {
        GradingGroup { moduli: vec![m] }
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn normalize(&self, g: &[i64]) -> Label {
        g.iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| if m == 0 { x } else { x.rem_euclid(m as i64) })
            .collect()
    }

    pub fn add(&self, g: &[i64], h: &[i64]) -> Label {
        let s: Vec<i64> = g.iter().zip(h).map(|(a, b)| a + b).collect();
        self.normalize(&s)
    }

    pub fn identity(&self) -> Label {
        vec![0; self.moduli.len()]
    }
}

/// A grading `A = sum_g A^(g)`.
#[derive(Clone, Debug)]
pub struct Grading {
    group: GradingGroup,
    components: BTreeMap<Label, Subspace>,
}

impl Grading {
    /// Builds a grading from labelled components; labels are normalized and
    /// repeated labels are merged.
    pub fn new(group: GradingGroup, components: Vec<(Label, Subspace)>) -> Result<Grading> {
        let mut map: BTreeMap<Label, Subspace> = BTreeMap::new();
        for (label, space) in components {
            if label.len() != group.rank() {
                return Err(Error::InvalidInput(format!(
                    "label {label:?} has {} coordinates, the group has rank {}",
                    label.len(),
                    group.rank()
                )));
            }
            let key = group.normalize(&label);
            let merged = match map.remove(&key) {
                Some(prev) => prev.sum(&space)?,
                None => space,
            };
            map.insert(key, merged);
        }
        Ok(Grading { group, components: map })
    }

    /// Grading by coordinate blocks: `labels[i]` is the degree of `e_i`.
    pub fn from_basis_labels(a: &Algebra, group: GradingGroup, labels: &[Label]) -> Result<Grading> {
        if labels.len() != a.dim() {
            return Err(Error::dim("one label per basis element is required"));
        }
        let mut by_label: BTreeMap<Label, Vec<usize>> = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            by_label.entry(group.normalize(l)).or_default().push(i);
        }
        let comps = by_label
            .into_iter()
            .map(|(l, idx)| (l, Subspace::coordinate(a.field(), a.dim(), &idx)))
            .collect();
        Grading::new(group, comps)
    }

    /// The trivial grading with everything in degree zero.
    pub fn trivial(a: &Algebra, group: GradingGroup) -> Grading {
        let id = group.identity();
        Grading {
            group,
            components: BTreeMap::from([(id, a.full_subspace())]),
        }
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    /// All components, including zero ones that were supplied.
    pub fn components(&self) -> impl Iterator<Item = (&Label, &Subspace)> {
        self.components.iter()
    }

    /// Labels with a nonzero component, in sorted order.
    pub fn support(&self) -> Vec<Label> {
        self.components
            .iter()
            .filter(|(_, s)| !s.is_zero())
            .map(|(l, _)| l.clone())
            .collect()
    }

    pub fn component(&self, g: &[i64]) -> Option<&Subspace> {
        self.components.get(&self.group.normalize(g))
    }

    /// Checks that the components sum directly to `A` and multiply
    /// according to the group law.
    pub fn validate(&self, a: &Algebra) -> ValidationReport {
        let mut total = a.zero_subspace();
        let mut dims = 0;
        for s in self.components.values() {
            if s.ambient_dim() != a.dim() {
                return ValidationReport::fail(0, "component ambient dimension differs from the algebra".into());
            }
            dims += s.dim();
            total = total.sum(s).expect("same ambient");
        }
        if dims != total.dim() {
            return ValidationReport::fail(0, "components overlap".into());
        }
        if !total.is_full() {
            return ValidationReport::fail(0, format!("components span dimension {} of {}", total.dim(), a.dim()));
        }
        let mut checked = 0;
        for (g, ag) in &self.components {
            for (h, ah) in &self.components {
                let target = self.group.add(g, h);
                let tgt = self.components.get(&target);
                for x in ag.basis() {
                    for y in ah.basis() {
                        checked += 1;
                        let p = a.mul(x, y);
                        let ok = match tgt {
                            Some(t) => t.contains_vector(&p),
                            None => vec_is_zero(&p),
                        };
                        if !ok {
                            return ValidationReport::fail(
                                checked,
                                format!(
                                    "product of degree {g:?} element {} and degree {h:?} element {} is {} which is not in degree {target:?}",
                                    a.render(x),
                                    a.render(y),
                                    a.render(&p)
                                ),
                            );
                        }
                    }
                }
            }
        }
        ValidationReport::ok(checked)
    }

    /// A basis of `A` adapted to the grading (components concatenated in
    /// label order) as the columns of a matrix, with the label of each column.
    pub fn homogeneous_basis(&self) -> (Vec<Vec<Scalar>>, Vec<Label>) {
        let mut vecs = Vec::new();
        let mut labels = Vec::new();
        for (l, s) in &self.components {
            for v in s.basis() {
                vecs.push(v.clone());
                labels.push(l.clone());
            }
        }
        (vecs, labels)
    }

    /// Projection operators onto each support component along the others.
    pub fn projections(&self, a: &Algebra) -> Vec<(Label, Matrix)> {
        let (vecs, labels) = self.homogeneous_basis();
        let field = a.field();
        let basis = Matrix::from_columns(field, a.dim(), &vecs);
        let inv = basis.inverse().expect("grading components form a basis");
        self.support()
            .into_iter()
            .map(|g| {
                let diag = Matrix::from_fn(field, vecs.len(), vecs.len(), |i, j| {
                    if i == j && labels[i] == g {
                        field.one()
                    } else {
                        field.zero()
                    }
                });
                (g, &(&basis * &diag) * &inv)
            })
            .collect()
    }

    /// Whether a subspace is graded (the sum of its homogeneous parts).
    pub fn is_graded_subspace(&self, u: &Subspace, a: &Algebra) -> bool {
        self.projections(a).iter().all(|(_, p)| u.is_invariant_under(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::constructions::matrix_algebra;
    use crate::exact_math::Field;

    fn z2_m2() -> (Algebra, Grading) {
        let q = Field::rationals();
        let a = matrix_algebra(&q, 2);
        let g = Grading::from_basis_labels(&a, GradingGroup::cyclic(2), &[vec![0], vec![1], vec![1], vec![0]]).unwrap();
        (a, g)
    }

    #[test]
    fn diagonal_offdiagonal_grading_is_valid() {
        let (a, g) = z2_m2();
        assert!(g.validate(&a).valid);
        assert_eq!(g.support(), vec![vec![0], vec![1]]);
        let projs = g.projections(&a);
        let sum = &projs[0].1 + &projs[1].1;
        assert!(sum.is_identity());
    }

    #[test]
    fn bad_gradings_are_reported() {
        let (a, _) = z2_m2();
        let q = a.field().clone();
        let bad =
            Grading::from_basis_labels(&a, GradingGroup::cyclic(2), &[vec![0], vec![1], vec![0], vec![0]]).unwrap();
        assert!(!bad.validate(&a).valid);
        let overlap = Grading::new(
            GradingGroup::cyclic(2),
            vec![
                (vec![0], Subspace::coordinate(&q, 4, &[0, 1, 3])),
                (vec![1], Subspace::coordinate(&q, 4, &[1, 2])),
            ],
        )
        .unwrap();
        assert_eq!(overlap.validate(&a).violation.as_deref(), Some("components overlap"));
    }
}
