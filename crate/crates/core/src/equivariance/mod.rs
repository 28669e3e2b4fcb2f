//! Gradings, group actions and derivation actions on algebras, under one
//! `Structure` type.

pub mod derivation;
pub mod envelope;
pub mod grading;
pub mod group;

pub use derivation::DerivationAction;
pub use envelope::OperatorAlgebra;
pub use grading::{Grading, GradingGroup, Label};
pub use group::{GroupAction, GroupElement, Parity, DEFAULT_GROUP_BOUND};

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_integer::Integer;

use crate::algebra_core::{Algebra, QuotientAlgebra, Subalgebra, ValidationReport};
use crate::error::{Error, Result};
use crate::exact_math::{Field, Matrix, Scalar, Subspace};

/// Largest character group enumerated by the dual action.
const MAX_DUAL_ENUMERATION: u64 = 1 << 20;

/// Extra structure on an algebra.
#[derive(Clone, Debug)]
pub enum Structure {
    Trivial,
    Grading(Grading),
    Group(GroupAction),
    Derivation(DerivationAction),
}

impl Structure {
    pub fn name(&self) -> &'static str {
        match self {
            Structure::Trivial => "trivial",
            Structure::Grading(_) => "grading",
            Structure::Group(_) => "group",
            Structure::Derivation(_) => "derivation",
        }
    }

    pub fn validate(&self, a: &Algebra) -> ValidationReport {
        match self {
            Structure::Trivial => ValidationReport::ok(0),
            Structure::Grading(g) => g.validate(a),
            Structure::Group(g) => g.validate(a),
            Structure::Derivation(d) => d.validate(a),
        }
    }

    /// Operators whose common invariant subspaces are exactly the
    /// structure-invariant subspaces (graded subspaces for a grading).
    pub fn operators(&self, a: &Algebra) -> Vec<Matrix> {
        match self {
            Structure::Trivial => Vec::new(),
            Structure::Grading(g) => g.projections(a).into_iter().map(|(_, p)| p).collect(),
            Structure::Group(g) => g.generators().iter().map(|e| e.matrix.clone()).collect(),
            Structure::Derivation(d) => d.generators().to_vec(),
        }
    }

    pub fn is_invariant(&self, a: &Algebra, u: &Subspace) -> bool {
        self.operators(a).iter().all(|op| u.is_invariant_under(op))
    }

    /// The operator algebra: span of the group, unital algebra generated by
    /// the derivations, or span of the homogeneous projections.
    pub fn envelope(&self, a: &Algebra) -> OperatorAlgebra {
        let field = a.field();
        let n = a.dim();
        match self {
            Structure::Trivial => OperatorAlgebra::span(field, n, &[Matrix::identity(field, n)]),
            Structure::Grading(g) => {
                let ps: Vec<Matrix> = g.projections(a).into_iter().map(|(_, p)| p).collect();
                OperatorAlgebra::span(field, n, &ps)
            }
            Structure::Group(g) => OperatorAlgebra::span(field, n, &g.matrices()),
            Structure::Derivation(d) => OperatorAlgebra::generated(field, n, d.generators()),
        }
    }

    /// The same structure over a larger field.
    pub fn extend_scalars(&self, a: &Algebra, target: &Field) -> Result<Structure> {
        let embed = |m: &Matrix| m.embed(target).expect("field embedding checked");
        // Fail early on an impossible embedding.
        a.field().embed(&a.field().one(), target)?;
        Ok(match self {
            Structure::Trivial => Structure::Trivial,
            Structure::Group(g) => Structure::Group(g.map_matrices(embed)),
            Structure::Derivation(d) => Structure::Derivation(d.map_matrices(embed)),
            Structure::Grading(g) => {
                let comps = g
                    .components()
                    .map(|(l, s)| {
                        let vecs: Vec<Vec<Scalar>> = s
                            .basis()
                            .iter()
                            .map(|v| v.iter().map(|x| a.field().embed(x, target)).collect::<Result<Vec<_>>>())
                            .collect::<Result<_>>()?;
                        Ok((l.clone(), Subspace::span(target, a.dim(), &vecs)))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Structure::Grading(Grading::new(g.group().clone(), comps)?)
            }
        })
    }

    /// The structure induced on `A/I` for an invariant ideal `I`.
    pub fn on_quotient(&self, a: &Algebra, q: &QuotientAlgebra) -> Result<Structure> {
        if !self.is_invariant(a, &q.ideal) {
            return Err(Error::InvalidInput("ideal is not invariant under the structure".into()));
        }
        Ok(match self {
            Structure::Trivial => Structure::Trivial,
            Structure::Group(g) => Structure::Group(g.map_matrices(|m| q.induced(m))),
            Structure::Derivation(d) => Structure::Derivation(d.map_matrices(|m| q.induced(m))),
            Structure::Grading(g) => {
                let field = a.field();
                let comps = g
                    .components()
                    .map(|(l, s)| {
                        let imgs: Vec<Vec<Scalar>> = s.basis().iter().map(|v| q.project(v)).collect();
                        (l.clone(), Subspace::span(field, q.algebra.dim(), &imgs))
                    })
                    .collect();
                Structure::Grading(Grading::new(g.group().clone(), comps)?)
            }
        })
    }

    /// The structure restricted to an invariant subalgebra.
    pub fn on_subalgebra(&self, a: &Algebra, s: &Subalgebra) -> Result<Structure> {
        if !self.is_invariant(a, &s.space) {
            return Err(Error::InvalidInput(
                "subalgebra is not invariant under the structure".into(),
            ));
        }
        Ok(match self {
            Structure::Trivial => Structure::Trivial,
            Structure::Group(g) => Structure::Group(g.map_matrices(|m| s.restricted(m).expect("invariant"))),
            Structure::Derivation(d) => Structure::Derivation(d.map_matrices(|m| s.restricted(m).expect("invariant"))),
            Structure::Grading(g) => {
                let field = a.field();
                let mut comps = Vec::new();
                for (l, c) in g.components() {
                    let part = c.intersect(&s.space)?;
                    let coords: Vec<Vec<Scalar>> = part
                        .basis()
                        .iter()
                        .map(|v| s.coords(v).expect("inside the subalgebra"))
                        .collect();
                    comps.push((l.clone(), Subspace::span(field, s.space.dim(), &coords)));
                }
                Structure::Grading(Grading::new(g.group().clone(), comps)?)
            }
        })
    }
}

/// Validates the algebra axioms and then the structure.
pub fn validate_structure(a: &Algebra, s: &Structure) -> ValidationReport {
    let base = a.validate();
    if !base.valid {
        return base;
    }
    let mut rep = s.validate(a);
    rep.checked += base.checked;
    rep
}

/// The action of the character group of the support subgroup of a grading:
/// a character `chi` acts on `A^(g)` by `chi(g)`. Needs the support group
/// to be finite and the field to contain a primitive root of unity of its
/// exponent.
pub fn dual_action_from_grading(a: &Algebra, grading: &Grading) -> Result<GroupAction> {
    let moduli = grading.group().moduli.clone();
    let support = grading.support();
    for l in &support {
        if l.iter().zip(&moduli).any(|(&x, &m)| m == 0 && x != 0) {
            return Err(Error::Unsupported(
                "support generates an infinite group; no finite dual action exists".into(),
            ));
        }
    }
    let finite: Vec<usize> = (0..moduli.len()).filter(|&i| moduli[i] != 0).collect();
    let group = grading.group();

    // Subgroup H generated by the support.
    let mut seen: HashSet<Label> = HashSet::from([group.identity()]);
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(h) = queue.pop_front() {
        for s in &support {
            let next = group.add(&h, s);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let order_of = |h: &Label| -> u64 {
        finite
            .iter()
            .fold(1u64, |acc, &i| acc.lcm(&(moduli[i] / (h[i] as u64).gcd(&moduli[i]))))
    };
    let exponent = seen.iter().map(order_of).fold(1u64, |acc, o| acc.lcm(&o));
    let field = a.field();
    let root = field
        .root_of_unity(exponent)
        .ok_or(Error::InsufficientField { required: exponent })?;

    let total: u64 = finite.iter().map(|&i| moduli[i]).product();
    if total > MAX_DUAL_ENUMERATION {
        return Err(Error::Unsupported(format!(
            "character enumeration over {total} elements is too large"
        )));
    }
    let projections = grading.projections(a);
    let mut chars: BTreeMap<Vec<u64>, Matrix> = BTreeMap::new();
    let mut k = vec![0u64; finite.len()];
    loop {
        // chi_k(h) = exp(2 pi i sum k_i h_i / m_i) = root^t.
        let exps: Vec<u64> = projections
            .iter()
            .map(|(l, _)| {
                let t: u64 = finite
                    .iter()
                    .zip(&k)
                    .map(|(&i, &ki)| (ki * l[i] as u64 % moduli[i]) * exponent / moduli[i])
                    .sum();
                t % exponent
            })
            .collect();
        chars.entry(exps.clone()).or_insert_with(|| {
            let mut m = Matrix::zeros(field, a.dim(), a.dim());
            for ((_, p), &t) in projections.iter().zip(&exps) {
                m = &m + &p.scale(&root.pow(t as u32));
            }
            m
        });
        let mut pos = 0;
        loop {
            if pos == k.len() {
                let gens = chars.into_values().map(GroupElement::automorphism).collect();
                let bound = (seen.len() + 1).max(DEFAULT_GROUP_BOUND);
                return GroupAction::generate(field, a.dim(), gens, bound);
            }
            k[pos] += 1;
            if k[pos] < moduli[finite[pos]] {
                break;
            }
            k[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::constructions::{inner_derivations, matrix_algebra, sl2, upper_triangular};
    use crate::exact_math::Field;

    #[test]
    fn dual_action_of_z2_grading() {
        let q = Field::rationals();
        let a = matrix_algebra(&q, 2);
        let g = Grading::from_basis_labels(&a, GradingGroup::cyclic(2), &[vec![0], vec![1], vec![1], vec![0]]).unwrap();
        let act = dual_action_from_grading(&a, &g).unwrap();
        assert_eq!(act.order(), 2);
        assert!(act.validate(&a).valid);
        let env = Structure::Group(act).envelope(&a);
        assert_eq!(env.dim(), Structure::Grading(g).envelope(&a).dim());
    }

    #[test]
    fn dual_action_needs_roots_of_unity() {
        let q = Field::rationals();
        let a = crate::algebra_core::constructions::diagonal_algebra(&q, 3);
        let g = Grading::from_basis_labels(&a, GradingGroup::cyclic(3), &[vec![0], vec![0], vec![0]]).unwrap();
        assert_eq!(dual_action_from_grading(&a, &g).unwrap().order(), 1);
        // The group algebra Q[Z_3] graded by Z_3.
        let c3 = Algebra::from_fn(&q, a.kind(), 3, vec!["1".into(), "t".into(), "t2".into()], |i, j| {
            let mut v = vec![q.zero(); 3];
            v[(i + j) % 3] = q.one();
            v
        });
        let gr = Grading::from_basis_labels(&c3, GradingGroup::cyclic(3), &[vec![0], vec![1], vec![2]]).unwrap();
        assert!(gr.validate(&c3).valid);
        assert!(matches!(
            dual_action_from_grading(&c3, &gr),
            Err(Error::InsufficientField { required: 3 })
        ));
        let f3 = Field::cyclotomic(3).unwrap();
        let c3f = Algebra::new(
            &f3,
            c3.kind(),
            c3.table()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|v| v.iter().map(|x| q.embed(x, &f3).unwrap()).collect())
                        .collect()
                })
                .collect(),
            None,
        )
        .unwrap();
        let grf = Grading::from_basis_labels(&c3f, GradingGroup::cyclic(3), &[vec![0], vec![1], vec![2]]).unwrap();
        let act = dual_action_from_grading(&c3f, &grf).unwrap();
        assert_eq!(act.order(), 3);
        assert!(act.validate(&c3f).valid);
    }

    #[test]
    fn envelopes_and_induced_structures() {
        let q = Field::rationals();
        let m2 = matrix_algebra(&q, 2);
        let s = sl2(&q);
        let elems: Vec<Vec<Scalar>> = [vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![1, 0, 0, -1]]
            .iter()
            .map(|v| v.iter().map(|&c| q.from_int(c)).collect())
            .collect();
        let ders = Structure::Derivation(DerivationAction::new(inner_derivations(&m2, &elems)));
        assert!(validate_structure(&m2, &ders).valid);
        assert_eq!(ders.envelope(&m2).dim(), 10);
        assert_eq!(s.dim(), 3);

        let ut2 = upper_triangular(&q, 2);
        let gr = Structure::Grading(
            Grading::from_basis_labels(&ut2, GradingGroup::new(vec![0]), &[vec![0], vec![1], vec![0]]).unwrap(),
        );
        assert!(validate_structure(&ut2, &gr).valid);
        let j = ut2.radical().unwrap().radical;
        let quo = ut2.quotient(&j).unwrap();
        let induced = gr.on_quotient(&ut2, &quo).unwrap();
        assert!(induced.validate(&quo.algebra).valid);
        let sub = ut2.subalgebra(&Subspace::coordinate(&q, 3, &[0, 2])).unwrap();
        assert!(gr.on_subalgebra(&ut2, &sub).unwrap().validate(&sub.algebra).valid);
    }
}
