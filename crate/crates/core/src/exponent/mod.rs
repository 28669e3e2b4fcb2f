//! Exponents from the structure theory: the associative formula over
//! invariant-simple components, the Lie formula over ideal chains, and the
//! simplicity criteria.

pub mod associative;
pub mod lie;
pub mod simplicity;

pub use associative::{associative_exponent, ExponentReport, DISTINCT_INDEX_FLAG};
pub use lie::{lie_exponent_from_chains, ChainOutcome, LieChain, LieExponentReport, ONE_COMPLEMENT_FLAG};
pub use simplicity::{is_invariant_simple, simplicity_criterion_report, CriterionReport, Simplicity};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::constructions::*;
    use crate::algebra_core::{Algebra, AlgebraKind};
    use crate::equivariance::{DerivationAction, Grading, GradingGroup, Structure};
    use crate::exact_math::{Field, Subspace};

    fn adjoint_sl2_on_m2(q: &Field) -> Structure {
        let m2 = matrix_algebra(q, 2);
        let elems: Vec<_> = [[0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, -1]]
            .iter()
            .map(|v| v.iter().map(|&c| q.from_int(c)).collect())
            .collect();
        Structure::Derivation(DerivationAction::new(inner_derivations(&m2, &elems)))
    }

    #[test]
    fn associative_exponents() {
        let q = Field::rationals();
        let m2 = matrix_algebra(&q, 2);
        assert_eq!(associative_exponent(&m2, &Structure::Trivial).unwrap().d, 4);
        let ut2 = upper_triangular(&q, 2);
        let e = associative_exponent(&ut2, &Structure::Trivial).unwrap();
        assert_eq!(e.d, 2);
        assert_eq!(e.witness.len(), 2);
        let block = block_associative(&q, 2);
        let s = Structure::Derivation(DerivationAction::new(block_sl_derivations(
            &q,
            2,
            &block_associative_basis(&q, 2),
        )));
        assert_eq!(associative_exponent(&block, &s).unwrap().d, 4);
        assert_eq!(associative_exponent(&block, &Structure::Trivial).unwrap().d, 4);
        let nil = Algebra::from_fn(&q, AlgebraKind::Associative, 1, vec!["x".into()], |_, _| vec![q.zero()]);
        assert_eq!(associative_exponent(&nil, &Structure::Trivial).unwrap().d, 0);
        let sum = direct_sum(&ut2, &m2);
        assert_eq!(associative_exponent(&sum, &Structure::Trivial).unwrap().d, 4);
    }

    #[test]
    fn lie_exponents() {
        let q = Field::rationals();
        let l = block_lie(&q, 2);
        let s = Structure::Derivation(DerivationAction::new(block_sl_derivations(
            &q,
            2,
            &block_lie_basis(&q, 2),
        )));
        let r = lie_exponent_from_chains(&l, &s, &[], None).unwrap();
        assert_eq!(r.d, 3);
        assert_eq!(
            lie_exponent_from_chains(&sl2(&q), &Structure::Trivial, &[], None)
                .unwrap()
                .d,
            3
        );
        let ab = abelian_lie(&q, 1);
        let chain = LieChain {
            pairs: vec![(ab.full_subspace(), Subspace::zero(&q, 1))],
        };
        let r = lie_exponent_from_chains(&ab, &Structure::Trivial, &[chain], None).unwrap();
        assert_eq!(r.d, 0);
        assert_eq!(r.chains[1].value, Some(0));
    }

    #[test]
    fn simplicity_reports() {
        let q = Field::rationals();
        let m2 = matrix_algebra(&q, 2);
        assert_eq!(
            is_invariant_simple(&m2, &Structure::Trivial).unwrap().is_simple(),
            Some(true)
        );
        let ut2 = upper_triangular(&q, 2);
        let rep = simplicity_criterion_report(&ut2, &Structure::Trivial).unwrap();
        assert_eq!((rep.exponent, rep.simple), (2, Some(false)));
        let rep = simplicity_criterion_report(&m2, &adjoint_sl2_on_m2(&q)).unwrap();
        assert_eq!(
            (rep.exponent, rep.simple, rep.ordinary_exponent),
            (4, Some(true), Some(4))
        );
        let gr =
            Grading::from_basis_labels(&m2, GradingGroup::cyclic(2), &[vec![0], vec![1], vec![1], vec![0]]).unwrap();
        let rep = simplicity_criterion_report(&m2, &Structure::Grading(gr)).unwrap();
        assert_eq!((rep.exponent, rep.simple), (4, Some(true)));
    }
}
