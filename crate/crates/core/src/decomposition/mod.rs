//! Simple and invariant-simple ideal decompositions, and invariant
//! Wedderburn–Mal'cev / Levi complements.

pub mod simple;
pub mod splitting;

pub use simple::{
    centroid, invariant_simple_decomposition, simple_ideal_decomposition, Component, Decomposition, DecompositionKind,
};
pub use splitting::{invariant_levi, invariant_wedderburn_malcev, SplittingReport};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::constructions::*;
    use crate::algebra_core::{Algebra, AlgebraKind};
    use crate::equivariance::{DerivationAction, GroupAction, GroupElement, Structure, DEFAULT_GROUP_BOUND};
    use crate::exact_math::{Field, Matrix, Subspace};

    fn swap(q: &Field, half: usize) -> Matrix {
        Matrix::from_fn(q, 2 * half, 2 * half, |i, j| {
            if (i + half) % (2 * half) == j {
                q.one()
            } else {
                q.zero()
            }
        })
    }

    #[test]
    fn simple_decompositions() {
        let q = Field::rationals();
        assert_eq!(
            simple_ideal_decomposition(&matrix_algebra(&q, 2)).unwrap().dims(),
            vec![4]
        );
        assert_eq!(
            simple_ideal_decomposition(&diagonal_algebra(&q, 2)).unwrap().dims(),
            vec![1, 1]
        );
        let m2m2 = direct_sum(&matrix_algebra(&q, 2), &matrix_algebra(&q, 2));
        assert_eq!(simple_ideal_decomposition(&m2m2).unwrap().dims(), vec![4, 4]);
        let sl2sl2 = direct_sum(&sl2(&q), &sl2(&q));
        assert_eq!(simple_ideal_decomposition(&sl2sl2).unwrap().dims(), vec![3, 3]);
        assert!(matches!(
            simple_ideal_decomposition(&upper_triangular(&q, 2)),
            Err(crate::Error::NonzeroRadical(1))
        ));
        // Q(i) = Q[x]/(x^2+1) is simple over Q but splits over Q(i).
        let gauss = Algebra::from_fn(
            &q,
            AlgebraKind::Associative,
            2,
            vec!["1".into(), "i".into()],
            |a, b| match (a, b) {
                (0, k) | (k, 0) => {
                    let mut v = vec![q.zero(); 2];
                    v[k] = q.one();
                    v
                }
                _ => vec![q.from_int(-1), q.zero()],
            },
        );
        let d = simple_ideal_decomposition(&gauss).unwrap();
        assert_eq!(d.dims(), vec![2]);
        assert_eq!(d.components[0].extension_degree, 2);
    }

    #[test]
    fn swap_merges_blocks() {
        let q = Field::rationals();
        let m2m2 = direct_sum(&matrix_algebra(&q, 2), &matrix_algebra(&q, 2));
        let g = GroupAction::generate(
            &q,
            8,
            vec![GroupElement::automorphism(swap(&q, 4))],
            DEFAULT_GROUP_BOUND,
        )
        .unwrap();
        let s = Structure::Group(g);
        assert!(s.validate(&m2m2).valid);
        assert_eq!(invariant_simple_decomposition(&m2m2, &s).unwrap().dims(), vec![8]);
        let wm = invariant_wedderburn_malcev(&m2m2, &s).unwrap();
        assert!(wm.complement.is_full());
        assert_eq!(wm.stages, 0);
    }

    #[test]
    fn wedderburn_malcev_examples() {
        let q = Field::rationals();
        let ut2 = upper_triangular(&q, 2);
        let wm = invariant_wedderburn_malcev(&ut2, &Structure::Trivial).unwrap();
        assert_eq!(wm.complement.dim(), 2);
        assert_eq!(wm.stages, 1);

        // e11 <-> e22, e12 -> e12 reverses products in UT_2.
        let flip = Matrix::from_ints(&q, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        let g = GroupAction::generate(&q, 3, vec![GroupElement::anti(flip)], DEFAULT_GROUP_BOUND).unwrap();
        let s = Structure::Group(g);
        assert!(s.validate(&ut2).valid);
        let wm = invariant_wedderburn_malcev(&ut2, &s).unwrap();
        wm.verify(&ut2, &s).unwrap();

        let block = block_associative(&q, 2);
        let ders = block_sl_derivations(&q, 2, &block_associative_basis(&q, 2));
        let s = Structure::Derivation(DerivationAction::new(ders));
        assert!(s.validate(&block).valid);
        let wm = invariant_wedderburn_malcev(&block, &s).unwrap();
        assert_eq!(wm.complement, Subspace::coordinate(&q, 8, &[0, 1, 2, 3]));
        assert_eq!(wm.radical, Subspace::coordinate(&q, 8, &[4, 5, 6, 7]));
    }

    #[test]
    fn levi_examples() {
        let q = Field::rationals();
        let l = block_lie(&q, 2);
        let ders = block_sl_derivations(&q, 2, &block_lie_basis(&q, 2));
        let s = Structure::Derivation(DerivationAction::new(ders));
        assert!(s.validate(&l).valid);
        let lv = invariant_levi(&l, &s).unwrap();
        assert_eq!(lv.complement, Subspace::coordinate(&q, 7, &[0, 1, 2]));
        assert_eq!(lv.radical, Subspace::coordinate(&q, 7, &[3, 4, 5, 6]));
        assert!(invariant_levi(&sl2(&q), &Structure::Trivial)
            .unwrap()
            .complement
            .is_full());
        assert!(invariant_levi(&affine_lie(&q), &Structure::Trivial)
            .unwrap()
            .complement
            .is_zero());
        let trivial_levi = invariant_levi(&l, &Structure::Trivial).unwrap();
        assert_eq!(trivial_levi.complement.dim(), 3);
    }
}
