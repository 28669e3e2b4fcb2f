//! Standard algebras used in examples and tests.

use crate::exact_math::{Field, Matrix, Scalar};

use super::algebra::{Algebra, AlgebraKind};

/// Matrix unit `e_ij` of size `n`.
pub fn matrix_unit(field: &Field, n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    m.set(i, j, field.one());
    m
}

/// The algebra spanned by the given matrices, which must be closed under the
/// product (composition, or the commutator for Lie kind).
pub fn matrix_span_algebra(field: &Field, kind: AlgebraKind, basis: &[Matrix], names: Vec<String>) -> Algebra {
    let n = basis[0].rows();
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| b.entries().to_vec()).collect();
    let sys = Matrix::from_columns(field, n * n, &cols);
    Algebra::from_fn(field, kind, basis.len(), names, |i, j| {
        let p = match kind {
            AlgebraKind::Associative => &basis[i] * &basis[j],
            AlgebraKind::Lie => basis[i].commutator(&basis[j]),
        };
        sys.solve(p.entries())
            .expect("shapes agree")
            .expect("matrix span is closed under the product")
    })
}

fn unit_name(i: usize, j: usize) -> String {
    format!("e{}{}", i + 1, j + 1)
}

/// `M_n(F)` with basis `e_11, e_12, ..., e_nn` (row-major).
pub fn matrix_algebra(field: &Field, n: usize) -> Algebra {
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            basis.push(matrix_unit(field, n, i, j));
            names.push(unit_name(i, j));
        }
    }
    matrix_span_algebra(field, AlgebraKind::Associative, &basis, names)
}

/// Upper triangular matrices `UT_n(F)`, basis `e_ij` with `i <= j`, row-major.
pub fn upper_triangular(field: &Field, n: usize) -> Algebra {
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in i..n {
            basis.push(matrix_unit(field, n, i, j));
            names.push(unit_name(i, j));
        }
    }
    matrix_span_algebra(field, AlgebraKind::Associative, &basis, names)
}

/// `F^n` with coordinatewise product.
pub fn diagonal_algebra(field: &Field, n: usize) -> Algebra {
    Algebra::from_fn(
        field,
        AlgebraKind::Associative,
        n,
        (1..=n).map(|i| format!("d{i}")).collect(),
        |i, j| {
            let mut v = vec![field.zero(); n];
            if i == j {
                v[i] = field.one();
            }
            v
        },
    )
}

/// Abelian Lie algebra of dimension `n`.
pub fn abelian_lie(field: &Field, n: usize) -> Algebra {
    Algebra::from_fn(
        field,
        AlgebraKind::Lie,
        n,
        (1..=n).map(|i| format!("x{i}")).collect(),
        |_, _| vec![field.zero(); n],
    )
}

/// The two-dimensional non-abelian Lie algebra `[x, y] = y`.
pub fn affine_lie(field: &Field) -> Algebra {
    Algebra::from_fn(
        field,
        AlgebraKind::Lie,
        2,
        vec!["x".into(), "y".into()],
        |i, j| match (i, j) {
            (0, 1) => vec![field.zero(), field.one()],
            (1, 0) => vec![field.zero(), field.from_int(-1)],
            _ => vec![field.zero(), field.zero()],
        },
    )
}

/// Basis of `sl_m`: off-diagonal units, then `e_ii - e_{i+1,i+1}`.
pub fn sl_basis(field: &Field, m: usize) -> (Vec<Matrix>, Vec<String>) {
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i != j {
                basis.push(matrix_unit(field, m, i, j));
                names.push(unit_name(i, j));
            }
        }
    }
    for i in 0..m - 1 {
        basis.push(&matrix_unit(field, m, i, i) - &matrix_unit(field, m, i + 1, i + 1));
        names.push(format!("h{}", i + 1));
    }
    (basis, names)
}

/// `sl_m(F)`.
pub fn sl(field: &Field, m: usize) -> Algebra {
    let (basis, names) = sl_basis(field, m);
    matrix_span_algebra(field, AlgebraKind::Lie, &basis, names)
}

/// `sl_2(F)` with basis `e, f, h`: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2(field: &Field) -> Algebra {
    let basis = vec![
        matrix_unit(field, 2, 0, 1),
        matrix_unit(field, 2, 1, 0),
        &matrix_unit(field, 2, 0, 0) - &matrix_unit(field, 2, 1, 1),
    ];
    matrix_span_algebra(
        field,
        AlgebraKind::Lie,
        &basis,
        vec!["e".into(), "f".into(), "h".into()],
    )
}

/// `gl_n(F)` as a Lie algebra on matrix units.
pub fn gl(field: &Field, n: usize) -> Algebra {
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            basis.push(matrix_unit(field, n, i, j));
            names.push(unit_name(i, j));
        }
    }
    matrix_span_algebra(field, AlgebraKind::Lie, &basis, names)
}

/// Direct sum `A ⊕ B` (basis of `A` first).
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Algebra {
    assert_eq!(a.kind(), b.kind(), "direct sum of different kinds");
    let (da, db) = (a.dim(), b.dim());
    let field = a.field().clone();
    let names: Vec<String> = a
        .names()
        .iter()
        .map(|s| format!("{s}'"))
        .chain(b.names().iter().map(|s| format!("{s}''")))
        .collect();
    Algebra::from_fn(&field, a.kind(), da + db, names, |i, j| {
        let mut v = vec![field.zero(); da + db];
        if i < da && j < da {
            v[..da].clone_from_slice(a.basis_product(i, j));
        } else if i >= da && j >= da {
            v[da..].clone_from_slice(b.basis_product(i - da, j - da));
        }
        v
    })
}

/// Block embedding `(C, D; 0, 0)` of two `m x m` blocks into `2m x 2m`.
pub fn block_matrix(field: &Field, m: usize, c: &Matrix, d: &Matrix) -> Matrix {
    Matrix::from_fn(field, 2 * m, 2 * m, |i, j| {
        if i < m && j < m {
            c.get(i, j).clone()
        } else if i < m {
            d.get(i, j - m).clone()
        } else {
            field.zero()
        }
    })
}

fn block_parts(field: &Field, m: usize, left: &[Matrix], left_names: &[String]) -> (Vec<Matrix>, Vec<String>) {
    let zero = Matrix::zeros(field, m, m);
    let mut basis = Vec::new();
    let mut names = Vec::new();
    for (c, name) in left.iter().zip(left_names) {
        basis.push(block_matrix(field, m, c, &zero));
        names.push(format!("C{name}"));
    }
    for i in 0..m {
        for j in 0..m {
            basis.push(block_matrix(field, m, &zero, &matrix_unit(field, m, i, j)));
            names.push(format!("D{}", unit_name(i, j)));
        }
    }
    (basis, names)
}

/// Associative algebra `{(C, D; 0, 0) : C, D in M_m}`; basis: the `C`
/// matrix units, then the `D` matrix units.
pub fn block_associative(field: &Field, m: usize) -> Algebra {
    let mut left = Vec::new();
    let mut left_names = Vec::new();
    for i in 0..m {
        for j in 0..m {
            left.push(matrix_unit(field, m, i, j));
            left_names.push(unit_name(i, j));
        }
    }
    let (basis, names) = block_parts(field, m, &left, &left_names);
    matrix_span_algebra(field, AlgebraKind::Associative, &basis, names)
}

/// Lie algebra `{(C, D; 0, 0) : C in sl_m, D in M_m}`; basis: the `sl_m`
/// basis in the `C` block, then the `D` matrix units.
pub fn block_lie(field: &Field, m: usize) -> Algebra {
    let (left, left_names) = sl_basis(field, m);
    let (basis, names) = block_parts(field, m, &left, &left_names);
    matrix_span_algebra(field, AlgebraKind::Lie, &basis, names)
}

/// Matrices of `b -> [(X, 0; 0, 0), b]` on a block algebra, one per `sl_m`
/// basis element `X`. `block_basis` lists the `2m x 2m` matrices of the
/// algebra's basis in order.
pub fn block_sl_derivations(field: &Field, m: usize, block_basis: &[Matrix]) -> Vec<Matrix> {
    let n = block_basis.len();
    let cols: Vec<Vec<Scalar>> = block_basis.iter().map(|b| b.entries().to_vec()).collect();
    let sys = Matrix::from_columns(field, 4 * m * m, &cols);
    let zero = Matrix::zeros(field, m, m);
    sl_basis(field, m)
        .0
        .iter()
        .map(|x| {
            let phi = block_matrix(field, m, x, &zero);
            let images: Vec<Vec<Scalar>> = block_basis
                .iter()
                .map(|b| {
                    sys.solve(phi.commutator(b).entries())
                        .unwrap()
                        .expect("inner derivation preserves the span")
                })
                .collect();
            Matrix::from_columns(field, n, &images)
        })
        .collect()
}

/// Matrices of the `2m x 2m` basis of `block_associative(m)`.
pub fn block_associative_basis(field: &Field, m: usize) -> Vec<Matrix> {
    let mut left = Vec::new();
    let mut left_names = Vec::new();
    for i in 0..m {
        for j in 0..m {
            left.push(matrix_unit(field, m, i, j));
            left_names.push(unit_name(i, j));
        }
    }
    block_parts(field, m, &left, &left_names).0
}

/// Matrices of the `2m x 2m` basis of `block_lie(m)`.
pub fn block_lie_basis(field: &Field, m: usize) -> Vec<Matrix> {
    let (left, left_names) = sl_basis(field, m);
    block_parts(field, m, &left, &left_names).0
}

/// Inner derivations `ad x` of `A` for the given elements, as matrices.
pub fn inner_derivations(a: &Algebra, elements: &[Vec<Scalar>]) -> Vec<Matrix> {
    elements
        .iter()
        .map(|x| {
            let l = a.left_mult(x);
            match a.kind() {
                AlgebraKind::Lie => l,
                AlgebraKind::Associative => &l - &a.right_mult(x),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_and_validity() {
        let q = Field::rationals();
        for (a, d) in [
            (matrix_algebra(&q, 2), 4),
            (upper_triangular(&q, 2), 3),
            (sl(&q, 3), 8),
            (gl(&q, 2), 4),
            (block_associative(&q, 2), 8),
            (block_lie(&q, 2), 7),
            (direct_sum(&matrix_algebra(&q, 2), &matrix_algebra(&q, 2)), 8),
            (affine_lie(&q), 2),
        ] {
            assert_eq!(a.dim(), d);
            assert!(a.validate().valid, "{a:?}");
        }
    }

    #[test]
    fn sl2_relations() {
        let q = Field::rationals();
        let a = sl2(&q);
        let v = |x: &[i64]| x.iter().map(|&c| q.from_int(c)).collect::<Vec<_>>();
        assert_eq!(a.basis_product(0, 1), &v(&[0, 0, 1])[..]);
        assert_eq!(a.basis_product(2, 0), &v(&[2, 0, 0])[..]);
        assert_eq!(a.basis_product(2, 1), &v(&[0, -2, 0])[..]);
    }
}
