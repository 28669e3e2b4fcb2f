//! Submodule spinning and a Meataxe-style irreducibility test for modules
//! given by matrices acting on column vectors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::echelon::Echelon;
use super::factor::factor;
use super::field::{Field, Scalar};
use super::matrix::{axpy, Matrix};
use super::poly::charpoly;
use super::subspace::Subspace;

/// Outcome of an irreducibility test.
#[derive(Clone, Debug)]
pub enum Irreducibility {
    /// No proper nonzero invariant subspace. `absolute` is false when the
    /// enveloping algebra is smaller than the full matrix algebra, in which
    /// case the module may split after extending the field by the reported
    /// degree.
    Irreducible {
        absolute: bool,
        extension_degree: usize,
    },
    /// A proper nonzero invariant subspace.
    Reducible {
        submodule: Subspace,
    },
    Inconclusive {
        reason: String,
    },
}

/// Smallest subspace containing `start` and invariant under every generator.
pub fn close_subspace(field: &Field, gens: &[Matrix], start: &[Vec<Scalar>], ambient: usize) -> Subspace {
    let mut e = Echelon::new(field, ambient);
    let mut queue: Vec<Vec<Scalar>> = Vec::new();
    for v in start {
        if e.push(v) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = g.apply(&v);
            if e.push(&w) {
                queue.push(w);
            }
        }
        if e.rank() == ambient {
            break;
        }
    }
    Subspace::from_echelon(&e)
}

/// The submodule generated by one vector.
pub fn spin(field: &Field, gens: &[Matrix], v: &[Scalar]) -> Subspace {
    close_subspace(field, gens, &[v.to_vec()], v.len())
}

/// Basis of the unital associative algebra generated by square matrices.
pub fn enveloping_algebra(field: &Field, n: usize, gens: &[Matrix]) -> Vec<Matrix> {
    let mut e = Echelon::new(field, n * n);
    let mut basis = Vec::new();
    let id = Matrix::identity(field, n);
    e.push(id.entries());
    basis.push(id);
    let mut frontier = 0;
    while frontier < basis.len() {
        let cur = basis[frontier].clone();
        frontier += 1;
        for g in gens {
            let prod = &cur * g;
            if e.push(prod.entries()) {
                basis.push(prod);
            }
        }
        if basis.len() == n * n {
            break;
        }
    }
    basis
}

/// Radical of a matrix algebra (given by a basis): kernel of the trace form
/// `tr(xy)`, which in characteristic zero is the Jacobson radical.
pub fn matrix_algebra_radical(field: &Field, basis: &[Matrix]) -> Vec<Matrix> {
    let k = basis.len();
    let gram = Matrix::from_fn(field, k, k, |i, j| (&basis[i] * &basis[j]).trace());
    let ker = gram.kernel();
    ker.basis()
        .iter()
        .map(|c| {
            let n = basis[0].rows();
            let mut acc = Matrix::zeros(field, n, n);
            for (ci, b) in c.iter().zip(basis) {
                if !ci.is_zero() {
                    acc = &acc + &b.scale(ci);
                }
            }
            acc
        })
        .collect()
}

/// Irreducibility of `F^n` under the given generators.
pub fn irreducibility(field: &Field, n: usize, gens: &[Matrix]) -> Irreducibility {
    if n == 0 {
        return Irreducibility::Inconclusive {
            reason: "zero module".into(),
        };
    }
    if n == 1 {
        return Irreducibility::Irreducible {
            absolute: true,
            extension_degree: 1,
        };
    }
    let env = enveloping_algebra(field, n, gens);
    if env.len() == n * n {
        // Burnside: the full matrix algebra acts irreducibly.
        return Irreducibility::Irreducible {
            absolute: true,
            extension_degree: 1,
        };
    }
    let rad = matrix_algebra_radical(field, &env);
    if !rad.is_empty() {
        // J V is a nonzero proper submodule when J is a nonzero nilpotent ideal.
        let vecs: Vec<Vec<Scalar>> = rad.iter().flat_map(|x| (0..n).map(|j| x.column(j))).collect();
        let sub = Subspace::span(field, n, &vecs);
        return Irreducibility::Reducible { submodule: sub };
    }
    let transposed: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x3ea7a5e);
    for _attempt in 0..40 {
        let mut theta = Matrix::zeros(field, n, n);
        for b in &env {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                theta = &theta + &b.scale(&field.from_int(c));
            }
        }
        let chi = charpoly(&theta);
        for (f, _) in factor(&chi) {
            let ft = f.eval_matrix(&theta);
            let null = ft.kernel();
            let Some(v) = null.basis().first() else { continue };
            let s = spin(field, gens, v);
            if s.dim() < n {
                return Irreducibility::Reducible { submodule: s };
            }
            let null_t = ft.transpose().kernel();
            let w = &null_t.basis()[0];
            let st = spin(field, &transposed, w);
            if st.dim() < n {
                // The annihilator of a proper dual submodule is a proper submodule.
                let sub = st.orthogonal();
                return Irreducibility::Reducible { submodule: sub };
            }
            if f.degree() == Some(null.dim()) {
                return Irreducibility::Irreducible {
                    absolute: false,
                    extension_degree: (n * n) / env.len(),
                };
            }
        }
    }
    Irreducibility::Inconclusive {
        reason: "no Norton witness found after 40 random elements".into(),
    }
}

/// A random element of the span of `basis` with small integer coefficients.
pub fn random_combination(field: &Field, basis: &[Vec<Scalar>], rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let len = basis.first().map_or(0, Vec::len);
    let mut acc = vec![field.zero(); len];
    for b in basis {
        let c: i64 = rng.gen_range(-5..=5);
        axpy(&mut acc, &field.from_int(c), b);
    }
    acc
}

/// Basis of the matrices commuting with every generator.
pub fn commutant(field: &Field, n: usize, gens: &[Matrix]) -> Vec<Matrix> {
    // Unknown X is flattened row-major; (XT - TX)_{ij} = sum_k X_ik T_kj - T_ik X_kj.
    let mut rows = Vec::with_capacity(gens.len() * n * n);
    for t in gens {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![field.zero(); n * n];
                for k in 0..n {
                    row[i * n + k] += t.get(k, j);
                    row[k * n + j] -= t.get(i, k);
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return (0..n * n)
            .map(|idx| {
                let mut m = Matrix::zeros(field, n, n);
                m.set(idx / n, idx % n, field.one());
                m
            })
            .collect();
    }
    let sys = Matrix::from_rows(field, n * n, rows).expect("rows have n^2 entries");
    sys.kernel()
        .basis()
        .iter()
        .map(|v| Matrix::from_fn(field, n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_matrix_algebra_is_irreducible() {
        let q = Field::rationals();
        let e12 = Matrix::from_ints(&q, &[&[0, 1], &[0, 0]]);
        let e21 = Matrix::from_ints(&q, &[&[0, 0], &[1, 0]]);
        assert!(matches!(
            irreducibility(&q, 2, &[e12.clone(), e21]),
            Irreducibility::Irreducible { absolute: true, .. }
        ));
        match irreducibility(&q, 2, &[e12]) {
            Irreducibility::Reducible { submodule } => assert_eq!(submodule.dim(), 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rotation_is_irreducible_but_not_absolutely() {
        let q = Field::rationals();
        let rot = Matrix::from_ints(&q, &[&[0, -1], &[1, 0]]);
        assert!(matches!(
            irreducibility(&q, 2, std::slice::from_ref(&rot)),
            Irreducibility::Irreducible {
                absolute: false,
                extension_degree: 2
            }
        ));
        // Over Q(i) the rotation has eigenvectors.
        let k = Field::cyclotomic(4).unwrap();
        let rot_k = Matrix::from_ints(&k, &[&[0, -1], &[1, 0]]);
        assert!(matches!(
            irreducibility(&k, 2, &[rot_k]),
            Irreducibility::Reducible { .. }
        ));
    }

    #[test]
    fn semisimple_reducible_found_by_norton_search() {
        let q = Field::rationals();
        let d = Matrix::from_ints(&q, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        match irreducibility(&q, 3, &[d]) {
            Irreducibility::Reducible { submodule } => assert!(submodule.dim() > 0 && submodule.dim() < 3),
            other => panic!("{other:?}"),
        }
    }
}
