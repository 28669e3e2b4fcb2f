//! Invariant Wedderburn–Mal'cev and Levi complements.
//!
//! A linear section `s: A/J -> A` of the projection is corrected stage by
//! stage along a chain `J = K_0 ⊃ K_1 ⊃ ... ⊃ K_t = 0` of invariant ideals
//! with `K_i K_i ⊆ K_{i+1}` (powers of `J`, or the derived series of the
//! solvable radical). At stage `i` the section is multiplicative modulo
//! `K_i`; a correction `τ: A/J -> K_i` with
//!
//! `τ(ab) - s(a)τ(b) - τ(a)s(b) = s(a)s(b) - s(ab)  (mod K_{i+1})`
//!
//! makes it multiplicative modulo `K_{i+1}`. The system is linear because
//! `τ(a)τ(b) ∈ K_{i+1}`.

use serde::Serialize;

use crate::algebra_core::{Algebra, AlgebraKind, QuotientAlgebra};
use crate::equivariance::{Parity, Structure};
use crate::error::{Error, Result};
use crate::exact_math::matrix::{vec_is_zero, vec_sub};
use crate::exact_math::{Echelon, Field, Matrix, Scalar, Subspace};

#[derive(Clone, Debug)]
pub struct SplittingReport {
    /// The complement `B`.
    pub complement: Subspace,
    /// `J(A)` or the solvable radical.
    pub radical: Subspace,
    /// Number of correction stages (nonzero terms of the ideal chain).
    pub stages: usize,
    /// `n x k` matrix of the multiplicative section `A/J -> A` with image `B`.
    pub section: Matrix,
}

#[derive(Serialize)]
pub struct SplittingSummary {
    pub complement_dim: usize,
    pub radical_dim: usize,
    pub stages: usize,
    pub complement_basis: Vec<String>,
    pub radical_basis: Vec<String>,
}

impl SplittingReport {
    pub fn summary(&self, a: &Algebra) -> SplittingSummary {
        SplittingSummary {
            complement_dim: self.complement.dim(),
            radical_dim: self.radical.dim(),
            stages: self.stages,
            complement_basis: self.complement.basis().iter().map(|v| a.render(v)).collect(),
            radical_basis: self.radical.basis().iter().map(|v| a.render(v)).collect(),
        }
    }

    /// Re-checks every property of the splitting from scratch.
    pub fn verify(&self, a: &Algebra, s: &Structure) -> Result<()> {
        let b = &self.complement;
        if !a.is_subalgebra(b) {
            return Err(Error::Inconsistency("complement is not a subalgebra".into()));
        }
        if !b.intersect(&self.radical)?.is_zero() {
            return Err(Error::Inconsistency("complement meets the radical".into()));
        }
        if b.dim() + self.radical.dim() != a.dim() {
            return Err(Error::Inconsistency(
                "complement and radical do not span the algebra".into(),
            ));
        }
        if !s.is_invariant(a, b) {
            return Err(Error::Inconsistency(
                "complement is not invariant under the structure".into(),
            ));
        }
        Ok(())
    }
}

/// Vectors of `big` completing a basis of `small` (assumed `small ⊆ big`).
fn complement_vectors(field: &Field, small: &Subspace, big: &Subspace) -> Vec<Vec<Scalar>> {
    let mut ech = Echelon::new(field, big.ambient_dim());
    for v in small.basis() {
        ech.push(v);
    }
    big.basis().iter().filter(|v| ech.push(v)).cloned().collect()
}

fn ideal_chain(a: &Algebra, radical: &Subspace) -> Result<Vec<Subspace>> {
    let chain = match a.kind() {
        AlgebraKind::Associative => a.powers(radical)?,
        AlgebraKind::Lie => a.derived_series(radical)?,
    };
    if !chain.last().is_some_and(Subspace::is_zero) {
        return Err(Error::Inconsistency("radical chain does not reach zero".into()));
    }
    Ok(chain)
}

/// Solves `m x = rhs`, mapping inconsistency to `NoInvariantComplement`.
fn solve_system(
    field: &Field,
    unknowns: usize,
    rows: Vec<Vec<Scalar>>,
    rhs: Vec<Scalar>,
    what: &str,
) -> Result<Vec<Scalar>> {
    if unknowns == 0 {
        return if rhs.iter().all(Scalar::is_zero) {
            Ok(Vec::new())
        } else {
            Err(Error::NoInvariantComplement(format!(
                "{what}: empty system with nonzero right-hand side"
            )))
        };
    }
    let m = Matrix::from_rows(field, unknowns, rows)?;
    m.solve(&rhs)?.ok_or_else(|| {
        Error::NoInvariantComplement(format!(
            "{what} is inconsistent; for finite groups and semisimple derivation actions this signals invalid input"
        ))
    })
}

struct Stage<'a> {
    a: &'a Algebra,
    q: &'a QuotientAlgebra,
    /// Operators on `A` and their induced operators on `A/J`.
    ops: &'a [(Matrix, Matrix)],
}

impl Stage<'_> {
    /// One correction step: returns the corrected section, multiplicative
    /// (and, when operators are given, equivariant) modulo `next`.
    fn correct(&self, s: &Matrix, cur: &Subspace, next: &Subspace) -> Result<Matrix> {
        let a = self.a;
        let field = a.field();
        let n = a.dim();
        let k = self.q.algebra.dim();
        let ts = complement_vectors(field, next, cur);
        let r = ts.len();
        let unknowns = k * r;
        let idx = |c: usize, l: usize| c * r + l;
        let scols: Vec<Vec<Scalar>> = (0..k).map(|c| s.column(c)).collect();
        let s_apply = |v: &[Scalar]| s.apply(v);

        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        let mut push_block = |coeffs: Vec<(usize, Vec<Scalar>)>, target: Vec<Scalar>| {
            let reduced: Vec<(usize, Vec<Scalar>)> = coeffs.into_iter().map(|(u, v)| (u, next.reduce(&v))).collect();
            let t = next.reduce(&target);
            for coord in 0..n {
                let mut row = vec![field.zero(); unknowns];
                let mut any = false;
                for (u, v) in &reduced {
                    if !v[coord].is_zero() {
                        row[*u] += &v[coord];
                        any = true;
                    }
                }
                if any || !t[coord].is_zero() {
                    rows.push(row);
                    rhs.push(t[coord].clone());
                }
            }
        };

        for x in 0..k {
            for y in 0..k {
                // tau(e_x e_y) - s(e_x) tau(e_y) - tau(e_x) s(e_y) = s(e_x)s(e_y) - s(e_x e_y)
                let prod = self.q.algebra.basis_product(x, y);
                let mut coeffs = Vec::new();
                for (c, m) in prod.iter().enumerate() {
                    if !m.is_zero() {
                        for (l, t) in ts.iter().enumerate() {
                            coeffs.push((idx(c, l), t.iter().map(|e| e * m).collect()));
                        }
                    }
                }
                for (l, t) in ts.iter().enumerate() {
                    coeffs.push((idx(y, l), a.mul(&scols[x], t).iter().map(|e| -e).collect()));
                    coeffs.push((idx(x, l), a.mul(t, &scols[y]).iter().map(|e| -e).collect()));
                }
                let target = vec_sub(&a.mul(&scols[x], &scols[y]), &s_apply(prod));
                push_block(coeffs, target);
            }
        }
        for (op, bar) in self.ops {
            for x in 0..k {
                // op tau(e_x) - tau(bar e_x) = s(bar e_x) - op s(e_x)
                let barx = bar.column(x);
                let mut coeffs = Vec::new();
                for (l, t) in ts.iter().enumerate() {
                    coeffs.push((idx(x, l), op.apply(t)));
                    for (c, m) in barx.iter().enumerate() {
                        if !m.is_zero() {
                            coeffs.push((idx(c, l), t.iter().map(|e| -(e * m)).collect()));
                        }
                    }
                }
                let target = vec_sub(&s_apply(&barx), &op.apply(&scols[x]));
                push_block(coeffs, target);
            }
        }
        let sol = solve_system(field, unknowns, rows, rhs, "section correction system")?;
        let mut out = s.clone();
        for c in 0..k {
            for (l, t) in ts.iter().enumerate() {
                let coef = &sol[idx(c, l)];
                if coef.is_zero() {
                    continue;
                }
                for i in 0..n {
                    let v = out.get(i, c) + &(coef * &t[i]);
                    out.set(i, c, v);
                }
            }
        }
        Ok(out)
    }
}

/// `n x k` section `s` with `π s = id` and `op s = s op̄` for every operator.
fn equivariant_section(a: &Algebra, q: &QuotientAlgebra, ops: &[(Matrix, Matrix)]) -> Result<Matrix> {
    if ops.is_empty() {
        return Ok(q.section.clone());
    }
    let field = a.field();
    let n = a.dim();
    let k = q.algebra.dim();
    // Unknown s_{ic} at index i*k + c.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for r in 0..k {
        for c in 0..k {
            let mut row = vec![field.zero(); n * k];
            for i in 0..n {
                row[i * k + c] = q.projection.get(r, i).clone();
            }
            rows.push(row);
            rhs.push(if r == c { field.one() } else { field.zero() });
        }
    }
    for (op, bar) in ops {
        for i in 0..n {
            for c in 0..k {
                // (op s)_{ic} - (s bar)_{ic} = 0
                let mut row = vec![field.zero(); n * k];
                for j in 0..n {
                    row[j * k + c] += op.get(i, j);
                }
                for d in 0..k {
                    row[i * k + d] -= bar.get(d, c);
                }
                rows.push(row);
                rhs.push(field.zero());
            }
        }
    }
    let sol = solve_system(field, n * k, rows, rhs, "equivariant section system")?;
    Ok(Matrix::from_fn(field, n, k, |i, c| sol[i * k + c].clone()))
}

/// Group averaging of a section: the Reynolds operator over `G_0`, then the
/// two-term average `(s + ψ s ψ̄⁻¹)/2` over an anti-automorphism coset.
fn average_section(s: &Matrix, q: &QuotientAlgebra, group: &crate::equivariance::GroupAction) -> Matrix {
    let field = s.field();
    let elems = group.elements();
    let induced_inv = |g: usize| q.induced(&elems[group.inverse(g)].matrix);
    let even = group.even_part();
    let mut acc = Matrix::zeros(field, s.rows(), s.cols());
    for &g in &even {
        acc = &acc + &(&(&elems[g].matrix * s) * &induced_inv(g));
    }
    let mut avg = acc.scale(&field.from_ratio(1, even.len() as i64));
    if let Some(psi) = (0..group.order()).find(|&g| elems[g].parity == Parity::AntiAutomorphism) {
        let twisted = &(&elems[psi].matrix * &avg) * &induced_inv(psi);
        avg = (&avg + &twisted).scale(&field.from_ratio(1, 2));
    }
    avg
}

fn is_multiplicative(a: &Algebra, q: &QuotientAlgebra, s: &Matrix) -> bool {
    let k = q.algebra.dim();
    let cols: Vec<Vec<Scalar>> = (0..k).map(|c| s.column(c)).collect();
    (0..k).all(|x| {
        (0..k).all(|y| {
            vec_is_zero(&vec_sub(
                &a.mul(&cols[x], &cols[y]),
                &s.apply(q.algebra.basis_product(x, y)),
            ))
        })
    })
}

fn split(a: &Algebra, s: &Structure, expected: AlgebraKind) -> Result<SplittingReport> {
    if a.kind() != expected {
        return Err(Error::InvalidInput(format!(
            "expected a {expected} algebra, got {}",
            a.kind()
        )));
    }
    let radical = a.radical()?.radical;
    if !s.is_invariant(a, &radical) {
        return Err(Error::Inconsistency(
            "radical is not invariant under the structure".into(),
        ));
    }
    let chain = ideal_chain(a, &radical)?;
    let q = a.quotient(&radical)?;
    let group = match s {
        Structure::Group(g) => Some(g),
        _ => None,
    };
    // Operators imposed directly in the linear systems (derivations and
    // homogeneous projections); groups are handled by averaging.
    let ops: Vec<(Matrix, Matrix)> = match s {
        Structure::Derivation(_) | Structure::Grading(_) => s
            .operators(a)
            .into_iter()
            .map(|op| {
                let bar = q.induced(&op);
                (op, bar)
            })
            .collect(),
        _ => Vec::new(),
    };
    let mut section = equivariant_section(a, &q, &ops)?;
    if let Some(g) = group {
        section = average_section(&section, &q, g);
    }
    let stage = Stage { a, q: &q, ops: &ops };
    let mut stages = 0;
    for w in chain.windows(2) {
        let (cur, next) = (&w[0], &w[1]);
        if cur.is_zero() {
            break;
        }
        section = stage.correct(&section, cur, next)?;
        if let Some(g) = group {
            section = average_section(&section, &q, g);
        }
        stages += 1;
    }
    if !is_multiplicative(a, &q, &section) {
        return Err(Error::Inconsistency("corrected section is not multiplicative".into()));
    }
    if !(&q.projection * &section).is_identity() {
        return Err(Error::Inconsistency(
            "corrected section is not a section of the projection".into(),
        ));
    }
    let cols: Vec<Vec<Scalar>> = (0..section.cols()).map(|c| section.column(c)).collect();
    let report = SplittingReport {
        complement: Subspace::span(a.field(), a.dim(), &cols),
        radical,
        stages,
        section,
    };
    report.verify(a, s)?;
    Ok(report)
}

/// Structure-invariant Wedderburn–Mal'cev decomposition `A = B ⊕ J`.
pub fn invariant_wedderburn_malcev(a: &Algebra, s: &Structure) -> Result<SplittingReport> {
    split(a, s, AlgebraKind::Associative)
}

/// Structure-invariant Levi decomposition `L = B ⊕ R`.
pub fn invariant_levi(l: &Algebra, s: &Structure) -> Result<SplittingReport> {
    split(l, s, AlgebraKind::Lie)
}
