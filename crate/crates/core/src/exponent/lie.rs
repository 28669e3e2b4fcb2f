//! The Lie exponent from chains of invariant ideals `J_k ⊆ I_k`:
//! `dim L - dim(Ann(I_1/J_1) ∩ ... ∩ Ann(I_r/J_r))`, maximized over chains
//! whose factors are irreducible and whose complements `T_k` satisfy
//! `[[T_1, L, ..., L], ..., [T_r, L, ..., L]] ≠ 0`.

use serde::Serialize;

use crate::algebra_core::{Algebra, AlgebraKind};
use crate::decomposition::invariant_levi;
use crate::equivariance::Structure;
use crate::error::{Error, Result};
use crate::exact_math::meataxe::{irreducibility, Irreducibility};
use crate::exact_math::{Field, Matrix, Scalar, Subspace};

pub const ONE_COMPLEMENT_FLAG: &str = "verified for one complement";

/// A candidate chain of pairs `(I_k, J_k)`.
#[derive(Clone, Debug)]
pub struct LieChain {
    pub pairs: Vec<(Subspace, Subspace)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainOutcome {
    pub pair_dims: Vec<(usize, usize)>,
    pub irreducible: bool,
    /// The bracket depths `q_k` found for the second condition.
    pub depths: Option<Vec<usize>>,
    pub value: Option<usize>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LieExponentReport {
    pub d: usize,
    pub chains: Vec<ChainOutcome>,
    pub levi_complement_dim: usize,
    pub flags: Vec<String>,
}

/// Matrices of the operators induced on `I/J` (operators must preserve
/// both), in a basis of free coordinates.
pub(crate) fn factor_module(
    field: &Field,
    i: &Subspace,
    j: &Subspace,
    ops: &[Matrix],
) -> Result<(Vec<Matrix>, Subspace)> {
    let m = i.dim();
    let coords = |v: &[Scalar]| {
        i.coordinates(v)
            .ok_or_else(|| Error::InvalidInput("operator does not preserve the ideal".into()))
    };
    let jc: Vec<Vec<Scalar>> = j.basis().iter().map(|v| coords(v)).collect::<Result<_>>()?;
    let jc = Subspace::span(field, m, &jc);
    let mut is_pivot = vec![false; m];
    for &p in jc.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..m).filter(|&c| !is_pivot[c]).collect();
    let mut mats = Vec::with_capacity(ops.len());
    for op in ops {
        let mut cols = Vec::with_capacity(free.len());
        for &f in &free {
            let img = coords(&op.apply(&i.basis()[f]))?;
            let red = jc.reduce(&img);
            cols.push(free.iter().map(|&g| red[g].clone()).collect::<Vec<_>>());
        }
        mats.push(Matrix::from_columns(field, free.len(), &cols));
    }
    Ok((mats, jc))
}

/// A complement `T` of `J` in `I` invariant under the operators (which
/// preserve `I` and `J`), from an equivariant section of `I -> I/J`.
pub(crate) fn invariant_complement(field: &Field, i: &Subspace, j: &Subspace, ops: &[Matrix]) -> Result<Subspace> {
    let m = i.dim();
    let (bars, jc) = factor_module(field, i, j, ops)?;
    let mut is_pivot = vec![false; m];
    for &p in jc.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..m).filter(|&c| !is_pivot[c]).collect();
    let k = free.len();
    if k == 0 {
        return Ok(Subspace::zero(field, i.ambient_dim()));
    }
    // Operators in I-coordinates.
    let big: Vec<Matrix> = ops
        .iter()
        .map(|op| {
            let cols: Vec<Vec<Scalar>> = i
                .basis()
                .iter()
                .map(|b| i.coordinates(&op.apply(b)).expect("checked by factor_module"))
                .collect();
            Matrix::from_columns(field, m, &cols)
        })
        .collect();
    // Unknown section sigma (m x k), entry (r, c) at r*k + c.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    // Projection condition: reduce(sigma e_c) on the free coordinates is
    // e_c; reduction is linear, so use the reduced unit vectors.
    let reduced_units: Vec<Vec<Scalar>> = (0..m)
        .map(|r| {
            let mut e = vec![field.zero(); m];
            e[r] = field.one();
            jc.reduce(&e)
        })
        .collect();
    for (pos, &g) in free.iter().enumerate() {
        for c in 0..k {
            let mut row = vec![field.zero(); m * k];
            for r in 0..m {
                row[r * k + c] = reduced_units[r][g].clone();
            }
            rows.push(row);
            rhs.push(if pos == c { field.one() } else { field.zero() });
        }
    }
    for (op, bar) in big.iter().zip(&bars) {
        for r in 0..m {
            for c in 0..k {
                let mut row = vec![field.zero(); m * k];
                for t in 0..m {
                    row[t * k + c] += op.get(r, t);
                }
                for d in 0..k {
                    row[r * k + d] -= bar.get(d, c);
                }
                rows.push(row);
                rhs.push(field.zero());
            }
        }
    }
    let sys = Matrix::from_rows(field, m * k, rows)?;
    let sol = sys
        .solve(&rhs)?
        .ok_or_else(|| Error::NoInvariantComplement("no invariant complement of J_k in I_k".into()))?;
    let vecs: Vec<Vec<Scalar>> = (0..k)
        .map(|c| {
            let mut v = vec![field.zero(); i.ambient_dim()];
            for r in 0..m {
                crate::exact_math::matrix::axpy(&mut v, &sol[r * k + c], &i.basis()[r]);
            }
            v
        })
        .collect();
    Ok(Subspace::span(field, i.ambient_dim(), &vecs))
}

/// Left-normed powers `[T, L, ..., L]` for `q = 0..=q_max` (stopping early
/// once they stabilize).
fn bracket_powers(l: &Algebra, t: &Subspace, q_max: usize) -> Result<Vec<Subspace>> {
    let full = l.full_subspace();
    let mut out = vec![t.clone()];
    while out.len() <= q_max {
        let next = l.product(out.last().unwrap(), &full)?;
        let stable = &next == out.last().unwrap();
        out.push(next);
        if stable {
            break;
        }
    }
    Ok(out)
}

fn second_condition(l: &Algebra, powers: &[Vec<Subspace>]) -> Result<Option<Vec<usize>>> {
    let r = powers.len();
    let mut q = vec![0usize; r];
    loop {
        let mut acc = powers[0][q[0]].clone();
        for k in 1..r {
            if acc.is_zero() {
                break;
            }
            acc = l.product(&acc, &powers[k][q[k]])?;
        }
        if !acc.is_zero() {
            return Ok(Some(q));
        }
        let mut pos = 0;
        loop {
            if pos == r {
                return Ok(None);
            }
            q[pos] += 1;
            if q[pos] < powers[pos].len() {
                break;
            }
            q[pos] = 0;
            pos += 1;
        }
    }
}

fn evaluate_chain(l: &Algebra, s: &Structure, levi: &Subspace, chain: &LieChain, q_max: usize) -> Result<ChainOutcome> {
    let field = l.field();
    let struct_ops = s.operators(l);
    let ad_all = l.left_mults();
    let mut outcome = ChainOutcome {
        pair_dims: chain.pairs.iter().map(|(i, j)| (i.dim(), j.dim())).collect(),
        irreducible: false,
        depths: None,
        value: None,
        note: None,
    };
    for (k, (i, j)) in chain.pairs.iter().enumerate() {
        if !l.is_ideal(i) || !l.is_ideal(j) || !s.is_invariant(l, i) || !s.is_invariant(l, j) {
            return Err(Error::InvalidInput(format!(
                "chain pair {k}: not a pair of invariant ideals"
            )));
        }
        if !i.contains_subspace(j)? {
            return Err(Error::InvalidInput(format!("chain pair {k}: J is not contained in I")));
        }
    }
    // Condition 1: each I_k/J_k is irreducible under ad L and the structure.
    let mut gens = ad_all.clone();
    gens.extend(struct_ops.iter().cloned());
    for (k, (i, j)) in chain.pairs.iter().enumerate() {
        if i.dim() == j.dim() {
            outcome.note = Some(format!("pair {k}: I/J is zero"));
            return Ok(outcome);
        }
        let (mats, _) = factor_module(field, i, j, &gens)?;
        match irreducibility(field, i.dim() - j.dim(), &mats) {
            Irreducibility::Irreducible {
                absolute,
                extension_degree,
            } => {
                if !absolute {
                    outcome.note = Some(format!(
                        "pair {k}: irreducible over the base field only (extension degree {extension_degree})"
                    ));
                }
            }
            Irreducibility::Reducible { submodule } => {
                outcome.note = Some(format!(
                    "pair {k}: I/J has an invariant subspace of dimension {}",
                    submodule.dim()
                ));
                return Ok(outcome);
            }
            Irreducibility::Inconclusive { reason } => {
                outcome.note = Some(format!("pair {k}: irreducibility inconclusive ({reason})"));
                return Ok(outcome);
            }
        }
    }
    outcome.irreducible = true;
    // Condition 2 for one invariant complement T_k (ad B and the structure).
    let mut tgens: Vec<Matrix> = levi.basis().iter().map(|b| l.left_mult(b)).collect();
    tgens.extend(struct_ops);
    let mut powers = Vec::new();
    for (i, j) in &chain.pairs {
        let t = invariant_complement(field, i, j, &tgens)?;
        powers.push(bracket_powers(l, &t, q_max)?);
    }
    if powers.is_empty() {
        outcome.depths = Some(Vec::new());
        outcome.value = Some(0);
        return Ok(outcome);
    }
    let Some(q) = second_condition(l, &powers)? else {
        outcome.note = Some(format!("no nonzero bracket with depths up to {q_max}"));
        return Ok(outcome);
    };
    outcome.depths = Some(q);
    let mut ann = l.full_subspace();
    for (i, j) in &chain.pairs {
        ann = ann.intersect(&l.annihilator(i, j)?)?;
    }
    outcome.value = Some(l.dim() - ann.dim());
    Ok(outcome)
}

/// Evaluates the supplied chains together with the default chain `(L, R)`.
pub fn lie_exponent_from_chains(
    l: &Algebra,
    s: &Structure,
    chains: &[LieChain],
    q_max: Option<usize>,
) -> Result<LieExponentReport> {
    if l.kind() != AlgebraKind::Lie {
        return Err(Error::InvalidInput("Lie exponent needs a Lie algebra".into()));
    }
    let levi = invariant_levi(l, s)?;
    let q_max = q_max.unwrap_or(l.dim());
    let mut all = vec![LieChain {
        pairs: vec![(l.full_subspace(), levi.radical.clone())],
    }];
    all.extend(chains.iter().cloned());
    let mut outcomes = Vec::new();
    for c in &all {
        outcomes.push(evaluate_chain(l, s, &levi.complement, c, q_max)?);
    }
    let d = outcomes.iter().filter_map(|o| o.value).max().unwrap_or(0);
    Ok(LieExponentReport {
        d,
        chains: outcomes,
        levi_complement_dim: levi.complement.dim(),
        flags: vec![ONE_COMPLEMENT_FLAG.to_string()],
    })
}
