//! The exponent of an associative algebra with structure: the largest
//! `dim(B_{i_1} + ... + B_{i_r})` over distinct invariant-simple components
//! of an invariant complement `B` with `B_{i_1} J B_{i_2} J ... J B_{i_r} ≠ 0`.

use serde::Serialize;

use crate::algebra_core::{Algebra, AlgebraKind};
use crate::decomposition::{invariant_simple_decomposition, invariant_wedderburn_malcev};
use crate::equivariance::Structure;
use crate::error::{Error, Result};
use crate::exact_math::{Scalar, Subspace};

/// Interpretation flag recorded in every associative exponent report.
pub const DISTINCT_INDEX_FLAG: &str = "distinct-index reading of the exponent formula";

#[derive(Clone, Debug)]
pub struct ExponentReport {
    pub d: usize,
    /// Maximizing component sequence (indices into `components`).
    pub witness: Vec<usize>,
    pub components: Vec<Subspace>,
    pub radical: Subspace,
    pub flags: Vec<String>,
}

#[derive(Serialize)]
pub struct ExponentSummary {
    pub d: usize,
    pub witness: Vec<usize>,
    pub component_dims: Vec<usize>,
    pub radical_dim: usize,
    pub flags: Vec<String>,
}

impl ExponentReport {
    pub fn component_dims(&self) -> Vec<usize> {
        self.components.iter().map(Subspace::dim).collect()
    }

    pub fn summary(&self) -> ExponentSummary {
        ExponentSummary {
            d: self.d,
            witness: self.witness.clone(),
            component_dims: self.component_dims(),
            radical_dim: self.radical.dim(),
            flags: self.flags.clone(),
        }
    }

    /// Re-multiplies the witness chain and checks that it is nonzero and
    /// that the dimensions add up to `d`.
    pub fn verify_witness(&self, a: &Algebra) -> Result<()> {
        if self.witness.is_empty() {
            return if self.d == 0 {
                Ok(())
            } else {
                Err(Error::Inconsistency("empty witness for a positive exponent".into()))
            };
        }
        let p = chain_product(a, &self.components, &self.radical, &self.witness)?;
        let dims: usize = self.witness.iter().map(|&i| self.components[i].dim()).sum();
        if p.is_zero() || dims != self.d {
            return Err(Error::Inconsistency("exponent witness does not verify".into()));
        }
        Ok(())
    }
}

/// `B_{i_1} J B_{i_2} J ... J B_{i_r}`.
pub fn chain_product(a: &Algebra, comps: &[Subspace], j: &Subspace, seq: &[usize]) -> Result<Subspace> {
    let mut acc = comps[seq[0]].clone();
    for &i in &seq[1..] {
        acc = a.product(&a.product(&acc, j)?, &comps[i])?;
    }
    Ok(acc)
}

/// Depth-first search over sequences of distinct components, extending a
/// nonzero prefix product; a zero prefix prunes all its extensions.
fn search(
    a: &Algebra,
    comps: &[Subspace],
    j: &Subspace,
    prefix: &mut Vec<usize>,
    prod: &Subspace,
    best: &mut (usize, Vec<usize>),
) -> Result<()> {
    let dim: usize = prefix.iter().map(|&i| comps[i].dim()).sum();
    if dim > best.0 {
        *best = (dim, prefix.clone());
    }
    let pj = a.product(prod, j)?;
    if pj.is_zero() {
        return Ok(());
    }
    for i in 0..comps.len() {
        if prefix.contains(&i) {
            continue;
        }
        let next = a.product(&pj, &comps[i])?;
        if next.is_zero() {
            continue;
        }
        prefix.push(i);
        search(a, comps, j, prefix, &next, best)?;
        prefix.pop();
    }
    Ok(())
}

pub fn associative_exponent(a: &Algebra, s: &Structure) -> Result<ExponentReport> {
    if a.kind() != AlgebraKind::Associative {
        return Err(Error::InvalidInput(
            "associative exponent needs an associative algebra".into(),
        ));
    }
    let split = invariant_wedderburn_malcev(a, s)?;
    let mut flags = vec![DISTINCT_INDEX_FLAG.to_string()];
    let components: Vec<Subspace> = if split.complement.is_zero() {
        Vec::new()
    } else {
        let sub = a.subalgebra(&split.complement)?;
        let restricted = s.on_subalgebra(a, &sub)?;
        let dec = invariant_simple_decomposition(&sub.algebra, &restricted)?;
        let ext = dec.components.iter().map(|c| c.extension_degree).max().unwrap_or(1);
        if ext > 1 {
            flags.push(format!(
                "components are simple over the base field only; the algebraically closed value may differ (extension degree {ext})"
            ));
        }
        dec.components
            .iter()
            .map(|c| {
                let vecs: Vec<Vec<Scalar>> = c.space.basis().iter().map(|v| sub.inclusion.apply(v)).collect();
                Subspace::span(a.field(), a.dim(), &vecs)
            })
            .collect()
    };
    let mut best = (0usize, Vec::new());
    for i in 0..components.len() {
        let mut prefix = vec![i];
        search(a, &components, &split.radical, &mut prefix, &components[i], &mut best)?;
    }
    let report = ExponentReport {
        d: best.0,
        witness: best.1,
        components,
        radical: split.radical,
        flags,
    };
    report.verify_witness(a)?;
    Ok(report)
}
