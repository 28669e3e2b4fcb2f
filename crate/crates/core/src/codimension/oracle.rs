//! Brute-force cross-check of a codimension: enumerate a basis of the
//! relations among the spanning monomials, confirm each relation is an
//! identity by direct evaluation, and compare ranks modulo two primes.

use serde::Serialize;

use crate::algebra_core::Algebra;
use crate::equivariance::Structure;
use crate::error::{Error, Result};
use crate::exact_math::modular::{primes_for, rank_mod};
use crate::exact_math::Matrix;

use super::engine::{all_rows, row_labels, Evaluator};
use super::polynomial::{check_resolved, Resolved};
use super::{blocks, check_budget};

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub rows: usize,
    pub kernel_dim: usize,
    /// `rows - kernel_dim`, summed over blocks.
    pub value: usize,
    pub identities_verified: usize,
    /// `(p, rank mod p)` for each prime.
    pub modular_ranks: Vec<(u64, usize)>,
}

pub fn oracle_codim(a: &Algebra, s: &Structure, n: usize) -> Result<OracleReport> {
    let (_, blocks) = blocks(a, s, n);
    check_budget(a, &blocks)?;
    let primes = primes_for(a.field(), 2, 1 << 40);
    let mut report = OracleReport {
        n,
        rows: 0,
        kernel_dim: 0,
        value: 0,
        identities_verified: 0,
        modular_ranks: primes.iter().map(|p| (p.p, 0)).collect(),
    };
    for b in blocks {
        let ev = Evaluator::new(a, b.slots.clone(), &b.decorations);
        let labels = row_labels(n, b.decorations.len());
        let rows = all_rows(&ev);
        for (k, p) in primes.iter().enumerate() {
            let (r, _) = rank_mod(&rows, *p)
                .ok_or_else(|| Error::Inconsistency(format!("prime {} divides a denominator", p.p)))?;
            report.modular_ranks[k].1 += r;
        }
        let m = Matrix::from_rows(a.field(), ev.cols(), rows)?;
        let kernel = m.transpose().kernel();
        report.rows += labels.len();
        report.kernel_dim += kernel.dim();
        report.value += labels.len() - kernel.dim();
        let key_slots: Vec<_> = b
            .slots
            .iter()
            .map(|cands| cands.iter().map(|v| (a.render(v), v.clone())).collect())
            .collect();
        let key_names = (1..=n).map(|v| format!("x{v}")).collect();
        for rel in kernel.basis() {
            let terms = rel
                .iter()
                .zip(&labels)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, (sigma, decos))| {
                    let factors = sigma
                        .iter()
                        .map(|&v| (v, Some(b.decorations[decos[v]].clone())))
                        .collect();
                    (c.clone(), factors)
                })
                .collect();
            let resolved = Resolved {
                key_names: Vec::clone(&key_names),
                key_slots: Vec::clone(&key_slots),
                terms,
            };
            let check = check_resolved(a, &resolved);
            if !check.identity {
                return Err(Error::Inconsistency(format!(
                    "relation among monomials is not an identity (witness {:?})",
                    check.witness
                )));
            }
            report.identities_verified += 1;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::constructions::{matrix_algebra, upper_triangular};
    use crate::codimension::codim;
    use crate::exact_math::Field;

    #[test]
    fn oracle_matches_engine() {
        let q = Field::rationals();
        for a in [matrix_algebra(&q, 2), upper_triangular(&q, 2)] {
            for n in 1..=3 {
                let o = oracle_codim(&a, &Structure::Trivial, n).unwrap();
                let c = codim(&a, &Structure::Trivial, n).unwrap().value;
                assert_eq!(o.value, c);
                assert!(o.modular_ranks.iter().all(|&(_, r)| r == c));
                assert_eq!(o.identities_verified, o.kernel_dim);
            }
        }
    }
}
