//! Codimension sequences as ranks of multilinear evaluation matrices, in the
//! ordinary, graded, group and operator regimes.

pub mod engine;
pub mod oracle;
pub mod polynomial;

pub use engine::{permutations, Evaluator};
pub use oracle::{oracle_codim, OracleReport};
pub use polynomial::{is_identity, DecoratedMonomial, Decoration, IdentityReport, MultilinearPolynomial, TermSpec};

use serde::Serialize;

use crate::algebra_core::{Algebra, AlgebraKind};
use crate::equivariance::{Label, OperatorAlgebra, Structure};
use crate::error::{Error, Result};
use crate::exact_math::{Matrix, Scalar};
use crate::exponent::{associative_exponent, lie_exponent_from_chains};

/// Default bound on `rows x columns` of an evaluation matrix.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// The entry budget, overridable through `CODIM_BUDGET`.
pub fn budget() -> u128 {
    std::env::var("CODIM_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse::<f64>().ok())
        .filter(|v| *v > 0.0)
        .map_or(DEFAULT_BUDGET, |v| v as u128)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Ordinary,
    Graded,
    Group,
    Operator,
}

#[derive(Clone, Debug, Serialize)]
pub struct LabelBlock {
    pub labels: Vec<Label>,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodimReport {
    pub n: usize,
    pub value: usize,
    pub regime: Regime,
    /// Total rows and the column count of the largest block.
    pub rows: u128,
    pub cols: u128,
    pub breakdown: Option<Vec<LabelBlock>>,
}

/// One evaluation matrix: candidate vectors per variable and the
/// decorations applied to every variable.
pub(crate) struct Block {
    pub labels: Option<Vec<Label>>,
    pub slots: Vec<Vec<Vec<Scalar>>>,
    pub decorations: Vec<Matrix>,
}

impl Block {
    fn rows(&self) -> u128 {
        let n = self.slots.len() as u32;
        let fact: u128 = (1..=n as u128).product();
        fact * (self.decorations.len() as u128).pow(n)
    }

    fn cols(&self, d: usize) -> u128 {
        self.slots.iter().map(|s| s.len() as u128).product::<u128>() * d as u128
    }
}

fn basis_slots(a: &Algebra, n: usize) -> Vec<Vec<Vec<Scalar>>> {
    let basis: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
    vec![basis; n]
}

/// Regime and evaluation blocks of a structure.
pub(crate) fn blocks(a: &Algebra, s: &Structure, n: usize) -> (Regime, Vec<Block>) {
    let id = vec![Matrix::identity(a.field(), a.dim())];
    match s {
        Structure::Trivial => (
            Regime::Ordinary,
            vec![Block {
                labels: None,
                slots: basis_slots(a, n),
                decorations: id,
            }],
        ),
        Structure::Group(g) => (
            Regime::Group,
            vec![Block {
                labels: None,
                slots: basis_slots(a, n),
                decorations: g.matrices(),
            }],
        ),
        Structure::Derivation(_) => (
            Regime::Operator,
            vec![Block {
                labels: None,
                slots: basis_slots(a, n),
                decorations: s.envelope(a).basis,
            }],
        ),
        Structure::Grading(g) => {
            let support = g.support();
            let mut label_vectors: Vec<Vec<Label>> = vec![Vec::new()];
            for _ in 0..n {
                label_vectors = label_vectors
                    .into_iter()
                    .flat_map(|lv| {
                        support.iter().map(move |l| {
                            let mut lv = lv.clone();
                            lv.push(l.clone());
                            lv
                        })
                    })
                    .collect();
            }
            let out = label_vectors
                .into_iter()
                .map(|lv| Block {
                    slots: lv
                        .iter()
                        .map(|l| g.component(l).expect("support label").basis().to_vec())
                        .collect(),
                    labels: Some(lv),
                    decorations: id.clone(),
                })
                .collect();
            (Regime::Graded, out)
        }
    }
}

pub(crate) fn check_budget(a: &Algebra, blocks: &[Block]) -> Result<(u128, u128)> {
    let rows: u128 = blocks.iter().map(Block::rows).sum();
    let cols = blocks.iter().map(|b| b.cols(a.dim())).max().unwrap_or(0);
    let limit = budget();
    if blocks.iter().any(|b| b.rows().saturating_mul(b.cols(a.dim())) > limit) {
        return Err(Error::BudgetExceeded {
            rows,
            cols,
            budget: limit,
        });
    }
    Ok((rows, cols))
}

fn run(a: &Algebra, regime: Regime, blocks: Vec<Block>, n: usize) -> Result<CodimReport> {
    if n == 0 {
        return Err(Error::InvalidInput("codimension degree must be at least 1".into()));
    }
    let (rows, cols) = check_budget(a, &blocks)?;
    let mut value = 0;
    let mut breakdown = Vec::new();
    for b in blocks {
        let ev = Evaluator::new(a, b.slots, &b.decorations);
        let rank = engine::eliminate(&ev).rank();
        value += rank;
        if let Some(labels) = b.labels {
            breakdown.push(LabelBlock { labels, rank });
        }
    }
    Ok(CodimReport {
        n,
        value,
        regime,
        rows,
        cols,
        breakdown: (regime == Regime::Graded).then_some(breakdown),
    })
}

/// `c_n` of the algebra with the given structure.
pub fn codim(a: &Algebra, s: &Structure, n: usize) -> Result<CodimReport> {
    let (regime, blocks) = blocks(a, s, n);
    run(a, regime, blocks, n)
}

/// `c_n` with decorations ranging over an explicit operator algebra.
pub fn codim_operator(a: &Algebra, env: &OperatorAlgebra, n: usize) -> Result<CodimReport> {
    let block = Block {
        labels: None,
        slots: basis_slots(a, n),
        decorations: env.basis.clone(),
    };
    run(a, Regime::Operator, vec![block], n)
}

#[derive(Clone, Debug, Serialize)]
pub struct CodimSeries {
    pub reports: Vec<CodimReport>,
    pub values: Vec<usize>,
    /// `c_n^(1/n)`, a trend only.
    pub root_trend: Vec<f64>,
    /// The exponent from the structural formula, when it can be computed.
    pub predicted_exponent: Option<usize>,
}

pub fn codim_series(a: &Algebra, s: &Structure, n_max: usize) -> Result<CodimSeries> {
    let reports = (1..=n_max).map(|n| codim(a, s, n)).collect::<Result<Vec<_>>>()?;
    let values: Vec<usize> = reports.iter().map(|r| r.value).collect();
    let root_trend = values
        .iter()
        .enumerate()
        .map(|(i, &c)| (c as f64).powf(1.0 / (i + 1) as f64))
        .collect();
    let predicted_exponent = match a.kind() {
        AlgebraKind::Associative => associative_exponent(a, s).ok().map(|r| r.d),
        AlgebraKind::Lie => lie_exponent_from_chains(a, s, &[], None).ok().map(|r| r.d),
    };
    Ok(CodimSeries {
        reports,
        values,
        root_trend,
        predicted_exponent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::constructions::{abelian_lie, inner_derivations, matrix_algebra, sl2, upper_triangular};
    use crate::equivariance::{dual_action_from_grading, DerivationAction, Grading, GradingGroup};
    use crate::exact_math::Field;

    fn values(a: &Algebra, s: &Structure, n_max: usize) -> Vec<usize> {
        (1..=n_max).map(|n| codim(a, s, n).unwrap().value).collect()
    }

    fn m2_graded(a: &Algebra) -> Grading {
        Grading::from_basis_labels(a, GradingGroup::cyclic(2), &[vec![0], vec![1], vec![1], vec![0]]).unwrap()
    }

    #[test]
    fn ordinary_sequences() {
        let q = Field::rationals();
        assert_eq!(values(&matrix_algebra(&q, 1), &Structure::Trivial, 3), vec![1, 1, 1]);
        assert_eq!(values(&matrix_algebra(&q, 2), &Structure::Trivial, 3), vec![1, 2, 6]);
        assert_eq!(
            values(&upper_triangular(&q, 2), &Structure::Trivial, 4),
            vec![1, 2, 6, 18]
        );
        assert_eq!(values(&abelian_lie(&q, 2), &Structure::Trivial, 3), vec![1, 0, 0]);
        assert_eq!(values(&sl2(&q), &Structure::Trivial, 2), vec![1, 1]);
    }

    #[test]
    fn graded_and_dual() {
        let q = Field::rationals();
        let a = matrix_algebra(&q, 2);
        let g = m2_graded(&a);
        let rep = codim(&a, &Structure::Grading(g.clone()), 2).unwrap();
        assert_eq!(rep.value, 7);
        let ranks: Vec<usize> = rep.breakdown.unwrap().iter().map(|b| b.rank).collect();
        assert_eq!(ranks, vec![1, 2, 2, 2]);
        let dual = Structure::Group(dual_action_from_grading(&a, &g).unwrap());
        assert_eq!(values(&a, &Structure::Grading(g), 2), values(&a, &dual, 2));
    }

    #[test]
    fn adjoint_envelope() {
        let q = Field::rationals();
        let a = matrix_algebra(&q, 2);
        let elems: Vec<Vec<Scalar>> = [vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![1, 0, 0, -1]]
            .iter()
            .map(|v| v.iter().map(|&x| q.from_int(x)).collect())
            .collect();
        let s = Structure::Derivation(DerivationAction::new(inner_derivations(&a, &elems)));
        assert_eq!(s.envelope(&a).dim(), 10);
        assert_eq!(codim(&a, &s, 1).unwrap().value, 10);
    }

    #[test]
    fn budget_is_enforced() {
        let q = Field::rationals();
        let a = matrix_algebra(&q, 2);
        let (_, b) = blocks(&a, &Structure::Trivial, 9);
        assert!(matches!(check_budget(&a, &b), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn extension_keeps_values() {
        let q = Field::rationals();
        let a = upper_triangular(&q, 2);
        let k = Field::cyclotomic(3).unwrap();
        let ak = a.extend_scalars(&k).unwrap();
        assert_eq!(values(&a, &Structure::Trivial, 3), values(&ak, &Structure::Trivial, 3));
    }
}
