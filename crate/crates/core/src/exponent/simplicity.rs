//! Structure-simplicity and the criterion `exponent = dim A ⟺ simple`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra_core::{Algebra, AlgebraKind};
use crate::equivariance::Structure;
use crate::error::{Error, Result};
use crate::exact_math::meataxe::{irreducibility, random_combination, spin, Irreducibility};
use crate::exact_math::Subspace;

use super::associative::associative_exponent;
use super::lie::lie_exponent_from_chains;

#[derive(Clone, Debug)]
pub enum Simplicity {
    /// No proper nonzero invariant ideal. `extension_degree > 1` means the
    /// algebra may stop being simple after extending the field.
    Simple {
        absolute: bool,
        extension_degree: usize,
    },
    NotSimple {
        reason: String,
        ideal: Option<Subspace>,
    },
    Inconclusive {
        reason: String,
    },
}

impl Simplicity {
    pub fn is_simple(&self) -> Option<bool> {
        match self {
            Simplicity::Simple { .. } => Some(true),
            Simplicity::NotSimple { .. } => Some(false),
            Simplicity::Inconclusive { .. } => None,
        }
    }

    pub fn describe(&self, a: &Algebra) -> String {
        match self {
            Simplicity::Simple { absolute: true, .. } => "simple (absolutely irreducible)".into(),
            Simplicity::Simple { extension_degree, .. } => {
                format!("simple over the base field; may split after an extension of degree {extension_degree}")
            }
            Simplicity::NotSimple { reason, ideal: Some(i) } => {
                let basis: Vec<String> = i.basis().iter().map(|v| a.render(v)).collect();
                format!("not simple: {reason}; invariant ideal span{{{}}}", basis.join(", "))
            }
            Simplicity::NotSimple { reason, ideal: None } => format!("not simple: {reason}"),
            Simplicity::Inconclusive { reason } => format!("inconclusive: {reason}"),
        }
    }
}

/// Tests whether `A` has no proper nonzero structure-invariant ideal and
/// `A·A ≠ 0`.
pub fn is_invariant_simple(a: &Algebra, s: &Structure) -> Result<Simplicity> {
    if a.dim() == 0 {
        return Ok(Simplicity::NotSimple {
            reason: "zero algebra".into(),
            ideal: None,
        });
    }
    let full = a.full_subspace();
    if a.product(&full, &full)?.is_zero() {
        return Ok(Simplicity::NotSimple {
            reason: "A·A = 0".into(),
            ideal: None,
        });
    }
    let mut gens = a.multiplication_operators();
    gens.extend(s.operators(a));
    let field = a.field();
    Ok(match irreducibility(field, a.dim(), &gens) {
        Irreducibility::Irreducible {
            absolute,
            extension_degree,
        } => Simplicity::Simple {
            absolute,
            extension_degree,
        },
        Irreducibility::Reducible { submodule } => Simplicity::NotSimple {
            reason: "proper invariant ideal".into(),
            ideal: Some(submodule),
        },
        Irreducibility::Inconclusive { reason } => {
            // Spin basis vectors and a few random vectors.
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            let basis: Vec<_> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
            let mut candidates = basis.clone();
            for _ in 0..8 {
                candidates.push(random_combination(field, &basis, &mut rng));
            }
            let proper = candidates
                .iter()
                .map(|v| spin(field, &gens, v))
                .find(|sub| !sub.is_zero() && !sub.is_full());
            match proper {
                Some(ideal) => Simplicity::NotSimple {
                    reason: "proper invariant ideal".into(),
                    ideal: Some(ideal),
                },
                None => Simplicity::Inconclusive { reason },
            }
        }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub dim: usize,
    pub exponent: usize,
    pub simple: Option<bool>,
    pub simplicity: String,
    /// Exponent with the trivial structure (derivation structures only).
    pub ordinary_exponent: Option<usize>,
    pub consistent: bool,
    pub flags: Vec<String>,
}

/// Cross-validates `exponent = dim A ⟺ A is structure-simple` and, for
/// associative algebras with derivations, that the exponent equals the
/// ordinary one. Lie algebras must also be semisimple, and their exponent
/// is the value on the default chain `(L, R)`. Disagreements are returned
/// as `Inconsistency` errors.
pub fn simplicity_criterion_report(a: &Algebra, s: &Structure) -> Result<CriterionReport> {
    let lie = a.kind() == AlgebraKind::Lie;
    let (d, mut flags) = if lie {
        let rep = lie_exponent_from_chains(a, s, &[], None)?;
        (rep.d, rep.flags)
    } else {
        let rep = associative_exponent(a, s)?;
        (rep.d, rep.flags)
    };
    let mut simp = is_invariant_simple(a, s)?;
    if lie && simp.is_simple() == Some(true) {
        let r = a.radical()?.radical;
        if !r.is_zero() {
            simp = Simplicity::NotSimple {
                reason: format!("solvable radical of dimension {}", r.dim()),
                ideal: Some(r),
            };
        }
    }
    let simple = simp.is_simple();
    if let Some(simple) = simple {
        if simple != (d == a.dim()) {
            return Err(Error::Inconsistency(format!(
                "exponent {d} vs dimension {} disagrees with simplicity ({})",
                a.dim(),
                simp.describe(a)
            )));
        }
    }
    let ordinary_exponent = if !lie && matches!(s, Structure::Derivation(_)) {
        let ord = associative_exponent(a, &Structure::Trivial)?.d;
        if ord != d {
            return Err(Error::Inconsistency(format!(
                "exponent with derivations {d} differs from the ordinary exponent {ord}"
            )));
        }
        Some(ord)
    } else {
        None
    };
    flags.dedup();
    Ok(CriterionReport {
        dim: a.dim(),
        exponent: d,
        simple,
        simplicity: simp.describe(a),
        ordinary_exponent,
        consistent: true,
        flags,
    })
}
