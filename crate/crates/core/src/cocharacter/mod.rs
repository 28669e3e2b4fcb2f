//! The `S_n`-character of the codimension quotient and its decomposition
//! into irreducibles.

pub mod partitions;

pub use partitions::{factorial, partitions, CharacterTable, Partition};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra_core::Algebra;
use crate::codimension::engine::{eliminate, Evaluator};
use crate::codimension::{budget, Regime};
use crate::equivariance::Structure;
use crate::error::{Error, Result};
use crate::exact_math::{Matrix, Scalar, Subspace};

/// Largest degree accepted by the cocharacter routines.
pub const MAX_DEGREE: usize = 7;

#[derive(Clone, Debug)]
pub struct ClassCharacter {
    pub n: usize,
    pub regime: Regime,
    /// Trace of each cycle type, in the order of [`partitions`].
    pub values: Vec<(Partition, BigRational)>,
}

impl ClassCharacter {
    /// The character at the identity, which is the codimension.
    pub fn degree(&self) -> BigRational {
        self.values
            .iter()
            .find(|(mu, _)| mu.parts().iter().all(|&p| p == 1))
            .map(|(_, v)| v.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn value(&self, mu: &Partition) -> Option<&BigRational> {
        self.values.iter().find(|(m, _)| m == mu).map(|(_, v)| v)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CocharacterReport {
    pub n: usize,
    pub codim: usize,
    pub class_character: Vec<(Partition, String)>,
    pub multiplicities: Vec<(Partition, u64)>,
}

/// Decorations for a structure: the operator envelope. Gradings use the
/// span of the homogeneous projections, whose codimensions equal the graded
/// ones.
fn decorations(a: &Algebra, s: &Structure) -> (Regime, Vec<Matrix>) {
    match s {
        Structure::Trivial => (Regime::Ordinary, vec![Matrix::identity(a.field(), a.dim())]),
        Structure::Group(g) => (Regime::Group, g.matrices()),
        Structure::Grading(_) => (Regime::Graded, s.envelope(a).basis),
        Structure::Derivation(_) => (Regime::Operator, s.envelope(a).basis),
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidInput(format!(
            "cocharacter degree must be in 1..={MAX_DEGREE}"
        )));
    }
    Ok(())
}

/// Traces of canonical cycle-type representatives acting on the span of
/// the evaluated monomials.
pub fn quotient_character(a: &Algebra, s: &Structure, n: usize) -> Result<ClassCharacter> {
    check_degree(n)?;
    let (regime, decos) = decorations(a, s);
    let basis: Vec<Vec<Scalar>> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
    let ev = Evaluator::new(a, vec![basis; n], &decos);
    let rows = factorial(n)
        .to_u128()
        .unwrap_or(u128::MAX)
        .saturating_mul((decos.len() as u128).pow(n as u32));
    let cols = ev.cols() as u128;
    if rows.saturating_mul(cols) > budget() {
        return Err(Error::BudgetExceeded {
            rows,
            cols,
            budget: budget(),
        });
    }
    let (w, pivots) = eliminate(&ev).rref();
    let values = partitions(n)
        .into_par_iter()
        .map(|mu| {
            let perm = ev.variable_permutation(&mu.representative());
            let mut tr = a.field().zero();
            for (row, &p) in w.iter().zip(&pivots) {
                tr += &row[perm[p]];
            }
            let tr = tr
                .to_rational()
                .ok_or_else(|| Error::Inconsistency(format!("trace at {mu} is not rational")))?;
            Ok((mu, tr))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassCharacter { n, regime, values })
}

/// `m(λ) = <χ, χ^λ>` for every `λ ⊢ n`; fails on non-integral or negative
/// values.
pub fn irreducible_multiplicities(chi: &ClassCharacter) -> Result<Vec<(Partition, u64)>> {
    let n = chi.n;
    let order = BigRational::from_integer(factorial(n));
    let mut table = CharacterTable::new();
    let mut out = Vec::new();
    for lambda in partitions(n) {
        let mut acc = BigRational::zero();
        for (mu, v) in &chi.values {
            let w = BigRational::from_integer(mu.class_size() * BigInt::from(table.value(&lambda, mu)));
            acc += w * v;
        }
        let m = acc / &order;
        if !m.is_integer() || m.is_negative() {
            return Err(Error::Inconsistency(format!("multiplicity of {lambda} is {m}")));
        }
        out.push((lambda, m.to_integer().to_u64().expect("small multiplicity")));
    }
    Ok(out)
}

pub fn cocharacter(a: &Algebra, s: &Structure, n: usize) -> Result<CocharacterReport> {
    let chi = quotient_character(a, s, n)?;
    let mults = irreducible_multiplicities(&chi)?;
    let codim = chi.degree().to_integer().to_usize().unwrap_or(0);
    let total: BigInt = mults.iter().map(|(l, m)| l.dimension() * BigInt::from(*m)).sum();
    if total != BigInt::from(codim) {
        return Err(Error::Inconsistency(format!(
            "multiplicities account for {total}, codimension is {codim}"
        )));
    }
    Ok(CocharacterReport {
        n,
        codim,
        class_character: chi.values.iter().map(|(mu, v)| (mu.clone(), v.to_string())).collect(),
        multiplicities: mults,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VanishingReport {
    pub n: usize,
    pub ideal_dim: usize,
    pub nilpotency_index: usize,
    /// Partitions whose rows beyond `dim A - dim I` sum to at least the
    /// index, with their (zero) multiplicities.
    pub triggered: Vec<(Partition, u64)>,
    pub unchecked: Vec<Partition>,
}

/// Checks that `m(λ) = 0` whenever `sum_{k > dim A - dim I} λ_k ≥ p` for an
/// invariant nilpotent ideal `I` with `I^p = 0`.
pub fn cocharacter_vanishing_check(a: &Algebra, s: &Structure, ideal: &Subspace, n: usize) -> Result<VanishingReport> {
    if !a.is_ideal(ideal) || !s.is_invariant(a, ideal) {
        return Err(Error::InvalidInput("not an invariant ideal".into()));
    }
    let p = a
        .nilpotency_index(ideal)?
        .ok_or_else(|| Error::InvalidInput("ideal is not nilpotent".into()))?;
    let skip = a.dim() - ideal.dim();
    let chi = quotient_character(a, s, n)?;
    let mults = irreducible_multiplicities(&chi)?;
    let mut triggered = Vec::new();
    let mut unchecked = Vec::new();
    for (lambda, m) in mults {
        let tail: usize = lambda.parts().iter().skip(skip).sum();
        if tail >= p {
            if m != 0 {
                return Err(Error::Inconsistency(format!(
                    "multiplicity of {lambda} is {m} although its trailing rows sum to {tail} >= {p}"
                )));
            }
            triggered.push((lambda, m));
        } else {
            unchecked.push(lambda);
        }
    }
    Ok(VanishingReport {
        n,
        ideal_dim: ideal.dim(),
        nilpotency_index: p,
        triggered,
        unchecked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::constructions::{matrix_algebra, sl2, upper_triangular};
    use crate::exact_math::Field;

    fn mults(a: &Algebra, n: usize) -> Vec<u64> {
        cocharacter(a, &Structure::Trivial, n)
            .unwrap()
            .multiplicities
            .into_iter()
            .map(|(_, m)| m)
            .collect()
    }

    #[test]
    fn matrix_algebras() {
        let q = Field::rationals();
        let m2 = matrix_algebra(&q, 2);
        let chi = quotient_character(&m2, &Structure::Trivial, 2).unwrap();
        assert_eq!(chi.value(&Partition::new(vec![2])).unwrap(), &BigRational::zero());
        assert_eq!(chi.degree(), BigRational::from_integer(2.into()));
        assert_eq!(mults(&m2, 2), vec![1, 1]);
        assert_eq!(mults(&m2, 3), vec![1, 2, 1]);
        assert_eq!(mults(&m2, 4), vec![1, 3, 2, 3, 0]);
        let ut2 = upper_triangular(&q, 2);
        assert_eq!(mults(&ut2, 4), vec![1, 3, 1, 2, 0]);
        let f = matrix_algebra(&q, 1);
        let chi = quotient_character(&f, &Structure::Trivial, 3).unwrap();
        assert!(chi
            .values
            .iter()
            .all(|(_, v)| v == &BigRational::from_integer(1.into())));
        // Degree 3 multilinear Lie polynomials carry (2,1), and sl_2 has no
        // identities there.
        assert_eq!(mults(&sl2(&q), 3), vec![0, 1, 0]);
    }

    #[test]
    fn vanishing() {
        let q = Field::rationals();
        let ut2 = upper_triangular(&q, 2);
        let j = ut2.radical().unwrap().radical;
        let r = cocharacter_vanishing_check(&ut2, &Structure::Trivial, &j, 4).unwrap();
        assert_eq!(r.nilpotency_index, 2);
        assert_eq!(r.triggered.len(), 1);
        assert_eq!(r.triggered[0].0, Partition::new(vec![1, 1, 1, 1]));
    }
}
