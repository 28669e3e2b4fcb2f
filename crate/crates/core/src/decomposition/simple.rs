//! Splitting semisimple algebras into simple ideals, and merging simple
//! ideals into minimal invariant ones.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra_core::Algebra;
use crate::equivariance::Structure;
use crate::error::{Error, Result};
use crate::exact_math::factor::factor;
use crate::exact_math::meataxe::{close_subspace, commutant, random_combination};
use crate::exact_math::poly::minpoly;
use crate::exact_math::{Matrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompositionKind {
    Simple,
    InvariantSimple,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub space: Subspace,
    /// Dimension of the centroid over the base field. A value above one
    /// means the ideal is simple over the base field but may split after an
    /// extension of this degree.
    pub extension_degree: usize,
}

impl Component {
    pub fn status(&self) -> String {
        if self.extension_degree == 1 {
            "simple".into()
        } else {
            format!(
                "simple over base field, possibly split after extension of degree {}",
                self.extension_degree
            )
        }
    }
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub components: Vec<Component>,
}

#[derive(Serialize)]
pub struct DecompositionSummary {
    pub kind: DecompositionKind,
    pub dims: Vec<usize>,
    pub status: Vec<String>,
    pub bases: Vec<Vec<String>>,
}

impl Decomposition {
    pub fn spaces(&self) -> Vec<Subspace> {
        self.components.iter().map(|c| c.space.clone()).collect()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.space.dim()).collect()
    }

    pub fn summary(&self, a: &Algebra) -> DecompositionSummary {
        DecompositionSummary {
            kind: self.kind,
            dims: self.dims(),
            status: self.components.iter().map(Component::status).collect(),
            bases: self
                .components
                .iter()
                .map(|c| c.space.basis().iter().map(|v| a.render(v)).collect())
                .collect(),
        }
    }

    /// Components are ideals with vanishing pairwise products summing
    /// directly to `A`.
    pub fn verify(&self, a: &Algebra) -> Result<()> {
        let mut total = a.zero_subspace();
        for (i, c) in self.components.iter().enumerate() {
            if !a.is_ideal(&c.space) {
                return Err(Error::Inconsistency(format!("component {i} is not an ideal")));
            }
            for (j, d) in self.components.iter().enumerate() {
                if i != j && !a.product(&c.space, &d.space)?.is_zero() {
                    return Err(Error::Inconsistency(format!(
                        "components {i} and {j} do not annihilate each other"
                    )));
                }
            }
            total = total.sum(&c.space)?;
        }
        let dims: usize = self.dims().iter().sum();
        if !total.is_full() || dims != a.dim() {
            return Err(Error::Inconsistency(
                "components do not sum directly to the algebra".into(),
            ));
        }
        Ok(())
    }
}

/// Commutant of all multiplication operators.
pub fn centroid(a: &Algebra) -> Vec<Matrix> {
    commutant(a.field(), a.dim(), &a.multiplication_operators())
}

/// Split one semisimple algebra (given as an ideal of `a`) recursively.
fn split(a: &Algebra, ideal: &Subspace, rng: &mut ChaCha8Rng, out: &mut Vec<Component>) -> Result<()> {
    let sub = a.subalgebra(ideal)?;
    let field = a.field();
    let k = ideal.dim();
    let cent = centroid(&sub.algebra);
    let flat: Vec<Vec<Scalar>> = cent.iter().map(|m| m.entries().to_vec()).collect();
    // A generic element generates the (commutative, semisimple) centroid.
    let mut best: Option<(Matrix, crate::exact_math::Poly)> = None;
    for attempt in 0..24 {
        let c = if attempt == 0 && cent.len() == 1 {
            cent[0].clone()
        } else {
            let v = random_combination(field, &flat, rng);
            Matrix::from_fn(field, k, k, |i, j| v[i * k + j].clone())
        };
        let mp = minpoly(&c);
        let deg = mp.degree().unwrap_or(0);
        let better = best.as_ref().is_none_or(|(_, b)| deg > b.degree().unwrap_or(0));
        if better {
            best = Some((c, mp));
        }
        if deg == cent.len() {
            break;
        }
    }
    let (c, mp) = best.expect("at least one attempt");
    let factors = factor(&mp);
    if factors.len() == 1 {
        if factors[0].1 > 1 {
            return Err(Error::Inconsistency(
                "centroid of a semisimple algebra is not reduced".into(),
            ));
        }
        out.push(Component {
            space: ideal.clone(),
            extension_degree: cent.len(),
        });
        return Ok(());
    }
    for (f, _) in factors {
        let ker = f.eval_matrix(&c).kernel();
        let vecs: Vec<Vec<Scalar>> = ker.basis().iter().map(|v| sub.inclusion.apply(v)).collect();
        let piece = Subspace::span(field, a.dim(), &vecs);
        if !a.is_ideal(&piece) {
            return Err(Error::Inconsistency("centroid eigenspace is not an ideal".into()));
        }
        split(a, &piece, rng, out)?;
    }
    Ok(())
}

/// Decomposes a semisimple algebra into simple ideals (over the base field).
pub fn simple_ideal_decomposition(a: &Algebra) -> Result<Decomposition> {
    let rad = a.radical()?.radical;
    if !rad.is_zero() {
        return Err(Error::NonzeroRadical(rad.dim()));
    }
    let mut components = Vec::new();
    if a.dim() > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        split(a, &a.full_subspace(), &mut rng, &mut components)?;
    }
    components.sort_by_key(|c| (c.space.pivots().first().copied(), c.space.dim()));
    let d = Decomposition {
        kind: DecompositionKind::Simple,
        components,
    };
    d.verify(a)?;
    Ok(d)
}

/// Minimal structure-invariant ideals of a semisimple algebra: each simple
/// ideal is closed under the structure operators and multiplications, and
/// the minimal closures are kept.
pub fn invariant_simple_decomposition(a: &Algebra, s: &Structure) -> Result<Decomposition> {
    let simple = simple_ideal_decomposition(a)?;
    if matches!(s, Structure::Trivial) {
        return Ok(simple);
    }
    let mut gens = s.operators(a);
    gens.extend(a.multiplication_operators());
    let closures: Vec<Subspace> = simple
        .components
        .iter()
        .map(|c| close_subspace(a.field(), &gens, c.space.basis(), a.dim()))
        .collect();
    let mut minimal: Vec<Subspace> = Vec::new();
    for c in &closures {
        let has_smaller = closures
            .iter()
            .any(|d| d.dim() < c.dim() && c.contains_subspace(d).unwrap_or(false));
        if !has_smaller && !minimal.contains(c) {
            minimal.push(c.clone());
        }
    }
    let components = minimal
        .into_iter()
        .map(|space| {
            let extension_degree = simple
                .components
                .iter()
                .filter(|b| space.contains_subspace(&b.space).unwrap_or(false))
                .map(|b| b.extension_degree)
                .max()
                .unwrap_or(1);
            Component {
                space,
                extension_degree,
            }
        })
        .collect();
    let d = Decomposition {
        kind: DecompositionKind::InvariantSimple,
        components,
    };
    d.verify(a)?;
    for c in &d.components {
        if !s.is_invariant(a, &c.space) {
            return Err(Error::Inconsistency("merged component is not invariant".into()));
        }
    }
    Ok(d)
}
