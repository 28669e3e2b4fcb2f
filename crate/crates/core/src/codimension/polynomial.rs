//! Decorated multilinear polynomials and identity checking by direct
//! evaluation on basis tuples.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra_core::Algebra;
use crate::equivariance::{Label, Structure};
use crate::error::{Error, Result};
use crate::exact_math::matrix::vec_is_zero;
use crate::exact_math::{parse_scalar, Matrix, Scalar};

/// A decoration on one occurrence of a variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoration {
    Identity,
    /// Composition `g_{k_1} ∘ g_{k_2} ∘ ...` of structure generators (group
    /// generators or derivations).
    Word(Vec<usize>),
    /// Homogeneous degree of a graded variable.
    Label(Label),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedMonomial {
    /// Variables (0-based) in written order.
    pub vars: Vec<usize>,
    pub decor: Vec<Decoration>,
}

#[derive(Clone, Debug)]
pub struct MultilinearPolynomial {
    pub n: usize,
    pub terms: Vec<(Scalar, DecoratedMonomial)>,
}

/// JSON form of a term: `vars` are 1-based variable indices in written
/// order; `decor` has one entry per position (`null` for none, an integer
/// or list of integers for a word in the generators, a list of integers
/// for a grading label).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: String,
    pub vars: Vec<usize>,
    #[serde(default)]
    pub decor: Vec<Value>,
}

fn parse_decor(v: &Value, graded: bool, loc: &str) -> Result<Decoration> {
    let ints = |arr: &[Value]| -> Result<Vec<i64>> {
        arr.iter()
            .map(|x| {
                x.as_i64()
                    .ok_or_else(|| Error::parse(loc, "decoration entries must be integers"))
            })
            .collect()
    };
    match v {
        Value::Null => Ok(Decoration::Identity),
        Value::Number(_) if graded => Ok(Decoration::Label(vec![v
            .as_i64()
            .ok_or_else(|| Error::parse(loc, "bad label"))?])),
        Value::Number(_) => {
            let k = v
                .as_u64()
                .ok_or_else(|| Error::parse(loc, "generator index must be nonnegative"))?;
            Ok(Decoration::Word(vec![k as usize]))
        }
        Value::Array(arr) if graded => Ok(Decoration::Label(ints(arr)?)),
        Value::Array(arr) => {
            let w = ints(arr)?;
            if w.iter().any(|&k| k < 0) {
                return Err(Error::parse(loc, "generator index must be nonnegative"));
            }
            Ok(if w.is_empty() {
                Decoration::Identity
            } else {
                Decoration::Word(w.into_iter().map(|k| k as usize).collect())
            })
        }
        _ => Err(Error::parse(
            loc,
            "decoration must be null, an integer or a list of integers",
        )),
    }
}

impl MultilinearPolynomial {
    /// Parses JSON terms; `graded` selects how list decorations are read.
    pub fn from_specs(a: &Algebra, specs: &[TermSpec], graded: bool, loc: &str) -> Result<MultilinearPolynomial> {
        let mut terms = Vec::new();
        let mut n = 0;
        for (t, spec) in specs.iter().enumerate() {
            let tloc = format!("{loc}.terms[{t}]");
            let coeff = parse_scalar(a.field(), &spec.coeff).map_err(|e| Error::parse(&tloc, e.to_string()))?;
            if spec.vars.contains(&0) {
                return Err(Error::parse(&tloc, "variables are numbered from 1"));
            }
            let vars: Vec<usize> = spec.vars.iter().map(|&v| v - 1).collect();
            let decor = if spec.decor.is_empty() {
                vec![Decoration::Identity; vars.len()]
            } else if spec.decor.len() == vars.len() {
                spec.decor
                    .iter()
                    .map(|d| parse_decor(d, graded, &tloc))
                    .collect::<Result<Vec<_>>>()?
            } else {
                return Err(Error::parse(&tloc, "decor must have one entry per variable"));
            };
            if t == 0 {
                n = vars.len();
            }
            let mut sorted = vars.clone();
            sorted.sort_unstable();
            if sorted != (0..n).collect::<Vec<_>>() {
                return Err(Error::parse(
                    &tloc,
                    format!("term is not multilinear of degree {n} in x1..x{n}"),
                ));
            }
            terms.push((coeff, DecoratedMonomial { vars, decor }));
        }
        if terms.is_empty() {
            return Err(Error::parse(loc, "polynomial has no terms"));
        }
        Ok(MultilinearPolynomial { n, terms })
    }

    pub fn to_specs(&self) -> Vec<TermSpec> {
        self.terms
            .iter()
            .map(|(c, m)| TermSpec {
                coeff: c.to_string(),
                vars: m.vars.iter().map(|v| v + 1).collect(),
                decor: m
                    .decor
                    .iter()
                    .map(|d| match d {
                        Decoration::Identity => Value::Null,
                        Decoration::Word(w) => Value::from(w.clone()),
                        Decoration::Label(l) => Value::from(l.clone()),
                    })
                    .collect(),
            })
            .collect()
    }
}

/// Factor `(key, operator)` of a resolved term.
pub(crate) type Factor = (usize, Option<Matrix>);

/// A polynomial in resolved form: every factor is a substitution key (a
/// variable, or a graded variable) with an optional operator applied.
#[derive(Clone, Debug)]
pub(crate) struct Resolved {
    pub key_names: Vec<String>,
    pub key_slots: Vec<Vec<(String, Vec<Scalar>)>>,
    pub terms: Vec<(Scalar, Vec<Factor>)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: bool,
    pub checked: usize,
    /// Substitution `(variable, basis element)` on which the polynomial is
    /// nonzero.
    pub witness: Option<Vec<(String, String)>>,
    pub value: Option<String>,
}

fn word_operator(gens: &[Matrix], word: &[usize], n: usize, field: &crate::exact_math::Field) -> Result<Matrix> {
    let mut m = Matrix::identity(field, n);
    for &k in word {
        let g = gens
            .get(k)
            .ok_or_else(|| Error::InvalidInput(format!("decoration refers to generator {k}, which does not exist")))?;
        m = &m * g;
    }
    Ok(m)
}

pub(crate) fn resolve(a: &Algebra, s: &Structure, f: &MultilinearPolynomial) -> Result<Resolved> {
    let field = a.field();
    let basis: Vec<(String, Vec<Scalar>)> = (0..a.dim())
        .map(|i| (a.names()[i].clone(), a.basis_vector(i)))
        .collect();
    let gens: Vec<Matrix> = match s {
        Structure::Group(g) => g.generators().iter().map(|e| e.matrix.clone()).collect(),
        Structure::Derivation(d) => d.generators().to_vec(),
        _ => Vec::new(),
    };
    let mut keys: Vec<(usize, Option<Label>)> = Vec::new();
    let mut key_of = |v: usize, l: Option<Label>| -> usize {
        if let Some(p) = keys.iter().position(|k| k.0 == v && k.1 == l) {
            p
        } else {
            keys.push((v, l));
            keys.len() - 1
        }
    };
    let mut terms = Vec::new();
    for (c, m) in &f.terms {
        let mut factors = Vec::new();
        for (v, d) in m.vars.iter().zip(&m.decor) {
            let (key, op) = match d {
                Decoration::Identity => (key_of(*v, None), None),
                Decoration::Word(w) => {
                    if gens.is_empty() {
                        return Err(Error::InvalidInput(format!(
                            "operator decoration used with a {} structure",
                            s.name()
                        )));
                    }
                    (key_of(*v, None), Some(word_operator(&gens, w, a.dim(), field)?))
                }
                Decoration::Label(l) => {
                    let Structure::Grading(g) = s else {
                        return Err(Error::InvalidInput(format!(
                            "grading label used with a {} structure",
                            s.name()
                        )));
                    };
                    (key_of(*v, Some(g.group().normalize(l))), None)
                }
            };
            factors.push((key, op));
        }
        terms.push((c.clone(), factors));
    }
    let mut key_names = Vec::new();
    let mut key_slots = Vec::new();
    for (v, l) in &keys {
        match l {
            None => {
                key_names.push(format!("x{}", v + 1));
                key_slots.push(basis.clone());
            }
            Some(l) => {
                let Structure::Grading(g) = s else { unreachable!() };
                key_names.push(format!("x{}^{l:?}", v + 1));
                let comp = g.component(l);
                key_slots.push(match comp {
                    Some(sp) => sp.basis().iter().map(|b| (a.render(b), b.clone())).collect(),
                    None => Vec::new(),
                });
            }
        }
    }
    Ok(Resolved {
        key_names,
        key_slots,
        terms,
    })
}

/// Evaluates a resolved polynomial on every tuple of candidates.
pub(crate) fn check_resolved(a: &Algebra, r: &Resolved) -> IdentityReport {
    let sizes: Vec<usize> = r.key_slots.iter().map(Vec::len).collect();
    let total: usize = sizes.iter().product();
    let mut digits = vec![0usize; sizes.len()];
    for checked in 0..total {
        let mut rem = checked;
        for k in (0..sizes.len()).rev() {
            digits[k] = rem % sizes[k];
            rem /= sizes[k];
        }
        let mut acc = a.zero_vector();
        for (c, factors) in &r.terms {
            let mut val: Option<Vec<Scalar>> = None;
            for (key, op) in factors {
                let base = &r.key_slots[*key][digits[*key]].1;
                let x = match op {
                    Some(m) => m.apply(base),
                    None => base.clone(),
                };
                val = Some(match val {
                    None => x,
                    Some(p) => a.mul(&p, &x),
                });
            }
            if let Some(v) = val {
                crate::exact_math::matrix::axpy(&mut acc, c, &v);
            }
        }
        if !vec_is_zero(&acc) {
            return IdentityReport {
                identity: false,
                checked: checked + 1,
                witness: Some(
                    (0..sizes.len())
                        .map(|k| (r.key_names[k].clone(), r.key_slots[k][digits[k]].0.clone()))
                        .collect(),
                ),
                value: Some(a.render(&acc)),
            };
        }
    }
    IdentityReport {
        identity: true,
        checked: total,
        witness: None,
        value: None,
    }
}

/// Whether `f` vanishes on all substitutions (basis tuples suffice by
/// multilinearity; homogeneous basis tuples for graded variables).
pub fn is_identity(a: &Algebra, s: &Structure, f: &MultilinearPolynomial) -> Result<IdentityReport> {
    let r = resolve(a, s, f)?;
    Ok(check_resolved(a, &r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::constructions::{inner_derivations, matrix_algebra};
    use crate::equivariance::{
        DerivationAction, Grading, GradingGroup, GroupAction, GroupElement, DEFAULT_GROUP_BOUND,
    };
    use crate::exact_math::Field;
    use serde_json::json;

    fn poly(a: &Algebra, v: Value, graded: bool) -> MultilinearPolynomial {
        let specs: Vec<TermSpec> = serde_json::from_value(v).unwrap();
        MultilinearPolynomial::from_specs(a, &specs, graded, "poly").unwrap()
    }

    #[test]
    fn commutator_on_m2() {
        let q = Field::rationals();
        let a = matrix_algebra(&q, 2);
        let f = poly(
            &a,
            json!([{"coeff": "1", "vars": [1, 2]}, {"coeff": "-1", "vars": [2, 1]}]),
            false,
        );
        let r = is_identity(&a, &Structure::Trivial, &f).unwrap();
        assert!(!r.identity);
        let w = r.witness.unwrap();
        assert_eq!((w[0].1.as_str(), w[1].1.as_str()), ("e11", "e12"));
    }

    #[test]
    fn symmetrized_commutator_under_involution() {
        let q = Field::rationals();
        let a = matrix_algebra(&q, 2);
        let psi = Matrix::from_ints(&q, &[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]);
        let g = GroupAction::generate(&q, 4, vec![GroupElement::automorphism(psi)], DEFAULT_GROUP_BOUND).unwrap();
        let s = Structure::Group(g);
        let mut terms = Vec::new();
        for dx in [Value::Null, json!(0)] {
            for dy in [Value::Null, json!(0)] {
                terms.push(json!({"coeff": "1", "vars": [1, 2], "decor": [dx.clone(), dy.clone()]}));
                terms.push(json!({"coeff": "-1", "vars": [2, 1], "decor": [dy.clone(), dx.clone()]}));
            }
        }
        assert!(
            is_identity(&a, &s, &poly(&a, Value::Array(terms.clone()), false))
                .unwrap()
                .identity
        );
        terms[0]["coeff"] = json!("2");
        assert!(
            !is_identity(&a, &s, &poly(&a, Value::Array(terms), false))
                .unwrap()
                .identity
        );
    }

    #[test]
    fn trace_of_adjoint_action() {
        let q = Field::rationals();
        let a = matrix_algebra(&q, 2);
        let units: Vec<Vec<Scalar>> = (0..4).map(|i| a.basis_vector(i)).collect();
        let s = Structure::Derivation(DerivationAction::new(inner_derivations(&a, &units)));
        let f = poly(
            &a,
            json!([{"coeff": "1", "vars": [1], "decor": [0]}, {"coeff": "1", "vars": [1], "decor": [3]}]),
            false,
        );
        assert!(is_identity(&a, &s, &f).unwrap().identity);
        let f = poly(
            &a,
            json!([{"coeff": "1", "vars": [1], "decor": [0]}, {"coeff": "2", "vars": [1], "decor": [3]}]),
            false,
        );
        assert!(!is_identity(&a, &s, &f).unwrap().identity);
    }

    #[test]
    fn graded_commutator() {
        let q = Field::rationals();
        let a = matrix_algebra(&q, 2);
        let g = Grading::from_basis_labels(&a, GradingGroup::cyclic(2), &[vec![0], vec![1], vec![1], vec![0]]).unwrap();
        let s = Structure::Grading(g);
        let f = poly(
            &a,
            json!([{"coeff": "1", "vars": [1, 2], "decor": [[0], [0]]}, {"coeff": "-1", "vars": [2, 1], "decor": [[0], [0]]}]),
            true,
        );
        assert!(is_identity(&a, &s, &f).unwrap().identity);
        let f = poly(
            &a,
            json!([{"coeff": "1", "vars": [1, 2], "decor": [[0], [1]]}, {"coeff": "-1", "vars": [2, 1], "decor": [[1], [0]]}]),
            true,
        );
        assert!(!is_identity(&a, &s, &f).unwrap().identity);
        // Labels are rejected without a grading.
        assert!(is_identity(&a, &Structure::Trivial, &f).is_err());
    }

    #[test]
    fn rejects_non_multilinear() {
        let q = Field::rationals();
        let a = matrix_algebra(&q, 2);
        let specs: Vec<TermSpec> = serde_json::from_value(json!([{"coeff": "1", "vars": [1, 1]}])).unwrap();
        assert!(MultilinearPolynomial::from_specs(&a, &specs, false, "p").is_err());
    }
}
