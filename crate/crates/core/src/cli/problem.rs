//! Problem files: an algebra, named structures, polynomials and ideal
//! chains, stored as JSON.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra_core::{Algebra, AlgebraKind};
use crate::codimension::{MultilinearPolynomial, TermSpec};
use crate::equivariance::{
    validate_structure, DerivationAction, Grading, GradingGroup, GroupAction, GroupElement, Label, Parity, Structure,
    DEFAULT_GROUP_BOUND,
};
use crate::error::{Error, Result};
use crate::exact_math::{parse_scalar, Field, Matrix, Scalar, Subspace};
use crate::exponent::LieChain;

/// A scalar written as a string (`"3/4"`, `"1+2*z^3"`) or a JSON integer.
pub type ScalarText = Value;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldSpec {
    #[serde(default = "one")]
    pub conductor: u64,
}

fn one() -> u64 {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub kind: AlgebraKind,
    pub dim: usize,
    /// `table[i][j]` holds the coordinates of `e_i * e_j`.
    pub table: Vec<Vec<Vec<ScalarText>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub label: Label,
    /// Spanning vectors in basis coordinates.
    pub basis: Vec<Vec<ScalarText>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GradingSpec {
    /// One modulus per coordinate of the group; `0` stands for `Z`.
    pub moduli: Vec<u64>,
    /// Degree of each basis element.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Label>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentSpec>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupElementSpec {
    /// Matrix rows; column `j` is the image of `e_j`.
    pub matrix: Vec<Vec<ScalarText>>,
    #[serde(default = "automorphism")]
    pub parity: Parity,
}

fn automorphism() -> Parity {
    Parity::Automorphism
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub generators: Vec<GroupElementSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DerivationSpec {
    pub generators: Vec<Vec<Vec<ScalarText>>>,
    /// Also require the span of the generators to be a Lie algebra.
    #[serde(default)]
    pub closure_check: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", content = "data", rename_all = "snake_case")]
pub enum StructureData {
    Grading(GradingSpec),
    GroupAction(GroupSpec),
    DerivationAction(DerivationSpec),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NamedStructure {
    pub name: String,
    #[serde(flatten)]
    pub data: StructureData,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolynomialSpec {
    pub name: String,
    /// Structure the decorations refer to; none for ordinary polynomials.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<String>,
    pub terms: Vec<TermSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainPairSpec {
    pub i: Vec<Vec<ScalarText>>,
    pub j: Vec<Vec<ScalarText>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainSpec {
    pub name: String,
    pub pairs: Vec<ChainPairSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProblemSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub field: FieldSpec,
    pub algebra: AlgebraSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub structures: Vec<NamedStructure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub polynomials: Vec<PolynomialSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chains: Vec<ChainSpec>,
}

fn text(x: &Scalar) -> ScalarText {
    Value::String(x.to_string())
}

fn matrix_text(m: &Matrix) -> Vec<Vec<ScalarText>> {
    m.to_rows().iter().map(|r| r.iter().map(text).collect()).collect()
}

fn structure_data(a: &Algebra, s: &Structure) -> Option<StructureData> {
    Some(match s {
        Structure::Trivial => return None,
        Structure::Grading(g) => {
            // Prefer per-basis-element labels when every component is spanned by
            // basis vectors.
            let mut labels: Vec<Option<Label>> = vec![None; a.dim()];
            let mut coordinate = true;
            for (l, c) in g.components() {
                for v in c.basis() {
                    let nz: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
                    if nz.len() == 1 && v[nz[0]].is_one() {
                        labels[nz[0]] = Some(l.clone());
                    } else {
                        coordinate = false;
                    }
                }
            }
            let labels = if coordinate {
                labels.into_iter().collect::<Option<Vec<_>>>()
            } else {
                None
            };
            let components = match labels {
                Some(_) => None,
                None => Some(
                    g.components()
                        .map(|(l, c)| ComponentSpec {
                            label: l.clone(),
                            basis: c.basis().iter().map(|v| v.iter().map(text).collect()).collect(),
                        })
                        .collect(),
                ),
            };
            StructureData::Grading(GradingSpec {
                moduli: g.group().moduli.clone(),
                labels,
                components,
            })
        }
        Structure::Group(g) => StructureData::GroupAction(GroupSpec {
            generators: g
                .generators()
                .iter()
                .map(|e| GroupElementSpec {
                    matrix: matrix_text(&e.matrix),
                    parity: e.parity,
                })
                .collect(),
            bound: None,
        }),
        Structure::Derivation(d) => StructureData::DerivationAction(DerivationSpec {
            generators: d.generators().iter().map(matrix_text).collect(),
            closure_check: false,
        }),
    })
}

impl ProblemSpec {
    /// The JSON form of an algebra with named structures.
    pub fn from_parts(a: &Algebra, structures: &[(&str, &Structure)]) -> ProblemSpec {
        let n = a.dim();
        ProblemSpec {
            description: None,
            field: FieldSpec {
                conductor: a.field().conductor(),
            },
            algebra: AlgebraSpec {
                kind: a.kind(),
                dim: n,
                table: (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| a.basis_product(i, j).iter().map(text).collect())
                            .collect()
                    })
                    .collect(),
                basis_names: Some(a.names().to_vec()),
            },
            structures: structures
                .iter()
                .filter_map(|(name, s)| {
                    structure_data(a, s).map(|data| NamedStructure {
                        name: name.to_string(),
                        data,
                    })
                })
                .collect(),
            polynomials: Vec::new(),
            chains: Vec::new(),
        }
    }
}

/// A loaded and validated problem.
#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub spec: ProblemSpec,
    pub field: Field,
    pub algebra: Algebra,
    pub structures: Vec<(String, Structure)>,
}

fn scalar(field: &Field, v: &ScalarText, loc: &str) -> Result<Scalar> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(Error::parse(loc, "expected a scalar string or integer")),
    };
    parse_scalar(field, &text).map_err(|e| Error::parse(loc, e.to_string()))
}

fn vector(field: &Field, v: &[ScalarText], dim: usize, loc: &str) -> Result<Vec<Scalar>> {
    if v.len() != dim {
        return Err(Error::parse(
            loc,
            format!("expected {dim} coordinates, found {}", v.len()),
        ));
    }
    v.iter()
        .enumerate()
        .map(|(k, x)| scalar(field, x, &format!("{loc}[{k}]")))
        .collect()
}

fn matrix(field: &Field, rows: &[Vec<ScalarText>], dim: usize, loc: &str) -> Result<Matrix> {
    if rows.len() != dim {
        return Err(Error::parse(loc, format!("expected {dim} rows, found {}", rows.len())));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(r, row)| vector(field, row, dim, &format!("{loc}[{r}]")))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, dim, rows)
}

fn span(field: &Field, vecs: &[Vec<ScalarText>], dim: usize, loc: &str) -> Result<Subspace> {
    let vecs = vecs
        .iter()
        .enumerate()
        .map(|(k, v)| vector(field, v, dim, &format!("{loc}[{k}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(field, dim, &vecs))
}

fn build_structure(a: &Algebra, data: &StructureData, loc: &str) -> Result<Structure> {
    let field = a.field();
    let n = a.dim();
    Ok(match data {
        StructureData::Grading(g) => {
            let group = GradingGroup::new(g.moduli.clone());
            let grading = match (&g.labels, &g.components) {
                (Some(labels), None) => Grading::from_basis_labels(a, group, labels),
                (None, Some(comps)) => {
                    let comps = comps
                        .iter()
                        .enumerate()
                        .map(|(k, c)| {
                            Ok((
                                c.label.clone(),
                                span(field, &c.basis, n, &format!("{loc}.components[{k}].basis"))?,
                            ))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Grading::new(group, comps)
                }
                _ => {
                    return Err(Error::parse(
                        loc,
                        "a grading needs exactly one of `labels` or `components`",
                    ))
                }
            }
            .map_err(|e| Error::parse(loc, e.to_string()))?;
            Structure::Grading(grading)
        }
        StructureData::GroupAction(g) => {
            let gens = g
                .generators
                .iter()
                .enumerate()
                .map(|(k, e)| {
                    Ok(GroupElement::new(
                        matrix(field, &e.matrix, n, &format!("{loc}.generators[{k}].matrix"))?,
                        e.parity,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            let group =
                GroupAction::generate(field, n, gens, g.bound.unwrap_or(DEFAULT_GROUP_BOUND)).map_err(|e| match e {
                    Error::GroupTooLarge(_) => e,
                    other => Error::parse(loc, other.to_string()),
                })?;
            Structure::Group(group)
        }
        StructureData::DerivationAction(d) => {
            let gens = d
                .generators
                .iter()
                .enumerate()
                .map(|(k, m)| matrix(field, m, n, &format!("{loc}.generators[{k}]")))
                .collect::<Result<Vec<_>>>()?;
            Structure::Derivation(DerivationAction::new(gens).with_closure_check(d.closure_check))
        }
    })
}

impl ProblemFile {
    /// Builds and validates a problem from its JSON form.
    pub fn from_spec(spec: ProblemSpec) -> Result<ProblemFile> {
        let field = Field::cyclotomic(spec.field.conductor).map_err(|e| Error::parse("field", e.to_string()))?;
        let alg = &spec.algebra;
        let n = alg.dim;
        if alg.table.len() != n {
            return Err(Error::parse(
                "algebra.table",
                format!("expected {n} rows, found {}", alg.table.len()),
            ));
        }
        let mut table = Vec::with_capacity(n);
        for (i, row) in alg.table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::parse(
                    format!("algebra.table[{i}]"),
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            let row = row
                .iter()
                .enumerate()
                .map(|(j, v)| vector(&field, v, n, &format!("algebra.table[{i}][{j}]")))
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        let algebra = Algebra::new(&field, alg.kind, table, alg.basis_names.clone())
            .map_err(|e| Error::parse("algebra", e.to_string()))?;
        algebra
            .validate()
            .into_result()
            .map_err(|e| Error::Validation(format!("algebra: {}", strip_prefix(&e))))?;
        let mut structures = Vec::new();
        for (k, ns) in spec.structures.iter().enumerate() {
            let loc = format!("structures[{k}] ({})", ns.name);
            if structures.iter().any(|(name, _)| name == &ns.name) {
                return Err(Error::parse(loc, "duplicate structure name"));
            }
            let s = build_structure(&algebra, &ns.data, &loc)?;
            validate_structure(&algebra, &s)
                .into_result()
                .map_err(|e| Error::Validation(format!("{loc}: {}", strip_prefix(&e))))?;
            structures.push((ns.name.clone(), s));
        }
        let problem = ProblemFile {
            spec,
            field,
            algebra,
            structures,
        };
        for k in 0..problem.spec.polynomials.len() {
            problem.polynomial_at(k)?;
        }
        for k in 0..problem.spec.chains.len() {
            problem.chain_at(k)?;
        }
        Ok(problem)
    }

    pub fn from_json(text: &str, origin: &str) -> Result<ProblemFile> {
        let spec: ProblemSpec = serde_json::from_str(text)
            .map_err(|e| Error::parse(format!("{origin}:{}:{}", e.line(), e.column()), e.to_string()))?;
        ProblemFile::from_spec(spec)
    }

    /// The JSON form (reloading it yields the same problem).
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.spec)?)
    }

    /// Looks up a structure; `None` means the trivial structure.
    pub fn structure(&self, name: Option<&str>) -> Result<Structure> {
        match name {
            None => Ok(Structure::Trivial),
            Some(name) => self
                .structures
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, s)| s.clone())
                .ok_or_else(|| Error::InvalidInput(format!("no structure named `{name}`"))),
        }
    }

    fn polynomial_at(&self, k: usize) -> Result<(Structure, MultilinearPolynomial)> {
        let p = &self.spec.polynomials[k];
        let loc = format!("polynomials[{k}] ({})", p.name);
        let s = self
            .structure(p.structure.as_deref())
            .map_err(|e| Error::parse(&loc, e.to_string()))?;
        let f = MultilinearPolynomial::from_specs(&self.algebra, &p.terms, matches!(s, Structure::Grading(_)), &loc)?;
        Ok((s, f))
    }

    /// A named polynomial with the structure its decorations refer to.
    pub fn polynomial(&self, name: &str) -> Result<(Structure, MultilinearPolynomial)> {
        let k = self
            .spec
            .polynomials
            .iter()
            .position(|p| p.name == name)
            .ok_or_else(|| Error::InvalidInput(format!("no polynomial named `{name}`")))?;
        self.polynomial_at(k)
    }

    fn chain_at(&self, k: usize) -> Result<LieChain> {
        let c = &self.spec.chains[k];
        let n = self.algebra.dim();
        let pairs = c
            .pairs
            .iter()
            .enumerate()
            .map(|(p, pair)| {
                let loc = format!("chains[{k}] ({}).pairs[{p}]", c.name);
                Ok((
                    span(&self.field, &pair.i, n, &format!("{loc}.i"))?,
                    span(&self.field, &pair.j, n, &format!("{loc}.j"))?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LieChain { pairs })
    }

    pub fn chains(&self) -> Result<Vec<LieChain>> {
        (0..self.spec.chains.len()).map(|k| self.chain_at(k)).collect()
    }
}

fn strip_prefix(e: &Error) -> String {
    match e {
        Error::Validation(m) => m.clone(),
        other => other.to_string(),
    }
}

/// Reads and validates a problem file.
pub fn load_problem(path: &Path) -> Result<ProblemFile> {
    let text = std::fs::read_to_string(path)?;
    ProblemFile::from_json(&text, &path.display().to_string())
}
