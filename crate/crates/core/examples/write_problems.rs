//! Regenerates the bundled problem files in `problems/`.
//!
//! Run with `cargo run --example write_problems`.

use std::path::Path;

use serde_json::json;

use piwb::algebra_core::constructions::{
    block_associative, block_associative_basis, block_lie, block_lie_basis, block_sl_derivations, inner_derivations,
    matrix_algebra, upper_triangular,
};
use piwb::algebra_core::Algebra;
use piwb::cli::problem::{ChainPairSpec, ChainSpec, PolynomialSpec};
use piwb::cli::ProblemSpec;
use piwb::codimension::TermSpec;
use piwb::equivariance::{
    DerivationAction, Grading, GradingGroup, GroupAction, GroupElement, Structure, DEFAULT_GROUP_BOUND,
};
use piwb::exact_math::{Field, Matrix, Scalar};

fn terms(v: serde_json::Value) -> Vec<TermSpec> {
    serde_json::from_value(v).expect("term list")
}

fn poly(name: &str, structure: Option<&str>, v: serde_json::Value) -> PolynomialSpec {
    PolynomialSpec {
        name: name.into(),
        structure: structure.map(Into::into),
        terms: terms(v),
    }
}

fn commutator() -> serde_json::Value {
    json!([{"coeff": "1", "vars": [1, 2]}, {"coeff": "-1", "vars": [2, 1]}])
}

fn ints(q: &Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| q.from_int(x)).collect()
}

fn vecs_text(vs: &[Vec<Scalar>]) -> Vec<Vec<serde_json::Value>> {
    vs.iter()
        .map(|v| v.iter().map(|x| json!(x.to_string())).collect())
        .collect()
}

fn write(dir: &Path, file: &str, description: &str, mut spec: ProblemSpec) {
    spec.description = Some(description.into());
    let text = compact(&serde_json::to_value(&spec).unwrap(), 0) + "\n";
    std::fs::write(dir.join(file), text).unwrap();
    println!("wrote {file}");
}

/// Pretty JSON with flat arrays (and objects of scalars) kept on one line.
fn compact(v: &serde_json::Value, indent: usize) -> String {
    use serde_json::Value;
    let flat = |v: &Value| match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(o) => o.values().all(|x| match x {
            Value::Array(a) => a.iter().all(|y| !y.is_array() && !y.is_object()),
            other => !other.is_object(),
        }),
        _ => true,
    };
    if flat(v) {
        return serde_json::to_string(v)
            .unwrap()
            .replace(",", ", ")
            .replace("\":", "\": ");
    }
    let pad = "  ".repeat(indent + 1);
    let end = "  ".repeat(indent);
    match v {
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(|x| format!("{pad}{}", compact(x, indent + 1))).collect();
            format!("[\n{}\n{end}]", items.join(",\n"))
        }
        Value::Object(o) => {
            let items: Vec<String> = o
                .iter()
                .map(|(k, x)| format!("{pad}{}: {}", serde_json::to_string(k).unwrap(), compact(x, indent + 1)))
                .collect();
            format!("{{\n{}\n{end}}}", items.join(",\n"))
        }
        _ => unreachable!(),
    }
}

fn symmetrized_commutator() -> serde_json::Value {
    let mut out = Vec::new();
    for dx in [json!(null), json!(0)] {
        for dy in [json!(null), json!(0)] {
            out.push(json!({"coeff": "1", "vars": [1, 2], "decor": [dx, dy]}));
            out.push(json!({"coeff": "-1", "vars": [2, 1], "decor": [dy, dx]}));
        }
    }
    serde_json::Value::Array(out)
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("problems");
    std::fs::create_dir_all(&dir).unwrap();
    let q = Field::rationals();
    let m2 = matrix_algebra(&q, 2);

    let mut spec = ProblemSpec::from_parts(&m2, &[]);
    spec.polynomials = vec![
        poly("commutator", None, commutator()),
        poly(
            "standard_3",
            None,
            json!([
                {"coeff": "1", "vars": [1, 2, 3]}, {"coeff": "-1", "vars": [1, 3, 2]},
                {"coeff": "-1", "vars": [2, 1, 3]}, {"coeff": "1", "vars": [2, 3, 1]},
                {"coeff": "1", "vars": [3, 1, 2]}, {"coeff": "-1", "vars": [3, 2, 1]}
            ]),
        ),
    ];
    write(&dir, "m2.json", "2x2 matrices", spec);

    let ut2 = upper_triangular(&q, 2);
    let mut spec = ProblemSpec::from_parts(&ut2, &[]);
    spec.polynomials = vec![
        poly("commutator", None, commutator()),
        poly(
            "commutator_product",
            None,
            json!([
                {"coeff": "1", "vars": [1, 2, 3, 4]}, {"coeff": "-1", "vars": [2, 1, 3, 4]},
                {"coeff": "-1", "vars": [1, 2, 4, 3]}, {"coeff": "1", "vars": [2, 1, 4, 3]}
            ]),
        ),
    ];
    write(&dir, "ut2.json", "2x2 upper triangular matrices", spec);

    let grading =
        Grading::from_basis_labels(&m2, GradingGroup::cyclic(2), &[vec![0], vec![1], vec![1], vec![0]]).unwrap();
    let mut spec = ProblemSpec::from_parts(&m2, &[("z2grading", &Structure::Grading(grading))]);
    spec.polynomials = vec![
        poly(
            "even_commutator",
            Some("z2grading"),
            json!([
                {"coeff": "1", "vars": [1, 2], "decor": [[0], [0]]},
                {"coeff": "-1", "vars": [2, 1], "decor": [[0], [0]]}
            ]),
        ),
        poly(
            "even_commutator_perturbed",
            Some("z2grading"),
            json!([
                {"coeff": "1", "vars": [1, 2], "decor": [[0], [0]]},
                {"coeff": "-2", "vars": [2, 1], "decor": [[0], [0]]}
            ]),
        ),
        poly("commutator", None, commutator()),
    ];
    write(
        &dir,
        "m2_z2_graded.json",
        "2x2 matrices with the Z/2 grading by parity of i+j",
        spec,
    );

    let psi = Matrix::from_ints(&q, &[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]);
    let group = GroupAction::generate(&q, 4, vec![GroupElement::automorphism(psi)], DEFAULT_GROUP_BOUND).unwrap();
    let mut spec = ProblemSpec::from_parts(&m2, &[("psi", &Structure::Group(group))]);
    let mut perturbed = symmetrized_commutator();
    perturbed[0]["coeff"] = json!("2");
    spec.polynomials = vec![
        poly("symmetrized_commutator", Some("psi"), symmetrized_commutator()),
        poly("symmetrized_commutator_perturbed", Some("psi"), perturbed),
    ];
    write(
        &dir,
        "m2_z2_action.json",
        "2x2 matrices with conjugation by diag(1,-1)",
        spec,
    );

    let sl2_elems = [
        ints(&q, &[0, 1, 0, 0]),
        ints(&q, &[0, 0, 1, 0]),
        ints(&q, &[1, 0, 0, -1]),
    ];
    let sl2 = Structure::Derivation(DerivationAction::new(inner_derivations(&m2, &sl2_elems)));
    let units: Vec<Vec<Scalar>> = (0..4).map(|i| m2.basis_vector(i)).collect();
    let gl2 = Structure::Derivation(DerivationAction::new(inner_derivations(&m2, &units)));
    let mut spec = ProblemSpec::from_parts(&m2, &[("sl2_adjoint", &sl2), ("gl2_adjoint", &gl2)]);
    spec.polynomials = vec![
        poly(
            "identity_trace",
            Some("gl2_adjoint"),
            json!([{"coeff": "1", "vars": [1], "decor": [0]}, {"coeff": "1", "vars": [1], "decor": [3]}]),
        ),
        poly(
            "identity_trace_perturbed",
            Some("gl2_adjoint"),
            json!([{"coeff": "1", "vars": [1], "decor": [0]}, {"coeff": "2", "vars": [1], "decor": [3]}]),
        ),
    ];
    write(
        &dir,
        "m2_sl2_adjoint.json",
        "2x2 matrices with the adjoint actions of sl2 and gl2",
        spec,
    );

    let block = block_associative(&q, 2);
    let derivs = Structure::Derivation(DerivationAction::new(block_sl_derivations(
        &q,
        2,
        &block_associative_basis(&q, 2),
    )));
    let spec = ProblemSpec::from_parts(&block, &[("sl2", &derivs)]);
    write(
        &dir,
        "block_assoc_m2.json",
        "block algebra (C, D; 0, 0) with C, D in M2, and sl2 acting on the C block",
        spec,
    );

    let lie = block_lie(&q, 2);
    let derivs = Structure::Derivation(DerivationAction::new(block_sl_derivations(
        &q,
        2,
        &block_lie_basis(&q, 2),
    )));
    let mut spec = ProblemSpec::from_parts(&lie, &[("sl2", &derivs)]);
    spec.chains = vec![levi_chain(&lie)];
    write(
        &dir,
        "block_lie_m2.json",
        "Lie algebra (C, D; 0, 0) with C in sl2, D in M2, and sl2 acting on the C block",
        spec,
    );
}

/// The chain `(L, R)` written out explicitly.
fn levi_chain(l: &Algebra) -> ChainSpec {
    let full: Vec<Vec<Scalar>> = (0..l.dim()).map(|i| l.basis_vector(i)).collect();
    let radical: Vec<Vec<Scalar>> = (3..l.dim()).map(|i| l.basis_vector(i)).collect();
    ChainSpec {
        name: "whole_over_radical".into(),
        pairs: vec![ChainPairSpec {
            i: vecs_text(&full),
            j: vecs_text(&radical),
        }],
    }
}
