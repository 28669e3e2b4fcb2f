// Checking decorated multilinear polynomials for identities.

use piwb::algebra_core::constructions::matrix_algebra;
use piwb::codimension::{is_identity, MultilinearPolynomial, TermSpec};
use piwb::equivariance::{Grading, GradingGroup, Structure};
use piwb::exact_math::Field;
use serde_json::json;

fn main() -> piwb::Result<()> {
    let q = Field::rationals();
    let m2 = matrix_algebra(&q, 2);
    let gr = Structure::Grading(Grading::from_basis_labels(
        &m2,
        GradingGroup::cyclic(2),
        &[vec![0], vec![1], vec![1], vec![0]],
    )?);

    // [x, y] with both variables in the neutral component.
    let even: Vec<TermSpec> = serde_json::from_value(json!([
        {"coeff": "1", "vars": [1, 2], "decor": [[0], [0]]},
        {"coeff": "-1", "vars": [2, 1], "decor": [[0], [0]]}
    ]))?;
    let f = MultilinearPolynomial::from_specs(&m2, &even, true, "even")?;
    println!("even commutator: identity = {}", is_identity(&m2, &gr, &f)?.identity);

    let plain: Vec<TermSpec> = serde_json::from_value(json!([
        {"coeff": "1", "vars": [1, 2]},
        {"coeff": "-1", "vars": [2, 1]}
    ]))?;
    let f = MultilinearPolynomial::from_specs(&m2, &plain, false, "plain")?;
    let r = is_identity(&m2, &Structure::Trivial, &f)?;
    println!(
        "commutator: identity = {}, witness {:?}, value {:?}",
        r.identity, r.witness, r.value
    );
    Ok(())
}
