// Exponents from the structure theory, with and without extra structure.

use piwb::algebra_core::constructions::{
    block_associative, block_associative_basis, block_sl_derivations, direct_sum, matrix_algebra, upper_triangular,
};
use piwb::equivariance::{DerivationAction, Structure};
use piwb::exact_math::Field;
use piwb::exponent::{associative_exponent, simplicity_criterion_report};

fn main() -> piwb::Result<()> {
    let q = Field::rationals();
    let m2 = matrix_algebra(&q, 2);
    let ut2 = upper_triangular(&q, 2);
    let block = block_associative(&q, 2);
    let sl2 = Structure::Derivation(DerivationAction::new(block_sl_derivations(
        &q,
        2,
        &block_associative_basis(&q, 2),
    )));

    for (name, a, s) in [
        ("M_2", &m2, Structure::Trivial),
        ("UT_2", &ut2, Structure::Trivial),
        ("block algebra", &block, Structure::Trivial),
        ("block algebra with sl_2", &block, sl2),
    ] {
        let r = associative_exponent(a, &s)?;
        r.verify_witness(a)?;
        println!(
            "{name}: d = {} from components {:?} (witness {:?})",
            r.d,
            r.component_dims(),
            r.witness
        );
    }

    let sum = direct_sum(&ut2, &m2);
    let c = simplicity_criterion_report(&sum, &Structure::Trivial)?;
    println!("UT_2 + M_2: exponent {} of dim {}, {}", c.exponent, c.dim, c.simplicity);
    Ok(())
}
