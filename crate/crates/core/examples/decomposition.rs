// Splitting semisimple algebras into simple and invariant-simple ideals.

use piwb::algebra_core::constructions::{diagonal_algebra, direct_sum, matrix_algebra};
use piwb::decomposition::{invariant_simple_decomposition, simple_ideal_decomposition};
use piwb::equivariance::{GroupAction, GroupElement, Structure};
use piwb::exact_math::{Field, Matrix};

fn main() -> piwb::Result<()> {
    let q = Field::rationals();
    let m2 = matrix_algebra(&q, 2);
    let sum = direct_sum(&m2, &m2);

    let d = simple_ideal_decomposition(&sum)?;
    d.verify(&sum)?;
    println!("M_2 + M_2: simple ideals of dims {:?}", d.dims());

    // Swapping the summands glues the two ideals into one invariant-simple piece.
    let swap = Matrix::from_fn(&q, 8, 8, |i, j| if i == (j + 4) % 8 { q.one() } else { q.zero() });
    let g = Structure::Group(GroupAction::generate(
        &q,
        8,
        vec![GroupElement::automorphism(swap)],
        16,
    )?);
    let d = invariant_simple_decomposition(&sum, &g)?;
    d.verify(&sum)?;
    println!("M_2 + M_2 with swap: invariant-simple ideals of dims {:?}", d.dims());

    let diag = diagonal_algebra(&q, 3);
    println!(
        "F^3: simple ideals of dims {:?}",
        simple_ideal_decomposition(&diag)?.dims()
    );
    Ok(())
}
