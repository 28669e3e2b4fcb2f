// Invariant Wedderburn–Mal'cev and Levi complements on the block examples.

use piwb::algebra_core::constructions::{
    block_associative, block_associative_basis, block_lie, block_lie_basis, block_sl_derivations,
};
use piwb::decomposition::{invariant_levi, invariant_wedderburn_malcev};
use piwb::equivariance::{DerivationAction, Structure};
use piwb::exact_math::Field;

fn main() -> piwb::Result<()> {
    let q = Field::rationals();

    let a = block_associative(&q, 2);
    let s = Structure::Derivation(DerivationAction::new(block_sl_derivations(
        &q,
        2,
        &block_associative_basis(&q, 2),
    )));
    let wm = invariant_wedderburn_malcev(&a, &s)?;
    wm.verify(&a, &s)?;
    println!(
        "associative block algebra: B dim {}, J dim {}, {} stage(s)",
        wm.complement.dim(),
        wm.radical.dim(),
        wm.stages
    );

    let l = block_lie(&q, 2);
    let s = Structure::Derivation(DerivationAction::new(block_sl_derivations(
        &q,
        2,
        &block_lie_basis(&q, 2),
    )));
    let levi = invariant_levi(&l, &s)?;
    levi.verify(&l, &s)?;
    println!(
        "Lie block algebra: Levi factor dim {}, solvable radical dim {}",
        levi.complement.dim(),
        levi.radical.dim()
    );
    for v in levi.complement.basis() {
        println!("  {}", l.render(v));
    }
    Ok(())
}
