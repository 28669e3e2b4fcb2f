// The Lie exponent on the default chain and on an explicit chain of ideals.

use piwb::algebra_core::constructions::{block_lie, block_lie_basis, block_sl_derivations, sl2};
use piwb::equivariance::{DerivationAction, Structure};
use piwb::exact_math::{Field, Subspace};
use piwb::exponent::{lie_exponent_from_chains, LieChain};

fn main() -> piwb::Result<()> {
    let q = Field::rationals();
    let l = block_lie(&q, 2);
    let s = Structure::Derivation(DerivationAction::new(block_sl_derivations(
        &q,
        2,
        &block_lie_basis(&q, 2),
    )));

    // The whole algebra over the abelian ideal spanned by the off-diagonal block.
    let chain = LieChain {
        pairs: vec![(l.full_subspace(), Subspace::coordinate(&q, l.dim(), &[3, 4, 5, 6]))],
    };
    let r = lie_exponent_from_chains(&l, &s, &[chain], None)?;
    println!(
        "block Lie algebra: d = {} (Levi factor dim {})",
        r.d, r.levi_complement_dim
    );
    for c in &r.chains {
        println!("  pairs {:?}: value {:?}", c.pair_dims, c.value);
    }

    let r = lie_exponent_from_chains(&sl2(&q), &Structure::Trivial, &[], None)?;
    println!("sl_2: d = {}", r.d);
    Ok(())
}
