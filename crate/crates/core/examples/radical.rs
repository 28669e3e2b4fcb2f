// Radicals of a few small algebras.

use piwb::algebra_core::constructions::{affine_lie, block_associative, matrix_algebra, upper_triangular};
use piwb::exact_math::Field;

fn main() -> piwb::Result<()> {
    let q = Field::rationals();
    for (name, a) in [
        ("M_2", matrix_algebra(&q, 2)),
        ("UT_2", upper_triangular(&q, 2)),
        ("block algebra (m = 2)", block_associative(&q, 2)),
        ("affine Lie algebra", affine_lie(&q)),
    ] {
        let r = a.radical()?;
        let basis: Vec<String> = r.radical.basis().iter().map(|v| a.render(v)).collect();
        println!(
            "{name}: radical dim {} (index {}), semisimple part dim {}, basis [{}]",
            r.radical.dim(),
            r.nilpotency_index,
            r.semisimple_quotient_dim,
            basis.join(", ")
        );
    }
    Ok(())
}
