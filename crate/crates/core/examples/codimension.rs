// Codimension sequences in each regime.

use piwb::algebra_core::constructions::{inner_derivations, matrix_algebra, upper_triangular};
use piwb::codimension::{codim, codim_series};
use piwb::equivariance::{DerivationAction, Grading, GradingGroup, Structure};
use piwb::exact_math::Field;

fn main() -> piwb::Result<()> {
    let q = Field::rationals();
    let ut2 = upper_triangular(&q, 2);
    let series = codim_series(&ut2, &Structure::Trivial, 5)?;
    println!(
        "UT_2: c_n = {:?}, predicted exponent {:?}",
        series.values, series.predicted_exponent
    );

    let m2 = matrix_algebra(&q, 2);
    let gr = Grading::from_basis_labels(&m2, GradingGroup::cyclic(2), &[vec![0], vec![1], vec![1], vec![0]])?;
    let r = codim(&m2, &Structure::Grading(gr), 2)?;
    let blocks: Vec<usize> = r.breakdown.iter().flatten().map(|b| b.rank).collect();
    println!("graded M_2: c_2 = {} = sum of {:?}", r.value, blocks);

    let elems: Vec<_> = [[0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, -1]]
        .iter()
        .map(|v| v.iter().map(|&c| q.from_int(c)).collect())
        .collect();
    let adj = Structure::Derivation(DerivationAction::new(inner_derivations(&m2, &elems)));
    println!("M_2 with adjoint sl_2: envelope dim {}", adj.envelope(&m2).dim());
    for n in 1..=2 {
        let r = codim(&m2, &adj, n)?;
        println!("  c_{n} = {} ({} rows x {} columns)", r.value, r.rows, r.cols);
    }
    Ok(())
}
