// Graded codimensions agree with those of the dual group action.

use piwb::algebra_core::constructions::matrix_algebra;
use piwb::codimension::codim;
use piwb::equivariance::{dual_action_from_grading, Grading, GradingGroup, Structure};
use piwb::exact_math::Field;

fn main() -> piwb::Result<()> {
    // A Z_3-grading of M_2 by e_ij -> g_i - g_j with (g_1, g_2) = (0, 1).
    let f = Field::cyclotomic(3)?;
    let m2 = matrix_algebra(&f, 2);
    let gr = Grading::from_basis_labels(&m2, GradingGroup::cyclic(3), &[vec![0], vec![2], vec![1], vec![0]])?;
    let dual = Structure::Group(dual_action_from_grading(&m2, &gr)?);
    let gr = Structure::Grading(gr);
    for n in 1..=3 {
        let a = codim(&m2, &gr, n)?.value;
        let b = codim(&m2, &dual, n)?.value;
        println!("n = {n}: graded {a}, dual action {b}");
        assert_eq!(a, b);
    }
    Ok(())
}
