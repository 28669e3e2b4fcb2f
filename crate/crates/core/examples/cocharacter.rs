// Cocharacters and the vanishing check for a nilpotent invariant ideal.

use piwb::algebra_core::constructions::{matrix_algebra, upper_triangular};
use piwb::cocharacter::{cocharacter, cocharacter_vanishing_check};
use piwb::equivariance::Structure;
use piwb::exact_math::Field;

fn main() -> piwb::Result<()> {
    let q = Field::rationals();
    for (name, a) in [("M_2", matrix_algebra(&q, 2)), ("UT_2", upper_triangular(&q, 2))] {
        for n in 3..=4 {
            let r = cocharacter(&a, &Structure::Trivial, n)?;
            let parts: Vec<String> = r
                .multiplicities
                .iter()
                .filter(|(_, m)| *m > 0)
                .map(|(l, m)| format!("{m}x{l}"))
                .collect();
            println!("{name}, n = {n}: c_n = {} = {}", r.codim, parts.join(" + "));
        }
    }

    let ut2 = upper_triangular(&q, 2);
    let j = ut2.radical()?.radical;
    let v = cocharacter_vanishing_check(&ut2, &Structure::Trivial, &j, 5)?;
    let zero: Vec<String> = v.triggered.iter().map(|(l, _)| l.to_string()).collect();
    println!("UT_2, n = 5: forced zeros at {}", zero.join(", "));
    Ok(())
}
