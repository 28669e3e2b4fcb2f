//! Fraction-free incremental row echelon engine.
//!
//! Rows are cleared of denominators and kept as vectors over the ring of
//! cyclotomic integers `Z[z]/(Phi_m)`. A reduction step replaces `v` by
//! `p*v - c*b` (with `p` the pivot of basis row `b` and `c` the entry of `v`
//! in the pivot column) and then divides out the integer content of `v`, so
//! no rational division happens and coefficient growth stays controlled.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::field::{Field, Scalar};

/// Cyclotomic integers, trimmed coefficient vectors (lowest power first).
type CycInt = Vec<BigInt>;

#[derive(Clone)]
enum Row {
    Rational(Vec<BigInt>),
    Cyclotomic(Vec<CycInt>),
}

impl Row {
    fn leading(&self) -> Option<usize> {
        match self {
            Row::Rational(v) => v.iter().position(|x| !x.is_zero()),
            Row::Cyclotomic(v) => v.iter().position(|x| !x.is_empty()),
        }
    }

    fn is_zero(&self) -> bool {
        self.leading().is_none()
    }
}

struct Ring {
    degree: usize,
    modulus: Vec<BigInt>,
}

impl Ring {
    fn new(field: &Field) -> Ring {
        Ring {
            degree: field.degree(),
            modulus: field.modulus().to_vec(),
        }
    }

    fn rational(&self) -> bool {
        self.degree == 1
    }

    fn mul(&self, a: &CycInt, b: &CycInt) -> CycInt {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(&mut prod);
        prod
    }

    fn reduce(&self, c: &mut CycInt) {
        let d = self.degree;
        if c.len() > d {
            for k in (d..c.len()).rev() {
                if c[k].is_zero() {
                    continue;
                }
                let lead = std::mem::take(&mut c[k]);
                for (i, mi) in self.modulus.iter().enumerate().take(d) {
                    if !mi.is_zero() {
                        c[k - d + i] -= &lead * mi;
                    }
                }
            }
            c.truncate(d);
        }
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
    }

    fn sub(&self, a: CycInt, b: &CycInt) -> CycInt {
        let mut out = a;
        if out.len() < b.len() {
            out.resize(b.len(), BigInt::zero());
        }
        for (o, y) in out.iter_mut().zip(b) {
            *o -= y;
        }
        while out.last().is_some_and(|x| x.is_zero()) {
            out.pop();
        }
        out
    }

    /// Converts scalars to an integral row by clearing all denominators.
    fn integral_row(&self, row: &[Scalar]) -> Row {
        let den = row.iter().fold(BigInt::one(), |acc, s| acc.lcm(&s.denominator_lcm()));
        let scaled = |c: &BigRational| -> BigInt { (c * BigRational::from_integer(den.clone())).to_integer() };
        if self.rational() {
            Row::Rational(
                row.iter()
                    .map(|s| s.coeffs().first().map(scaled).unwrap_or_default())
                    .collect(),
            )
        } else {
            Row::Cyclotomic(row.iter().map(|s| s.coeffs().iter().map(scaled).collect()).collect())
        }
    }

    fn to_scalars(&self, field: &Field, row: &Row) -> Vec<Scalar> {
        match row {
            Row::Rational(v) => v
                .iter()
                .map(|x| field.from_rational(BigRational::from_integer(x.clone())))
                .collect(),
            Row::Cyclotomic(v) => v
                .iter()
                .map(|x| field.from_coeffs(x.iter().map(|c| BigRational::from_integer(c.clone())).collect()))
                .collect(),
        }
    }

    /// Divides the row by the gcd of all its integer coefficients.
    fn strip_content(&self, row: &mut Row) {
        match row {
            Row::Rational(v) => {
                let mut g = BigInt::zero();
                for x in v.iter() {
                    if !x.is_zero() {
                        g = g.gcd(x);
                        if g.is_one() {
                            break;
                        }
                    }
                }
                let lead_negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
                if lead_negative {
                    g = -g;
                }
                if !g.is_zero() && !g.is_one() {
                    for x in v.iter_mut() {
                        if !x.is_zero() {
                            *x = &*x / &g;
                        }
                    }
                }
            }
            Row::Cyclotomic(v) => {
                let mut g = BigInt::zero();
                'outer: for x in v.iter() {
                    for c in x {
                        if !c.is_zero() {
                            g = g.gcd(c);
                            if g.is_one() {
                                break 'outer;
                            }
                        }
                    }
                }
                if !g.is_zero() && !g.is_one() {
                    for x in v.iter_mut() {
                        for c in x.iter_mut() {
                            *c = &*c / &g;
                        }
                    }
                }
            }
        }
    }

    /// `v <- p*v - c*b` where `p = b[col]`, `c = v[col]`.
    fn eliminate(&self, v: &mut Row, b: &Row, col: usize) {
        match (v, b) {
            (Row::Rational(v), Row::Rational(b)) => {
                let c = v[col].clone();
                if c.is_zero() {
                    return;
                }
                let p = &b[col];
                let g = c.gcd(p);
                let (p, c) = (p / &g, c / &g);
                let p_is_one = p.is_one();
                for (x, y) in v.iter_mut().zip(b) {
                    if !p_is_one && !x.is_zero() {
                        *x *= &p;
                    }
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
            (Row::Cyclotomic(v), Row::Cyclotomic(b)) => {
                let c = v[col].clone();
                if c.is_empty() {
                    return;
                }
                let p = &b[col];
                let p_is_one = p.len() == 1 && p[0].is_one();
                for (x, y) in v.iter_mut().zip(b) {
                    if !p_is_one && !x.is_empty() {
                        *x = self.mul(p, x);
                    }
                    if !y.is_empty() {
                        let t = self.mul(&c, y);
                        *x = self.sub(std::mem::take(x), &t);
                    }
                }
            }
            _ => unreachable!("rows of one echelon share a representation"),
        }
    }
}

/// Incremental echelon basis of a row space.
pub struct Echelon {
    field: Field,
    ring: Ring,
    cols: usize,
    /// Basis rows sorted by pivot column.
    rows: Vec<Row>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Field, cols: usize) -> Echelon {
        Echelon {
            field: field.clone(),
            ring: Ring::new(field),
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce(&self, mut v: Row) -> Row {
        for (b, &col) in self.rows.iter().zip(&self.pivots) {
            let nonzero = match &v {
                Row::Rational(x) => !x[col].is_zero(),
                Row::Cyclotomic(x) => !x[col].is_empty(),
            };
            if nonzero {
                self.ring.eliminate(&mut v, b, col);
                self.ring.strip_content(&mut v);
            }
        }
        v
    }

    fn insert_reduced(&mut self, v: Row) -> bool {
        let Some(lead) = v.leading() else {
            return false;
        };
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.rows.insert(at, v);
        true
    }

    /// Adds one row; returns whether the rank increased.
    pub fn push(&mut self, row: &[Scalar]) -> bool {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        let mut v = self.ring.integral_row(row);
        self.ring.strip_content(&mut v);
        let v = self.reduce(v);
        self.insert_reduced(v)
    }

    /// Adds a block of rows, reducing them against the current basis in
    /// parallel before the sequential insertion pass.
    pub fn extend_parallel(&mut self, rows: &[Vec<Scalar>]) {
        let reduced: Vec<Row> = rows
            .par_iter()
            .map(|r| {
                assert_eq!(r.len(), self.cols, "row length mismatch");
                let mut v = self.ring.integral_row(r);
                self.ring.strip_content(&mut v);
                self.reduce(v)
            })
            .collect();
        for v in reduced {
            if v.is_zero() {
                continue;
            }
            let v = self.reduce(v);
            self.insert_reduced(v);
        }
    }

    /// Whether `row` lies in the current row space.
    pub fn contains(&self, row: &[Scalar]) -> bool {
        let v = self.ring.integral_row(row);
        self.reduce(v).is_zero()
    }

    /// Echelon rows as scalars (not normalized).
    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|r| self.ring.to_scalars(&self.field, r)).collect()
    }

    /// Canonical reduced row echelon form: pivots equal one and pivot
    /// columns are zero in every other row.
    pub fn rref(&self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        let mut rows = self.rows();
        for i in (0..rows.len()).rev() {
            let col = self.pivots[i];
            let inv = rows[i][col].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for x in rows[i].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &inv;
                    }
                }
            }
            let (above, rest) = rows.split_at_mut(i);
            let pivot_row = &rest[0];
            above.par_iter_mut().for_each(|r| {
                let c = r[col].clone();
                if c.is_zero() {
                    return;
                }
                for (x, y) in r.iter_mut().zip(pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &(&c * y);
                    }
                }
            });
        }
        (rows, self.pivots.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_rows(rows: &[&[i64]]) -> (Field, Vec<Vec<Scalar>>) {
        let q = Field::rationals();
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| q.from_int(x)).collect())
            .collect();
        (q, rows)
    }

    #[test]
    fn incremental_rank() {
        let (q, rows) = q_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1], &[1, 3, 4]]);
        let mut e = Echelon::new(&q, 3);
        let grew: Vec<bool> = rows.iter().map(|r| e.push(r)).collect();
        assert_eq!(grew, vec![true, false, true, false]);
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn rref_is_canonical() {
        let (q, rows) = q_rows(&[&[2, 4, 6], &[0, 3, 3]]);
        let mut a = Echelon::new(&q, 3);
        rows.iter().for_each(|r| {
            a.push(r);
        });
        let (_, rows2) = q_rows(&[&[1, 3, 4], &[0, -1, -1]]);
        let mut b = Echelon::new(&q, 3);
        rows2.iter().for_each(|r| {
            b.push(r);
        });
        assert_eq!(a.rref(), b.rref());
        let (r, p) = a.rref();
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r[0][2], q.from_int(1));
        assert_eq!(r[1][2], q.from_int(1));
    }

    #[test]
    fn cyclotomic_rank() {
        let f = Field::cyclotomic(3).unwrap();
        let z = f.zeta();
        // Second row is z times the first.
        let r1 = vec![f.one(), z.clone(), f.from_int(2)];
        let r2: Vec<Scalar> = r1.iter().map(|x| x * &z).collect();
        let r3 = vec![f.zero(), f.one(), z.clone()];
        let mut e = Echelon::new(&f, 3);
        assert!(e.push(&r1));
        assert!(!e.push(&r2));
        assert!(e.push(&r3));
        assert_eq!(e.rank(), 2);
    }
}
