//! Univariate polynomials over a cyclotomic field.

use std::fmt;

use super::field::{Field, Scalar};
use super::matrix::Matrix;

/// Dense polynomial, lowest coefficient first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::new(field, vec![field.one()])
    }

    pub fn constant(c: Scalar) -> Poly {
        let f = c.field().clone();
        Poly::new(&f, vec![c])
    }

    /// The polynomial `x - a`.
    pub fn linear(a: &Scalar) -> Poly {
        let f = a.field().clone();
        Poly::new(&f, vec![-a, f.one()])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().expect("nonzero lead");
        self.scale(&inv)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(&self.field, (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(&self.field, (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Poly::new(&self.field, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lead().inv().expect("nonzero lead");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(&self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    r[k + j] -= &(&c * dj);
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(&self.field, q), Poly::new(&self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &self.field.from_int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `f(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(&self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(&self.field, n).scale(c);
        }
        acc
    }

    /// `f(g(x))`.
    pub fn compose(&self, g: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Yun's square-free decomposition: monic `(g_i, i)` with `f = c * prod g_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.divrem(&a).0;
        let mut c = df.divrem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.monic(), i));
            }
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }
}

/// Characteristic polynomial `det(xI - M)` by the Faddeev–LeVerrier recursion.
pub fn charpoly(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let field = m.field();
    let n = m.rows();
    let mut coeffs = vec![field.zero(); n + 1];
    coeffs[n] = field.one();
    let id = Matrix::identity(field, n);
    let mut mk = Matrix::zeros(field, n, n);
    for k in 1..=n {
        mk = &(m * &mk) + &id.scale(&coeffs[n - k + 1]);
        let t = (m * &mk).trace();
        coeffs[n - k] = -(&t * &field.from_ratio(1, k as i64));
    }
    Poly::new(field, coeffs)
}

/// Minimal polynomial of a square matrix via linear dependence of its powers.
pub fn minpoly(m: &Matrix) -> Poly {
    let field = m.field();
    let n = m.rows();
    let mut powers: Vec<Vec<Scalar>> = vec![Matrix::identity(field, n).entries().to_vec()];
    let mut cur = Matrix::identity(field, n);
    loop {
        cur = &cur * m;
        let target = cur.entries().to_vec();
        let cols: Vec<Vec<Scalar>> = powers.clone();
        let a = Matrix::from_columns(field, n * n, &cols);
        if let Some(x) = a.solve(&target).expect("shapes agree") {
            let mut c: Vec<Scalar> = x.into_iter().map(|v| -v).collect();
            c.push(field.one());
            return Poly::new(field, c);
        }
        powers.push(target);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(q: &Field, c: &[i64]) -> Poly {
        Poly::new(q, c.iter().map(|&x| q.from_int(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let q = Field::rationals();
        let f = p(&q, &[-1, 0, 1]);
        let g = p(&q, &[1, 1]);
        let (quo, r) = f.divrem(&g);
        assert_eq!(quo, p(&q, &[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(f.gcd(&p(&q, &[-1, 1])), p(&q, &[-1, 1]));
    }

    #[test]
    fn squarefree_parts() {
        let q = Field::rationals();
        // (x-1)^2 (x+2)
        let f = p(&q, &[-1, 1]).pow(2).mul(&p(&q, &[2, 1]));
        let d = f.squarefree_decomposition();
        assert_eq!(d, vec![(p(&q, &[2, 1]), 1), (p(&q, &[-1, 1]), 2)]);
    }

    #[test]
    fn charpoly_and_minpoly() {
        let q = Field::rationals();
        let m = Matrix::from_ints(&q, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(charpoly(&m), p(&q, &[-2, 1]).pow(2).mul(&p(&q, &[-3, 1])));
        assert_eq!(minpoly(&m), p(&q, &[-2, 1]).mul(&p(&q, &[-3, 1])));
        assert!(charpoly(&m).eval_matrix(&m).is_zero());
    }
}
