//! Exact arithmetic in the rationals and in cyclotomic fields `Q(z)`, `z` a
//! primitive `m`-th root of unity.
//!
//! Elements are residues modulo the `m`-th cyclotomic polynomial, stored as
//! trimmed coefficient vectors so that equal elements compare structurally.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

struct FieldInner {
    conductor: u64,
    /// Monic cyclotomic polynomial, lowest coefficient first.
    modulus: Vec<BigInt>,
}

/// The base field `Q(z_m)`; `m = 1` (or `m = 2`) gives the rationals.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl Field {
    pub fn rationals() -> Field {
        Field::cyclotomic(1).expect("conductor 1 is valid")
    }

    pub fn cyclotomic(conductor: u64) -> Result<Field> {
        if conductor == 0 {
            return Err(Error::InvalidField("conductor must be positive".into()));
        }
        if conductor > 10_000 {
            return Err(Error::InvalidField(format!(
                "conductor {conductor} is unreasonably large"
            )));
        }
        Ok(Field(Arc::new(FieldInner {
            conductor,
            modulus: cyclotomic_polynomial(conductor),
        })))
    }

    pub fn conductor(&self) -> u64 {
        self.0.conductor
    }

    /// Degree of the field over the rationals.
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    /// Cyclotomic polynomial defining the field, lowest coefficient first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            field: self.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        self.from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Scalar {
        self.from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(&self, r: BigRational) -> Scalar {
        self.from_coeffs(vec![r])
    }

    /// Builds the residue of `sum coeffs[i] z^i` (any length; reduced here).
    pub fn from_coeffs(&self, coeffs: Vec<BigRational>) -> Scalar {
        let mut c = coeffs;
        self.reduce(&mut c);
        Scalar {
            field: self.clone(),
            coeffs: c,
        }
    }

    /// The distinguished primitive `m`-th root of unity.
    pub fn zeta(&self) -> Scalar {
        self.zeta_pow(1)
    }

    /// `z^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Scalar {
        let m = self.conductor() as i64;
        let e = k.rem_euclid(m) as usize;
        let mut c = vec![BigRational::zero(); e + 1];
        c[e] = BigRational::one();
        self.from_coeffs(c)
    }

    /// A primitive `e`-th root of unity, if the field contains one.
    pub fn root_of_unity(&self, e: u64) -> Option<Scalar> {
        let m = self.conductor();
        if e == 0 {
            return None;
        }
        if m.is_multiple_of(e) {
            return Some(self.zeta_pow((m / e) as i64));
        }
        // For odd m the field also contains -z, a primitive 2m-th root.
        if m % 2 == 1 && (2 * m).is_multiple_of(e) {
            let z2m = -self.zeta_pow(m.div_ceil(2) as i64);
            return Some(z2m.pow((2 * m / e) as u32));
        }
        None
    }

    /// Whether `other` is the same field (same conductor).
    pub fn same(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.conductor() == other.conductor()
    }

    pub(crate) fn check(&self, other: &Field) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.conductor(),
                right: other.conductor(),
            })
        }
    }

    /// Embeds an element of this field into `target`, which must have a
    /// conductor divisible by this one.
    pub fn embed(&self, x: &Scalar, target: &Field) -> Result<Scalar> {
        let (m, big) = (self.conductor(), target.conductor());
        if !self.is_rational() && big % m != 0 {
            return Err(Error::InvalidField(format!("cannot embed Q(z_{m}) into Q(z_{big})")));
        }
        if self.is_rational() {
            let c = x.coeffs.first().cloned().unwrap_or_else(BigRational::zero);
            return Ok(target.from_rational(c));
        }
        let image = target.zeta_pow((big / m) as i64);
        let mut acc = target.zero();
        let mut power = target.one();
        for c in &x.coeffs {
            acc += &(&power * &target.from_rational(c.clone()));
            power = &power * &image;
        }
        Ok(acc)
    }

    fn reduce(&self, c: &mut Vec<BigRational>) {
        let d = self.degree();
        let modulus = &self.0.modulus;
        if c.len() > d {
            for k in (d..c.len()).rev() {
                if c[k].is_zero() {
                    continue;
                }
                let lead = std::mem::replace(&mut c[k], BigRational::zero());
                for (i, mi) in modulus.iter().enumerate().take(d) {
                    if !mi.is_zero() {
                        c[k - d + i] -= &lead * BigRational::from_integer(mi.clone());
                    }
                }
            }
            c.truncate(d);
        }
        trim(c);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z_{})", self.conductor())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Field {}

fn trim<T: Zero>(c: &mut Vec<T>) {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

/// Integer coefficients of the `m`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    // x^m - 1 divided by every Phi_d with d | m, d < m.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let den = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &den);
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut q = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(|x| x.is_zero()));
    q
}

/// An element of a cyclotomic field.
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Coefficients of the canonical residue, lowest power first, trimmed.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// The value as a machine integer, if it is one.
    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        let r = self.to_rational()?;
        if r.is_integer() {
            r.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.field.check(&other.field)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.field.check(&other.field)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.field.check(&other.field)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.field.check(&other.field)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => BigRational::zero(),
            };
            c.push(v);
        }
        trim(&mut c);
        Scalar {
            field: self.field.clone(),
            coeffs: c,
        }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return self.field.zero();
        }
        if self.coeffs.len() == 1 && other.coeffs.len() == 1 {
            return Scalar {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        let mut prod = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.from_coeffs(prod)
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Scalar {
                field: self.field.clone(),
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        // Extended Euclid in Q[x] against the cyclotomic modulus.
        let modulus: Vec<BigRational> = self
            .field
            .modulus()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (g, u) = ext_gcd(self.coeffs.clone(), modulus);
        // g is a nonzero constant because the modulus is irreducible.
        if g.len() != 1 {
            return Err(Error::Inconsistency(
                "cyclotomic modulus shares a factor with a nonzero residue".into(),
            ));
        }
        let scale = g[0].recip();
        Ok(self.field.from_coeffs(u.into_iter().map(|c| c * &scale).collect()))
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Norm down to the rationals (determinant of multiplication).
    pub fn norm(&self) -> BigRational {
        let d = self.field.degree();
        if d == 1 {
            return self.to_rational().unwrap_or_else(BigRational::zero);
        }
        let mut m: Vec<Vec<BigRational>> = Vec::with_capacity(d);
        let mut col = self.clone();
        let z = self.field.zeta();
        for _ in 0..d {
            let mut c = col.coeffs.clone();
            c.resize(d, BigRational::zero());
            m.push(c);
            col = &col * &z;
        }
        rational_det(m)
    }
}

fn rational_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    det
}

/// Returns `(g, u)` with `g = gcd(a, b)` and `u*a = g (mod b)`.
fn ext_gcd(a: Vec<BigRational>, b: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (vec![BigRational::one()], Vec::new());
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let qs = poly_mul(&q, &s1);
        let s2 = poly_sub(&s0, &qs);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigRational::zero) - b.get(i).cloned().unwrap_or_else(BigRational::zero)
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); rem.len() - db];
    for k in (0..q.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        q[k] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut q);
    (q, rem)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.same(&other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.conductor().hash(state);
        self.coeffs.hash(state);
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                if let Err(e) = self.field.check(&rhs.field) {
                    panic!("{e}");
                }
                $body(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Scalar, b: &Scalar| a.add_unchecked(b));
binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_unchecked(&-b));
binop!(Mul, mul, |a: &Scalar, b: &Scalar| a.mul_unchecked(b));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "z")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `"p/q"`, `"-3"`, `"1+2*z^3"`, `"z"`, `"-1/2*z^2"` into `field`.
pub fn parse_scalar(field: &Field, text: &str) -> Result<Scalar> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |msg: &str| Error::parse(format!("scalar {text:?}"), msg.to_string());
    if s.is_empty() {
        return Err(bad("empty scalar"));
    }
    let mut terms: Vec<(bool, &str)> = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut negative = false;
    if bytes[0] == b'-' || bytes[0] == b'+' {
        negative = bytes[0] == b'-';
        start = 1;
    }
    let mut i = start;
    while i < bytes.len() {
        // A sign after '^' or at term start belongs to the term.
        if (bytes[i] == b'+' || bytes[i] == b'-') && i > start && bytes[i - 1] != b'^' {
            terms.push((negative, &s[start..i]));
            negative = bytes[i] == b'-';
            start = i + 1;
        }
        i += 1;
    }
    terms.push((negative, &s[start..]));

    let mut coeffs: Vec<BigRational> = Vec::new();
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(bad("empty term"));
        }
        let (coef, power) = if let Some(pos) = term.find('z') {
            let (lhs, rhs) = (&term[..pos], &term[pos + 1..]);
            let coef = match lhs {
                "" => BigRational::one(),
                l => parse_rational(l.strip_suffix('*').unwrap_or(l)).ok_or_else(|| bad("bad coefficient"))?,
            };
            let power = match rhs {
                "" => 1usize,
                r => r
                    .strip_prefix('^')
                    .and_then(|p| p.parse::<usize>().ok())
                    .ok_or_else(|| bad("bad exponent"))?,
            };
            (coef, power)
        } else {
            (parse_rational(term).ok_or_else(|| bad("bad rational"))?, 0)
        };
        if power > 0 && field.conductor() <= 2 {
            return Err(bad("z is not available in the rationals; use a cyclotomic conductor"));
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigRational::zero());
        }
        coeffs[power] += if neg { -coef } else { coef };
    }
    Ok(field.from_coeffs(coeffs))
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        let q = Field::rationals();
        assert_eq!(q.from_ratio(1, 2) + q.from_ratio(1, 3), q.from_ratio(5, 6));
    }

    #[test]
    fn gaussian_zeta_squared_is_minus_one() {
        let f = Field::cyclotomic(4).unwrap();
        assert_eq!(f.zeta() * f.zeta(), f.from_int(-1));
    }

    #[test]
    fn inverse_in_q_zeta3() {
        let f = Field::cyclotomic(3).unwrap();
        let x = f.one() + f.zeta();
        let inv = x.inv().unwrap();
        // Multiply back in the quotient ring.
        assert!((&x * &inv).is_one());
        assert_eq!(inv, -f.zeta());
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |m| -> Vec<i64> {
            cyclotomic_polynomial(m)
                .iter()
                .map(|c| i64::try_from(c.clone()).unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn division_by_zero_and_mismatch() {
        let q = Field::rationals();
        assert!(matches!(q.zero().inv(), Err(Error::DivisionByZero)));
        let f = Field::cyclotomic(3).unwrap();
        assert!(matches!(
            q.one().checked_add(&f.one()),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn parse_and_display() {
        let f = Field::cyclotomic(5).unwrap();
        for text in ["1/2", "-3", "1+2*z^3", "z", "-1/2*z^2+z"] {
            let x = parse_scalar(&f, text).unwrap();
            let back = parse_scalar(&f, &x.to_string()).unwrap();
            assert_eq!(x, back, "{text}");
        }
        assert_eq!(parse_scalar(&f, "z^5").unwrap(), f.one());
        assert!(parse_scalar(&Field::rationals(), "z").is_err());
        assert!(parse_scalar(&f, "1/0").is_err());
    }

    #[test]
    fn roots_of_unity() {
        let f = Field::cyclotomic(3).unwrap();
        let w6 = f.root_of_unity(6).unwrap();
        assert!(w6.pow(6).is_one());
        assert!(!w6.pow(3).is_one());
        assert!(f.root_of_unity(4).is_none());
        assert_eq!(
            Field::rationals().root_of_unity(2).unwrap(),
            Field::rationals().from_int(-1)
        );
    }

    #[test]
    fn embedding_respects_arithmetic() {
        let small = Field::cyclotomic(3).unwrap();
        let big = Field::cyclotomic(12).unwrap();
        let a = small.one() + small.zeta();
        let b = small.from_int(2) * small.zeta();
        let ea = small.embed(&a, &big).unwrap();
        let eb = small.embed(&b, &big).unwrap();
        assert_eq!(small.embed(&(&a * &b), &big).unwrap(), &ea * &eb);
    }

    #[test]
    fn norms() {
        let f = Field::cyclotomic(4).unwrap();
        // N(1 + i) = 2
        let x = f.one() + f.zeta();
        assert_eq!(x.norm(), BigRational::from_integer(2.into()));
    }
}
