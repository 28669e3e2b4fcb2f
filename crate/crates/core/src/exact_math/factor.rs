//! Factorization of univariate polynomials over `Q` (Zassenhaus: modular
//! factorization, Hensel lifting, subset recombination) and over `Q(z)`
//! (Trager's norm method on top of the rational factorizer).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Field, Scalar};
use super::poly::Poly;

/// Monic irreducible factors with multiplicities, over the field of `f`.
/// Constants have no factors.
pub fn factor(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    for (g, mult) in f.squarefree_decomposition() {
        let parts = if f.field().degree() == 1 {
            factor_squarefree_rational(&g)
        } else {
            factor_squarefree_trager(&g)
        };
        out.extend(parts.into_iter().map(|p| (p, mult)));
    }
    out.sort_by_key(|(p, _)| p.degree());
    out
}

/// Whether `f` (of positive degree) is irreducible over its field.
pub fn is_irreducible(f: &Poly) -> bool {
    let fs = factor(f);
    fs.len() == 1 && fs[0].1 == 1
}

// ---------------------------------------------------------------------------
// Rational factorization

type ZPoly = Vec<BigInt>;
type FpPoly = Vec<u64>;

fn factor_squarefree_rational(f: &Poly) -> Vec<Poly> {
    let field = f.field().clone();
    if f.degree().unwrap_or(0) <= 1 {
        return vec![f.monic()];
    }
    let z = to_primitive_integer(f);
    zassenhaus(&z)
        .into_iter()
        .map(|g| {
            let coeffs = g
                .into_iter()
                .map(|c| field.from_rational(BigRational::from_integer(c)))
                .collect();
            Poly::new(&field, coeffs).monic()
        })
        .collect()
}

fn to_primitive_integer(f: &Poly) -> ZPoly {
    let rats: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| c.to_rational().expect("rational coefficients"))
        .collect();
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: ZPoly = rats
        .iter()
        .map(|r| (r * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    primitive(ints)
}

fn primitive(mut f: ZPoly) -> ZPoly {
    ztrim(&mut f);
    let g = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return f;
    }
    let g = if f.last().is_some_and(|c| c.is_negative()) {
        -g
    } else {
        g
    };
    f.iter().map(|c| c / &g).collect()
}

fn ztrim(f: &mut ZPoly) {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(&mut out);
    out
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out: ZPoly = (0..n)
        .map(|k| a.get(k).cloned().unwrap_or_default() - b.get(k).cloned().unwrap_or_default())
        .collect();
    ztrim(&mut out);
    out
}

/// Reduces coefficients into `[0, m)`.
fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    ztrim(&mut out);
    out
}

/// Reduces coefficients into the symmetric range `(-m/2, m/2]`.
fn zsym(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    ztrim(&mut out);
    out
}

/// Exact division over the integers, `None` if `g` does not divide `f`.
fn zdiv_exact(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    let dg = g.len() - 1;
    let mut r: ZPoly = f.to_vec();
    if r.len() < g.len() {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut q = vec![BigInt::zero(); r.len() - dg];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + dg].div_rem(&g[dg]);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, gj) in g.iter().enumerate() {
            r[k + j] -= &c * gj;
        }
        q[k] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    ztrim(&mut q);
    Some(q)
}

fn zderivative(f: &[BigInt]) -> ZPoly {
    f.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect()
}

// Arithmetic in F_p[x], p < 2^31.

fn fp_from_z(f: &[BigInt], p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    let mut out: FpPoly = f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    fp_trim(&mut out);
    out
}

fn fp_trim(f: &mut FpPoly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a, p - 2, p)
}

fn fp_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(&mut out);
    out
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out: FpPoly = (0..n)
        .map(|k| (a.get(k).copied().unwrap_or(0) + p - b.get(k).copied().unwrap_or(0)) % p)
        .collect();
    fp_trim(&mut out);
    out
}

fn fp_add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out: FpPoly = (0..n)
        .map(|k| (a.get(k).copied().unwrap_or(0) + b.get(k).copied().unwrap_or(0)) % p)
        .collect();
    fp_trim(&mut out);
    out
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let db = b.len() - 1;
    let inv = fp_inv(b[db], p);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * bj % p) % p;
        }
        q[k] = c;
    }
    r.truncate(db);
    fp_trim(&mut r);
    fp_trim(&mut q);
    (q, r)
}

fn fp_monic(a: &[u64], p: u64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => {
            let inv = fp_inv(l, p);
            a.iter().map(|&c| c * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// `(s, t)` with `s a + t b = 1` for coprime `a`, `b`.
fn fp_bezout(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1): (FpPoly, FpPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (FpPoly, FpPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    assert_eq!(r0.len(), 1, "bezout inputs must be coprime");
    let inv = fp_inv(r0[0], p);
    let scale = |v: FpPoly| -> FpPoly { v.into_iter().map(|c| c * inv % p).collect() };
    (scale(s0), scale(t0))
}

fn fp_powmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> FpPoly {
    let mut acc: FpPoly = vec![1];
    let base = fp_divrem(base, m, p).1;
    for i in (0..e.bits()).rev() {
        acc = fp_divrem(&fp_mul(&acc, &acc, p), m, p).1;
        if e.bit(i) {
            acc = fp_divrem(&fp_mul(&acc, &base, p), m, p).1;
        }
    }
    acc
}

/// Complete factorization of a monic square-free polynomial over `F_p`.
fn fp_factor(f: &[u64], p: u64, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let x: FpPoly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 1;
    while rest.len() > 1 && 2 * d < rest.len() {
        h = fp_powmod(&h, &BigUint::from(p), &rest, p);
        let g = fp_gcd(&rest, &fp_sub(&h, &x, p), p);
        if g.len() > 1 {
            equal_degree(&g, d, p, rng, &mut out);
            rest = fp_divrem(&rest, &g, p).0;
            h = fp_divrem(&h, &rest, p).1;
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(fp_monic(&rest, p));
    }
    out
}

fn equal_degree(g: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = g.len() - 1;
    if n == d {
        out.push(fp_monic(g, p));
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let mut a: FpPoly = (0..n).map(|_| rng.gen_range(0..p)).collect();
        fp_trim(&mut a);
        if a.len() < 2 {
            continue;
        }
        let b = fp_sub(&fp_powmod(&a, &e, g, p), &[1], p);
        let c = fp_gcd(g, &b, p);
        if c.len() > 1 && c.len() < g.len() {
            let other = fp_divrem(g, &c, p).0;
            equal_degree(&c, d, p, rng, out);
            equal_degree(&other, d, p, rng, out);
            return;
        }
    }
}

const SMALL_PRIMES: [u64; 30] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113, 127,
];

fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let lc = f[n].clone();
    let df = zderivative(f);

    // Pick the good prime (among a few) with the fewest modular factors.
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for &p in SMALL_PRIMES.iter().chain(std::iter::once(&131)) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = fp_from_z(f, p);
        if fp_gcd(&fp, &fp_from_z(&df, p), p).len() != 1 {
            continue;
        }
        let factors = fp_factor(&fp_monic(&fp, p), p, &mut rng);
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried == 5 {
            break;
        }
    }
    let (p, modular) = match best {
        Some(b) => b,
        None => return zassenhaus_large_prime(f),
    };
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    recombine(f, p, modular)
}

/// Fallback when every small prime divides the discriminant: search larger
/// primes. Still deterministic.
fn zassenhaus_large_prime(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    let lc = f[n].clone();
    let df = zderivative(f);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut p = 131u64;
    loop {
        p += 2;
        if !(2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
            continue;
        }
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = fp_from_z(f, p);
        if fp_gcd(&fp, &fp_from_z(&df, p), p).len() != 1 {
            continue;
        }
        let factors = fp_factor(&fp_monic(&fp, p), p, &mut rng);
        if factors.len() == 1 {
            return vec![f.clone()];
        }
        return recombine(f, p, factors);
    }
}

fn recombine(f: &ZPoly, p: u64, modular: Vec<FpPoly>) -> Vec<ZPoly> {
    let n = f.len() - 1;
    let lc = f[n].clone();
    // Coefficient bound for factors of lc * f.
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = norm1 * (BigInt::one() << n) * lc.abs() * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = lift_all(f, &modular, p, k, &pk);

    let mut found = Vec::new();
    let mut remaining: Vec<ZPoly> = lifted;
    let mut rest = f.clone();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut hit = None;
        for subset in Combinations::new(remaining.len(), s) {
            let lcr = rest.last().unwrap().clone();
            let mut g: ZPoly = vec![lcr];
            for &i in &subset {
                g = zmod(&zmul(&g, &remaining[i]), &pk);
            }
            let g = primitive(zsym(&g, &pk));
            if let Some(q) = zdiv_exact(&rest, &g) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(g);
                rest = primitive(q);
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, x)| x)
                    .collect();
            }
            None => s += 1,
        }
    }
    if rest.len() > 1 {
        found.push(rest);
    }
    found
}

/// Lifts `f = lc * prod(u_i) mod p` to monic factors modulo `p^k`.
fn lift_all(f: &ZPoly, factors: &[FpPoly], p: u64, k: u32, pk: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let lc = f.last().unwrap().mod_floor(pk);
        let inv = modinv(&lc, pk);
        return vec![zmod(&f.iter().map(|c| c * &inv).collect::<ZPoly>(), pk)];
    }
    let half = factors.len() / 2;
    let lc_p = fp_from_z(&[f.last().unwrap().clone()], p);
    let mut g0: FpPoly = lc_p;
    for u in &factors[..half] {
        g0 = fp_mul(&g0, u, p);
    }
    let mut h0: FpPoly = vec![1];
    for u in &factors[half..] {
        h0 = fp_mul(&h0, u, p);
    }
    let (g, h) = hensel_pair(f, &g0, &h0, p, k, pk);
    let mut out = lift_all(&g, &factors[..half], p, k, pk);
    out.extend(lift_all(&h, &factors[half..], p, k, pk));
    out
}

/// Linear Hensel lifting of `f = g h mod p` (h monic) to modulus `p^k`.
fn hensel_pair(f: &ZPoly, g0: &[u64], h0: &[u64], p: u64, k: u32, pk: &BigInt) -> (ZPoly, ZPoly) {
    let (s, t) = fp_bezout(g0, h0, p);
    let to_z = |v: &[u64]| -> ZPoly { v.iter().map(|&c| BigInt::from(c)).collect() };
    let mut g = to_z(g0);
    let mut h = to_z(h0);
    // Make the leading coefficient of g exactly lc(f) mod p^k.
    let dg = g.len() - 1;
    g[dg] = f.last().unwrap().mod_floor(pk);
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    for _ in 1..k {
        let diff = zsub(f, &zmul(&g, &h));
        let e: ZPoly = diff.iter().map(|c| c / &m).collect();
        let e = fp_from_z(&e, p);
        if e.is_empty() {
            m *= &pb;
            continue;
        }
        let se = fp_mul(&s, &e, p);
        let (q, b) = fp_divrem(&se, h0, p);
        let a = fp_add(&fp_mul(&t, &e, p), &fp_mul(&q, g0, p), p);
        let next = &m * &pb;
        let scaled = |v: &[u64]| -> ZPoly { v.iter().map(|&c| BigInt::from(c) * &m).collect() };
        g = zmod(&zadd(&g, &scaled(&a)), &next);
        h = zmod(&zadd(&h, &scaled(&b)), &next);
        m = next;
    }
    let _ = pk;
    (g, h)
}

fn zadd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out: ZPoly = (0..n)
        .map(|k| a.get(k).cloned().unwrap_or_default() + b.get(k).cloned().unwrap_or_default())
        .collect();
    ztrim(&mut out);
    out
}

fn modinv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// Index subsets of a fixed size in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let cur = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(cur)
    }
}

// ---------------------------------------------------------------------------
// Factorization over cyclotomic fields

fn factor_squarefree_trager(f: &Poly) -> Vec<Poly> {
    let field = f.field().clone();
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return vec![f.monic()];
    }
    let q = Field::rationals();
    let zeta = field.zeta();
    for shift in (0..).map(|i: i64| if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 }) {
        // g(x) = f(x - shift * zeta)
        let a = &zeta * &field.from_int(shift);
        let g = f.compose(&Poly::linear(&a));
        let norm = polynomial_norm(&g, &q);
        if norm.gcd(&norm.derivative()).degree() != Some(0) {
            continue;
        }
        let back = Poly::linear(&-&a); // x + shift*zeta
        let mut out = Vec::new();
        for ni in factor_squarefree_rational(&norm) {
            let embedded = Poly::new(
                &field,
                ni.coeffs()
                    .iter()
                    .map(|c| field.from_rational(c.to_rational().unwrap()))
                    .collect(),
            );
            let h = g.gcd(&embedded);
            if h.degree().unwrap_or(0) > 0 {
                out.push(h.compose(&back).monic());
            }
        }
        return out;
    }
    unreachable!()
}

/// `N(g) = prod over embeddings`, computed by evaluation and interpolation.
fn polynomial_norm(g: &Poly, q: &Field) -> Poly {
    let field = g.field();
    let deg = g.degree().unwrap() * field.degree();
    let xs: Vec<BigRational> = (0..=deg as i64).map(|x| BigRational::from_integer(x.into())).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x| g.eval(&field.from_rational(x.clone())).norm())
        .collect();
    interpolate(q, &xs, &ys)
}

/// Newton interpolation over `Q`.
fn interpolate(q: &Field, xs: &[BigRational], ys: &[BigRational]) -> Poly {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = Poly::zero(q);
    for i in (0..n).rev() {
        acc = acc
            .mul(&Poly::linear(&q.from_rational(xs[i].clone())))
            .add(&Poly::constant(q.from_rational(coef[i].clone())));
    }
    acc
}

/// Rational roots helper for tests and diagnostics.
pub fn linear_factors(f: &Poly) -> Vec<Scalar> {
    factor(f)
        .into_iter()
        .filter(|(p, _)| p.degree() == Some(1))
        .map(|(p, _)| -p.coeff(0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(q: &Field, c: &[i64]) -> Poly {
        Poly::new(q, c.iter().map(|&x| q.from_int(x)).collect())
    }

    fn product(fs: &[(Poly, usize)], field: &Field) -> Poly {
        fs.iter()
            .fold(Poly::one(field), |acc, (g, m)| acc.mul(&g.pow(*m as u32)))
    }

    #[test]
    fn rational_factorizations() {
        let q = Field::rationals();
        // x^4 - 1 = (x-1)(x+1)(x^2+1)
        let f = p(&q, &[-1, 0, 0, 0, 1]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 3);
        assert_eq!(product(&fs, &q), f);
        // x^4 + 1 is irreducible over Q but splits mod every prime.
        assert!(is_irreducible(&p(&q, &[1, 0, 0, 0, 1])));
        // (2x+3)(x^2-2)(3x-1)
        let g = p(&q, &[3, 2]).mul(&p(&q, &[-2, 0, 1])).mul(&p(&q, &[-1, 3]));
        let gs = factor(&g);
        assert_eq!(gs.len(), 3);
        assert_eq!(product(&gs, &q), g.monic());
    }

    #[test]
    fn repeated_and_high_degree() {
        let q = Field::rationals();
        let f = p(&q, &[1, 1])
            .pow(3)
            .mul(&p(&q, &[1, 1, 1]))
            .mul(&p(&q, &[-5, 0, 0, 0, 0, 0, 1]));
        let fs = factor(&f);
        assert_eq!(fs.iter().map(|(_, m)| *m).sum::<usize>(), 5);
        assert_eq!(product(&fs, &q), f);
    }

    #[test]
    fn gaussian_splitting() {
        let k = Field::cyclotomic(4).unwrap();
        // x^2 + 1 = (x - i)(x + i) over Q(i)
        let f = p(&k, &[1, 0, 1]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 2);
        assert_eq!(product(&fs, &k), f);
        // x^2 - 2 stays irreducible over Q(i)
        assert!(is_irreducible(&p(&k, &[-2, 0, 1])));
        // x^2 - 3 splits over Q(z_12)
        let k12 = Field::cyclotomic(12).unwrap();
        assert_eq!(factor(&p(&k12, &[-3, 0, 1])).len(), 2);
    }
}
