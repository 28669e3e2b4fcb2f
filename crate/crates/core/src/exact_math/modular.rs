//! Rank modulo word-sized primes.
//!
//! A prime `p = 1 mod m` carries a primitive `m`-th root of unity `w`, and
//! `z -> w` is a ring map from the `p`-integral part of `Q(z_m)` onto `F_p`.
//! Ranks mod `p` are lower bounds for the exact rank, with equality for all
//! but finitely many primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::field::{Field, Scalar};

/// A prime together with the image of `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularPrime {
    pub p: u64,
    pub root: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in [2u64, 3, 5, 7, 11, 13] {
        if n.is_multiple_of(d) {
            return n == d;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // Deterministic witness set for 64-bit integers.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `count` primes below `2^62` with `p = 1 mod m`, scanning downward from `start`.
pub fn primes_for(field: &Field, count: usize, start: u64) -> Vec<ModularPrime> {
    let m = field.conductor().max(2);
    let mut out = Vec::new();
    let mut p = start - start % m + 1;
    while out.len() < count && p > m {
        if is_prime(p) {
            let order_factors = prime_factors(m);
            for g in 2..p {
                let w = pow_mod(g, (p - 1) / m, p);
                if order_factors.iter().all(|&q| pow_mod(w, m / q, p) != 1) {
                    out.push(ModularPrime { p, root: w });
                    break;
                }
            }
        }
        p -= m;
    }
    out
}

/// Image of a scalar in `F_p`, or `None` if a denominator vanishes mod `p`.
pub fn reduce_scalar(x: &Scalar, prime: ModularPrime) -> Option<u64> {
    let p = prime.p;
    let pb = BigInt::from(p);
    let mut acc = 0u64;
    let mut wk = 1u64;
    for c in x.coeffs() {
        if !c.is_zero() {
            let num = c.numer().mod_floor(&pb).to_u64()?;
            let den = c.denom().mod_floor(&pb).to_u64()?;
            if den == 0 {
                return None;
            }
            let v = mul_mod(num, pow_mod(den, p - 2, p), p);
            acc = (acc + mul_mod(v, wk, p)) % p;
        }
        wk = mul_mod(wk, prime.root, p);
    }
    Some(acc)
}

/// Rank of the rows modulo the prime, with the indices of rows that were
/// independent when inserted in order.
pub fn rank_mod(rows: &[Vec<Scalar>], prime: ModularPrime) -> Option<(usize, Vec<usize>)> {
    let p = prime.p;
    let reduced: Option<Vec<Vec<u64>>> = rows
        .par_iter()
        .map(|r| r.iter().map(|x| reduce_scalar(x, prime)).collect())
        .collect();
    let reduced = reduced?;
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut independent = Vec::new();
    for (idx, mut v) in reduced.into_iter().enumerate() {
        for (piv, b) in &basis {
            let c = v[*piv];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    if *y != 0 {
                        *x = (*x + p - mul_mod(c, *y, p)) % p;
                    }
                }
            }
        }
        if let Some(piv) = v.iter().position(|&x| x != 0) {
            let inv = pow_mod(v[piv], p - 2, p);
            for x in v.iter_mut() {
                *x = mul_mod(*x, inv, p);
            }
            basis.push((piv, v));
            independent.push(idx);
        }
    }
    Some((basis.len(), independent))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_carry_roots() {
        let f = Field::cyclotomic(12).unwrap();
        let ps = primes_for(&f, 2, 1 << 40);
        assert_eq!(ps.len(), 2);
        for mp in ps {
            assert_eq!(mp.p % 12, 1);
            assert_eq!(pow_mod(mp.root, 12, mp.p), 1);
            assert_ne!(pow_mod(mp.root, 6, mp.p), 1);
            assert_ne!(pow_mod(mp.root, 4, mp.p), 1);
        }
    }

    #[test]
    fn reduction_is_a_ring_map() {
        let f = Field::cyclotomic(5).unwrap();
        let mp = primes_for(&f, 1, 1 << 40)[0];
        let a = &f.zeta() + &f.from_ratio(1, 3);
        let b = &f.zeta_pow(3) - &f.from_int(7);
        let lhs = reduce_scalar(&(&a * &b), mp).unwrap();
        let rhs = mul_mod(reduce_scalar(&a, mp).unwrap(), reduce_scalar(&b, mp).unwrap(), mp.p);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn modular_rank_matches() {
        let q = Field::rationals();
        let rows: Vec<Vec<Scalar>> = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| q.from_int(x)).collect())
            .collect();
        let mp = primes_for(&q, 1, 1 << 40)[0];
        assert_eq!(rank_mod(&rows, mp).unwrap(), (2, vec![0, 2]));
    }
}
