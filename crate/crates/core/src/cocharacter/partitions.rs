//! Partitions and irreducible characters of symmetric groups.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

/// A partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Order of the centralizer of a permutation of this cycle type.
    pub fn centralizer_order(&self) -> BigInt {
        let mut counts: HashMap<usize, u32> = HashMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_default() += 1;
        }
        counts.iter().fold(BigInt::from(1), |acc, (&part, &m)| {
            acc * BigInt::from(part).pow(m) * factorial(m as usize)
        })
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.centralizer_order()
    }

    /// `f^λ` by the hook length formula.
    pub fn dimension(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::from(1);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= row - j + conj.0[j] - i - 1;
            }
        }
        factorial(self.size()) / hooks
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&r| r > j).count()).collect())
    }

    /// A permutation of this cycle type: cycles of increasing length on
    /// consecutive blocks of `0..n`.
    pub fn representative(&self) -> Vec<usize> {
        let mut lengths = self.0.clone();
        lengths.reverse();
        let mut perm = Vec::with_capacity(self.size());
        let mut start = 0;
        for len in lengths {
            for k in 0..len {
                perm.push(start + (k + 1) % len);
            }
            start += len;
        }
        perm
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Character tables by the Murnaghan–Nakayama rule on beta-sets, memoized.
#[derive(Default)]
pub struct CharacterTable {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl CharacterTable {
    pub fn new() -> CharacterTable {
        CharacterTable::default()
    }

    /// `χ^λ(μ)` for `λ, μ ⊢ n`.
    pub fn value(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        assert_eq!(lambda.size(), mu.size(), "partitions of different sizes");
        let s = lambda.len();
        let beta: Vec<usize> = lambda.0.iter().enumerate().map(|(i, &l)| l + s - 1 - i).collect();
        self.beta_value(beta, mu.0.clone())
    }

    fn beta_value(&mut self, mut beta: Vec<usize>, mu: Vec<usize>) -> i64 {
        beta.sort_unstable();
        let Some((&r, rest)) = mu.split_first() else {
            return 1;
        };
        let key = (beta.clone(), mu.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let rest = rest.to_vec();
        let mut total = 0;
        for idx in 0..beta.len() {
            let b = beta[idx];
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            // Removing a rim hook of length r; its leg length counts the
            // beta numbers jumped over.
            let leg = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let mut next = beta.clone();
            next[idx] = b - r;
            let v = self.beta_value(next, rest.clone());
            total += if leg % 2 == 0 { v } else { -v };
        }
        self.memo.insert(key, total);
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_dimensions() {
        let counts: Vec<usize> = (1..=7).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(Partition::new(vec![1, 2]).dimension(), BigInt::from(2));
        assert_eq!(Partition::new(vec![3, 2]).dimension(), BigInt::from(5));
        for n in 1..=7 {
            let sum: BigInt = partitions(n).iter().map(|l| l.dimension() * l.dimension()).sum();
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn small_tables() {
        let mut t = CharacterTable::new();
        let (two, one_one) = (Partition::new(vec![2]), Partition::new(vec![1, 1]));
        assert_eq!(t.value(&two, &one_one), 1);
        assert_eq!(t.value(&two, &two), 1);
        assert_eq!(t.value(&one_one, &one_one), 1);
        assert_eq!(t.value(&one_one, &two), -1);
        let l = Partition::new(vec![2, 1]);
        assert_eq!(t.value(&l, &Partition::new(vec![1, 1, 1])), 2);
        assert_eq!(t.value(&l, &Partition::new(vec![2, 1])), 0);
        assert_eq!(t.value(&l, &Partition::new(vec![3])), -1);
    }

    #[test]
    fn representatives_have_the_right_type() {
        for mu in partitions(6) {
            let perm = mu.representative();
            let mut seen = [false; 6];
            let mut lengths = Vec::new();
            for i in 0..6 {
                if !seen[i] {
                    let mut len = 0;
                    let mut j = i;
                    while !seen[j] {
                        seen[j] = true;
                        j = perm[j];
                        len += 1;
                    }
                    lengths.push(len);
                }
            }
            assert_eq!(Partition::new(lengths), mu);
        }
    }
}
