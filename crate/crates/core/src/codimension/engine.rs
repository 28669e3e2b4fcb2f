//! Evaluation matrices of multilinear monomials.
//!
//! A row is a decorated monomial `x_{σ(1)}^{h} ... x_{σ(n)}^{h}` (left-normed
//! bracket for Lie algebras); its entries are the coordinates of the value on
//! every tuple of candidate basis vectors, one candidate list per variable.
//! Columns are indexed by `(tuple, output coordinate)`.

use rayon::prelude::*;

use crate::algebra_core::Algebra;
use crate::exact_math::matrix::vec_is_zero;
use crate::exact_math::{Echelon, Matrix, Scalar};

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Evaluation data for one block of rows.
pub struct Evaluator<'a> {
    algebra: &'a Algebra,
    n: usize,
    /// Candidate vectors per variable.
    slots: Vec<Vec<Vec<Scalar>>>,
    /// `images[v][h][c]`: decoration `h` applied to candidate `c` of variable `v`.
    images: Vec<Vec<Vec<Vec<Scalar>>>>,
    /// Right multiplication (or bracket) by the corresponding image.
    rmul: Vec<Vec<Vec<Matrix>>>,
    strides: Vec<usize>,
    tuples: usize,
}

impl<'a> Evaluator<'a> {
    pub fn new(algebra: &'a Algebra, slots: Vec<Vec<Vec<Scalar>>>, decorations: &[Matrix]) -> Evaluator<'a> {
        let n = slots.len();
        let images: Vec<Vec<Vec<Vec<Scalar>>>> = slots
            .iter()
            .map(|cands| {
                decorations
                    .iter()
                    .map(|h| cands.iter().map(|c| h.apply(c)).collect())
                    .collect()
            })
            .collect();
        let rmul = images
            .iter()
            .map(|per_h| {
                per_h
                    .iter()
                    .map(|per_c| per_c.iter().map(|w| algebra.right_mult(w)).collect())
                    .collect()
            })
            .collect();
        let mut strides = vec![1usize; n];
        for v in (0..n.saturating_sub(1)).rev() {
            strides[v] = strides[v + 1] * slots[v + 1].len();
        }
        let tuples = slots.iter().map(Vec::len).product();
        Evaluator {
            algebra,
            n,
            slots,
            images,
            rmul,
            strides,
            tuples,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.tuples * self.algebra.dim()
    }

    pub fn slot_sizes(&self) -> Vec<usize> {
        self.slots.iter().map(Vec::len).collect()
    }

    pub fn decoration_count(&self) -> usize {
        self.images.first().map_or(1, Vec::len)
    }

    /// The row of the monomial whose `k`-th factor is variable `sigma[k]`,
    /// with variable `v` decorated by `decos[v]`.
    pub fn row(&self, sigma: &[usize], decos: &[usize]) -> Vec<Scalar> {
        let d = self.algebra.dim();
        let mut out = vec![self.algebra.field().zero(); self.cols()];
        if self.n == 0 {
            return out;
        }
        self.fill(0, sigma, decos, None, 0, &mut out, d);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        &self,
        k: usize,
        sigma: &[usize],
        decos: &[usize],
        prefix: Option<&[Scalar]>,
        base: usize,
        out: &mut [Scalar],
        d: usize,
    ) {
        let v = sigma[k];
        let h = decos[v];
        for c in 0..self.slots[v].len() {
            let val = match prefix {
                None => self.images[v][h][c].clone(),
                Some(p) => self.rmul[v][h][c].apply(p),
            };
            if vec_is_zero(&val) {
                continue;
            }
            let col = base + c * self.strides[v];
            if k + 1 == self.n {
                out[col * d..(col + 1) * d].clone_from_slice(&val);
            } else {
                self.fill(k + 1, sigma, decos, Some(&val), col, out, d);
            }
        }
    }

    /// Column permutation realizing the substitution `x_v -> x_{tau(v)}`:
    /// entry `j` of the result is entry `perm[j]` of the input. Requires all
    /// variables to share one candidate list.
    pub fn variable_permutation(&self, tau: &[usize]) -> Vec<usize> {
        let d = self.algebra.dim();
        let sizes = self.slot_sizes();
        let mut perm = Vec::with_capacity(self.cols());
        let mut digits = vec![0usize; self.n];
        for t in 0..self.tuples {
            let mut rem = t;
            for v in 0..self.n {
                digits[v] = rem / self.strides[v];
                rem %= self.strides[v];
            }
            let mut src = 0;
            for v in 0..self.n {
                debug_assert_eq!(sizes[v], sizes[tau[v]]);
                src += digits[tau[v]] * self.strides[v];
            }
            for o in 0..d {
                perm.push(src * d + o);
            }
        }
        perm
    }
}

/// Every `(sigma, decoration tuple)` pair, in a fixed order.
pub fn row_labels(n: usize, decorations: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let perms = permutations(n);
    let mut decos = vec![Vec::new()];
    for _ in 0..n {
        decos = decos
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..decorations).map(move |h| {
                    let mut t = t.clone();
                    t.push(h);
                    t
                })
            })
            .collect();
    }
    perms
        .iter()
        .flat_map(|p| decos.iter().map(move |d| (p.clone(), d.clone())))
        .collect()
}

const BATCH: usize = 256;

/// Row-reduces all rows of an evaluator, stopping early at full column rank.
pub fn eliminate(ev: &Evaluator<'_>) -> Echelon {
    let labels = row_labels(ev.n(), ev.decoration_count());
    let mut ech = Echelon::new(ev.algebra.field(), ev.cols());
    for chunk in labels.chunks(BATCH) {
        if ech.rank() == ev.cols() {
            break;
        }
        let rows: Vec<Vec<Scalar>> = chunk.par_iter().map(|(s, d)| ev.row(s, d)).collect();
        ech.extend_parallel(&rows);
    }
    ech
}

/// All rows (for oracles and small cross-checks).
pub fn all_rows(ev: &Evaluator<'_>) -> Vec<Vec<Scalar>> {
    row_labels(ev.n(), ev.decoration_count())
        .par_iter()
        .map(|(s, d)| ev.row(s, d))
        .collect()
}
