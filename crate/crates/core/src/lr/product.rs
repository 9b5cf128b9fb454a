//! Schur products by adding the content of one factor to the other as a
//! sequence of horizontal strips, one strip per letter.
//!
//! Letter `k` occupies a horizontal strip added to the shape built by letters
//! `1..k`. The reading word is a lattice word iff for every row `r` the number of
//! `k`s in rows `0..=r` is at most the number of `k-1`s in rows `0..r`.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::lr::expansion::SchurExpansion;
use crate::partition::Partition;

/// Per-row upper bound on the shapes produced.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Limit<'a> {
    Unbounded,
    Box { rows: u32, cols: u32 },
    Within(&'a Partition),
}

impl Limit<'_> {
    fn row(&self, r: usize) -> u32 {
        match *self {
            Limit::Unbounded => u32::MAX,
            Limit::Box { rows, cols } => {
                if r < rows as usize {
                    cols
                } else {
                    0
                }
            }
            Limit::Within(p) => p.part(r),
        }
    }
}

/// Depth-first generator of LR extensions of `inner` by `content`.
pub(crate) struct StripSearch<'a> {
    content: &'a [u32],
    limit: Limit<'a>,
    shape: Vec<u32>,
    /// `strips[k][r]`: number of letters `k+1` in row `r`.
    strips: Vec<Vec<u32>>,
}

impl<'a> StripSearch<'a> {
    pub(crate) fn new(inner: &Partition, content: &'a Partition, limit: Limit<'a>) -> Self {
        let height = inner.len() + content.len();
        let mut shape = inner.parts().to_vec();
        shape.resize(height, 0);
        StripSearch {
            content: content.parts(),
            limit,
            shape,
            strips: vec![vec![0; height]; content.len()],
        }
    }

    /// Calls `visit(shape, strips)` once per LR tableau.
    pub(crate) fn run(&mut self, visit: &mut dyn FnMut(&[u32], &[Vec<u32>])) {
        if self.content.is_empty() {
            visit(&self.shape, &self.strips);
            return;
        }
        self.place(0, 0, self.content[0], 0, 0, visit);
    }

    /// Places letter `k + 1` in row `r` onward with `left` cells still to place.
    /// `placed` counts letters `k + 1` in rows above `r`, `prev_above` counts
    /// letters `k` in rows above `r`.
    fn place(
        &mut self,
        k: usize,
        r: usize,
        left: u32,
        placed: u32,
        prev_above: u32,
        visit: &mut dyn FnMut(&[u32], &[Vec<u32>]),
    ) {
        if left == 0 {
            if k + 1 == self.content.len() {
                visit(&self.shape, &self.strips);
            } else {
                self.place(k + 1, 0, self.content[k + 1], 0, 0, visit);
            }
            return;
        }
        if r >= self.shape.len() {
            return;
        }
        // Letters k+1 may only appear in rows >= k.
        if r < k {
            let prev_here = if k > 0 { self.strips[k - 1][r] } else { 0 };
            self.place(k, r + 1, left, placed, prev_above + prev_here, visit);
            return;
        }
        let cur = self.shape[r];
        // Horizontal strip: the new row may not pass the old row above.
        let ceiling = if r == 0 {
            u32::MAX
        } else {
            self.shape[r - 1] - self.strips[k][r - 1]
        };
        let mut max_add = left
            .min(ceiling.saturating_sub(cur))
            .min(self.limit.row(r).saturating_sub(cur));
        if k > 0 {
            max_add = max_add.min(prev_above.saturating_sub(placed));
        }
        if r > 0 && cur == 0 && self.shape[r - 1] == 0 {
            // rows below an empty row stay empty
            return;
        }
        let prev_here = if k > 0 { self.strips[k - 1][r] } else { 0 };
        for add in (0..=max_add).rev() {
            self.shape[r] = cur + add;
            self.strips[k][r] = add;
            self.place(k, r + 1, left - add, placed + add, prev_above + prev_here, visit);
        }
        self.shape[r] = cur;
        self.strips[k][r] = 0;
    }
}

fn trimmed(shape: &[u32]) -> Partition {
    let n = shape.iter().position(|&x| x == 0).unwrap_or(shape.len());
    Partition::from_sorted_unchecked(shape[..n].to_vec())
}

pub(crate) fn product_counts(mu: &Partition, nu: &Partition, limit: Limit<'_>) -> HashMap<Partition, u64> {
    let mut counts: HashMap<Partition, u64> = HashMap::new();
    // Adding the shorter content keeps the search shallow.
    let (base, content) = if nu.len() <= mu.len() { (mu, nu) } else { (nu, mu) };
    if !fits(base, limit) {
        return counts;
    }
    StripSearch::new(base, content, limit).run(&mut |shape, _| {
        *counts.entry(trimmed(shape)).or_default() += 1;
    });
    counts
}

fn fits(p: &Partition, limit: Limit<'_>) -> bool {
    (0..p.len()).all(|r| p.part(r) <= limit.row(r))
}

fn to_expansion(counts: HashMap<Partition, u64>) -> SchurExpansion {
    counts.into_iter().map(|(p, c)| (p, BigUint::from(c))).collect()
}

/// `S_μ · S_ν` expanded in the Schur basis.
pub fn schur_product(mu: &Partition, nu: &Partition) -> SchurExpansion {
    to_expansion(product_counts(mu, nu, Limit::Unbounded))
}

/// `S_μ · S_ν` keeping only the terms inside the `rows` x `cols` box.
pub fn schur_product_in_box(mu: &Partition, nu: &Partition, rows: u32, cols: u32) -> SchurExpansion {
    to_expansion(product_counts(mu, nu, Limit::Box { rows, cols }))
}

pub(crate) fn multiply_by(x: &SchurExpansion, factor: &Partition, limit: Limit<'_>) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for (kappa, c) in x.iter() {
        for (lam, n) in product_counts(kappa, factor, limit) {
            out.add_term(lam, c * BigUint::from(n));
        }
    }
    out
}

/// Multiplies an expansion by `S_factor`.
pub fn multiply_expansion(x: &SchurExpansion, factor: &Partition) -> SchurExpansion {
    multiply_by(x, factor, Limit::Unbounded)
}

/// Multiplies an expansion by `S_factor`, dropping terms outside the box.
pub fn multiply_expansion_in_box(x: &SchurExpansion, factor: &Partition, rows: u32, cols: u32) -> SchurExpansion {
    multiply_by(x, factor, Limit::Box { rows, cols })
}

/// The product of `S_μ` over all factors, folded left from `S_∅ = 1`.
pub fn multi_schur_product(factors: &[Partition]) -> SchurExpansion {
    factors
        .iter()
        .fold(SchurExpansion::one(), |acc, f| multiply_expansion(&acc, f))
}
