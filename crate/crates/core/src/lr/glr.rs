//! Generalized LR tableaux: chains of partitions with an LR filling of each
//! consecutive skew layer. Their number is the coefficient of `S_λ` in a
//! product of several Schur functions.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::product::{Limit, StripSearch};
use crate::lr::tableau::LRTableau;
use crate::partition::{Partition, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GLRTableau {
    /// `∅ = λ⁰ ⊆ λ¹ ⊆ … ⊆ λʳ`.
    chain: Vec<Partition>,
    fillings: Vec<LRTableau>,
}

impl GLRTableau {
    /// Assembles a GLR tableau from its layer fillings, checking that they nest.
    pub fn from_fillings(fillings: Vec<LRTableau>) -> std::result::Result<Self, String> {
        let mut chain = vec![Partition::empty()];
        for (i, t) in fillings.iter().enumerate() {
            if t.shape().inner() != chain.last().unwrap() {
                return Err(format!("layer {} does not start where layer {} ends", i + 1, i));
            }
            t.check()?;
            chain.push(t.shape().outer().clone());
        }
        Ok(GLRTableau { chain, fillings })
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn fillings(&self) -> &[LRTableau] {
        &self.fillings
    }

    pub fn shape(&self) -> &Partition {
        self.chain.last().expect("chain is never empty")
    }

    pub fn contents(&self) -> Vec<Partition> {
        self.fillings
            .iter()
            .map(|t| t.content().expect("LR tableaux have partition content"))
            .collect()
    }

    /// Reading words of all layers, concatenated.
    pub fn word(&self) -> Vec<u32> {
        self.fillings.iter().flat_map(LRTableau::word).collect()
    }

    pub fn check(&self) -> std::result::Result<(), String> {
        let rebuilt = GLRTableau::from_fillings(self.fillings.clone())?;
        if rebuilt.chain != self.chain {
            return Err("chain does not match the fillings".into());
        }
        Ok(())
    }
}

fn weights_match(lambda: &Partition, contents: &[Partition]) -> bool {
    contents.iter().map(Partition::weight).sum::<u64>() == lambda.weight()
}

fn layer_from_strips(outer: &[u32], inner: &Partition, strips: &[Vec<u32>]) -> LRTableau {
    let outer_p = Partition::new(outer.to_vec()).expect("strip search yields partitions");
    let rows = (0..outer_p.len())
        .map(|r| {
            strips
                .iter()
                .enumerate()
                .flat_map(|(k, s)| std::iter::repeat(k as u32 + 1).take(s[r] as usize))
                .collect()
        })
        .collect();
    let shape = SkewShape::new(outer_p, inner.clone()).expect("strip search grows the shape");
    LRTableau::from_parts_unchecked(shape, rows)
}

/// Coefficient of `S_λ` in `∏ S_{contents[i]}`, counted over GLR tableaux.
pub fn glr_coef(lambda: &Partition, contents: &[Partition]) -> BigUint {
    if !weights_match(lambda, contents) {
        return BigUint::default();
    }
    let mut memo: HashMap<(usize, Partition), BigUint> = HashMap::new();
    count_chains(lambda, contents, 0, &Partition::empty(), &mut memo)
}

fn count_chains(
    lambda: &Partition,
    contents: &[Partition],
    i: usize,
    shape: &Partition,
    memo: &mut HashMap<(usize, Partition), BigUint>,
) -> BigUint {
    if i == contents.len() {
        return BigUint::from(u32::from(shape == lambda));
    }
    if let Some(c) = memo.get(&(i, shape.clone())) {
        return c.clone();
    }
    let mut next: HashMap<Partition, u64> = HashMap::new();
    StripSearch::new(shape, &contents[i], Limit::Within(lambda)).run(&mut |s, _| {
        let p = Partition::new(s.to_vec()).expect("strip search yields partitions");
        *next.entry(p).or_default() += 1;
    });
    let mut total = BigUint::default();
    for (p, n) in next {
        let sub = count_chains(lambda, contents, i + 1, &p, memo);
        total += sub * BigUint::from(n);
    }
    memo.insert((i, shape.clone()), total.clone());
    total
}

/// All GLR tableaux of shape `λ` and the given contents, ordered by their
/// concatenated reading words (ties broken by the chain).
pub fn enumerate_glr_tableaux(lambda: &Partition, contents: &[Partition]) -> Vec<GLRTableau> {
    let mut out = Vec::new();
    if !weights_match(lambda, contents) {
        return out;
    }
    let mut layers = Vec::new();
    collect_chains(lambda, contents, &Partition::empty(), &mut layers, &mut out);
    out.sort_by(|x, y| x.word().cmp(&y.word()).then_with(|| x.chain.cmp(&y.chain)));
    out
}

fn collect_chains(
    lambda: &Partition,
    contents: &[Partition],
    shape: &Partition,
    layers: &mut Vec<LRTableau>,
    out: &mut Vec<GLRTableau>,
) {
    let i = layers.len();
    if i == contents.len() {
        if shape == lambda {
            out.push(GLRTableau::from_fillings(layers.clone()).expect("layers nest by construction"));
        }
        return;
    }
    let mut found = Vec::new();
    StripSearch::new(shape, &contents[i], Limit::Within(lambda)).run(&mut |s, strips| {
        found.push(layer_from_strips(s, shape, strips));
    });
    for t in found {
        let outer = t.shape().outer().clone();
        layers.push(t);
        collect_chains(lambda, contents, &outer, layers, out);
        layers.pop();
    }
}

fn check_budgets(contents: &[Partition], row_budgets: &[u32]) -> Result<()> {
    if contents.len() != row_budgets.len() {
        return Err(Error::BudgetTooSmall {
            index: row_budgets.len().min(contents.len()),
            budget: 0,
            length: contents.len(),
        });
    }
    for (index, (c, &budget)) in contents.iter().zip(row_budgets).enumerate() {
        if (budget as usize) < c.len() {
            return Err(Error::BudgetTooSmall {
                index,
                budget,
                length: c.len(),
            });
        }
    }
    Ok(())
}

/// Inserts frozen rectangles: layer `i` gains a `row_budgets[i]` x `d` block
/// whose columns read `1, 2, …`, placed to the left of the rows it occupies.
///
/// The result has shape `□_{a,d} + λ` and contents `□_{aᵢ,d} + μⁱ`, where
/// `a` is the sum of the budgets.
pub fn freeze(t: &GLRTableau, row_budgets: &[u32], d: u32) -> Result<GLRTableau> {
    check_budgets(&t.contents(), row_budgets)?;
    let mut fillings = Vec::with_capacity(t.fillings.len());
    let mut before = 0usize;
    for (i, layer) in t.fillings.iter().enumerate() {
        let after = before + row_budgets[i] as usize;
        let (lo, hi) = (&t.chain[i], &t.chain[i + 1]);
        if hi.len() > after {
            return Err(Error::NotFrozen(format!(
                "layer {} reaches row {} beyond its budget rows {}",
                i + 1,
                hi.len(),
                after
            )));
        }
        let outer = Partition::rectangle(after as u32, d).part_sum(hi);
        let inner = Partition::rectangle(before as u32, d).part_sum(lo);
        let rows = (0..outer.len())
            .map(|r| {
                let orig = layer.rows().get(r).cloned().unwrap_or_default();
                if r < before {
                    orig
                } else {
                    let letter = (r - before) as u32 + 1;
                    std::iter::repeat(letter).take(d as usize).chain(orig).collect()
                }
            })
            .collect();
        let shape = SkewShape::new(outer, inner).expect("frozen shapes nest");
        let frozen = LRTableau::new(shape, rows)
            .map_err(|e| Error::NotFrozen(format!("layer {}: {e}", i + 1)))?;
        fillings.push(frozen);
        before = after;
    }
    GLRTableau::from_fillings(fillings).map_err(Error::NotFrozen)
}

/// Removes the frozen rectangles inserted by [`freeze`].
pub fn thaw(t: &GLRTableau, row_budgets: &[u32], d: u32) -> Result<GLRTableau> {
    if t.fillings.len() != row_budgets.len() {
        return Err(Error::NotFrozen(format!(
            "{} layers but {} budgets",
            t.fillings.len(),
            row_budgets.len()
        )));
    }
    let mut fillings = Vec::with_capacity(t.fillings.len());
    let mut before = 0usize;
    let mut lo = Partition::empty();
    for (i, layer) in t.fillings.iter().enumerate() {
        let after = before + row_budgets[i] as usize;
        let hi_frozen = layer.shape().outer();
        if hi_frozen.len() > after || (0..after).any(|r| hi_frozen.part(r) < d) {
            return Err(Error::NotFrozen(format!("layer {} lacks its rectangle", i + 1)));
        }
        let hi = Partition::new(hi_frozen.parts().iter().map(|&x| x - d).collect())
            .expect("subtracting a constant keeps the order");
        let mut rows = Vec::with_capacity(after);
        for r in 0..hi_frozen.len() {
            let orig = layer.rows().get(r).cloned().unwrap_or_default();
            if r < before {
                rows.push(orig);
            } else {
                let letter = (r - before) as u32 + 1;
                let d = d as usize;
                if orig.len() < d || orig[..d].iter().any(|&v| v != letter) {
                    return Err(Error::NotFrozen(format!(
                        "layer {} row {} does not start with {d} copies of {letter}",
                        i + 1,
                        r + 1
                    )));
                }
                rows.push(orig[d..].to_vec());
            }
        }
        if rows[hi.len().min(rows.len())..].iter().any(|r| !r.is_empty()) {
            return Err(Error::NotFrozen(format!("layer {} has entries below its shape", i + 1)));
        }
        rows.truncate(hi.len());
        let shape = SkewShape::new(hi.clone(), lo.clone())
            .map_err(|e| Error::NotFrozen(format!("layer {}: {e}", i + 1)))?;
        let thawed = LRTableau::new(shape, rows)
            .map_err(|e| Error::NotFrozen(format!("layer {}: {e}", i + 1)))?;
        fillings.push(thawed);
        before = after;
        lo = hi;
    }
    GLRTableau::from_fillings(fillings).map_err(Error::NotFrozen)
}
