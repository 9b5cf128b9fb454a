//! Composable splits of Schubert problems and their compositions.

use std::collections::HashSet;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{class_product, delta, GrassmannianShape, SchubertProblem};
use crate::lr::SchurExpansion;
use crate::partition::{partitions_in_box, Partition};

/// Default bound on the number of splits returned by a search.
pub const DEFAULT_SPLIT_CAP: usize = 10_000;

/// A Schubert problem on G(a,b) split into groups `mu` and `nu`, with row
/// budgets for the first group and column budgets for the second.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComposableSplit {
    pub a: u32,
    pub b: u32,
    pub mu: Vec<Partition>,
    pub nu: Vec<Partition>,
    pub row_budgets: Vec<u32>,
    pub col_budgets: Vec<u32>,
}

impl ComposableSplit {
    pub fn ambient(&self) -> Result<GrassmannianShape> {
        GrassmannianShape::new(self.a, self.b)
    }

    /// All conditions, `mu` first.
    pub fn conditions(&self) -> Vec<Partition> {
        self.mu.iter().chain(&self.nu).cloned().collect()
    }

    pub fn problem(&self) -> Result<SchubertProblem> {
        SchubertProblem::new(self.ambient()?, self.conditions())
    }

    /// Conjugates every partition, exchanging the roles of rows and columns.
    pub fn conjugate(&self) -> ComposableSplit {
        ComposableSplit {
            a: self.b,
            b: self.a,
            mu: self.nu.iter().map(Partition::conjugate).collect(),
            nu: self.mu.iter().map(Partition::conjugate).collect(),
            row_budgets: self.col_budgets.clone(),
            col_budgets: self.row_budgets.clone(),
        }
    }
}

/// A Schubert problem on G(c,d) written as a triple of lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiberProblem {
    pub c: u32,
    pub d: u32,
    pub alpha: Vec<Partition>,
    pub beta: Vec<Partition>,
    pub gamma: Vec<Partition>,
}

impl FiberProblem {
    pub fn conditions(&self) -> Vec<Partition> {
        self.alpha.iter().chain(&self.beta).chain(&self.gamma).cloned().collect()
    }

    pub fn problem(&self) -> Result<SchubertProblem> {
        SchubertProblem::new(GrassmannianShape::new(self.c, self.d)?, self.conditions())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompositionSpec {
    pub base: ComposableSplit,
    pub fiber: FiberProblem,
}

impl CompositionSpec {
    /// Every violated constraint, in a fixed order; empty when the spec is valid.
    pub fn violations(&self) -> Vec<String> {
        let mut out: Vec<String> = validate_split(&self.base)
            .into_iter()
            .map(|v| format!("base: {v}"))
            .collect();
        let f = &self.fiber;
        if f.c == 0 || f.d == 0 {
            out.push(format!("fiber: G({},{}) needs positive dimensions", f.c, f.d));
        }
        if f.alpha.len() != self.base.mu.len() {
            out.push(format!(
                "fiber: alpha has {} entries but mu has {}",
                f.alpha.len(),
                self.base.mu.len()
            ));
        }
        if f.beta.len() != self.base.nu.len() {
            out.push(format!(
                "fiber: beta has {} entries but nu has {}",
                f.beta.len(),
                self.base.nu.len()
            ));
        }
        if f.c > 0 && f.d > 0 {
            if let Err(e) = f.problem() {
                out.push(format!("fiber: {e}"));
            }
        }
        out
    }

    fn check(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::SpecInvalid(v))
        }
    }
}

/// Lists every violated constraint of a split; empty means valid.
pub fn validate_split(s: &ComposableSplit) -> Vec<String> {
    let mut out = Vec::new();
    if s.a == 0 || s.b == 0 {
        out.push(format!("G({},{}) needs positive dimensions", s.a, s.b));
    }
    if s.row_budgets.len() != s.mu.len() {
        out.push(format!(
            "{} row budgets for {} partitions in mu",
            s.row_budgets.len(),
            s.mu.len()
        ));
    }
    if s.col_budgets.len() != s.nu.len() {
        out.push(format!(
            "{} column budgets for {} partitions in nu",
            s.col_budgets.len(),
            s.nu.len()
        ));
    }
    let row_sum: u64 = s.row_budgets.iter().map(|&x| u64::from(x)).sum();
    if row_sum != u64::from(s.a) {
        out.push(format!("row budgets sum to {row_sum}, not a = {}", s.a));
    }
    let col_sum: u64 = s.col_budgets.iter().map(|&x| u64::from(x)).sum();
    if col_sum != u64::from(s.b) {
        out.push(format!("column budgets sum to {col_sum}, not b = {}", s.b));
    }
    for (i, (m, &ai)) in s.mu.iter().zip(&s.row_budgets).enumerate() {
        if (ai as usize) < m.len() {
            out.push(format!("mu[{i}] = {m} has {} rows, budget is {ai}", m.len()));
        }
    }
    for (j, (n, &bj)) in s.nu.iter().zip(&s.col_budgets).enumerate() {
        if bj < n.first() {
            out.push(format!("nu[{j}] = {n} has {} columns, budget is {bj}", n.first()));
        }
    }
    if s.a > 0 && s.b > 0 {
        if let Err(e) = s.problem() {
            out.push(e.to_string());
        }
    }
    out
}

pub fn is_valid_split(s: &ComposableSplit) -> bool {
    validate_split(s).is_empty()
}

/// All ways to write `total - floor.sum()` as extra budget on top of `floor`,
/// in lexicographic order of the resulting budget vectors.
fn budget_vectors(floor: &[u32], total: u32) -> Vec<Vec<u32>> {
    fn go(floor: &[u32], slack: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = cur.len();
        if i == floor.len() {
            if slack == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let range = if i + 1 == floor.len() { slack..=slack } else { 0..=slack };
        for extra in range {
            cur.push(floor[i] + extra);
            go(floor, slack - extra, cur, out);
            cur.pop();
        }
    }
    let used: u64 = floor.iter().map(|&x| u64::from(x)).sum();
    let mut out = Vec::new();
    if used > u64::from(total) || (floor.is_empty() && total > 0) {
        return out;
    }
    go(floor, total - used as u32, &mut Vec::new(), &mut out);
    out
}

/// Every composable split of `p`, at most `cap` of them.
///
/// Splits are ordered by the bitmask of conditions placed in `mu` (bit `i`
/// for condition `i`), then by row budgets, then by column budgets. Splits
/// that coincide because of repeated conditions are listed once.
pub fn find_composable_splits(p: &SchubertProblem, cap: usize) -> Vec<ComposableSplit> {
    let g = p.ambient();
    let conds = p.conditions();
    let n = conds.len();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    // Each nonempty condition uses up at least one unit of budget.
    let nonempty = conds.iter().filter(|c| !c.is_empty()).count() as u64;
    if n >= 64 || nonempty > u64::from(g.a) + u64::from(g.b) {
        return out;
    }
    for mask in 0u64..(1u64 << n) {
        let (mut mu, mut nu) = (Vec::new(), Vec::new());
        for (i, c) in conds.iter().enumerate() {
            if mask >> i & 1 == 1 {
                mu.push(c.clone());
            } else {
                nu.push(c.clone());
            }
        }
        let row_floor: Vec<u32> = mu.iter().map(|m| m.len() as u32).collect();
        let col_floor: Vec<u32> = nu.iter().map(Partition::first).collect();
        let rows = budget_vectors(&row_floor, g.a);
        if rows.is_empty() {
            continue;
        }
        let cols = budget_vectors(&col_floor, g.b);
        for rb in &rows {
            for cb in &cols {
                let s = ComposableSplit {
                    a: g.a,
                    b: g.b,
                    mu: mu.clone(),
                    nu: nu.clone(),
                    row_budgets: rb.clone(),
                    col_budgets: cb.clone(),
                };
                if seen.insert(s.clone()) {
                    out.push(s);
                    if out.len() >= cap {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// The composed problem on G(a+c, b+d).
pub fn compose(spec: &CompositionSpec) -> Result<SchubertProblem> {
    spec.check()?;
    let base = &spec.base;
    let f = &spec.fiber;
    let mut conds = Vec::new();
    for ((m, &ai), alpha) in base.mu.iter().zip(&base.row_budgets).zip(&f.alpha) {
        let top = Partition::rectangle(ai, f.d).part_sum(m);
        conds.push(top.sort_concat(alpha));
    }
    for ((n, &bj), beta) in base.nu.iter().zip(&base.col_budgets).zip(&f.beta) {
        let left = Partition::rectangle(f.c, bj).sort_concat(n);
        conds.push(left.part_sum(beta));
    }
    conds.extend(f.gamma.iter().cloned());
    let g = GrassmannianShape::new(base.a + f.c, base.b + f.d)?;
    let composed = SchubertProblem::new(g, conds);
    assert!(composed.is_ok(), "composition of a valid spec is a Schubert problem");
    composed
}

/// The three intersection numbers involved in the product formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductCheck {
    #[serde(with = "decimal")]
    pub delta_base: BigUint,
    #[serde(with = "decimal")]
    pub delta_fiber: BigUint,
    #[serde(with = "decimal")]
    pub delta_composed: BigUint,
    pub holds: bool,
}

pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(D::Error::custom(format!("not a decimal integer: {s:?}")));
        }
        BigUint::parse_bytes(s.as_bytes(), 10).ok_or_else(|| D::Error::custom("bad integer"))
    }
}

/// Computes `δ` of the base, the fiber and the composition.
pub fn verify_product(spec: &CompositionSpec) -> Result<ProductCheck> {
    let composed = compose(spec)?;
    let delta_base = delta(&spec.base.problem()?);
    let delta_fiber = delta(&spec.fiber.problem()?);
    let delta_composed = delta(&composed);
    let holds = delta_composed == &delta_base * &delta_fiber;
    Ok(ProductCheck {
        delta_base,
        delta_fiber,
        delta_composed,
        holds,
    })
}

/// The product of the rectangle-augmented base conditions in G(a+c, b+d).
pub fn big_hook_product(s: &ComposableSplit, c: u32, d: u32) -> Result<SchurExpansion> {
    let v = validate_split(s);
    if !v.is_empty() {
        return Err(Error::SpecInvalid(v));
    }
    if c == 0 || d == 0 {
        return Err(Error::SpecInvalid(vec![format!("G({c},{d}) needs positive dimensions")]));
    }
    let mut factors = Vec::new();
    for (m, &ai) in s.mu.iter().zip(&s.row_budgets) {
        factors.push(Partition::rectangle(ai, d).part_sum(m));
    }
    for (n, &bj) in s.nu.iter().zip(&s.col_budgets) {
        factors.push(Partition::rectangle(c, bj).sort_concat(n));
    }
    class_product(&factors, GrassmannianShape::new(s.a + c, s.b + d)?)
}

/// Two nonempty rectangles `□_{a1,b1}`, `□_{a2,b2}` in `mu` filling the
/// diagonal blocks, and full-height rectangles in `nu` filling the other two.
pub fn is_block_column(s: &ComposableSplit) -> bool {
    if !is_valid_split(s) || s.mu.len() != 2 {
        return false;
    }
    let (Some((a1, b1)), Some((a2, b2))) = (s.mu[0].as_rectangle(), s.mu[1].as_rectangle()) else {
        return false;
    };
    if a1 + a2 != s.a || b1 + b2 != s.b {
        return false;
    }
    let mut widths_under_1 = Vec::new(); // height a2, sum to b1
    let mut widths_under_2 = Vec::new(); // height a1, sum to b2
    let mut either = Vec::new();
    for n in &s.nu {
        let Some((h, w)) = n.as_rectangle() else {
            return false;
        };
        match (h == a2, h == a1) {
            (true, true) => either.push(w),
            (true, false) => widths_under_1.push(w),
            (false, true) => widths_under_2.push(w),
            (false, false) => return false,
        }
    }
    let fixed1: u32 = widths_under_1.iter().sum();
    let fixed2: u32 = widths_under_2.iter().sum();
    let free: u32 = either.iter().sum();
    if fixed1 + fixed2 + free != b1 + b2 || fixed1 > b1 {
        return false;
    }
    // Equal heights: some subset of the ambiguous widths must make up b1.
    let target = (b1 - fixed1) as usize;
    let mut reachable = vec![false; target + 1];
    reachable[0] = true;
    for &w in &either {
        for t in (w as usize..=target).rev() {
            reachable[t] |= reachable[t - w as usize];
        }
    }
    reachable[target]
}

/// Block column after conjugating every partition.
pub fn is_block_row(s: &ComposableSplit) -> bool {
    is_block_column(&s.conjugate())
}

/// The most specific class a problem belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProblemClass {
    BlockColumn,
    BlockRow,
    Composable,
    None,
}

impl ProblemClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ProblemClass::BlockColumn => "block-column",
            ProblemClass::BlockRow => "block-row",
            ProblemClass::Composable => "composable",
            ProblemClass::None => "none",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub class: ProblemClass,
    pub witness: Option<ComposableSplit>,
}

/// Classifies by searching up to `cap` splits.
pub fn classify(p: &SchubertProblem, cap: usize) -> Classification {
    let splits = find_composable_splits(p, cap);
    let pick = |class, pred: fn(&ComposableSplit) -> bool| {
        splits.iter().find(|s| pred(s)).map(|s| Classification {
            class,
            witness: Some(s.clone()),
        })
    };
    pick(ProblemClass::BlockColumn, is_block_column)
        .or_else(|| pick(ProblemClass::BlockRow, is_block_row))
        .unwrap_or_else(|| Classification {
            class: if splits.is_empty() {
                ProblemClass::None
            } else {
                ProblemClass::Composable
            },
            witness: splits.first().cloned(),
        })
}

/// A random Schubert problem on G(a,b), built by inserting random conditions
/// until the codimensions add up to `ab`. Conditions have weight between 1
/// and `max(a, b)`, so problems with several solutions are common.
pub fn random_problem<R: Rng + ?Sized>(rng: &mut R, g: GrassmannianShape) -> SchubertProblem {
    let by_weight = partitions_in_box(g.a, g.b);
    let mut left = g.dimension() as usize;
    let heaviest = g.a.max(g.b) as usize;
    let mut conds = Vec::new();
    while left > 0 {
        let w = rng.gen_range(1..=left.min(heaviest));
        let c = by_weight[w].choose(rng).expect("every weight up to ab occurs").clone();
        left -= w;
        conds.push(c);
    }
    conds.shuffle(rng);
    SchubertProblem::new(g, conds).expect("built to fit")
}

fn random_solvable<R: Rng + ?Sized>(rng: &mut R, g: GrassmannianShape, need_split: bool) -> (SchubertProblem, Vec<ComposableSplit>) {
    loop {
        let p = random_problem(rng, g);
        if delta(&p) == BigUint::default() {
            continue;
        }
        if !need_split {
            return (p, Vec::new());
        }
        let splits = find_composable_splits(&p, 256);
        if !splits.is_empty() {
            return (p, splits);
        }
    }
}

/// A random valid spec with `a + c <= max_rows`, `b + d <= max_cols`, where
/// both the base and the fiber have at least one solution.
pub fn random_spec<R: Rng + ?Sized>(rng: &mut R, max_rows: u32, max_cols: u32) -> CompositionSpec {
    assert!(
        max_rows >= 2 && max_cols >= 2 && max_rows + max_cols >= 5,
        "need room for base and fiber"
    );
    // G(1,1) has a single problem with a single condition, which never splits.
    let (a, b) = loop {
        let ab = (rng.gen_range(1..max_rows), rng.gen_range(1..max_cols));
        if ab != (1, 1) {
            break ab;
        }
    };
    let c = rng.gen_range(1..=max_rows - a);
    let d = rng.gen_range(1..=max_cols - b);
    let (_, splits) = random_solvable(rng, GrassmannianShape::new(a, b).expect("positive"), true);
    let base = splits.choose(rng).expect("nonempty").clone();
    let (fiber, _) = random_solvable(rng, GrassmannianShape::new(c, d).expect("positive"), false);

    let (r, s) = (base.mu.len(), base.nu.len());
    let mut alpha = vec![Partition::empty(); r];
    let mut beta = vec![Partition::empty(); s];
    let mut gamma = Vec::new();
    for cond in fiber.into_conditions() {
        let free: Vec<usize> = (0..r + s)
            .filter(|&k| if k < r { alpha[k].is_empty() } else { beta[k - r].is_empty() })
            .collect();
        // One slot in `free.len() + 1` sends the condition to gamma.
        match rng.gen_range(0..=free.len()) {
            k if k == free.len() => gamma.push(cond),
            k if free[k] < r => alpha[free[k]] = cond,
            k => beta[free[k] - r] = cond,
        }
    }
    CompositionSpec {
        base,
        fiber: FiberProblem {
            c,
            d,
            alpha,
            beta,
            gamma,
        },
    }
}
