use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::{Partition, SkewShape};

/// A Littlewood-Richardson filling of a skew shape.
///
/// `rows[r]` holds the entries of row `r` of the skew shape, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LRTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl LRTableau {
    /// Wraps a filling after checking it is an LR tableau of the given shape.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> std::result::Result<Self, String> {
        let t = LRTableau { shape, rows };
        t.check()?;
        Ok(t)
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, rows: Vec<Vec<u32>>) -> Self {
        let t = LRTableau { shape, rows };
        debug_assert_eq!(t.check(), Ok(()));
        t
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entries read right to left along each row, rows top to bottom.
    pub fn word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    /// Content as a partition; `None` if the multiplicities are not a partition.
    pub fn content(&self) -> Option<Partition> {
        Partition::new(content_counts(&self.word())).ok()
    }

    /// Verifies shape, semistandardness and the lattice-word condition.
    pub fn check(&self) -> std::result::Result<(), String> {
        let outer = self.shape.outer();
        let inner = self.shape.inner();
        let height = outer.len();
        if self.rows.len() > height && self.rows[height..].iter().any(|r| !r.is_empty()) {
            return Err("filling has rows outside the shape".into());
        }
        for r in 0..height {
            let row = self.rows.get(r).map(Vec::as_slice).unwrap_or(&[]);
            if row.len() != self.shape.row_len(r) {
                return Err(format!(
                    "row {} has {} entries, shape needs {}",
                    r + 1,
                    row.len(),
                    self.shape.row_len(r)
                ));
            }
            if row.iter().any(|&v| v == 0) {
                return Err("entries must be positive".into());
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(format!("row {} is not weakly increasing", r + 1));
            }
            if r > 0 {
                for (k, &v) in row.iter().enumerate() {
                    let col = inner.part(r) as usize + k;
                    if let Some(above) = self.entry(r - 1, col) {
                        if above >= v {
                            return Err(format!("column {} is not strictly increasing", col + 1));
                        }
                    }
                }
            }
        }
        let mut counts: Vec<u32> = Vec::new();
        for v in self.word() {
            let v = v as usize;
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
            if v > 1 && counts[v - 1] > counts[v - 2] {
                return Err("reading word is not a lattice word".into());
            }
        }
        Ok(())
    }

    /// Entry at (row, column), zero-based, if that cell is in the skew shape.
    pub fn entry(&self, r: usize, col: usize) -> Option<u32> {
        let start = self.shape.inner().part(r) as usize;
        if col < start {
            return None;
        }
        self.rows.get(r)?.get(col - start).copied()
    }
}

pub(crate) fn content_counts(word: &[u32]) -> Vec<u32> {
    let mut counts: Vec<u32> = Vec::new();
    for &v in word {
        let v = v as usize;
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
    }
    counts
}

/// Cell-by-cell search over a fixed skew shape in reading order.
struct ReadingOrderSearch<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    content: &'a [u32],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<u32>>,
    counts: Vec<u32>,
}

impl<'a> ReadingOrderSearch<'a> {
    fn new(shape: &'a SkewShape, content: &'a Partition) -> Self {
        let outer = shape.outer();
        let inner = shape.inner();
        let mut cells = Vec::new();
        for r in 0..outer.len() {
            for c in (inner.part(r) as usize..outer.part(r) as usize).rev() {
                cells.push((r, c));
            }
        }
        let grid = (0..outer.len())
            .map(|r| vec![0; outer.part(r) as usize])
            .collect();
        ReadingOrderSearch {
            outer,
            inner,
            content: content.parts(),
            cells,
            grid,
            counts: vec![0; content.len()],
        }
    }

    fn run(&mut self, idx: usize, visit: &mut dyn FnMut(&[Vec<u32>])) {
        if idx == self.cells.len() {
            visit(&self.grid);
            return;
        }
        let (r, c) = self.cells[idx];
        let mut hi = (self.content.len() as u32).min(r as u32 + 1);
        if c + 1 < self.outer.part(r) as usize {
            hi = hi.min(self.grid[r][c + 1]);
        }
        let mut lo = 1;
        if r > 0 && c >= self.inner.part(r - 1) as usize {
            lo = self.grid[r - 1][c] + 1;
        }
        for v in lo..=hi {
            let k = v as usize - 1;
            if self.counts[k] >= self.content[k] {
                continue;
            }
            if k > 0 && self.counts[k] + 1 > self.counts[k - 1] {
                continue;
            }
            self.counts[k] += 1;
            self.grid[r][c] = v;
            self.run(idx + 1, visit);
            self.counts[k] -= 1;
        }
        self.grid[r][c] = 0;
    }
}

fn admissible(shape: &SkewShape, content: &Partition) -> bool {
    shape.size() == content.weight()
}

/// All LR tableaux of `shape` with the given content, ordered lexicographically
/// by reading word.
pub fn enumerate_lr_tableaux(shape: &SkewShape, content: &Partition) -> Vec<LRTableau> {
    let mut out = Vec::new();
    if !admissible(shape, content) {
        return out;
    }
    let mut search = ReadingOrderSearch::new(shape, content);
    let inner = shape.inner().clone();
    search.run(0, &mut |grid| {
        let rows = grid
            .iter()
            .enumerate()
            .map(|(r, row)| row[inner.part(r) as usize..].to_vec())
            .collect();
        out.push(LRTableau::from_parts_unchecked(shape.clone(), rows));
    });
    out
}

/// Same as [`enumerate_lr_tableaux`] but takes the two partitions directly.
pub fn lr_tableaux(outer: &Partition, inner: &Partition, content: &Partition) -> Result<Vec<LRTableau>> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    Ok(enumerate_lr_tableaux(&shape, content))
}

/// Counts LR tableaux of `shape` and `content` without materializing them.
pub(crate) fn count_lr_tableaux(shape: &SkewShape, content: &Partition) -> u64 {
    if !admissible(shape, content) {
        return 0;
    }
    let mut n = 0u64;
    ReadingOrderSearch::new(shape, content).run(0, &mut |_| n += 1);
    n
}

/// The Littlewood-Richardson coefficient `c^λ_{μ,ν}`: the number of LR
/// tableaux of shape `λ/ν` with content `μ`.
pub fn lr_coef(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) || !lambda.contains(nu) {
        return BigUint::default();
    }
    let shape = SkewShape::new(lambda.clone(), nu.clone()).expect("containment checked");
    BigUint::from(count_lr_tableaux(&shape, mu))
}
