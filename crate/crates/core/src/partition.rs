//! Integer partitions, rectangles and skew shapes.
//!
//! A [`Partition`] stores only its positive parts, so equality is structural.
//! Part access past the stored length reads as zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest part accepted at construction.
pub const MAX_PART: u32 = i32::MAX as u32;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for (i, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must be weakly decreasing, found {} before {} at position {}",
                    w[0],
                    w[1],
                    i + 1
                )));
            }
        }
        if let Some(&p) = parts.iter().find(|&&p| p == 0 || p > MAX_PART) {
            return Err(Error::InvalidPartition(format!("part {p} out of range")));
        }
        Ok(Partition(parts))
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The rectangle with `rows` parts equal to `cols`.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        Rectangle::new(rows, cols).to_partition()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Part `i` (zero-based), zero past the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// First part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.0 {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(out)
    }

    /// Young's lattice order: every part of `inner` is at most the matching part of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(i, o)| i <= o)
    }

    /// Whether `self` dominates `lambda`; both must have the same weight.
    pub fn dominates(&self, lambda: &Partition) -> Result<bool> {
        if self.weight() != lambda.weight() {
            return Err(Error::WeightMismatch {
                left: self.weight(),
                right: lambda.weight(),
            });
        }
        let n = self.len().max(lambda.len());
        let (mut s, mut l) = (0u64, 0u64);
        for k in 0..n {
            s += u64::from(self.part(k));
            l += u64::from(lambda.part(k));
            if l > s {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Decreasing rearrangement of the parts of both partitions.
    pub fn sort_concat(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j >= other.len() || (i < self.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Componentwise sum.
    pub fn part_sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((0..n).map(|k| self.part(k) + other.part(k)).collect())
    }

    pub fn fits_in_box(&self, rows: u32, cols: u32) -> bool {
        self.len() <= rows as usize && self.first() <= cols
    }

    /// Complement inside the `rows` x `cols` box, read rotated by 180 degrees.
    pub fn box_complement(&self, rows: u32, cols: u32) -> Result<Partition> {
        if !self.fits_in_box(rows, cols) {
            return Err(Error::NotInBox {
                partition: self.clone(),
                rows,
                cols,
            });
        }
        let a = rows as usize;
        let parts = (0..a).map(|i| cols - self.part(a - 1 - i)).collect();
        Ok(Partition::new(parts).expect("complement of a partition is a partition"))
    }

    /// Sum of the first `k` parts.
    pub fn prefix_weight(&self, k: usize) -> u64 {
        self.0.iter().take(k).map(|&p| u64::from(p)).sum()
    }

    /// `Some((rows, cols))` when this is a nonempty rectangle.
    pub fn as_rectangle(&self) -> Option<(u32, u32)> {
        let first = *self.0.first()?;
        self.0
            .iter()
            .all(|&p| p == first)
            .then_some((self.len() as u32, first))
    }

    /// The first `k` parts.
    pub fn head(&self, k: usize) -> Partition {
        Partition(self.0.iter().take(k).copied().collect())
    }

    /// The parts after the first `k`.
    pub fn tail(&self, k: usize) -> Partition {
        Partition(self.0.iter().skip(k).copied().collect())
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        let parts = parts
            .into_iter()
            .map(|p| {
                u32::try_from(p)
                    .ok()
                    .filter(|&p| p <= MAX_PART)
                    .ok_or_else(|| Error::InvalidPartition(format!("part {p} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Parses `[p1,p2,...]` or `box(a,d)`. Whitespace is rejected.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser::new(s);
        let p = parser.partition()?;
        parser.finish()?;
        Ok(p)
    }
}

/// Parses a bracketed list of partitions such as `[[2,1],[1],box(2,2)]`.
pub fn parse_partition_list(s: &str) -> Result<Vec<Partition>> {
    let mut parser = Parser::new(s);
    parser.expect(b'[')?;
    let mut out = Vec::new();
    if parser.peek() == Some(b']') {
        parser.bump();
    } else {
        loop {
            out.push(parser.partition()?);
            match parser.bump() {
                Some(b',') => continue,
                Some(b']') => break,
                _ => return Err(parser.error("expected ',' or ']'")),
            }
        }
    }
    parser.finish()?;
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error(&self, what: &str) -> Error {
        Error::InvalidPartition(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.src[start..self.pos]
            .parse::<u64>()
            .map_err(|_| self.error("number out of range"))
    }

    fn partition(&mut self) -> Result<Partition> {
        if self.src[self.pos..].starts_with("box(") {
            self.pos += 4;
            let rows = self.number()?;
            self.expect(b',')?;
            let cols = self.number()?;
            self.expect(b')')?;
            let rows = u32::try_from(rows).map_err(|_| self.error("rows out of range"))?;
            let cols = u32::try_from(cols)
                .ok()
                .filter(|&c| c <= MAX_PART)
                .ok_or_else(|| self.error("columns out of range"))?;
            return Ok(Partition::rectangle(rows, cols));
        }
        self.expect(b'[')?;
        let mut parts = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
        } else {
            loop {
                let n = self.number()?;
                if n == 0 {
                    return Err(self.error("parts must be positive"));
                }
                parts.push(n);
                match self.bump() {
                    Some(b',') => continue,
                    Some(b']') => break,
                    _ => {
                        self.pos -= 1;
                        return Err(self.error("expected ',' or ']'"));
                    }
                }
            }
        }
        Partition::try_from(parts)
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.error("trailing input"))
        }
    }
}

/// The `rows` x `cols` rectangular partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rectangle {
    pub rows: u32,
    pub cols: u32,
}

impl Rectangle {
    pub fn new(rows: u32, cols: u32) -> Self {
        Rectangle { rows, cols }
    }

    pub fn to_partition(self) -> Partition {
        if self.rows == 0 || self.cols == 0 {
            Partition::empty()
        } else {
            Partition(vec![self.cols; self.rows as usize])
        }
    }

    pub fn area(self) -> u64 {
        u64::from(self.rows) * u64::from(self.cols)
    }
}

impl From<Rectangle> for Partition {
    fn from(r: Rectangle) -> Self {
        r.to_partition()
    }
}

/// A skew shape `outer / inner` with `inner` contained in `outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkew { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u64 {
        self.outer.weight() - self.inner.weight()
    }

    /// Number of cells in row `r` (zero-based).
    pub fn row_len(&self, r: usize) -> usize {
        (self.outer.part(r) - self.inner.part(r)) as usize
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// All partitions of `n` with parts at most `max_part` and at most `max_len` parts,
/// in decreasing lexicographic order.
pub fn partitions_of(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn go(rem: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=rem.min(max_part)).rev() {
            cur.push(p);
            go(rem - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions inside the `rows` x `cols` box, grouped by weight.
pub fn partitions_in_box(rows: u32, cols: u32) -> Vec<Vec<Partition>> {
    (0..=rows * cols)
        .map(|n| partitions_of(n, cols, rows as usize))
        .collect()
}
