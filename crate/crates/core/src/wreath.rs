//! The wreath product `S_q ≀ S_p` acting on `p·q` points in `p` blocks of
//! size `q`, and its cycle-type distribution.
//!
//! Point `(i, j)` (block `i`, position `j`, both zero-based) is labeled
//! `i·q + j`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest number of points enumerated by default.
pub const MAX_POINTS: u32 = 12;
/// Largest group order enumerated by default.
pub const MAX_ORDER: u64 = 10_000_000;

/// Cycle lengths of a permutation, as a partition of its degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.weight()
    }
}

/// Increasing parts with multiplicities as superscripts, e.g. `(1²,2,6)`.
impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = self.0.parts().to_vec();
        parts.reverse();
        let mut items = Vec::new();
        let mut i = 0;
        while i < parts.len() {
            let k = parts[i..].iter().take_while(|&&x| x == parts[i]).count();
            items.push(if k == 1 {
                parts[i].to_string()
            } else {
                format!("{}{}", parts[i], superscript(k))
            });
            i += k;
        }
        write!(f, "({})", items.join(","))
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

fn check_permutation(perm: &[u32], what: &str) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &x in perm {
        let x = x as usize;
        if x >= perm.len() || seen[x] {
            return Err(Error::InvalidPermutation(format!("{what} {perm:?} is not a permutation")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// An element `(bottoms; top)`: point `(i, j)` goes to `(top[i], bottoms[i][j])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WreathElement {
    top: Vec<u32>,
    bottoms: Vec<Vec<u32>>,
}

impl WreathElement {
    /// Permutations are zero-based image lists.
    pub fn new(top: Vec<u32>, bottoms: Vec<Vec<u32>>) -> Result<Self> {
        check_permutation(&top, "top")?;
        if bottoms.len() != top.len() {
            return Err(Error::InvalidPermutation(format!(
                "{} bottoms for {} blocks",
                bottoms.len(),
                top.len()
            )));
        }
        let q = bottoms.first().map_or(0, Vec::len);
        for b in &bottoms {
            if b.len() != q {
                return Err(Error::InvalidPermutation("bottoms of different sizes".into()));
            }
            check_permutation(b, "bottom")?;
        }
        Ok(WreathElement { top, bottoms })
    }

    pub fn identity(p: u32, q: u32) -> Self {
        WreathElement {
            top: (0..p).collect(),
            bottoms: vec![(0..q).collect(); p as usize],
        }
    }

    pub fn blocks(&self) -> usize {
        self.top.len()
    }

    pub fn block_size(&self) -> usize {
        self.bottoms.first().map_or(0, Vec::len)
    }

    /// The induced permutation of the `p·q` points.
    pub fn to_permutation(&self) -> Vec<u32> {
        let q = self.block_size() as u32;
        self.bottoms
            .iter()
            .zip(&self.top)
            .flat_map(|(b, &t)| b.iter().map(move |&j| t * q + j))
            .collect()
    }
}

/// `(q!)^p · p!`.
pub fn wreath_order(p: u32, q: u32) -> BigUint {
    factorial(q).pow(p) * factorial(p)
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Cycle lengths of a permutation given as an image list.
pub fn permutation_cycle_type(perm: &[u32]) -> CycleType {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    CycleType(Partition::new(lengths).expect("sorted positive lengths"))
}

pub fn cycle_type_of(e: &WreathElement) -> CycleType {
    permutation_cycle_type(&e.to_permutation())
}

/// Number of permutations of `n = |λ|` points with cycle type `λ`:
/// `n! / ∏ k^{m_k} m_k!`.
pub fn symmetric_class_size(lambda: &Partition) -> BigUint {
    let n = lambda.weight() as u32;
    let mut denom = BigUint::one();
    let parts = lambda.parts();
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let m = parts[i..].iter().take_while(|&&x| x == k).count() as u32;
        denom *= BigUint::from(k).pow(m) * factorial(m);
        i += m as usize;
    }
    factorial(n) / denom
}

/// Counts of each cycle type, sorted by type in reverse lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleTypeTable {
    pub p: u32,
    pub q: u32,
    pub rows: Vec<(CycleType, BigUint)>,
}

impl CycleTypeTable {
    pub fn total(&self) -> BigUint {
        self.rows.iter().map(|(_, c)| c).sum()
    }

    pub fn count(&self, t: &Partition) -> BigUint {
        self.rows
            .iter()
            .find(|(ct, _)| ct.partition() == t)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| Type | Count |\n|---|---:|\n");
        for (t, c) in &self.rows {
            out.push_str(&format!("| {t} | {c} |\n"));
        }
        out.push_str(&format!("| total | {} |\n", self.total()));
        out
    }
}

struct Row<'a>(&'a CycleType, &'a BigUint);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Row", 2)?;
        st.serialize_field("type", self.0)?;
        st.serialize_field("count", &self.1.to_str_radix(10))?;
        st.end()
    }
}

impl Serialize for CycleTypeTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.rows.iter().map(|(t, c)| Row(t, c)))
    }
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: u32) -> Vec<Vec<u8>> {
    let mut cur: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Multiplicity of cycle length `k` sits in bits `4(k-1)..4k`.
fn packed_cycle_type(perm: &[u8]) -> u64 {
    let mut seen = 0u32;
    let mut key = 0u64;
    for start in 0..perm.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while seen >> x & 1 == 0 {
            seen |= 1 << x;
            x = perm[x] as usize;
            len += 1;
        }
        key += 1 << (4 * (len - 1));
    }
    key
}

fn unpack(key: u64, n: u32) -> CycleType {
    let mut parts = Vec::new();
    for k in (1..=n).rev() {
        let m = (key >> (4 * (k - 1))) & 0xf;
        parts.extend(std::iter::repeat(k).take(m as usize));
    }
    CycleType(Partition::new(parts).expect("decreasing"))
}

fn count_for_top(top: &[u8], bottoms: &[Vec<u8>], q: usize) -> HashMap<u64, u64> {
    let p = top.len();
    let mut counts = HashMap::new();
    let mut idx = vec![0usize; p];
    let mut perm = vec![0u8; p * q];
    loop {
        for i in 0..p {
            let b = &bottoms[idx[i]];
            let base = top[i] as usize * q;
            for j in 0..q {
                perm[i * q + j] = (base + b[j] as usize) as u8;
            }
        }
        *counts.entry(packed_cycle_type(&perm)).or_insert(0) += 1;
        // odometer over bottom tuples
        let mut i = 0;
        loop {
            if i == p {
                return counts;
            }
            idx[i] += 1;
            if idx[i] < bottoms.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// Counts every element of `S_q ≀ S_p` by cycle type, refusing groups with
/// more than `max_points` points or more than `max_order` elements.
pub fn cycle_type_table_capped(p: u32, q: u32, max_points: u32, max_order: u64) -> Result<CycleTypeTable> {
    if p == 0 || q == 0 {
        return Err(Error::TooLarge(format!("p = {p}, q = {q} must be positive")));
    }
    let n = p.checked_mul(q).unwrap_or(u32::MAX);
    let order = wreath_order(p, q);
    if n > max_points.min(15) {
        return Err(Error::TooLarge(format!("{n} points exceeds the cap of {max_points}")));
    }
    if order > BigUint::from(max_order) {
        return Err(Error::TooLarge(format!("group order {order} exceeds the cap of {max_order}")));
    }
    let tops = permutations(p);
    let bottoms = permutations(q);
    let per_top = |top: &Vec<u8>| count_for_top(top, &bottoms, q as usize);
    let merge = |mut acc: HashMap<u64, u64>, m: HashMap<u64, u64>| {
        for (k, v) in m {
            *acc.entry(k).or_insert(0) += v;
        }
        acc
    };
    #[cfg(feature = "parallel")]
    let counts = {
        use rayon::prelude::*;
        tops.par_iter().map(per_top).reduce(HashMap::new, merge)
    };
    #[cfg(not(feature = "parallel"))]
    let counts = tops.iter().map(per_top).fold(HashMap::new(), merge);

    let mut rows: Vec<(CycleType, BigUint)> = counts
        .into_iter()
        .map(|(k, c)| (unpack(k, n), BigUint::from(c)))
        .collect();
    rows.sort_by(|x, y| y.0.cmp(&x.0));
    Ok(CycleTypeTable { p, q, rows })
}

/// [`cycle_type_table_capped`] with the default caps.
pub fn cycle_type_table(p: u32, q: u32) -> Result<CycleTypeTable> {
    cycle_type_table_capped(p, q, MAX_POINTS, MAX_ORDER)
}
