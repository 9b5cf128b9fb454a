use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;

/// A finite nonnegative integer combination of Schur functions.
///
/// Zero coefficients are never stored. Iteration runs in reverse
/// lexicographic order of the indexing partitions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigUint>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// `S_∅ = 1`.
    pub fn one() -> Self {
        Self::single(Partition::empty(), BigUint::from(1u32))
    }

    pub fn single(p: Partition, coeff: BigUint) -> Self {
        let mut x = Self::new();
        x.add_term(p, coeff);
        x
    }

    pub fn add_term(&mut self, p: Partition, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.terms.entry(p).or_default() += coeff;
    }

    pub fn add_assign(&mut self, other: &SchurExpansion) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone());
        }
    }

    pub fn coefficient(&self, p: &Partition) -> BigUint {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (reverse lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.terms.iter().rev()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys().rev()
    }

    /// Keeps only the terms whose partition satisfies `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(&Partition) -> bool) -> SchurExpansion {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> BigUint {
        self.terms.values().sum()
    }
}

impl FromIterator<(Partition, BigUint)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, BigUint)>>(iter: I) -> Self {
        let mut x = SchurExpansion::new();
        for (p, c) in iter {
            x.add_term(p, c);
        }
        x
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpansionRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ExpansionRepr {
            terms: self
                .iter()
                .map(|(p, c)| TermRepr {
                    partition: p.clone(),
                    coeff: c.to_str_radix(10),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ExpansionRepr::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for t in repr.terms {
            let coeff = BigUint::parse_bytes(t.coeff.as_bytes(), 10)
                .filter(|_| t.coeff.bytes().all(|b| b.is_ascii_digit()))
                .ok_or_else(|| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            if coeff.is_zero() {
                return Err(D::Error::custom("zero coefficients are not stored"));
            }
            if terms.insert(t.partition.clone(), coeff).is_some() {
                return Err(D::Error::custom(format!("duplicate key {}", t.partition)));
            }
        }
        Ok(SchurExpansion { terms })
    }
}
