//! Cohomology of the Grassmannian G(a,b) as a quotient of the ring of
//! symmetric functions, and intersection numbers of Schubert problems.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::product::{multiply_by, Limit};
use crate::lr::SchurExpansion;
use crate::partition::Partition;

/// The Grassmannian of `a`-planes in a space of dimension `a + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawShape")]
pub struct GrassmannianShape {
    pub a: u32,
    pub b: u32,
}

#[derive(Deserialize)]
struct RawShape {
    a: u32,
    b: u32,
}

impl TryFrom<RawShape> for GrassmannianShape {
    type Error = Error;
    fn try_from(raw: RawShape) -> Result<Self> {
        GrassmannianShape::new(raw.a, raw.b)
    }
}

impl GrassmannianShape {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidGrassmannian { a, b });
        }
        Ok(GrassmannianShape { a, b })
    }

    pub fn dimension(&self) -> u64 {
        u64::from(self.a) * u64::from(self.b)
    }

    /// The class of a point, `□_{a,b}`.
    pub fn point(&self) -> Partition {
        Partition::rectangle(self.a, self.b)
    }

    pub fn contains(&self, p: &Partition) -> bool {
        p.fits_in_box(self.a, self.b)
    }

    pub fn complement(&self, p: &Partition) -> Result<Partition> {
        p.box_complement(self.a, self.b)
    }

    pub fn transposed(&self) -> GrassmannianShape {
        GrassmannianShape { a: self.b, b: self.a }
    }

    fn limit(&self) -> Limit<'static> {
        Limit::Box {
            rows: self.a,
            cols: self.b,
        }
    }

    fn check_condition(&self, p: &Partition) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::ConditionNotInBox {
                partition: p.clone(),
                rows: self.a,
                cols: self.b,
            })
        }
    }

    fn check_in_box(&self, p: &Partition) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotInBox {
                partition: p.clone(),
                rows: self.a,
                cols: self.b,
            })
        }
    }
}

/// A list of Schubert conditions whose codimensions add up to `ab`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawProblem", into = "RawProblem")]
pub struct SchubertProblem {
    ambient: GrassmannianShape,
    conditions: Vec<Partition>,
}

#[derive(Serialize, Deserialize)]
struct RawProblem {
    a: u32,
    b: u32,
    conditions: Vec<Partition>,
}

impl TryFrom<RawProblem> for SchubertProblem {
    type Error = Error;
    fn try_from(raw: RawProblem) -> Result<Self> {
        SchubertProblem::new(GrassmannianShape::new(raw.a, raw.b)?, raw.conditions)
    }
}

impl From<SchubertProblem> for RawProblem {
    fn from(p: SchubertProblem) -> Self {
        RawProblem {
            a: p.ambient.a,
            b: p.ambient.b,
            conditions: p.conditions,
        }
    }
}

impl SchubertProblem {
    pub fn new(ambient: GrassmannianShape, conditions: Vec<Partition>) -> Result<Self> {
        for c in &conditions {
            ambient.check_condition(c)?;
        }
        let sum: u64 = conditions.iter().map(Partition::weight).sum();
        if sum != ambient.dimension() {
            return Err(Error::NotASchubertProblem {
                sum,
                expected: ambient.dimension(),
            });
        }
        Ok(SchubertProblem { ambient, conditions })
    }

    pub fn ambient(&self) -> GrassmannianShape {
        self.ambient
    }

    pub fn conditions(&self) -> &[Partition] {
        &self.conditions
    }

    pub fn into_conditions(self) -> Vec<Partition> {
        self.conditions
    }
}

/// Drops every term whose partition does not fit in `□_{a,b}`.
pub fn truncate(x: &SchurExpansion, g: GrassmannianShape) -> SchurExpansion {
    x.filtered(|p| g.contains(p))
}

/// Product of Schubert classes in `H*(G(a,b))`, truncating after every factor.
pub fn class_product(factors: &[Partition], g: GrassmannianShape) -> Result<SchurExpansion> {
    for f in factors {
        g.check_condition(f)?;
    }
    let mut acc = SchurExpansion::one();
    for f in factors {
        acc = multiply_by(&acc, f, g.limit());
        if acc.is_empty() {
            break;
        }
    }
    Ok(acc)
}

/// The number of solutions `δ` of a Schubert problem.
///
/// Multiplies all conditions but the last, then reads off the coefficient of
/// the complement of the last one.
pub fn delta(p: &SchubertProblem) -> BigUint {
    let g = p.ambient;
    let Some((last, rest)) = p.conditions.split_last() else {
        unreachable!("a valid problem on a positive-dimensional Grassmannian has a condition")
    };
    let partial = class_product(rest, g).expect("conditions validated");
    let dual = g.complement(last).expect("conditions validated");
    partial.coefficient(&dual)
}

/// Like [`delta`] but for an unvalidated list of conditions.
pub fn delta_of(conditions: &[Partition], g: GrassmannianShape) -> Result<BigUint> {
    Ok(delta(&SchubertProblem::new(g, conditions.to_vec())?))
}

/// A problem with at most one solution.
pub fn is_trivial(p: &SchubertProblem) -> bool {
    delta(p) <= BigUint::from(1u32)
}

/// Whether `σ_λ · σ_μ` is nonzero in `H*(G(a,b))`.
pub fn duality_nonzero(lambda: &Partition, mu: &Partition, g: GrassmannianShape) -> Result<bool> {
    g.check_in_box(lambda)?;
    g.check_in_box(mu)?;
    Ok(g.complement(lambda)?.contains(mu))
}

/// The coefficient of `σ_λ` in `x`, read off as the coefficient of the point
/// class in `x · σ_{λ^∨}`.
pub fn pairing_coefficient(x: &SchurExpansion, lambda: &Partition, g: GrassmannianShape) -> Result<BigUint> {
    g.check_in_box(lambda)?;
    let dual = g.complement(lambda)?;
    let point = g.point();
    let weight = point.weight() - dual.weight();
    let graded: SchurExpansion = truncate(x, g)
        .iter()
        .filter(|(k, _)| k.weight() == weight)
        .map(|(k, c)| (k.clone(), c.clone()))
        .collect();
    if graded.is_empty() {
        return Ok(BigUint::zero());
    }
    Ok(multiply_by(&graded, &dual, g.limit()).coefficient(&point))
}

/// The same problem on `G(b,a)` with every condition conjugated.
pub fn conjugate_problem(p: &SchubertProblem) -> SchubertProblem {
    SchubertProblem {
        ambient: p.ambient.transposed(),
        conditions: p.conditions.iter().map(Partition::conjugate).collect(),
    }
}
