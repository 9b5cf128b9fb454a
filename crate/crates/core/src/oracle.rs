//! Independent check on LR coefficients through polynomial arithmetic.
//!
//! Schur polynomials in a fixed number of variables come from the Jacobi-Trudi
//! determinant in complete homogeneous (or, for wide shapes, elementary)
//! symmetric polynomials. Products are expanded densely and decomposed back
//! into Schur polynomials by repeatedly removing the lexicographically leading
//! monomial. Nothing here touches tableaux.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lr::SchurExpansion;
use crate::partition::{partitions_of, Partition};

type Exponent = Vec<u8>;

/// A polynomial with integer coefficients, keyed by exponent vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Poly {
    terms: HashMap<Exponent, BigInt>,
}

impl Poly {
    fn constant(n: usize, c: i64) -> Poly {
        let mut p = Poly::default();
        if c != 0 {
            p.terms.insert(vec![0; n], BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        use std::collections::hash_map::Entry;
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
        }
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    fn scaled_sub(&mut self, other: &Poly, k: &BigInt) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), -(c * k));
        }
    }

    fn negated(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &[u8]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    fn leading(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0))
    }
}

/// Memoizing factory for symmetric polynomials in `n` variables.
pub struct Oracle {
    n: usize,
    complete: Vec<Poly>,
    elementary: Vec<Poly>,
    schur: HashMap<Partition, Poly>,
}

impl Oracle {
    pub fn new(num_vars: usize) -> Self {
        Oracle {
            n: num_vars,
            complete: vec![Poly::constant(num_vars, 1)],
            elementary: vec![Poly::constant(num_vars, 1)],
            schur: HashMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// `h_k`: sum of all monomials of degree `k`.
    fn complete(&mut self, k: usize) -> &Poly {
        while self.complete.len() <= k {
            let deg = self.complete.len();
            let mut p = Poly::default();
            for e in exponents(self.n, deg, deg as u8) {
                p.add_term(e, BigInt::one());
            }
            self.complete.push(p);
        }
        &self.complete[k]
    }

    /// `e_k`: sum of all squarefree monomials of degree `k`.
    fn elementary(&mut self, k: usize) -> &Poly {
        while self.elementary.len() <= k {
            let deg = self.elementary.len();
            let mut p = Poly::default();
            for e in exponents(self.n, deg, 1) {
                p.add_term(e, BigInt::one());
            }
            self.elementary.push(p);
        }
        &self.elementary[k]
    }

    /// The Schur polynomial `s_λ(x_1, …, x_n)`.
    pub fn schur(&mut self, lambda: &Partition) -> Result<Poly> {
        if lambda.len() > self.n {
            return Err(Error::TooFewVariables {
                num_vars: self.n,
                needed: lambda.len(),
            });
        }
        if let Some(p) = self.schur.get(lambda) {
            return Ok(p.clone());
        }
        // det[h_{λ_i - i + j}] or, with the conjugate, det[e_{λ'_i - i + j}].
        let conj = lambda.conjugate();
        let (rows, dual) = if conj.len() < lambda.len() {
            (conj.parts().to_vec(), true)
        } else {
            (lambda.parts().to_vec(), false)
        };
        let m = rows.len();
        let mut matrix: Vec<Vec<Option<Poly>>> = Vec::with_capacity(m);
        for (i, &part) in rows.iter().enumerate() {
            let mut row = Vec::with_capacity(m);
            for j in 0..m {
                let idx = part as i64 - i as i64 + j as i64;
                row.push(if idx < 0 {
                    None
                } else if dual {
                    Some(self.elementary(idx as usize).clone())
                } else {
                    Some(self.complete(idx as usize).clone())
                });
            }
            matrix.push(row);
        }
        let cols: Vec<usize> = (0..m).collect();
        let det = determinant(&matrix, 0, &cols, self.n);
        self.schur.insert(lambda.clone(), det.clone());
        Ok(det)
    }

    /// Decomposes a symmetric polynomial into Schur polynomials.
    pub fn decompose(&mut self, poly: &Poly) -> Result<SchurExpansion> {
        self.peel(poly, None)
    }

    /// Peels leading terms until everything lexicographically at or above
    /// `stop` is accounted for (or the polynomial is exhausted).
    fn peel(&mut self, poly: &Poly, stop: Option<&[u8]>) -> Result<SchurExpansion> {
        let mut rest = poly.clone();
        let mut out = SchurExpansion::new();
        while let Some((e, c)) = rest.leading() {
            if let Some(stop) = stop {
                if e.as_slice() < stop {
                    break;
                }
            }
            let (e, c) = (e.clone(), c.clone());
            let lambda = Partition::new(e.iter().map(|&x| u32::from(x)).collect())
                .expect("leading monomial of a symmetric polynomial is a partition");
            if c.sign() == Sign::Minus {
                return Err(Error::InvalidPartition(format!(
                    "negative Schur coefficient {c} at {lambda}"
                )));
            }
            let s = self.schur(&lambda)?;
            rest.scaled_sub(&s, &c);
            out.add_term(lambda, c.abs().to_biguint().expect("positive"));
        }
        Ok(out)
    }

    /// `∏ s_{factors[i]}` as a polynomial.
    pub fn product(&mut self, factors: &[Partition]) -> Result<Poly> {
        let mut acc = Poly::constant(self.n, 1);
        for f in factors {
            let s = self.schur(f)?;
            acc = acc.mul(&s);
        }
        Ok(acc)
    }

    /// Coefficient of `s_λ` in the product of the factors.
    pub fn coefficient(&mut self, lambda: &Partition, factors: &[Partition]) -> Result<BigUint> {
        let needed = factors.iter().map(Partition::len).chain([lambda.len()]).max().unwrap_or(0);
        if needed > self.n {
            return Err(Error::TooFewVariables {
                num_vars: self.n,
                needed,
            });
        }
        if factors.iter().map(Partition::weight).sum::<u64>() != lambda.weight() {
            return Ok(BigUint::zero());
        }
        let product = self.product(factors)?;
        let stop = self.exponent_of(lambda);
        Ok(self.peel(&product, Some(&stop))?.coefficient(lambda))
    }

    fn exponent_of(&self, lambda: &Partition) -> Exponent {
        (0..self.n).map(|i| lambda.part(i) as u8).collect()
    }
}

/// Laplace expansion along row `row` over the remaining columns.
fn determinant(m: &[Vec<Option<Poly>>], row: usize, cols: &[usize], n: usize) -> Poly {
    if row == m.len() {
        return Poly::constant(n, 1);
    }
    let mut acc = Poly::default();
    for (k, &c) in cols.iter().enumerate() {
        let Some(entry) = &m[row][c] else { continue };
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = determinant(m, row + 1, &rest, n);
        if minor.is_zero() {
            continue;
        }
        let term = entry.mul(&minor);
        let term = if k % 2 == 1 { term.negated() } else { term };
        for (e, v) in term.terms {
            acc.add_term(e, v);
        }
    }
    acc
}

/// Exponent vectors of length `n`, total degree `deg`, entries at most `cap`.
fn exponents(n: usize, deg: usize, cap: u8) -> Vec<Exponent> {
    fn go(i: usize, left: usize, cap: u8, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if i == cur.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=left.min(cap as usize) {
            cur[i] = v as u8;
            go(i + 1, left - v, cap, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, deg, cap, &mut vec![0; n], &mut out);
    out
}

/// Coefficient of `S_λ` in `∏ S_{factors[i]}`, computed in `num_vars`
/// variables by Jacobi-Trudi determinants and leading-term decomposition.
pub fn oracle_lr_coef(lambda: &Partition, factors: &[Partition], num_vars: usize) -> Result<BigUint> {
    Oracle::new(num_vars).coefficient(lambda, factors)
}

/// Expands a product completely. Uses as many variables as the total weight,
/// so no Schur function is lost.
pub fn oracle_product(factors: &[Partition]) -> SchurExpansion {
    let n = factors.iter().map(Partition::weight).sum::<u64>().max(1) as usize;
    let mut oracle = Oracle::new(n);
    let product = oracle.product(factors).expect("enough variables");
    oracle.decompose(&product).expect("products of Schur polynomials are Schur positive")
}

/// Outcome of an exhaustive comparison between the tableau count and the oracle.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub checked: u64,
    pub mismatches: Vec<(Partition, Partition, Partition)>,
}

/// Compares `lr_coef(λ, μ, ν)` with the oracle for every triple with
/// `|λ| = |μ| + |ν| ≤ max_weight`.
pub fn exhaustive_check(max_weight: u32) -> OracleReport {
    let mut report = OracleReport::default();
    let by_weight: Vec<Vec<Partition>> = (0..=max_weight)
        .map(|n| partitions_of(n, n, n as usize))
        .collect();
    let mut oracles: HashMap<usize, Oracle> = HashMap::new();
    for n in 0..=max_weight as usize {
        for k in 0..=n {
            for mu in &by_weight[k] {
                for nu in &by_weight[n - k] {
                    // One decomposition per (μ, ν) and variable count serves every λ.
                    let mut cache: HashMap<usize, SchurExpansion> = HashMap::new();
                    for lambda in &by_weight[n] {
                        let vars = lambda.len().max(mu.len()).max(nu.len()).max(1);
                        let expected = cache.entry(vars).or_insert_with(|| {
                            let oracle = oracles.entry(vars).or_insert_with(|| Oracle::new(vars));
                            let prod = oracle.product(&[mu.clone(), nu.clone()]).expect("vars suffice");
                            oracle.decompose(&prod).expect("Schur positive")
                        });
                        let got = crate::lr::lr_coef(lambda, mu, nu);
                        report.checked += 1;
                        if got != expected.coefficient(lambda) {
                            report.mismatches.push((lambda.clone(), mu.clone(), nu.clone()));
                        }
                    }
                }
            }
        }
    }
    report
}
