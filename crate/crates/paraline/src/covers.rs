//! From two-generator cover data to degree bounds.
//!
//! A cover of the line punctured at `{0, 1, inf}` with group `G` is pinned
//! down by the monodromy matrices of the loops at 0 and 1; the loop at
//! infinity is forced, as the inverse of their product. [`spec_from_matrices`]
//! extracts the combinatorial shadow needed here: the orders `m`, `c`,
//! `r_inf` of the three local monodromies and the multisets of stabilizer
//! weights of the representation at each puncture, recovered exactly from
//! trace sequences via [`crate::exact::weight_multiplicities`].
//!
//! From a [`CoverSpec`], [`t_values`] evaluates the cyclic-cover degrees
//! `s_j` at the weights over 1, [`a_values`] the two delooping constants,
//! and [`bound_u`] the resulting upper bounds on the degrees of the
//! pushed-forward invariant summands: `u_j <= (t_j - a0 - a_inf) / m`,
//! floored because the degrees are integers.
//!
//! [`can_inject`] decides sorted domination of two degree multisets (the
//! condition for one direct sum of line bundles to inject into another);
//! [`max_bipartite_matching`] is an independent matching-based reference
//! for it.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::cyclic::CyclicCover;
use crate::exact::{weight_multiplicities, CycElem, Rational};
use crate::{Error, Result};

/// How many powers to try before giving up on finding a finite
/// multiplicative order.
pub const ORDER_CAP: u64 = 10_000;

/// The combinatorial data of a two-generator cover: local monodromy orders
/// at 0, 1, infinity and the stabilizer weight multiset of the
/// representation at each (weights sorted ascending; one entry per
/// dimension).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSpec {
    pub m: u64,
    pub c: u64,
    pub r_inf: u64,
    pub weights0: Vec<u64>,
    pub weights1: Vec<u64>,
    pub weights_inf: Vec<u64>,
}

impl CoverSpec {
    pub fn new(
        m: u64,
        c: u64,
        r_inf: u64,
        weights0: Vec<u64>,
        weights1: Vec<u64>,
        weights_inf: Vec<u64>,
    ) -> Result<Self> {
        let spec = CoverSpec { m, c, r_inf, weights0, weights1, weights_inf };
        spec.into_checked()
    }

    /// Validates and canonicalizes (sorts the weight multisets).
    pub fn into_checked(mut self) -> Result<Self> {
        if self.m == 0 || self.c == 0 || self.r_inf == 0 {
            return Err(Error::InvalidInput("orders must be positive".into()));
        }
        let dim = self.weights0.len();
        if dim == 0 {
            return Err(Error::InvalidInput("weight multisets must be nonempty".into()));
        }
        if self.weights1.len() != dim || self.weights_inf.len() != dim {
            return Err(Error::InvalidInput(format!(
                "weight multisets have sizes {}, {}, {}; expected equal",
                dim,
                self.weights1.len(),
                self.weights_inf.len()
            )));
        }
        for (name, weights, order) in [
            ("weights0", &self.weights0, self.m),
            ("weights1", &self.weights1, self.c),
            ("weights_inf", &self.weights_inf, self.r_inf),
        ] {
            if let Some(w) = weights.iter().find(|w| **w >= order) {
                return Err(Error::InvalidInput(format!(
                    "{name} entry {w} out of [0, {order})"
                )));
            }
        }
        self.weights0.sort_unstable();
        self.weights1.sort_unstable();
        self.weights_inf.sort_unstable();
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.weights0.len()
    }
}

/// The degree report: cyclic degrees `t`, delooping constants, and the
/// upper bounds, both as exact rationals and as integer floors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub t: Vec<i64>,
    pub a0: u64,
    pub a_inf: u64,
    pub u_bounds_exact: Vec<Rational>,
    pub u_bounds: Vec<i64>,
}

/// The cyclic degrees `s_j(m, c)` at the weights over 1, ascending.
pub fn t_values(spec: &CoverSpec) -> Result<Vec<i64>> {
    let cover = CyclicCover::new(spec.m, spec.c)?;
    let mut t: Vec<i64> = spec
        .weights1
        .iter()
        .map(|&j| cover.s_j(j))
        .collect::<Result<_>>()?;
    t.sort_unstable();
    Ok(t)
}

/// The delooping constants: `a0` is the least stabilizer weight at 0 (the
/// pullback along `z -> z^m` turns weight `w` at 0 into division data
/// `m*w = w*m + 0`), and `a_inf = floor(m * min(weights_inf) / r_inf)`.
pub fn a_values(spec: &CoverSpec) -> (u64, u64) {
    let a0 = spec.weights0[0];
    let a_inf = (spec.m as u128 * spec.weights_inf[0] as u128 / spec.r_inf as u128) as u64;
    (a0, a_inf)
}

/// Upper bounds for the invariant-summand degrees:
/// `u_j <= (t_j - a0 - a_inf) / m`, reported exactly and floored.
pub fn bound_u(spec: &CoverSpec) -> Result<BoundReport> {
    let t = t_values(spec)?;
    let (a0, a_inf) = a_values(spec);
    let shift = Rational::from_int(a0 as i64 + a_inf as i64);
    let m = Rational::from_int(spec.m as i64);
    let mut u_bounds_exact = Vec::with_capacity(t.len());
    let mut u_bounds = Vec::with_capacity(t.len());
    for &tj in &t {
        let exact = &(&Rational::from_int(tj) - &shift) * &Rational::from_big(1.into(), spec.m.into())?;
        debug_assert_eq!(&exact * &m, &Rational::from_int(tj) - &shift);
        u_bounds.push(exact.floor_i64()?);
        u_bounds_exact.push(exact);
    }
    Ok(BoundReport { t, a0, a_inf, u_bounds_exact, u_bounds })
}

/// True iff, after sorting both ascending, `s[j] <= t[j]` for every `j`:
/// the condition for a direct sum of line bundles with degrees `s` to
/// inject into one with degrees `t`.
pub fn can_inject(s: &[i64], t: &[i64]) -> Result<bool> {
    if s.len() != t.len() {
        return Err(Error::InvalidInput(format!(
            "degree lists have lengths {} and {}",
            s.len(),
            t.len()
        )));
    }
    let mut s = s.to_vec();
    let mut t = t.to_vec();
    s.sort_unstable();
    t.sort_unstable();
    Ok(s.iter().zip(&t).all(|(a, b)| a <= b))
}

/// Maximum bipartite matching (augmenting paths) for an adjacency matrix
/// `adj[left][right]`. Independent reference for [`can_inject`]: a sorted
/// domination exists iff the relation `s_i <= t_j` has a perfect matching.
pub fn max_bipartite_matching(adj: &[Vec<bool>]) -> usize {
    let rights = adj.first().map_or(0, Vec::len);
    let mut match_of_right: Vec<Option<usize>> = vec![None; rights];

    fn augment(
        left: usize,
        adj: &[Vec<bool>],
        visited: &mut [bool],
        match_of_right: &mut [Option<usize>],
    ) -> bool {
        for right in 0..visited.len() {
            if adj[left][right] && !visited[right] {
                visited[right] = true;
                let free = match match_of_right[right] {
                    None => true,
                    Some(other) => augment(other, adj, visited, match_of_right),
                };
                if free {
                    match_of_right[right] = Some(left);
                    return true;
                }
            }
        }
        false
    }

    let mut size = 0;
    for left in 0..adj.len() {
        let mut visited = vec![false; rights];
        if augment(left, adj, &mut visited, &mut match_of_right) {
            size += 1;
        }
    }
    size
}

/// A square matrix over cyclotomic integers, all entries at one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycMatrix {
    order: u64,
    entries: Vec<Vec<CycElem>>,
}

impl CycMatrix {
    pub fn new(entries: Vec<Vec<CycElem>>) -> Result<Self> {
        let dim = entries.len();
        if dim == 0 {
            return Err(Error::InvalidInput("matrix must be nonempty".into()));
        }
        let order = entries[0][0].order();
        for row in &entries {
            if row.len() != dim {
                return Err(Error::InvalidInput("matrix must be square".into()));
            }
            if row.iter().any(|e| e.order() != order) {
                return Err(Error::InvalidInput(
                    "matrix entries must share one cyclotomic order".into(),
                ));
            }
        }
        Ok(CycMatrix { order, entries })
    }

    /// Builds a matrix from raw coefficient vectors (one per entry, each of
    /// length `order`).
    pub fn from_coeffs(order: u64, grid: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let entries = grid
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|coeffs| {
                        CycElem::from_coeffs(order, coeffs.into_iter().map(Into::into).collect())
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        CycMatrix::new(entries)
    }

    pub fn identity(dim: usize, order: u64) -> Result<Self> {
        let entries = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| CycElem::from_int(order, i64::from(i == j)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        CycMatrix::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn mul(&self, other: &CycMatrix) -> Result<CycMatrix> {
        if self.dim() != other.dim() || self.order != other.order {
            return Err(Error::InvalidInput(
                "matrix product needs matching dimension and cyclotomic order".into(),
            ));
        }
        let dim = self.dim();
        let entries = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let mut acc = CycElem::from_int(self.order, 0)?;
                        for k in 0..dim {
                            acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
                        }
                        Ok(acc)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        CycMatrix::new(entries)
    }

    pub fn trace(&self) -> CycElem {
        let mut acc = CycElem::from_int(self.order, 0).expect("order is positive");
        for i in 0..self.dim() {
            acc = acc.add(&self.entries[i][i]);
        }
        acc
    }

    /// Identity as a field element, not as a representative.
    pub fn is_identity(&self) -> bool {
        let one = CycElem::from_int(self.order, 1).expect("order is positive");
        let zero = CycElem::from_int(self.order, 0).expect("order is positive");
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, e)| e.eq_in_field(if i == j { &one } else { &zero }))
        })
    }

    /// The least `k >= 1` with `self^k = 1`, along with `self^(k-1)` (the
    /// inverse). Fails with the cap exceeded if no order is found within
    /// [`ORDER_CAP`] steps.
    pub fn multiplicative_order(&self) -> Result<(u64, CycMatrix)> {
        let mut previous = CycMatrix::identity(self.dim(), self.order)?;
        let mut power = self.clone();
        for k in 1..=ORDER_CAP {
            if power.is_identity() {
                return Ok((k, previous));
            }
            previous = power.clone();
            power = power.mul(self)?;
        }
        Err(Error::OrderCap(ORDER_CAP))
    }

    /// Traces of `self^t` for `t = 0..count`.
    pub fn trace_sequence(&self, count: u64) -> Result<Vec<CycElem>> {
        let mut power = CycMatrix::identity(self.dim(), self.order)?;
        let mut out = Vec::with_capacity(count as usize);
        for _ in 0..count {
            out.push(power.trace());
            power = power.mul(self)?;
        }
        Ok(out)
    }
}

/// Expands a multiplicity vector into the sorted weight multiset it counts.
fn expand_weights(multiplicities: &[num_bigint::BigInt]) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for (j, count) in multiplicities.iter().enumerate() {
        let count = count
            .to_usize()
            .ok_or_else(|| Error::InvalidInput("multiplicity out of range".into()))?;
        for _ in 0..count {
            out.push(j as u64);
        }
    }
    Ok(out)
}

fn stabilizer_weights(generator: &CycMatrix, order: u64) -> Result<Vec<u64>> {
    let traces = generator.trace_sequence(order)?;
    expand_weights(&weight_multiplicities(order, &traces)?)
}

/// Serde shape for raw monodromy input: two square matrices over
/// `Z[x]/(x^cyclotomic_order - 1)`, entries written as coefficient arrays
/// of length `cyclotomic_order`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixInput {
    pub dim: usize,
    pub cyclotomic_order: u64,
    pub gen0: Vec<Vec<Vec<i64>>>,
    pub gen1: Vec<Vec<Vec<i64>>>,
}

impl MatrixInput {
    /// Builds the generator matrices, checking the declared dimension.
    pub fn generators(&self) -> Result<(CycMatrix, CycMatrix)> {
        let gen0 = CycMatrix::from_coeffs(self.cyclotomic_order, self.gen0.clone())?;
        let gen1 = CycMatrix::from_coeffs(self.cyclotomic_order, self.gen1.clone())?;
        if gen0.dim() != self.dim || gen1.dim() != self.dim {
            return Err(Error::InvalidInput(format!(
                "generators have dimensions {} and {}, expected {}",
                gen0.dim(),
                gen1.dim(),
                self.dim
            )));
        }
        Ok((gen0, gen1))
    }
}

/// Extracts a [`CoverSpec`] from the monodromy matrices at 0 and 1. The
/// monodromy at infinity is `(gen0 * gen1)^(-1)`; all three orders are
/// detected by iteration and the weight multisets recovered from trace
/// sequences.
pub fn spec_from_matrices(gen0: &CycMatrix, gen1: &CycMatrix) -> Result<CoverSpec> {
    if gen0.dim() != gen1.dim() {
        return Err(Error::InvalidInput(format!(
            "generator dimensions {} and {} differ",
            gen0.dim(),
            gen1.dim()
        )));
    }
    if gen0.order() != gen1.order() {
        return Err(Error::InvalidInput(
            "generators must share one cyclotomic order".into(),
        ));
    }
    let (m, _) = gen0.multiplicative_order()?;
    let (c, _) = gen1.multiplicative_order()?;
    let product = gen0.mul(gen1)?;
    let (r_inf, gen_inf) = product.multiplicative_order()?;

    CoverSpec::new(
        m,
        c,
        r_inf,
        stabilizer_weights(gen0, m)?,
        stabilizer_weights(gen1, c)?,
        stabilizer_weights(&gen_inf, r_inf)?,
    )
}
