//! Seifert invariants of the Brieskorn spheres `Sigma(2^k, 2^k*m, q)` and
//! their star-shaped negative-definite plumbing trees.
//!
//! Two constructions are provided and must agree on boundary invariants: the
//! general algorithm [`brieskorn_plumbing`] driven by congruence data, and
//! [`special_family_plumbing`] which writes down the tree for
//! `q = 2^k*10m - 1` directly from its closed-form fiber data (keeping the
//! weight -1 leg when `m = 1` instead of blowing it down).

use serde_json::{json, Value};
use std::fmt::Write as _;

use crate::exact::{hj_expand, solve_congruence};
use crate::{Error, Result};

/// Parameters `(k, m, q)` selecting the Brieskorn sphere `Sigma(2^k, 2^k*m, q)`.
///
/// `m` and `q` are odd, positive and coprime; `k >= 1`. This is the double
/// branched data for the `2^k`-fold cover branched over the torus knot
/// `T(2^k*m, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BrieskornParams {
    k: u32,
    m: u64,
    q: u64,
}

impl BrieskornParams {
    pub fn new(k: u32, m: u64, q: u64) -> Result<Self> {
        if k < 1 {
            return Err(Error::Precondition("k must be >= 1".into()));
        }
        if m == 0 || m.is_multiple_of(2) {
            return Err(Error::Precondition(format!(
                "m must be odd and positive, got {m}"
            )));
        }
        if q == 0 || q.is_multiple_of(2) {
            return Err(Error::Precondition(format!(
                "q must be odd and positive, got {q}"
            )));
        }
        if num_integer::gcd(m, q) != 1 {
            return Err(Error::Precondition(format!(
                "m = {m} and q = {q} must be coprime"
            )));
        }
        let params = BrieskornParams { k, m, q };
        params.torus_p()?; // reject sizes whose derived quantities overflow
        Ok(params)
    }

    /// Parameters with `q = 2^k*10m - 1`, the twist family driving the main bound.
    pub fn special_family(k: u32, m: u64) -> Result<Self> {
        let q = pow2(k)?
            .checked_mul(10)
            .and_then(|t| t.checked_mul(m))
            .and_then(|t| t.checked_sub(1))
            .ok_or_else(|| Error::Precondition("parameters too large".into()))?;
        BrieskornParams::new(k, m, q)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Order `2^k` of the branched cover.
    pub fn cover_order(&self) -> u64 {
        pow2(self.k).expect("validated on construction")
    }

    /// First torus-knot parameter `p = 2^k*m`.
    pub fn torus_p(&self) -> Result<u64> {
        pow2(self.k)?
            .checked_mul(self.m)
            .ok_or_else(|| Error::Precondition("parameters too large".into()))
    }
}

fn pow2(k: u32) -> Result<u64> {
    1u64.checked_shl(k)
        .filter(|_| k < 63)
        .ok_or_else(|| Error::Precondition(format!("2^{k} out of range")))
}

/// Unnormalized Seifert invariants: the central Euler weight `-e` and the
/// multiset of singular fibers `(a, b)` with `0 < -b < a`.
///
/// Fibers are listed `(m, -alpha)` first (absent when `m = 1`), then `2^k`
/// copies of `(q, -beta)` (absent when `q = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    pub euler_weight: i64,
    pub fibers: Vec<(u64, i64)>,
}

impl SeifertData {
    pub fn to_json(&self) -> Value {
        let fibers: Vec<Value> = self.fibers.iter().map(|&(a, b)| json!([a, b])).collect();
        json!({ "euler_weight": self.euler_weight, "fibers": fibers })
    }
}

/// Seifert invariants of `Sigma(2^k, 2^k*m, q)`.
///
/// `alpha` and `beta` solve `q*alpha = -1 (mod m)` and
/// `2^k*m*beta = -1 (mod q)`; the Euler weight `e` is pinned down by
/// `e*m*q - q*alpha - 2^k*m*beta = 1` and must land in `[1, 2^k]`, which is
/// re-checked rather than assumed. Trivial fibers (`m = 1` or `q = 1`) are
/// omitted and their term dropped from the relation.
pub fn seifert_invariants(params: &BrieskornParams) -> Result<SeifertData> {
    let (k, m, q) = (params.k, params.m, params.q);
    let p = params.torus_p()?;
    let alpha = if m == 1 {
        None
    } else {
        Some(solve_congruence(q as i128, -1, m)?)
    };
    let beta = if q == 1 {
        None
    } else {
        Some(solve_congruence(p as i128, -1, q)?)
    };

    let mut numer: i128 = 1;
    if let Some(alpha) = alpha {
        numer += q as i128 * alpha as i128;
    }
    if let Some(beta) = beta {
        numer += p as i128 * beta as i128;
    }
    let denom = m as i128 * q as i128;
    if numer % denom != 0 {
        return Err(Error::Consistency(format!(
            "Euler weight for (k, m, q) = ({k}, {m}, {q}) is not an integer"
        )));
    }
    let e = numer / denom;
    if e < 1 || e > pow2(k)? as i128 {
        return Err(Error::Consistency(format!(
            "Euler weight e = {e} for (k, m, q) = ({k}, {m}, {q}) is outside [1, 2^{k}]"
        )));
    }

    let mut fibers = Vec::new();
    if let Some(alpha) = alpha {
        fibers.push((m, -to_i64(alpha)?));
    }
    if let Some(beta) = beta {
        let fiber = (q, -to_i64(beta)?);
        fibers.extend(std::iter::repeat_n(fiber, params.cover_order() as usize));
    }
    Ok(SeifertData {
        euler_weight: -(e as i64),
        fibers,
    })
}

fn to_i64(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Precondition("parameters too large".into()))
}

/// A star-shaped plumbing tree: one central vertex and chains of legs.
///
/// Node indices run central first (`v0`), then each leg in order with the
/// node adjacent to the center first; all serializations use this order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingTree {
    central_weight: i64,
    legs: Vec<Vec<i64>>,
}

impl PlumbingTree {
    pub fn new(central_weight: i64, legs: Vec<Vec<i64>>) -> Self {
        PlumbingTree {
            central_weight,
            legs,
        }
    }

    pub fn central_weight(&self) -> i64 {
        self.central_weight
    }

    pub fn legs(&self) -> &[Vec<i64>] {
        &self.legs
    }

    pub fn node_count(&self) -> usize {
        1 + self.legs.iter().map(Vec::len).sum::<usize>()
    }

    /// Weights in node-index order.
    pub fn weights(&self) -> Vec<i64> {
        let mut weights = Vec::with_capacity(self.node_count());
        weights.push(self.central_weight);
        for leg in &self.legs {
            weights.extend_from_slice(leg);
        }
        weights
    }

    /// Edges `(u, v)` with `u < v` in node-index order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.node_count().saturating_sub(1));
        let mut next = 1;
        for leg in &self.legs {
            if leg.is_empty() {
                continue;
            }
            edges.push((0, next));
            for offset in 1..leg.len() {
                edges.push((next + offset - 1, next + offset));
            }
            next += leg.len();
        }
        edges
    }

    /// JSON form `{"central": int, "legs": [[int]]}`.
    pub fn to_json(&self) -> Value {
        json!({ "central": self.central_weight, "legs": self.legs })
    }

    /// Graphviz DOT form with nodes labelled `v{index} ({weight})`.
    pub fn to_dot(&self) -> String {
        let weights = self.weights();
        let mut out = String::from("graph plumbing {\n");
        for (index, weight) in weights.iter().enumerate() {
            writeln!(out, "    v{index} [label=\"v{index} ({weight})\"];").unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "    v{u} -- v{v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Plumbing tree for `Sigma(2^k, 2^k*m, q)` built from its Seifert invariants.
///
/// Central weight `-e`; one leg per singular fiber `(a, -b)` carrying the
/// negated Hirzebruch-Jung expansion of `a/b`, center-adjacent term first.
pub fn brieskorn_plumbing(params: &BrieskornParams) -> Result<PlumbingTree> {
    let data = seifert_invariants(params)?;
    let mut legs = Vec::with_capacity(data.fibers.len());
    for &(a, b) in &data.fibers {
        let cf = hj_expand(a, b.unsigned_abs())?;
        legs.push(cf.terms().iter().map(|&t| -(t as i64)).collect());
    }
    Ok(PlumbingTree::new(data.euler_weight, legs))
}

/// Plumbing tree for `Sigma(2^k, 2^k*m, 2^k*10m - 1)` from closed-form data.
///
/// Central weight `-2^k`, one leg `[-m]`, and `2^k` long legs
/// `[-2 x(2^k*m - 2), -3, -2 x8]`. For `m > 1` this coincides with
/// [`brieskorn_plumbing`]; for `m = 1` it keeps the `-1` leg that the general
/// algorithm blows down, giving a second presentation of the same boundary.
pub fn special_family_plumbing(k: u32, m: u64) -> Result<PlumbingTree> {
    if k < 1 {
        return Err(Error::Precondition("k must be >= 1".into()));
    }
    if m == 0 || m.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "m must be odd and positive, got {m}"
        )));
    }
    let two_k = pow2(k)?;
    let p = two_k
        .checked_mul(m)
        .ok_or_else(|| Error::Precondition("parameters too large".into()))?;
    let mut legs = vec![vec![-to_i64(m)?]];
    let mut long_leg = vec![-2; (p - 2) as usize];
    long_leg.push(-3);
    long_leg.extend([-2; 8]);
    legs.extend(std::iter::repeat_n(long_leg, two_k as usize));
    Ok(PlumbingTree::new(-to_i64(two_k)?, legs))
}
