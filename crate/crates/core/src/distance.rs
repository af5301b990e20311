//! Closed-form minimum distance for parity-check polynomials whose factors
//! have pairwise coprime degrees and cofactors, and an exhaustive oracle.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::json;

use crate::arith::{checked_pow, gcd};
use crate::code::{Budget, CodeSpec};
use crate::error::{Error, Result};
use crate::structure::{ClaimId, PredictionReport};

/// Read on the `t >= 2` formula: each repeated minus sign before a subset
/// sum is taken as a single subtraction.
pub const SIGN_NOTE: &str = "doubled minus signs before each subset sum read as one subtraction";

/// One factor `h_i` with degree `m_i`, order `n_i` and `b_i = (q^{m_i} - 1)/n_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorShape {
    pub m: u32,
    pub n: u64,
    pub b: u64,
}

/// A code whose factors satisfy the shape hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem5Instance {
    pub q: u64,
    pub factors: Vec<FactorShape>,
    /// For each `k = 1..t-1`, the sums `m_{j,k}` over the `k`-subsets of the
    /// degree list, subsets in lexicographic order.
    pub subset_sums: Vec<Vec<u32>>,
}

impl Theorem5Instance {
    pub fn t(&self) -> usize {
        self.factors.len()
    }

    /// `m = sum m_i`.
    pub fn m(&self) -> u32 {
        self.factors.iter().map(|f| f.m).sum()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.m).collect()
    }
}

/// All `k`-subsets of `0..t` in lexicographic order.
pub fn k_subsets(t: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, t: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..t {
            cur.push(i);
            rec(i + 1, t, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, t, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Validates the shape hypotheses, returning the instance or the reason it
/// does not apply.
pub fn theorem5_hypotheses(code: &CodeSpec) -> std::result::Result<Theorem5Instance, String> {
    let q = code.q();
    let mut factors = Vec::with_capacity(code.t());
    for f in code.factors() {
        let m = f.degree as u32;
        let qm = checked_pow(q, m).map_err(|_| format!("q^{m} overflows"))?;
        if (qm - 1) % f.order != 0 {
            return Err(format!("ord {} does not divide q^{m}-1", f.order));
        }
        let b = (qm - 1) / f.order;
        if !(q - 1).is_multiple_of(b) {
            return Err(format!("b = {b} does not divide q-1 = {}", q - 1));
        }
        factors.push(FactorShape { m, n: f.order, b });
    }
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let (a, c) = (factors[i], factors[j]);
            if gcd(a.m as u64, c.m as u64) != 1 {
                return Err(format!(
                    "gcd(m_{}, m_{}) = gcd({}, {}) != 1",
                    i + 1,
                    j + 1,
                    a.m,
                    c.m
                ));
            }
            if gcd(a.b, c.b) != 1 {
                return Err(format!(
                    "gcd(b_{}, b_{}) = gcd({}, {}) != 1",
                    i + 1,
                    j + 1,
                    a.b,
                    c.b
                ));
            }
        }
    }
    let t = factors.len();
    let subset_sums = (1..t)
        .map(|k| {
            k_subsets(t, k)
                .iter()
                .map(|s| s.iter().map(|&i| factors[i].m).sum())
                .collect()
        })
        .collect();
    Ok(Theorem5Instance {
        q,
        factors,
        subset_sums,
    })
}

/// Predicted minimum distance.
///
/// For `t >= 2`: `q^{m-1} - sum_{k=1}^{t-1} sum_j q^{m_{j,k} - 1}`.
/// For `t = 1`: `q^{m-1} (q - 1) / b`.
pub fn theorem5_predict(instance: &Theorem5Instance) -> Result<i128> {
    let q = instance.q as i128;
    let pow = |e: u32| q.checked_pow(e).ok_or(Error::Overflow("q^e"));
    let m = instance.m();
    if instance.t() == 1 {
        let b = instance.factors[0].b as i128;
        return Ok(pow(m - 1)? * (q - 1) / b);
    }
    let mut d = pow(m - 1)?;
    for sums in &instance.subset_sums {
        for &s in sums {
            d -= pow(s - 1)?;
        }
    }
    Ok(d)
}

/// Least nonzero weight over every codeword.
pub fn min_distance_bruteforce(code: &CodeSpec, budget: Budget) -> Result<usize> {
    let total = code.size();
    budget.check(total)?;
    (1..total as u64)
        .into_par_iter()
        .map(|i| code.encode(&code.message(i)).weight())
        .min()
        .ok_or_else(|| Error::Degenerate("code has no nonzero codewords".into()))
}

/// Distance section of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub d_min_predicted: Option<i128>,
    pub d_min_bruteforce: Option<usize>,
    pub theorem5_applicable: bool,
    pub theorem5_reason: String,
}

pub fn distance_report(code: &CodeSpec, budget: Budget) -> Result<DistanceReport> {
    let (predicted, applicable, reason) = match theorem5_hypotheses(code) {
        Ok(inst) => (
            Some(theorem5_predict(&inst)?),
            true,
            format!("hypotheses hold; {SIGN_NOTE}"),
        ),
        Err(reason) => (None, false, reason),
    };
    let brute = match min_distance_bruteforce(code, budget) {
        Ok(d) => Some(d),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(DistanceReport {
        d_min_predicted: predicted,
        d_min_bruteforce: brute,
        theorem5_applicable: applicable,
        theorem5_reason: reason,
    })
}

impl DistanceReport {
    /// The distance prediction as a claim; matches when both values exist
    /// and agree.
    pub fn claim(&self) -> PredictionReport {
        let pred = self.d_min_predicted;
        let brute = self.d_min_bruteforce;
        PredictionReport {
            id: ClaimId::T5,
            stratum: None,
            applicable: self.theorem5_applicable && brute.is_some(),
            reason: self.theorem5_reason.clone(),
            predicted: BTreeMap::from([("d_min".to_string(), json!(pred))]),
            measured: BTreeMap::from([("d_min".to_string(), json!(brute))]),
            matches: pred.is_some() && brute.is_some() && pred == brute.map(|d| d as i128),
        }
    }
}
