//! Stratification of a code by minimal polynomial, and the structural claims
//! about cycles, classes and weights checked against enumeration.
//!
//! Closed-form predictions live in [`predict`] and only see integers derived
//! from `(q, n, m)` and the factor table. Everything measured comes from a
//! [`CodeStructure`], which is built by enumeration.

mod claims;
pub mod predict;

pub use claims::{
    all_claims, corollary4_counts, corollary6_report, corollary6_verify, corollary7a_check,
    corollary7b_check, corollary8_check, equidistance_check, lemma1_report, lemma1_verify,
    remark5_check, theorem1_verify, theorem2_predict, theorem3_predict, theorem4_predict, ClaimId,
    PredictionReport,
};

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::code::{minimal_polynomial, partition_cycles, Budget, CodeSpec, CycleOrbit};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// The set of nonzero codewords sharing one minimal polynomial `c(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumReport {
    pub c: Poly,
    /// Indices into [`CodeSpec::factors`] of the irreducible factors of `c`.
    pub factor_indices: Vec<usize>,
    /// Number of irreducible factors of `c`.
    pub k: usize,
    /// `n_c = ord(c)`.
    pub n_c: u64,
    /// `|C|`.
    pub size: u64,
    /// `R_c`, counted as the monic members of the stratum.
    pub classes: u64,
    /// `s_c`, the number of shift-cycles.
    pub cycles: u64,
    pub r_c: u64,
    pub d_c: u64,
    /// `(q - 1) / d_c`.
    pub b_c: u64,
    /// `R_c / r_c` when it divides evenly.
    pub v_c: Option<u64>,
    /// Nonzero weight -> number of words.
    pub weights: BTreeMap<usize, u64>,
    pub equidistant: bool,
}

impl StratumReport {
    pub fn degree(&self) -> usize {
        self.c.degree().unwrap_or(0)
    }
}

/// Cycles of a code together with its strata.
#[derive(Clone, Debug)]
pub struct CodeStructure {
    pub cycles: Vec<CycleOrbit>,
    /// Stratum index of each cycle.
    pub cycle_stratum: Vec<usize>,
    /// Ordered by `(k, c)` canonically.
    pub strata: Vec<StratumReport>,
}

impl CodeStructure {
    pub fn analyze(code: &CodeSpec, budget: Budget) -> Result<Self> {
        let cycles = partition_cycles(code, budget)?;
        Self::from_cycles(code, cycles)
    }

    pub fn from_cycles(code: &CodeSpec, cycles: Vec<CycleOrbit>) -> Result<Self> {
        let minpolys = cycles
            .par_iter()
            .map(|c| minimal_polynomial(&c.representative, code))
            .collect::<Result<Vec<_>>>()?;
        let mut keys: Vec<Poly> = minpolys.clone();
        keys.sort_by(|a, b| a.canonical_cmp(b));
        keys.dedup();
        let q = code.q();
        let mut strata = keys
            .into_iter()
            .map(|c| {
                let factor_indices: Vec<usize> = code
                    .factors()
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.poly.divides(&c).unwrap_or(false))
                    .map(|(i, _)| i)
                    .collect();
                let n_c = crate::poly::poly_order(&c)?;
                Ok(StratumReport {
                    k: factor_indices.len(),
                    factor_indices,
                    n_c,
                    c,
                    size: 0,
                    classes: 0,
                    cycles: 0,
                    r_c: 0,
                    d_c: 0,
                    b_c: 0,
                    v_c: None,
                    weights: BTreeMap::new(),
                    equidistant: false,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        strata.sort_by(|a, b| a.k.cmp(&b.k).then_with(|| a.c.canonical_cmp(&b.c)));

        let mut cycle_stratum = Vec::with_capacity(cycles.len());
        for (cycle, mp) in cycles.iter().zip(&minpolys) {
            let idx = strata
                .iter()
                .position(|s| &s.c == mp)
                .expect("stratum exists");
            cycle_stratum.push(idx);
            let s = &mut strata[idx];
            if s.cycles == 0 {
                s.r_c = cycle.r as u64;
                s.d_c = cycle.d;
            } else if s.r_c != cycle.r as u64 || s.d_c != cycle.d {
                return Err(Error::NonUniformStratum(s.c.to_string()));
            }
            s.cycles += 1;
            s.size += cycle.period as u64;
            s.classes += cycle.monic_members as u64;
            *s.weights.entry(cycle.weight).or_insert(0) += cycle.period as u64;
        }
        for s in &mut strata {
            s.b_c = (q - 1) / s.d_c;
            s.v_c = (s.classes % s.r_c == 0).then(|| s.classes / s.r_c);
            s.equidistant = s.weights.len() == 1;
        }
        Ok(CodeStructure {
            cycles,
            cycle_stratum,
            strata,
        })
    }

    /// Weight distribution over all nonzero codewords.
    pub fn weights(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for c in &self.cycles {
            *out.entry(c.weight).or_insert(0) += c.period as u64;
        }
        out
    }

    /// Number of proportionality classes, counted from monic members.
    pub fn class_count(&self) -> u64 {
        self.cycles.iter().map(|c| c.monic_members as u64).sum()
    }
}

/// Strata of `code`, one per realized minimal polynomial.
pub fn stratify(code: &CodeSpec, budget: Budget) -> Result<Vec<StratumReport>> {
    Ok(CodeStructure::analyze(code, budget)?.strata)
}

/// Nonzero weight -> count, by direct enumeration of all messages.
pub fn weight_distribution(code: &CodeSpec, budget: Budget) -> Result<BTreeMap<usize, u64>> {
    let total = code.size();
    budget.check(total)?;
    Ok((1..total as u64)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<usize, u64>, i| {
            *acc.entry(code.encode(&code.message(i)).weight())
                .or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (w, c) in b {
                *a.entry(w).or_insert(0) += c;
            }
            a
        }))
}
