//! Report assembly for the command-line front end: full analysis of one
//! code, claim verification over the divisors of `x^n - 1`, factor tables
//! and catalog search.
//!
//! Every report serializes with a fixed key order and fixed row ordering, so
//! the same inputs and seed produce byte-identical JSON whatever the thread
//! count.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::code::{partition_classes, Budget, CodeSpec};
use crate::distance::{distance_report, DistanceReport};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{factor_xn_minus_1_with_seed, Poly};
use crate::structure::{all_claims, CodeStructure, PredictionReport};

pub const SCHEMA: u32 = 1;

/// Shared knobs for every command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub budget: Budget,
    pub seed: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            budget: Budget::DEFAULT,
            seed: 0,
            threads: None,
        }
    }
}

impl Options {
    /// Runs `f` on a pool of the configured size.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.threads {
            None => Ok(f()),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Error::ThreadPool(e.to_string()))?;
                Ok(pool.install(f))
            }
        }
    }
}

/// JSON form of a field element: an integer in a prime field, a residue
/// vector `[a_0, ..., a_{e-1}]` over GF(p) otherwise.
pub fn element_json(field: &FieldSpec, a: FieldElement) -> Value {
    if field.is_prime_field() {
        Value::from(a.index())
    } else {
        Value::from(field.residues(a))
    }
}

fn coeffs_json(field: &FieldSpec, coeffs: &[FieldElement]) -> Vec<Value> {
    coeffs.iter().map(|&c| element_json(field, c)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldInfo {
    pub p: u32,
    pub e: u32,
    pub q: u32,
    /// Coefficients `[c_0, ..., c_e]` of the defining polynomial over GF(p).
    pub modulus: Vec<u32>,
    /// The same polynomial as text over GF(p).
    pub modulus_text: String,
}

impl FieldInfo {
    pub fn new(field: &FieldSpec) -> Self {
        FieldInfo {
            p: field.characteristic(),
            e: field.degree(),
            q: field.order(),
            modulus: field.modulus().to_vec(),
            modulus_text: modulus_text(field),
        }
    }
}

fn modulus_text(field: &FieldSpec) -> String {
    let base = FieldSpec::new(field.characteristic() as u64, 1).expect("prime subfield");
    let coeffs = field
        .modulus()
        .iter()
        .map(|&c| base.element(c).expect("residue below p"))
        .collect();
    Poly::new(&base, coeffs).to_string()
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyInfo {
    pub text: String,
    pub coeffs: Vec<Value>,
}

impl PolyInfo {
    pub fn new(p: &Poly) -> Self {
        PolyInfo {
            text: p.to_string(),
            coeffs: coeffs_json(p.field(), p.coeffs()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorRow {
    pub poly: PolyInfo,
    pub degree: usize,
    pub order: u64,
    pub primitive: bool,
    /// Orbit constants of the code with this factor as parity-check
    /// polynomial; absent when that code is over budget or not constructible.
    pub r: Option<u64>,
    pub d: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeInfo {
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub h: PolyInfo,
    pub g: PolyInfo,
    pub ord_q_mod_n: u64,
    pub primitive_length: bool,
    pub factors: Vec<FactorRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleRow {
    pub representative: Vec<Value>,
    pub period: usize,
    pub weight: usize,
    pub r: usize,
    pub d: u64,
    pub alpha: Value,
    pub monic_members: usize,
    pub stratum: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRow {
    pub representative: Vec<Value>,
    pub weight: usize,
    pub period: usize,
    pub support: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StratumRow {
    pub c: PolyInfo,
    pub k: usize,
    pub n_c: u64,
    pub size: u64,
    #[serde(rename = "R_c")]
    pub classes: u64,
    pub s_c: u64,
    pub r_c: u64,
    pub d_c: u64,
    pub b_c: u64,
    pub v_c: Option<u64>,
    pub weights: BTreeMap<usize, u64>,
    pub equidistant: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DistanceSection {
    pub d_min_predicted: Option<i128>,
    pub d_min_bruteforce: Option<usize>,
    pub theorem5_applicable: bool,
    pub theorem5_reason: String,
}

impl From<&DistanceReport> for DistanceSection {
    fn from(d: &DistanceReport) -> Self {
        DistanceSection {
            d_min_predicted: d.d_min_predicted,
            d_min_bruteforce: d.d_min_bruteforce,
            theorem5_applicable: d.theorem5_applicable,
            theorem5_reason: d.theorem5_reason.clone(),
        }
    }
}

/// Everything known about one code.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub version: &'static str,
    pub seed: u64,
    pub field: FieldInfo,
    pub code: CodeInfo,
    pub cycles: Vec<CycleRow>,
    pub classes: Vec<ClassRow>,
    pub strata: Vec<StratumRow>,
    pub claims: Vec<PredictionReport>,
    pub weight_distribution: BTreeMap<usize, u64>,
    pub distance: DistanceSection,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Applicable claims whose prediction disagrees with measurement.
    pub fn failures(&self) -> Vec<&PredictionReport> {
        self.claims.iter().filter(|c| c.is_failure()).collect()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let c = &self.code;
        let _ = writeln!(
            out,
            "field      GF({}) p={} e={} modulus={}",
            self.field.q, self.field.p, self.field.e, self.field.modulus_text
        );
        let _ = writeln!(out, "h          {}", c.h.text);
        let _ = writeln!(out, "g          {}", c.g.text);
        let _ = writeln!(
            out,
            "n={} m={} t={} ord_n(q)={} primitive_length={}",
            c.n, c.m, c.t, c.ord_q_mod_n, c.primitive_length
        );
        let _ = writeln!(out, "\nfactors");
        for f in &c.factors {
            let _ = writeln!(
                out,
                "  {:<24} deg={} ord={} primitive={} r={} d={}",
                f.poly.text,
                f.degree,
                f.order,
                f.primitive,
                opt(f.r),
                opt(f.d)
            );
        }
        let _ = writeln!(
            out,
            "\ncycles={} classes={}",
            self.cycles.len(),
            self.classes.len()
        );
        let _ = writeln!(out, "\nstrata");
        for s in &self.strata {
            let _ = writeln!(
                out,
                "  {:<24} k={} n_c={} size={} R_c={} s_c={} r_c={} d_c={} b_c={} v_c={} equidistant={} weights={:?}",
                s.c.text,
                s.k,
                s.n_c,
                s.size,
                s.classes,
                s.s_c,
                s.r_c,
                s.d_c,
                s.b_c,
                opt(s.v_c),
                s.equidistant,
                s.weights
            );
        }
        let _ = writeln!(out, "\nweights    {:?}", self.weight_distribution);
        let d = &self.distance;
        let _ = writeln!(
            out,
            "d_min      bruteforce={} predicted={} ({})",
            opt(d.d_min_bruteforce),
            opt(d.d_min_predicted),
            d.theorem5_reason
        );
        let _ = writeln!(out, "\nclaims");
        for cl in &self.claims {
            let verdict = match (cl.applicable, cl.matches) {
                (true, true) => "pass",
                (true, false) => "FAIL",
                (false, _) => "n/a",
            };
            let _ = writeln!(
                out,
                "  {:<4} {:<5} {:<20} {}",
                cl.id.to_string(),
                verdict,
                cl.stratum.as_deref().unwrap_or("-"),
                cl.reason
            );
        }
        out
    }
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn factor_rows(code: &CodeSpec, budget: Budget, seed: u64) -> Result<Vec<FactorRow>> {
    code.factors()
        .iter()
        .map(|f| {
            let (r, d) = factor_rd(&f.poly, budget, seed)?;
            Ok(FactorRow {
                poly: PolyInfo::new(&f.poly),
                degree: f.degree,
                order: f.order,
                primitive: f.primitive,
                r,
                d,
            })
        })
        .collect()
}

/// Measured `(r, d)` of the code generated by an irreducible `h`.
fn factor_rd(h: &Poly, budget: Budget, seed: u64) -> Result<(Option<u64>, Option<u64>)> {
    let code = match CodeSpec::from_parity_check_with_seed(h.field(), h, seed) {
        Ok(c) => c,
        Err(Error::InvalidCode(_)) => return Ok((None, None)),
        Err(e) => return Err(e),
    };
    match CodeStructure::analyze(&code, budget) {
        Ok(st) => Ok((Some(st.strata[0].r_c), Some(st.strata[0].d_c))),
        Err(Error::BudgetExceeded { .. }) => Ok((None, None)),
        Err(e) => Err(e),
    }
}

/// Full analysis of the code with parity-check polynomial `h`.
pub fn analyze(field: &FieldSpec, h: &Poly, opts: &Options) -> Result<AnalysisReport> {
    opts.install(|| analyze_inner(field, h, opts))?
}

fn analyze_inner(field: &FieldSpec, h: &Poly, opts: &Options) -> Result<AnalysisReport> {
    let code = CodeSpec::from_parity_check_with_seed(field, h, opts.seed)?;
    let structure = CodeStructure::analyze(&code, opts.budget)?;
    let classes = partition_classes(&code, opts.budget)?;
    let mut claims = all_claims(&code, &structure)?;
    let distance = distance_report(&code, opts.budget)?;
    claims.push(distance.claim());

    let cycles = structure
        .cycles
        .iter()
        .zip(&structure.cycle_stratum)
        .map(|(c, &si)| CycleRow {
            representative: coeffs_json(field, c.representative.coeffs()),
            period: c.period,
            weight: c.weight,
            r: c.r,
            d: c.d,
            alpha: element_json(field, c.alpha),
            monic_members: c.monic_members,
            stratum: structure.strata[si].c.to_string(),
        })
        .collect();
    let classes = classes
        .into_iter()
        .map(|c| ClassRow {
            representative: coeffs_json(field, c.monic_rep.coeffs()),
            weight: c.weight,
            period: c.period,
            support: c.support,
        })
        .collect();
    let strata = structure
        .strata
        .iter()
        .map(|s| StratumRow {
            c: PolyInfo::new(&s.c),
            k: s.k,
            n_c: s.n_c,
            size: s.size,
            classes: s.classes,
            s_c: s.cycles,
            r_c: s.r_c,
            d_c: s.d_c,
            b_c: s.b_c,
            v_c: s.v_c,
            weights: s.weights.clone(),
            equidistant: s.equidistant,
        })
        .collect();
    Ok(AnalysisReport {
        schema: SCHEMA,
        version: env!("CARGO_PKG_VERSION"),
        seed: opts.seed,
        field: FieldInfo::new(field),
        code: CodeInfo {
            n: code.n(),
            m: code.m(),
            t: code.t(),
            h: PolyInfo::new(code.h()),
            g: PolyInfo::new(code.g()),
            ord_q_mod_n: code.ord_q_mod_n(),
            primitive_length: code.is_primitive_length(),
            factors: factor_rows(&code, opts.budget, opts.seed)?,
        },
        cycles,
        classes,
        strata,
        claims,
        weight_distribution: structure.weights(),
        distance: (&distance).into(),
    })
}

/// Monic divisors of `x^n - 1` of positive degree, sorted by degree then
/// coefficients. With `irreducible_only` just the irreducible factors.
pub fn divisors_of_xn_minus_1(
    field: &FieldSpec,
    n: u64,
    irreducible_only: bool,
    seed: u64,
) -> Result<Vec<Poly>> {
    let factors: Vec<Poly> = factor_xn_minus_1_with_seed(field, n, seed)?
        .factors
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    if irreducible_only {
        return Ok(factors);
    }
    if factors.len() > 20 {
        return Err(Error::Overflow("divisor count of x^n - 1"));
    }
    let mut out: Vec<Poly> = (1u32..1 << factors.len())
        .map(|mask| {
            factors
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(Poly::one(field), |acc, (_, f)| &acc * f)
        })
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyEntry {
    pub h: String,
    pub n: Option<usize>,
    /// `ok`, `fail` or `skipped`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub applicable: usize,
    pub failing: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub schema: u32,
    pub q: u32,
    pub n: u64,
    pub all_divisors: bool,
    pub entries: Vec<VerifyEntry>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != "fail")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let detail = match e.status {
                "skipped" => e.reason.clone().unwrap_or_default(),
                _ => format!(
                    "{} applicable claims; failing: [{}]",
                    e.applicable,
                    e.failing.join(", ")
                ),
            };
            let _ = writeln!(
                out,
                "{:<7} {:<28} n={:<4} {}",
                e.status,
                e.h,
                opt(e.n),
                detail
            );
        }
        let _ = writeln!(
            out,
            "{}",
            if self.passed() {
                "all applicable claims match"
            } else {
                "mismatches found"
            }
        );
        out
    }
}

/// Runs every claim on the divisors of `x^n - 1`: the irreducible ones by
/// default, all of them with `all_divisors`. Codes over budget are skipped.
pub fn verify(
    field: &FieldSpec,
    n: u64,
    all_divisors: bool,
    opts: &Options,
) -> Result<VerifySummary> {
    let divisors = divisors_of_xn_minus_1(field, n, !all_divisors, opts.seed)?;
    let mut entries = Vec::with_capacity(divisors.len());
    for h in divisors {
        let entry = match analyze(field, &h, opts) {
            Ok(rep) => {
                let failing: Vec<String> = rep
                    .failures()
                    .iter()
                    .map(|c| match &c.stratum {
                        Some(s) => format!("{}[{s}]", c.id),
                        None => c.id.to_string(),
                    })
                    .collect();
                VerifyEntry {
                    h: h.to_string(),
                    n: Some(rep.code.n),
                    status: if failing.is_empty() { "ok" } else { "fail" },
                    reason: None,
                    applicable: rep.claims.iter().filter(|c| c.applicable).count(),
                    failing,
                }
            }
            Err(e @ (Error::BudgetExceeded { .. } | Error::InvalidCode(_))) => VerifyEntry {
                h: h.to_string(),
                n: None,
                status: "skipped",
                reason: Some(e.to_string()),
                applicable: 0,
                failing: vec![],
            },
            Err(e) => return Err(e),
        };
        entries.push(entry);
    }
    Ok(VerifySummary {
        schema: SCHEMA,
        q: field.order(),
        n,
        all_divisors,
        entries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorTable {
    pub schema: u32,
    pub q: u32,
    pub n: u64,
    pub factors: Vec<FactorRow>,
}

impl FactorTable {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "x^{}-1 over GF({}): {} factors",
            self.n,
            self.q,
            self.factors.len()
        );
        for f in &self.factors {
            let _ = writeln!(
                out,
                "  {:<24} deg={} ord={} primitive={} r={} d={}",
                f.poly.text,
                f.degree,
                f.order,
                f.primitive,
                opt(f.r),
                opt(f.d)
            );
        }
        out
    }
}

/// Irreducible factors of `x^n - 1` with degree, order, primitivity and the
/// measured `(r, d)` of each factor's code.
pub fn factor_table(field: &FieldSpec, n: u64, opts: &Options) -> Result<FactorTable> {
    let factors = divisors_of_xn_minus_1(field, n, true, opts.seed)?;
    let rows = opts.install(|| {
        factors
            .iter()
            .map(|f| {
                let (r, d) = factor_rd(f, opts.budget, opts.seed)?;
                Ok(FactorRow {
                    poly: PolyInfo::new(f),
                    degree: f.degree().unwrap_or(0),
                    order: crate::poly::poly_order(f)?,
                    primitive: crate::poly::is_primitive(f)?,
                    r,
                    d,
                })
            })
            .collect::<Result<Vec<_>>>()
    })??;
    Ok(FactorTable {
        schema: SCHEMA,
        q: field.order(),
        n,
        factors: rows,
    })
}

/// Filters for [`search`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Predicates {
    pub equidistant: bool,
    pub nonprimitive: bool,
    pub irreducible: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchEntry {
    pub n: u64,
    pub h: String,
    pub m: usize,
    pub t: usize,
    /// `ok` or `skipped`.
    pub status: &'static str,
    pub equidistant: Option<bool>,
    pub weights: Option<BTreeMap<usize, u64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Catalog {
    pub schema: u32,
    pub q: u32,
    pub n_min: u64,
    pub n_max: u64,
    pub entries: Vec<SearchEntry>,
}

impl Catalog {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(
                out,
                "n={:<4} m={:<3} t={} {:<28} {:<7} equidistant={} weights={}",
                e.n,
                e.m,
                e.t,
                e.h,
                e.status,
                opt(e.equidistant),
                e.weights
                    .as_ref()
                    .map_or_else(|| "-".to_string(), |w| format!("{w:?}"))
            );
        }
        let _ = writeln!(out, "{} entries", self.entries.len());
        out
    }
}

/// Codes of length `n_min..=n_max` matching every requested predicate,
/// ordered by `(n, h)`. Each divisor `h` of `x^n - 1` is listed under its
/// own order, so every code appears once. Codes too large to enumerate are
/// kept and marked skipped when the equidistance predicate needs them.
pub fn search(
    field: &FieldSpec,
    n_min: u64,
    n_max: u64,
    preds: Predicates,
    opts: &Options,
) -> Result<Catalog> {
    let q = field.order() as u64;
    let mut entries = Vec::new();
    for n in n_min.max(1)..=n_max {
        if crate::arith::gcd(n, q) != 1 {
            continue;
        }
        for h in divisors_of_xn_minus_1(field, n, preds.irreducible, opts.seed)? {
            if crate::poly::poly_order(&h)? != n {
                continue;
            }
            let code = match CodeSpec::from_parity_check_with_seed(field, &h, opts.seed) {
                Ok(c) => c,
                Err(Error::InvalidCode(_)) => continue,
                Err(e) => return Err(e),
            };
            if preds.nonprimitive && code.factors().iter().any(|f| f.primitive) {
                continue;
            }
            let weights =
                match opts.install(|| crate::structure::weight_distribution(&code, opts.budget))? {
                    Ok(w) => Some(w),
                    Err(Error::BudgetExceeded { .. }) => None,
                    Err(e) => return Err(e),
                };
            let equidistant = weights.as_ref().map(|w| w.len() == 1);
            if preds.equidistant && equidistant == Some(false) {
                continue;
            }
            entries.push(SearchEntry {
                n,
                h: h.to_string(),
                m: code.m(),
                t: code.t(),
                status: if weights.is_some() { "ok" } else { "skipped" },
                equidistant,
                weights,
            });
        }
    }
    Ok(Catalog {
        schema: SCHEMA,
        q: field.order(),
        n_min,
        n_max,
        entries,
    })
}
