use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::predict::{self, OrbitPrediction};
use super::{CodeStructure, StratumReport};
use crate::arith::gcd;
use crate::code::{codeword_period, orbit_rd, CodeSpec};
use crate::error::{Error, Result};

/// Identifier of a checked claim. `C7a` is the order-divisibility corollary
/// that follows the class-count theorem, `C7b` the equidistance corollary
/// that follows the nonprimitive-strata theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClaimId {
    L1,
    T1,
    T2,
    T3,
    T4,
    C4,
    C5,
    C6,
    R5,
    C7a,
    C7b,
    C8,
    T5,
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Predicted and measured values of one claim on one code or stratum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PredictionReport {
    pub id: ClaimId,
    /// Minimal polynomial of the stratum, for per-stratum claims.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stratum: Option<String>,
    pub applicable: bool,
    pub reason: String,
    pub predicted: BTreeMap<String, Value>,
    pub measured: BTreeMap<String, Value>,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl PredictionReport {
    /// An applicable claim whose prediction disagrees with measurement.
    pub fn is_failure(&self) -> bool {
        self.applicable && !self.matches
    }
}

fn map<const N: usize>(items: [(&str, Value); N]) -> BTreeMap<String, Value> {
    items.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn report(
    id: ClaimId,
    stratum: Option<&StratumReport>,
    applicable: bool,
    reason: impl Into<String>,
    predicted: BTreeMap<String, Value>,
    measured: BTreeMap<String, Value>,
) -> PredictionReport {
    let matches = predicted.iter().all(|(k, v)| measured.get(k) == Some(v));
    PredictionReport {
        id,
        stratum: stratum.map(|s| s.c.to_string()),
        applicable,
        reason: reason.into(),
        predicted,
        measured,
        matches,
    }
}

fn rd_map(rd: OrbitPrediction) -> BTreeMap<String, Value> {
    map([("r", json!(rd.r)), ("d", json!(rd.d))])
}

fn measured_rd(s: &StratumReport) -> BTreeMap<String, Value> {
    map([("r", json!(s.r_c)), ("d", json!(s.d_c))])
}

/// The stratum `c = h` of a code with irreducible `h`.
fn sole_stratum<'a>(
    code: &CodeSpec,
    structure: &'a CodeStructure,
    what: &str,
) -> Result<&'a StratumReport> {
    if code.t() != 1 {
        return Err(Error::Shape(format!(
            "{what} needs an irreducible h, got t = {}",
            code.t()
        )));
    }
    Ok(&structure.strata[0])
}

fn primitive_factors(stratum: &StratumReport, code: &CodeSpec) -> usize {
    stratum
        .factor_indices
        .iter()
        .filter(|&&i| code.factors()[i].primitive)
        .count()
}

/// `n_c s_c = R_c (q - 1)` on measured counts.
pub fn lemma1_verify(stratum: &StratumReport, code: &CodeSpec) -> bool {
    stratum.n_c as u128 * stratum.cycles as u128 == stratum.classes as u128 * (code.q() as u128 - 1)
}

pub fn lemma1_report(stratum: &StratumReport, code: &CodeSpec) -> PredictionReport {
    report(
        ClaimId::L1,
        Some(stratum),
        true,
        "holds for every stratum",
        map([(
            "n_c*s_c",
            json!(stratum.classes as u128 * (code.q() as u128 - 1)),
        )]),
        map([(
            "n_c*s_c",
            json!(stratum.n_c as u128 * stratum.cycles as u128),
        )]),
    )
}

/// Checks every nonzero codeword: `n_z = r_z d_z`, `d_z | q - 1`,
/// `d_z = ord(alpha)`, and `(r_z, d_z)` constant along each cycle.
pub fn theorem1_verify(code: &CodeSpec, structure: &CodeStructure) -> Result<PredictionReport> {
    let field = code.field();
    let q1 = code.q() - 1;
    let (words, violations) = structure
        .cycles
        .par_iter()
        .map(|cycle| -> Result<(u64, u64)> {
            let mut bad = 0;
            for j in 0..cycle.period {
                let z = cycle.representative.rotate(j);
                let oc = orbit_rd(field, &z)?;
                let ok = codeword_period(&z)? == cycle.period
                    && oc.period() == cycle.period
                    && q1.is_multiple_of(oc.d)
                    && field.element_order(oc.alpha)? == oc.d
                    && (oc.r, oc.d) == (cycle.r, cycle.d);
                bad += u64::from(!ok);
            }
            Ok((cycle.period as u64, bad))
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
    Ok(report(
        ClaimId::T1,
        None,
        true,
        "holds for every nonzero codeword",
        map([("violations", json!(0))]),
        map([("violations", json!(violations)), ("words", json!(words))]),
    ))
}

fn t2_prediction(code: &CodeSpec) -> Result<(bool, String, OrbitPrediction)> {
    if code.t() != 1 || code.m() == 1 {
        return Err(Error::Shape(format!(
            "irreducible h of degree > 1 required, got t = {}, m = {}",
            code.t(),
            code.m()
        )));
    }
    let q = code.q();
    let m = code.m();
    let primitive = code.factors()[0].primitive;
    let applicable = predict::theorem2_applicable(q, m, primitive);
    let mut reason = match (primitive, applicable) {
        (false, _) => "h is nonprimitive".to_string(),
        (true, true) => format!("h is primitive and gcd(m, q-1) = gcd({m}, {}) = 1", q - 1),
        (true, false) => format!(
            "h is primitive and gcd(m, q-1) = {}; reporting r = R, d = q-1 instead",
            gcd(m as u64, q - 1)
        ),
    };
    if code.n() as u64 == q - 1 {
        reason.push_str("; n = q-1 is the excluded Reed-Solomon length");
    }
    let rd = if applicable {
        predict::theorem2(q, code.n() as u64)
    } else {
        predict::remark2(q, m)?
    };
    Ok((applicable, reason, rd))
}

/// `d = gcd(q - 1, n)`, `r = n / d` for `t = 1`, `m > 1`.
pub fn theorem2_predict(code: &CodeSpec, structure: &CodeStructure) -> Result<PredictionReport> {
    let (applicable, reason, rd) = t2_prediction(code)?;
    let s = sole_stratum(code, structure, "T2")?;
    Ok(report(
        ClaimId::T2,
        None,
        applicable,
        reason,
        rd_map(rd),
        measured_rd(s),
    ))
}

/// `r_c = gcd(R_c, n_c)`, `d_c = gcd(q - 1, n_c)` when
/// `gcd(ord_n(q), q - 1) = 1`. `R_c` is predicted from the factor degrees.
pub fn theorem3_predict(stratum: &StratumReport, code: &CodeSpec) -> Result<PredictionReport> {
    let q = code.q();
    let ord = code.ord_q_mod_n();
    let applicable = predict::theorem3_applicable(q, ord);
    let degrees: Vec<usize> = stratum
        .factor_indices
        .iter()
        .map(|&i| code.factors()[i].degree)
        .collect();
    let r_cap = predict::class_count(q, &degrees)?;
    let rd = predict::theorem3(q, stratum.n_c, r_cap);
    let prim = primitive_factors(stratum, code);
    let reason = format!(
        "gcd(ord_n(q), q-1) = gcd({ord}, {}) = {}; {prim} of {} factors primitive",
        q - 1,
        gcd(ord, q - 1),
        stratum.k
    );
    let mut predicted = rd_map(rd);
    predicted.insert("R_c".into(), json!(r_cap));
    let mut measured = measured_rd(stratum);
    measured.insert("R_c".into(), json!(stratum.classes));
    Ok(report(
        ClaimId::T3,
        Some(stratum),
        applicable,
        reason,
        predicted,
        measured,
    ))
}

/// `d_c = gcd(q - 1, n_c)`, `r_c = n_c / d_c` with the derived counts, when
/// every factor of `c` is nonprimitive.
pub fn theorem4_predict(stratum: &StratumReport, code: &CodeSpec) -> PredictionReport {
    let q = code.q();
    let prim = primitive_factors(stratum, code);
    let applicable = prim == 0;
    let reason = if applicable {
        "every factor of c is nonprimitive".to_string()
    } else {
        format!("{prim} of {} factors of c are primitive", stratum.k)
    };
    let rd = predict::theorem4(q, stratum.n_c);
    let counts = predict::counts(q, stratum.classes, rd);
    let mut predicted = rd_map(rd);
    predicted.insert("b".into(), json!(counts.b));
    predicted.insert("v".into(), json!(counts.v));
    predicted.insert("s".into(), json!(counts.s));
    predicted.insert("gcd(b,r)".into(), json!(1));
    let mut measured = measured_rd(stratum);
    measured.insert("b".into(), json!(stratum.b_c));
    measured.insert("v".into(), json!(stratum.v_c));
    measured.insert("s".into(), json!(stratum.cycles));
    measured.insert("gcd(b,r)".into(), json!(gcd(stratum.b_c, stratum.r_c)));
    report(
        ClaimId::T4,
        Some(stratum),
        applicable,
        reason,
        predicted,
        measured,
    )
}

/// `v = R / r`, `b = (q - 1)/d`, `s = v b`, `gcd(r, b) = 1` for `t = 1`.
pub fn corollary4_counts(code: &CodeSpec, structure: &CodeStructure) -> Result<PredictionReport> {
    let (applicable, reason, rd) = t2_prediction(code)?;
    let s = sole_stratum(code, structure, "C4")?;
    let r_cap = predict::class_count(code.q(), &[code.m()])?;
    let counts = predict::counts(code.q(), r_cap, rd);
    let predicted = map([
        ("R", json!(r_cap)),
        ("v", json!(counts.v)),
        ("b", json!(counts.b)),
        ("s", json!(counts.s)),
        ("gcd(r,b)", json!(1)),
    ]);
    let measured = map([
        ("R", json!(s.classes)),
        ("v", json!(s.v_c)),
        ("b", json!(s.b_c)),
        ("s", json!(s.cycles)),
        ("gcd(r,b)", json!(gcd(s.r_c, s.b_c))),
    ]);
    Ok(report(
        ClaimId::C4,
        None,
        applicable,
        reason,
        predicted,
        measured,
    ))
}

fn flag_map(flags: [bool; 3]) -> BTreeMap<String, Value> {
    map([
        ("s=b", json!(flags[0])),
        ("r=R", json!(flags[1])),
        ("gcd(s,R)=1", json!(flags[2])),
    ])
}

/// The three equidistance criteria for `t = 1`, predicted from the orbit
/// formulas and cross-checked against the weight distribution.
pub fn equidistance_check(code: &CodeSpec, structure: &CodeStructure) -> Result<PredictionReport> {
    let s = sole_stratum(code, structure, "C5")?;
    let q = code.q();
    let primitive = code.factors()[0].primitive;
    let r_cap = predict::class_count(q, &[code.m()])?;
    let rd = predict::theorem2(q, code.n() as u64);
    let counts = predict::counts(q, r_cap, rd);
    let mut predicted = flag_map(predict::equidistance_flags(
        counts.s.unwrap_or(0),
        counts.b,
        rd.r,
        r_cap,
    ));
    predicted.insert("equidistant".into(), json!(counts.s == Some(counts.b)));
    let measured_flags = predict::equidistance_flags(s.cycles, s.b_c, s.r_c, s.classes);
    let mut measured = flag_map(measured_flags);
    measured.insert("equidistant".into(), json!(s.equidistant));
    let mut out = report(
        ClaimId::C5,
        None,
        !primitive,
        if primitive {
            "h is primitive"
        } else {
            "h is nonprimitive"
        },
        predicted,
        measured,
    );
    out.matches &= measured_flags.iter().all(|&f| f == s.equidistant);
    Ok(out)
}

/// Every nonzero weight is a multiple of `gcd(q - 1, n)`.
pub fn corollary6_verify(code: &CodeSpec, structure: &CodeStructure) -> Result<bool> {
    Ok(corollary6_report(code, structure)?.matches)
}

pub fn corollary6_report(code: &CodeSpec, structure: &CodeStructure) -> Result<PredictionReport> {
    let s = sole_stratum(code, structure, "C6")?;
    let primitive = code.factors()[0].primitive;
    let d = gcd(code.q() - 1, code.n() as u64);
    let off: u64 = s
        .weights
        .iter()
        .filter(|(w, _)| *w % d as usize != 0)
        .map(|(_, c)| c)
        .sum();
    Ok(report(
        ClaimId::C6,
        None,
        !primitive,
        if primitive {
            "h is primitive"
        } else {
            "h is nonprimitive"
        },
        map([("d", json!(d)), ("words_not_multiple_of_d", json!(0))]),
        map([("d", json!(d)), ("words_not_multiple_of_d", json!(off))]),
    ))
}

/// `r = gcd(R, n)` and `gcd(r, d) = 1` for `t = 1` under the stated gcd
/// hypotheses.
pub fn remark5_check(code: &CodeSpec, structure: &CodeStructure) -> Result<PredictionReport> {
    let (t2, _, _) = t2_prediction(code)?;
    let s = sole_stratum(code, structure, "R5")?;
    let q = code.q();
    let n = code.n() as u64;
    let hyp = predict::remark5_applicable(q, n, code.m());
    let applicable = t2 && hyp;
    let reason = match (t2, hyp) {
        (false, _) => "the t = 1 orbit formulas do not apply".to_string(),
        (true, false) => "gcd hypotheses on m, n and q-1 fail".to_string(),
        (true, true) => "gcd hypotheses on m, n and q-1 hold".to_string(),
    };
    let r_cap = predict::class_count(q, &[code.m()])?;
    Ok(report(
        ClaimId::R5,
        None,
        applicable,
        reason,
        map([("r", json!(gcd(r_cap, n))), ("gcd(r,d)", json!(1))]),
        map([("r", json!(s.r_c)), ("gcd(r,d)", json!(gcd(s.r_c, s.d_c)))]),
    ))
}

fn divisibility_report(
    id: ClaimId,
    stratum: &StratumReport,
    code: &CodeSpec,
    applicable: bool,
    reason: String,
) -> PredictionReport {
    let deg = stratum.degree();
    let residue = crate::arith::pow_mod(code.q(), deg as u64, stratum.n_c);
    report(
        id,
        Some(stratum),
        applicable,
        reason,
        map([("n_c divides q^deg(c)-1", json!(true))]),
        map([
            (
                "n_c divides q^deg(c)-1",
                json!(predict::order_divides(code.q(), deg, stratum.n_c)),
            ),
            ("n_c", json!(stratum.n_c)),
            ("q^deg(c) mod n_c", json!(residue)),
        ]),
    )
}

/// `ord(c) | q^deg(c) - 1` for reducible `c` when `gcd(ord_n(q), q - 1) = 1`.
pub fn corollary7a_check(stratum: &StratumReport, code: &CodeSpec) -> PredictionReport {
    let q = code.q();
    let ord = code.ord_q_mod_n();
    let coprime = predict::theorem3_applicable(q, ord);
    let applicable = stratum.k > 1 && coprime;
    let reason = if stratum.k <= 1 {
        "c is irreducible".to_string()
    } else {
        format!("gcd(ord_n(q), q-1) = {}", gcd(ord, q - 1))
    };
    divisibility_report(ClaimId::C7a, stratum, code, applicable, reason)
}

/// Equidistance criteria on a stratum whose factors are all nonprimitive:
/// the three flags agree, and any of them forces a single weight.
pub fn corollary7b_check(stratum: &StratumReport, code: &CodeSpec) -> PredictionReport {
    let prim = primitive_factors(stratum, code);
    let flags =
        predict::equidistance_flags(stratum.cycles, stratum.b_c, stratum.r_c, stratum.classes);
    let agree = flags.iter().all(|&f| f == flags[0]);
    let implies = !flags[0] || stratum.equidistant;
    let mut measured = flag_map(flags);
    measured.insert("flags_agree".into(), json!(agree));
    measured.insert("flags_imply_single_weight".into(), json!(implies));
    measured.insert("single_weight".into(), json!(stratum.equidistant));
    report(
        ClaimId::C7b,
        Some(stratum),
        prim == 0,
        if prim == 0 {
            "every factor of c is nonprimitive".to_string()
        } else {
            format!("{prim} of {} factors of c are primitive", stratum.k)
        },
        map([
            ("flags_agree", json!(true)),
            ("flags_imply_single_weight", json!(true)),
        ]),
        measured,
    )
}

/// `ord(c) | q^deg(c) - 1` for reducible `c` built from nonprimitive factors.
pub fn corollary8_check(stratum: &StratumReport, code: &CodeSpec) -> PredictionReport {
    let prim = primitive_factors(stratum, code);
    let applicable = stratum.k > 1 && prim == 0;
    let reason = if stratum.k <= 1 {
        "c is irreducible".to_string()
    } else if prim == 0 {
        "every factor of c is nonprimitive".to_string()
    } else {
        format!("{prim} of {} factors of c are primitive", stratum.k)
    };
    divisibility_report(ClaimId::C8, stratum, code, applicable, reason)
}

/// Every structural claim on `code`: the code-level claims whose shape fits,
/// then the per-stratum claims in stratum order.
pub fn all_claims(code: &CodeSpec, structure: &CodeStructure) -> Result<Vec<PredictionReport>> {
    let mut out = vec![theorem1_verify(code, structure)?];
    let code_level: [fn(&CodeSpec, &CodeStructure) -> Result<PredictionReport>; 5] = [
        theorem2_predict,
        corollary4_counts,
        equidistance_check,
        corollary6_report,
        remark5_check,
    ];
    for claim in code_level {
        match claim(code, structure) {
            Ok(r) => out.push(r),
            Err(Error::Shape(_)) => {}
            Err(e) => return Err(e),
        }
    }
    for s in &structure.strata {
        out.push(lemma1_report(s, code));
        out.push(theorem3_predict(s, code)?);
        out.push(theorem4_predict(s, code));
        out.push(corollary7a_check(s, code));
        out.push(corollary7b_check(s, code));
        out.push(corollary8_check(s, code));
    }
    Ok(out)
}
