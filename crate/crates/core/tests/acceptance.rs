//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are run in full and still print FAIL
//! when they fail; they only stop the process from exiting nonzero. Any
//! other failure, or a known failure that starts passing, is reported.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_min_distance, brute_weights, coset_sizes, gf, scan_order, trial_factor};
use cyclocode::code::{Budget, CodeSpec};
use cyclocode::distance::{min_distance_bruteforce, theorem5_hypotheses, theorem5_predict};
use cyclocode::poly::{factor_xn_minus_1, factorize, parse_poly, poly_order};
use cyclocode::report::divisors_of_xn_minus_1;
use cyclocode::structure::{
    all_claims, corollary4_counts, corollary6_verify, equidistance_check, lemma1_verify,
    theorem1_verify, theorem2_predict, ClaimId, CodeStructure, PredictionReport,
};
use cyclocode::{FieldElement, Poly};

/// Stratum claims contradicted by enumeration; see the decisions ledger.
const KNOWN_FAILURES: &[u32] = &[8];

const BATTERY: &[(u64, u64)] = &[(3, 4), (3, 8), (3, 13), (4, 5), (5, 8)];

/// Large enough for `x^13 - 1` over GF(3), `3^13` codewords.
const BATTERY_BUDGET: Budget = Budget(1 << 21);

struct Analyzed {
    q: u64,
    battery_n: u64,
    code: CodeSpec,
    structure: CodeStructure,
    claims: Vec<PredictionReport>,
}

fn battery() -> &'static [Analyzed] {
    static CELL: OnceLock<Vec<Analyzed>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for &(q, n) in BATTERY {
            let field = gf(q);
            for h in divisors_of_xn_minus_1(&field, n, false, 0).unwrap() {
                let code = CodeSpec::from_parity_check(&field, &h).unwrap();
                let structure = CodeStructure::analyze(&code, BATTERY_BUDGET).unwrap();
                let claims = all_claims(&code, &structure).unwrap();
                out.push(Analyzed {
                    q,
                    battery_n: n,
                    code,
                    structure,
                    claims,
                });
            }
        }
        out
    })
}

fn code(q: u64, h: &str) -> CodeSpec {
    let f = gf(q);
    CodeSpec::from_parity_check(&f, &parse_poly(&f, h).unwrap()).unwrap()
}

type Check = std::result::Result<String, String>;

/// Criterion number, short name and check.
type Criterion = (u32, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn distance_case(q: u64, h: &str, expect: i128, single_weight: bool) -> Check {
    let c = code(q, h);
    let inst = theorem5_hypotheses(&c).map_err(|r| format!("hypotheses rejected: {r}"))?;
    let predicted = theorem5_predict(&inst).map_err(|e| e.to_string())?;
    let brute = min_distance_bruteforce(&c, Budget::DEFAULT).map_err(|e| e.to_string())?;
    let oracle = brute_min_distance(&c);
    let weights = brute_weights(&c);
    ensure(predicted == expect, || {
        format!("predicted {predicted}, expected {expect}")
    })?;
    ensure(brute as i128 == expect && oracle as i128 == expect, || {
        format!("bruteforce {brute}, oracle {oracle}, expected {expect}")
    })?;
    ensure(!single_weight || weights.len() == 1, || {
        format!("weights {weights:?}")
    })?;
    Ok(format!(
        "n={} predicted={predicted} bruteforce={brute} weights={weights:?}",
        c.n()
    ))
}

fn criterion1() -> Check {
    let out = distance_case(3, "x^2+x+2", 6, true)?;
    let w = brute_weights(&code(3, "x^2+x+2"));
    ensure(w == BTreeMap::from([(6, 8)]), || format!("weights {w:?}"))?;
    Ok(out)
}

fn criterion2() -> Check {
    distance_case(4, "x^2+g*x+1", 4, true)
}

fn criterion3() -> Check {
    // (x+1)(x^2+x+2) over GF(3)
    let out = distance_case(3, "x^3+2*x^2+2", 5, false)?;
    let c = code(3, "x^3+2*x^2+2");
    ensure(c.n() == 8 && c.m() == 3, || {
        format!("n={} m={}", c.n(), c.m())
    })?;
    Ok(out)
}

fn criterion4() -> Check {
    let mut strata = 0;
    let mut bad = Vec::new();
    for a in battery() {
        for s in &a.structure.strata {
            strata += 1;
            if !lemma1_verify(s, &a.code) {
                bad.push(format!("GF({}) h={} c={}", a.q, a.code.h(), s.c));
            }
        }
    }
    ensure(bad.is_empty(), || {
        format!("{} violations: {:?}", bad.len(), bad)
    })?;
    Ok(format!(
        "{} codes, {strata} strata, 0 violations",
        battery().len()
    ))
}

fn criterion5() -> Check {
    let mut words = 0;
    let mut violations = 0;
    for a in battery() {
        let r = theorem1_verify(&a.code, &a.structure).map_err(|e| e.to_string())?;
        words += r.measured["words"].as_u64().unwrap();
        violations += r.measured["violations"].as_u64().unwrap();
    }
    ensure(violations == 0, || {
        format!("{violations} violations over {words} words")
    })?;
    Ok(format!("{words} nonzero codewords, 0 violations"))
}

fn criterion6() -> Check {
    let c = code(3, "x^2+1");
    let st = CodeStructure::analyze(&c, Budget::DEFAULT).map_err(|e| e.to_string())?;
    let t2 = theorem2_predict(&c, &st).map_err(|e| e.to_string())?;
    ensure(t2.applicable && t2.matches, || format!("T2 {t2:?}"))?;
    ensure(t2.predicted["d"] == 2 && t2.predicted["r"] == 2, || {
        format!(
            "T2 predicted {}",
            serde_json::to_string(&t2.predicted).unwrap_or_default()
        )
    })?;
    let w = brute_weights(&c);
    ensure(w == BTreeMap::from([(2, 4), (4, 4)]), || {
        format!("weights {w:?}")
    })?;
    ensure(st.weights() == w, || {
        "stratum weights disagree with oracle".into()
    })?;
    ensure(
        corollary6_verify(&c, &st).map_err(|e| e.to_string())?,
        || "weights not multiples of d".into(),
    )?;
    let c4 = corollary4_counts(&c, &st).map_err(|e| e.to_string())?;
    ensure(c4.matches, || format!("C4 {c4:?}"))?;
    let m = &c4.measured;
    ensure(
        m["s"] == 2 && m["b"] == 1 && m["v"] == 2 && m["gcd(r,b)"] == 1,
        || format!("C4 measured {m:?}"),
    )?;
    let c5 = equidistance_check(&c, &st).map_err(|e| e.to_string())?;
    let flags = ["s=b", "r=R", "gcd(s,R)=1"].map(|k| c5.measured[k].as_bool().unwrap());
    ensure(flags == [false; 3], || format!("C5 flags {flags:?}"))?;
    ensure(c5.matches, || format!("C5 {c5:?}"))?;
    Ok("(d, r) = (2, 2); weights {2: 4, 4: 4}; s=2 b=1 v=2; all equidistance flags false".into())
}

fn flags_of(r: &PredictionReport) -> [bool; 3] {
    ["s=b", "r=R", "gcd(s,R)=1"].map(|k| r.measured[k].as_bool().unwrap())
}

fn criterion7() -> Check {
    let mut checked = 0;
    let mut bad = Vec::new();
    for a in battery() {
        let mut reports = Vec::new();
        if a.code.t() == 1 && !a.code.factors()[0].primitive {
            reports.push(equidistance_check(&a.code, &a.structure).map_err(|e| e.to_string())?);
        }
        if a.q == 3 && a.battery_n == 13 {
            reports.extend(
                a.claims
                    .iter()
                    .filter(|c| c.id == ClaimId::C7b && c.applicable)
                    .cloned(),
            );
        }
        for r in reports {
            checked += 1;
            let flags = flags_of(&r);
            let single = if r.id == ClaimId::C5 {
                r.measured["equidistant"].as_bool().unwrap()
            } else {
                r.measured["single_weight"].as_bool().unwrap()
            };
            if !flags.iter().all(|&f| f == single) {
                bad.push(format!(
                    "GF({}) h={} {} {}: flags {flags:?}, single weight {single}",
                    a.q,
                    a.code.h(),
                    r.id,
                    r.stratum.as_deref().unwrap_or("-")
                ));
            }
        }
    }
    ensure(bad.is_empty(), || {
        format!("{} disagreements: {:?}", bad.len(), bad)
    })?;
    Ok(format!("{checked} codes/strata, 0 disagreements"))
}

fn criterion8() -> Check {
    let mut counts: BTreeMap<ClaimId, (usize, usize)> = BTreeMap::new();
    let mut by_pair: BTreeMap<(ClaimId, u64, u64), (usize, usize)> = BTreeMap::new();
    let mut bad = Vec::new();
    for a in battery() {
        for r in &a.claims {
            if !matches!(r.id, ClaimId::T3 | ClaimId::T4 | ClaimId::C7a | ClaimId::C8)
                || !r.applicable
            {
                continue;
            }
            let entry = counts.entry(r.id).or_default();
            let pair = by_pair.entry((r.id, a.q, a.battery_n)).or_default();
            entry.0 += 1;
            pair.0 += 1;
            if !r.matches {
                entry.1 += 1;
                pair.1 += 1;
                let line = format!(
                    "GF({}) c={} {}: predicted {} measured {}",
                    a.q,
                    r.stratum.as_deref().unwrap_or("-"),
                    r.id,
                    serde_json::to_string(&r.predicted).unwrap_or_default(),
                    serde_json::to_string(&r.measured).unwrap_or_default()
                );
                if bad.len() < 6 && !bad.contains(&line) {
                    bad.push(line);
                }
            }
        }
    }
    let summary: Vec<String> = counts
        .iter()
        .map(|(id, (n, f))| format!("{id}: {f}/{n} mismatched"))
        .collect();
    let breakdown: Vec<String> = by_pair
        .iter()
        .map(|((id, q, n), (total, f))| format!("{id}@({q},{n}) {f}/{total}"))
        .collect();
    ensure(counts.values().all(|&(_, f)| f == 0), || {
        format!(
            "{}; by battery pair: {}; first mismatches: {}",
            summary.join(", "),
            breakdown.join(", "),
            bad.join(" | ")
        )
    })?;
    Ok(summary.join(", "))
}

fn random_poly(rng: &mut ChaCha8Rng, field: &cyclocode::FieldSpec, deg: usize) -> Poly {
    let q = field.order();
    let mut coeffs: Vec<FieldElement> = (0..deg)
        .map(|_| field.element(rng.gen_range(0..q)).unwrap())
        .collect();
    coeffs.push(field.element(rng.gen_range(1..q)).unwrap());
    Poly::new(field, coeffs)
}

fn criterion9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut oracle_checked = 0;
    let mut order_checked = 0;
    let mut xn_checked = 0;
    for q in [3u64, 4, 5, 9] {
        let field = gf(q);
        for _ in 0..1000 {
            let deg = rng.gen_range(1..=8);
            let f = random_poly(&mut rng, &field, deg);
            let fac = factorize(&f).map_err(|e| e.to_string())?;
            ensure(fac.product() == f, || {
                format!("GF({q}): product mismatch for {f}")
            })?;
            ensure(fac.factors.iter().all(|(p, _)| p.is_monic()), || {
                format!("GF({q}): non-monic factor of {f}")
            })?;
            if deg <= 4 {
                let oracle = trial_factor(&f);
                ensure(fac.factors == oracle, || {
                    format!(
                        "GF({q}): {f} factors {:?} vs oracle {:?}",
                        fac.factors, oracle
                    )
                })?;
                oracle_checked += 1;
            }
        }
        let mut m = 1;
        while (q as u128).pow(m) - 1 <= 10_000 {
            for _ in 0..40 {
                let f = random_poly(&mut rng, &field, m as usize);
                if f.coeff(0).is_zero() {
                    continue;
                }
                let got = poly_order(&f).map_err(|e| e.to_string())?;
                let want = scan_order(&f);
                ensure(got == want, || {
                    format!("GF({q}): ord({f}) = {got}, scan gives {want}")
                })?;
                order_checked += 1;
            }
            m += 1;
        }
        for n in 1..=50u64 {
            if cyclocode::arith::gcd(n, q) != 1 {
                continue;
            }
            let mut degs = factor_xn_minus_1(&field, n)
                .map_err(|e| e.to_string())?
                .degrees();
            degs.sort();
            let cosets = coset_sizes(q, n);
            ensure(degs == cosets, || {
                format!("GF({q}) n={n}: degrees {degs:?} vs cosets {cosets:?}")
            })?;
            xn_checked += 1;
        }
    }
    Ok(format!(
        "4000 factorizations ({oracle_checked} against trial division), {order_checked} orders, {xn_checked} x^n-1 splittings"
    ))
}

fn criterion10() -> Check {
    let bin = env!("CARGO_BIN_EXE_cyclocode");
    let run = |threads: &str| -> std::result::Result<Vec<u8>, String> {
        let out = Command::new(bin)
            .args([
                "analyze",
                "--q",
                "3",
                "--h",
                "x^2+x+2",
                "--json",
                "--threads",
                threads,
            ])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("exit {:?}", out.status.code())
        })?;
        Ok(out.stdout)
    };
    let a = run("1")?;
    let b = run("1")?;
    let c = run("4")?;
    ensure(a == b, || "two runs differ".into())?;
    ensure(a == c, || "1 and 4 threads differ".into())?;
    Ok(format!("{} bytes identical across 3 runs", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "minimum distance, t = 1, b = 1", criterion1),
        (2, "minimum distance, t = 1, b = 3", criterion2),
        (3, "minimum distance, t = 2", criterion3),
        (4, "stratum counting identity over the battery", criterion4),
        (5, "per-word orbit constants over the battery", criterion5),
        (
            6,
            "irreducible nonprimitive orbit counts, GF(3) x^2+1",
            criterion6,
        ),
        (7, "equidistance criteria agree with weights", criterion7),
        (
            8,
            "stratum orbit formulas and order divisibility",
            criterion8,
        ),
        (9, "algebra substrate against oracles", criterion9),
        (10, "report determinism", criterion10),
    ];
    let mut unexpected = 0;
    for (id, name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let known = KNOWN_FAILURES.contains(&id);
        let (tag, detail) = match (&outcome, known) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("PASS (listed as known failure)", d.clone()),
            (Err(e), true) => ("FAIL (known, recorded)", e.clone()),
            (Err(e), false) => {
                unexpected += 1;
                ("FAIL", e.clone())
            }
        };
        println!("criterion {id:>2} [{name}]: {tag}: {detail}");
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
