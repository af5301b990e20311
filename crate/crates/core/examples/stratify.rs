//! Strata of a reducible parity-check polynomial with the stratum-level
//! predictions next to the measured orbit constants.

use cyclocode::code::Budget;
use cyclocode::poly::parse_poly;
use cyclocode::structure::{lemma1_verify, theorem3_predict, theorem4_predict, CodeStructure};
use cyclocode::{CodeSpec, FieldSpec};

fn main() -> cyclocode::Result<()> {
    let f = FieldSpec::from_order(5)?;
    // (x - 1)(x^2 + x + 1)
    let h = parse_poly(&f, "x^3+4")?;
    let code = CodeSpec::from_parity_check(&f, &h)?;
    let st = CodeStructure::analyze(&code, Budget::DEFAULT)?;
    println!("h = {} has order {}", code.h(), code.n());
    for s in &st.strata {
        let t3 = theorem3_predict(s, &code)?;
        let t4 = theorem4_predict(s, &code);
        println!(
            "c = {:<12} n_c {} |C| {} R_c {} s_c {} (r_c, d_c) = ({}, {}) lemma {} T3 {}/{} T4 {}/{}",
            s.c.to_string(),
            s.n_c,
            s.size,
            s.classes,
            s.cycles,
            s.r_c,
            s.d_c,
            lemma1_verify(s, &code),
            t3.applicable,
            t3.matches,
            t4.applicable,
            t4.matches
        );
    }
    Ok(())
}
