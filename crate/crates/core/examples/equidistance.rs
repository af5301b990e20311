//! Equidistance criteria for irreducible nonprimitive codes against their
//! weight distributions.

use cyclocode::code::Budget;
use cyclocode::poly::parse_poly;
use cyclocode::structure::{equidistance_check, CodeStructure};
use cyclocode::{CodeSpec, FieldSpec};

fn main() -> cyclocode::Result<()> {
    for (q, h) in [
        (4, "x^2+g*x+1"),
        (3, "x^2+1"),
        (5, "x^2+2"),
        (3, "x^3+2*x+1"),
    ] {
        let f = FieldSpec::from_order(q)?;
        let code = CodeSpec::from_parity_check(&f, &parse_poly(&f, h)?)?;
        let st = CodeStructure::analyze(&code, Budget::DEFAULT)?;
        let r = equidistance_check(&code, &st)?;
        println!(
            "GF({q}) h = {h} n = {}: weights {:?}",
            code.n(),
            st.weights()
        );
        for (k, v) in &r.measured {
            println!("  {k:<12} {v}");
        }
    }
    Ok(())
}
