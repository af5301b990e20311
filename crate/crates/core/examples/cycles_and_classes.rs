//! Shift-cycles and proportionality classes of the ternary code with
//! parity-check polynomial x^2+1.

use cyclocode::code::{partition_classes, partition_cycles, Budget};
use cyclocode::poly::parse_poly;
use cyclocode::{CodeSpec, FieldSpec};

fn main() -> cyclocode::Result<()> {
    let f = FieldSpec::from_order(3)?;
    let code = CodeSpec::from_parity_check(&f, &parse_poly(&f, "x^2+1")?)?;
    println!("n = {}, m = {}, g = {}", code.n(), code.m(), code.g());
    for c in partition_cycles(&code, Budget::DEFAULT)? {
        println!(
            "cycle {} period {} weight {} r {} d {} alpha {}",
            c.representative,
            c.period,
            c.weight,
            c.r,
            c.d,
            c.alpha.index()
        );
    }
    for c in partition_classes(&code, Budget::DEFAULT)? {
        println!(
            "class {} weight {} support {:?}",
            c.monic_rep, c.weight, c.support
        );
    }
    Ok(())
}
