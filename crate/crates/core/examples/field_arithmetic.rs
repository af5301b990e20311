//! Arithmetic in GF(9): the defining polynomial, a primitive element, and
//! the element syntax accepted by the parser.

use cyclocode::poly::{format_element, parse_element};
use cyclocode::FieldSpec;

fn main() -> cyclocode::Result<()> {
    let f = FieldSpec::new(3, 2)?;
    println!("{f} with modulus coefficients {:?}", f.modulus());
    let g = f.primitive_element();
    println!("primitive element g = {:?}", f.residues(g));
    for k in 0..8 {
        let a = f.generator_power(k);
        println!(
            "g^{k} = {:?} (order {})",
            f.residues(a),
            f.element_order(a)?
        );
    }
    let a = parse_element(&f, "[1,2]")?;
    let b = parse_element(&f, "g^3")?;
    println!("[1,2] * g^3 = {}", format_element(&f, f.mul(a, b)));
    println!("1 / [1,2] = {}", format_element(&f, f.inv(a)?));
    Ok(())
}
