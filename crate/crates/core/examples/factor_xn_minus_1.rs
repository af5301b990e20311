//! Splits x^n - 1 over GF(q) and lines the factor degrees up with the
//! q-cyclotomic cosets mod n.

use cyclocode::poly::{cyclotomic_cosets, factor_xn_minus_1, is_primitive, poly_order};
use cyclocode::FieldSpec;

fn main() -> cyclocode::Result<()> {
    for (q, n) in [(3, 8), (4, 5), (3, 13), (5, 12)] {
        let f = FieldSpec::from_order(q)?;
        println!("x^{n}-1 over {f}");
        for (p, _) in factor_xn_minus_1(&f, n)?.factors {
            println!(
                "  {p:<24} order {:>3} primitive {}",
                poly_order(&p)?,
                is_primitive(&p)?
            );
        }
        let sizes: Vec<usize> = cyclotomic_cosets(q, n)?.iter().map(Vec::len).collect();
        println!("  coset sizes {sizes:?}");
    }
    Ok(())
}
