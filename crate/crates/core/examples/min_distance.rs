//! Closed-form minimum distance against exhaustive search.

use cyclocode::code::Budget;
use cyclocode::distance::{min_distance_bruteforce, theorem5_hypotheses, theorem5_predict};
use cyclocode::poly::parse_poly;
use cyclocode::{CodeSpec, FieldSpec};

fn main() -> cyclocode::Result<()> {
    let cases = [
        (3, "x^2+x+2"),
        (4, "x^2+g*x+1"),
        (3, "x^3+2*x^2+2"),
        (3, "x^2+1"),
        (3, "x^4+2*x^3+x+1"),
    ];
    for (q, h) in cases {
        let f = FieldSpec::from_order(q)?;
        let code = CodeSpec::from_parity_check(&f, &parse_poly(&f, h)?)?;
        let brute = min_distance_bruteforce(&code, Budget::DEFAULT)?;
        match theorem5_hypotheses(&code) {
            Ok(inst) => println!(
                "GF({q}) h = {h}: degrees {:?}, predicted {}, exhaustive {brute}",
                inst.degrees(),
                theorem5_predict(&inst)?
            ),
            Err(reason) => println!("GF({q}) h = {h}: not covered ({reason}), exhaustive {brute}"),
        }
    }
    Ok(())
}
