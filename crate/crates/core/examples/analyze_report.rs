//! The JSON report the command-line `analyze` subcommand prints.

use cyclocode::poly::parse_poly;
use cyclocode::report::{analyze, Options};
use cyclocode::FieldSpec;

fn main() -> cyclocode::Result<()> {
    let f = FieldSpec::from_order(4)?;
    let report = analyze(&f, &parse_poly(&f, "x^2+g*x+1")?, &Options::default())?;
    println!("{}", report.to_json());
    eprintln!(
        "{} claims, {} failing",
        report.claims.len(),
        report.failures().len()
    );
    Ok(())
}
