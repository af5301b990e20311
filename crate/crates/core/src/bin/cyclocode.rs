use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cyclocode::code::Budget;
use cyclocode::poly::parse_poly;
use cyclocode::report::{self, Options, Predicates};
use cyclocode::{Error, FieldSpec, Result};

/// Cyclic codes over GF(q): orbit structure, strata and minimum distance.
#[derive(Parser)]
#[command(name = "cyclocode", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArgs {
    /// Field order, a prime power.
    #[arg(long, conflicts_with_all = ["p", "e"])]
    q: Option<u64>,
    /// Field characteristic (with --e).
    #[arg(long, requires = "e")]
    p: Option<u64>,
    /// Extension degree (with --p).
    #[arg(long, requires = "p")]
    e: Option<u32>,
}

impl FieldArgs {
    fn field(&self) -> Result<FieldSpec> {
        match (self.q, self.p, self.e) {
            (Some(q), _, _) => FieldSpec::from_order(q),
            (None, Some(p), Some(e)) => FieldSpec::new(p, e),
            _ => Err(Error::Parse(
                "give the field as --q or as --p and --e".into(),
            )),
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Maximum number of codewords to enumerate per code.
    #[arg(long)]
    budget: Option<u64>,
    /// Seed for randomized factorization.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    threads: Option<usize>,
}

impl RunArgs {
    fn options(&self) -> Options {
        Options {
            budget: self.budget.map(Budget).unwrap_or_else(Budget::from_env),
            seed: self.seed,
            threads: self.threads,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full report for the code with parity-check polynomial h.
    Analyze {
        #[command(flatten)]
        field: FieldArgs,
        /// Parity-check polynomial, e.g. "x^2+x+2" or "x^2+g*x+1".
        #[arg(
            long,
            conflicts_with = "h_coeffs",
            required_unless_present = "h_coeffs"
        )]
        h: Option<String>,
        /// Parity-check polynomial as a coefficient list [c0,c1,...].
        #[arg(long)]
        h_coeffs: Option<String>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check every claim on the divisors of x^n-1.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: u64,
        /// Every divisor instead of only the irreducible ones.
        #[arg(long)]
        all_divisors: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Irreducible factors of x^n-1 with order, primitivity and (r, d).
    Factor {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Catalog of codes over a range of lengths.
    Search {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 1)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        /// Only codes with a single nonzero weight.
        #[arg(long)]
        equidistant: bool,
        /// Only codes without primitive factors.
        #[arg(long)]
        nonprimitive: bool,
        /// Only irreducible parity-check polynomials.
        #[arg(long)]
        irreducible: bool,
        #[command(flatten)]
        run: RunArgs,
    },
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze {
            field,
            h,
            h_coeffs,
            run,
        } => {
            let field = field.field()?;
            let text = h
                .or(h_coeffs)
                .expect("clap requires one of --h, --h-coeffs");
            let h = parse_poly(&field, &text)?;
            let rep = report::analyze(&field, &h, &run.options())?;
            print(run.json, rep.to_json(), rep.render_text());
            Ok(true)
        }
        Command::Verify {
            field,
            n,
            all_divisors,
            run,
        } => {
            let summary = report::verify(&field.field()?, n, all_divisors, &run.options())?;
            print(run.json, summary.to_json(), summary.render_text());
            Ok(summary.passed())
        }
        Command::Factor { field, n, run } => {
            let table = report::factor_table(&field.field()?, n, &run.options())?;
            print(run.json, table.to_json(), table.render_text());
            Ok(true)
        }
        Command::Search {
            field,
            n_min,
            n_max,
            equidistant,
            nonprimitive,
            irreducible,
            run,
        } => {
            let preds = Predicates {
                equidistant,
                nonprimitive,
                irreducible,
            };
            let catalog = report::search(&field.field()?, n_min, n_max, preds, &run.options())?;
            print(run.json, catalog.to_json(), catalog.render_text());
            Ok(true)
        }
    }
}

/// Writes the report; a closed stdout (for example `| head`) is not an error.
fn print(json: bool, json_text: String, text: String) {
    let mut out = std::io::stdout().lock();
    let _ = if json {
        writeln!(out, "{json_text}")
    } else {
        write!(out, "{text}")
    };
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
