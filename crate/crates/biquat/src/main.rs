use std::io::{self, Write};
use std::time::Instant;

use biquat::cli::{
    cmd_classify, cmd_eval, cmd_repr, cmd_tables, cmd_verify, ReprForm, TableKind,
};
use biquat::verify::VerifyOptions;
use clap::{ArgGroup, Parser, Subcommand};

/// Biquaternion calculator: evaluate expressions over 1, i, j, k and the
/// commuting imaginary unit I, classify values, print representations and
/// tables, and check the algebra's identities on seeded random samples.
#[derive(Parser)]
#[command(name = "biquat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print the canonical cartesian form
    Eval {
        expr: String,
        /// Emit the eight real components as a flat JSON object
        #[arg(long)]
        json: bool,
    },
    /// Evaluate an expression and report which special classes the value is in
    Classify {
        expr: String,
        /// Emit components and classification booleans as a flat JSON object
        #[arg(long)]
        json: bool,
    },
    /// Evaluate an expression and print one of its representations
    Repr {
        expr: String,
        /// cartesian, sv, cf1, cf2, cd, sym, hpolar, cpolar or geom
        #[arg(long)]
        form: String,
    },
    /// Print the basis multiplication table or the grade composition table
    #[command(group(ArgGroup::new("which").required(true).args(["basis", "grades"])))]
    Tables {
        /// The 8x8 basis product grid
        #[arg(long)]
        basis: bool,
        /// The grade-of-product grid, with discrepancy notes
        #[arg(long)]
        grades: bool,
    },
    /// Run the seeded identity suite; exit 0 iff every identity passes
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval { expr, json } => cmd_eval(&expr, json),
        Command::Classify { expr, json } => cmd_classify(&expr, json),
        Command::Repr { expr, form } => match ReprForm::parse(&form) {
            Ok(form) => cmd_repr(&expr, form),
            Err(message) => {
                eprintln!("{message}");
                std::process::exit(2);
            }
        },
        Command::Tables { basis, grades: _ } => {
            cmd_tables(if basis { TableKind::Basis } else { TableKind::Grades })
        }
        Command::Verify { seed, samples, tol, json } => {
            let start = Instant::now();
            let outcome = cmd_verify(VerifyOptions { seed, samples, tol }, json);
            // timing stays off stdout so reports are byte-identical across runs
            eprintln!("wall time: {:.3}s", start.elapsed().as_secs_f64());
            outcome
        }
    };
    let written = if outcome.is_error_output() {
        writeln!(io::stderr().lock(), "{}", outcome.text())
    } else {
        writeln!(io::stdout().lock(), "{}", outcome.text())
    };
    if let Err(e) = written {
        // a closed pipe (e.g. `biquat tables --basis | head`) is not a failure
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
    }
    std::process::exit(outcome.exit_code());
}
