use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use piwb::cli::{error_report, exit_code, load_problem, run_command, Command, Invocation};

#[derive(Parser)]
#[command(
    name = "piwb",
    version,
    about = "Exact computations with polynomial identities of finite-dimensional algebras"
)]
struct Args {
    /// Problem file (JSON).
    problem: PathBuf,

    /// Named structure from the problem file (trivial when omitted).
    #[arg(long, global = true)]
    structure: Option<String>,

    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Print only the JSON report.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the algebra axioms and every structure.
    Validate,
    /// Radical, its nilpotency index and the semisimple quotient.
    Radical,
    /// Decomposition of a semisimple algebra into (invariant) simple ideals.
    Decompose,
    /// Invariant Wedderburn–Mal'cev complement.
    WedderburnMalcev,
    /// Invariant Levi complement.
    Levi,
    /// Exponent from the structural formula.
    Exponent,
    /// Lie exponent over the default chain and the chains in the file.
    LieExponent {
        #[arg(long)]
        chains: bool,
        #[arg(long)]
        q_max: Option<usize>,
    },
    /// Codimension c_n.
    Codim {
        #[arg(long)]
        n: usize,
    },
    /// Codimensions c_1..c_N with the root trend.
    CodimSeries {
        #[arg(long)]
        n_max: usize,
    },
    /// Whether a named polynomial is an identity.
    CheckIdentity {
        #[arg(long)]
        poly: String,
    },
    /// Cocharacter multiplicities in degree n.
    Cocharacter {
        #[arg(long)]
        n: usize,
    },
    /// Cross-check exponent = dim against structure-simplicity.
    CheckSimple,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(t) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("warning: {e}");
        }
    }
    let command = match args.command {
        Cmd::Validate => Command::Validate,
        Cmd::Radical => Command::Radical,
        Cmd::Decompose => Command::Decompose,
        Cmd::WedderburnMalcev => Command::WedderburnMalcev,
        Cmd::Levi => Command::Levi,
        Cmd::Exponent => Command::Exponent,
        Cmd::LieExponent { chains, q_max } => Command::LieExponent { chains, q_max },
        Cmd::Codim { n } => Command::Codim { n },
        Cmd::CodimSeries { n_max } => Command::CodimSeries { n_max },
        Cmd::CheckIdentity { poly } => Command::CheckIdentity { poly },
        Cmd::Cocharacter { n } => Command::Cocharacter { n },
        Cmd::CheckSimple => Command::CheckSimple,
    };
    let inv = Invocation {
        command,
        structure: args.structure,
    };
    let result = load_problem(&args.problem).and_then(|p| run_command(&p, &inv));
    // Write errors (a closed pipe) are ignored; the exit code still reports
    // the outcome.
    let mut out = std::io::stdout().lock();
    match result {
        Ok(report) => {
            if !args.json {
                let _ = writeln!(out, "{}", report.text);
                for f in &report.flags {
                    let _ = writeln!(out, "  note: {f}");
                }
                let _ = writeln!(out);
            }
            let _ = writeln!(out, "{}", report.json());
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = exit_code(&e);
            if !args.json {
                eprintln!("error: {e}");
            }
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&error_report(&inv.render(), &e)).unwrap()
            );
            ExitCode::from(code as u8)
        }
    }
}
