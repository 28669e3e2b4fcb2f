//! Problem-file ingestion, command dispatch and report rendering.

pub mod problem;

pub use problem::{load_problem, ProblemFile, ProblemSpec};

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra_core::AlgebraKind;
use crate::cocharacter::cocharacter;
use crate::codimension::{codim, codim_series, is_identity};
use crate::decomposition::{
    invariant_levi, invariant_simple_decomposition, invariant_wedderburn_malcev, simple_ideal_decomposition,
};
use crate::equivariance::Structure;
use crate::error::{Error, Result};
use crate::exponent::{associative_exponent, lie_exponent_from_chains, simplicity_criterion_report};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INCONSISTENCY: i32 = 4;

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Validation(_) | Error::Parse { .. } | Error::Dimension(_) | Error::InvalidField(_) => EXIT_VALIDATION,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Inconsistency(_) => EXIT_INCONSISTENCY,
        _ => EXIT_ERROR,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Radical,
    Decompose,
    WedderburnMalcev,
    Levi,
    Exponent,
    LieExponent { chains: bool, q_max: Option<usize> },
    Codim { n: usize },
    CodimSeries { n_max: usize },
    CheckIdentity { poly: String },
    Cocharacter { n: usize },
    CheckSimple,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Radical => "radical",
            Command::Decompose => "decompose",
            Command::WedderburnMalcev => "wedderburn-malcev",
            Command::Levi => "levi",
            Command::Exponent => "exponent",
            Command::LieExponent { .. } => "lie-exponent",
            Command::Codim { .. } => "codim",
            Command::CodimSeries { .. } => "codim-series",
            Command::CheckIdentity { .. } => "check-identity",
            Command::Cocharacter { .. } => "cocharacter",
            Command::CheckSimple => "check-simple",
        }
    }

    fn args(&self) -> String {
        match self {
            Command::LieExponent { chains, q_max } => {
                let mut s = String::new();
                if *chains {
                    s.push_str(" --chains");
                }
                if let Some(q) = q_max {
                    let _ = write!(s, " --q-max {q}");
                }
                s
            }
            Command::Codim { n } | Command::Cocharacter { n } => format!(" --n {n}"),
            Command::CodimSeries { n_max } => format!(" --n-max {n_max}"),
            Command::CheckIdentity { poly } => format!(" --poly {poly}"),
            _ => String::new(),
        }
    }
}

/// A command with the structure it applies to.
#[derive(Clone, Debug)]
pub struct Invocation {
    pub command: Command,
    pub structure: Option<String>,
}

impl Invocation {
    pub fn new(command: Command) -> Invocation {
        Invocation {
            command,
            structure: None,
        }
    }

    pub fn with_structure(mut self, name: impl Into<String>) -> Invocation {
        self.structure = Some(name.into());
        self
    }

    pub fn render(&self) -> String {
        let mut s = format!("{}{}", self.command.name(), self.command.args());
        if let Some(name) = &self.structure {
            let _ = write!(s, " --structure {name}");
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    /// SHA-256 of the problem's canonical JSON and the command line.
    pub inputs_digest: String,
    pub engine_version: String,
    pub flags: Vec<String>,
    pub results: Value,
    pub elapsed_ms: f64,
    #[serde(skip)]
    pub text: String,
}

impl RunReport {
    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Digest identifying a problem and command.
pub fn inputs_digest(problem: &ProblemFile, inv: &Invocation) -> Result<String> {
    let canonical = serde_json::to_string(&problem.spec)?;
    let mut h = Sha256::new();
    h.update(canonical.as_bytes());
    h.update(b"\n");
    h.update(inv.render().as_bytes());
    Ok(hex::encode(h.finalize()))
}

struct Outcome {
    text: String,
    results: Value,
    flags: Vec<String>,
}

fn outcome(text: String, results: impl Serialize, flags: Vec<String>) -> Result<Outcome> {
    Ok(Outcome {
        text,
        results: serde_json::to_value(results)?,
        flags,
    })
}

fn dispatch(p: &ProblemFile, inv: &Invocation) -> Result<Outcome> {
    let a = &p.algebra;
    let s = p.structure(inv.structure.as_deref())?;
    match &inv.command {
        Command::Validate => {
            let reports: Vec<Value> = std::iter::once(json!({"name": "algebra", "report": a.validate()}))
                .chain(
                    p.structures
                        .iter()
                        .map(|(n, st)| json!({"name": n, "report": st.validate(a)})),
                )
                .collect();
            let text = format!(
                "valid: {}-dimensional {} algebra over Q(z_{}), {} structure(s)",
                a.dim(),
                a.kind(),
                p.field.conductor(),
                p.structures.len()
            );
            outcome(text, reports, Vec::new())
        }
        Command::Radical => {
            let r = a.radical()?;
            let text = format!(
                "radical: dim {}, nilpotency index {}, semisimple quotient dim {}",
                r.radical.dim(),
                r.nilpotency_index,
                r.semisimple_quotient_dim
            );
            outcome(text, r.summary(a), Vec::new())
        }
        Command::Decompose => {
            let d = match s {
                Structure::Trivial => simple_ideal_decomposition(a)?,
                _ => invariant_simple_decomposition(a, &s)?,
            };
            d.verify(a)?;
            let text = format!("components: dims {:?}", d.dims());
            outcome(text, d.summary(a), Vec::new())
        }
        Command::WedderburnMalcev | Command::Levi => {
            let r = if inv.command == Command::Levi {
                invariant_levi(a, &s)?
            } else {
                invariant_wedderburn_malcev(a, &s)?
            };
            r.verify(a, &s)?;
            let text = format!(
                "complement dim {}, radical dim {}, {} correction stage(s); verified",
                r.complement.dim(),
                r.radical.dim(),
                r.stages
            );
            outcome(text, r.summary(a), Vec::new())
        }
        Command::Exponent => match a.kind() {
            AlgebraKind::Associative => {
                let r = associative_exponent(a, &s)?;
                let text = format!(
                    "exponent d = {} (component dims {:?}, witness {:?})",
                    r.d,
                    r.component_dims(),
                    r.witness
                );
                outcome(text, r.summary(), r.flags.clone())
            }
            AlgebraKind::Lie => {
                let r = lie_exponent_from_chains(a, &s, &[], None)?;
                let text = format!("exponent d = {} (default chain)", r.d);
                let flags = r.flags.clone();
                outcome(text, r, flags)
            }
        },
        Command::LieExponent { chains, q_max } => {
            let chains = if *chains { p.chains()? } else { Vec::new() };
            let r = lie_exponent_from_chains(a, &s, &chains, *q_max)?;
            let mut text = format!("exponent d = {} over {} chain(s)", r.d, r.chains.len());
            for (k, c) in r.chains.iter().enumerate() {
                let _ = write!(text, "\n  chain {k}: pairs {:?}, value {:?}", c.pair_dims, c.value);
                if let Some(note) = &c.note {
                    let _ = write!(text, " ({note})");
                }
            }
            let flags = r.flags.clone();
            outcome(text, r, flags)
        }
        Command::Codim { n } => {
            let r = codim(a, &s, *n)?;
            let mut text = format!(
                "c_{n} = {} ({:?} regime, {} rows, {} columns)",
                r.value, r.regime, r.rows, r.cols
            );
            if let Some(b) = &r.breakdown {
                let parts: Vec<String> = b.iter().map(|blk| format!("{:?}: {}", blk.labels, blk.rank)).collect();
                let _ = write!(text, "\n  breakdown {}", parts.join(", "));
            }
            outcome(text, r, Vec::new())
        }
        Command::CodimSeries { n_max } => {
            let r = codim_series(a, &s, *n_max)?;
            let trend: Vec<String> = r.root_trend.iter().map(|x| format!("{x:.3}")).collect();
            let text = format!(
                "c_n = {:?}\n  c_n^(1/n) = [{}]\n  exponent formula: {}",
                r.values,
                trend.join(", "),
                r.predicted_exponent
                    .map_or("unavailable".to_string(), |d| d.to_string())
            );
            outcome(text, r, Vec::new())
        }
        Command::CheckIdentity { poly } => {
            let (ps, f) = p.polynomial(poly)?;
            let r = is_identity(a, &ps, &f)?;
            let mut text = format!("identity: {} ({} substitutions checked)", r.identity, r.checked);
            if let Some(w) = &r.witness {
                let subs: Vec<String> = w.iter().map(|(x, b)| format!("{x} = {b}")).collect();
                let _ = write!(
                    text,
                    "\n  witness: {}; value {}",
                    subs.join(", "),
                    r.value.as_deref().unwrap_or("?")
                );
            }
            outcome(text, r, Vec::new())
        }
        Command::Cocharacter { n } => {
            let r = cocharacter(a, &s, *n)?;
            let mults: Vec<String> = r
                .multiplicities
                .iter()
                .filter(|(_, m)| *m > 0)
                .map(|(l, m)| format!("m{l} = {m}"))
                .collect();
            let text = format!("c_{n} = {}; {}", r.codim, mults.join(", "));
            outcome(text, r, Vec::new())
        }
        Command::CheckSimple => {
            let r = simplicity_criterion_report(a, &s)?;
            let text = format!(
                "exponent {} of dimension {}: {}; criterion consistent",
                r.exponent, r.dim, r.simplicity
            );
            let flags = r.flags.clone();
            outcome(text, r, flags)
        }
    }
}

/// Runs one command on a loaded problem.
pub fn run_command(problem: &ProblemFile, inv: &Invocation) -> Result<RunReport> {
    let start = Instant::now();
    let out = dispatch(problem, inv)?;
    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        command: inv.render(),
        inputs_digest: inputs_digest(problem, inv)?,
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
        flags: out.flags,
        results: out.results,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        text: out.text,
    })
}

/// The JSON block printed for a failed command.
pub fn error_report(command: &str, e: &Error) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "engine_version": env!("CARGO_PKG_VERSION"),
        "error": e.to_string(),
        "exit_code": exit_code(e),
    })
}
