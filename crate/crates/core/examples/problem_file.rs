// Loading a bundled problem file and running commands on it.

use std::path::PathBuf;

use piwb::cli::{load_problem, run_command, Command, Invocation};

fn main() -> piwb::Result<()> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("problems/m2_z2_graded.json");
    let problem = load_problem(&path)?;
    for inv in [
        Invocation::new(Command::Validate),
        Invocation::new(Command::Codim { n: 2 }).with_structure("z2grading"),
        Invocation::new(Command::CheckIdentity {
            poly: "even_commutator".into(),
        }),
        Invocation::new(Command::CheckSimple).with_structure("z2grading"),
    ] {
        let r = run_command(&problem, &inv)?;
        println!("$ {}\n{}\n  digest {}", r.command, r.text, &r.inputs_digest[..16]);
    }
    Ok(())
}
