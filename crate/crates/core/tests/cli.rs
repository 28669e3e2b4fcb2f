use std::path::PathBuf;

use serde_json::Value;

use piwb::cli::{exit_code, load_problem, run_command, Command, Invocation, ProblemFile};
use piwb::Error;

fn problem_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("problems").join(name)
}

fn load(name: &str) -> ProblemFile {
    load_problem(&problem_path(name)).unwrap()
}

fn run(name: &str, command: Command, structure: Option<&str>) -> Value {
    let mut inv = Invocation::new(command);
    inv.structure = structure.map(Into::into);
    run_command(&load(name), &inv).unwrap().results
}

const BUNDLED: [&str; 7] = [
    "m2.json",
    "ut2.json",
    "m2_z2_graded.json",
    "m2_z2_action.json",
    "m2_sl2_adjoint.json",
    "block_assoc_m2.json",
    "block_lie_m2.json",
];

#[test]
fn bundled_problems_load() {
    for name in BUNDLED {
        let p = load(name);
        let r = run_command(&p, &Invocation::new(Command::Validate)).unwrap();
        assert_eq!(r.schema_version, 1, "{name}");
    }
}

#[test]
fn round_trip_gives_identical_results() {
    for name in BUNDLED {
        let p = load(name);
        let again = ProblemFile::from_json(&p.to_json().unwrap(), name).unwrap();
        let inv = Invocation::new(Command::Codim { n: 2 });
        let a = run_command(&p, &inv).unwrap();
        let b = run_command(&again, &inv).unwrap();
        assert_eq!(a.results, b.results, "{name}");
        assert_eq!(a.inputs_digest, b.inputs_digest, "{name}");
    }
}

#[test]
fn documented_commands() {
    let r = run("ut2.json", Command::Exponent, None);
    assert_eq!(r["d"], 2);
    assert_eq!(r["witness"].as_array().unwrap().len(), 2);

    let r = run("m2_z2_graded.json", Command::Codim { n: 2 }, Some("z2grading"));
    assert_eq!(r["value"], 7);
    let ranks: Vec<u64> = r["breakdown"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["rank"].as_u64().unwrap())
        .collect();
    assert_eq!(ranks, vec![1, 2, 2, 2]);

    let r = run(
        "m2_z2_action.json",
        Command::CheckIdentity {
            poly: "symmetrized_commutator".into(),
        },
        None,
    );
    assert_eq!(r["identity"], true);
    let r = run(
        "m2.json",
        Command::CheckIdentity {
            poly: "commutator".into(),
        },
        None,
    );
    assert_eq!(r["identity"], false);

    let r = run(
        "block_lie_m2.json",
        Command::LieExponent {
            chains: true,
            q_max: None,
        },
        Some("sl2"),
    );
    assert_eq!(r["d"], 3);
    assert_eq!(r["chains"].as_array().unwrap().len(), 2);

    let r = run("ut2.json", Command::CodimSeries { n_max: 4 }, None);
    assert_eq!(r["values"], serde_json::json!([1, 2, 6, 18]));
    assert_eq!(r["predicted_exponent"], 2);
}

#[test]
fn flags_are_recorded() {
    let p = load("ut2.json");
    let r = run_command(&p, &Invocation::new(Command::Exponent)).unwrap();
    assert!(r.flags.iter().any(|f| f.contains("distinct-index")));
    let p = load("block_lie_m2.json");
    let r = run_command(&p, &Invocation::new(Command::Exponent).with_structure("sl2")).unwrap();
    assert!(r.flags.iter().any(|f| f.contains("one complement")));
}

fn binary(args: &[&str], budget: Option<&str>) -> (i32, Value) {
    let mut cmd = std::process::Command::new(env!("CARGO_BIN_EXE_piwb"));
    cmd.args(args).arg("--json");
    if let Some(b) = budget {
        cmd.env("CODIM_BUDGET", b);
    }
    let out = cmd.output().unwrap();
    let json = serde_json::from_slice(&out.stdout).unwrap();
    (out.status.code().unwrap(), json)
}

#[test]
fn exit_codes() {
    let m2 = problem_path("m2.json");
    let m2 = m2.to_str().unwrap();
    let (code, json) = binary(&[m2, "codim", "--n", "3"], Some("100"));
    assert_eq!(code, 3);
    assert!(json["error"].as_str().unwrap().contains("6 rows x 256 columns"));

    let (code, json) = binary(&[m2, "codim", "--n", "3"], None);
    assert_eq!(code, 0);
    assert_eq!(json["results"]["value"], 6);

    let (code, _) = binary(&[m2, "radical", "--structure", "missing"], None);
    assert_eq!(code, 1);

    let e = run_command(
        &load("m2.json"),
        &Invocation::new(Command::Radical).with_structure("missing"),
    )
    .unwrap_err();
    assert_eq!(exit_code(&e), 1);
    assert_eq!(exit_code(&Error::Inconsistency("x".into())), 4);
}

fn edited(name: &str, edit: impl FnOnce(&mut Value)) -> Result<ProblemFile, Error> {
    let text = std::fs::read_to_string(problem_path(name)).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    edit(&mut v);
    ProblemFile::from_json(&v.to_string(), name)
}

#[test]
fn invalid_files_are_rejected() {
    // e12 * e21 = e22 instead of e11 breaks associativity.
    let e = edited("m2.json", |v| {
        v["algebra"]["table"][1][2] = serde_json::json!(["0", "0", "0", "1"]);
    })
    .unwrap_err();
    assert_eq!(exit_code(&e), 2);
    assert!(e.to_string().contains("associativ"), "{e}");

    let e = edited("m2_z2_graded.json", |v| {
        v["structures"][0]["data"] = serde_json::json!({
            "moduli": [2],
            "components": [
                {"label": [0], "basis": [["1", "0", "0", "0"], ["0", "0", "0", "1"]]},
                {"label": [1], "basis": [["1", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "1", "0", "0"]]}
            ]
        });
    })
    .unwrap_err();
    assert!(e.to_string().contains("components overlap"), "{e}");

    let e = ProblemFile::from_json("{\"field\": {\"conductor\": 1}, \"algebra\": ", "broken.json").unwrap_err();
    assert_eq!(exit_code(&e), 2);
    assert!(e.to_string().contains("broken.json:1:"), "{e}");
}
