use std::path::PathBuf;
use std::process::{Command, Output};

fn monadic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monadic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("monadic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_paper_passes_and_is_deterministic() {
    let first = monadic(&["verify-paper"]);
    assert_eq!(code(&first), 0, "{}", stdout(&first));
    let text = stdout(&first);
    assert_eq!(text.matches("[PASS]").count(), 17);
    assert!(!text.contains("[FAIL]"));
    assert!(text.ends_with("17/17 checks passed\n"));
    let second = monadic(&["verify-paper", "--parallel"]);
    assert_eq!(stdout(&second), text);
}

#[test]
fn verify_paper_only() {
    let out = monadic(&["verify-paper", "--only", "key-lemma"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("[PASS]").count(), 2);
    assert!(text.contains("key-lemma-mipc") && text.contains("key-lemma-ms4"));
}

#[test]
fn verify_paper_json() {
    let out = monadic(&["--json", "verify-paper", "--only", "spectra"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert!(results
        .iter()
        .all(|r| r["passed"] == true && r.get("elapsed").is_none()));
}

#[test]
fn key_lemma_from_the_command_line() {
    let out = monadic(&["frame", "morphisms", "rho(K1)", "rho(K2)", "--onto"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l == "u->a v->b w->c z->c"));
    let out = monadic(&["frame", "morphisms", "K1", "K2", "--onto"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out).trim(), "no morphisms");
}

#[test]
fn checking_a_given_map() {
    let out = monadic(&["frame", "morphisms", "H1", "H2", "--check", "a=u,b=v,c=w,d=w"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("fails at c"));
    let out = monadic(&["frame", "morphisms", "H1", "H2", "--check", "a=w,b=w,c=w,d=u"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("violated"));
    let out = monadic(&["frame", "morphisms", "H1", "H2", "--check", "a=u"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn variety_queries() {
    assert_eq!(code(&monadic(&["variety", "hs-member", "B2", "B1"])), 1);
    assert_eq!(code(&monadic(&["variety", "hs-member", "K3*", "B2"])), 0);
    assert_eq!(code(&monadic(&["algebra", "embeds", "O(B2)", "O(B1)"])), 0);
    assert_eq!(code(&monadic(&["variety", "hs-member", "O(B2)", "B1"])), 2);
    let out = monadic(&["--json", "variety", "spectrum", "B2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let sizes: Vec<usize> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["points"].as_array().unwrap().len())
        .collect();
    assert_eq!(sizes, [3, 2, 2, 1]);
}

#[test]
fn formulas() {
    let out = monadic(&["parse", "p -> q -> r"]);
    assert_eq!(stdout(&out).trim(), "p -> q -> r");
    assert_eq!(code(&monadic(&["parse", "p -> "])), 2);
    assert_eq!(code(&monadic(&["parse", "box p"])), 2);
    let out = monadic(&["translate", "~p"]);
    assert_eq!(code(&out), 0);
    let out = monadic(&["algebra", "validate-formula", "O(B2)", "p | ~p"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("refuted by p="));
    let out = monadic(&["algebra", "validate-formula", "B2", "A p -> p"]);
    assert_eq!(code(&out), 0);
    let out = monadic(&["algebra", "validate-formula", "B2", "p & q & r & s & t"]);
    assert_eq!(code(&out), 2);
    let out = monadic(&["check", "translation", "B1", "--random", "20", "--seed", "5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("seed 5"));
}

#[test]
fn fixtures_round_trip_through_files() {
    let path = temp("k2.json");
    let out = monadic(&["fixture", "dump", "K2"]);
    std::fs::write(&path, &out.stdout).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(code(&monadic(&["frame", "check", p])), 0);
    let alg = temp("k2-star.json");
    std::fs::write(&alg, monadic(&["algebra", "from-frame", p]).stdout).unwrap();
    let a = alg.to_str().unwrap();
    assert_eq!(code(&monadic(&["algebra", "check", a])), 0);
    assert_eq!(code(&monadic(&["variety", "hs-member", a, "B2"])), 0);
    let out = monadic(&["--json", "algebra", "filters", a]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(code(&monadic(&["frame", "check", a])), 2);
}

#[test]
fn subdirect_irreducibility_and_products() {
    assert_eq!(code(&monadic(&["algebra", "si", "B1"])), 0);
    let path = temp("square.json");
    std::fs::write(&path, monadic(&["algebra", "product", "K5*", "K5*"]).stdout).unwrap();
    let out = monadic(&["algebra", "si", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("join of fixpoints is top"));
}

#[test]
fn skeletons_and_rendering() {
    let out = monadic(&["--json", "frame", "skeleton", "H1"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["projection"]["b"], v["projection"]["d"]);
    assert_eq!(v["frame"]["points"].as_array().unwrap().len(), 3);
    let out = monadic(&["render", "K1"]);
    let text = stdout(&out);
    assert!(text.starts_with("digraph \"K1\""));
    assert_eq!(text.matches("subgraph cluster_").count(), 3);
    let out = monadic(&["render", "rho(H2)"]);
    assert!(stdout(&out).contains("label=\"E_Q\""));
    let out = monadic(&["frame", "upsets", "K2"]);
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn naturality_command() {
    let out = monadic(&["verify", "naturality", "H1", "--random", "10"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert_eq!(code(&monadic(&["verify", "naturality"])), 2);
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["frame", "check", "K9"][..],
        &["frame", "check", "/no/such/file.json"],
        &["frame", "skeleton", "rho(K1)"],
        &["algebra", "open", "O(B1)"],
        &["frame", "nonsense"],
    ] {
        let out = monadic(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
