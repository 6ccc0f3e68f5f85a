use std::path::PathBuf;
use std::process::{Command, Output};

fn cleft(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cleft"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("CLEFT_THREADS", t),
        None => cmd.env_remove("CLEFT_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

/// Byte comparison against a fixture; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, actual: &[u8]) {
    let path = fixture(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(expected == actual, "{} differs:\n{}", name, String::from_utf8_lossy(actual));
}

#[test]
fn axioms_report_matches_golden() {
    let out = cleft(&["run", "--p", "2", "--n", "1", "--lambda", "sym", "--suite", "axioms"], None);
    assert_eq!(out.status.code(), Some(0));
    golden("axioms_p2_n1_sym.json", &out.stdout);
}

#[test]
fn example_torsor_text_matches_golden() {
    let out = cleft(&["torsor", "--example", "--p", "3", "--format", "text"], None);
    assert_eq!(out.status.code(), Some(0));
    golden("torsor_example_p3.txt", &out.stdout);
}

#[test]
fn gamma_report_lists_parameter_clearing() {
    let out = cleft(&["run", "--p", "3", "--n", "1", "--suite", "gamma"], None);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["schemaVersion"], 1);
    let ids: Vec<&str> = json["checks"].as_array().unwrap().iter().map(|c| c["checkId"].as_str().unwrap()).collect();
    assert!(ids.contains(&"p3/n1/lsym/gamma/ptable/parameter-clears"));
    assert!(ids.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn grid_is_deterministic_across_thread_counts() {
    let a = cleft(&["grid"], Some("1"));
    let b = cleft(&["grid"], Some("4"));
    let c = cleft(&["grid"], None);
    assert!(a.stdout == b.stdout && b.stdout == c.stdout);
    // the characteristic-2 non-cleft example is the single failing entry
    assert_eq!(a.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(json["summary"]["fail"], 1);
    let failing: Vec<&str> = json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] == "fail")
        .map(|c| c["checkId"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["p2/nany/lsym/torsor/example/cleft-search"]);
}

#[test]
fn guard_rejects_large_orders() {
    let out = cleft(&["run", "--p", "7", "--n", "2"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid configuration"));
    let out = cleft(&["run", "--p", "2", "--n", "4", "--suite", "axioms"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file_and_timings_are_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = cleft(&["run", "--suite", "axioms", "--timings", "--out", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("elapsedMs"));
    let plain = cleft(&["run", "--suite", "axioms"], None);
    assert!(!String::from_utf8_lossy(&plain.stdout).contains("elapsedMs"));
}

#[test]
fn bad_thread_count_is_rejected() {
    let out = cleft(&["grid"], Some("zero"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_and_resolve_print() {
    let out = cleft(&["catalog", "--p", "3", "--scheme", "Mu"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("hopf "));
    let out = cleft(&["resolve", "--p", "3"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("P_2 = "));
}
