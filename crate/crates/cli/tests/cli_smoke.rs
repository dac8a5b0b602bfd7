//! End-to-end smoke tests of the `artin` binary: subcommands, output
//! shapes, and exit codes.

use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn artin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn graph_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn report_text_and_json() {
    let f = graph_file("edge a b 2\nedge b c 2\nedge c d 2\nedge d e 2\nedge e a 2\n");
    let out = artin(&["report", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("girth: 5"));
    assert!(text.contains("PROVEN"));

    let out = artin(&["report", f.path().to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["girth"]["value"], 5);
    assert_eq!(json["girth"]["scope"], "PROVEN");
}

#[test]
fn compare_exit_codes() {
    let g3 = graph_file("edge a b 2\nedge b c 4\nedge c a 4\n");
    let g4 = graph_file("edge a b 2\nedge b c 2\nedge c d 2\nedge d a 4\n");
    let out = artin(&[
        "compare",
        g3.path().to_str().unwrap(),
        g4.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "distinguished pairs exit 1");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("DISTINGUISHED by girth"));

    let out = artin(&[
        "compare",
        g3.path().to_str().unwrap(),
        g3.path().to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "isomorphic pairs exit 0");
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["verdict"], "GroupsIsomorphic");
    assert_eq!(json["schema"], 1);

    let out = artin(&["compare", g3.path().to_str().unwrap(), "/nonexistent.graph"]);
    assert_eq!(out.status.code(), Some(2), "input errors exit 2");
}

#[test]
fn parse_errors_exit_2_with_line_numbers() {
    let bad = graph_file("edge a a 2\n");
    let out = artin(&["girth", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 1"), "stderr: {err}");
    assert!(err.contains("self-loop"), "stderr: {err}");
}

#[test]
fn girth_and_wg_values() {
    let f = graph_file("edge a b 3\nedge b c 3\nedge c a 3\n");
    let out = artin(&["girth", f.path().to_str().unwrap()]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "3");
    let out = artin(&["wg", f.path().to_str().unwrap()]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "6");

    let forest = graph_file("edge a b 3\n");
    let out = artin(&["girth", forest.path().to_str().unwrap()]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "inf");
}

#[test]
fn configs_listing() {
    let out = artin(&["configs", "--wg", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("k=4 marks=SSSS"));
    assert!(text.contains("k=3 marks=SSB"));
    assert!(text.contains("simple configurations of weighted girth 4: 2"));

    let out = artin(&["configs", "--wg", "5", "--wedges"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("wedge configurations of weighted girth 5: 2"));
    assert!(text.contains("total: 5"));
}

#[test]
fn budget_certificate() {
    let f = graph_file("edge a b 2\nedge b c 3\nedge c a 7\n");
    let out = artin(&[
        "budget",
        f.path().to_str().unwrap(),
        "--metric",
        "simplicial",
        "--config",
        "SSSS",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("INFEASIBLE"));
    assert!(text.contains("-1/42"));
    assert!(text.contains("< 2"));

    // Cubical on girth 3 is a scope error.
    let out = artin(&[
        "budget",
        f.path().to_str().unwrap(),
        "--metric",
        "cubical",
        "--config",
        "SSSS",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gb_ledger() {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(
        br#"{
        "vertices": [
            {"id": "a", "type": 1, "boundary": true},
            {"id": "b", "type": 1, "boundary": true},
            {"id": "c", "type": 1, "boundary": true}
        ],
        "faces": [[
            {"v": "a", "q_num": 1, "q_den": 3},
            {"v": "b", "q_num": 1, "q_den": 3},
            {"v": "c", "q_num": 1, "q_den": 3}
        ]]
    }"#,
    )
    .unwrap();
    let out = artin(&["gb", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("residual (total - 2): 0 pi"));
}

#[test]
fn extball_and_embed() {
    let pod = graph_file("edge u0 u1 2\nedge u0 u2 2\n");
    let out = artin(&["extball", pod.path().to_str().unwrap(), "--radius", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("vertices"));

    let out = artin(&["extball", pod.path().to_str().unwrap(), "--radius", "1", "--dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph extension_ball {"));

    let p3 = graph_file("edge p q 2\nedge q r 2\n");
    let out = artin(&[
        "embed",
        p3.path().to_str().unwrap(),
        pod.path().to_str().unwrap(),
        "--radius",
        "2",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("CERTIFIED"));

    let p4 = graph_file("edge p q 2\nedge q r 2\nedge r s 2\n");
    let out = artin(&[
        "embed",
        p4.path().to_str().unwrap(),
        pod.path().to_str().unwrap(),
        "--radius",
        "2",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("UNKNOWN"));

    // A non-right-angled host is refused.
    let dihedral = graph_file("edge a b 5\n");
    let out = artin(&["extball", dihedral.path().to_str().unwrap(), "--radius", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dot_export_and_json_graphs() {
    let f = graph_file("edge a b 5\nvertex z\n");
    let out = artin(&["dot", f.path().to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"a\" -- \"b\" [label=5, style=bold];"));
    assert!(text.contains("\"z\";"));

    let mut j = NamedTempFile::new().unwrap();
    j.write_all(br#"{"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 3}]}"#)
        .unwrap();
    let out = artin(&["girth", j.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "inf");
}
