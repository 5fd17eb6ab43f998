//! End-to-end runs of the `treedist` binary.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use treedist_cli::report::{AnalysisReport, ColoringReport, CountReport, VerifyReport};

const STAR3: &str = "hub a\nhub b\nhub c\n";
const P4: &str = "a b\nb c\nc d\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_treedist"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn star_needs_an_extra_color() {
    let out = run(&["analyze", "--json"], STAR3);
    assert_eq!(out.status.code(), Some(0));
    let r: AnalysisReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        (r.distinguishing_number, r.distinguishing_chromatic_number),
        (3, 4)
    );
    let cert = r.certificate.unwrap();
    assert_eq!(cert.vertex, "hub");
    assert_eq!(cert.class.len(), 3);
    assert_eq!(r.center, ["hub"]);
}

#[test]
fn path_has_no_certificate() {
    let out = run(&["analyze", "--json", "--counts", "2"], P4);
    let r: AnalysisReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        (r.distinguishing_number, r.distinguishing_chromatic_number),
        (2, 2)
    );
    assert!(r.certificate.is_none());
    assert_eq!(r.center, ["b", "c"]);
    let counts = r.counts.unwrap();
    // the subdivision vertex takes a color too
    assert_eq!(counts.distinguishing, "12");
}

#[test]
fn witnesses_verify() {
    let dir = tempfile::tempdir().unwrap();
    let tree = write(dir.path(), "t.txt", STAR3);
    let out = run(&["analyze", &tree, "--witness", "--json"], "");
    let r: AnalysisReport = serde_json::from_str(&stdout(&out)).unwrap();
    let w = r.witness.unwrap();
    for (entries, proper) in [(&w.distinguishing, false), (&w.proper, true)] {
        let text: String = entries
            .iter()
            .map(|e| format!("{} {}\n", e.label, e.color))
            .collect();
        let coloring = write(dir.path(), "c.txt", &text);
        let mut args = vec!["verify", &tree, "--coloring", &coloring, "--json"];
        if proper {
            args.push("--proper");
        }
        let out = run(&args, "");
        assert_eq!(out.status.code(), Some(0));
        let v: VerifyReport = serde_json::from_str(&stdout(&out)).unwrap();
        assert!(v.passed);
    }
}

#[test]
fn verify_rejects_a_symmetric_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let coloring = write(dir.path(), "c.txt", "hub 1\na 1\nb 2\nc 2\n");
    let out = run(&["verify", "--coloring", &coloring], STAR3);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
    let missing = write(dir.path(), "m.txt", "hub 1\na 2\n");
    assert_eq!(
        run(&["verify", "--coloring", &missing], STAR3)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn empty_input_is_an_input_error() {
    assert_eq!(run(&["analyze"], "").status.code(), Some(2));
    assert_eq!(
        run(&["count", "-k", "2"], "# nothing\n").status.code(),
        Some(2)
    );
}

#[test]
fn small_counts() {
    assert_eq!(stdout(&run(&["count", "-k", "2"], "hub a\nhub b\n")), "2\n");
    assert_eq!(
        stdout(&run(&["count", "-k", "2", "--proper"], "hub a\nhub b\n")),
        "0\n"
    );
    assert_eq!(stdout(&run(&["count", "-k", "7"], "x\n")), "7\n");
    let out = run(&["count", "-k", "3", "--json"], STAR3);
    let r: CountReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(r.count, "3");
}

#[test]
fn list_counts_need_the_center_line() {
    let dir = tempfile::tempdir().unwrap();
    let lists = "a: 1,2\nb: 1,2\nc: 1,2\nd: 1,2\n";
    let partial = write(dir.path(), "l1.txt", lists);
    assert_eq!(
        run(&["count", "--list", &partial], P4).status.code(),
        Some(2)
    );
    let full = write(dir.path(), "l2.txt", &format!("{lists}⟨center⟩: 3\n"));
    assert_eq!(stdout(&run(&["count", "--list", &full], P4)), "6\n");
    assert_eq!(
        stdout(&run(&["count", "--list", &full, "--proper"], P4)),
        "1\n"
    );
    let capped = run(&["count", "--list", &full, "--class-cap", "1"], P4);
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn too_few_colors_and_bad_indices() {
    assert_eq!(run(&["color", "-k", "2"], STAR3).status.code(), Some(4));
    assert_eq!(
        run(&["color", "-k", "2", "--index", "12"], P4)
            .status
            .code(),
        Some(4)
    );
    let dir = tempfile::tempdir().unwrap();
    let lists = write(dir.path(), "l.txt", "hub: 1\na: 1\nb: 1\nc: 1\n");
    assert_eq!(
        run(&["color", "--list", &lists], STAR3).status.code(),
        Some(4)
    );
}

#[test]
fn indices_list_distinct_classes() {
    let mut seen = std::collections::HashSet::new();
    for i in 0..12 {
        let out = run(
            &["color", "-k", "2", "--index", &i.to_string(), "--json"],
            P4,
        );
        assert_eq!(out.status.code(), Some(0));
        let r: ColoringReport = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(r.colors.len(), 5);
        let color = |l: &str| r.colors.iter().find(|e| e.label == l).unwrap().color;
        // a, b, c, d read forwards or backwards give the same class
        let path: Vec<u32> = ["a", "b", "c", "d"].iter().map(|l| color(l)).collect();
        let reversed: Vec<u32> = path.iter().rev().copied().collect();
        assert!(seen.insert((color("⟨center⟩"), path.min(reversed))));
    }
}

#[test]
fn proper_indices_cover_every_root_color() {
    let out = run(&["count", "-k", "3", "--proper"], P4);
    let total: u32 = stdout(&out).trim().parse().unwrap();
    let mut roots = std::collections::BTreeSet::new();
    for i in 0..total {
        let out = run(
            &[
                "color",
                "-k",
                "3",
                "--proper",
                "--index",
                &i.to_string(),
                "--json",
            ],
            P4,
        );
        let r: ColoringReport = serde_json::from_str(&stdout(&out)).unwrap();
        roots.insert(
            r.colors
                .iter()
                .find(|e| e.label == "⟨center⟩")
                .unwrap()
                .color,
        );
    }
    assert_eq!(roots, [1, 2, 3].into());
}

#[test]
fn parens_input() {
    let out = run(&["analyze", "--format", "parens", "--json"], "(()())\n");
    let r: AnalysisReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        (r.distinguishing_number, r.distinguishing_chromatic_number),
        (2, 3)
    );
    assert_eq!(
        stdout(&run(
            &["count", "--format", "parens", "-k", "2"],
            "((()))\n"
        )),
        "8\n"
    );
}

#[test]
fn batch_keeps_file_order() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "b.txt", P4);
    write(dir.path(), "a.txt", STAR3);
    let out = run(
        &["analyze", "--batch", dir.path().to_str().unwrap(), "--json"],
        "",
    );
    let rs: Vec<AnalysisReport> = serde_json::from_str(&stdout(&out)).unwrap();
    let ds: Vec<u64> = rs.iter().map(|r| r.distinguishing_number).collect();
    assert_eq!(ds, [3, 2]);
    assert!(rs[0].source.as_deref().unwrap().ends_with("a.txt"));
}

#[test]
fn selftest_passes_on_small_trees() {
    let out = run(&["selftest", "--max-n", "4"], "");
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("9 passed, 0 failed"));
}
