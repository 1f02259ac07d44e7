use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use fitch_core::io::{parse_newick, serialize_edgelist};
use fitch_core::oracle::set_partitions;
use fitch_core::recognition::default_names;
use fitch_core::Partition;
use tempfile::TempDir;

const T3211: &str = "((a:0,b:0,c:0):1,(d:0,e:0):1,f:1,g:1)r;";

fn fitch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fitch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fitch_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fitch"))
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
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn multipartite(sizes: &[usize]) -> String {
    serialize_edgelist(&Partition::from_sizes(sizes).unwrap().to_graph())
}

#[test]
fn compute_t3211() {
    let f = Files::new();
    let tree = f.write("t3211.nwk", T3211);
    let o = fitch(&["compute", s(&tree)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), multipartite(&[3, 2, 1, 1]));
}

#[test]
fn compute_zero_star_is_edgeless() {
    let o = fitch_stdin(&["compute", "-"], "(a:0,b:0,c:0)r;");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "vertices: a b c\n");
}

#[test]
fn compute_directed() {
    let o = fitch_stdin(&["compute", "--directed", "-"], "((a:0,b:1):1,c:0)r;");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "vertices: a b c\na -> b\nc -> a\nc -> b\n");
}

#[test]
fn compute_errors() {
    let f = Files::new();
    let bad = f.write("bad.nwk", "((a:0,b:1);");
    let o = fitch(&["compute", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte"));

    let o = fitch_stdin(&["compute", "--directed", "-"], "[&U](a:0,b:1,c:0);");
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("rooted"));
    let o = fitch_stdin(&["compute", "-"], "[&U](a:0,b:1,c:0);");
    assert_eq!(stdout(&o), "vertices: a b c\na b\nb c\n");
    assert_eq!(code(&fitch(&["compute", "/nonexistent/tree.nwk"])), 2);
}

#[test]
fn recognize_accept_and_reject() {
    let o = fitch_stdin(&["recognize", "-"], &multipartite(&[2, 2, 1]));
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "blocks: {a b} {c d} {e}\n");

    let o = fitch_stdin(&["recognize", "-"], "vertices: a b c\nb c\n");
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "witness: a | b--c\n");
}

#[test]
fn recognize_input_errors() {
    assert_eq!(code(&fitch_stdin(&["recognize", "-"], "")), 2);
    assert_eq!(code(&fitch_stdin(&["recognize", "-"], "vertices:\n")), 2);
    assert_eq!(code(&fitch_stdin(&["recognize", "-"], T3211)), 2);
    let o = fitch_stdin(&["recognize", "-"], "vertices: a b\na c\n");
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 3"));
}

#[test]
fn explain_k221() {
    let k221 = multipartite(&[2, 2, 1]);
    let o = fitch_stdin(&["explain", "--minimal", "-"], &k221);
    assert_eq!(code(&o), 0);
    assert_eq!(parse_newick(&stdout(&o)).unwrap().vertex_count(), 7);

    let o = fitch_stdin(&["explain", "-"], &k221);
    assert_eq!(code(&o), 0);
    assert_eq!(parse_newick(&stdout(&o)).unwrap().vertex_count(), 8);
}

#[test]
fn explain_p4_gives_witness() {
    let o = fitch_stdin(&["explain", "-"], "vertices: a b c d\na b\nb c\nc d\n");
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "witness: a | c--d\n");
}

#[test]
fn verify_t3211() {
    let f = Files::new();
    let tree = f.write("t.nwk", T3211);
    let g = f.write("g.txt", &multipartite(&[3, 2, 1, 1]));
    let k4 = f.write("k4.txt", &multipartite(&[1, 1, 1, 1]));

    let o = fitch(&["verify", s(&tree), s(&g)]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "explains: yes\n"));

    let o = fitch(&["verify", s(&tree), s(&k4)]);
    assert_eq!((code(&o), stdout(&o).as_str()), (1, "explains: no\n"));

    // the canonical tree can be contracted further
    let o = fitch(&["verify", "--least-resolved", s(&tree), s(&g)]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "explains: yes\nleast-resolved: no\n");
}

#[test]
fn verify_minimal_is_least_resolved() {
    let f = Files::new();
    let g = f.write("g.txt", &multipartite(&[2, 2, 1]));
    let o = fitch(&["explain", "--minimal", s(&g)]);
    let tree = f.write("t.nwk", &stdout(&o));
    let o = fitch(&["verify", "--least-resolved", s(&tree), s(&g)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "explains: yes\nleast-resolved: yes\n");
}

#[test]
fn explain_output_always_verifies() {
    let f = Files::new();
    for n in 1..=4 {
        for p in set_partitions(&default_names(n)) {
            let g = f.write("g.txt", &serialize_edgelist(&p.to_graph()));
            for flag in [None, Some("--minimal")] {
                let mut args = vec!["explain"];
                args.extend(flag);
                args.push(s(&g));
                let o = fitch(&args);
                assert_eq!(code(&o), 0, "{p}");
                let t = f.write("t.nwk", &stdout(&o));
                let v = fitch(&["verify", s(&t), s(&g)]);
                assert_eq!(stdout(&v), "explains: yes\n", "{p}");
            }
        }
    }
}

#[test]
fn enumerate_reports() {
    let o = fitch(&["enumerate", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "leaf_count: 3\ntopology_count: 1\nlabeling_count: 8\nrealizable_count: 5\n\
         expected_count: 5\nstatus: PASS\n"
    );

    let o = fitch(&["enumerate", "4", "--report"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("realizable_count: 15\nexpected_count: 15\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("graph:")).count(), 15);
    assert!(text.ends_with("status: PASS\n"));

    let o = fitch(&["enumerate", "9"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("n out of supported range"));
}

#[test]
fn dot_export() {
    let o = fitch_stdin(&["dot", "-"], "(a:1,b:0)r;");
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("graph {\n"));
    assert!(text.contains("[label=\"a\"]"));
    assert!(text.contains("style=bold"));

    let o = fitch_stdin(&["dot", "-"], "vertices: a b\na b\n");
    assert_eq!(
        stdout(&o),
        "graph {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n"
    );

    assert_eq!(code(&fitch_stdin(&["dot", "-"], "(a:1,b:0")), 2);
    assert_eq!(code(&fitch_stdin(&["dot", "-"], "   \n")), 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&fitch(&[])), 2);
    assert_eq!(code(&fitch(&["recognize"])), 2);
    assert_eq!(code(&fitch(&["enumerate", "three"])), 2);
    assert_eq!(code(&fitch(&["--help"])), 0);
}

#[test]
fn output_is_deterministic() {
    let input = multipartite(&[3, 2, 2]);
    let a = fitch_stdin(&["explain", "--minimal", "-"], &input);
    let b = fitch_stdin(&["explain", "--minimal", "-"], &input);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        fitch(&["enumerate", "5", "--report"]).stdout,
        fitch(&["enumerate", "5", "--report"]).stdout
    );
}
