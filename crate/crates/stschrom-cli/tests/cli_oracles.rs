//! End-to-end checks of the command-line interface: facet-file
//! round-trips, exit codes, and the documented example pipelines.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stschrom"))
}

fn run_with_stdin(args: &[&str], stdin: &str, dir: &std::path::Path) -> Output {
    let mut child = bin()
        .args(args)
        .current_dir(dir)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn run(args: &[&str], dir: &std::path::Path) -> Output {
    run_with_stdin(args, "", dir)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn facet_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(&["gen", "torus7"], dir.path());
    assert!(gen.status.success());
    let text = stdout(&gen);
    assert!(text.contains("name=torus_7"));
    // re-ingesting the emitted file reproduces it exactly
    let verify = run_with_stdin(&["verify", "manifold"], &text, dir.path());
    assert!(verify.status.success());
    assert!(stdout(&verify).contains("orientable=true genus=1"));
    // whitespace-insensitive variant parses to the same complex
    let squashed: String = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .collect::<Vec<_>>()
        .join(" ");
    let verify2 = run_with_stdin(&["verify", "manifold"], &squashed, dir.path());
    assert!(verify2.status.success());
    assert_eq!(stdout(&verify), stdout(&verify2));
}

#[test]
fn parse_errors_exit_2_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = run_with_stdin(&["color", "--k", "2"], "[[1,2,x]]", dir.path());
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8_lossy(&bad.stderr).into_owned();
    assert!(err.contains("line 1"), "missing location in: {err}");
    let empty = run_with_stdin(&["color", "--k", "9", "--s", "2"], "", dir.path());
    assert_eq!(empty.status.code(), Some(2));
}

#[test]
fn documented_pipelines() {
    let dir = tempfile::tempdir().unwrap();
    // gen pg --d 3 | color --k 3 --s 2 -> exit 0
    let pg = stdout(&run(&["gen", "pg", "--d", "3"], dir.path()));
    let c3 = run_with_stdin(&["color", "--k", "3", "--s", "2"], &pg, dir.path());
    assert_eq!(c3.status.code(), Some(0));
    // the same system is not 2-colorable -> exit 1
    let c2 = run_with_stdin(&["color", "--k", "2", "--s", "2"], &pg, dir.path());
    assert_eq!(c2.status.code(), Some(1));
    // torus7 minus facet {1,3,4} still needs 3 colors
    let t = stdout(&run(&["gen", "torus7"], dir.path()));
    let minus = run_with_stdin(
        &["color", "--k", "2", "--s", "2", "--remove-facet", "[1,3,4]"],
        &t,
        dir.path(),
    );
    assert_eq!(minus.status.code(), Some(1));
    // chi on rp26
    let r = stdout(&run(&["gen", "rp26"], dir.path()));
    let chi = run_with_stdin(&["chi", "--max-k", "5"], &r, dir.path());
    assert_eq!(chi.status.code(), Some(0));
    assert!(stdout(&chi).contains("chi_2=3"));
}

#[test]
fn coloring_certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let fct = dir.path().join("t.fct");
    let col = dir.path().join("t.col");
    assert!(run(
        &["gen", "torus7", "-o", fct.to_str().unwrap()],
        dir.path()
    )
    .status
    .success());
    let color = run(
        &[
            "color",
            "--k",
            "3",
            "--cert",
            col.to_str().unwrap(),
            fct.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(color.status.code(), Some(0));
    let cert = std::fs::read_to_string(&col).unwrap();
    assert!(cert.starts_with("# k=3 s=2 complex=torus_7"));
    let verify = run(
        &[
            "verify",
            "coloring",
            "--coloring",
            col.to_str().unwrap(),
            fct.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(verify.status.code(), Some(0));
    // tampering breaks it: force every color to 1
    let mono: String = cert
        .lines()
        .map(|l| {
            if l.starts_with('#') {
                l.to_string()
            } else {
                format!("{}\t1", l.split_whitespace().next().unwrap())
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    std::fs::write(&col, mono).unwrap();
    let bad = run(
        &[
            "verify",
            "coloring",
            "--coloring",
            col.to_str().unwrap(),
            fct.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn run_log_appends_one_record_per_search() {
    let dir = tempfile::tempdir().unwrap();
    let t = stdout(&run(&["gen", "torus7"], dir.path()));
    for _ in 0..2 {
        run_with_stdin(&["color", "--k", "2"], &t, dir.path());
    }
    let log = std::fs::read_to_string(dir.path().join("stschrom_runs.log")).unwrap();
    let lines: Vec<&str> = log.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        assert!(line.contains("outcome=not_colorable"), "{line}");
        assert!(line.contains("digest="), "{line}");
        // identical inputs and flags give identical digests and outcomes
    }
    let d: Vec<&str> = log
        .lines()
        .map(|l| l.split_whitespace().find(|t| t.starts_with("digest=")).unwrap())
        .collect();
    assert_eq!(d[0], d[1]);
}

#[test]
fn embed_and_verify_sts() {
    let dir = tempfile::tempdir().unwrap();
    let pg = dir.path().join("pg8.fct");
    assert!(run(&["gen", "pg", "--d", "3", "-o", pg.to_str().unwrap()], dir.path())
        .status
        .success());
    assert_eq!(
        run(&["verify", "sts", pg.to_str().unwrap()], dir.path())
            .status
            .code(),
        Some(0)
    );
    let surf = run(&["embed", "--sts", pg.to_str().unwrap()], dir.path());
    assert!(surf.status.success());
    let text = stdout(&surf);
    assert!(text.contains("# orientable=true"));
    assert!(text.contains("# boundary cycle "));
    let m = run_with_stdin(&["verify", "manifold"], &text, dir.path());
    assert!(stdout(&m).contains("orientable=true genus=4"));
    // a non-STS triangle file fails verification with exit 1
    let bad = run_with_stdin(
        &["verify", "sts"],
        "[[1,2,3],[1,2,4]]",
        dir.path(),
    );
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn long_budget_gate() {
    let dir = tempfile::tempdir().unwrap();
    let sph = stdout(&run(&["gen", "sphere167"], dir.path()));
    let gated = run_with_stdin(&["color", "--k", "4"], &sph, dir.path());
    assert_eq!(gated.status.code(), Some(2));
    let err = String::from_utf8_lossy(&gated.stderr).into_owned();
    assert!(err.contains("--allow-long"), "{err}");
}

#[test]
fn transversal_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], &str)] = &[
        (
            &["verify", "transversal", "--d", "4", "--poly", "a*X^11 + X^6 + X"],
            "surface_orientable=true",
        ),
        (
            &["verify", "transversal", "--d", "5", "--poly", "X^5"],
            "surface_orientable=false",
        ),
        (
            &["verify", "transversal", "--bose-s", "2", "--orientable"],
            "surface_orientable=true",
        ),
        (
            &["verify", "transversal", "--bose-s", "2"],
            "surface_orientable=false",
        ),
    ];
    for (args, want) in cases {
        let out = run(args, dir.path());
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(stdout(&out).contains(want), "{args:?}: {}", stdout(&out));
    }
    // the identity is linear, hence not a transversal
    let not = run(
        &["verify", "transversal", "--d", "3", "--poly", "X^2"],
        dir.path(),
    );
    assert_eq!(not.status.code(), Some(1));
}
