use std::io::Write;
use std::process::{Command, Output, Stdio};

use safeset::report::{ReportResult, RunReport};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_safeset"));
    c.env_remove("SAFESET_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> RunReport {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    RunReport::from_json(&String::from_utf8(out.stdout.clone()).unwrap()).unwrap()
}

fn error_category(out: &Output) -> String {
    assert!(!out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    v["error"]["category"].as_str().unwrap().to_string()
}

fn tmp(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("safeset-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const WORKED_EXAMPLE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/worked_example.txt");

#[test]
fn solve_worked_example_from_stdin() {
    let r = report(&run_stdin(&["solve", "-"], &std::fs::read_to_string(WORKED_EXAMPLE).unwrap()));
    let ReportResult::Solve { size, method, set, .. } = r.result else { panic!() };
    assert_eq!(size.to_string(), "5");
    assert_eq!(method, "dp");
    assert_eq!(set.names.len(), 5);
    assert!(r.input.unwrap().semicomplete);
}

#[test]
fn check_reports_certificate() {
    let r = report(&run(&["check", "--set", "a1,b1,c2,d1,d3", WORKED_EXAMPLE]));
    let ReportResult::Check { verdict, violations, .. } = r.result else { panic!() };
    assert!(verdict && violations.is_empty());
    let r = report(&run(&["check", "--set", "d1", WORKED_EXAMPLE]));
    let ReportResult::Check { verdict, violations, .. } = r.result else { panic!() };
    assert!(!verdict);
    assert!(!violations.is_empty());
    assert_eq!(error_category(&run(&["check", "--set", "zz", WORKED_EXAMPLE])), "input");
}

#[test]
fn scc_and_classify() {
    let r = report(&run(&["scc", WORKED_EXAMPLE]));
    let ReportResult::Scc { components } = r.result else { panic!() };
    let sizes: Vec<usize> = components.iter().map(|c| c.ids.len()).collect();
    assert_eq!(sizes, [3, 5, 3, 4]);
    let r = report(&run(&["classify", WORKED_EXAMPLE]));
    let ReportResult::Classify { lsc, components, .. } = r.result else { panic!() };
    assert_eq!((lsc, components), (5, 4));
}

#[test]
fn generate_then_solve() {
    let out = run(&["gen", "--family", "circulant_Tk", "--k", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("7 21\n"));
    let r = report(&run_stdin(&["solve", "--strong", "-"], &text));
    let ReportResult::Solve { size, .. } = r.result else { panic!() };
    assert_eq!(size.to_string(), "3");
    // the largest transitive subtournament of this regular 7-tournament has 3 vertices
    let r = report(&run_stdin(&["fvs", "-"], &text));
    let ReportResult::Fvs { size, .. } = r.result else { panic!() };
    assert_eq!(size.to_string(), "4");
    // reproducible random instances
    let a = run(&["gen", "--family", "random_semicomplete", "--n", "9", "--seed", "5", "--digon-prob", "0.25"]);
    let b = run(&["gen", "--family", "random_semicomplete", "--n", "9", "--seed", "5", "--digon-prob", "1/4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn strong_safe_set_can_be_infeasible() {
    let r = report(&run_stdin(&["solve", "--strong", "-"], "3 2\n0 1\n1 2\n"));
    let ReportResult::Solve { size, .. } = r.result else { panic!() };
    assert_eq!(size.to_string(), "INFEASIBLE");
}

#[test]
fn error_categories_and_exit_codes() {
    let out = run_stdin(&["solve", "-"], "2 1\n0 0\n");
    assert_eq!(error_category(&out), "parse");
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(v["error"]["message"].as_str().unwrap().contains("line 2"));
    let out = run_stdin(&["solve", "--method", "dp", "-"], "3 2\n0 1\n1 2\n");
    assert_eq!(error_category(&out), "input");
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["scan", "--n", "7", "--k", "3"]);
    assert_eq!(error_category(&out), "refused");
    assert_eq!(out.status.code(), Some(5));
    let out = run(&["solve", "/nonexistent/file"]);
    assert_eq!(error_category(&out), "io");
    let out = run(&["frobnicate"]);
    assert_eq!(error_category(&out), "usage");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_category(&run(&["bench", "--lsc", "21", "--n", "100"])), "refused");
    assert_eq!(error_category(&run(&["gen", "--family", "Tstar", "--k", "2", "--n", "8"])), "input");
}

#[test]
fn reductions_write_gadget_and_map() {
    let cover = tmp("cover.txt", "3 2\n1 2\n2 3\n");
    let gadget = tmp("cover-gadget.txt", "");
    let map = tmp("cover-map.txt", "");
    let r = report(&run(&["reduce", "setcover", &cover, "-o", &gadget, "--map-out", &map]));
    let ReportResult::Reduce { n, size_offset, .. } = r.result else { panic!() };
    assert_eq!((n, size_offset), (6, Some(1)));
    assert!(std::fs::read_to_string(&map).unwrap().contains("size_offset +1"));
    let r = report(&run(&["solve", "--indominating", &gadget]));
    let ReportResult::Solve { size, .. } = r.result else { panic!() };
    assert_eq!(size.to_string(), "2");

    let cnf = tmp("f.cnf", "c tiny\np cnf 2 2\n1 2 0\n-1 2 0\n");
    let dag = tmp("f-dag.txt", "");
    let sat4 = tmp("f4.cnf", "");
    let r = report(&run(&["reduce", "sat", &cnf, "-o", &dag, "--sat4-out", &sat4]));
    let ReportResult::Reduce { threshold, .. } = r.result else { panic!() };
    let r = report(&run(&["solve", "--indominating", &dag]));
    let ReportResult::Solve { size, .. } = r.result else { panic!() };
    assert_eq!(Some(size.to_string()), threshold.map(|k| k.to_string()));
    assert!(std::fs::read_to_string(&sat4).unwrap().starts_with("p cnf"));

    let out = run_stdin(&["reduce", "fvs", "-"], "3 3\n0 1\n1 2\n2 0\n");
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("4 6\n"));
    assert_eq!(error_category(&run_stdin(&["reduce", "fvs", "-"], "3 1\n0 1\n")), "input");
}

#[test]
fn scan_threads_agree() {
    let one = report(&run(&["scan", "--n", "6", "--k", "2"]));
    let many = report(&bin().args(["scan", "--n", "6", "--k", "2"]).env("SAFESET_THREADS", "3").output().unwrap());
    let (ReportResult::Scan { s_min: a, ss_max: b, threads: t1, .. }, ReportResult::Scan { s_min: c, ss_max: d, threads: t2, .. }) =
        (one.result, many.result)
    else {
        panic!()
    };
    assert_eq!((a, b), (c, d));
    assert_eq!((t1, t2), (1, 3));
}

#[test]
fn bench_counts() {
    let r = report(&run(&["bench", "--lsc", "1,4", "--n", "40", "--seed", "2"]));
    assert_eq!(r.seed, Some(2));
    let ReportResult::Bench { rows } = r.result else { panic!() };
    assert_eq!(rows[0].subsets_examined, 80);
    assert_eq!(rows[1].subsets_examined, 10 * 16);
}

#[test]
fn tables_text_layout() {
    let out = run(&["--format", "text", "solve", "--method", "dp", "--tables", WORKED_EXAMPLE]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("C4 = d1 d2 d3 d4"));
    assert!(text.contains("s(D) = 5"));
}
