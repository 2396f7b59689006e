use std::path::Path;
use std::process::{Command, Output};

use arithstruct::{enumerate_cycle, EnumerationLimits, GraphFamily};
use arithstruct_cli::commands::{ReportDocument, SpectraOutput};
use arithstruct_cli::records::{catalog_records, CatalogRecord};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arithstruct"))
        .args(args)
        .env_remove("ARITH_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn run_with_cache_env(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arithstruct"))
        .args(args)
        .env("ARITH_CACHE_DIR", dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn jsonl(o: &Output) -> Vec<CatalogRecord> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("every stdout line is a record")).collect()
}

#[test]
fn enumerate_counts() {
    let o = run(&["enumerate", "--graph", "cycle", "--n", "4"]);
    assert_eq!(code(&o), 0);
    let recs = jsonl(&o);
    assert_eq!(recs.len(), 35);
    assert!(recs.iter().all(|r| r.graph == "cycle" && r.n == 4 && r.mu1.is_some()));
    assert!(String::from_utf8_lossy(&o.stderr).contains("35 structures, 7 up to symmetry"));

    let o = run(&["enumerate", "--n", "6", "--up-to-symmetry"]);
    let recs = jsonl(&o);
    assert_eq!(recs.len(), 45);
    assert_eq!(recs.iter().map(|r| r.orbit_size.unwrap()).sum::<usize>(), 462);
    assert!(recs.iter().all(|r| r.d == r.canonical));

    let o = run(&["enumerate", "--n-range", "3..5"]);
    assert_eq!(jsonl(&o).len(), 10 + 35 + 126);
}

#[test]
fn enumerate_errors() {
    assert_eq!(code(&run(&["enumerate", "--graph", "cycle", "--n", "2"])), 2);
    assert_eq!(code(&run(&["enumerate", "--n", "13"])), 3);
    assert_eq!(code(&run(&["enumerate", "--graph", "path", "--n", "12"])), 3);
    assert_eq!(code(&run(&["enumerate", "--n-range", "5..3"])), 2);
    assert_eq!(code(&run(&["enumerate", "--n", "4", "--format", "xml"])), 2);
    assert_eq!(code(&run(&["enumerate"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn enumerate_formats() {
    let o = run(&["enumerate", "--n", "3", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,d,r,mu1,orbit_size"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().any(|r| r.starts_with("3,\"1;5;2\",\"3;1;2\",5.41421356")));

    let o = run(&["enumerate", "--n", "3", "--format", "md", "--up-to-symmetry"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 2 + 3);
    assert!(text.contains("| 3 | (1,2,5) | (3,2,1) |"));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c4.jsonl");
    let o = run(&["enumerate", "--n", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 35);
}

#[test]
fn path_enumeration_reports_bound() {
    let o = run(&["enumerate", "--graph", "path", "--n", "5"]);
    assert_eq!(jsonl(&o).len(), 14);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("path n=5: entries searched up to 10, bound hit: no"), "{err}");
}

#[test]
fn cache_coherence() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = run(&["enumerate", "--n", "7", "--cache", cache]);
    assert_eq!(code(&first), 0);
    let file = dir.path().join("cycle_n7.jsonl");
    let on_disk: Vec<CatalogRecord> =
        std::fs::read_to_string(&file).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();

    let fresh = enumerate_cycle(7, &EnumerationLimits::default()).unwrap();
    let fresh = catalog_records(&fresh, None);
    assert_eq!(on_disk.len(), fresh.len());
    for (a, b) in on_disk.iter().zip(&fresh) {
        assert_eq!((&a.d, &a.r, &a.canonical), (&b.d, &b.r, &b.canonical));
        a.to_structure(GraphFamily::cycle(7).unwrap()).unwrap();
    }

    // second run reads the cache and prints the same catalog
    let second = run(&["enumerate", "--n", "7", "--cache", cache]);
    assert_eq!(stdout(&second), stdout(&first));
    assert!(!String::from_utf8_lossy(&second.stderr).contains("cached"));

    // the environment variable is the default, the flag wins
    let env_dir = tempfile::tempdir().unwrap();
    run_with_cache_env(&["count", "--n-range", "5..5"], env_dir.path());
    assert!(env_dir.path().join("cycle_n5.jsonl").exists());
    let flag_dir = tempfile::tempdir().unwrap();
    run_with_cache_env(&["count", "--n-range", "4..4", "--cache", flag_dir.path().to_str().unwrap()], env_dir.path());
    assert!(flag_dir.path().join("cycle_n4.jsonl").exists());
    assert!(!env_dir.path().join("cycle_n4.jsonl").exists());
}

#[test]
fn corrupt_cache_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    run(&["enumerate", "--n", "4", "--cache", cache]);
    let file = dir.path().join("cycle_n4.jsonl");
    let text = std::fs::read_to_string(&file).unwrap();
    let tampered = text.replacen("\"r\":[\"", "\"r\":[\"9", 1);
    std::fs::write(&file, tampered).unwrap();
    let o = run(&["enumerate", "--n", "4", "--cache", cache]);
    assert_eq!(code(&o), 0);
    assert_eq!(jsonl(&o).len(), 35);
    assert!(String::from_utf8_lossy(&o.stderr).contains("ignoring cache file"));
    assert_eq!(std::fs::read_to_string(&file).unwrap(), text);
}

#[test]
fn spectra_command() {
    let o = run(&["spectra", "--d", "1,8,2,2,2,2"]);
    assert_eq!(code(&o), 0);
    let s: SpectraOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(s.r, ["6", "1", "2", "3", "4", "5"]);
    assert!((s.mu1 - 8.303103).abs() < 1e-6);
    assert_eq!(format!("{:.2}", s.mu1), "8.30");

    let o = run(&["spectra", "--d", "2,2,3"]);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not an arithmetical structure"));
    assert!(o.stdout.is_empty());
    assert_eq!(code(&run(&["spectra", "--d", "2,0,2"])), 4);

    let o = run(&["spectra", "--d", "2,2,2,2", "--full"]);
    let s: SpectraOutput = serde_json::from_str(&stdout(&o)).unwrap();
    let ev = s.eigenvalues.unwrap();
    for (g, w) in ev.iter().zip([4.0, 2.0, 2.0, 0.0]) {
        assert!((g - w).abs() < 1e-9);
    }

    let o = run(&["spectra", "--d", "1,5,2", "--eigvec"]);
    let s: SpectraOutput = serde_json::from_str(&stdout(&o)).unwrap();
    let x = s.eigenvector.unwrap();
    assert_eq!(x.len(), 3);
    assert!(x.iter().map(|v| v.abs()).fold(0.0, f64::max) - 1.0 < 1e-12);

    let o = run(&["spectra", "--d", "1,2,1", "--graph", "path"]);
    let s: SpectraOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(s.r, ["1", "1", "1"]);
}

#[test]
fn table_command() {
    let o = run(&["table", "--n", "3"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[2].starts_with("| (1,2,5) |") && rows[2].contains("| 5.41 |") && rows[2].ends_with("| max |"));
    assert!(rows[..2].iter().all(|r| !r.contains("max")));

    let text = stdout(&run(&["table", "--n", "5"]));
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 15);
    assert!(rows[0].starts_with("| (2,2,2,2,2) |") && rows[0].contains("| 3.62 |"));

    let text = stdout(&run(&["table", "--n", "6", "--format", "csv"]));
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "n,d,r,mu1,orbit_size,max");
    assert_eq!(rows.len(), 46);
    assert_eq!(rows[45], "6,\"1;2;2;2;2;8\",\"6;5;4;3;2;1\",8.3,12,true");

    assert_eq!(code(&run(&["table", "--n", "2"])), 2);
    assert_eq!(code(&run(&["table", "--n", "13"])), 3);
}

#[test]
fn count_command() {
    let o = run(&["count", "--graph", "cycle", "--n-range", "3..6"]);
    assert_eq!(stdout(&o), "n,count\n3,10\n4,35\n5,126\n6,462\n");
    let o = run(&["count", "--graph", "cycle", "--n-range", "3..6", "--up-to-symmetry"]);
    assert_eq!(stdout(&o), "n,count\n3,3\n4,7\n5,15\n6,45\n");
    let o = run(&["count", "--graph", "path", "--n-range", "2..5"]);
    assert_eq!(stdout(&o), "n,count\n2,1\n3,2\n4,5\n5,14\n");
    assert_eq!(String::from_utf8_lossy(&o.stderr).matches("bound hit: no").count(), 4);
    assert_eq!(code(&run(&["count", "--n-range", "2..4"])), 2);
}

fn verify(args: &[&str]) -> (i32, Option<ReportDocument>) {
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    let o = run(&full);
    let doc = serde_json::from_str(&stdout(&o)).ok();
    (code(&o), doc)
}

#[test]
fn verify_examples() {
    let (c, doc) = verify(&["--theorem", "min", "--n-range", "3..8"]);
    assert_eq!(c, 0);
    let doc = doc.unwrap();
    assert_eq!(doc.schema_version, "1");
    assert_eq!(doc.reports.len(), 1);
    assert_eq!(doc.reports[0].theorem_id, "min");
    assert_eq!(doc.reports[0].n_range, (3, 8));
    assert_eq!(doc.environment.caps.max_cycle_n, 12);

    let (c, doc) = verify(&["--theorem", "max", "--n-range", "3..8"]);
    assert_eq!(c, 0);
    assert!(doc.unwrap().passed());

    let (c, doc) = verify(&["--theorem", "d-bound", "--n-range", "3..9"]);
    assert_eq!(c, 0);
    let maxes: Vec<f64> = doc.unwrap().reports[0].per_n.iter().map(|p| p.observed["max_entry"]).collect();
    assert_eq!(maxes, [5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 11.0]);
}

#[test]
fn verify_modes() {
    let (c, doc) = verify(&["--theorem", "lemma-M", "--n-range", "3..12"]);
    assert_eq!(c, 0);
    let doc = doc.unwrap();
    assert_eq!(doc.reports[0].theorem_id, "lemma-M");
    let first = &doc.reports[0].per_n[0];
    assert_eq!(serde_json::to_value(first.verdict).unwrap(), "not_applicable");

    // families-only beyond the catalog cap
    let (c, _) = verify(&["--theorem", "max", "--n-range", "30..31"]);
    assert_eq!(c, 0);
    let (c, doc) = verify(&["--theorem", "min", "--n-range", "12..13"]);
    assert_eq!(c, 3);
    assert!(doc.is_none());
    assert_eq!(verify(&["--theorem", "bogus"]).0, 2);

    let (c, doc) = verify(&["--theorem", "all", "--n-range", "3..6"]);
    assert_eq!(c, 0);
    assert_eq!(doc.unwrap().reports.len(), 10);
}

#[test]
fn report_round_trips() {
    let (_, doc) = verify(&["--theorem", "families", "--n-range", "4..5"]);
    let doc = doc.unwrap();
    let text = serde_json::to_string(&doc).unwrap();
    let back: ReportDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(back.reports, doc.reports);
}
