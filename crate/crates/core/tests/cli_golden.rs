//! Golden-file tests for the command line. Set `UPDATE_GOLDEN=1` to rewrite
//! the expected files after an intentional output change.

use std::path::{Path, PathBuf};

use gradedcp::cli::run;
use gradedcp::io::Document;

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn check(name: &str, args: &[&str], code: i32) {
    let dir = corpus();
    let mut argv = vec!["gradedcp".to_string()];
    for a in args {
        argv.push(match a.strip_prefix('@') {
            Some(file) => dir.join(file).display().to_string(),
            None => a.to_string(),
        });
    }
    let out = run(&argv);
    assert_eq!(out.code, code, "{name}: stdout {} stderr {}", out.stdout, out.stderr);
    let actual = format!("{}{}", out.stdout, out.stderr).replace(&dir.display().to_string(), "<corpus>");
    let golden = dir.join("golden").join(format!("{name}.out"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&golden, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&golden).unwrap_or_else(|_| panic!("missing {}", golden.display()));
    assert_eq!(actual, expected, "{name} differs from its golden file");
}

#[test]
fn certified_realizations_exit_zero() {
    check("lpa_e_star", &["check-realization", "@e_star_lpa.job", "--format", "structured"], 0);
    check("two_sinks", &["check-realization", "@two_sinks.job"], 0);
    check("swap_k2_strong", &["check-grcp1", "@swap_k2.cp", "--format", "structured"], 0);
    check("laurent_corner", &["check-realization", "@laurent.cs"], 0);
    check("steinberg_e_star", &["check-steinberg", "@e_star_htriple.doc", "--format", "structured"], 0);
}

#[test]
fn refuted_realization_exits_one_with_witness() {
    check("cohn_e_star", &["check-realization", "@e_star_cohn.job", "--format", "structured"], 1);
    check("hypothesis_broken", &["check-steinberg", "@broken_htriple.doc"], 1);
}

#[test]
fn truncated_window_exits_two() {
    check("lpa_short_words", &["check-realization", "@e_star_lpa.job", "--window=-1..1", "--wordlen", "2"], 2);
}

#[test]
fn builders_and_decomposition() {
    check("build_lpa_e_star", &["build-lpa", "@e_star.graph"], 0);
    check("build_groupoid_pair", &["build-groupoid", "@pair_classes.doc"], 0);
    check("decompose_ef", &["decompose", "@e_star_htriple.doc", "--target", "(ef,0,ef)"], 0);
    check("fuzz_seed_7", &["fuzz", "--seed", "7", "--count", "30", "--format", "structured"], 0);
}

#[test]
fn errors_exit_above_two() {
    check("empty_document", &["build-lpa", "@empty.doc"], 4);
    check("unknown_vertex", &["build-lpa", "@bad_vertex.graph"], 4);
    check("cyclic_groupoid", &["build-groupoid", "@cyclic.graph"], 5);
    check("unknown_subcommand", &["frobnicate"], 3);
}

#[test]
fn corpus_documents_round_trip() {
    let mut seen = 0;
    for entry in std::fs::read_dir(corpus()).unwrap() {
        let path = entry.unwrap().path();
        if path.is_dir() || path.file_name().is_some_and(|n| n == "empty.doc") {
            continue;
        }
        let doc = Document::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let text = doc.serialize();
        assert_eq!(Document::parse(&text).unwrap(), doc, "{}", path.display());
        assert_eq!(Document::parse(&text).unwrap().serialize(), text);
        seen += 1;
    }
    assert!(seen >= 10);
}
