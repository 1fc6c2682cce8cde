//! Runs CLI subcommands in-process on a generated document and prints the
//! structured report with its exit code.

use gradedcp::cli::run;
use gradedcp::instances::Graph;
use gradedcp::io::graph_document;

fn main() {
    let path = std::env::temp_dir().join("gradedcp-e-star.graph");
    std::fs::write(&path, graph_document(&Graph::e_star()).serialize()).unwrap();
    let path = path.to_string_lossy().to_string();
    for args in [
        vec!["gradedcp", "build-lpa", path.as_str()],
        vec!["gradedcp", "--format", "structured", "check-realization", path.as_str()],
    ] {
        let out = run(args);
        print!("{}", out.stdout);
        eprint!("{}", out.stderr);
        println!("exit {}\n", out.code);
    }
}
