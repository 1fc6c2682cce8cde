//! Exact verifiers that decide whether a ℤ-graded algebra is the Cuntz-Pimsner
//! ring of an R-system built from its low-degree pieces, over ℚ or a prime field.
//!
//! Every "for all" check runs exhaustively inside an explicit degree and
//! word-length [`graded::Window`]. Results are windowed certificates, never
//! global proofs; a span that stops at the window edge yields
//! [`verdict::Certificate::InconclusiveWindow`].
//!
//! | module | contents |
//! |---|---|
//! | [`exactlin`] | sparse exact vectors, echelon forms, spans, kernels |
//! | [`graded`] | windowed graded algebras, annihilators, perp ideals, generated spans |
//! | [`rsystem`] | R-systems, tensor powers, rank-one operators, (FS), canonical ideals |
//! | [`realization`] | conditions 1 to 4, the ideal identity, strongly graded criteria |
//! | [`instances`] | Leavitt path, Cohn, crossed product and corner skew Laurent algebras |
//! | [`steinberg`] | finite groupoids, H-triples, indicator decompositions |
//! | [`io`], [`cli`] | document format, reports, the `gradedcp` command |
//!
//! ## Examples
//!
//! ```text
//! cargo run --example exact_linear_algebra
//! cargo run --example lpa_realization
//! cargo run --example steinberg_worked_example
//! cargo run --example crossed_product
//! cargo run --example corner_skew
//! cargo run --example rsystem_tensor_powers
//! cargo run --example decompose_indicator
//! cargo run --example cli_in_process
//! ```
//!
//! ```
//! use gradedcp::exactlin::Field;
//! use gradedcp::graded::Window;
//! use gradedcp::instances::{build_lpa, Graph};
//! use gradedcp::realization::verify_realization;
//! use gradedcp::verdict::Certificate;
//!
//! let lpa = build_lpa(&Graph::e_star(), Field::Rational, Window::new(-4, 4, 8)).unwrap();
//! assert_eq!(lpa.algebra().dim(), 25);
//! let report = verify_realization(&lpa.realization_data());
//! assert_eq!(report.certificate, Certificate::WindowedCertified);
//! ```

pub mod cli;
pub mod exactlin;
pub mod graded;
pub mod instances;
pub mod io;
pub mod realization;
pub mod rsystem;
pub mod steinberg;
pub mod verdict;
