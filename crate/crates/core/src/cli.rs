//! Command-line front end. [`run`] parses arguments, executes one job and
//! returns the rendered output with its exit code.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactlin::Field;
use crate::graded::{GradedAlgebra, Window};
use crate::instances::{build_cohn, build_lpa};
use crate::io::{
    emit, graph_from, groupoid_document, groupoid_from, htriple_from, instance_from, list, Document, Format,
    IoError, Report, Settings,
};
use crate::realization::{check_strongly_graded_realization, verify_realization};
use crate::steinberg::{
    check_htriple_generation, check_htriple_hypothesis, check_htriple_products, check_unperforated,
    compare_inverses, decompose_indicator, steinberg_annihilator, steinberg_realization_data, BisectionChoice,
    FactorOrder, FiniteGroupoid, HTriple,
};
use crate::verdict::{CheckResult, Outcome};

pub const EXIT_USAGE: i32 = 3;
pub const EXIT_PARSE: i32 = 4;
pub const EXIT_OTHER: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "gradedcp", version, about = "Exact verifiers for graded algebras built from R-systems")]
pub struct Cli {
    /// `rational`, or a prime as `prime:7`, `f7` or `7`.
    #[arg(long, global = true, default_value = "rational")]
    pub field: Field,
    /// Degree window as `MIN..MAX`.
    #[arg(long, global = true, default_value = "-4..4", allow_hyphen_values = true, value_parser = parse_range)]
    pub window: (i64, i64),
    /// Word-length cap for generated spans.
    #[arg(long, global = true, default_value_t = 8)]
    pub wordlen: usize,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// `text` or `structured`.
    #[arg(long, global = true, default_value = "text")]
    pub format: Format,
    /// Append wall-clock time; output is then no longer reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conditions 1 to 4, the ideal identity and the R-system checks.
    CheckRealization { file: PathBuf },
    /// Strong grading, local units and the annihilator condition on `(A₀, A₁, A₋₁)`.
    #[command(name = "check-grcp1")]
    CheckStronglyGraded { file: PathBuf },
    /// H-triple checks, the annihilator formula and the groupoid realization.
    CheckSteinberg { file: PathBuf },
    /// Normal-form basis of the Leavitt path algebra, by degree.
    BuildLpa {
        file: PathBuf,
        /// Drop the Cuntz-Krieger relation.
        #[arg(long)]
        cohn: bool,
    },
    /// Boundary-path groupoid of an acyclic graph, as a groupoid document.
    BuildGroupoid { file: PathBuf },
    /// Writes `1_C` through bisections inside `H₀`, `H₁`, `H₋₁`.
    Decompose {
        file: PathBuf,
        /// Arrows of `C`, `;`-separated.
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Free)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = ChoiceArg::Singleton)]
        choice: ChoiceArg,
    },
    /// Seeded random groupoids: decompositions and the annihilator formula.
    Fuzz {
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 30)]
        max_arrows: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    Free,
    Fixed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ChoiceArg {
    Singleton,
    Greedy,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected MIN..MAX, found `{s}`"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad upper bound `{hi}`"))?;
    if lo > 0 || hi < 0 {
        return Err("the window must contain degree 0".into());
    }
    Ok((lo, hi))
}

/// Rendered output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Execution {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                },
                _ => Execution {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                },
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Execution {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: if e.is_parse() { EXIT_PARSE } else { EXIT_OTHER },
        },
    }
}

impl Cli {
    pub fn settings(&self) -> Settings {
        Settings {
            field: self.field,
            window: Window::new(self.window.0, self.window.1, self.wordlen),
        }
    }
}

fn load(path: &Path) -> Result<Document, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    Document::parse(&text)
}

pub fn execute(cli: &Cli) -> Result<Execution, IoError> {
    let start = Instant::now();
    let settings = cli.settings();
    let report = match &cli.command {
        Command::CheckRealization { file } => check_realization(&load(file)?, settings)?,
        Command::CheckStronglyGraded { file } => strongly_graded(&load(file)?, settings)?,
        Command::CheckSteinberg { file } => steinberg(&load(file)?, settings)?,
        Command::BuildLpa { file, cohn } => lpa(&load(file)?, settings, *cohn)?,
        Command::BuildGroupoid { file } => {
            let g = groupoid_from(&load(file)?)?;
            return Ok(Execution {
                stdout: groupoid_document(&g).serialize(),
                stderr: String::new(),
                code: 0,
            });
        }
        Command::Decompose {
            file,
            target,
            order,
            choice,
        } => decompose(&load(file)?, target, *order, *choice)?,
        Command::Fuzz { count, max_arrows } => fuzz(settings, cli.seed, *count, *max_arrows),
    };
    let mut report = report.finish();
    if cli.timing {
        report.timing = Some(start.elapsed());
    }
    Ok(Execution {
        stdout: emit(&report, cli.format),
        stderr: String::new(),
        code: report.exit_code(),
    })
}

fn describe(report: &mut Report, a: &GradedAlgebra, settings: Settings) {
    report.note("algebra", a.name());
    report.note("field", settings.field);
    report.note("window", format!("{}..{}", a.window().min_degree, a.window().max_degree));
    report.note("dim", a.dim());
    let dims: Vec<String> = a
        .window()
        .degrees()
        .map(|n| format!("{n}:{}", a.degree_component(n).map_or(0, |c| c.len())))
        .collect();
    report.note("graded-dims", dims.join(" "));
}

fn check_realization(doc: &Document, settings: Settings) -> Result<Report, IoError> {
    let inst = instance_from(doc, settings)?;
    let mut report = Report::new("check-realization");
    describe(&mut report, &inst.algebra, settings);
    let d = &inst.data;
    report.note("dims-r-i-j", format!("{} {} {}", d.r.dim(), d.i.dim(), d.j.dim()));
    let out = verify_realization(d);
    if let Some(id) = &out.identity {
        report.note("identity-dim", id.right.dim());
    }
    if let Some(cmp) = &inst.inverses {
        report.note("inverse-sets-equal", cmp.equal());
    }
    report.checks = out.checks;
    Ok(report)
}

fn strongly_graded(doc: &Document, settings: Settings) -> Result<Report, IoError> {
    let inst = instance_from(doc, settings)?;
    let mut report = Report::new("check-grcp1");
    describe(&mut report, &inst.algebra, settings);
    let out = check_strongly_graded_realization(&inst.algebra);
    report.checks = out.checks;
    if let Some(r) = out.realization {
        report.checks.extend(r.checks);
    }
    Ok(report)
}

fn steinberg_input(doc: &Document) -> Result<(FiniteGroupoid, HTriple), IoError> {
    let g = groupoid_from(doc)?;
    let h = htriple_from(doc, &g)?;
    Ok((g, h))
}

fn steinberg(doc: &Document, settings: Settings) -> Result<Report, IoError> {
    let (g, h) = steinberg_input(doc)?;
    let mut report = Report::new("check-steinberg");
    report.note("arrows", g.len());
    report.note("units", g.units().len());
    report.note("field", settings.field);
    report.push(check_htriple_products(&g, &h));
    report.push(check_htriple_hypothesis(&g, &h));
    report.push(check_htriple_generation(&g, &h).0);
    let max = g.degrees().into_iter().max().unwrap_or(0);
    report.push(check_unperforated(&g, max));
    let cmp = compare_inverses(&g, &h);
    let names = |s| g.set_names(s).join(" ");
    report.note("h0-subgroupoid", cmp.h0_inverse_closed && cmp.h0_product_closed);
    report.note("inverse-h1-missing-from-hm1", names(&cmp.missing_from_hm1));
    report.note("hm1-missing-from-inverse-h1", names(&cmp.extra_in_hm1));
    report.push(if cmp.consistent() {
        CheckResult::pass("inverse-sets", "consistent with the H0 structure")
    } else {
        CheckResult::fail("inverse-sets", "H0 is a subgroupoid but H-1 differs from the inverse of H1")
    });
    let ann = steinberg_annihilator(&g, &h.h0, &h.h1, settings.field);
    report.note("annihilator", names(&ann.formula));
    report.push(if ann.agree {
        CheckResult::pass("annihilator-formula", format!("span of {} arrows", ann.formula.len()))
    } else {
        CheckResult::fail("annihilator-formula", "arrow formula differs from the linear-algebra annihilator")
    });
    match steinberg_realization_data(&g, &h, settings.field) {
        Ok((data, _)) => report.checks.extend(verify_realization(&data).checks),
        Err(e) => report.push(CheckResult::new("realization", Outcome::NotApplicable, e.to_string())),
    }
    Ok(report)
}

fn lpa(doc: &Document, settings: Settings, cohn: bool) -> Result<Report, IoError> {
    let g = graph_from(doc)?;
    let built = if cohn {
        build_cohn(&g, settings.field, settings.window)?
    } else {
        build_lpa(&g, settings.field, settings.window)?
    };
    let a = built.algebra();
    let mut report = Report::new("build-lpa");
    describe(&mut report, a, settings);
    for n in a.window().degrees() {
        let labels: Vec<&str> = a.degree_component(n).unwrap_or_default().iter().map(|k| a.label(*k)).collect();
        report.note(format!("basis.{n}"), labels.join(", "));
    }
    let pairs = built.rules().critical_pairs();
    report.push(if pairs.confluent() {
        CheckResult::pass("confluence", format!("{} critical pairs resolve", pairs.checked))
    } else {
        CheckResult::fail("confluence", format!("{} critical pairs diverge", pairs.failures.len()))
    });
    Ok(report)
}

fn decompose(
    doc: &Document,
    target: &str,
    order: OrderArg,
    choice: ChoiceArg,
) -> Result<Report, IoError> {
    let (g, h) = steinberg_input(doc)?;
    let c = g.arrow_set(&list(target))?;
    let ds = [h.h0.clone(), h.h1.clone(), h.hm1.clone()];
    let order = match order {
        OrderArg::Free => FactorOrder::Free,
        OrderArg::Fixed => FactorOrder::Fixed,
    };
    let choice = match choice {
        ChoiceArg::Singleton => BisectionChoice::Singleton,
        ChoiceArg::Greedy => BisectionChoice::Greedy,
    };
    let mut report = Report::new("decompose");
    report.note("target", g.set_names(&c).join(" "));
    match decompose_indicator(&g, &c, &ds, order, choice) {
        Ok(dec) => {
            report.note("terms", dec.terms.len());
            report.note("decomposition", dec.render(&g));
            report.push(if dec.is_valid_for(&g, &c, &ds) {
                CheckResult::pass("reconvolution", "terms sum to 1_C with disjoint supports")
            } else {
                CheckResult::fail("reconvolution", "terms do not reproduce 1_C")
            });
        }
        Err(e) => report.push(CheckResult::fail("decompose", e.to_string())),
    }
    Ok(report)
}

fn fuzz(settings: Settings, seed: u64, count: usize, max_arrows: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new("fuzz");
    report.note("seed", seed);
    report.note("count", count);
    let (mut bad_dec, mut bad_ann) = (Vec::new(), Vec::new());
    for n in 0..count {
        let g = FiniteGroupoid::random_pair_classes(&mut rng, max_arrows);
        let ds: Vec<_> = g.degrees().into_iter().map(|d| g.degree_set(d)).collect();
        let c = g.random_bisection(&mut rng);
        let ok = decompose_indicator(&g, &c, &ds, FactorOrder::Free, BisectionChoice::Greedy)
            .map(|dec| dec.is_valid_for(&g, &c, &ds))
            .unwrap_or(false);
        if !ok {
            bad_dec.push(n);
        }
        let h0 = random_subset(&g.degree_set(0), &mut rng);
        let h1 = random_subset(&g.degree_set(1), &mut rng);
        if !steinberg_annihilator(&g, &h0, &h1, settings.field).agree {
            bad_ann.push(n);
        }
    }
    for (name, bad) in [("fuzz-decompose", bad_dec), ("fuzz-annihilator", bad_ann)] {
        report.push(if bad.is_empty() {
            CheckResult::pass(name, format!("{count} cases"))
        } else {
            CheckResult::fail(name, format!("{} of {count} cases fail", bad.len())).with_note(format!("cases {bad:?}"))
        });
    }
    report
}

fn random_subset(set: &crate::steinberg::ArrowSet, rng: &mut impl rand::Rng) -> crate::steinberg::ArrowSet {
    set.iter().copied().filter(|_| rng.gen_bool(0.5)).collect()
}
