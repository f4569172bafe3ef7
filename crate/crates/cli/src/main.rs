//! `opposition`: validate class 𝒞 structures, verify diagrams of opposition
//! and run exhaustive sweeps.
//!
//! Exit status: 0 when every check passes, 1 when a violation or
//! counterexample is found, 2 on invalid input or usage.

mod demo;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use opposition_core::diagrams::{
    classify_pair, counterexample_search, expected_claims_with, points_in_order, render_dot, verify_claims_at, Claim,
    Diagram, Hypothesis, Shape, UyForm,
};
use opposition_core::harness::enumerate::{compact_structures, structure_name};
use opposition_core::harness::{enumerate_structures, sweep_theorems, EnumerationConfig};
use opposition_core::statements::StatementKind;
use opposition_core::structure::{load_structure, validate_axioms, ClassCStructure, StructureFile};
use opposition_core::Error;

#[derive(Debug, Parser)]
#[command(
    name = "opposition",
    version,
    about = "Diagrams of opposition over class C structures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Point hypotheses. Without `--forward`/`--backward` the forward import
/// `∃z ∈ Z: P ≻ z` applies; `--distinct` and `--nondual` add side
/// conditions on top of it.
#[derive(Debug, Clone, Copy, Default, Args)]
struct HypothesisFlags {
    /// Require P ≻ z for some zero z.
    #[arg(long)]
    forward: bool,
    /// Require ¬P ≻ z for some zero z.
    #[arg(long)]
    backward: bool,
    /// Require P ≠ Q.
    #[arg(long)]
    distinct: bool,
    /// Require P ≠ ¬Q.
    #[arg(long)]
    nondual: bool,
    /// Check every point, with no hypothesis at all.
    #[arg(long, conflicts_with_all = ["forward", "backward", "distinct", "nondual"])]
    no_hypothesis: bool,
}

impl HypothesisFlags {
    fn resolve(self) -> Hypothesis {
        if self.no_hypothesis {
            return Hypothesis::NONE;
        }
        let import_given = self.forward || self.backward;
        Hypothesis {
            import_forward: self.forward || !import_given,
            import_backward: self.backward,
            distinct: self.distinct,
            nondual: self.nondual,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Square,
    Cube,
    Hexagon,
}

impl From<ShapeArg> for Shape {
    fn from(s: ShapeArg) -> Self {
        match s {
            ShapeArg::Square => Shape::Square,
            ShapeArg::Cube => Shape::Cube,
            ShapeArg::Hexagon => Shape::Hexagon,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a structure file and print the axiom report and zero set.
    Check { file: PathBuf },
    /// Verify the claims of a diagram on a structure, optionally writing DOT.
    Diagram {
        #[arg(long, value_enum)]
        shape: ShapeArg,
        #[arg(long)]
        structure: PathBuf,
        /// Restrict verification to one point (needs --q).
        #[arg(long, requires = "q")]
        p: Option<String>,
        #[arg(long, requires = "p")]
        q: Option<String>,
        /// Use the |Q| forms of U and Y.
        #[arg(long)]
        abs: bool,
        /// Write the annotated diagram as DOT (`-` for stdout).
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        hypothesis: HypothesisFlags,
    },
    /// Relations that hold between two statements at every admissible point.
    Relations {
        #[arg(long)]
        structure: PathBuf,
        #[arg(long)]
        s1: StatementKind,
        #[arg(long)]
        s2: StatementKind,
        #[arg(long)]
        abs: bool,
        #[command(flatten)]
        hypothesis: HypothesisFlags,
    },
    /// Search for a point falsifying a claim such as `A->I` or `contrary(a,e)`.
    Counterexample {
        #[arg(long)]
        claim: Claim,
        /// Search this structure; otherwise every enumerated structure.
        #[arg(long)]
        structure: Option<PathBuf>,
        #[arg(long, default_value_t = 4, conflicts_with = "structure")]
        max_size: usize,
        #[arg(long, conflicts_with = "structure")]
        iso: bool,
        #[arg(long)]
        abs: bool,
        #[command(flatten)]
        hypothesis: HypothesisFlags,
    },
    /// Count (or list) all class C structures up to a size.
    Enumerate {
        #[arg(long)]
        max_size: usize,
        /// One representative per isomorphism class.
        #[arg(long)]
        iso: bool,
        /// Print every structure, not only the counts.
        #[arg(long)]
        list: bool,
    },
    /// Check diagram claims on every enumerated structure.
    Sweep {
        #[arg(long)]
        max_size: usize,
        /// Repeatable; all shapes when omitted.
        #[arg(long, value_enum)]
        shape: Vec<ShapeArg>,
        #[arg(long)]
        iso: bool,
        #[arg(long)]
        abs: bool,
        /// Print a JSON summary instead of text.
        #[arg(long)]
        json: bool,
        /// Witnesses kept per claim.
        #[arg(long, default_value_t = 3)]
        witnesses: usize,
        #[command(flatten)]
        hypothesis: HypothesisFlags,
    },
    /// Showcase one of the concrete instances.
    InstanceDemo(demo::DemoArgs),
}

/// What a subcommand produced: its report text and whether every check passed.
pub(crate) struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    pub(crate) fn new(text: String, passed: bool) -> Self {
        Self { text, passed }
    }
}

fn uy_form(abs: bool) -> UyForm {
    if abs {
        UyForm::Abs
    } else {
        UyForm::Compound
    }
}

fn load(path: &PathBuf) -> Result<ClassCStructure, Error> {
    load_structure(path)
}

fn check(file: &PathBuf) -> Result<Outcome, Error> {
    let raw = StructureFile::load(file)?.to_raw()?;
    let report = validate_axioms(&raw);
    let mut text = format!("STRUCTURE {} size={}\n", raw.name(), raw.size());
    text.push_str(&report.to_text());
    let passed = report.all_hold();
    if passed {
        let s = opposition_core::admit(raw)?;
        writeln!(text, "Z = {}", s.format_set(s.zeros())).unwrap();
        writeln!(text, "RESULT class-C").unwrap();
    } else {
        writeln!(text, "RESULT rejected: {report}").unwrap();
    }
    Ok(Outcome::new(text, passed))
}

fn diagram(
    shape: Shape,
    structure: &PathBuf,
    point: Option<(&str, &str)>,
    form: UyForm,
    dot: Option<&PathBuf>,
    h: Hypothesis,
) -> Result<Outcome, Error> {
    let s = load(structure)?;
    let claims = expected_claims_with(shape, &h, form);
    let points: Vec<_> = match point {
        Some((p, q)) => vec![(s.find(p)?, s.find(q)?)],
        None => points_in_order(&s).collect(),
    };
    let report = verify_claims_at(&s, shape.name(), &claims, &h, points.iter().copied());
    let mut text = format!("STRUCTURE {} Z = {}\n", s.name(), s.format_set(s.zeros()));
    text.push_str(&report.to_text());
    for result in report.violated() {
        for &(p, q) in &points {
            if h.admits(&s, p, q) && result.claim.holds_at(&s, &p, &q) == Some(false) {
                writeln!(text, "VIOLATION {} P={} Q={}", result.claim, s.label(p), s.label(q)).unwrap();
            }
        }
    }
    if let Some(out) = dot {
        let rendered = render_dot(&Diagram::for_shape(shape, form), Some(&report));
        if out.as_os_str() == "-" {
            text.push_str(&rendered);
        } else {
            std::fs::write(out, rendered)?;
            writeln!(text, "DOT {}", out.display()).unwrap();
        }
    }
    let passed = report.violated().next().is_none();
    Ok(Outcome::new(text, passed))
}

fn statement(kind: StatementKind, abs: bool) -> StatementKind {
    if abs {
        kind.to_abs()
    } else {
        kind
    }
}

fn relations(structure: &PathBuf, s1: StatementKind, s2: StatementKind, h: Hypothesis) -> Result<Outcome, Error> {
    let s = load(structure)?;
    let c = classify_pair(&s, s1, s2, &h);
    let names: Vec<&str> = c.relations.iter().map(|r| r.name()).collect();
    let text = format!(
        "RELATIONS {s1} {s2} hyp={h} admissible={} vacuous={} relations={}\n",
        c.admissible_points,
        c.vacuous,
        if names.is_empty() {
            "-".to_string()
        } else {
            names.join(",")
        }
    );
    Ok(Outcome::new(text, true))
}

fn counterexample(claim: Claim, structures: &[ClassCStructure], h: Hypothesis) -> Outcome {
    for s in structures {
        if let Some((p, q)) = counterexample_search(s, &claim, &h) {
            let text = format!(
                "COUNTEREXAMPLE {claim} hyp={h} structure={} P={} Q={}\n",
                s.name(),
                s.label(p),
                s.label(q)
            );
            return Outcome::new(text, false);
        }
    }
    Outcome::new(
        format!("NO-COUNTEREXAMPLE {claim} hyp={h} structures={}\n", structures.len()),
        true,
    )
}

fn enumerate(max_size: usize, iso: bool, list: bool) -> Result<Outcome, Error> {
    EnumerationConfig::new(max_size).iso(iso).validate()?;
    let mut text = String::new();
    let mut total = 0;
    for n in 1..=max_size {
        let structures = compact_structures(n, iso)?;
        writeln!(text, "SIZE {n} structures={}", structures.len()).unwrap();
        total += structures.len();
        if list {
            for (i, c) in structures.iter().enumerate() {
                let s = c.to_structure(&structure_name(n, i, iso));
                let cover: Vec<String> = s
                    .raw()
                    .cover_pairs()
                    .iter()
                    .map(|&(a, b)| format!("{}<{}", s.label(a), s.label(b)))
                    .collect();
                let neg: Vec<String> = s
                    .elements()
                    .map(|x| format!("{}:{}", s.label(x), s.label(s.neg(x))))
                    .collect();
                writeln!(
                    text,
                    "STRUCTURE {} cover={} neg={} Z={}",
                    s.name(),
                    if cover.is_empty() {
                        "-".to_string()
                    } else {
                        cover.join(",")
                    },
                    neg.join(","),
                    s.format_set(s.zeros())
                )
                .unwrap();
            }
        }
    }
    writeln!(text, "TOTAL structures={total}").unwrap();
    Ok(Outcome::new(text, true))
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Check { file } => check(&file),
        Command::Diagram {
            shape,
            structure,
            p,
            q,
            abs,
            dot,
            hypothesis,
        } => {
            let point = p.as_deref().zip(q.as_deref());
            diagram(
                shape.into(),
                &structure,
                point,
                uy_form(abs),
                dot.as_ref(),
                hypothesis.resolve(),
            )
        }
        Command::Relations {
            structure,
            s1,
            s2,
            abs,
            hypothesis,
        } => relations(&structure, statement(s1, abs), statement(s2, abs), hypothesis.resolve()),
        Command::Counterexample {
            claim,
            structure,
            max_size,
            iso,
            abs,
            hypothesis,
        } => {
            let claim = if abs { claim.with_abs() } else { claim };
            let structures = match structure {
                Some(path) => vec![load(&path)?],
                None => enumerate_structures(&EnumerationConfig::new(max_size).iso(iso))?,
            };
            Ok(counterexample(claim, &structures, hypothesis.resolve()))
        }
        Command::Enumerate { max_size, iso, list } => enumerate(max_size, iso, list),
        Command::Sweep {
            max_size,
            shape,
            iso,
            abs,
            json,
            witnesses,
            hypothesis,
        } => {
            let shapes: Vec<Shape> = if shape.is_empty() {
                Shape::ALL.to_vec()
            } else {
                shape.into_iter().map(Shape::from).collect()
            };
            let mut cfg = EnumerationConfig::new(max_size)
                .iso(iso)
                .hypothesis(hypothesis.resolve())
                .shapes(&shapes)
                .uy_form(uy_form(abs));
            cfg.max_witnesses = witnesses;
            let report = sweep_theorems(&cfg)?;
            let text = if json {
                report.summary_json() + "\n"
            } else {
                report.to_text()
            };
            Ok(Outcome::new(text, report.total_violations() == 0))
        }
        Command::InstanceDemo(args) => demo::run(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
