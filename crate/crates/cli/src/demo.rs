//! `instance-demo`: walkthroughs of the concrete instances.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use opposition_core::diagrams::{counterexample_search, expected_claims, verify_shape, Hypothesis, Shape, UyForm};
use opposition_core::harness::{sample_check_instance, SampleInstance};
use opposition_core::instances::matrix::{
    load_matrix, matrix_leq, matrix_zero_member, matrix_zero_skew, CMatrix, MatrixOrderConfig,
};
use opposition_core::instances::multiset::{
    classical_complement, multiset_leq, multiset_leq_literal, multiset_neg, multiset_union, IntegerLine,
    MultiplicityConfig, SignedMultiset, SignedMultisets,
};
use opposition_core::instances::negation::NegationGenerator;
use opposition_core::instances::three_valued;
use opposition_core::instances::truth::{prop_square, prop_square_vectors};
use opposition_core::statements::{eval_statement, StatementKind};
use opposition_core::structure::validate_axioms;
use opposition_core::Error;

use crate::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoKind {
    ThreeValued,
    Multiset,
    Sets,
    PropSquare,
    Matrix,
    Negation,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(value_enum)]
    which: DemoKind,
    /// First operand: a multiset (multiset), a matrix (matrix) or a φ
    /// description (negation), as JSON.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Second operand for multiset and matrix.
    #[arg(long)]
    other: Option<PathBuf>,
    /// Random samples (matrix) or grid points (negation).
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Matrix dimension for sampling.
    #[arg(long, default_value_t = 2)]
    dim: usize,
    /// Exponent p of φ(x) = x^p when no --input is given.
    #[arg(long, default_value_t = 2.0)]
    power: f64,
    /// Universe for the sets demo.
    #[arg(long, value_delimiter = ',', default_value = "a,b,c,d")]
    universe: Vec<String>,
}

pub fn run(args: DemoArgs) -> Result<Outcome, Error> {
    match args.which {
        DemoKind::ThreeValued => Ok(three_valued_demo()),
        DemoKind::Multiset => multiset_demo(&args),
        DemoKind::Sets => sets_demo(&args.universe),
        DemoKind::PropSquare => Ok(prop_square_demo()),
        DemoKind::Matrix => matrix_demo(&args),
        DemoKind::Negation => negation_demo(&args),
    }
}

fn three_valued_demo() -> Outcome {
    let t3 = three_valued();
    let mut text = format!("STRUCTURE {} elements={}\n", t3.name(), t3.labels().join(","));
    text.push_str(&validate_axioms(t3.raw()).to_text());
    writeln!(text, "Z = {}", t3.format_set(t3.zeros())).unwrap();

    let h = Hypothesis::forward();
    let mut passed = true;
    for shape in Shape::ALL {
        let report = verify_shape(&t3, shape, &h, UyForm::Compound);
        text.push_str(&report.to_text());
        let violated: Vec<String> = report.violated().map(|r| r.claim.to_string()).collect();
        let expected: &[&str] = match shape {
            Shape::Cube => &["contrary(a,e)", "subcontrary(i,o)"],
            _ => &[],
        };
        passed &= violated == expected;
    }
    writeln!(
        text,
        "NOTE cube contrary(a,e) and subcontrary(i,o) need a backward import as well"
    )
    .unwrap();

    let claim = expected_claims(Shape::Square, &h)[0];
    match counterexample_search(&t3, &claim, &Hypothesis::NONE) {
        Some((p, q)) => writeln!(
            text,
            "WITHOUT-IMPORT {claim} fails at P={} Q={}",
            t3.label(p),
            t3.label(q)
        )
        .unwrap(),
        None => passed = false,
    }
    Outcome::new(text, passed)
}

fn load_multiset(path: Option<&PathBuf>, default: &[(&str, i64)]) -> Result<SignedMultiset<i64>, Error> {
    match path {
        Some(p) => SignedMultiset::load(p),
        None => SignedMultiset::new(default.iter().map(|&(k, v)| (k, v)), &MultiplicityConfig::integers()),
    }
}

fn multiset_demo(args: &DemoArgs) -> Result<Outcome, Error> {
    let m = MultiplicityConfig::integers();
    let p = load_multiset(args.input.as_ref(), &[("x", 2), ("y", 1)])?;
    let q = load_multiset(args.other.as_ref(), &[("x", 1), ("z", -1)])?;
    let np = multiset_neg(&p, &m)?;
    let empty = SignedMultiset::empty();
    let cancel = multiset_union(&p, &np, &m)?;
    let mut passed = cancel.is_empty() && multiset_neg(&np, &m)? == p;

    let mut text = String::new();
    writeln!(text, "P = {p}").unwrap();
    writeln!(text, "Q = {q}").unwrap();
    writeln!(text, "¬P = {np}").unwrap();
    writeln!(text, "P ⊎ ¬P = {cancel}").unwrap();
    writeln!(text, "P ⪯ Q = {}", multiset_leq(&p, &q, &m)?).unwrap();
    writeln!(text, "P is a zero (¬P ⪯ P) = {}", multiset_leq(&np, &p, &m)?).unwrap();

    let x = SignedMultiset::new([("x", 1)], &m)?;
    let literal = multiset_leq_literal(&x, &empty, &m)? && multiset_leq_literal(&empty, &x, &m)?;
    writeln!(
        text,
        "LITERAL-ORDER {{x:1}} ⪯ {{}} and {{}} ⪯ {{x:1}} = {literal} (antisymmetry fails); pointwise {{x:1}} ⪯ {{}} = {}",
        multiset_leq(&x, &empty, &m)?
    )
    .unwrap();
    passed &= literal;

    // the zeros are the multisets with no negative multiplicity
    let order = SignedMultisets { config: m };
    let h = Hypothesis::forward();
    let above_zero = |a: &SignedMultiset<i64>| a != &empty && multiset_leq(&empty, a, &order.config).unwrap_or(false);
    if h.admits_with(&order, &p, &q, above_zero) {
        for kind in StatementKind::SQUARE {
            writeln!(text, "STATEMENT {kind} = {}", eval_statement(&order, &p, &q, kind)?).unwrap();
        }
        for claim in expected_claims(Shape::Square, &h) {
            let ok = claim.holds_at(&order, &p, &q) == Some(true);
            passed &= ok;
            writeln!(text, "CLAIM {claim} {}", if ok { "holds" } else { "violated" }).unwrap();
        }
    } else {
        writeln!(text, "SQUARE skipped: P is not strictly above a zero").unwrap();
    }
    Ok(Outcome::new(text, passed))
}

fn sets_demo(universe: &[String]) -> Result<Outcome, Error> {
    const MAX_UNIVERSE: usize = 10;
    if universe.is_empty() || universe.len() > MAX_UNIVERSE {
        return Err(Error::Usage(format!("universe needs 1 to {MAX_UNIVERSE} elements")));
    }
    let m = MultiplicityConfig::<IntegerLine>::integers();
    let u = SignedMultiset::new(universe.iter().map(|k| (k.as_str(), 1)), &m)?;
    if u.len() != universe.len() {
        return Err(Error::Usage("universe elements must be distinct".into()));
    }
    let neg_u = multiset_neg(&u, &m)?;
    let mut text = format!("UNIVERSE {u}\n");
    let mut passed = true;
    for mask in 0..1u32 << universe.len() {
        let pick = |inside: bool| {
            let entries = universe
                .iter()
                .enumerate()
                .filter(|&(i, _)| (mask >> i & 1 == 1) == inside)
                .map(|(_, k)| (k.as_str(), 1));
            SignedMultiset::new(entries, &m)
        };
        let (a, expected) = (pick(true)?, pick(false)?);
        let complement = classical_complement(&a, &u)?;
        let identity = multiset_union(&complement, &neg_u, &m)? == multiset_neg(&a, &m)?;
        let ok = complement == expected && identity;
        passed &= ok;
        writeln!(
            text,
            "SET {a} complement={complement} ¬A=complement⊎¬U:{} {}",
            identity,
            if ok { "ok" } else { "FAIL" }
        )
        .unwrap();
    }
    Ok(Outcome::new(text, passed))
}

fn prop_square_demo() -> Outcome {
    let mut text = String::new();
    for (kind, formula, tv) in prop_square_vectors("P", "Q") {
        writeln!(text, "VECTOR {kind} {formula} = {tv}").unwrap();
    }
    let report = prop_square("P", "Q");
    text.push_str(&report.to_text());
    Outcome::new(text, report.all_hold())
}

fn matrix_demo(args: &DemoArgs) -> Result<Outcome, Error> {
    if args.dim == 0 {
        return Err(Error::Usage("matrix dimension must be positive".into()));
    }
    let report = sample_check_instance(&SampleInstance::Matrix { dim: args.dim }, args.samples, args.seed);
    let mut text = report.to_text();
    let mut passed = report.passed();

    let one = CMatrix::from_element(1, 1, 1.0.into());
    let unit = MatrixOrderConfig::with_dimension(1);
    writeln!(
        text,
        "ZERO-READINGS A=[1]: ¬A⪯A={} A+Aᴴ=0={}",
        matrix_zero_member(&one, &unit)?,
        matrix_zero_skew(&one, &unit)?
    )
    .unwrap();

    if let Some(path) = &args.input {
        let a = load_matrix(path)?;
        let cfg = MatrixOrderConfig::with_dimension(a.nrows());
        writeln!(
            text,
            "INPUT A ¬A⪯A={} A+Aᴴ=0={}",
            matrix_zero_member(&a, &cfg)?,
            matrix_zero_skew(&a, &cfg)?
        )
        .unwrap();
        if let Some(other) = &args.other {
            let b = load_matrix(other)?;
            writeln!(
                text,
                "INPUT A⪯B={} B⪯A={}",
                matrix_leq(&a, &b, &cfg)?,
                matrix_leq(&b, &a, &cfg)?
            )
            .unwrap();
        }
    } else if args.other.is_some() {
        passed = false;
        writeln!(text, "INPUT --other ignored without --input").unwrap();
    }
    Ok(Outcome::new(text, passed))
}

fn negation_demo(args: &DemoArgs) -> Result<Outcome, Error> {
    let generator = match &args.input {
        Some(path) => NegationGenerator::load(path)?,
        None => NegationGenerator::power(args.power)?,
    };
    let mut text = format!("FIXED-POINT x* = {:.12}\n", generator.fixed_point());
    for x in [0.0, 0.25, 0.5, 0.75, 1.0] {
        writeln!(text, "NEG ¬{x} = {:.12}", generator.negate(x)?).unwrap();
    }
    let report = sample_check_instance(&SampleInstance::Negation(generator), args.samples, args.seed);
    text.push_str(&report.to_text());
    Ok(Outcome::new(text, report.passed()))
}
