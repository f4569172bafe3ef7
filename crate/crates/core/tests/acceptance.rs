//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed. Set
//! `OPPOSITION_BLESS=1` to rewrite the DOT goldens.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use opposition_core::diagrams::{
    counterexample_search, render_dot, verify_shape, Claim, Diagram, Hypothesis, RelationKind, Shape, UyForm,
    VerificationReport,
};
use opposition_core::harness::{
    abs_lemma_check, enumerate_structures, sample_check_instance, sweep_theorems, EnumerationConfig, SampleInstance,
    SweepReport,
};
use opposition_core::instances::matrix::{matrix_zero_member, matrix_zero_skew, CMatrix, MatrixOrderConfig};
use opposition_core::instances::multiset::{
    classical_complement, multiset_leq, multiset_leq_literal, multiset_neg, multiset_union, MultiplicityConfig,
    SignedMultiset,
};
use opposition_core::instances::negation::NegationGenerator;
use opposition_core::instances::three_valued;
use opposition_core::instances::truth::{prop_square, prop_square_vectors, tv_relation};
use opposition_core::statements::StatementKind;
use opposition_core::structure::{validate_axioms, RawStructure};
use opposition_core::{admit, Error};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Sweeps labeled structures up to 4 elements and isomorphism classes up
/// to 5.
fn standard_sweeps(h: Hypothesis, shape: Shape, form: UyForm) -> Result<[SweepReport; 2], String> {
    let run = |size: usize, iso: bool| {
        let cfg = EnumerationConfig::new(size)
            .iso(iso)
            .hypothesis(h)
            .shapes(&[shape])
            .uy_form(form);
        sweep_theorems(&cfg).map_err(|e| e.to_string())
    };
    Ok([run(4, false)?, run(5, true)?])
}

fn sweep_label(r: &SweepReport) -> String {
    format!("{}≤{}", if r.up_to_isomorphism { "iso" } else { "labeled" }, r.max_size)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let t3 = three_valued();
    ensure(t3.format_set(t3.zeros()) == "{h, 1}", || {
        format!("T3 zeros {}", t3.format_set(t3.zeros()))
    })?;
    ensure(validate_axioms(t3.raw()).all_hold(), || "T3 fails validation".into())?;

    let antichain = RawStructure::from_cover("antichain", &["x", "y"], &[], &[("x", "y"), ("y", "x")])
        .map_err(|e| e.to_string())?;
    let report = validate_axioms(&antichain);
    let failed: Vec<_> = report.failed().map(|a| a.name()).collect();
    ensure(failed == ["zeros_nonempty"], || {
        format!("antichain failures {failed:?}")
    })?;
    ensure(matches!(admit(antichain), Err(Error::Rejected(_))), || {
        "antichain not rejected".into()
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok("T3 Z = {h, 1}; swap antichain rejected for empty Z".into())
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut details = Vec::new();
    for r in standard_sweeps(Hypothesis::forward(), Shape::Square, UyForm::Compound)? {
        ensure(r.claims.len() == 6, || format!("{} square claims", r.claims.len()))?;
        ensure(r.total_violations() == 0, || r.to_text())?;
        let points: usize = r.claims.iter().map(|c| c.points_checked).sum();
        let structures: usize = r.sizes.iter().map(|s| s.structures).sum();
        details.push(format!(
            "{}: {structures} structures, {points} claim-points",
            sweep_label(&r)
        ));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("0 violations of 6 claims ({})", details.join("; ")))
}

fn criterion_3() -> Check {
    let t3 = three_valued();
    let claim: Claim = "A->I".parse().map_err(|e: Error| e.to_string())?;
    let first = counterexample_search(&t3, &claim, &Hypothesis::NONE);
    let again = counterexample_search(&t3, &claim, &Hypothesis::NONE);
    ensure(first == again, || "search is not deterministic".into())?;
    let (p, q) = first.ok_or("no counterexample found")?;
    ensure(t3.label(p) == "0" && t3.label(q) == "0", || {
        format!("found P={},Q={}", t3.label(p), t3.label(q))
    })?;
    ensure(
        counterexample_search(&t3, &claim, &Hypothesis::forward()).is_none(),
        || "A->I fails under forward import".into(),
    )?;
    Ok("A->I violated at P=0,Q=0 without import; none under forward import".into())
}

fn criterion_4() -> Check {
    let failing: BTreeSet<&str> = ["contrary(a,e)", "subcontrary(i,o)"].into();
    let mut details = Vec::new();
    for r in standard_sweeps(Hypothesis::forward(), Shape::Cube, UyForm::Compound)? {
        ensure(r.claims.len() == 16, || format!("{} cube claims", r.claims.len()))?;
        let mut holding = 0;
        for c in &r.claims {
            if failing.contains(c.claim.as_str()) {
                ensure(c.violations > 0, || {
                    format!("{} not violated in {}", c.claim, sweep_label(&r))
                })?;
            } else {
                ensure(c.violations == 0, || format!("{} violated: {:?}", c.claim, c.witnesses))?;
                holding += 1;
            }
        }
        ensure(holding == 14, || format!("{holding} claims hold"))?;
    }
    details.push("14/16 hold, contrary(a,e) and subcontrary(i,o) violated".to_string());

    // the T3 witness
    let t3 = three_valued();
    let report = verify_shape(&t3, Shape::Cube, &Hypothesis::forward(), UyForm::Compound);
    let (one, h) = (t3.find("1").unwrap(), t3.find("h").unwrap());
    for name in &failing {
        let result = report
            .claims
            .iter()
            .find(|r| r.claim.to_string() == *name)
            .ok_or_else(|| format!("{name} missing"))?;
        let w = result
            .witness
            .as_ref()
            .ok_or_else(|| format!("{name} has no witness"))?;
        ensure(w.to_string() == "P=1,Q=0", || format!("{name} first witness {w}"))?;
        ensure(result.claim.holds_at(&t3, &one, &h) == Some(false), || {
            format!("{name} holds at P=1,Q=h")
        })?;
    }
    details.push("T3 first witness P=1,Q=0 and P=1,Q=h also violates".into());

    let both = Hypothesis::forward().with_backward();
    for r in standard_sweeps(both, Shape::Cube, UyForm::Compound)? {
        ensure(r.total_violations() == 0, || r.to_text())?;
        let points: usize = r.claims.iter().map(|c| c.points_checked).sum();
        ensure(points == 0, || format!("{points} admissible forward+backward points"))?;
    }
    details.push("forward+backward: 0 violations, every admissible set empty".into());

    let conditional = Hypothesis::forward().with_distinct().with_nondual();
    for r in standard_sweeps(conditional, Shape::Cube, UyForm::Compound)? {
        let extra: Vec<_> = r.claims.iter().filter(|c| c.raw_claim.requires.distinct).collect();
        ensure(extra.len() == 8, || format!("{} conditional claims", extra.len()))?;
        for c in extra {
            ensure(c.points_checked > 0, || format!("{} vacuous", c.claim))?;
            ensure(c.violations == 0, || format!("{} violated: {:?}", c.claim, c.witnesses))?;
        }
    }
    details.push("8 conditional claims hold under distinct+nondual".into());
    Ok(details.join("; "))
}

fn criterion_5() -> Check {
    for form in [UyForm::Compound, UyForm::Abs] {
        for r in standard_sweeps(Hypothesis::forward(), Shape::Hexagon, form)? {
            ensure(r.claims.len() == 14, || format!("{} hexagon claims", r.claims.len()))?;
            ensure(r.total_violations() == 0, || r.to_text())?;
        }
    }
    let structures = enumerate_structures(&EnumerationConfig::new(4)).map_err(|e| e.to_string())?;
    let lemma = abs_lemma_check(&structures);
    ensure(lemma.failures.is_empty(), || lemma.failures.join("; "))?;
    Ok(format!(
        "14 claims hold in both U/Y forms; forms agree at {} points on {} structures",
        lemma.reduction_points, lemma.structures
    ))
}

fn criterion_6() -> Check {
    let mut structures = enumerate_structures(&EnumerationConfig::new(4)).map_err(|e| e.to_string())?;
    structures.extend(enumerate_structures(&EnumerationConfig::new(6).iso(true)).map_err(|e| e.to_string())?);
    let lemma = abs_lemma_check(&structures);
    ensure(lemma.failures.is_empty(), || lemma.failures.join("; "))?;
    ensure(lemma.comparable_points > 0, || "no comparable pairs".into())?;
    Ok(format!(
        "|Q| unique maximum, ¬|Q| minimum at {} comparable points in {} structures",
        lemma.comparable_points, lemma.structures
    ))
}

fn criterion_7() -> Check {
    use RelationKind::*;
    use StatementKind::{A, E, I, O};
    let report = prop_square("P", "Q");
    ensure(report.all_hold() && report.claims.len() == 6, || report.to_text())?;
    ensure(report.admissible_point_count == 4, || "expected 4 rows".into())?;

    let vectors = prop_square_vectors("P", "Q");
    let tv = |k: StatementKind| vectors.iter().find(|(v, _, _)| *v == k).unwrap().2.clone();
    let expected: [(StatementKind, StatementKind, &[RelationKind]); 6] = [
        (A, E, &[Subcontrary]),
        (A, I, &[SuperImplication]),
        (A, O, &[Contrary, Subcontrary, Contradictory]),
        (E, I, &[Contrary, Subcontrary, Contradictory]),
        (E, O, &[SuperImplication]),
        (I, O, &[Contrary]),
    ];
    for (a, b, relations) in expected {
        let holding: Vec<RelationKind> = RelationKind::ALL
            .into_iter()
            .filter(|&k| tv_relation(&tv(a), &tv(b), k).unwrap())
            .collect();
        ensure(holding == relations, || format!("({a},{b}) satisfies {holding:?}"))?;
    }
    Ok("I⪯A, O⪯E, T_I+T_O⪯1, T_A+T_E⪰1, both diagonals contradictory, nothing else".into())
}

fn multiset_strategy() -> impl Strategy<Value = SignedMultiset<i64>> {
    proptest::collection::btree_map("[a-f]", -5i64..=5, 0..6)
        .prop_map(|m| SignedMultiset::new(m, &MultiplicityConfig::integers()).unwrap())
}

fn criterion_8() -> Check {
    const CASES: u32 = 10_000;
    let m = MultiplicityConfig::integers();
    let empty = SignedMultiset::empty();
    ensure(
        multiset_leq(&multiset_neg(&empty, &m).unwrap(), &empty, &m).unwrap(),
        || "¬∅ ⋠ ∅".into(),
    )?;

    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let strategy = (multiset_strategy(), multiset_strategy(), multiset_strategy());
    runner
        .run(&strategy, |(a, b, c)| {
            let m = MultiplicityConfig::integers();
            let leq = |x: &SignedMultiset<i64>, y: &SignedMultiset<i64>| multiset_leq(x, y, &m).unwrap();
            let neg = |x: &SignedMultiset<i64>| multiset_neg(x, &m).unwrap();
            prop_assert!(leq(&a, &a));
            prop_assert!(!(leq(&a, &b) && leq(&b, &a)) || a == b);
            prop_assert!(!(leq(&a, &b) && leq(&b, &c)) || leq(&a, &c));
            prop_assert_eq!(leq(&a, &b), leq(&neg(&b), &neg(&a)));
            prop_assert_eq!(neg(&neg(&a)), a.clone());
            prop_assert!(multiset_union(&a, &neg(&a), &m).unwrap().is_empty());
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    let x = SignedMultiset::new([("x", 1)], &m).unwrap();
    let both = multiset_leq_literal(&x, &empty, &m).unwrap() && multiset_leq_literal(&empty, &x, &m).unwrap();
    ensure(both && x != empty, || {
        "literal order counterexample not reproduced".into()
    })?;
    ensure(!multiset_leq(&x, &empty, &m).unwrap(), || {
        "pointwise order relates {x:1} ⪯ {}".into()
    })?;
    Ok(format!(
        "{CASES} cases: order axioms, antitone, involution, A⊎¬A=∅; ¬∅⪯∅; literal order relates {{x:1}} and {{}} both ways"
    ))
}

fn criterion_9() -> Check {
    let m = MultiplicityConfig::integers();
    let names = ["a", "b", "c", "d"];
    let universe = SignedMultiset::new(names.map(|k| (k, 1)), &m).unwrap();
    let neg_universe = multiset_neg(&universe, &m).unwrap();
    for mask in 0..16u32 {
        let set = |pick: bool| {
            let entries = names
                .iter()
                .enumerate()
                .filter(|&(i, _)| (mask >> i & 1 == 1) == pick)
                .map(|(_, &k)| (k, 1));
            SignedMultiset::new(entries, &m).unwrap()
        };
        let (a, expected) = (set(true), set(false));
        let complement = classical_complement(&a, &universe).map_err(|e| e.to_string())?;
        ensure(complement == expected, || format!("complement of {a} is {complement}"))?;
        let rebuilt = multiset_union(&complement, &neg_universe, &m).unwrap();
        ensure(rebuilt == multiset_neg(&a, &m).unwrap(), || format!("¬{a} ≠ {rebuilt}"))?;
    }
    Ok("16 subsets of {a,b,c,d}: complement exact and ¬A = complement(A) ⊎ ¬U".into())
}

fn criterion_10() -> Check {
    const SAMPLES: usize = 1000;
    let mut details = Vec::new();
    for dim in [2, 3] {
        let report = sample_check_instance(&SampleInstance::Matrix { dim }, SAMPLES, 2024 + dim as u64);
        for name in ["reflexive", "transitive", "antitone", "involution", "antisymmetry"] {
            let c = report.check(name).ok_or_else(|| format!("{name} missing"))?;
            ensure(c.passed(), || report.to_text())?;
        }
        ensure(report.passed(), || report.to_text())?;
        let witness = report.check("antisymmetry").unwrap();
        details.push(format!("{dim}x{dim}: {} antisymmetry witnesses", witness.failures));
    }
    let one = CMatrix::from_element(1, 1, 1.0.into());
    let cfg = MatrixOrderConfig::with_dimension(1);
    let by_definition = matrix_zero_member(&one, &cfg).map_err(|e| e.to_string())?;
    let by_skew = matrix_zero_skew(&one, &cfg).map_err(|e| e.to_string())?;
    ensure(by_definition && !by_skew, || {
        format!("A=1: ¬A⪯A={by_definition}, A+Aᴴ=0={by_skew}")
    })?;
    details.push("A=1 (1x1): ¬A⪯A holds but A+Aᴴ≠0, readings disagree".into());
    Ok(details.join("; "))
}

fn criterion_11() -> Check {
    const GRID: usize = 10_000;
    let mut details = Vec::new();
    for p in [0.5, 1.0, 2.0] {
        let g = NegationGenerator::power(p).map_err(|e| e.to_string())?;
        let report = sample_check_instance(&SampleInstance::Negation(g), GRID, 11);
        ensure(report.passed(), || report.to_text())?;
        let inv = report.check("involution").unwrap();
        let err = inv.max_error.unwrap_or(f64::INFINITY);
        ensure(inv.samples == GRID && err <= 1e-9, || {
            format!("p={p}: involution error {err:e}")
        })?;
        ensure(report.check("boundary").is_some_and(|c| c.passed()), || {
            "boundary".into()
        })?;
        ensure(report.check("zeros are [x*, 1]").is_some_and(|c| c.passed()), || {
            "zeros".into()
        })?;
        details.push(format!("p={p}: max error {err:.1e}"));
    }
    Ok(details.join("; "))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn compare_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_dir().join(name);
    if std::env::var_os("OPPOSITION_BLESS").is_some() {
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    ensure(expected == actual, || format!("{name} differs from golden"))
}

fn criterion_12() -> Check {
    for (size, iso) in [(4, false), (5, true)] {
        let cfg = EnumerationConfig::new(size).iso(iso);
        let first = sweep_theorems(&cfg).map_err(|e| e.to_string())?;
        let second = sweep_theorems(&cfg).map_err(|e| e.to_string())?;
        ensure(first.to_text() == second.to_text(), || {
            "sweep text differs between runs".into()
        })?;
        ensure(first.summary_json() == second.summary_json(), || {
            "sweep JSON differs between runs".into()
        })?;
    }
    for shape in Shape::ALL {
        let diagram = Diagram::for_shape(shape, UyForm::Compound);
        let dot = render_dot::<String>(&diagram, None::<&VerificationReport<String>>);
        ensure(dot == render_dot::<String>(&diagram, None), || "render differs".into())?;
        compare_golden(&format!("{}.dot", shape.name()), &dot)?;
    }
    let t3 = three_valued();
    let report = verify_shape(&t3, Shape::Cube, &Hypothesis::forward(), UyForm::Compound);
    let dot = render_dot(&Diagram::for_shape(Shape::Cube, UyForm::Compound), Some(&report));
    compare_golden("cube_t3.dot", &dot)?;
    Ok("repeated sweeps byte-identical; square/cube/hexagon/cube_t3 DOT match goldens".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("axiom suite", criterion_1),
        ("square sweep", criterion_2),
        ("existential import needed", criterion_3),
        ("cube", criterion_4),
        ("hexagon", criterion_5),
        ("|Q| lemma", criterion_6),
        ("propositional square", criterion_7),
        ("signed multisets", criterion_8),
        ("classical sets", criterion_9),
        ("matrix instance", criterion_10),
        ("strong negation", criterion_11),
        ("determinism", criterion_12),
    ];
    let mut failures = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(detail) => ("PASS", detail),
            Err(detail) => {
                failures += 1;
                ("FAIL", detail)
            }
        };
        println!("criterion {:>2} {status} {title} [{elapsed:.2?}]: {detail}", i + 1);
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
