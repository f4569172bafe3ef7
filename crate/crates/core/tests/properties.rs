use std::sync::OnceLock;

use num_complex::Complex64;
use opposition_core::diagrams::{classify_pair, verify_shape, Hypothesis, RelationKind, Shape, UyForm};
use opposition_core::harness::{enumerate_structures, EnumerationConfig};
use opposition_core::instances::matrix::{matrix_leq, matrix_neg, min_eigenvalue, CMatrix, MatrixOrderConfig};
use opposition_core::instances::negation::{strong_negation, NegationGenerator, Phi};
use opposition_core::instances::truth::{truth_vector, tv_relation, Formula};
use opposition_core::statements::{compound_reduction_equivalent, eval_statement, StatementKind};
use opposition_core::structure::{close_order, OrderKind};
use opposition_core::{admit, product, ClassCStructure, ElementId};
use proptest::prelude::*;

fn structures() -> &'static [ClassCStructure] {
    static CELL: OnceLock<Vec<ClassCStructure>> = OnceLock::new();
    CELL.get_or_init(|| enumerate_structures(&EnumerationConfig::new(4)).unwrap())
}

const ALL_KINDS: [StatementKind; 12] = [
    StatementKind::A,
    StatementKind::E,
    StatementKind::I,
    StatementKind::O,
    StatementKind::DualA,
    StatementKind::DualE,
    StatementKind::DualI,
    StatementKind::DualO,
    StatementKind::U,
    StatementKind::Y,
    StatementKind::UAbs,
    StatementKind::YAbs,
];

fn structure_and_point() -> impl Strategy<Value = (usize, usize, usize)> {
    (0..structures().len()).prop_flat_map(|i| {
        let n = structures()[i].size();
        (Just(i), 0..n, 0..n)
    })
}

fn hypothesis() -> impl Strategy<Value = Hypothesis> {
    (any::<bool>(), any::<bool>(), any::<bool>(), any::<bool>()).prop_map(|(f, b, d, n)| Hypothesis {
        import_forward: f,
        import_backward: b,
        distinct: d,
        nondual: n,
    })
}

fn mirrored(r: RelationKind) -> RelationKind {
    match r {
        RelationKind::SubImplication => RelationKind::SuperImplication,
        RelationKind::SuperImplication => RelationKind::SubImplication,
        other => other,
    }
}

fn formula(vars: &'static [&'static str]) -> impl Strategy<Value = Formula> {
    let leaf = proptest::sample::select(vars).prop_map(Formula::var);
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.or(b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.implies(b)),
        ]
    })
}

fn matrix(n: usize) -> impl Strategy<Value = CMatrix> {
    proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), n * n)
        .prop_map(move |v| CMatrix::from_iterator(n, n, v.into_iter().map(|(re, im)| Complex64::new(re, im))))
}

/// Strictly increasing tables from (0,0) to (1,1).
fn phi_table() -> impl Strategy<Value = Phi> {
    (
        proptest::collection::vec(0.01f64..1.0, 1..6),
        proptest::collection::vec(0.01f64..1.0, 1..6),
    )
        .prop_map(|(dx, dy)| {
            let k = dx.len().min(dy.len());
            let ramp = |d: &[f64]| {
                let total: f64 = d[..k].iter().sum::<f64>() + 1.0;
                let mut acc = 0.0;
                let mut out = vec![0.0];
                for step in &d[..k] {
                    acc += step / total;
                    out.push(acc);
                }
                out.push(1.0);
                out
            };
            Phi::Table {
                xs: ramp(&dx),
                ys: ramp(&dy),
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, ..ProptestConfig::default() })]

    #[test]
    fn classification_is_mirror_symmetric(i in 0..structures().len(), a in 0..12usize, b in 0..12usize, h in hypothesis()) {
        let s = &structures()[i];
        let forward = classify_pair(s, ALL_KINDS[a], ALL_KINDS[b], &h);
        let backward = classify_pair(s, ALL_KINDS[b], ALL_KINDS[a], &h);
        let mirrored: Vec<_> = forward.relations.iter().map(|&r| mirrored(r)).collect();
        let mut expected: Vec<_> = backward.relations.into_iter().collect();
        expected.sort();
        let mut got = mirrored;
        got.sort();
        prop_assert_eq!(got, expected);
        prop_assert_eq!(forward.admissible_points, backward.admissible_points);
    }

    #[test]
    fn contradictory_entails_contrary_and_subcontrary(i in 0..structures().len(), a in 0..12usize, b in 0..12usize, h in hypothesis()) {
        let c = classify_pair(&structures()[i], ALL_KINDS[a], ALL_KINDS[b], &h);
        if c.relations.contains(&RelationKind::Contradictory) {
            prop_assert!(c.relations.contains(&RelationKind::Contrary));
            prop_assert!(c.relations.contains(&RelationKind::Subcontrary));
        }
        if c.vacuous {
            prop_assert_eq!(c.relations.len(), RelationKind::ALL.len());
        }
    }

    #[test]
    fn statement_identities((i, p, q) in structure_and_point()) {
        let s = &structures()[i];
        let (p, q) = (ElementId(p), ElementId(q));
        let eval = |p: ElementId, q: ElementId, k| eval_statement(s, &p, &q, k).unwrap();
        use StatementKind::*;
        prop_assert_eq!(eval(p, q, I), !eval(p, q, E));
        prop_assert_eq!(eval(p, q, O), !eval(p, q, A));
        prop_assert_eq!(eval(p, q, E), eval(p, s.neg(q), A));
        prop_assert_eq!(eval(p, q, DualA), eval(q, p, A));
        prop_assert_eq!(eval(p, q, DualE), eval(s.neg(q), s.neg(p), E));
        prop_assert_eq!(eval(p, q, U), !eval(p, q, Y));
        prop_assert!(compound_reduction_equivalent(s, &p, &q).unwrap_or(true));
    }

    #[test]
    fn closure_is_a_partial_order(n in 1usize..7, raw in proptest::collection::vec((0usize..7, 0usize..7), 0..12)) {
        // pairs oriented upward by index cannot form a cycle
        let pairs: Vec<(usize, usize)> = raw
            .into_iter()
            .map(|(a, b)| (a % n, b % n))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let leq = close_order(&pairs, OrderKind::Cover, n).unwrap();
        for a in 0..n {
            prop_assert!(leq[a][a]);
            for b in 0..n {
                prop_assert!(a == b || !(leq[a][b] && leq[b][a]));
                for c in 0..n {
                    prop_assert!(!(leq[a][b] && leq[b][c]) || leq[a][c]);
                }
            }
        }
        for &(a, b) in &pairs {
            prop_assert!(leq[a][b]);
        }
    }

    #[test]
    fn products_stay_in_the_class(i in 0..structures().len(), j in 0..structures().len()) {
        let (a, b) = (&structures()[i], &structures()[j]);
        let prod = product(&[a.clone(), b.clone()]).unwrap();
        prop_assert_eq!(prod.size(), a.size() * b.size());
        prop_assert_eq!(prod.zeros().len(), a.zeros().len() * b.zeros().len());
    }

    #[test]
    fn relabeling_preserves_verdict_counts(i in 0..structures().len(), seed in any::<u64>()) {
        let s = &structures()[i];
        let n = s.size();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for k in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (state >> 33) as usize % (k + 1));
        }
        let relabeled = admit(s.raw().relabel(&perm).unwrap()).unwrap();
        for shape in Shape::ALL {
            let h = Hypothesis::forward().with_distinct().with_nondual();
            let before = verify_shape(s, shape, &h, UyForm::Compound);
            let after = verify_shape(&relabeled, shape, &h, UyForm::Compound);
            prop_assert_eq!(before.admissible_point_count, after.admissible_point_count);
            for (x, y) in before.claims.iter().zip(&after.claims) {
                prop_assert_eq!(x.verdict, y.verdict);
                prop_assert_eq!(x.violations, y.violations);
            }
        }
    }

    #[test]
    fn truth_vector_laws(f in formula(&["p", "q", "r"]), g in formula(&["p", "q", "r"])) {
        let vars = ["p", "q", "r"];
        let tf = truth_vector(&f, &vars).unwrap();
        let tnf = truth_vector(&f.clone().not(), &vars).unwrap();
        prop_assert_eq!(truth_vector(&f.clone().not().not(), &vars).unwrap(), tf.clone());
        prop_assert!(tv_relation(&tf, &tnf, RelationKind::Contradictory).unwrap());
        let both = truth_vector(&f.clone().and(g.clone()), &vars).unwrap();
        prop_assert!(tv_relation(&both, &tf, RelationKind::SubImplication).unwrap());
        let either = truth_vector(&f.or(g), &vars).unwrap();
        prop_assert!(tv_relation(&either, &tf, RelationKind::SuperImplication).unwrap());
    }

    #[test]
    fn matrix_order_laws(a in matrix(2), b in matrix(2), c in matrix(3)) {
        let cfg = MatrixOrderConfig::with_dimension(2);
        let leq = |x: &CMatrix, y: &CMatrix| matrix_leq(x, y, &cfg).unwrap();
        prop_assert!(leq(&a, &a));
        prop_assert_eq!(leq(&a, &b), leq(&matrix_neg(&b), &matrix_neg(&a)));
        prop_assert_eq!(matrix_neg(&matrix_neg(&a)), a.clone());
        prop_assert!(matrix_leq(&a, &c, &cfg).is_err());
    }

    #[test]
    fn hermitian_min_eigenvalue_matches_closed_form(m in matrix(2)) {
        let h = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
        let (a, d) = (h[(0, 0)].re, h[(1, 1)].re);
        let off = h[(0, 1)].norm_sqr();
        let closed = (a + d) / 2.0 - (((a - d) / 2.0).powi(2) + off).sqrt();
        prop_assert!((min_eigenvalue(&h) - closed).abs() < 1e-9);
    }

    #[test]
    fn table_negations_are_involutions(phi in phi_table(), x in 0.0f64..=1.0) {
        let g = NegationGenerator::new(phi, 1e-9).unwrap();
        let nx = strong_negation(&g, x).unwrap();
        prop_assert!((0.0..=1.0).contains(&nx));
        prop_assert!((strong_negation(&g, nx).unwrap() - x).abs() <= 1e-9);
        prop_assert_eq!(strong_negation(&g, 0.0).unwrap(), 1.0);
        prop_assert_eq!(strong_negation(&g, 1.0).unwrap(), 0.0);
    }
}
