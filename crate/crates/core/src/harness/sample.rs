//! Seeded sampling checks for the infinite instances (complex matrices and
//! strong negations), where exhaustive enumeration is impossible.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagrams::{expected_claims, Hypothesis, Shape};
use crate::instances::matrix::{
    antisymmetry_partner, is_antisymmetry_witness, matrix_leq, matrix_neg, matrix_zero_member, matrix_zero_skew,
    CMatrix, MatrixOrder, MatrixOrderConfig,
};
use crate::instances::negation::{strong_negation, NegationGenerator, Phi, StrongNegation};
use crate::structure::NegationOrder;

#[derive(Debug, Clone)]
pub enum SampleInstance {
    Matrix { dim: usize },
    Negation(NegationGenerator),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub samples: usize,
    pub failures: usize,
    /// The property is known not to hold; the check passes when a failure
    /// is exhibited.
    pub expected_to_fail: bool,
    pub max_error: Option<f64>,
    pub witness: Option<String>,
}

impl PropertyCheck {
    fn new(name: &str, expected_to_fail: bool) -> Self {
        Self {
            name: name.to_string(),
            samples: 0,
            failures: 0,
            expected_to_fail,
            max_error: None,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    fn error(&mut self, e: f64) {
        self.max_error = Some(self.max_error.map_or(e, |m| m.max(e)));
    }

    pub fn passed(&self) -> bool {
        if self.expected_to_fail {
            self.failures > 0
        } else {
            self.failures == 0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleReport {
    pub instance: String,
    pub seed: u64,
    pub checks: Vec<PropertyCheck>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(PropertyCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "SAMPLE instance={} seed={}", self.instance, self.seed).unwrap();
        for c in &self.checks {
            write!(
                out,
                "CHECK {} {} samples={} failures={} expected_to_fail={}",
                if c.passed() { "pass" } else { "FAIL" },
                c.name,
                c.samples,
                c.failures,
                c.expected_to_fail
            )
            .unwrap();
            if let Some(e) = c.max_error {
                write!(out, " max_error={e:.3e}").unwrap();
            }
            if let Some(w) = &c.witness {
                write!(out, " witness={w}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

pub fn sample_check_instance(instance: &SampleInstance, samples: usize, seed: u64) -> SampleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match instance {
        SampleInstance::Matrix { dim } => SampleReport {
            instance: format!("matrix dim={dim}"),
            seed,
            checks: matrix_checks(*dim, samples, &mut rng),
        },
        SampleInstance::Negation(generator) => SampleReport {
            instance: format!("negation phi={}", describe_phi(generator.phi())),
            seed,
            checks: negation_checks(generator, samples, &mut rng),
        },
    }
}

fn describe_phi(phi: &Phi) -> String {
    match phi {
        Phi::Identity => "identity".into(),
        Phi::Power { p } => format!("power({p})"),
        Phi::Table { xs, .. } => format!("table({} points)", xs.len()),
    }
}

pub fn random_matrix(rng: &mut impl Rng, n: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

/// `G Gᴴ` for a random `G`; positive definite with probability one.
pub fn random_psd(rng: &mut impl Rng, n: usize) -> CMatrix {
    let g = random_matrix(rng, n);
    &g * g.adjoint()
}

/// `K − Kᴴ`, whose Hermitian part vanishes.
pub fn random_skew(rng: &mut impl Rng, n: usize) -> CMatrix {
    let k = random_matrix(rng, n);
    &k - k.adjoint()
}

fn short(m: &CMatrix) -> String {
    let entries: Vec<String> = m
        .row_iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|z| format!("{:.3}{:+.3}i", z.re, z.im)).collect();
            format!("[{}]", cells.join(" "))
        })
        .collect();
    entries.join("")
}

fn matrix_checks(n: usize, samples: usize, rng: &mut ChaCha8Rng) -> Vec<PropertyCheck> {
    let cfg = MatrixOrderConfig::with_dimension(n);
    let order = MatrixOrder { config: cfg };
    let leq = |a: &CMatrix, b: &CMatrix| matrix_leq(a, b, &cfg).expect("sampled matrices share a dimension");

    let mut reflexive = PropertyCheck::new("reflexive", false);
    let mut transitive = PropertyCheck::new("transitive", false);
    let mut antitone = PropertyCheck::new("antitone", false);
    let mut involution = PropertyCheck::new("involution", false);
    let mut antisymmetry = PropertyCheck::new("antisymmetry", true);
    let mut zero_readings = PropertyCheck::new("zero-set readings agree", true);

    for _ in 0..samples {
        let a = random_matrix(rng, n);
        let b = random_matrix(rng, n);
        reflexive.record(leq(&a, &a), || short(&a));
        involution.record(matrix_neg(&matrix_neg(&a)) == a, || short(&a));

        // a chain a ⪯ up ⪯ top built from PSD steps plus skew noise
        let up = &a + random_psd(rng, n) + random_skew(rng, n);
        let top = &up + random_psd(rng, n) + random_skew(rng, n);
        transitive.record(!leq(&a, &up) || !leq(&up, &top) || leq(&a, &top), || short(&a));
        transitive.record(leq(&a, &up) && leq(&up, &top), || {
            format!("chain step failed at {}", short(&a))
        });
        // unconstrained triples, usually vacuous
        let c = random_matrix(rng, n);
        transitive.record(!leq(&a, &b) || !leq(&b, &c) || leq(&a, &c), || short(&a));

        for (x, y) in [(&a, &b), (&a, &up), (&up, &a)] {
            antitone.record(leq(x, y) == leq(&matrix_neg(y), &matrix_neg(x)), || short(x));
        }

        let partner = antisymmetry_partner(&a);
        let witness = is_antisymmetry_witness(&a, &partner, &cfg).expect("same dimension");
        antisymmetry.record(!witness, || format!("A={} B=A+iI", short(&a)));

        let z = random_psd(rng, n) + random_skew(rng, n);
        let by_definition = matrix_zero_member(&z, &cfg).expect("same dimension");
        let by_skew = matrix_zero_skew(&z, &cfg).expect("same dimension");
        zero_readings.record(by_definition == by_skew, || {
            format!("A={} ¬A⪯A={by_definition} A+Aᴴ=0={by_skew}", short(&z))
        });
    }

    let mut checks = vec![reflexive, transitive, antitone, involution, antisymmetry, zero_readings];

    // square claims where P has a positive definite Hermitian part
    let zero = CMatrix::zeros(n, n);
    let mut points = Vec::with_capacity(samples);
    for k in 0..samples {
        let p = random_psd(rng, n) + random_skew(rng, n);
        let q = match k % 4 {
            0 => random_matrix(rng, n),
            1 => &p + random_psd(rng, n),
            2 => -(&p + random_psd(rng, n)),
            _ => &p * Complex64::new(rng.random_range(-2.0..2.0), 0.0),
        };
        points.push((p, q));
    }
    checks.extend(square_checks(&order, &points, |p| order.lt(&zero, p)));

    // P = iI is strictly above the zero matrix in this preorder, yet A -> I
    // fails at Q = P
    let skew_p = CMatrix::identity(n, n) * Complex64::new(0.0, 1.0);
    let mut skew = PropertyCheck::new("square A->I at skew-Hermitian P", true);
    let claim = expected_claims(Shape::Square, &Hypothesis::forward())[0];
    let admissible = order.lt(&zero, &skew_p);
    skew.record(
        !admissible || claim.holds_at(&order, &skew_p, &skew_p) == Some(true),
        || format!("P=Q=iI (0≺P={admissible})"),
    );
    checks.push(skew);
    checks
}

fn square_checks<S, F>(s: &S, points: &[(S::Elem, S::Elem)], above_zero: F) -> Vec<PropertyCheck>
where
    S: NegationOrder,
    F: Fn(&S::Elem) -> bool,
{
    let h = Hypothesis::forward();
    expected_claims(Shape::Square, &h)
        .into_iter()
        .map(|claim| {
            let mut check = PropertyCheck::new(&format!("square {claim}"), false);
            for (k, (p, q)) in points.iter().enumerate() {
                if h.admits_with(s, p, q, &above_zero) {
                    check.record(claim.holds_at(s, p, q) == Some(true), || format!("sample {k}"));
                }
            }
            check
        })
        .collect()
}

fn negation_checks(g: &NegationGenerator, samples: usize, rng: &mut ChaCha8Rng) -> Vec<PropertyCheck> {
    let neg = |x: f64| strong_negation(g, x).expect("grid points lie in [0, 1]");
    let grid: Vec<f64> = (0..samples.max(2))
        .map(|k| k as f64 / (samples.max(2) - 1) as f64)
        .collect();
    let star = g.fixed_point();

    let mut boundary = PropertyCheck::new("boundary", false);
    boundary.record(neg(0.0) == 1.0, || format!("¬0={}", neg(0.0)));
    boundary.record(neg(1.0) == 0.0, || format!("¬1={}", neg(1.0)));

    let mut involution = PropertyCheck::new("involution", false);
    let mut decreasing = PropertyCheck::new("strictly decreasing", false);
    let mut zeros = PropertyCheck::new("zeros are [x*, 1]", false);
    let mut exact = PropertyCheck::new("standard negation 1-x", false);
    let standard = matches!(g.phi(), Phi::Identity) || g.phi() == &Phi::Power { p: 1.0 };
    let mut previous: Option<(f64, f64)> = None;
    for &x in &grid {
        let nx = neg(x);
        let err = (neg(nx) - x).abs();
        involution.error(err);
        involution.record(err <= g.tolerance(), || format!("x={x}"));
        if let Some((px, pnx)) = previous {
            decreasing.record(nx < pnx, || format!("x={px}..{x}"));
        }
        previous = Some((x, nx));
        zeros.record((nx <= x) == (x >= star), || format!("x={x} x*={star}"));
        if standard {
            exact.record(nx == 1.0 - x, || format!("x={x}"));
        }
    }

    let mut antitone = PropertyCheck::new("antitone", false);
    let mut points = Vec::with_capacity(samples);
    for _ in 0..samples {
        let a: f64 = rng.random_range(0.0..=1.0);
        let b: f64 = rng.random_range(0.0..=1.0);
        if a != b {
            antitone.record((a <= b) == (neg(b) <= neg(a)), || format!("a={a} b={b}"));
        }
        let p = star + (1.0 - star) * rng.random_range(0.0..=1.0);
        points.push((p, rng.random_range(0.0..=1.0)));
    }

    let order = StrongNegation { generator: g.clone() };
    let mut checks = vec![boundary, involution, decreasing, zeros, antitone];
    if standard {
        checks.push(exact);
    }
    // ∃z ∈ [x*, 1]: z < P  ⇔  P > x*
    checks.extend(square_checks(&order, &points, |&p| p > star));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_sampling_is_deterministic() {
        let a = sample_check_instance(&SampleInstance::Matrix { dim: 2 }, 50, 7);
        let b = sample_check_instance(&SampleInstance::Matrix { dim: 2 }, 50, 7);
        assert_eq!(a.to_text(), b.to_text());
        assert!(a.passed(), "{}", a.to_text());
    }

    #[test]
    fn negation_sampling_passes() {
        let g = NegationGenerator::power(2.0).unwrap();
        let report = sample_check_instance(&SampleInstance::Negation(g), 1000, 1);
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.check("standard negation 1-x").is_none());
        let report = sample_check_instance(&SampleInstance::Negation(NegationGenerator::identity()), 1000, 1);
        assert!(report.check("standard negation 1-x").unwrap().passed());
    }
}
