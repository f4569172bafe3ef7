//! Exhaustive claim checking over every enumerated structure.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{compact_structures, structure_name};
use super::EnumerationConfig;
use crate::diagrams::{expected_claims_with, verify_claims, Claim, Shape, Verdict};
use crate::error::Result;
use crate::statements::{abs_max, compound_reduction_equivalent};
use crate::structure::{ClassCStructure, ElementId};

/// Enumerates structures as configured, all sizes `1..=max_size`, in a
/// deterministic order.
pub fn enumerate_structures(cfg: &EnumerationConfig) -> Result<Vec<ClassCStructure>> {
    cfg.validate()?;
    let mut out = Vec::new();
    for n in 1..=cfg.max_size {
        let compact = compact_structures(n, cfg.up_to_isomorphism)?;
        out.extend(
            compact
                .iter()
                .enumerate()
                .map(|(i, c)| c.to_structure(&structure_name(n, i, cfg.up_to_isomorphism))),
        );
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeCount {
    pub size: usize,
    pub structures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepWitness {
    pub structure: String,
    pub p: String,
    pub q: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimAggregate {
    pub shape: Shape,
    pub claim: String,
    #[serde(skip)]
    pub raw_claim: Claim,
    pub structures_checked: usize,
    /// Structures with no admissible point for this claim.
    pub structures_vacuous: usize,
    pub points_checked: usize,
    pub violations: usize,
    pub violating_structures: usize,
    /// Earliest violations in enumeration order.
    pub witnesses: Vec<SweepWitness>,
}

impl ClaimAggregate {
    pub fn verdict(&self) -> Verdict {
        if self.violations > 0 {
            Verdict::Violated
        } else if self.points_checked == 0 {
            Verdict::Vacuous
        } else {
            Verdict::Holds
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub max_size: usize,
    pub up_to_isomorphism: bool,
    pub hypothesis: String,
    pub sizes: Vec<SizeCount>,
    pub claims: Vec<ClaimAggregate>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn total_violations(&self) -> usize {
        self.claims.iter().map(|c| c.violations).sum()
    }

    pub fn aggregate(&self, shape: Shape, claim: &str) -> Option<&ClaimAggregate> {
        self.claims.iter().find(|c| c.shape == shape && c.claim == claim)
    }

    pub fn violated_claims(&self) -> Vec<&ClaimAggregate> {
        self.claims.iter().filter(|c| c.violations > 0).collect()
    }

    /// Text form without timing, so reruns are byte-identical.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "SWEEP max_size={} iso={} hyp={}",
            self.max_size, self.up_to_isomorphism, self.hypothesis
        )
        .unwrap();
        for s in &self.sizes {
            writeln!(out, "SIZE {} structures={}", s.size, s.structures).unwrap();
        }
        for c in &self.claims {
            writeln!(
                out,
                "CLAIM {} {} verdict={} structures={} vacuous={} points={} violations={} violating_structures={}",
                c.shape,
                c.claim,
                c.verdict(),
                c.structures_checked,
                c.structures_vacuous,
                c.points_checked,
                c.violations,
                c.violating_structures
            )
            .unwrap();
            for w in &c.witnesses {
                writeln!(
                    out,
                    "WITNESS {} {} structure={} P={} Q={}",
                    c.shape, c.claim, w.structure, w.p, w.q
                )
                .unwrap();
            }
        }
        writeln!(out, "TOTAL violations={}", self.total_violations()).unwrap();
        out
    }

    /// Machine-readable summary (counts and violations) as JSON.
    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sweep reports always serialize")
    }
}

/// Points checked, violations and first witness for one claim.
type ClaimTally = (usize, usize, Option<(String, String)>);

struct StructureOutcome {
    name: String,
    per_claim: Vec<ClaimTally>,
}

pub fn sweep_theorems(cfg: &EnumerationConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let start = Instant::now();
    let claims: Vec<(Shape, Claim)> = cfg
        .shapes
        .iter()
        .flat_map(|&shape| {
            expected_claims_with(shape, &cfg.hypothesis, cfg.uy_form)
                .into_iter()
                .map(move |c| (shape, c))
        })
        .collect();
    let bare: Vec<Claim> = claims.iter().map(|(_, c)| *c).collect();

    let mut aggregates: Vec<ClaimAggregate> = claims
        .iter()
        .map(|&(shape, claim)| ClaimAggregate {
            shape,
            claim: claim.to_string(),
            raw_claim: claim,
            structures_checked: 0,
            structures_vacuous: 0,
            points_checked: 0,
            violations: 0,
            violating_structures: 0,
            witnesses: Vec::new(),
        })
        .collect();
    let mut sizes = Vec::new();

    for n in 1..=cfg.max_size {
        let compact = compact_structures(n, cfg.up_to_isomorphism)?;
        sizes.push(SizeCount {
            size: n,
            structures: compact.len(),
        });
        // ordered collect keeps enumeration order regardless of worker count
        let outcomes: Vec<StructureOutcome> = compact
            .par_iter()
            .enumerate()
            .map(|(i, c)| {
                let name = structure_name(n, i, cfg.up_to_isomorphism);
                let s = c.to_structure(&name);
                let report = verify_claims(&s, "sweep", &bare, &cfg.hypothesis);
                let per_claim = report
                    .claims
                    .into_iter()
                    .map(|r| {
                        let w = r.witness.map(|w| (w.p_label, w.q_label));
                        (r.checked_points, r.violations, w)
                    })
                    .collect();
                StructureOutcome { name, per_claim }
            })
            .collect();

        for outcome in outcomes {
            for (agg, (points, violations, witness)) in aggregates.iter_mut().zip(outcome.per_claim) {
                agg.structures_checked += 1;
                agg.points_checked += points;
                agg.violations += violations;
                if points == 0 {
                    agg.structures_vacuous += 1;
                }
                if violations > 0 {
                    agg.violating_structures += 1;
                }
                if let Some((p, q)) = witness {
                    if agg.witnesses.len() < cfg.max_witnesses {
                        agg.witnesses.push(SweepWitness {
                            structure: outcome.name.clone(),
                            p,
                            q,
                        });
                    }
                }
            }
        }
    }

    Ok(SweepReport {
        max_size: cfg.max_size,
        up_to_isomorphism: cfg.up_to_isomorphism,
        hypothesis: cfg.hypothesis.to_string(),
        sizes,
        claims: aggregates,
        elapsed: start.elapsed(),
    })
}

/// Exhaustive check of the `|Q|` lemma and of the `U`/`Y` reduction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AbsLemmaReport {
    pub structures: usize,
    /// `Q` values with `Q`, `¬Q` comparable.
    pub comparable_points: usize,
    /// `(P, Q)` points where both `U`/`Y` forms were compared.
    pub reduction_points: usize,
    pub failures: Vec<String>,
}

fn extremes(s: &ClassCStructure, pair: &[ElementId], top: bool) -> Vec<ElementId> {
    let mut out: Vec<ElementId> = pair
        .iter()
        .copied()
        .filter(|&y| pair.iter().all(|&z| if top { s.leq(z, y) } else { s.leq(y, z) }))
        .collect();
    out.dedup();
    out
}

pub fn abs_lemma_check(structures: &[ClassCStructure]) -> AbsLemmaReport {
    let mut report = AbsLemmaReport {
        structures: structures.len(),
        ..Default::default()
    };
    for s in structures {
        for q in s.elements() {
            let nq = s.neg(q);
            let comparable = s.leq(q, nq) || s.leq(nq, q);
            let computed = abs_max(s, &q);
            if !comparable {
                if computed.is_some() {
                    report
                        .failures
                        .push(format!("{}: |{}| defined for incomparable pair", s.name(), s.label(q)));
                }
                continue;
            }
            report.comparable_points += 1;
            let pair = [q, nq];
            let maxima = extremes(s, &pair, true);
            let minima = extremes(s, &pair, false);
            let fail = |msg: &str| format!("{}: Q={} {msg}", s.name(), s.label(q));
            match computed {
                None => report.failures.push(fail("|Q| missing")),
                Some(r) => {
                    if maxima != [r] {
                        report.failures.push(fail("|Q| is not the unique maximum"));
                    }
                    if minima != [s.neg(r)] {
                        report.failures.push(fail("¬|Q| is not the unique minimum"));
                    }
                }
            }
            for p in s.elements() {
                report.reduction_points += 1;
                if !matches!(compound_reduction_equivalent(s, &p, &q), Ok(true)) {
                    report.failures.push(format!(
                        "{}: P={} Q={} compound and reduced U/Y disagree",
                        s.name(),
                        s.label(p),
                        s.label(q)
                    ));
                }
            }
        }
    }
    report
}
