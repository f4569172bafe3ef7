//! Aristotelian relations, the claim sets of the square, cube and hexagon,
//! claim-by-claim verification and DOT rendering.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statements::{StatementContext, StatementKind};
use crate::structure::{ClassCStructure, ElementId, NegationOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelationKind {
    /// Never both true.
    Contrary,
    /// Never both false.
    Subcontrary,
    /// Always opposite truth values.
    Contradictory,
    /// The first statement implies the second.
    SubImplication,
    /// The second statement implies the first.
    SuperImplication,
}

impl RelationKind {
    pub const ALL: [RelationKind; 5] = [
        Self::Contrary,
        Self::Subcontrary,
        Self::Contradictory,
        Self::SubImplication,
        Self::SuperImplication,
    ];

    pub fn holds_at(self, first: bool, second: bool) -> bool {
        match self {
            Self::Contrary => !(first && second),
            Self::Subcontrary => first || second,
            Self::Contradictory => first != second,
            Self::SubImplication => !first || second,
            Self::SuperImplication => first || !second,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Contrary => "contrary",
            Self::Subcontrary => "subcontrary",
            Self::Contradictory => "contradictory",
            Self::SubImplication => "sub-implication",
            Self::SuperImplication => "super-implication",
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown relation `{s}`")))
    }
}

/// Side conditions on the point `(P, Q)`. Enabled flags are conjoined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash, Serialize, Deserialize)]
pub struct Hypothesis {
    /// `∃z ∈ Z: P ≻ z`
    pub import_forward: bool,
    /// `∃z ∈ Z: ¬P ≻ z`
    pub import_backward: bool,
    /// `P ≠ Q`
    pub distinct: bool,
    /// `P ≠ ¬Q`
    pub nondual: bool,
}

impl Hypothesis {
    pub const NONE: Hypothesis = Hypothesis {
        import_forward: false,
        import_backward: false,
        distinct: false,
        nondual: false,
    };

    pub fn forward() -> Self {
        Self {
            import_forward: true,
            ..Self::NONE
        }
    }

    pub fn with_backward(mut self) -> Self {
        self.import_backward = true;
        self
    }

    pub fn with_distinct(mut self) -> Self {
        self.distinct = true;
        self
    }

    pub fn with_nondual(mut self) -> Self {
        self.nondual = true;
        self
    }

    /// Whether every flag set in `other` is also set here.
    pub fn implies(&self, other: &Hypothesis) -> bool {
        (self.import_forward || !other.import_forward)
            && (self.import_backward || !other.import_backward)
            && (self.distinct || !other.distinct)
            && (self.nondual || !other.nondual)
    }

    /// Admissibility with a caller-supplied test for `∃z ∈ Z: x ≻ z`.
    pub fn admits_with<S, F>(&self, s: &S, p: &S::Elem, q: &S::Elem, above_some_zero: F) -> bool
    where
        S: NegationOrder,
        F: Fn(&S::Elem) -> bool,
    {
        (!self.distinct || p != q)
            && (!self.nondual || *p != s.neg(q))
            && (!self.import_forward || above_some_zero(p))
            && (!self.import_backward || above_some_zero(&s.neg(p)))
    }

    pub fn admits(&self, s: &ClassCStructure, p: ElementId, q: ElementId) -> bool {
        self.admits_with(s, &p, &q, |&x| s.zeros().iter().any(|&z| s.lt(z, x)))
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flags: Vec<&str> = [
            (self.import_forward, "forward"),
            (self.import_backward, "backward"),
            (self.distinct, "distinct"),
            (self.nondual, "nondual"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect();
        if flags.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&flags.join("+"))
        }
    }
}

/// One atomic relation claimed between two statements, together with the
/// hypothesis under which it is stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Claim {
    pub relation: RelationKind,
    pub pair: (StatementKind, StatementKind),
    pub requires: Hypothesis,
}

impl PartialOrd for Hypothesis {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Hypothesis {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |h: &Hypothesis| (h.import_forward, h.import_backward, h.distinct, h.nondual);
        key(self).cmp(&key(other))
    }
}

impl Claim {
    pub fn new(relation: RelationKind, first: StatementKind, second: StatementKind, requires: Hypothesis) -> Self {
        assert_ne!(first, second, "a claim relates two distinct statements");
        Self {
            relation,
            pair: (first, second),
            requires,
        }
    }

    /// Truth of the claim at one point; `None` when a statement is undefined
    /// there (`|Q|` missing).
    pub fn holds_at<S: NegationOrder>(&self, s: &S, p: &S::Elem, q: &S::Elem) -> Option<bool> {
        let ctx = StatementContext::new(s, p, q);
        let first = ctx.try_eval(self.pair.0)?;
        let second = ctx.try_eval(self.pair.1)?;
        Some(self.relation.holds_at(first, second))
    }

    pub fn with_abs(mut self) -> Self {
        self.pair = (self.pair.0.to_abs(), self.pair.1.to_abs());
        self
    }
}

/// `A->I`, `A<-I`, `contrary(A,E)`, `subcontrary(I,O)`, `contradictory(A,O)`.
impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.pair;
        match self.relation {
            RelationKind::SubImplication => write!(f, "{a}->{b}"),
            RelationKind::SuperImplication => write!(f, "{a}<-{b}"),
            other => write!(f, "{}({a},{b})", other.name()),
        }
    }
}

/// Parses the `Display` syntax; `requires` is left empty.
impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("cannot parse claim `{s}`"));
        let (relation, a, b) = if let Some((a, b)) = s.split_once("->") {
            (RelationKind::SubImplication, a, b)
        } else if let Some((a, b)) = s.split_once("<-") {
            (RelationKind::SuperImplication, a, b)
        } else {
            let (name, rest) = s.split_once('(').ok_or_else(bad)?;
            let inner = rest.strip_suffix(')').ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            (name.trim().parse()?, a, b)
        };
        let (a, b): (StatementKind, StatementKind) = (a.trim().parse()?, b.trim().parse()?);
        if a == b {
            return Err(Error::Parse(format!("claim `{s}` relates a statement to itself")));
        }
        Ok(Claim::new(relation, a, b, Hypothesis::NONE))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Square,
    Cube,
    Hexagon,
}

impl Shape {
    pub const ALL: [Shape; 3] = [Shape::Square, Shape::Cube, Shape::Hexagon];

    pub fn name(self) -> &'static str {
        match self {
            Shape::Square => "square",
            Shape::Cube => "cube",
            Shape::Hexagon => "hexagon",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Shape::ALL
            .into_iter()
            .find(|shape| shape.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown shape `{s}`")))
    }
}

/// Which form of the hexagon's `U`/`Y` statements to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash, Serialize, Deserialize)]
pub enum UyForm {
    /// `U = A ∨ E`, `Y = I ∧ O`
    #[default]
    Compound,
    /// `U: P ⪯ |Q|`, `Y: P ⋠ |Q|`
    Abs,
}

fn square_claims(requires: Hypothesis) -> Vec<Claim> {
    use RelationKind::*;
    use StatementKind::*;
    vec![
        Claim::new(SubImplication, A, I, requires),
        Claim::new(SubImplication, E, O, requires),
        Claim::new(Contrary, A, E, requires),
        Claim::new(Subcontrary, I, O, requires),
        Claim::new(Contradictory, A, O, requires),
        Claim::new(Contradictory, E, I, requires),
    ]
}

fn cube_claims(include_conditional: bool) -> Vec<Claim> {
    use RelationKind::*;
    use StatementKind::*;
    let base = Hypothesis::forward();
    let mut claims = vec![
        Claim::new(SubImplication, A, DualE, base),
        Claim::new(SubImplication, E, DualA, base),
        Claim::new(SubImplication, DualO, I, base),
        Claim::new(SubImplication, DualI, O, base),
        Claim::new(Contrary, DualA, DualE, base),
        Claim::new(Subcontrary, DualI, DualO, base),
        Claim::new(Contrary, A, E, base),
        Claim::new(Subcontrary, I, O, base),
        Claim::new(Subcontrary, DualA, I, base),
        Claim::new(Subcontrary, DualE, O, base),
        Claim::new(Contrary, A, DualI, base),
        Claim::new(Contrary, E, DualO, base),
        Claim::new(Contradictory, DualA, DualO, base),
        Claim::new(Contradictory, DualE, DualI, base),
        Claim::new(Contradictory, A, O, base),
        Claim::new(Contradictory, E, I, base),
    ];
    if include_conditional {
        let cond = base.with_distinct().with_nondual();
        claims.extend([
            Claim::new(Contrary, A, DualA, cond),
            Claim::new(Contrary, E, DualE, cond),
            Claim::new(Subcontrary, I, DualI, cond),
            Claim::new(Subcontrary, O, DualO, cond),
            Claim::new(SubImplication, A, DualO, cond),
            Claim::new(SubImplication, E, DualI, cond),
            Claim::new(SubImplication, DualA, O, cond),
            Claim::new(SubImplication, DualE, I, cond),
        ]);
    }
    claims
}

fn hexagon_claims(form: UyForm) -> Vec<Claim> {
    use RelationKind::*;
    use StatementKind::*;
    let base = Hypothesis::forward();
    let mut claims = square_claims(base);
    claims.extend([
        Claim::new(SubImplication, A, U, base),
        Claim::new(SubImplication, E, U, base),
        Claim::new(SubImplication, Y, I, base),
        Claim::new(SubImplication, Y, O, base),
        Claim::new(Contrary, A, Y, base),
        Claim::new(Contrary, E, Y, base),
        Claim::new(Subcontrary, I, U, base),
        Claim::new(Subcontrary, O, U, base),
    ]);
    match form {
        UyForm::Compound => claims,
        UyForm::Abs => claims.into_iter().map(Claim::with_abs).collect(),
    }
}

/// The claim list of a shape. The cube's eight conditional claims are
/// included only when `h` enables both `distinct` and `nondual`.
pub fn expected_claims(shape: Shape, h: &Hypothesis) -> Vec<Claim> {
    expected_claims_with(shape, h, UyForm::Compound)
}

pub fn expected_claims_with(shape: Shape, h: &Hypothesis, form: UyForm) -> Vec<Claim> {
    match shape {
        Shape::Square => square_claims(Hypothesis::forward()),
        Shape::Cube => cube_claims(h.distinct && h.nondual),
        Shape::Hexagon => hexagon_claims(form),
    }
}

/// The relations found to hold between two statements over all admissible
/// points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub relations: BTreeSet<RelationKind>,
    pub admissible_points: usize,
    /// No admissible point: every relation holds vacuously.
    pub vacuous: bool,
}

pub fn classify_pair(
    s: &ClassCStructure,
    first: StatementKind,
    second: StatementKind,
    h: &Hypothesis,
) -> Classification {
    let mut alive: BTreeSet<RelationKind> = RelationKind::ALL.into_iter().collect();
    let mut points = 0;
    for (p, q) in points_in_order(s) {
        if !h.admits(s, p, q) {
            continue;
        }
        let ctx = StatementContext::new(s, &p, &q);
        let (Some(v1), Some(v2)) = (ctx.try_eval(first), ctx.try_eval(second)) else {
            continue;
        };
        points += 1;
        alive.retain(|r| r.holds_at(v1, v2));
    }
    Classification {
        relations: alive,
        admissible_points: points,
        vacuous: points == 0,
    }
}

/// Every `(P, Q)` in element index order, `P` major.
pub fn points_in_order(s: &ClassCStructure) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
    s.elements().flat_map(move |p| s.elements().map(move |q| (p, q)))
}

/// First admissible point falsifying the claim, scanning `P`-major in
/// element order.
pub fn counterexample_search(s: &ClassCStructure, c: &Claim, h: &Hypothesis) -> Option<(ElementId, ElementId)> {
    points_in_order(s).find(|&(p, q)| h.admits(s, p, q) && c.holds_at(s, &p, &q) == Some(false))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Violated,
    Vacuous,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Vacuous => "vacuous",
        })
    }
}

/// A point of a finite structure, carrying labels for display.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledPoint {
    pub p: ElementId,
    pub q: ElementId,
    pub p_label: String,
    pub q_label: String,
}

impl LabeledPoint {
    pub fn new(s: &ClassCStructure, p: ElementId, q: ElementId) -> Self {
        Self {
            p,
            q,
            p_label: s.label(p).to_string(),
            q_label: s.label(q).to_string(),
        }
    }
}

impl fmt::Display for LabeledPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P={},Q={}", self.p_label, self.q_label)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult<W> {
    pub claim: Claim,
    pub verdict: Verdict,
    /// Points where the claim was evaluated.
    pub checked_points: usize,
    /// Points where it failed.
    pub violations: usize,
    pub witness: Option<W>,
}

/// Per-claim verdicts. `W` is the witness type: a point `(P, Q)` for
/// structures, a truth-table row for truth vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport<W = LabeledPoint> {
    pub title: String,
    pub hypothesis: Hypothesis,
    pub claims: Vec<ClaimResult<W>>,
    pub admissible_point_count: usize,
}

impl<W: fmt::Display> VerificationReport<W> {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.verdict != Verdict::Violated)
    }

    pub fn violated(&self) -> impl Iterator<Item = &ClaimResult<W>> {
        self.claims.iter().filter(|c| c.verdict == Verdict::Violated)
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.claims.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn result_for(&self, claim: &Claim) -> Option<&ClaimResult<W>> {
        self.claims
            .iter()
            .find(|r| r.claim.relation == claim.relation && r.claim.pair == claim.pair)
    }

    /// One `CLAIM` line per claim followed by a `SUMMARY` line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.claims {
            let witness = r
                .witness
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_else(|| "-".into());
            writeln!(
                out,
                "CLAIM {} {} relation={} stated={} hyp={} verdict={} points={} witness={}",
                self.title,
                r.claim,
                r.claim.relation,
                r.claim.requires,
                self.hypothesis,
                r.verdict,
                r.checked_points,
                witness
            )
            .unwrap();
        }
        writeln!(
            out,
            "SUMMARY {} hyp={} admissible={} holds={} violated={} vacuous={}",
            self.title,
            self.hypothesis,
            self.admissible_point_count,
            self.count(Verdict::Holds),
            self.count(Verdict::Violated),
            self.count(Verdict::Vacuous)
        )
        .unwrap();
        out
    }
}

/// Checks each claim over the admissible points of `s` under `h`. Claims
/// using `|Q|` are only evaluated where `|Q|` exists.
pub fn verify_claims(s: &ClassCStructure, title: &str, claims: &[Claim], h: &Hypothesis) -> VerificationReport {
    verify_claims_at(s, title, claims, h, points_in_order(s))
}

/// [`verify_claims`] restricted to the given points; inadmissible points are
/// skipped.
pub fn verify_claims_at(
    s: &ClassCStructure,
    title: &str,
    claims: &[Claim],
    h: &Hypothesis,
    points: impl IntoIterator<Item = (ElementId, ElementId)>,
) -> VerificationReport {
    let admissible: Vec<(ElementId, ElementId)> = points.into_iter().filter(|&(p, q)| h.admits(s, p, q)).collect();
    let results = claims
        .iter()
        .map(|claim| {
            let mut checked = 0;
            let mut violations = 0;
            let mut witness = None;
            for &(p, q) in &admissible {
                if let Some(ok) = claim.holds_at(s, &p, &q) {
                    checked += 1;
                    if !ok {
                        violations += 1;
                        witness.get_or_insert_with(|| LabeledPoint::new(s, p, q));
                    }
                }
            }
            let verdict = match (checked, &witness) {
                (0, _) => Verdict::Vacuous,
                (_, Some(_)) => Verdict::Violated,
                _ => Verdict::Holds,
            };
            ClaimResult {
                claim: *claim,
                verdict,
                checked_points: checked,
                violations,
                witness,
            }
        })
        .collect();
    VerificationReport {
        title: title.to_string(),
        hypothesis: *h,
        claims: results,
        admissible_point_count: admissible.len(),
    }
}

pub fn verify_shape(s: &ClassCStructure, shape: Shape, h: &Hypothesis, form: UyForm) -> VerificationReport {
    verify_claims(s, shape.name(), &expected_claims_with(shape, h, form), h)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramEdge {
    pub pair: (StatementKind, StatementKind),
    pub relations: Vec<RelationKind>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub shape: Shape,
    pub vertices: Vec<StatementKind>,
    pub edges: Vec<DiagramEdge>,
}

impl Diagram {
    /// The full figure for a shape. The cube carries all 28 vertex pairs:
    /// its 24 claims plus the front and rear sub-implications
    /// `A->I`, `E->O`, `a->i`, `e->o`.
    pub fn for_shape(shape: Shape, form: UyForm) -> Self {
        use RelationKind::SubImplication;
        use StatementKind::*;
        let all = Hypothesis::forward().with_distinct().with_nondual();
        let mut claims = expected_claims_with(shape, &all, form);
        let vertices = match shape {
            Shape::Square => StatementKind::SQUARE.to_vec(),
            Shape::Cube => {
                for (a, b) in [(A, I), (E, O), (DualA, DualI), (DualE, DualO)] {
                    claims.push(Claim::new(SubImplication, a, b, Hypothesis::forward()));
                }
                StatementKind::CUBE.to_vec()
            }
            Shape::Hexagon => {
                let (u, y) = match form {
                    UyForm::Compound => (U, Y),
                    UyForm::Abs => (UAbs, YAbs),
                };
                vec![A, E, I, O, u, y]
            }
        };
        let mut edges: Vec<DiagramEdge> = Vec::new();
        for c in claims {
            match edges.iter_mut().find(|e| e.pair == c.pair) {
                Some(edge) => edge.relations.push(c.relation),
                None => edges.push(DiagramEdge {
                    pair: c.pair,
                    relations: vec![c.relation],
                }),
            }
        }
        Self { shape, vertices, edges }
    }

    fn ranks(&self) -> Vec<Vec<StatementKind>> {
        use StatementKind::*;
        let keep = |row: &[StatementKind]| -> Vec<StatementKind> {
            row.iter().copied().filter(|v| self.vertices.contains(v)).collect()
        };
        match self.shape {
            Shape::Square => vec![keep(&[A, E]), keep(&[I, O])],
            Shape::Cube => vec![keep(&[A, E, DualA, DualE]), keep(&[I, O, DualI, DualO])],
            Shape::Hexagon => vec![keep(&[U, UAbs]), keep(&[A, E]), keep(&[I, O]), keep(&[Y, YAbs])],
        }
    }
}

fn edge_attrs(relation: RelationKind) -> &'static str {
    match relation {
        RelationKind::SubImplication => "style=solid",
        RelationKind::SuperImplication => "style=solid, dir=back",
        RelationKind::Contrary => "style=dashed, dir=none",
        RelationKind::Subcontrary => "style=dotted, dir=none",
        RelationKind::Contradictory => "style=bold, dir=none",
    }
}

fn verdict_color(verdict: Verdict) -> &'static str {
    match verdict {
        Verdict::Holds => "darkgreen",
        Verdict::Violated => "red",
        Verdict::Vacuous => "gray",
    }
}

/// Deterministic DOT text for a diagram, optionally colored by verdict.
pub fn render_dot<W: fmt::Display>(d: &Diagram, verdicts: Option<&VerificationReport<W>>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", d.shape.name()).unwrap();
    writeln!(out, "  graph [label=\"{} of opposition\", labelloc=t];", d.shape.name()).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in &d.vertices {
        writeln!(out, "  \"{v}\";").unwrap();
    }
    for rank in d.ranks() {
        if rank.len() > 1 {
            let names: Vec<String> = rank.iter().map(|v| format!("\"{v}\";")).collect();
            writeln!(out, "  {{ rank=same; {} }}", names.join(" ")).unwrap();
        }
    }
    for edge in &d.edges {
        let (a, b) = edge.pair;
        for &relation in &edge.relations {
            let mut attrs = format!("{}, label=\"{}\"", edge_attrs(relation), relation.name());
            let verdict = verdicts.and_then(|report| {
                report
                    .claims
                    .iter()
                    .find(|r| r.claim.pair == edge.pair && r.claim.relation == relation)
            });
            if let Some(r) = verdict {
                write!(attrs, ", color={}", verdict_color(r.verdict)).unwrap();
                if let Some(w) = &r.witness {
                    write!(attrs, ", tooltip=\"{w}\"").unwrap();
                }
            }
            writeln!(out, "  \"{a}\" -> \"{b}\" [{attrs}];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
