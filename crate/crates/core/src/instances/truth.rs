//! Truth-table vectors of propositional formulas and the arithmetic
//! characterization of the Aristotelian relations between them.

use std::fmt;

use crate::diagrams::{Claim, ClaimResult, Hypothesis, RelationKind, Verdict, VerificationReport};
use crate::error::{Error, Result};
use crate::statements::StatementKind;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Var(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Self {
        Formula::Var(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Self {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Self {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Self {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    fn eval(&self, vars: &[String], row: usize) -> Result<bool> {
        Ok(match self {
            Formula::Var(name) => {
                let k = vars
                    .iter()
                    .position(|v| v == name)
                    .ok_or_else(|| Error::UnknownElement(name.clone()))?;
                // first variable is the most significant bit
                (row >> (vars.len() - 1 - k)) & 1 == 1
            }
            Formula::Not(f) => !f.eval(vars, row)?,
            Formula::And(a, b) => a.eval(vars, row)? && b.eval(vars, row)?,
            Formula::Or(a, b) => a.eval(vars, row)? || b.eval(vars, row)?,
            Formula::Implies(a, b) => !a.eval(vars, row)? || b.eval(vars, row)?,
        })
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(name) => f.write_str(name),
            Formula::Not(a) => write!(f, "¬{a}"),
            Formula::And(a, b) => write!(f, "({a} ∧ {b})"),
            Formula::Or(a, b) => write!(f, "({a} ∨ {b})"),
            Formula::Implies(a, b) => write!(f, "({a} ⇒ {b})"),
        }
    }
}

/// Truth table of a formula; row `r` encodes the assignment with the first
/// variable as the most significant bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthVector {
    pub bits: Vec<bool>,
    pub vars: Vec<String>,
}

impl TruthVector {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    fn values(&self) -> impl Iterator<Item = u8> + '_ {
        self.bits.iter().map(|&b| b as u8)
    }
}

impl fmt::Display for TruthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.values().map(|v| v.to_string()).collect();
        write!(f, "[{}]", digits.join(","))
    }
}

pub fn truth_vector(formula: &Formula, vars: &[&str]) -> Result<TruthVector> {
    let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    let bits = (0..1usize << vars.len())
        .map(|row| formula.eval(&vars, row))
        .collect::<Result<_>>()?;
    Ok(TruthVector { bits, vars })
}

/// The arithmetic test for one truth-table row.
fn row_satisfies(kind: RelationKind, a: u8, b: u8) -> bool {
    match kind {
        // T_A + T_B ⪯ 1
        RelationKind::Contrary => a + b <= 1,
        // T_A + T_B ⪰ 1
        RelationKind::Subcontrary => a + b >= 1,
        // T_A = 1 − T_B
        RelationKind::Contradictory => a == 1 - b,
        RelationKind::SubImplication => a <= b,
        RelationKind::SuperImplication => a >= b,
    }
}

/// Rows where the relation's arithmetic test fails.
fn failing_rows(t1: &TruthVector, t2: &TruthVector, kind: RelationKind) -> Result<Vec<usize>> {
    if t1.len() != t2.len() {
        return Err(Error::Dimension(format!(
            "truth vectors of length {} and {}",
            t1.len(),
            t2.len()
        )));
    }
    Ok(t1
        .values()
        .zip(t2.values())
        .enumerate()
        .filter(|&(_, (a, b))| !row_satisfies(kind, a, b))
        .map(|(row, _)| row)
        .collect())
}

pub fn tv_relation(t1: &TruthVector, t2: &TruthVector, kind: RelationKind) -> Result<bool> {
    Ok(failing_rows(t1, t2, kind)?.is_empty())
}

/// The four vertices of the propositional square, keyed by their position
/// in the first-order square.
pub fn prop_square_vectors(var_p: &str, var_q: &str) -> Vec<(StatementKind, Formula, TruthVector)> {
    let (p, q) = (Formula::var(var_p), Formula::var(var_q));
    let vertices = [
        (StatementKind::A, p.clone().implies(q.clone())),
        (StatementKind::E, p.clone().implies(q.clone().not())),
        (StatementKind::I, p.clone().and(q.clone())),
        (StatementKind::O, p.and(q.not())),
    ];
    vertices
        .into_iter()
        .map(|(k, f)| {
            let tv = truth_vector(&f, &[var_p, var_q]).expect("formula uses only its own variables");
            (k, f, tv)
        })
        .collect()
}

/// Checks the swapped square: `I → A`, `O → E`, `contrary(I,O)`,
/// `subcontrary(A,E)` and the two diagonals. Witnesses are truth-table rows.
pub fn prop_square(var_p: &str, var_q: &str) -> VerificationReport<usize> {
    use RelationKind::*;
    use StatementKind::*;
    let vectors = prop_square_vectors(var_p, var_q);
    let tv = |k: StatementKind| &vectors.iter().find(|(v, _, _)| *v == k).expect("all four vertices").2;
    let none = Hypothesis::NONE;
    let claims = [
        Claim::new(SubImplication, I, A, none),
        Claim::new(SubImplication, O, E, none),
        Claim::new(Contrary, I, O, none),
        Claim::new(Subcontrary, A, E, none),
        Claim::new(Contradictory, A, O, none),
        Claim::new(Contradictory, E, I, none),
    ];
    let rows = tv(A).len();
    let claims = claims
        .into_iter()
        .map(|claim| {
            let failing =
                failing_rows(tv(claim.pair.0), tv(claim.pair.1), claim.relation).expect("equal-length vectors");
            ClaimResult {
                claim,
                verdict: if failing.is_empty() {
                    Verdict::Holds
                } else {
                    Verdict::Violated
                },
                checked_points: rows,
                violations: failing.len(),
                witness: failing.first().copied(),
            }
        })
        .collect();
    VerificationReport {
        title: "prop-square".into(),
        hypothesis: none,
        claims,
        admissible_point_count: rows,
    }
}
