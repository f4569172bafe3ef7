//! The opposition statements evaluated at a point `(P, Q)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::NegationOrder;

/// Vertex labels of the square, cube and hexagon.
///
/// The lowercase (`Dual*`) statements are the uppercase ones with `P`
/// replaced by `¬P` and `Q` by `¬Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StatementKind {
    /// `P ⪯ Q`
    A,
    /// `P ⪯ ¬Q`
    E,
    /// `P ⋠ ¬Q`
    I,
    /// `P ⋠ Q`
    O,
    /// `¬P ⪯ ¬Q`
    DualA,
    /// `¬P ⪯ Q`
    DualE,
    /// `¬P ⋠ Q`
    DualI,
    /// `¬P ⋠ ¬Q`
    DualO,
    /// `A ∨ E`
    U,
    /// `I ∧ O`
    Y,
    /// `P ⪯ |Q|`
    UAbs,
    /// `P ⋠ |Q|`
    YAbs,
}

impl StatementKind {
    pub const SQUARE: [StatementKind; 4] = [Self::A, Self::E, Self::I, Self::O];
    pub const CUBE: [StatementKind; 8] = [
        Self::A,
        Self::E,
        Self::I,
        Self::O,
        Self::DualA,
        Self::DualE,
        Self::DualI,
        Self::DualO,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Self::A => "A",
            Self::E => "E",
            Self::I => "I",
            Self::O => "O",
            Self::DualA => "a",
            Self::DualE => "e",
            Self::DualI => "i",
            Self::DualO => "o",
            Self::U => "U",
            Self::Y => "Y",
            Self::UAbs => "U_abs",
            Self::YAbs => "Y_abs",
        }
    }

    pub fn needs_abs(self) -> bool {
        matches!(self, Self::UAbs | Self::YAbs)
    }

    /// Swaps compound `U`/`Y` for their `|Q|` forms; other kinds unchanged.
    pub fn to_abs(self) -> Self {
        match self {
            Self::U => Self::UAbs,
            Self::Y => Self::YAbs,
            other => other,
        }
    }
}

impl fmt::Display for StatementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for StatementKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => Self::A,
            "E" => Self::E,
            "I" => Self::I,
            "O" => Self::O,
            "a" => Self::DualA,
            "e" => Self::DualE,
            "i" => Self::DualI,
            "o" => Self::DualO,
            "U" => Self::U,
            "Y" => Self::Y,
            "U_abs" => Self::UAbs,
            "Y_abs" => Self::YAbs,
            other => return Err(Error::Parse(format!("unknown statement `{other}`"))),
        })
    }
}

/// `max{Q, ¬Q}` when `Q` and `¬Q` are comparable.
pub fn abs_max<S: NegationOrder>(s: &S, q: &S::Elem) -> Option<S::Elem> {
    let nq = s.neg(q);
    if s.leq(q, &nq) {
        Some(nq)
    } else if s.leq(&nq, q) {
        Some(q.clone())
    } else {
        None
    }
}

/// A point `(P, Q)` of a structure.
#[derive(Debug, Clone, Copy)]
pub struct StatementContext<'a, S: NegationOrder> {
    pub structure: &'a S,
    pub p: &'a S::Elem,
    pub q: &'a S::Elem,
}

impl<'a, S: NegationOrder> StatementContext<'a, S> {
    pub fn new(structure: &'a S, p: &'a S::Elem, q: &'a S::Elem) -> Self {
        Self { structure, p, q }
    }

    pub fn eval(&self, kind: StatementKind) -> Result<bool> {
        let s = self.structure;
        let (p, q) = (self.p, self.q);
        Ok(match kind {
            StatementKind::A => s.leq(p, q),
            StatementKind::E => s.leq(p, &s.neg(q)),
            StatementKind::I => !self.eval(StatementKind::E)?,
            StatementKind::O => !self.eval(StatementKind::A)?,
            StatementKind::DualA => s.leq(&s.neg(p), &s.neg(q)),
            StatementKind::DualE => s.leq(&s.neg(p), q),
            StatementKind::DualI => !self.eval(StatementKind::DualE)?,
            StatementKind::DualO => !self.eval(StatementKind::DualA)?,
            StatementKind::U => self.eval(StatementKind::A)? || self.eval(StatementKind::E)?,
            StatementKind::Y => self.eval(StatementKind::I)? && self.eval(StatementKind::O)?,
            StatementKind::UAbs => s.leq(p, &self.abs()?),
            StatementKind::YAbs => !s.leq(p, &self.abs()?),
        })
    }

    /// Like `eval`, but `None` where `|Q|` is needed and missing.
    pub fn try_eval(&self, kind: StatementKind) -> Option<bool> {
        self.eval(kind).ok()
    }

    fn abs(&self) -> Result<S::Elem> {
        abs_max(self.structure, self.q).ok_or_else(|| Error::AbsUndefined("Q".into()))
    }
}

pub fn eval_statement<S: NegationOrder>(s: &S, p: &S::Elem, q: &S::Elem, kind: StatementKind) -> Result<bool> {
    StatementContext::new(s, p, q).eval(kind)
}

/// Whether the compound and `|Q|`-reduced `U`/`Y` agree at `(P, Q)`.
pub fn compound_reduction_equivalent<S: NegationOrder>(s: &S, p: &S::Elem, q: &S::Elem) -> Result<bool> {
    let ctx = StatementContext::new(s, p, q);
    Ok(ctx.eval(StatementKind::U)? == ctx.eval(StatementKind::UAbs)?
        && ctx.eval(StatementKind::Y)? == ctx.eval(StatementKind::YAbs)?)
}
