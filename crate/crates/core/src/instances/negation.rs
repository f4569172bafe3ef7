//! Strong negations on `[0, 1]` generated as `φ⁻¹(1 − φ(x))`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::NegationOrder;

const VALIDATION_GRID: usize = 1001;

/// A strictly increasing continuous bijection of `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Phi {
    Identity,
    /// `φ(x) = x^p`, `p > 0`
    Power {
        p: f64,
    },
    /// Piecewise-linear through `(xs[k], ys[k])`.
    Table {
        xs: Vec<f64>,
        ys: Vec<f64>,
    },
}

fn interpolate(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    let k = xs.partition_point(|&v| v <= x).clamp(1, xs.len() - 1);
    let (x0, x1, y0, y1) = (xs[k - 1], xs[k], ys[k - 1], ys[k]);
    if x >= x1 {
        return y1;
    }
    y0 + (y1 - y0) * (x - x0) / (x1 - x0)
}

impl Phi {
    pub fn apply(&self, x: f64) -> f64 {
        match self {
            Phi::Identity => x,
            Phi::Power { p } => x.powf(*p),
            Phi::Table { xs, ys } => interpolate(xs, ys, x),
        }
    }

    pub fn inverse(&self, y: f64) -> f64 {
        match self {
            Phi::Identity => y,
            Phi::Power { p } => y.powf(1.0 / p),
            Phi::Table { xs, ys } => interpolate(ys, xs, y),
        }
    }

    fn validate_shape(&self) -> Result<()> {
        match self {
            Phi::Identity => Ok(()),
            Phi::Power { p } if p.is_finite() && *p > 0.0 => Ok(()),
            Phi::Power { p } => Err(Error::Domain(format!("power φ needs p > 0, got {p}"))),
            Phi::Table { xs, ys } => {
                let increasing = |v: &[f64]| v.windows(2).all(|w| w[0] < w[1]);
                if xs.len() != ys.len() || xs.len() < 2 {
                    return Err(Error::Domain(
                        "table φ needs matching xs/ys with at least two points".into(),
                    ));
                }
                if xs[0] != 0.0 || ys[0] != 0.0 || xs[xs.len() - 1] != 1.0 || ys[ys.len() - 1] != 1.0 {
                    return Err(Error::Domain("table φ must run from (0,0) to (1,1)".into()));
                }
                if !increasing(xs) || !increasing(ys) {
                    return Err(Error::Domain("table φ must be strictly increasing".into()));
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NegationGenerator {
    phi: Phi,
    tolerance: f64,
}

impl NegationGenerator {
    pub fn new(phi: Phi, tolerance: f64) -> Result<Self> {
        phi.validate_shape()?;
        if phi.apply(0.0) != 0.0 || phi.apply(1.0) != 1.0 {
            return Err(Error::Domain("φ must fix 0 and 1".into()));
        }
        let grid: Vec<f64> = (0..VALIDATION_GRID)
            .map(|k| k as f64 / (VALIDATION_GRID - 1) as f64)
            .collect();
        if grid.windows(2).any(|w| phi.apply(w[0]) >= phi.apply(w[1])) {
            return Err(Error::Domain(
                "φ is not strictly increasing on the validation grid".into(),
            ));
        }
        Ok(Self { phi, tolerance })
    }

    pub fn power(p: f64) -> Result<Self> {
        Self::new(Phi::Power { p }, 1e-9)
    }

    pub fn identity() -> Self {
        Self::new(Phi::Identity, 1e-9).expect("identity is a valid φ")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::new(serde_json::from_str(text)?, 1e-9)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn phi(&self) -> &Phi {
        &self.phi
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// The fixed point `x* = φ⁻¹(½)`; the zero set is `[x*, 1]`.
    pub fn fixed_point(&self) -> f64 {
        self.phi.inverse(0.5)
    }

    pub fn negate(&self, x: f64) -> Result<f64> {
        strong_negation(self, x)
    }
}

pub fn strong_negation(g: &NegationGenerator, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("{x} is outside [0, 1]")));
    }
    Ok(g.phi.inverse(1.0 - g.phi.apply(x)).clamp(0.0, 1.0))
}

/// `([0, 1], ¬, ≤)` for a strong negation `¬`.
#[derive(Debug, Clone, PartialEq)]
pub struct StrongNegation {
    pub generator: NegationGenerator,
}

impl NegationOrder for StrongNegation {
    type Elem = f64;

    fn leq(&self, a: &f64, b: &f64) -> bool {
        a <= b
    }

    fn neg(&self, a: &f64) -> f64 {
        strong_negation(&self.generator, a.clamp(0.0, 1.0)).expect("clamped into [0, 1]")
    }
}
