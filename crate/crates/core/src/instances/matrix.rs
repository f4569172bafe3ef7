//! Complex square matrices ordered by `A ⪯ B ⇔ (B−A) + (B−A)ᴴ ⪰ 0`.
//!
//! This is only a preorder: whenever `B − A` is skew-Hermitian and nonzero,
//! both `A ⪯ B` and `B ⪯ A` hold. The evaluator reports that rather than
//! pretending the order is antisymmetric.

use std::path::Path;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::structure::NegationOrder;

pub type CMatrix = DMatrix<Complex64>;

pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixOrderConfig {
    pub dimension: usize,
    /// Relative tolerance; the absolute threshold is `epsilon · scale`.
    pub epsilon: f64,
}

impl MatrixOrderConfig {
    pub fn new(dimension: usize, epsilon: f64) -> Result<Self> {
        if epsilon.is_nan() || epsilon < 0.0 {
            return Err(Error::Domain(format!("tolerance must be nonnegative, got {epsilon}")));
        }
        Ok(Self { dimension, epsilon })
    }

    pub fn with_dimension(dimension: usize) -> Self {
        Self {
            dimension,
            epsilon: DEFAULT_EPSILON,
        }
    }

    fn check(&self, m: &CMatrix) -> Result<()> {
        if m.nrows() != self.dimension || m.ncols() != self.dimension {
            return Err(Error::Dimension(format!(
                "expected {n}×{n}, got {}×{}",
                m.nrows(),
                m.ncols(),
                n = self.dimension
            )));
        }
        Ok(())
    }

    fn threshold(&self, operands: &[&CMatrix]) -> f64 {
        let scale = operands.iter().map(|m| m.norm()).fold(1.0, f64::max);
        self.epsilon * scale
    }
}

/// `M + Mᴴ`.
pub fn hermitian_part(m: &CMatrix) -> CMatrix {
    m + m.adjoint()
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(h: &CMatrix) -> f64 {
    h.clone()
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

pub fn matrix_leq(a: &CMatrix, b: &CMatrix, cfg: &MatrixOrderConfig) -> Result<bool> {
    cfg.check(a)?;
    cfg.check(b)?;
    let h = hermitian_part(&(b - a));
    Ok(min_eigenvalue(&h) >= -cfg.threshold(&[a, b]))
}

pub fn matrix_neg(a: &CMatrix) -> CMatrix {
    -a
}

/// Zero-set membership as the class-𝒞 definition gives it: `¬A ⪯ A`, i.e.
/// `A + Aᴴ ⪰ 0`.
pub fn matrix_zero_member(a: &CMatrix, cfg: &MatrixOrderConfig) -> Result<bool> {
    matrix_leq(&matrix_neg(a), a, cfg)
}

/// The narrower reading `A + Aᴴ = 0` (within tolerance).
pub fn matrix_zero_skew(a: &CMatrix, cfg: &MatrixOrderConfig) -> Result<bool> {
    cfg.check(a)?;
    Ok(hermitian_part(a).norm() <= cfg.threshold(&[a]))
}

/// A partner `B = A + iI`: `B − A` is skew-Hermitian and nonzero, so `A ⪯ B`
/// and `B ⪯ A` both hold while `A ≠ B`.
pub fn antisymmetry_partner(a: &CMatrix) -> CMatrix {
    let n = a.nrows();
    a + CMatrix::identity(n, n) * Complex64::new(0.0, 1.0)
}

/// Whether `(a, b)` witnesses the failure of antisymmetry.
pub fn is_antisymmetry_witness(a: &CMatrix, b: &CMatrix, cfg: &MatrixOrderConfig) -> Result<bool> {
    Ok(a != b && matrix_leq(a, b, cfg)? && matrix_leq(b, a, cfg)?)
}

/// Reads a matrix stored as rows of `[re, im]` pairs.
pub fn matrix_from_json(text: &str) -> Result<CMatrix> {
    let rows: Vec<Vec<[f64; 2]>> = serde_json::from_str(text)?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("matrix must be square".into()));
    }
    Ok(CMatrix::from_fn(n, n, |i, j| {
        Complex64::new(rows[i][j][0], rows[i][j][1])
    }))
}

pub fn load_matrix(path: impl AsRef<Path>) -> Result<CMatrix> {
    matrix_from_json(&std::fs::read_to_string(path)?)
}

/// The matrix preorder as an order with negation `¬A = −A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixOrder {
    pub config: MatrixOrderConfig,
}

impl NegationOrder for MatrixOrder {
    type Elem = CMatrix;

    fn leq(&self, a: &CMatrix, b: &CMatrix) -> bool {
        matrix_leq(a, b, &self.config).unwrap_or(false)
    }

    fn neg(&self, a: &CMatrix) -> CMatrix {
        matrix_neg(a)
    }
}
