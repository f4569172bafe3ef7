//! Diagrams of opposition over class 𝒞 structures.
//!
//! A class 𝒞 structure `(X, ¬, ⪯)` has an involutive negation that
//! reverses a partial order and a nonempty zero set `Z = {x : ¬x ⪯ x}`.
//! Over such a structure the statements `A: P ⪯ Q`, `E: P ⪯ ¬Q`,
//! `I: P ⋠ ¬Q`, `O: P ⋠ Q` (and their `¬P`/`¬Q` variants) form squares,
//! cubes and hexagons of opposition once `P` lies strictly above a zero.
//!
//! - [`structure`]: candidate structures, axiom validation, zeros, products
//! - [`statements`]: statement evaluation and `|Q|`
//! - [`diagrams`]: relations, claim sets, verification, DOT output
//! - [`instances`]: three-valued logic, signed multisets, truth vectors,
//!   complex matrices, strong negations
//! - [`harness`]: exhaustive enumeration and sweeps, seeded sampling

pub mod diagrams;
pub mod error;
pub mod harness;
pub mod instances;
pub mod statements;
pub mod structure;

pub use diagrams::{
    classify_pair, counterexample_search, expected_claims, render_dot, verify_shape, Claim, Diagram, Hypothesis,
    RelationKind, Shape, UyForm, Verdict, VerificationReport,
};
pub use error::{Error, Result};
pub use statements::{abs_max, eval_statement, StatementKind};
pub use structure::{
    admit, product, validate_axioms, AxiomReport, ClassCStructure, ElementId, NegationOrder, RawStructure,
};
