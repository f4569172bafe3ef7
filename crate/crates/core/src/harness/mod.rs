//! Brute-force oracle: enumerate every small class-𝒞 structure and check
//! every claim at every admissible point.

pub mod enumerate;
pub mod sample;
pub mod sweep;

use crate::diagrams::{Hypothesis, Shape, UyForm};
use crate::error::{Error, Result};

pub use enumerate::{CompactStructure, MAX_ENUMERATION_SIZE};
pub use sample::{sample_check_instance, PropertyCheck, SampleInstance, SampleReport};
pub use sweep::{abs_lemma_check, enumerate_structures, sweep_theorems, AbsLemmaReport, ClaimAggregate, SweepReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_size: usize,
    pub up_to_isomorphism: bool,
    pub hypothesis: Hypothesis,
    pub shapes: Vec<Shape>,
    pub uy_form: UyForm,
    /// Witnesses kept per claim in sweep reports.
    pub max_witnesses: usize,
}

impl EnumerationConfig {
    pub fn new(max_size: usize) -> Self {
        Self {
            max_size,
            up_to_isomorphism: false,
            hypothesis: Hypothesis::forward(),
            shapes: Shape::ALL.to_vec(),
            uy_form: UyForm::Compound,
            max_witnesses: 3,
        }
    }

    pub fn iso(mut self, on: bool) -> Self {
        self.up_to_isomorphism = on;
        self
    }

    pub fn hypothesis(mut self, h: Hypothesis) -> Self {
        self.hypothesis = h;
        self
    }

    pub fn shapes(mut self, shapes: &[Shape]) -> Self {
        self.shapes = shapes.to_vec();
        self
    }

    pub fn uy_form(mut self, form: UyForm) -> Self {
        self.uy_form = form;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_size == 0 {
            return Err(Error::Usage("max size must be at least 1".into()));
        }
        if self.max_size > MAX_ENUMERATION_SIZE {
            return Err(Error::Usage(format!(
                "max size {} exceeds the enumeration limit of {MAX_ENUMERATION_SIZE}",
                self.max_size
            )));
        }
        Ok(())
    }
}
