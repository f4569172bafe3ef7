//! Concrete members of class 𝒞.
//!
//! Finite examples are admitted table structures. Infinite ones (signed
//! multisets, complex matrices, strong negations on `[0, 1]`) are
//! predicate-style evaluators implementing [`NegationOrder`].
//!
//! [`NegationOrder`]: crate::structure::NegationOrder

pub mod matrix;
pub mod multiset;
pub mod negation;
pub mod truth;

use crate::structure::{admit, ClassCStructure, RawStructure};

fn build(name: &str, labels: &[&str], cover: &[(&str, &str)], neg: &[(&str, &str)]) -> ClassCStructure {
    let raw = RawStructure::from_cover(name, labels, cover, neg).expect("built-in structure is well formed");
    admit(raw).expect("built-in structure is in class C")
}

/// `{0, h, 1}` with the chain order and `¬x = 1 − x`; `h` stands for ½.
pub fn three_valued() -> ClassCStructure {
    build(
        "T3",
        &["0", "h", "1"],
        &[("0", "h"), ("h", "1")],
        &[("0", "1"), ("h", "h"), ("1", "0")],
    )
}

/// `{0, 1}` with `0 ⪯ 1` and `¬x = 1 − x`.
pub fn boolean() -> ClassCStructure {
    build("B2", &["0", "1"], &[("0", "1")], &[("0", "1"), ("1", "0")])
}

/// The four-element diamond `0 ⪯ a, b ⪯ 1` with `¬` swapping `0 ↔ 1` and
/// `a ↔ b`.
pub fn diamond() -> ClassCStructure {
    build(
        "D4",
        &["0", "a", "b", "1"],
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        &[("0", "1"), ("a", "b"), ("b", "a"), ("1", "0")],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_valued_shape() {
        let t3 = three_valued();
        let h = t3.find("h").unwrap();
        assert_eq!(t3.neg(h), h);
        assert_eq!(t3.format_set(t3.zeros()), "{h, 1}");
    }

    #[test]
    fn diamond_zero_is_top() {
        let d4 = diamond();
        assert_eq!(d4.format_set(d4.zeros()), "{1}");
    }

    #[test]
    fn powers_of_three_valued_are_admitted() {
        let t3 = three_valued();
        for k in 1..=3 {
            let parts = vec![t3.clone(); k];
            let p = crate::structure::product(&parts).unwrap();
            assert_eq!(p.size(), 3usize.pow(k as u32));
            assert_eq!(p.zeros().len(), 2usize.pow(k as u32));
        }
    }
}
