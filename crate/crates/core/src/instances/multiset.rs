//! Signed multisets whose multiplicities live in a class-𝒞 structure.
//!
//! The order is pointwise over the union of the key sets, reading an absent
//! key as the designated zero `0_m`. [`multiset_leq_literal`] keeps the
//! one-sided reading (only keys of the right operand are constrained) so its
//! failure of antisymmetry can be shown.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::{ClassCStructure, ElementId, NegationOrder};

/// A multiplicity domain: an order with negation plus a membership test.
pub trait Multiplicities: NegationOrder {
    fn contains(&self, _x: &Self::Elem) -> bool {
        true
    }
}

/// The integers with `≤` and `¬m = −m`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct IntegerLine;

impl NegationOrder for IntegerLine {
    type Elem = i64;

    fn leq(&self, a: &i64, b: &i64) -> bool {
        a <= b
    }

    fn neg(&self, a: &i64) -> i64 {
        -a
    }
}

impl Multiplicities for IntegerLine {
    /// `i64::MIN` has no negation.
    fn contains(&self, x: &i64) -> bool {
        *x != i64::MIN
    }
}

impl Multiplicities for ClassCStructure {
    fn contains(&self, x: &ElementId) -> bool {
        x.0 < self.size()
    }
}

/// Partial group operation; `None` signals the result left the domain.
pub type GroupOp<E> = fn(&E, &E) -> Option<E>;

/// Multiplicity structure `M`, its designated zero `0_m`, and optionally a
/// group operation `⊕` with unit `0_m` and inverse `¬_m`.
#[derive(Debug, Clone)]
pub struct MultiplicityConfig<M: Multiplicities> {
    algebra: M,
    zero: M::Elem,
    group: Option<GroupOp<M::Elem>>,
}

impl<M: Multiplicities> MultiplicityConfig<M> {
    pub fn new(algebra: M, zero: M::Elem, group: Option<GroupOp<M::Elem>>) -> Result<Self> {
        if !algebra.contains(&zero) {
            return Err(Error::InvalidMultiplicity("designated zero is outside M".into()));
        }
        if !algebra.leq(&algebra.neg(&zero), &zero) {
            return Err(Error::InvalidMultiplicity("designated zero is not in Z_M".into()));
        }
        Ok(Self { algebra, zero, group })
    }

    pub fn algebra(&self) -> &M {
        &self.algebra
    }

    pub fn zero(&self) -> &M::Elem {
        &self.zero
    }

    pub fn has_group(&self) -> bool {
        self.group.is_some()
    }

    /// `x ⊕ ¬x = 0_m` at one sample point.
    pub fn group_inverse_holds(&self, x: &M::Elem) -> Option<bool> {
        let op = self.group?;
        Some(op(x, &self.algebra.neg(x)).as_ref() == Some(&self.zero))
    }

    fn check(&self, x: &M::Elem) -> Result<()> {
        if self.algebra.contains(x) {
            Ok(())
        } else {
            Err(Error::InvalidMultiplicity("value is outside M".into()))
        }
    }
}

impl MultiplicityConfig<IntegerLine> {
    /// Integer multiplicities with addition.
    pub fn integers() -> Self {
        fn add(a: &i64, b: &i64) -> Option<i64> {
            a.checked_add(*b).filter(|&s| s != i64::MIN)
        }
        Self::new(IntegerLine, 0, Some(add)).expect("0 is an integer zero")
    }
}

impl MultiplicityConfig<ClassCStructure> {
    /// Multiplicities in a finite structure, without a group operation.
    pub fn over_structure(s: ClassCStructure, zero: ElementId) -> Result<Self> {
        Self::new(s, zero, None)
    }
}

/// Finite map from keys to multiplicities. Canonical values never store the
/// designated zero.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SignedMultiset<V> {
    pub entries: BTreeMap<String, V>,
}

impl<V> SignedMultiset<V> {
    pub fn empty() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<V: Clone + PartialEq> SignedMultiset<V> {
    /// Builds a canonical multiset, validating every multiplicity.
    pub fn new<M, I, K>(entries: I, m: &MultiplicityConfig<M>) -> Result<Self>
    where
        M: Multiplicities<Elem = V>,
        I: IntoIterator<Item = (K, V)>,
        K: Into<String>,
    {
        let raw = Self {
            entries: entries.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        };
        raw.canonical(m)
    }

    pub fn canonical<M: Multiplicities<Elem = V>>(mut self, m: &MultiplicityConfig<M>) -> Result<Self> {
        for v in self.entries.values() {
            m.check(v)?;
        }
        self.entries.retain(|_, v| v != m.zero());
        Ok(self)
    }

    pub fn get<M: Multiplicities<Elem = V>>(&self, key: &str, m: &MultiplicityConfig<M>) -> V {
        self.entries.get(key).cloned().unwrap_or_else(|| m.zero().clone())
    }

    fn validate<M: Multiplicities<Elem = V>>(&self, m: &MultiplicityConfig<M>) -> Result<()> {
        self.entries.values().try_for_each(|v| m.check(v))
    }
}

impl SignedMultiset<i64> {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Self = serde_json::from_str(text)?;
        raw.canonical(&MultiplicityConfig::integers())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

impl<V: fmt::Display> fmt::Display for SignedMultiset<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.entries.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(f, "{{{}}}", inner.join(", "))
    }
}

fn union_keys<'a, V>(a: &'a SignedMultiset<V>, b: &'a SignedMultiset<V>) -> BTreeSet<&'a str> {
    a.entries.keys().chain(b.entries.keys()).map(String::as_str).collect()
}

/// Pointwise order, absent keys reading `0_m`.
pub fn multiset_leq<M: Multiplicities>(
    a: &SignedMultiset<M::Elem>,
    b: &SignedMultiset<M::Elem>,
    m: &MultiplicityConfig<M>,
) -> Result<bool> {
    a.validate(m)?;
    b.validate(m)?;
    Ok(union_keys(a, b)
        .into_iter()
        .all(|key| m.algebra.leq(&a.get(key, m), &b.get(key, m))))
}

/// The one-sided reading: for each key of `b` with multiplicity `r`, either
/// the key is absent from `a` and `r ⪰ 0_m`, or `a`'s multiplicity is
/// `⪯ r`. Keys only in `a` are unconstrained, so this is not antisymmetric.
pub fn multiset_leq_literal<M: Multiplicities>(
    a: &SignedMultiset<M::Elem>,
    b: &SignedMultiset<M::Elem>,
    m: &MultiplicityConfig<M>,
) -> Result<bool> {
    a.validate(m)?;
    b.validate(m)?;
    Ok(b.entries.iter().all(|(key, r)| match a.entries.get(key) {
        None => m.algebra.leq(&m.zero, r),
        Some(k) => m.algebra.leq(k, r),
    }))
}

pub fn multiset_neg<M: Multiplicities>(
    a: &SignedMultiset<M::Elem>,
    m: &MultiplicityConfig<M>,
) -> Result<SignedMultiset<M::Elem>> {
    a.validate(m)?;
    let entries = a.entries.iter().map(|(k, v)| (k.clone(), m.algebra.neg(v)));
    SignedMultiset::new(entries, m)
}

/// Additive union: multiplicities combined keywise with `⊕`.
pub fn multiset_union<M: Multiplicities>(
    a: &SignedMultiset<M::Elem>,
    b: &SignedMultiset<M::Elem>,
    m: &MultiplicityConfig<M>,
) -> Result<SignedMultiset<M::Elem>> {
    let op = m
        .group
        .ok_or_else(|| Error::Unsupported("additive union needs a group operation on the multiplicities".into()))?;
    a.validate(m)?;
    b.validate(m)?;
    let entries = union_keys(a, b)
        .into_iter()
        .map(|key| {
            let sum = op(&a.get(key, m), &b.get(key, m))
                .ok_or_else(|| Error::InvalidMultiplicity(format!("sum overflows at key `{key}`")))?;
            Ok((key.to_string(), sum))
        })
        .collect::<Result<Vec<_>>>()?;
    SignedMultiset::new(entries, m)
}

/// Set complement `U ⊎ ¬A` for characteristic multisets.
pub fn classical_complement(a: &SignedMultiset<i64>, universe: &SignedMultiset<i64>) -> Result<SignedMultiset<i64>> {
    let m = MultiplicityConfig::integers();
    if let Some((k, v)) = universe.entries.iter().find(|(_, v)| **v != 1) {
        return Err(Error::InvalidMultiplicity(format!(
            "universe must have multiplicity 1 everywhere, `{k}` has {v}"
        )));
    }
    for (k, v) in &a.entries {
        if !(0..=1).contains(v) {
            return Err(Error::InvalidMultiplicity(format!(
                "`{k}` has multiplicity {v}, expected 0 or 1"
            )));
        }
        if *v == 1 && !universe.entries.contains_key(k) {
            return Err(Error::InvalidMultiplicity(format!("`{k}` is not in the universe")));
        }
    }
    multiset_union(universe, &multiset_neg(a, &m)?, &m)
}

/// Signed multisets as an order with negation, for statement evaluation.
#[derive(Debug, Clone)]
pub struct SignedMultisets<M: Multiplicities> {
    pub config: MultiplicityConfig<M>,
}

impl<M: Multiplicities> NegationOrder for SignedMultisets<M>
where
    M::Elem: fmt::Debug,
{
    type Elem = SignedMultiset<M::Elem>;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        multiset_leq(a, b, &self.config).unwrap_or(false)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        multiset_neg(a, &self.config).expect("negation stays inside M")
    }
}
