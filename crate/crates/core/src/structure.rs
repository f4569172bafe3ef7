//! Finite candidate structures `(X, ¬, ⪯)` and their admission to class 𝒞.
//!
//! A structure is in class 𝒞 when `¬` is an involution, `⪯` is a partial
//! order, `¬` reverses the order (`a ⪯ b ⇔ ¬b ⪯ ¬a`) and the zero set
//! `Z = {x : ¬x ⪯ x}` is nonempty. Elements are addressed by index and every
//! order query is a table lookup.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the witnesses recorded per failed axiom.
pub const MAX_WITNESSES: usize = 16;

/// Index of an element inside one structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// An order with a negation map, finite or not.
///
/// Statement evaluation and the claim checkers are written against this
/// trait so the same code runs over table-backed structures and over the
/// predicate-style instances (matrices, strong negations).
pub trait NegationOrder {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// `a ≺ b`, i.e. `a ⪯ b` and `a ≠ b`.
    fn lt(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a != b && self.leq(a, b)
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        self.leq(&self.neg(x), x)
    }
}

/// How the pairs in a structure file describe the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    /// Covering pairs; the order is their reflexive-transitive closure.
    #[default]
    Cover,
    /// The order verbatim, with reflexive pairs added.
    Full,
}

/// Builds an `n × n` relation table from element pairs.
///
/// Antisymmetry is not enforced; `validate_axioms` reports it.
pub fn close_order(pairs: &[(usize, usize)], kind: OrderKind, n: usize) -> Result<Vec<Vec<bool>>> {
    let mut table = vec![vec![false; n]; n];
    for &(a, b) in pairs {
        for index in [a, b] {
            if index >= n {
                return Err(Error::OutOfRange { index, size: n });
            }
        }
        table[a][b] = true;
    }
    for (i, row) in table.iter_mut().enumerate() {
        row[i] = true;
    }
    if kind == OrderKind::Cover {
        // Warshall
        for k in 0..n {
            let through = table[k].clone();
            for row in table.iter_mut().filter(|row| row[k]) {
                for (cell, &reach) in row.iter_mut().zip(&through) {
                    *cell |= reach;
                }
            }
        }
    }
    Ok(table)
}

/// A candidate `(X, ¬, ⪯)` before admission. Nothing beyond shape is assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawStructure {
    name: String,
    labels: Vec<String>,
    leq: Vec<bool>,
    neg: Vec<usize>,
}

impl RawStructure {
    pub fn new(name: impl Into<String>, labels: Vec<String>, leq: Vec<Vec<bool>>, neg: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::Structural(format!(
                "order table must be {n}×{n} to match the element list"
            )));
        }
        if neg.len() != n {
            return Err(Error::Structural(format!(
                "negation must be defined on all {n} elements, got {}",
                neg.len()
            )));
        }
        if let Some(&index) = neg.iter().find(|&&t| t >= n) {
            return Err(Error::OutOfRange { index, size: n });
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::Structural(format!("duplicate element label `{label}`")));
            }
        }
        Ok(Self {
            name: name.into(),
            labels,
            leq: leq.into_iter().flatten().collect(),
            neg,
        })
    }

    /// Convenience constructor from covering pairs given by label.
    pub fn from_cover(
        name: impl Into<String>,
        labels: &[&str],
        cover: &[(&str, &str)],
        neg: &[(&str, &str)],
    ) -> Result<Self> {
        let file = StructureFile {
            name: name.into(),
            elements: labels.iter().map(|s| s.to_string()).collect(),
            neg: neg.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            order: OrderSpec {
                kind: OrderKind::Cover,
                pairs: cover.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
            },
        };
        file.to_raw()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.labels[x.0]
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.size()).map(ElementId)
    }

    pub fn find(&self, label: &str) -> Result<ElementId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(ElementId)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.leq[a.0 * self.size() + b.0]
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        ElementId(self.neg[a.0])
    }

    /// Re-evaluates one axiom at a witness tuple; true when the tuple
    /// falsifies it.
    pub fn axiom_fails_at(&self, axiom: Axiom, witness: &[ElementId]) -> bool {
        match (axiom, witness) {
            (Axiom::Involution, &[x]) => self.neg(self.neg(x)) != x,
            (Axiom::Reflexive, &[x]) => !self.leq(x, x),
            (Axiom::Antisymmetric, &[a, b]) => a != b && self.leq(a, b) && self.leq(b, a),
            (Axiom::Transitive, &[a, b, c]) => self.leq(a, b) && self.leq(b, c) && !self.leq(a, c),
            (Axiom::Antitone, &[a, b]) => self.leq(a, b) != self.leq(self.neg(b), self.neg(a)),
            (Axiom::ZerosNonempty, &[x]) => !self.leq(self.neg(x), x),
            _ => false,
        }
    }

    /// Relabels the structure: element `i` becomes element `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.size();
        let mut check = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut check[p], true)) {
            return Err(Error::Usage("relabeling must be a permutation of the carrier".into()));
        }
        let mut labels = vec![String::new(); n];
        let mut leq = vec![vec![false; n]; n];
        let mut neg = vec![0; n];
        for i in 0..n {
            labels[perm[i]] = self.labels[i].clone();
            neg[perm[i]] = perm[self.neg[i]];
            for j in 0..n {
                leq[perm[i]][perm[j]] = self.leq[i * n + j];
            }
        }
        Self::new(self.name.clone(), labels, leq, neg)
    }

    /// Strict covering pairs `a ⋖ b` of the order (meaningful once admitted).
    pub fn cover_pairs(&self) -> Vec<(ElementId, ElementId)> {
        let strict = |a: ElementId, b: ElementId| a != b && self.leq(a, b);
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if strict(a, b) && !self.elements().any(|c| strict(a, c) && strict(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn to_file(&self) -> StructureFile {
        StructureFile {
            name: self.name.clone(),
            elements: self.labels.clone(),
            neg: self
                .elements()
                .map(|x| (self.label(x).to_string(), self.label(self.neg(x)).to_string()))
                .collect(),
            order: OrderSpec {
                kind: OrderKind::Cover,
                pairs: self
                    .cover_pairs()
                    .into_iter()
                    .map(|(a, b)| [self.label(a).to_string(), self.label(b).to_string()])
                    .collect(),
            },
        }
    }
}

/// The four class-𝒞 conditions, with the order axiom split into its parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axiom {
    Involution,
    Reflexive,
    Antisymmetric,
    Transitive,
    Antitone,
    ZerosNonempty,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::Involution,
        Axiom::Reflexive,
        Axiom::Antisymmetric,
        Axiom::Transitive,
        Axiom::Antitone,
        Axiom::ZerosNonempty,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Involution => "involution",
            Axiom::Reflexive => "reflexive",
            Axiom::Antisymmetric => "antisymmetric",
            Axiom::Transitive => "transitive",
            Axiom::Antitone => "antitone",
            Axiom::ZerosNonempty => "zeros_nonempty",
        }
    }
}

/// Outcome of checking every axiom. A failed axiom always carries at least
/// one falsifying tuple.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    labels: Vec<String>,
    failures: BTreeMap<Axiom, Vec<Vec<ElementId>>>,
}

impl AxiomReport {
    pub fn holds(&self, axiom: Axiom) -> bool {
        !self.failures.contains_key(&axiom)
    }

    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn involution_ok(&self) -> bool {
        self.holds(Axiom::Involution)
    }
    pub fn reflexive_ok(&self) -> bool {
        self.holds(Axiom::Reflexive)
    }
    pub fn antisymmetric_ok(&self) -> bool {
        self.holds(Axiom::Antisymmetric)
    }
    pub fn transitive_ok(&self) -> bool {
        self.holds(Axiom::Transitive)
    }
    pub fn antitone_ok(&self) -> bool {
        self.holds(Axiom::Antitone)
    }
    pub fn zeros_nonempty_ok(&self) -> bool {
        self.holds(Axiom::ZerosNonempty)
    }

    pub fn witnesses(&self, axiom: Axiom) -> &[Vec<ElementId>] {
        self.failures.get(&axiom).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn failed(&self) -> impl Iterator<Item = Axiom> + '_ {
        self.failures.keys().copied()
    }

    fn format_tuple(&self, tuple: &[ElementId]) -> String {
        let inner: Vec<&str> = tuple.iter().map(|x| self.labels[x.0].as_str()).collect();
        format!("({})", inner.join(","))
    }

    /// One line per axiom: `AXIOM <name> ok|FAIL [witnesses]`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for axiom in Axiom::ALL {
            let witnesses = self.witnesses(axiom);
            if witnesses.is_empty() {
                out.push_str(&format!("AXIOM {} ok\n", axiom.name()));
            } else {
                let shown: Vec<String> = witnesses.iter().map(|w| self.format_tuple(w)).collect();
                out.push_str(&format!("AXIOM {} FAIL witnesses={}\n", axiom.name(), shown.join(" ")));
            }
        }
        out
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed: Vec<String> = self
            .failures
            .iter()
            .map(|(axiom, w)| format!("{} (e.g. {})", axiom.name(), self.format_tuple(&w[0])))
            .collect();
        if failed.is_empty() {
            write!(f, "all axioms hold")
        } else {
            write!(f, "failed {}", failed.join(", "))
        }
    }
}

pub fn validate_axioms(s: &RawStructure) -> AxiomReport {
    let mut failures: BTreeMap<Axiom, Vec<Vec<ElementId>>> = BTreeMap::new();
    let mut record = |axiom: Axiom, tuple: Vec<ElementId>| {
        let list = failures.entry(axiom).or_default();
        if list.len() < MAX_WITNESSES {
            list.push(tuple);
        }
    };
    let elems: Vec<ElementId> = s.elements().collect();

    for &x in &elems {
        for axiom in [Axiom::Involution, Axiom::Reflexive] {
            if s.axiom_fails_at(axiom, &[x]) {
                record(axiom, vec![x]);
            }
        }
    }
    for &a in &elems {
        for &b in &elems {
            if a < b && s.axiom_fails_at(Axiom::Antisymmetric, &[a, b]) {
                record(Axiom::Antisymmetric, vec![a, b]);
            }
            if s.axiom_fails_at(Axiom::Antitone, &[a, b]) {
                record(Axiom::Antitone, vec![a, b]);
            }
            if s.leq(a, b) {
                for &c in &elems {
                    if s.axiom_fails_at(Axiom::Transitive, &[a, b, c]) {
                        record(Axiom::Transitive, vec![a, b, c]);
                    }
                }
            }
        }
    }
    if elems.iter().all(|&x| s.axiom_fails_at(Axiom::ZerosNonempty, &[x])) {
        // every element is a witness that ¬x ⪯ x fails
        for &x in &elems {
            record(Axiom::ZerosNonempty, vec![x]);
        }
        if elems.is_empty() {
            failures.entry(Axiom::ZerosNonempty).or_default().push(Vec::new());
        }
    }

    AxiomReport {
        labels: s.labels.clone(),
        failures,
    }
}

/// A structure that passed every axiom, together with its zero set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCStructure {
    raw: RawStructure,
    zeros: Vec<ElementId>,
}

pub fn admit(s: RawStructure) -> Result<ClassCStructure> {
    let report = validate_axioms(&s);
    if !report.all_hold() {
        return Err(Error::Rejected(Box::new(report)));
    }
    let zeros = s.elements().filter(|&x| s.leq(s.neg(x), x)).collect();
    Ok(ClassCStructure { raw: s, zeros })
}

pub fn zeros(s: &ClassCStructure) -> &[ElementId] {
    &s.zeros
}

impl TryFrom<RawStructure> for ClassCStructure {
    type Error = Error;

    fn try_from(s: RawStructure) -> Result<Self> {
        admit(s)
    }
}

impl ClassCStructure {
    pub fn raw(&self) -> &RawStructure {
        &self.raw
    }

    pub fn into_raw(self) -> RawStructure {
        self.raw
    }

    pub fn name(&self) -> &str {
        self.raw.name()
    }

    pub fn size(&self) -> usize {
        self.raw.size()
    }

    pub fn label(&self, x: ElementId) -> &str {
        self.raw.label(x)
    }

    pub fn labels(&self) -> &[String] {
        self.raw.labels()
    }

    pub fn find(&self, label: &str) -> Result<ElementId> {
        self.raw.find(label)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.raw.elements()
    }

    pub fn zeros(&self) -> &[ElementId] {
        &self.zeros
    }

    pub fn is_zero_element(&self, x: ElementId) -> bool {
        self.zeros.binary_search(&x).is_ok()
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.raw.leq(a, b)
    }

    #[inline]
    pub fn lt(&self, a: ElementId, b: ElementId) -> bool {
        a != b && self.raw.leq(a, b)
    }

    #[inline]
    pub fn neg(&self, a: ElementId) -> ElementId {
        self.raw.neg(a)
    }

    pub fn format_set(&self, set: &[ElementId]) -> String {
        let inner: Vec<&str> = set.iter().map(|&x| self.label(x)).collect();
        format!("{{{}}}", inner.join(", "))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.raw.name = name.into();
        self
    }
}

impl NegationOrder for ClassCStructure {
    type Elem = ElementId;

    fn leq(&self, a: &ElementId, b: &ElementId) -> bool {
        self.raw.leq(*a, *b)
    }

    fn neg(&self, a: &ElementId) -> ElementId {
        self.raw.neg(*a)
    }

    fn is_zero(&self, x: &ElementId) -> bool {
        self.is_zero_element(*x)
    }
}

/// Cartesian product with the componentwise order and negation.
///
/// The first part varies slowest; labels are `(x,y,...)`.
pub fn product(parts: &[ClassCStructure]) -> Result<ClassCStructure> {
    if parts.is_empty() {
        return Err(Error::Usage("product needs at least one structure".into()));
    }
    let sizes: Vec<usize> = parts.iter().map(ClassCStructure::size).collect();
    let total: usize = sizes.iter().product();
    let decode = |mut index: usize| -> Vec<ElementId> {
        let mut coords = vec![ElementId(0); sizes.len()];
        for k in (0..sizes.len()).rev() {
            coords[k] = ElementId(index % sizes[k]);
            index /= sizes[k];
        }
        coords
    };
    let encode =
        |coords: &[ElementId]| -> usize { coords.iter().zip(&sizes).fold(0, |acc, (c, &size)| acc * size + c.0) };
    let tuples: Vec<Vec<ElementId>> = (0..total).map(decode).collect();

    let labels = tuples
        .iter()
        .map(|t| {
            let inner: Vec<&str> = t.iter().zip(parts).map(|(&x, p)| p.label(x)).collect();
            format!("({})", inner.join(","))
        })
        .collect();
    let leq = tuples
        .iter()
        .map(|a| {
            tuples
                .iter()
                .map(|b| parts.iter().enumerate().all(|(k, p)| p.leq(a[k], b[k])))
                .collect()
        })
        .collect();
    let neg = tuples
        .iter()
        .map(|t| {
            let image: Vec<ElementId> = t.iter().zip(parts).map(|(&x, p)| p.neg(x)).collect();
            encode(&image)
        })
        .collect();
    let names: Vec<&str> = parts.iter().map(ClassCStructure::name).collect();
    admit(RawStructure::new(names.join("×"), labels, leq, neg)?)
}

/// The order half of a structure file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSpec {
    #[serde(default)]
    pub kind: OrderKind,
    pub pairs: Vec<[String; 2]>,
}

/// On-disk JSON form of a structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFile {
    pub name: String,
    pub elements: Vec<String>,
    pub neg: BTreeMap<String, String>,
    pub order: OrderSpec,
}

impl StructureFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("structure files always serialize")
    }

    pub fn to_raw(&self) -> Result<RawStructure> {
        let index: HashMap<&str, usize> = self.elements.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let lookup = |label: &str| {
            index
                .get(label)
                .copied()
                .ok_or_else(|| Error::UnknownElement(label.to_string()))
        };
        for key in self.neg.keys() {
            lookup(key)?;
        }
        let neg = self
            .elements
            .iter()
            .map(|l| match self.neg.get(l) {
                Some(target) => lookup(target),
                None => Err(Error::Structural(format!("negation is not defined on `{l}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let pairs = self
            .order
            .pairs
            .iter()
            .map(|[a, b]| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let leq = close_order(&pairs, self.order.kind, self.elements.len())?;
        RawStructure::new(self.name.clone(), self.elements.clone(), leq, neg)
    }
}

/// Reads and admits a structure file.
pub fn load_structure(path: impl AsRef<Path>) -> Result<ClassCStructure> {
    admit(StructureFile::load(path)?.to_raw()?)
}
