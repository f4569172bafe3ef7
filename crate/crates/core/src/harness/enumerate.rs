//! Exhaustive enumeration of finite class-𝒞 structures.
//!
//! Labeled partial orders on `{0..n-1}` are grown one element at a time:
//! the new last element is placed above a down-set `D` and below an up-set
//! `U` of the smaller poset, with `D ∩ U = ∅` and every element of `D` below
//! every element of `U`. Each labeled poset arises exactly once. Every
//! poset is crossed with every involution and filtered by the antitone law
//! and `Z ≠ ∅`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::structure::{admit, ClassCStructure, RawStructure};

pub const MAX_ENUMERATION_SIZE: usize = 6;

/// Rows of a relation on at most six points: bit `j` of `rows[i]` is set
/// when `i ⪯ j`.
pub type Rows = [u8; MAX_ENUMERATION_SIZE];

/// A class-𝒞 structure on `{0..n-1}` packed into fixed arrays.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompactStructure {
    pub n: usize,
    pub rows: Rows,
    pub neg: [u8; MAX_ENUMERATION_SIZE],
}

impl CompactStructure {
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    /// Encoding compared lexicographically for canonical forms: the order
    /// table row-major (first cell most significant), then the negation map.
    pub fn key(&self) -> (u64, u64) {
        let mut leq = 0u64;
        let mut neg = 0u64;
        for i in 0..self.n {
            for j in 0..self.n {
                leq = leq << 1 | self.leq(i, j) as u64;
            }
            neg = neg << 3 | self.neg[i] as u64;
        }
        (leq, neg)
    }

    /// Moves element `i` to position `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut rows = [0u8; MAX_ENUMERATION_SIZE];
        let mut neg = [0u8; MAX_ENUMERATION_SIZE];
        for i in 0..self.n {
            neg[perm[i]] = perm[self.neg[i] as usize] as u8;
            for j in 0..self.n {
                if self.leq(i, j) {
                    rows[perm[i]] |= 1 << perm[j];
                }
            }
        }
        Self { n: self.n, rows, neg }
    }

    /// Lexicographically minimal encoding over the relabelings that list
    /// elements by nondecreasing isomorphism-invariant signature. Two
    /// structures are isomorphic iff their canonical forms are equal.
    pub fn canonical(&self) -> Self {
        let n = self.n;
        let signature = |x: usize| {
            let up = self.rows[x].count_ones();
            let down = (0..n).filter(|&y| self.leq(y, x)).count() as u32;
            let fixed = self.neg[x] as usize == x;
            let zero = self.leq(self.neg[x] as usize, x);
            (down, up, fixed, zero)
        };
        let sigs: Vec<_> = (0..n).map(signature).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| sigs[x]);
        // blocks of equal signature may be permuted freely
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &x in &order {
            match blocks.last_mut() {
                Some(block) if sigs[block[0]] == sigs[x] => block.push(x),
                _ => blocks.push(vec![x]),
            }
        }
        let mut best: Option<Self> = None;
        let mut arrangement = Vec::with_capacity(n);
        search_arrangements(&mut blocks, 0, &mut arrangement, &mut |arr: &[usize]| {
            let mut perm = vec![0; n];
            for (position, &x) in arr.iter().enumerate() {
                perm[x] = position;
            }
            let candidate = self.relabel(&perm);
            if best.is_none_or(|b| candidate.key() < b.key()) {
                best = Some(candidate);
            }
        });
        best.expect("at least one arrangement")
    }

    pub fn to_raw(&self, name: &str) -> RawStructure {
        let n = self.n;
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| self.leq(i, j)).collect()).collect();
        let neg = (0..n).map(|i| self.neg[i] as usize).collect();
        RawStructure::new(name, labels, leq, neg).expect("compact structures are well formed")
    }

    pub fn to_structure(&self, name: &str) -> ClassCStructure {
        admit(self.to_raw(name)).expect("enumerated structures satisfy every axiom")
    }
}

fn search_arrangements(
    blocks: &mut [Vec<usize>],
    index: usize,
    prefix: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if index == blocks.len() {
        visit(prefix);
        return;
    }
    let len = blocks[index].len();
    permute(blocks, index, 0, len, prefix, visit);
}

/// Permutes one block in place, recursing into the next block at each leaf.
fn permute(
    blocks: &mut [Vec<usize>],
    index: usize,
    k: usize,
    len: usize,
    prefix: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if k == len {
        let base = prefix.len();
        prefix.extend_from_slice(&blocks[index]);
        search_arrangements(blocks, index + 1, prefix, visit);
        prefix.truncate(base);
        return;
    }
    for i in k..len {
        blocks[index].swap(k, i);
        permute(blocks, index, k + 1, len, prefix, visit);
        blocks[index].swap(k, i);
    }
}

/// Every labeled partial order on `{0..n-1}`, in a fixed order.
pub fn labeled_posets(n: usize) -> Vec<Rows> {
    assert!(n <= MAX_ENUMERATION_SIZE);
    let mut current: Vec<Rows> = vec![[0; MAX_ENUMERATION_SIZE]];
    for m in 0..n {
        // extend posets on {0..m-1} by the element m
        let mut next = Vec::new();
        for rows in &current {
            let below = |x: usize, y: usize| rows[x] >> y & 1 == 1;
            let subsets = 1u32 << m;
            let down_closed =
                |set: u32| (0..m).all(|d| set >> d & 1 == 0 || (0..m).all(|c| !below(c, d) || set >> c & 1 == 1));
            let up_closed =
                |set: u32| (0..m).all(|u| set >> u & 1 == 0 || (0..m).all(|w| !below(u, w) || set >> w & 1 == 1));
            let downs: Vec<u32> = (0..subsets).filter(|&s| down_closed(s)).collect();
            let ups: Vec<u32> = (0..subsets).filter(|&s| up_closed(s)).collect();
            for &down in &downs {
                for &up in &ups {
                    if down & up != 0 {
                        continue;
                    }
                    let compatible = (0..m)
                        .filter(|&d| down >> d & 1 == 1)
                        .all(|d| (0..m).filter(|&u| up >> u & 1 == 1).all(|u| below(d, u)));
                    if !compatible {
                        continue;
                    }
                    let mut extended = *rows;
                    for (d, row) in extended.iter_mut().enumerate().take(m) {
                        if down >> d & 1 == 1 {
                            *row |= 1 << m;
                        }
                    }
                    extended[m] = up as u8 | 1 << m;
                    next.push(extended);
                }
            }
        }
        current = next;
    }
    current
}

/// Every involution of `{0..n-1}`, in lexicographic order of images.
pub fn involutions(n: usize) -> Vec<[u8; MAX_ENUMERATION_SIZE]> {
    fn extend(
        map: &mut [u8; MAX_ENUMERATION_SIZE],
        assigned: &mut [bool],
        n: usize,
        out: &mut Vec<[u8; MAX_ENUMERATION_SIZE]>,
    ) {
        let Some(first) = (0..n).find(|&i| !assigned[i]) else {
            out.push(*map);
            return;
        };
        assigned[first] = true;
        map[first] = first as u8;
        extend(map, assigned, n, out);
        for partner in first + 1..n {
            if !assigned[partner] {
                assigned[partner] = true;
                map[first] = partner as u8;
                map[partner] = first as u8;
                extend(map, assigned, n, out);
                assigned[partner] = false;
            }
        }
        assigned[first] = false;
    }
    let mut out = Vec::new();
    extend(
        &mut [0; MAX_ENUMERATION_SIZE],
        &mut [false; MAX_ENUMERATION_SIZE],
        n,
        &mut out,
    );
    out.sort();
    out
}

fn antitone(rows: &Rows, neg: &[u8; MAX_ENUMERATION_SIZE], n: usize) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| {
            let forward = rows[a] >> b & 1 == 1;
            let reversed = rows[neg[b] as usize] >> neg[a] & 1 == 1;
            forward == reversed
        })
    })
}

fn has_zero(rows: &Rows, neg: &[u8; MAX_ENUMERATION_SIZE], n: usize) -> bool {
    (0..n).any(|x| rows[neg[x] as usize] >> x & 1 == 1)
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::Usage(format!(
            "enumeration is limited to {MAX_ENUMERATION_SIZE} elements, got {n}"
        )));
    }
    Ok(())
}

/// All labeled class-𝒞 structures on `{0..n-1}`, ordered by poset then
/// involution.
pub fn labeled_class_c(n: usize) -> Result<Vec<CompactStructure>> {
    check_size(n)?;
    let invs = involutions(n);
    Ok(labeled_posets(n)
        .par_iter()
        .flat_map_iter(|rows| {
            invs.iter()
                .filter(|neg| antitone(rows, neg, n) && has_zero(rows, neg, n))
                .map(|&neg| CompactStructure { n, rows: *rows, neg })
                .collect::<Vec<_>>()
        })
        .collect())
}

/// One canonical representative per isomorphism class, sorted by encoding.
pub fn isomorphism_classes(n: usize) -> Result<Vec<CompactStructure>> {
    let labeled = labeled_class_c(n)?;
    let canon: Vec<CompactStructure> = labeled.par_iter().map(CompactStructure::canonical).collect();
    let mut seen = BTreeSet::new();
    let mut reps: Vec<CompactStructure> = canon.into_iter().filter(|c| seen.insert(c.key())).collect();
    reps.sort_by_key(CompactStructure::key);
    Ok(reps)
}

/// Compact structures for one size as configured.
pub fn compact_structures(n: usize, up_to_isomorphism: bool) -> Result<Vec<CompactStructure>> {
    if up_to_isomorphism {
        isomorphism_classes(n)
    } else {
        labeled_class_c(n)
    }
}

/// Name used for the `index`-th enumerated structure of size `n`.
pub fn structure_name(n: usize, index: usize, up_to_isomorphism: bool) -> String {
    let kind = if up_to_isomorphism { "iso" } else { "lab" };
    format!("{kind}{n}#{index}")
}
