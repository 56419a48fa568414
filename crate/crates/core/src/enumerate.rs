//! Brute-force generation of trees and graphs up to isomorphism.
//!
//! Objects of depth `d` are multisets of depth `d - 1` objects; choosing
//! members in non-increasing order yields each multiset once, already in
//! canonical child order. Nothing here uses the counting formulas except
//! the size guard.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::counting;
use crate::error::{precondition, Error, Result};
use crate::graph::{self, canonical_form, CanonicalGraph, Multigraph};
use crate::tree::{ExtendedTree, NestedPartition, TameTree, TreeView, View, MAX_DEPTH};

/// Default refusal threshold on the predicted number of generated objects.
pub const DEFAULT_LIMIT: u64 = 10_000_000;

/// All supernova graphs of a given size and edge multiplicity, with the
/// number of equipped fission graphs that produced them.
#[derive(Clone, Debug)]
pub struct SupernovaEnumeration {
    pub graphs: Vec<Multigraph>,
    pub equipped: usize,
}

#[derive(Clone, Debug)]
pub struct Enumerator {
    limit: u64,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator { limit: DEFAULT_LIMIT }
    }
}

impl Enumerator {
    pub fn with_limit(limit: u64) -> Self {
        Enumerator { limit }
    }

    /// Refuses requests whose size is obviously out of reach before any
    /// counting is done: `Φ(k, n) >= p(n)` for `k >= 2`, and
    /// `p(500) > u64::MAX`, so no limit admits them.
    fn precheck(&self, depth: usize, n: u64) -> Result<()> {
        if depth > MAX_DEPTH {
            return Err(Error::Resource(format!("depth {depth} exceeds {MAX_DEPTH}")));
        }
        if depth >= 2 && n > 500 {
            return Err(Error::Resource(format!("rank {n} is far beyond any enumeration limit")));
        }
        Ok(())
    }

    fn guard(&self, predicted: BigInt) -> Result<()> {
        if predicted > BigInt::from(self.limit) {
            return Err(Error::Resource(format!("refusing to enumerate {predicted} objects (limit {})", self.limit)));
        }
        Ok(())
    }

    /// Every canonical depth-`k` object of weight `n`, in descending order.
    pub fn trees_up_to_slope(&self, k: usize, n: u64) -> Result<Vec<NestedPartition>> {
        if k == 0 || n == 0 {
            return Err(precondition("need k >= 1 and n >= 1"));
        }
        self.precheck(k, n)?;
        if k == 1 {
            return Ok(vec![NestedPartition::Leaf(n)]);
        }
        self.guard(counting::cumulative_phi(k, n as usize))?;
        Ok(ObjectTable::new(k, n).take(k, n))
    }

    /// Trees of slope exactly `k` and rank `n` in the given interpretation.
    pub fn exact(&self, k: usize, n: u64, view: View) -> Result<Vec<TreeView>> {
        let depth = match view {
            View::LeafCount => k.max(1),
            View::Multiplicity => k + 1,
        };
        let mut out = Vec::new();
        for shape in self.trees_up_to_slope(depth, n)? {
            let t = TreeView::new(shape, view)?;
            if t.slope() == k {
                out.push(t);
            }
        }
        Ok(out)
    }

    /// Tame trees of rank `n`: multisets of partitions.
    pub fn tame(&self, n: u64) -> Result<Vec<TameTree>> {
        self.trees_up_to_slope(3, n)?.into_iter().map(TameTree::new).collect()
    }

    /// Extended trees of slope `k` and rank `n`, one per isomorphism class.
    pub fn extended(&self, k: usize, n: u64) -> Result<Vec<ExtendedTree>> {
        self.precheck(k + 3, n)?;
        self.guard(counting::ext_count(k, n as usize))?;
        let mut tame_by_rank: BTreeMap<u64, Vec<TameTree>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for base in self.exact(k, n, View::Multiplicity)? {
            let ranks = base.shape().leaf_weights();
            for &r in &ranks {
                if let std::collections::btree_map::Entry::Vacant(slot) = tame_by_rank.entry(r) {
                    slot.insert(self.tame(r)?);
                }
            }
            let choices: Vec<&[TameTree]> = ranks.iter().map(|r| tame_by_rank[r].as_slice()).collect();
            for pick in cartesian(&choices) {
                let e = ExtendedTree::new(base.clone(), pick)?;
                if seen.insert(e.collapse()) {
                    out.push(e);
                }
            }
        }
        Ok(out)
    }

    /// Supernova graphs with `n` nodes whose core has maximal edge
    /// multiplicity exactly `k`, deduplicated up to isomorphism.
    pub fn supernova(&self, k: usize, n: u64) -> Result<SupernovaEnumeration> {
        if k == 0 || n < 2 {
            return Err(precondition("need k >= 1 and n >= 2"));
        }
        let mut seen: BTreeSet<CanonicalGraph> = BTreeSet::new();
        let mut equipped = 0;
        for t in self.exact(k + 1, n, View::Multiplicity)? {
            let g = graph::equipped_fission_graph(&t)?;
            equipped += 1;
            seen.insert(canonical_form(&graph::supernova_of_equipped(&g)?)?);
        }
        Ok(SupernovaEnumeration { graphs: seen.into_iter().map(CanonicalGraph::into_graph).collect(), equipped })
    }
}

pub fn trees_up_to_slope(k: usize, n: u64) -> Result<Vec<NestedPartition>> {
    Enumerator::default().trees_up_to_slope(k, n)
}

pub fn exact(k: usize, n: u64, view: View) -> Result<Vec<TreeView>> {
    Enumerator::default().exact(k, n, view)
}

pub fn tame(n: u64) -> Result<Vec<TameTree>> {
    Enumerator::default().tame(n)
}

pub fn extended(k: usize, n: u64) -> Result<Vec<ExtendedTree>> {
    Enumerator::default().extended(k, n)
}

pub fn supernova(k: usize, n: u64) -> Result<SupernovaEnumeration> {
    Enumerator::default().supernova(k, n)
}

/// `objects[d][w]`: depth-`d` objects of weight `w`, descending.
struct ObjectTable {
    objects: Vec<Vec<Vec<NestedPartition>>>,
}

impl ObjectTable {
    fn new(depth: usize, n: u64) -> Self {
        let n = n as usize;
        let mut objects = vec![Vec::new(); depth + 1];
        objects[1] = (0..=n).map(|w| if w == 0 { Vec::new() } else { vec![NestedPartition::Leaf(w as u64)] }).collect();
        for d in 2..=depth {
            let mut items: Vec<(NestedPartition, u64)> =
                objects[d - 1].iter().flatten().map(|o: &NestedPartition| (o.clone(), o.weight())).collect();
            items.sort_by(|a, b| b.0.cmp(&a.0));
            let mut row = vec![Vec::new(); n + 1];
            for (w, slot) in row.iter_mut().enumerate().skip(1) {
                let mut level: Vec<NestedPartition> =
                    weighted_multisets(&items, w as u64).into_iter().map(NestedPartition::Inner).collect();
                level.sort_by(|a, b| b.cmp(a));
                *slot = level;
            }
            objects[d] = row;
        }
        ObjectTable { objects }
    }

    fn take(mut self, depth: usize, n: u64) -> Vec<NestedPartition> {
        std::mem::take(&mut self.objects[depth][n as usize])
    }
}

/// All multisets of `items` (listed without repetition) whose weights sum
/// to `target`, each as a sequence following the order of `items`.
pub fn weighted_multisets<T: Clone>(items: &[(T, u64)], target: u64) -> Vec<Vec<T>> {
    fn go<T: Clone>(items: &[(T, u64)], start: usize, left: u64, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            let (item, w) = &items[i];
            if *w == 0 || *w > left {
                continue;
            }
            cur.push(item.clone());
            go(items, i, left - w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if target > 0 {
        go(items, 0, target, &mut Vec::new(), &mut out);
    }
    out
}

/// Multisets of size `n` drawn from `k` types, as non-decreasing index lists.
pub fn multisets(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            go(k, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, 0, n, &mut Vec::new(), &mut out);
    out
}

fn cartesian<T: Clone>(choices: &[&[T]]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for options in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect();
    }
    out
}
