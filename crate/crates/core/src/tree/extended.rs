use std::fmt;

use super::nested::NestedPartition;
use super::view::{TreeView, View};
use crate::error::{precondition, validation, Result};

/// A tame fission tree: a multiset of non-empty partitions (one per
/// residual eigenspace, parts are Jordan block sizes).
///
/// Stored as a canonical depth-3 shape, lifted if necessary, so a single
/// eigenspace `[2,1]` is held as `[[2,1]]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TameTree {
    shape: NestedPartition,
}

impl TameTree {
    pub fn new(shape: NestedPartition) -> Result<Self> {
        let shape = shape.canonicalize()?;
        if shape.depth() > 3 {
            return Err(validation("a tame tree is a multiset of partitions (depth at most 3)"));
        }
        Ok(TameTree { shape: shape.lift(3) })
    }

    pub fn shape(&self) -> &NestedPartition {
        &self.shape
    }

    pub fn rank(&self) -> u64 {
        self.shape.weight()
    }

    /// Jordan block sizes grouped by eigenspace.
    pub fn eigenspaces(&self) -> Vec<Vec<u64>> {
        self.shape.children().iter().map(|p| p.leaf_weights()).collect()
    }

    pub fn is_semisimple(&self) -> bool {
        self.shape.leaf_weights().iter().all(|&w| w == 1)
    }
}

impl fmt::Display for TameTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.shape.fmt(f)
    }
}

/// A multiplicity tree with a tame tree attached to each leaf.
///
/// `tame[i]` belongs to the i-th leaf of `base` in depth-first order.
/// Two extended trees are isomorphic iff their collapsed shapes agree; the
/// values produced by [`ExtendedTree::expand`] are normalized so that this
/// coincides with structural equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedTree {
    base: TreeView,
    tame: Vec<TameTree>,
}

impl ExtendedTree {
    pub fn new(base: TreeView, tame: Vec<TameTree>) -> Result<Self> {
        if base.view() != View::Multiplicity {
            return Err(precondition("the base of an extended tree is a multiplicity tree"));
        }
        let mults = base.shape().leaf_weights();
        if mults.len() != tame.len() {
            return Err(validation("one tame tree per leaf required"));
        }
        for (i, (m, t)) in mults.iter().zip(&tame).enumerate() {
            if *m != t.rank() {
                return Err(validation(format!(
                    "leaf {i} has multiplicity {m} but its tame tree has rank {}",
                    t.rank()
                )));
            }
        }
        Ok(ExtendedTree { base, tame })
    }

    pub fn base(&self) -> &TreeView {
        &self.base
    }

    pub fn tame_parts(&self) -> &[TameTree] {
        &self.tame
    }

    pub fn slope(&self) -> usize {
        self.base.slope()
    }

    pub fn rank(&self) -> u64 {
        self.base.rank()
    }

    pub fn is_semisimple(&self) -> bool {
        self.tame.iter().all(TameTree::is_semisimple)
    }

    /// Shifts heights up by two: each leaf is replaced by its tame tree.
    pub fn collapse(&self) -> TreeView {
        let mut parts = self.tame.iter();
        let shape = self.base.shape().map_at_depth(1, &mut |_| parts.next().expect("validated").shape.clone());
        TreeView::new(shape, View::Multiplicity).expect("substituting tame trees keeps the shape well formed")
    }

    /// Inverse of [`collapse`](ExtendedTree::collapse): the bottom two levels
    /// of the multiplicity tree become tame trees.
    pub fn expand(tree: &TreeView) -> Result<ExtendedTree> {
        if tree.view() != View::Multiplicity {
            return Err(precondition("expected a multiplicity tree"));
        }
        let lifted = tree.shape().lift(3);
        let (base, tame) = split_bottom(&lifted);
        let base = TreeView::new(base, View::Multiplicity)?;
        debug_assert!(base.shape() == &base.shape().canonicalize()?);
        ExtendedTree::new(base, tame)
    }
}

/// Splits a shape of depth >= 3 into its top (with depth-3 sub-objects
/// replaced by their weight) and the list of those sub-objects, ordered so
/// the top is canonical and ties keep the canonical order of the parts.
fn split_bottom(shape: &NestedPartition) -> (NestedPartition, Vec<TameTree>) {
    if shape.depth() == 3 {
        let tame = TameTree { shape: shape.clone() };
        return (NestedPartition::Leaf(shape.weight()), vec![tame]);
    }
    let mut kids: Vec<(NestedPartition, Vec<TameTree>)> = shape.children().iter().map(split_bottom).collect();
    // stable: equal tops keep the descending order of the original children
    kids.sort_by(|a, b| b.0.cmp(&a.0));
    let mut tame = Vec::new();
    let mut tops = Vec::with_capacity(kids.len());
    for (top, parts) in kids {
        tops.push(top);
        tame.extend(parts);
    }
    (NestedPartition::Inner(tops), tame)
}
