use std::fmt;

use super::nested::NestedPartition;
use crate::error::{precondition, Result};

/// How the integers at the bottom of a shape are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum View {
    /// `Leaf(m)` is a node of height 2 carrying `m` leaves of multiplicity one.
    LeafCount,
    /// `Leaf(m)` is a single leaf of multiplicity `m`.
    Multiplicity,
}

/// A fission tree: a pruned canonical shape plus its interpretation.
///
/// The same shape is a leaf-count tree of slope `s + 1` and a multiplicity
/// tree of slope `s` whenever `s >= 1`; this is the height shift between
/// the two families.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeView {
    shape: NestedPartition,
    view: View,
}

impl TreeView {
    /// Canonicalizes and prunes `shape`.
    pub fn new(shape: NestedPartition, view: View) -> Result<Self> {
        let shape = shape.canonicalize()?.prune();
        Ok(TreeView { shape, view })
    }

    pub fn leaf_count_tree(shape: NestedPartition) -> Result<Self> {
        Self::new(shape, View::LeafCount)
    }

    pub fn multiplicity_tree(shape: NestedPartition) -> Result<Self> {
        Self::new(shape, View::Multiplicity)
    }

    pub fn shape(&self) -> &NestedPartition {
        &self.shape
    }

    pub fn view(&self) -> View {
        self.view
    }

    pub fn slope(&self) -> usize {
        slope_of(&self.shape, self.view)
    }

    /// Sum of the leaf multiplicities; the number of leaves for leaf-count trees.
    pub fn rank(&self) -> u64 {
        self.shape.weight()
    }

    pub fn leaf_count(&self) -> u64 {
        match self.view {
            View::LeafCount => self.shape.weight(),
            View::Multiplicity => self.shape.leaf_objects() as u64,
        }
    }

    /// Number of nodes with at least two children.
    pub fn branch_nodes(&self) -> usize {
        fn count(t: &NestedPartition, view: View) -> usize {
            match t {
                NestedPartition::Leaf(m) => usize::from(view == View::LeafCount && *m >= 2),
                NestedPartition::Inner(c) => {
                    usize::from(c.len() >= 2) + c.iter().map(|x| count(x, view)).sum::<usize>()
                }
            }
        }
        count(&self.shape, self.view)
    }

    /// True iff the tree has exactly one branch node. The one-leaf tree has
    /// none and is therefore not generic.
    pub fn is_generic(&self) -> bool {
        self.branch_nodes() == 1
    }

    /// Deletes the root and returns the resulting forest, each member pruned.
    pub fn split_at_root(&self) -> Result<Vec<TreeView>> {
        if self.slope() == 0 {
            return Err(precondition("cannot split a slope-0 tree"));
        }
        Ok(match (&self.shape, self.view) {
            (NestedPartition::Leaf(m), View::LeafCount) => {
                vec![TreeView { shape: NestedPartition::Leaf(1), view: View::LeafCount }; *m as usize]
            }
            (shape, view) => shape.children().iter().map(|c| TreeView { shape: c.prune(), view }).collect(),
        })
    }

    /// Glues a forest of trees of slope `< k` under a common root, giving a
    /// tree of slope `<= k`. A one-tree forest is pruned back down.
    pub fn glue_forest(forest: &[TreeView], k: usize) -> Result<TreeView> {
        let first = forest.first().ok_or_else(|| precondition("empty forest"))?;
        let view = first.view;
        if k == 0 {
            return Err(precondition("gluing requires k >= 1"));
        }
        for t in forest {
            if t.view != view {
                return Err(precondition("forest mixes interpretations"));
            }
            if t.slope() >= k {
                return Err(precondition(format!("member of slope {} not below {k}", t.slope())));
            }
        }
        let shape = match view {
            View::LeafCount if k == 1 => NestedPartition::Leaf(forest.len() as u64),
            View::LeafCount => NestedPartition::Inner(forest.iter().map(|t| t.shape.lift(k - 1)).collect()),
            View::Multiplicity => NestedPartition::Inner(forest.iter().map(|t| t.shape.lift(k)).collect()),
        };
        TreeView::new(shape, view)
    }

    /// Multiplicity tree of slope `k >= 1` to the leaf-count tree of slope
    /// `k + 1` with the same rank: each leaf of multiplicity `m` becomes a
    /// node with `m` leaves below it.
    pub fn shift_mult_to_unit(&self) -> Result<TreeView> {
        if self.view != View::Multiplicity {
            return Err(precondition("expected a multiplicity tree"));
        }
        if self.slope() == 0 {
            return Err(precondition("slope-0 multiplicity trees have no partner"));
        }
        Ok(TreeView { shape: self.shape.clone(), view: View::LeafCount })
    }

    /// Inverse of [`shift_mult_to_unit`]; requires slope at least 2.
    ///
    /// [`shift_mult_to_unit`]: TreeView::shift_mult_to_unit
    pub fn shift_unit_to_mult(&self) -> Result<TreeView> {
        if self.view != View::LeafCount {
            return Err(precondition("expected a leaf-count tree"));
        }
        if self.slope() < 2 {
            return Err(precondition("leaf-count tree must have slope >= 2"));
        }
        Ok(TreeView { shape: self.shape.clone(), view: View::Multiplicity })
    }
}

/// Slope of any well-formed shape (pruned or not).
pub fn slope_of(shape: &NestedPartition, view: View) -> usize {
    match shape {
        NestedPartition::Leaf(m) => usize::from(view == View::LeafCount && *m >= 2),
        NestedPartition::Inner(c) if c.len() == 1 => slope_of(&c[0], view),
        NestedPartition::Inner(_) => match view {
            View::LeafCount => shape.depth(),
            View::Multiplicity => shape.depth() - 1,
        },
    }
}

impl fmt::Display for TreeView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.shape.fmt(f)
    }
}
