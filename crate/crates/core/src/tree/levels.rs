use super::nested::NestedPartition;
use super::view::{TreeView, View};
use crate::error::{validation, Error, Result};

/// A tree given level by level as a chain of surjections
/// `J_1 -> J_2 -> ... -> J_{k+1} = {*}`.
///
/// `parents[i][x]` is the image in level `i + 1` of element `x` of level `i`
/// (both 0-based). When `multiplicities` is present the presentation is read
/// as a multiplicity tree, otherwise as a leaf-count tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelPresentation {
    pub sizes: Vec<usize>,
    pub parents: Vec<Vec<usize>>,
    pub multiplicities: Option<Vec<u64>>,
}

impl LevelPresentation {
    pub fn slope(&self) -> usize {
        self.sizes.len().saturating_sub(1)
    }

    pub fn validate(&self) -> Result<()> {
        let levels = self.sizes.len();
        if levels == 0 || self.sizes.contains(&0) {
            return Err(validation("levels must be non-empty"));
        }
        if self.parents.len() != levels - 1 {
            return Err(validation(format!("{} parent maps given for {} levels", self.parents.len(), levels)));
        }
        for (i, map) in self.parents.iter().enumerate() {
            if map.len() != self.sizes[i] {
                return Err(validation(format!("parent map {} has wrong length", i + 1)));
            }
            let mut hit = vec![false; self.sizes[i + 1]];
            for &p in map {
                *hit.get_mut(p).ok_or_else(|| validation(format!("parent {p} out of range")))? = true;
            }
            if hit.contains(&false) {
                return Err(validation(format!("map J_{} -> J_{} is not surjective", i + 1, i + 2)));
            }
        }
        if self.sizes[levels - 1] != 1 {
            return Err(Error::Normalization("top level must have one element".into()));
        }
        if levels >= 2 && self.sizes[levels - 2] < 2 {
            return Err(Error::Normalization("level below the top must have at least two elements".into()));
        }
        if let Some(m) = &self.multiplicities {
            if m.len() != self.sizes[0] {
                return Err(validation("one multiplicity per leaf required"));
            }
            if m.contains(&0) {
                return Err(validation("multiplicities must be positive"));
            }
        }
        Ok(())
    }

    pub fn to_tree(&self) -> Result<TreeView> {
        self.validate()?;
        let (mut objects, view) = match &self.multiplicities {
            Some(m) => (m.iter().map(|&w| NestedPartition::Leaf(w)).collect::<Vec<_>>(), View::Multiplicity),
            None if self.sizes.len() == 1 => return TreeView::new(NestedPartition::Leaf(1), View::LeafCount),
            None => {
                let mut counts = vec![0u64; self.sizes[1]];
                for &p in &self.parents[0] {
                    counts[p] += 1;
                }
                (counts.into_iter().map(NestedPartition::Leaf).collect(), View::LeafCount)
            }
        };
        let first_map = if view == View::LeafCount { 1 } else { 0 };
        for (i, map) in self.parents.iter().enumerate().skip(first_map) {
            let mut groups: Vec<Vec<NestedPartition>> = vec![Vec::new(); self.sizes[i + 1]];
            for (obj, &p) in objects.into_iter().zip(map) {
                groups[p].push(obj);
            }
            objects = groups.into_iter().map(NestedPartition::Inner).collect();
        }
        debug_assert_eq!(objects.len(), 1);
        TreeView::new(objects.pop().expect("one root"), view)
    }

    pub fn from_tree(tree: &TreeView) -> LevelPresentation {
        let shape = tree.shape();
        match tree.view() {
            View::LeafCount if shape == &NestedPartition::Leaf(1) => {
                LevelPresentation { sizes: vec![1], parents: vec![], multiplicities: None }
            }
            View::LeafCount => {
                let mut pres = object_levels(shape);
                let mut leaves = Vec::new();
                for (i, w) in shape.leaf_weights().into_iter().enumerate() {
                    leaves.extend(std::iter::repeat_n(i, w as usize));
                }
                pres.sizes.insert(0, leaves.len());
                pres.parents.insert(0, leaves);
                pres
            }
            View::Multiplicity => {
                let mut pres = object_levels(shape);
                pres.multiplicities = Some(shape.leaf_weights());
                pres
            }
        }
    }
}

/// Levels made of the sub-objects of each depth, deepest first.
fn object_levels(shape: &NestedPartition) -> LevelPresentation {
    let depth = shape.depth();
    let mut sizes = Vec::with_capacity(depth);
    let mut parents = Vec::with_capacity(depth - 1);
    for d in 1..=depth {
        let level = shape.subobjects_at_depth(d);
        sizes.push(level.len());
        if d < depth {
            let mut map = Vec::with_capacity(level.len());
            for (j, up) in shape.subobjects_at_depth(d + 1).into_iter().enumerate() {
                map.extend(std::iter::repeat_n(j, up.children().len()));
            }
            parents.push(map);
        }
    }
    LevelPresentation { sizes, parents, multiplicities: None }
}

impl TreeView {
    pub fn from_level_maps(p: &LevelPresentation) -> Result<TreeView> {
        p.to_tree()
    }

    pub fn to_level_maps(&self) -> LevelPresentation {
        LevelPresentation::from_tree(self)
    }
}
