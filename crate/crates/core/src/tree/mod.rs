//! Tree data model: nested partitions, their two readings as fission trees,
//! level presentations and extended trees.

mod extended;
mod levels;
mod nested;
mod text;
mod view;

pub use extended::{ExtendedTree, TameTree};
pub use levels::LevelPresentation;
pub use nested::{NestedPartition, MAX_DEPTH};
pub use text::{parse_tree, shape_from_json, shape_to_json, tree_from_json, tree_to_json};
pub use view::{slope_of, TreeView, View};
