#![allow(dead_code)]

use fission::tree::NestedPartition;
use proptest::prelude::*;
use proptest::sample::Index;

/// Uniform-depth nested partitions in arbitrary (non-canonical) child order.
pub fn raw_shape(depth: usize) -> BoxedStrategy<NestedPartition> {
    if depth == 1 {
        return (1u64..=4).prop_map(NestedPartition::Leaf).boxed();
    }
    let width = if depth <= 2 { 4 } else { 3 };
    prop::collection::vec(raw_shape(depth - 1), 1..=width).prop_map(NestedPartition::Inner).boxed()
}

/// Shapes of depth at most `max_depth` and weight at most `max_rank`.
pub fn shape_up_to(max_depth: usize, max_rank: u64) -> impl Strategy<Value = NestedPartition> {
    (1..=max_depth).prop_flat_map(raw_shape).prop_filter("rank bound", move |s| s.weight() <= max_rank)
}

/// Fisher-Yates driven by proptest indices; `picks` is reused cyclically.
pub fn permutation(n: usize, picks: &[Index]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = if picks.is_empty() { 0 } else { picks[i % picks.len()].index(i + 1) };
        p.swap(i, j);
    }
    p
}

/// Reorders children at every node.
pub fn shuffle(t: &NestedPartition, picks: &[Index]) -> NestedPartition {
    match t {
        NestedPartition::Leaf(_) => t.clone(),
        NestedPartition::Inner(c) => {
            let kids: Vec<NestedPartition> =
                c.iter().enumerate().map(|(i, x)| shuffle(x, &picks[i.min(picks.len())..])).collect();
            let perm = permutation(kids.len(), picks);
            let mut out = kids.clone();
            for (i, k) in kids.into_iter().enumerate() {
                out[perm[i]] = k;
            }
            NestedPartition::Inner(out)
        }
    }
}

pub fn picks() -> impl Strategy<Value = Vec<Index>> {
    prop::collection::vec(any::<Index>(), 1..16)
}
