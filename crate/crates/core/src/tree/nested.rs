use std::fmt;

use crate::error::{structure, Result};

/// Nesting depth accepted by validation and the parsers. Deeper inputs are
/// rejected rather than risking the recursion limit.
pub const MAX_DEPTH: usize = 256;

/// A recursive multiset with positive integer leaves.
///
/// A `Leaf(w)` has depth 1; an `Inner` node has depth one more than its
/// children, which must all share the same depth. In canonical form the
/// children of every `Inner` node are sorted in descending order, so two
/// canonical values are equal exactly when they describe the same multiset.
///
/// The derived `Ord` is the canonical order: leaves compare by weight and
/// inner nodes compare their (already sorted) child lists lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NestedPartition {
    Leaf(u64),
    Inner(Vec<NestedPartition>),
}

impl NestedPartition {
    pub fn leaf(weight: u64) -> Self {
        NestedPartition::Leaf(weight)
    }

    /// Builds an inner node and canonicalizes it.
    pub fn inner(children: Vec<NestedPartition>) -> Result<Self> {
        NestedPartition::Inner(children).canonicalize()
    }

    /// A depth-2 object from a list of parts, i.e. an integer partition.
    pub fn partition(parts: &[u64]) -> Result<Self> {
        Self::inner(parts.iter().map(|&p| NestedPartition::Leaf(p)).collect())
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, NestedPartition::Leaf(_))
    }

    pub fn children(&self) -> &[NestedPartition] {
        match self {
            NestedPartition::Leaf(_) => &[],
            NestedPartition::Inner(c) => c,
        }
    }

    /// Depth of a well-formed value (reads the first child only).
    pub fn depth(&self) -> usize {
        let mut d = 1;
        let mut cur = self;
        while let NestedPartition::Inner(c) = cur {
            d += 1;
            cur = &c[0];
        }
        d
    }

    /// Sum of all leaf weights.
    pub fn weight(&self) -> u64 {
        match self {
            NestedPartition::Leaf(w) => *w,
            NestedPartition::Inner(c) => c.iter().map(|x| x.weight()).sum(),
        }
    }

    /// Checks uniform depth, non-empty inner nodes, positive leaves and that
    /// the total weight fits in a `u64`. Returns `(depth, weight)`.
    pub fn validate(&self) -> Result<(usize, u64)> {
        self.validate_at(0)
    }

    fn validate_at(&self, level: usize) -> Result<(usize, u64)> {
        if level >= MAX_DEPTH {
            return Err(structure(format!("nesting deeper than {MAX_DEPTH}")));
        }
        match self {
            NestedPartition::Leaf(0) => Err(structure("leaf weight 0")),
            NestedPartition::Leaf(w) => Ok((1, *w)),
            NestedPartition::Inner(c) if c.is_empty() => Err(structure("empty multiset")),
            NestedPartition::Inner(c) => {
                let mut depth = None;
                let mut total: u64 = 0;
                for child in c {
                    let (d, w) = child.validate_at(level + 1)?;
                    match depth {
                        None => depth = Some(d),
                        Some(prev) if prev != d => {
                            return Err(structure(format!("children of unequal depth ({prev} and {d})")))
                        }
                        _ => {}
                    }
                    total = total.checked_add(w).ok_or_else(|| structure("total weight overflows u64"))?;
                }
                Ok((depth.unwrap_or(0) + 1, total))
            }
        }
    }

    /// Returns the canonical representative: every child list sorted in
    /// descending canonical order. Idempotent.
    pub fn canonicalize(&self) -> Result<Self> {
        self.validate()?;
        Ok(self.sorted())
    }

    fn sorted(&self) -> Self {
        match self {
            NestedPartition::Leaf(w) => NestedPartition::Leaf(*w),
            NestedPartition::Inner(c) => {
                let mut kids: Vec<_> = c.iter().map(|x| x.sorted()).collect();
                kids.sort_unstable_by(|a, b| b.cmp(a));
                NestedPartition::Inner(kids)
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            NestedPartition::Leaf(_) => true,
            NestedPartition::Inner(c) => c.windows(2).all(|w| w[0] >= w[1]) && c.iter().all(|x| x.is_canonical()),
        }
    }

    /// Wraps the value in singleton multisets until it has depth `depth`.
    /// Values already at or above that depth are returned unchanged.
    pub fn lift(&self, depth: usize) -> Self {
        let mut out = self.clone();
        let mut d = self.depth();
        while d < depth {
            out = NestedPartition::Inner(vec![out]);
            d += 1;
        }
        out
    }

    /// Strips singleton wrappers at the top (the inverse of [`lift`]).
    ///
    /// [`lift`]: NestedPartition::lift
    pub fn prune(&self) -> Self {
        let mut cur = self;
        while let NestedPartition::Inner(c) = cur {
            if c.len() != 1 {
                break;
            }
            cur = &c[0];
        }
        cur.clone()
    }

    /// All depth-1 weights in depth-first order.
    pub fn leaf_weights(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u64>) {
        match self {
            NestedPartition::Leaf(w) => out.push(*w),
            NestedPartition::Inner(c) => c.iter().for_each(|x| x.collect_leaves(out)),
        }
    }

    /// Number of depth-1 objects.
    pub fn leaf_objects(&self) -> usize {
        match self {
            NestedPartition::Leaf(_) => 1,
            NestedPartition::Inner(c) => c.iter().map(|x| x.leaf_objects()).sum(),
        }
    }

    /// Replaces every `Leaf(m)` by the partition `[1, ..., 1]` of length m,
    /// raising the depth by one. Turns a leaf-count shape into an explicit
    /// one in which every leaf is its own depth-1 object.
    pub fn explode(&self) -> Self {
        match self {
            NestedPartition::Leaf(w) => NestedPartition::Inner(vec![NestedPartition::Leaf(1); *w as usize]),
            NestedPartition::Inner(c) => NestedPartition::Inner(c.iter().map(|x| x.explode()).collect()),
        }
    }

    /// All sub-objects of the given depth in depth-first order.
    pub fn subobjects_at_depth(&self, depth: usize) -> Vec<&NestedPartition> {
        let mut out = Vec::new();
        self.collect_at(self.depth(), depth, &mut out);
        out
    }

    fn collect_at<'a>(&'a self, own: usize, depth: usize, out: &mut Vec<&'a NestedPartition>) {
        if own == depth {
            out.push(self);
        } else if own > depth {
            for c in self.children() {
                c.collect_at(own - 1, depth, out);
            }
        }
    }

    /// Replaces each sub-object of depth `depth` by `f(sub)`. The replacement
    /// must have a uniform depth across all calls.
    pub(crate) fn map_at_depth(&self, depth: usize, f: &mut impl FnMut(&NestedPartition) -> NestedPartition) -> Self {
        self.map_rec(self.depth(), depth, f)
    }

    fn map_rec(&self, own: usize, depth: usize, f: &mut impl FnMut(&NestedPartition) -> NestedPartition) -> Self {
        if own == depth {
            return f(self);
        }
        NestedPartition::Inner(self.children().iter().map(|c| c.map_rec(own - 1, depth, f)).collect())
    }

    /// The compact bracket notation used in print for single-digit weights,
    /// e.g. `[[2][11]]`. Returns `None` if some weight has more than one digit.
    pub fn to_compact_string(&self) -> Option<String> {
        let mut s = String::new();
        self.write_compact(&mut s).then_some(s)
    }

    fn write_compact(&self, s: &mut String) -> bool {
        match self {
            NestedPartition::Leaf(w) if *w < 10 => {
                s.push(char::from(b'0' + *w as u8));
                true
            }
            NestedPartition::Leaf(_) => false,
            NestedPartition::Inner(c) => {
                s.push('[');
                for x in c {
                    if !x.write_compact(s) {
                        return false;
                    }
                }
                s.push(']');
                true
            }
        }
    }
}

/// Writes the bracket grammar `INT | '[' obj (',' obj)* ']'`.
impl fmt::Display for NestedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NestedPartition::Leaf(w) => write!(f, "{w}"),
            NestedPartition::Inner(c) => {
                f.write_str("[")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
        }
    }
}
