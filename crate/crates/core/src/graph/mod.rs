//! Multigraphs built from fission trees.
//!
//! A fission graph has the leaves of a slope >= 2 tree as vertices, with
//! `h_ij - 2` edges between leaves whose nearest common ancestor sits at
//! height `h_ij`. Adding one to every multiplicity gives the Stokes quiver.
//! Gluing a path ("leg") onto each vertex of a fission graph gives a
//! supernova graph.
//!
//! Degrees always count multiplicity.

mod canon;
mod export;

pub use canon::{canonical_form, canonical_form_bounded, CanonicalGraph, DEFAULT_CANON_BOUND};
pub use export::{graph_from_json, graph_to_json, to_dot};

use crate::error::{precondition, validation, Error, Result};
use crate::tree::{NestedPartition, TreeView, View};

/// Largest graph any constructor here will build.
pub const MAX_GRAPH_VERTICES: usize = 4096;

/// Per-vertex data carried by a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decoration {
    #[default]
    None,
    /// Dimension vector of an equipped graph (entries >= 1).
    Dims(Vec<u64>),
    /// Leg lengths of a supernova graph in core-plus-legs form.
    Legs(Vec<u64>),
}

/// Loop-free undirected multigraph stored as a symmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
    decoration: Decoration,
}

impl Multigraph {
    pub fn empty(n: usize) -> Self {
        Multigraph { n, mult: vec![0; n * n], decoration: Decoration::None }
    }

    /// Builds a graph from `(i, j, m)` triples; repeated pairs accumulate.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut g = Multigraph::empty(n);
        for &(i, j, m) in edges {
            if i >= n || j >= n {
                return Err(validation(format!("edge ({i}, {j}) out of range for {n} vertices")));
            }
            if i == j && m > 0 {
                return Err(validation(format!("loop at vertex {i}")));
            }
            let total = g.mult(i, j).checked_add(m).ok_or_else(|| validation("edge multiplicity overflow"))?;
            g.set(i, j, total);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn mult(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, m: u32) {
        debug_assert!(i != j || m == 0);
        self.mult[i * self.n + j] = m;
        self.mult[j * self.n + i] = m;
    }

    pub fn decoration(&self) -> &Decoration {
        &self.decoration
    }

    pub fn dims(&self) -> Option<&[u64]> {
        match &self.decoration {
            Decoration::Dims(d) => Some(d),
            _ => None,
        }
    }

    pub fn legs(&self) -> Option<&[u64]> {
        match &self.decoration {
            Decoration::Legs(l) => Some(l),
            _ => None,
        }
    }

    pub fn with_decoration(mut self, decoration: Decoration) -> Result<Self> {
        match &decoration {
            Decoration::None => {}
            Decoration::Dims(d) => {
                if d.len() != self.n || d.contains(&0) {
                    return Err(validation("dims need one positive entry per vertex"));
                }
            }
            Decoration::Legs(l) => {
                if l.len() != self.n {
                    return Err(validation("legs need one entry per vertex"));
                }
            }
        }
        self.decoration = decoration;
        Ok(self)
    }

    pub fn undecorated(&self) -> Multigraph {
        Multigraph { decoration: Decoration::None, ..self.clone() }
    }

    pub fn degree(&self, i: usize) -> u64 {
        (0..self.n).map(|j| u64::from(self.mult(i, j))).sum()
    }

    /// Edges `(i, j, m)` with `i < j` and `m > 0`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let m = self.mult(i, j);
                if m > 0 {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> u64 {
        self.edges().iter().map(|e| u64::from(e.2)).sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.mult(i, j) > 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Applies a vertex relabeling: vertex `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.n);
        let mut g = Multigraph::empty(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                g.mult[perm[i] * self.n + perm[j]] = self.mult(i, j);
            }
        }
        let permute = |v: &[u64]| {
            let mut out = vec![0; v.len()];
            for (i, &x) in v.iter().enumerate() {
                out[perm[i]] = x;
            }
            out
        };
        g.decoration = match &self.decoration {
            Decoration::None => Decoration::None,
            Decoration::Dims(d) => Decoration::Dims(permute(d)),
            Decoration::Legs(l) => Decoration::Legs(permute(l)),
        };
        g
    }

    /// Subgraph induced by `keep`, in the given order.
    fn induced(&self, keep: &[usize]) -> Multigraph {
        let mut g = Multigraph::empty(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                g.mult[a * keep.len() + b] = self.mult(i, j);
            }
        }
        g
    }
}

/// Symmetric matrix of nearest-common-ancestor heights over the leaves.
/// The diagonal is 0 and unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightMatrix {
    n: usize,
    h: Vec<u32>,
}

impl HeightMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.h[i * self.n + j]
    }

    pub fn max_height(&self) -> u32 {
        self.h.iter().copied().max().unwrap_or(0)
    }

    /// Heights of the depth-1 objects of `shape`, where the NCA height of
    /// two objects is the depth of their smallest common sub-object.
    fn of_objects(shape: &NestedPartition) -> HeightMatrix {
        let mut paths: Vec<Vec<usize>> = Vec::new();
        collect_paths(shape, &mut Vec::new(), &mut paths);
        let depth = shape.depth();
        let n = paths.len();
        let mut h = vec![0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let common = paths[i].iter().zip(&paths[j]).take_while(|(a, b)| a == b).count();
                let height = (depth - common) as u32;
                h[i * n + j] = height;
                h[j * n + i] = height;
            }
        }
        HeightMatrix { n, h }
    }

    /// Heights `mult + 2` read off a graph.
    pub fn from_graph(g: &Multigraph) -> HeightMatrix {
        let n = g.vertex_count();
        let mut h = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    h[i * n + j] = g.mult(i, j) + 2;
                }
            }
        }
        HeightMatrix { n, h }
    }

    /// For every triple of distinct points the two largest heights agree.
    pub fn is_ultrametric(&self) -> bool {
        for i in 0..self.n {
            for j in i + 1..self.n {
                for l in j + 1..self.n {
                    let mut t = [self.get(i, j), self.get(i, l), self.get(j, l)];
                    t.sort_unstable();
                    if t[1] != t[2] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn collect_paths(t: &NestedPartition, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    match t {
        NestedPartition::Leaf(_) => out.push(prefix.clone()),
        NestedPartition::Inner(c) => {
            for (i, x) in c.iter().enumerate() {
                prefix.push(i);
                collect_paths(x, prefix, out);
                prefix.pop();
            }
        }
    }
}

fn require_leaf_count(t: &TreeView) -> Result<()> {
    if t.view() != View::LeafCount {
        return Err(precondition("expected a leaf-count tree"));
    }
    Ok(())
}

fn require_size(n: u64) -> Result<()> {
    if n > MAX_GRAPH_VERTICES as u64 {
        return Err(Error::Resource(format!("{n} vertices exceeds the limit of {MAX_GRAPH_VERTICES}")));
    }
    Ok(())
}

/// NCA heights of the leaves of a leaf-count tree, leaves in depth-first order.
pub fn nca_heights(t: &TreeView) -> Result<HeightMatrix> {
    require_leaf_count(t)?;
    require_size(t.rank())?;
    Ok(HeightMatrix::of_objects(&t.shape().explode()))
}

fn graph_from_heights(h: &HeightMatrix, offset: u32) -> Multigraph {
    let mut g = Multigraph::empty(h.size());
    for i in 0..h.size() {
        for j in i + 1..h.size() {
            g.set(i, j, h.get(i, j) - offset);
        }
    }
    g
}

/// Edge multiplicity `h_ij - 2`; needs slope at least 2.
pub fn fission_graph(t: &TreeView) -> Result<Multigraph> {
    require_leaf_count(t)?;
    if t.slope() < 2 {
        return Err(precondition(format!("fission graphs need slope >= 2, got {}", t.slope())));
    }
    Ok(graph_from_heights(&nca_heights(t)?, 2))
}

/// Edge multiplicity `h_ij - 1`.
pub fn stokes_quiver(t: &TreeView) -> Result<Multigraph> {
    require_leaf_count(t)?;
    Ok(graph_from_heights(&nca_heights(t)?, 1))
}

/// Fission graph of a multiplicity tree: one vertex per leaf, with the
/// leaf multiplicities as dimension vector. Needs slope at least 1.
pub fn equipped_fission_graph(t: &TreeView) -> Result<Multigraph> {
    if t.view() != View::Multiplicity {
        return Err(precondition("expected a multiplicity tree"));
    }
    if t.slope() < 1 {
        return Err(precondition("equipped fission graphs need slope >= 1"));
    }
    require_size(t.leaf_count())?;
    let g = graph_from_heights(&HeightMatrix::of_objects(t.shape()), 2);
    g.with_decoration(Decoration::Dims(t.shape().leaf_weights()))
}

/// Vertices split into blocks of the given sizes, with one edge between
/// every pair of vertices in different blocks.
pub fn complete_multipartite(parts: &[usize]) -> Result<Multigraph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(validation("need at least one non-empty part"));
    }
    let n = parts.iter().try_fold(0usize, |acc, &p| acc.checked_add(p)).unwrap_or(usize::MAX);
    require_size(n as u64)?;
    let block: Vec<usize> = parts.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat_n(b, s)).collect();
    let mut g = Multigraph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if block[i] != block[j] {
                g.set(i, j, 1);
            }
        }
    }
    Ok(g)
}

/// Glues a path of `legs[i]` new vertices onto each vertex `i` of `core`.
/// New vertices are numbered after the core, leg by leg, nearest first.
pub fn supernova(core: &Multigraph, legs: &[u64]) -> Result<Multigraph> {
    if core.decoration != Decoration::None {
        return Err(precondition("the core must be undecorated"));
    }
    if legs.len() != core.n {
        return Err(validation("one leg length per core vertex required"));
    }
    let total = legs.iter().try_fold(core.n as u64, |acc, &l| acc.checked_add(l)).unwrap_or(u64::MAX);
    require_size(total)?;
    let total = total as usize;
    let mut g = Multigraph::empty(total);
    for (i, j, m) in core.edges() {
        g.set(i, j, m);
    }
    let mut next = core.n;
    for (i, &l) in legs.iter().enumerate() {
        let mut prev = i;
        for _ in 0..l {
            g.set(prev, next, 1);
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// Supernova graph of an equipped fission graph: legs of length `d_i - 1`.
pub fn supernova_of_equipped(g: &Multigraph) -> Result<Multigraph> {
    let dims = g.dims().ok_or_else(|| precondition("expected an equipped graph"))?;
    let legs: Vec<u64> = dims.iter().map(|d| d - 1).collect();
    supernova(&g.undecorated(), &legs)
}

pub fn is_fission_graph(g: &Multigraph) -> bool {
    if g.decoration != Decoration::None || g.n < 2 {
        return false;
    }
    let h = HeightMatrix::from_graph(g);
    h.max_height() >= 3 && h.is_ultrametric()
}

/// Rebuilds the leaf-count tree whose fission graph is `g`.
pub fn tree_from_graph(g: &Multigraph) -> Result<TreeView> {
    if !is_fission_graph(g) {
        return Err(validation("not a fission graph"));
    }
    let h = HeightMatrix::from_graph(g);
    let slope = (h.max_height() - 1) as usize;
    let all: Vec<usize> = (0..g.n).collect();
    TreeView::new(cluster(&h, &all, slope), View::LeafCount)
}

/// Depth-`depth` object on `leaves`: children are the classes of the
/// relation `h_ij <= depth`.
fn cluster(h: &HeightMatrix, leaves: &[usize], depth: usize) -> NestedPartition {
    if depth == 1 {
        return NestedPartition::Leaf(leaves.len() as u64);
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in leaves {
        match classes.iter_mut().find(|c| h.get(c[0], v) as usize <= depth) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    NestedPartition::Inner(classes.iter().map(|c| cluster(h, c, depth - 1)).collect())
}

/// Splits a supernova graph into its core and leg lengths by repeatedly
/// removing pendant vertices attached by a simple edge.
///
/// Only valid when the core has an edge of multiplicity at least 2; for
/// simple cores the decomposition is not unique and is refused.
pub fn extract_core(g: &Multigraph) -> Result<(Multigraph, Vec<u64>)> {
    if g.decoration != Decoration::None {
        return Err(precondition("expected an undecorated graph"));
    }
    let n = g.n;
    let mut alive = vec![true; n];
    let mut degree: Vec<u64> = (0..n).map(|v| g.degree(v)).collect();
    let mut leg = vec![0u64; n];
    let mut has_leg = vec![false; n];
    loop {
        let pendant = (0..n).find(|&v| alive[v] && degree[v] == 1);
        let Some(v) = pendant else { break };
        let w = (0..n).find(|&w| alive[w] && g.mult(v, w) > 0).expect("degree 1 vertex has a neighbour");
        if has_leg[w] {
            return Err(validation(format!("vertex {w} carries more than one leg")));
        }
        alive[v] = false;
        degree[w] -= 1;
        leg[w] = leg[v] + 1;
        has_leg[w] = true;
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let core = g.induced(&keep);
    if core.max_multiplicity() < 2 {
        return Err(validation("core has no multiple edge; decomposition is not unique"));
    }
    if !is_fission_graph(&core) {
        return Err(validation("peeled remainder is not a fission graph"));
    }
    Ok((core, keep.iter().map(|&v| leg[v]).collect()))
}

/// Connected simple tree with at most one vertex of degree above 2.
pub fn is_star_shaped(g: &Multigraph) -> bool {
    g.n >= 1
        && g.is_simple()
        && g.is_connected()
        && g.edge_count() == (g.n - 1) as u64
        && (0..g.n).filter(|&v| g.degree(v) > 2).count() <= 1
}

/// Arm lengths of a star-shaped graph, measured from its centre
/// (longest first). A path is reported with at most two arms.
pub fn star_arms(g: &Multigraph) -> Option<Vec<u64>> {
    if !is_star_shaped(g) {
        return None;
    }
    let centre = (0..g.n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))?;
    let centre = if g.degree(centre) <= 2 {
        // path: start from an end point
        (0..g.n).find(|&v| g.degree(v) <= 1)?
    } else {
        centre
    };
    let mut arms = Vec::new();
    for start in g.neighbors(centre) {
        let (mut prev, mut cur, mut len) = (centre, start, 1);
        loop {
            let next = g.neighbors(cur).find(|&w| w != prev);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                    len += 1;
                }
                None => break,
            }
        }
        arms.push(len);
    }
    arms.sort_unstable_by(|a, b| b.cmp(a));
    Some(arms)
}

/// Connected simply-laced Dynkin diagrams: `A_n`, `D_n`, `E_6`, `E_7`, `E_8`.
pub fn is_dynkin(g: &Multigraph) -> bool {
    let Some(arms) = star_arms(g) else { return false };
    match arms.as_slice() {
        [] | [_] | [_, _] => true,
        [a, b, c] => {
            // arms (a, b, c) with the centre give the T-shaped graph T(a+1, b+1, c+1)
            let (p, q, r) = (a + 1, b + 1, c + 1);
            q * r + p * r + p * q > p * q * r
        }
        _ => false,
    }
}
