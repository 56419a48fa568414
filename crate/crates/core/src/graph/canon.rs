//! Canonical labeling by colour refinement plus individualization.
//!
//! Every leaf of the search tree gives a discrete ordered partition, i.e. a
//! relabeling; the canonical form is the smallest relabeled graph. Twin
//! vertices (same neighbourhood, same decoration) are interchangeable, so
//! only one per twin class is individualized.

use super::{Decoration, Multigraph};
use crate::error::{Error, Result};

/// Graphs larger than this are refused by [`canonical_form`].
pub const DEFAULT_CANON_BOUND: usize = 16;

/// A graph in canonical labeling. Equal values mean isomorphic graphs
/// (decorations included).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalGraph(Multigraph);

impl CanonicalGraph {
    pub fn graph(&self) -> &Multigraph {
        &self.0
    }

    pub fn into_graph(self) -> Multigraph {
        self.0
    }
}

pub fn canonical_form(g: &Multigraph) -> Result<CanonicalGraph> {
    canonical_form_bounded(g, DEFAULT_CANON_BOUND)
}

pub fn canonical_form_bounded(g: &Multigraph, max_vertices: usize) -> Result<CanonicalGraph> {
    if g.vertex_count() > max_vertices {
        return Err(Error::Resource(format!(
            "canonical form limited to {max_vertices} vertices, graph has {}",
            g.vertex_count()
        )));
    }
    let n = g.vertex_count();
    let label = |v: usize| -> u64 {
        match g.decoration() {
            Decoration::None => 0,
            Decoration::Dims(d) | Decoration::Legs(d) => d[v],
        }
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| label(v));
    let mut cells = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        if i == 0 || label(order[i - 1]) != label(v) {
            cells.push(Vec::new());
        }
        cells.last_mut().expect("pushed").push(v);
    }
    let mut best: Option<Multigraph> = None;
    search(g, refine(g, cells), &mut best);
    Ok(CanonicalGraph(best.unwrap_or_else(|| g.clone())))
}

/// Splits cells by the multiset of (cell, multiplicity) over neighbours
/// until stable. Cell order is determined by the signatures alone.
fn refine(g: &Multigraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    loop {
        let mut cell_of = vec![0; n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let signature = |v: usize| {
            let mut s: Vec<(usize, u32)> = g.neighbors(v).map(|w| (cell_of[w], g.mult(v, w))).collect();
            s.sort_unstable();
            s
        };
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut keyed: Vec<_> = cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn twins(g: &Multigraph, u: usize, v: usize) -> bool {
    (0..g.vertex_count()).all(|w| w == u || w == v || g.mult(u, w) == g.mult(v, w))
}

fn search(g: &Multigraph, cells: Vec<Vec<usize>>, best: &mut Option<Multigraph>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; g.vertex_count()];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let candidate = g.relabel(&perm);
        if best.as_ref().is_none_or(|b| candidate < *b) {
            *best = Some(candidate);
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        // all vertices of a cell share the decoration, so twins are automorphic
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut split = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
        split[target] = vec![v];
        split.insert(target + 1, rest);
        search(g, refine(g, split), best);
    }
}
