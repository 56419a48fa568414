mod common;

use std::collections::BTreeSet;

use common::permutation;
use fission::counting::{big_n1, big_n2, table4_row, Counts};
use fission::enumerate::{exact, supernova};
use fission::graph::{
    canonical_form, canonical_form_bounded, complete_multipartite, equipped_fission_graph, extract_core, fission_graph,
    graph_from_json, graph_to_json, is_dynkin, is_fission_graph, is_star_shaped, nca_heights, star_arms, stokes_quiver,
    supernova as glue_legs, to_dot, tree_from_graph, CanonicalGraph, Decoration, HeightMatrix, Multigraph,
};
use fission::tree::{parse_tree, TreeView, View};
use fission::Error;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::Index;

fn lc(s: &str) -> TreeView {
    TreeView::new(parse_tree(s).unwrap(), View::LeafCount).unwrap()
}

fn path(n: usize) -> Multigraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i, 1)).collect();
    Multigraph::from_edges(n, &edges).unwrap()
}

fn cycle(n: usize) -> Multigraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
    Multigraph::from_edges(n, &edges).unwrap()
}

/// Leaf-count trees of slope 2..=max_slope with rank n.
fn fission_trees(n: u64, max_slope: usize) -> Vec<TreeView> {
    (2..=max_slope).flat_map(|k| exact(k, n, View::LeafCount).unwrap()).collect()
}

/// Every simple graph on `n` labelled vertices, one per edge subset.
fn all_simple_graphs(n: usize) -> impl Iterator<Item = Multigraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> =
            pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &(i, j))| (i, j, 1)).collect();
        Multigraph::from_edges(n, &edges).unwrap()
    })
}

/// Isomorphism classes of connected simple graphs on `n` vertices.
fn connected_simple_classes(n: usize) -> BTreeSet<CanonicalGraph> {
    all_simple_graphs(n).filter(Multigraph::is_connected).map(|g| canonical_form(&g).unwrap()).collect()
}

#[test]
fn height_examples() {
    let h = nca_heights(&lc("3")).unwrap();
    assert!((0..3).all(|i| (0..3).all(|j| h.get(i, j) == if i == j { 0 } else { 2 })));
    let h = nca_heights(&lc("[2,2]")).unwrap();
    assert_eq!((h.get(0, 1), h.get(1, 2), h.get(2, 3)), (2, 3, 2));
    let g = fission_graph(&lc("[[1],[1],[1],[1]]")).unwrap();
    assert_eq!(g, complete_multipartite(&[1, 1, 1, 1]).unwrap().relabel(&[0, 1, 2, 3]).doubled());
}

trait Doubled {
    fn doubled(&self) -> Multigraph;
}

impl Doubled for Multigraph {
    fn doubled(&self) -> Multigraph {
        let edges: Vec<_> = self.edges().into_iter().map(|(i, j, m)| (i, j, 2 * m)).collect();
        Multigraph::from_edges(self.vertex_count(), &edges).unwrap()
    }
}

#[test]
fn heights_are_ultrametric_up_to_rank_eight() {
    for n in 1..=8 {
        for k in 1..=5 {
            for t in exact(k, n, View::LeafCount).unwrap() {
                let h = nca_heights(&t).unwrap();
                assert_eq!(h.size() as u64, n);
                assert!(h.is_ultrametric(), "{t}");
                if n >= 2 {
                    assert_eq!(h.max_height() as usize, k + 1, "{t}");
                }
            }
            for t in exact(k, n, View::Multiplicity).unwrap() {
                let g = equipped_fission_graph(&t).unwrap();
                assert!(HeightMatrix::from_graph(&g).is_ultrametric(), "{t}");
            }
        }
    }
}

#[test]
fn fission_graph_examples() {
    let c4 = fission_graph(&lc("[2,2]")).unwrap();
    assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&cycle(4)).unwrap());
    for parts in [vec![3, 1], vec![2, 2, 1], vec![4, 3, 2, 1]] {
        let tree = TreeView::new(fission::tree::NestedPartition::partition(&parts).unwrap(), View::LeafCount).unwrap();
        assert_eq!(
            canonical_form(&fission_graph(&tree).unwrap()).unwrap(),
            canonical_form(&complete_multipartite(&parts.iter().map(|&p| p as usize).collect::<Vec<_>>()).unwrap())
                .unwrap()
        );
    }
    assert!(matches!(fission_graph(&lc("3")), Err(Error::Precondition(_))));
    assert!(matches!(fission_graph(&lc("5")), Err(Error::Precondition(_))));
}

/// The nine slope-3 trees with four leaves give nine non-isomorphic graphs,
/// all with an edge of multiplicity two.
#[test]
fn four_node_graphs_with_double_edges() {
    let graphs: Vec<Multigraph> =
        exact(3, 4, View::LeafCount).unwrap().iter().map(|t| fission_graph(t).unwrap()).collect();
    assert_eq!(graphs.len(), 9);
    assert!(graphs.iter().all(|g| g.max_multiplicity() == 2 && g.vertex_count() == 4 && g.is_connected()));
    let forms: BTreeSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(forms.len(), 9);
}

#[test]
fn simple_fission_graphs_on_ten_nodes() {
    let forms: BTreeSet<_> = exact(2, 10, View::LeafCount)
        .unwrap()
        .iter()
        .map(|t| canonical_form(&fission_graph(t).unwrap()).unwrap())
        .collect();
    assert_eq!(forms.len(), 41);
}

/// Simple fission graphs found by testing every simple graph against the
/// ultrametric condition; the tree route gives the same classes.
#[test]
fn simply_laced_fission_graphs_by_brute_force() {
    let mut non_star = 0;
    for n in 2..=6 {
        let brute: BTreeSet<CanonicalGraph> = all_simple_graphs(n)
            .filter(|g| g.is_connected() && is_fission_graph(g))
            .map(|g| canonical_form(&g).unwrap())
            .collect();
        let via_trees: BTreeSet<CanonicalGraph> = exact(2, n as u64, View::LeafCount)
            .unwrap()
            .iter()
            .map(|t| canonical_form(&fission_graph(t).unwrap()).unwrap())
            .collect();
        assert_eq!(brute, via_trees, "n={n}");
        non_star += brute.iter().filter(|g| !is_star_shaped(g.graph())).count();
    }
    assert_eq!(non_star, 18);
}

#[test]
fn fission_graphs_are_injective_and_invertible() {
    for n in 2..=7 {
        let trees = fission_trees(n, 5);
        let mut forms = BTreeSet::new();
        for t in &trees {
            let g = fission_graph(t).unwrap();
            assert!(g.is_connected(), "{t}");
            assert!(is_fission_graph(&g), "{t}");
            assert_eq!(g.max_multiplicity() as usize, t.slope() - 1, "{t}");
            assert_eq!(tree_from_graph(&g).unwrap(), *t);
            let shuffled = g.relabel(&(0..g.vertex_count()).rev().collect::<Vec<_>>());
            assert_eq!(tree_from_graph(&shuffled).unwrap(), *t);
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), trees.len(), "n={n}");
    }
}

#[test]
fn non_fission_graphs_are_rejected() {
    let p3 = path(3);
    assert!(is_fission_graph(&p3));
    assert_eq!(tree_from_graph(&p3).unwrap(), lc("[2,1]"));
    assert!(!is_fission_graph(&path(4)));
    assert!(matches!(tree_from_graph(&path(4)), Err(Error::Validation(_))));
    assert!(!is_fission_graph(&cycle(5)));
    assert!(!is_fission_graph(&Multigraph::empty(3)));
    assert!(!is_fission_graph(&Multigraph::empty(1)));
    let equipped = complete_multipartite(&[1, 1]).unwrap().with_decoration(Decoration::Dims(vec![1, 2])).unwrap();
    assert!(!is_fission_graph(&equipped));
}

#[test]
fn stokes_quiver_adds_one() {
    let tri = stokes_quiver(&lc("3")).unwrap();
    assert_eq!(tri, complete_multipartite(&[1, 1, 1]).unwrap());
    let single = stokes_quiver(&lc("1")).unwrap();
    assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));
    for n in 2..=7 {
        for t in fission_trees(n, 5) {
            let f = fission_graph(&t).unwrap();
            let s = stokes_quiver(&t).unwrap();
            for i in 0..n as usize {
                for j in 0..n as usize {
                    if i != j {
                        assert_eq!(s.mult(i, j), f.mult(i, j) + 1);
                    }
                }
            }
        }
    }
}

/// A fission graph with an edge of multiplicity >= 2 never has a vertex
/// hanging off a single simple edge.
#[test]
fn no_pendant_vertices_with_multiple_edges() {
    for n in 2..=8 {
        for t in fission_trees(n, 5).into_iter().filter(|t| t.slope() >= 3) {
            let g = fission_graph(&t).unwrap();
            assert!((0..g.vertex_count()).all(|v| g.degree(v) != 1), "{t}");
        }
    }
}

#[test]
fn complete_multipartite_examples() {
    let star = complete_multipartite(&[1, 4]).unwrap();
    assert!(is_star_shaped(&star));
    assert_eq!(star_arms(&star), Some(vec![1, 1, 1, 1]));
    let isolated = complete_multipartite(&[5]).unwrap();
    assert_eq!((isolated.vertex_count(), isolated.edge_count()), (5, 0));
    let k66 = complete_multipartite(&[6, 6]).unwrap();
    assert_eq!((k66.vertex_count(), k66.edge_count()), (12, 36));
    assert!(k66.edges().iter().all(|e| e.2 == 1));
}

#[test]
fn supernova_examples() {
    let k66 = complete_multipartite(&[6, 6]).unwrap();
    let big = glue_legs(&k66, &[3; 12]).unwrap();
    assert_eq!((big.vertex_count(), big.edge_count()), (48, 72));
    assert!((12..48).all(|v| big.degree(v) <= 2));
    assert_eq!(glue_legs(&k66, &[0; 12]).unwrap(), k66);
    assert!(glue_legs(&k66, &[1; 3]).is_err());

    let (core, legs) =
        extract_core(&glue_legs(&complete_multipartite(&[2, 2]).unwrap().doubled(), &[2, 0, 1, 0]).unwrap()).unwrap();
    assert_eq!(core.max_multiplicity(), 2);
    let mut sorted = legs.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![0, 0, 1, 2]);

    assert!(matches!(extract_core(&big), Err(Error::Validation(_))));
    assert!(matches!(extract_core(&path(5)), Err(Error::Validation(_))));
}

/// Eight of the rank-4 equipped simple graphs give only six supernova
/// graphs; all six are distinct up to isomorphism.
#[test]
fn equipped_graphs_collapse() {
    let trees = exact(2, 4, View::Multiplicity).unwrap();
    assert_eq!(trees.len(), 9);
    let mut forms = BTreeSet::new();
    for t in &trees {
        let g = equipped_fission_graph(t).unwrap();
        assert_eq!(g.dims().unwrap().iter().sum::<u64>(), 4);
        assert!(g.max_multiplicity() <= 1);
        forms.insert(canonical_form(&fission::graph::supernova_of_equipped(&g).unwrap()).unwrap());
    }
    assert_eq!(forms.len(), 6);
}

#[test]
fn core_extraction_round_trip() {
    for k in 2..=3 {
        for n in 2..=8 {
            for g in supernova(k, n).unwrap().graphs {
                let (core, legs) = extract_core(&g).unwrap();
                assert!(core.max_multiplicity() >= 2);
                let back = glue_legs(&core, &legs).unwrap();
                assert_eq!(canonical_form(&back).unwrap(), canonical_form(&g).unwrap());
                let shuffled = g.relabel(&(0..g.vertex_count()).rev().collect::<Vec<_>>());
                let (core2, legs2) = extract_core(&shuffled).unwrap();
                let back2 = glue_legs(&core2, &legs2).unwrap();
                assert_eq!(canonical_form(&back2).unwrap(), canonical_form(&g).unwrap());
            }
        }
    }
}

#[test]
fn star_shape_examples() {
    assert!(is_star_shaped(&path(5)));
    assert!(is_dynkin(&path(5)));
    assert!(!is_star_shaped(&cycle(4)));
    assert!(!is_star_shaped(&complete_multipartite(&[1, 1]).unwrap().doubled()));
    let t222 = glue_legs(&Multigraph::empty(1), &[2]).unwrap();
    assert!(is_star_shaped(&t222));
    let e6 = star(&[2, 2, 1]);
    let e8 = star(&[4, 2, 1]);
    let affine_e6 = star(&[2, 2, 2]);
    let affine_d4 = star(&[1, 1, 1, 1]);
    assert!(is_dynkin(&e6) && is_dynkin(&e8) && is_dynkin(&star(&[5, 1, 1])));
    assert!(!is_dynkin(&affine_e6) && !is_dynkin(&affine_d4) && !is_dynkin(&star(&[5, 2, 1])));
    assert_eq!(star_arms(&e8), Some(vec![4, 2, 1]));
}

/// Star with the given arm lengths around vertex 0.
fn star(arms: &[usize]) -> Multigraph {
    let n = 1 + arms.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next, 1));
            prev = next;
            next += 1;
        }
    }
    Multigraph::from_edges(n, &edges).unwrap()
}

#[test]
fn star_counts_by_brute_force() {
    for n in 2..=6 {
        let stars = connected_simple_classes(n).iter().filter(|g| is_star_shaped(g.graph())).count();
        assert_eq!(BigInt::from(stars), big_n2(n).unwrap(), "n={n}");
    }
    for n in 2..=8u64 {
        let equipped_stars = exact(1, n, View::Multiplicity)
            .unwrap()
            .into_iter()
            .chain(exact(2, n, View::Multiplicity).unwrap())
            .filter(|t| t.slope() >= 1)
            .filter_map(|t| equipped_fission_graph(&t).ok())
            .filter(|g| is_star_shaped(&g.undecorated()))
            .count();
        assert_eq!(BigInt::from(equipped_stars), big_n1(n as usize).unwrap(), "n={n}");
    }
}

/// The simply-laced supernova table, recounted from enumerated graphs.
#[test]
fn simply_laced_supernova_table_by_enumeration() {
    let c = Counts::new(1, 8).unwrap();
    for n in 2..=8 {
        let graphs = supernova(1, n as u64).unwrap().graphs;
        let row = table4_row(n).unwrap();
        let stars = graphs.iter().filter(|g| is_star_shaped(g)).count();
        let non_dynkin = graphs.iter().filter(|g| !is_dynkin(g)).count();
        assert_eq!(BigInt::from(graphs.len()), c.sigma(1, n));
        assert_eq!(BigInt::from(graphs.len()), row.total);
        assert_eq!(BigInt::from(stars), row.starshaped, "n={n}");
        assert_eq!(BigInt::from(graphs.len() - stars), row.other, "n={n}");
        assert_eq!(BigInt::from(non_dynkin), row.non_dynkin, "n={n}");
    }
    let non_dynkin: Vec<usize> =
        (3..=5).map(|n| supernova(1, n).unwrap().graphs.iter().filter(|g| !is_dynkin(g)).count()).collect();
    assert_eq!(non_dynkin, vec![1, 4, 12]);
}

#[test]
fn canonical_form_examples() {
    let one = Multigraph::empty(1);
    assert_eq!(canonical_form(&one).unwrap().graph(), &one);
    assert_ne!(canonical_form(&path(4)).unwrap(), canonical_form(&star(&[1, 1, 1])).unwrap());
    let dims = path(3).with_decoration(Decoration::Dims(vec![1, 2, 1])).unwrap();
    let other = path(3).with_decoration(Decoration::Dims(vec![2, 1, 1])).unwrap();
    assert_ne!(canonical_form(&dims).unwrap(), canonical_form(&other).unwrap());
    assert_eq!(
        canonical_form(&other).unwrap(),
        canonical_form(&path(3).with_decoration(Decoration::Dims(vec![1, 1, 2])).unwrap()).unwrap()
    );
    let big = complete_multipartite(&[9, 8]).unwrap();
    assert!(matches!(canonical_form(&big), Err(Error::Resource(_))));
    assert!(canonical_form_bounded(&big, 17).is_ok());
}

#[test]
fn dot_examples() {
    assert_eq!(to_dot(&path(2)), "graph G {\n  v0;\n  v1;\n  v0 -- v1;\n}\n");
    let doubled = complete_multipartite(&[1, 1]).unwrap().doubled();
    assert_eq!(to_dot(&doubled).matches("v0 -- v1;").count(), 2);
    let dims = path(2).with_decoration(Decoration::Dims(vec![3, 1])).unwrap();
    assert!(to_dot(&dims).contains("v0 [label=\"3\"];"));
}

#[test]
fn json_examples() {
    let g = path(3).with_decoration(Decoration::Legs(vec![0, 2, 1])).unwrap();
    let v = graph_to_json(&g);
    assert_eq!(v.to_string(), r#"{"dims":null,"edges":[[0,1,1],[1,2,1]],"legs":[0,2,1],"n":3}"#);
    assert_eq!(graph_from_json(&v).unwrap(), g);
    let bad = [
        r#"[]"#,
        r#"{"n":2,"edges":[[0,0,1]]}"#,
        r#"{"n":2,"edges":[[0,5,1]]}"#,
        r#"{"n":2,"edges":[[0,1]]}"#,
        r#"{"n":2,"edges":[],"dims":[1,1],"legs":[0,0]}"#,
        r#"{"n":2,"edges":[],"dims":[0,1]}"#,
        r#"{"n":2,"edges":[],"legs":[1]}"#,
        r#"{"n":-1,"edges":[]}"#,
    ];
    for text in bad {
        let v: serde_json::Value = serde_json::from_str(text).unwrap();
        assert!(graph_from_json(&v).is_err(), "{text}");
    }
}

fn small_fission_graph() -> impl Strategy<Value = Multigraph> {
    (2u64..=6, 2usize..=4, any::<Index>()).prop_filter_map("no tree of that slope", |(n, k, i)| {
        let trees = exact(k, n, View::LeafCount).ok()?;
        (!trees.is_empty()).then(|| fission_graph(i.get(&trees)).unwrap())
    })
}

fn decorate(g: Multigraph, kind: u8, seed: &[u64]) -> Multigraph {
    let n = g.vertex_count();
    let values: Vec<u64> = (0..n).map(|v| seed[v % seed.len()]).collect();
    match kind {
        0 => g,
        1 => g.with_decoration(Decoration::Dims(values.iter().map(|x| x + 1).collect())).unwrap(),
        _ => g.with_decoration(Decoration::Legs(values)).unwrap(),
    }
}

proptest! {
    #[test]
    fn canonical_form_ignores_labels(
        g in small_fission_graph(),
        kind in 0u8..3,
        seed in prop::collection::vec(0u64..3, 1..6),
        picks in prop::collection::vec(any::<Index>(), 1..8),
    ) {
        let g = decorate(g, kind, &seed);
        let perm = permutation(g.vertex_count(), &picks);
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let form = canonical_form(&g).unwrap();
        prop_assert_eq!(canonical_form(form.graph()).unwrap(), form.clone());
    }

    #[test]
    fn graph_json_round_trip(
        g in small_fission_graph(),
        kind in 0u8..3,
        seed in prop::collection::vec(0u64..4, 1..6),
    ) {
        let g = decorate(g, kind, &seed);
        let v = graph_to_json(&g);
        let text = v.to_string();
        let back = graph_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn supernova_then_extract(
        g in small_fission_graph().prop_filter("multiple edge", |g| g.max_multiplicity() >= 2),
        seed in prop::collection::vec(0u64..4, 1..6),
    ) {
        let legs: Vec<u64> = (0..g.vertex_count()).map(|v| seed[v % seed.len()]).collect();
        let s = glue_legs(&g, &legs).unwrap();
        prop_assert_eq!(s.vertex_count() as u64, g.vertex_count() as u64 + legs.iter().sum::<u64>());
        let (core, found) = extract_core(&s).unwrap();
        prop_assert_eq!(core, g);
        prop_assert_eq!(found, legs);
    }
}

#[test]
fn oversized_graphs_are_refused() {
    let huge = lc("[99999999999,1]");
    assert!(matches!(fission_graph(&huge), Err(Error::Resource(_))));
    assert!(matches!(stokes_quiver(&lc("5000")), Err(Error::Resource(_))));
    assert!(matches!(complete_multipartite(&[usize::MAX, 2]), Err(Error::Resource(_))));
    assert!(matches!(glue_legs(&path(2), &[u64::MAX, 1]), Err(Error::Resource(_))));
    assert!(stokes_quiver(&lc("4096")).is_ok());
}
