use std::fmt::Write;

use serde_json::{json, Value};

use super::{Decoration, Multigraph, MAX_GRAPH_VERTICES};
use crate::error::{validation, Result};

/// Graphviz text. Vertices are `v0..v{n-1}` in the graph's own order; an
/// edge of multiplicity `m` is written `m` times.
pub fn to_dot(g: &Multigraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match g.decoration() {
            Decoration::None => writeln!(out, "  v{v};"),
            Decoration::Dims(d) => writeln!(out, "  v{v} [label=\"{}\"];", d[v]),
            Decoration::Legs(l) => writeln!(out, "  v{v} [label=\"leg {}\"];", l[v]),
        }
        .expect("writing to a String");
    }
    for (i, j, m) in g.edges() {
        for _ in 0..m {
            writeln!(out, "  v{i} -- v{j};").expect("writing to a String");
        }
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_json(g: &Multigraph) -> Value {
    let edges: Vec<Value> = g.edges().into_iter().map(|(i, j, m)| json!([i, j, m])).collect();
    let (dims, legs) = match g.decoration() {
        Decoration::None => (Value::Null, Value::Null),
        Decoration::Dims(d) => (json!(d), Value::Null),
        Decoration::Legs(l) => (Value::Null, json!(l)),
    };
    json!({ "n": g.vertex_count(), "edges": edges, "dims": dims, "legs": legs })
}

fn u64_list(v: &Value, what: &str) -> Result<Option<Vec<u64>>> {
    match v {
        Value::Null => Ok(None),
        Value::Array(items) => items
            .iter()
            .map(|x| x.as_u64().ok_or_else(|| validation(format!("{what} entries must be non-negative integers"))))
            .collect::<Result<Vec<_>>>()
            .map(Some),
        _ => Err(validation(format!("{what} must be an array or null"))),
    }
}

/// Inverse of [`graph_to_json`]. Missing `dims`/`legs` keys count as null.
pub fn graph_from_json(v: &Value) -> Result<Multigraph> {
    let obj = v.as_object().ok_or_else(|| validation("graph JSON must be an object"))?;
    let n = obj.get("n").and_then(Value::as_u64).ok_or_else(|| validation("\"n\" must be a non-negative integer"))?;
    let n = usize::try_from(n).map_err(|_| validation("\"n\" too large"))?;
    if n > MAX_GRAPH_VERTICES {
        return Err(validation("graph too large"));
    }
    let raw_edges =
        obj.get("edges").and_then(Value::as_array).ok_or_else(|| validation("\"edges\" must be an array"))?;
    let mut edges = Vec::with_capacity(raw_edges.len());
    for e in raw_edges {
        let triple = e.as_array().filter(|t| t.len() == 3).ok_or_else(|| validation("each edge is [i, j, m]"))?;
        let num = |x: &Value| x.as_u64().ok_or_else(|| validation("edge entries must be non-negative integers"));
        let (i, j, m) = (num(&triple[0])?, num(&triple[1])?, num(&triple[2])?);
        let m = u32::try_from(m).map_err(|_| validation("edge multiplicity too large"))?;
        edges.push((i as usize, j as usize, m));
    }
    let g = Multigraph::from_edges(n, &edges)?;
    let dims = u64_list(obj.get("dims").unwrap_or(&Value::Null), "dims")?;
    let legs = u64_list(obj.get("legs").unwrap_or(&Value::Null), "legs")?;
    match (dims, legs) {
        (Some(_), Some(_)) => Err(validation("at most one of dims and legs may be present")),
        (Some(d), None) => g.with_decoration(Decoration::Dims(d)),
        (None, Some(l)) => g.with_decoration(Decoration::Legs(l)),
        (None, None) => Ok(g),
    }
}
