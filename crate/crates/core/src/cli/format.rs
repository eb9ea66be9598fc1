//! Versioned JSON formats. Output is canonical: object keys sorted, vertex
//! and edge arrays in label order, rotations starting at their smallest
//! dart, so write/read/write is byte-identical.

use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Map, Value};

use crate::drawing::{CombinatorialDrawing, CrossingSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};

pub const GRAPH_FORMAT: &str = "graph/v1";
pub const DRAWING_FORMAT: &str = "drawing/v1";
pub const SWEEP_FORMAT: &str = "sweep/v1";
pub const ANALYSIS_FORMAT: &str = "analysis/v1";

fn bad(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

pub fn graph_value(g: &Graph) -> Value {
    let vertices: Vec<String> = g.labels().iter().map(|l| l.to_string()).collect();
    let edges: Vec<Value> = (0..g.edge_count())
        .map(|e| {
            let (a, b) = g.edge_labels(e);
            json!([a.to_string(), b.to_string()])
        })
        .collect();
    json!({ "format": GRAPH_FORMAT, "vertices": vertices, "edges": edges })
}

fn check_format(v: &Value, expected: &str) -> Result<()> {
    match v.get("format").and_then(Value::as_str) {
        Some(f) if f == expected => Ok(()),
        Some(f) => Err(bad(format!("expected format {expected}, found {f}"))),
        None => Err(bad("missing format field")),
    }
}

fn str_array(v: &Value, what: &str) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{what} must be an array")))?
        .iter()
        .map(|x| x.as_str().map(str::to_owned).ok_or_else(|| bad(format!("{what} entries must be strings"))))
        .collect()
}

fn label_pair(v: &Value) -> Result<(VertexLabel, VertexLabel)> {
    let p = str_array(v, "edge")?;
    if p.len() != 2 {
        return Err(bad("an edge has exactly two endpoints"));
    }
    Ok((p[0].parse()?, p[1].parse()?))
}

pub fn graph_from_value(v: &Value) -> Result<Graph> {
    check_format(v, GRAPH_FORMAT)?;
    let vertices = str_array(v.get("vertices").ok_or_else(|| bad("missing vertices"))?, "vertices")?
        .into_iter()
        .map(|s| s.parse::<VertexLabel>())
        .collect::<Result<Vec<_>>>()?;
    let edges = v
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing edges"))?
        .iter()
        .map(label_pair)
        .collect::<Result<Vec<_>>>()?;
    Graph::new(vertices, edges)
}

fn edge_pair_value(g: &Graph, e: usize) -> Value {
    let (a, b) = g.edge_labels(e);
    json!([a.to_string(), b.to_string()])
}

pub fn drawing_value(d: &CombinatorialDrawing) -> Value {
    let g = &d.base;
    let mut crossings: Vec<&CrossingSpec> = d.crossings.iter().collect();
    crossings.sort_by_key(|c| c.id);
    let crossings: Vec<Value> = crossings
        .iter()
        .map(|c| {
            let (e, f) = c.edges;
            let (e, f) = if g.edge_key(e) <= g.edge_key(f) { (e, f) } else { (f, e) };
            json!({ "id": c.id, "edges": [edge_pair_value(g, e), edge_pair_value(g, f)] })
        })
        .collect();
    let mut orders = Map::new();
    for (&e, ids) in &d.edge_orders {
        orders.insert(g.edge_key(e), json!(ids));
    }
    let mut rotations = Map::new();
    for (k, rot) in d.rotations.iter().enumerate() {
        let names: Vec<String> = rot.iter().map(|&w| d.vertex_name(w)).collect();
        rotations.insert(d.vertex_name(k), json!(canonical_cycle(names)));
    }
    json!({
        "format": DRAWING_FORMAT,
        "graph": graph_value(g),
        "crossings": crossings,
        "edge_orders": orders,
        "rotations": rotations,
    })
}

/// Rotates a cyclic list to begin at its smallest entry.
fn canonical_cycle(mut names: Vec<String>) -> Vec<String> {
    if let Some(k) = (0..names.len()).min_by(|&a, &b| names[a].cmp(&names[b])) {
        names.rotate_left(k);
    }
    names
}

pub fn drawing_from_value(v: &Value) -> Result<CombinatorialDrawing> {
    check_format(v, DRAWING_FORMAT)?;
    let g = graph_from_value(v.get("graph").ok_or_else(|| bad("missing graph"))?)?;
    let edge_of = |p: &Value| -> Result<usize> {
        let (a, b) = label_pair(p)?;
        g.edge_by_labels(&a, &b).ok_or_else(|| bad(format!("crossing names unknown edge {a}|{b}")))
    };
    let mut crossings = Vec::new();
    for c in v.get("crossings").and_then(Value::as_array).ok_or_else(|| bad("missing crossings"))? {
        let id = c.get("id").and_then(Value::as_u64).ok_or_else(|| bad("crossing without integer id"))? as usize;
        let edges = c.get("edges").and_then(Value::as_array).ok_or_else(|| bad("crossing without edges"))?;
        if edges.len() != 2 {
            return Err(bad("a crossing involves exactly two edges"));
        }
        let (e, f) = (edge_of(&edges[0])?, edge_of(&edges[1])?);
        // keep e == f; the validator reports it as a self-crossing
        crossings.push(CrossingSpec::new(id, e, f));
    }
    crossings.sort_by_key(|c| c.id);
    let key_to_edge: HashMap<String, usize> = (0..g.edge_count()).map(|e| (g.edge_key(e), e)).collect();
    let mut edge_orders = BTreeMap::new();
    for (key, ids) in v.get("edge_orders").and_then(Value::as_object).ok_or_else(|| bad("missing edge_orders"))? {
        let e = *key_to_edge.get(key).ok_or_else(|| bad(format!("edge order for unknown edge {key}")))?;
        let ids = ids
            .as_array()
            .ok_or_else(|| bad("edge order must be an array"))?
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("crossing ids are integers")))
            .collect::<Result<Vec<_>>>()?;
        edge_orders.insert(e, ids);
    }
    let nv = g.vertex_count();
    let mut index: HashMap<String, usize> = (0..nv).map(|k| (g.label(k).to_string(), k)).collect();
    for (p, c) in crossings.iter().enumerate() {
        if index.insert(format!("x{}", c.id), nv + p).is_some() {
            return Err(bad(format!("duplicate crossing id {}", c.id)));
        }
    }
    let mut rotations = vec![Vec::new(); nv + crossings.len()];
    let mut seen = vec![false; rotations.len()];
    for (name, list) in v.get("rotations").and_then(Value::as_object).ok_or_else(|| bad("missing rotations"))? {
        let k = *index.get(name).ok_or_else(|| bad(format!("rotation for unknown vertex {name}")))?;
        seen[k] = true;
        rotations[k] = str_array(list, "rotation")?
            .iter()
            .map(|w| index.get(w).copied().ok_or_else(|| bad(format!("rotation at {name} names unknown vertex {w}"))))
            .collect::<Result<Vec<_>>>()?;
    }
    if let Some(k) = seen.iter().position(|s| !s) {
        let name = if k < nv { g.label(k).to_string() } else { format!("x{}", crossings[k - nv].id) };
        return Err(bad(format!("no rotation given for {name}")));
    }
    Ok(CombinatorialDrawing { base: g, crossings, edge_orders, rotations })
}

pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn parse_text(text: &str) -> Result<Value> {
    Ok(serde_json::from_str(text)?)
}

pub fn write_drawing(d: &CombinatorialDrawing) -> String {
    to_text(&drawing_value(d))
}

pub fn read_drawing(text: &str) -> Result<CombinatorialDrawing> {
    drawing_from_value(&parse_text(text)?)
}

pub fn write_graph(g: &Graph) -> String {
    to_text(&graph_value(g))
}

pub fn read_graph(text: &str) -> Result<Graph> {
    graph_from_value(&parse_text(text)?)
}

/// A graph file, or the base graph of a drawing file.
pub fn read_graph_or_drawing(text: &str) -> Result<Graph> {
    let v = parse_text(text)?;
    match v.get("format").and_then(Value::as_str) {
        Some(DRAWING_FORMAT) => Ok(drawing_from_value(&v)?.base),
        _ => graph_from_value(&v),
    }
}
