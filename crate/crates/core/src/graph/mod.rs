//! Simple undirected graphs with structured vertex labels.
//!
//! Vertices are kept sorted by their canonical string form, so vertex index
//! order, edge orientation and serialized order all agree.

mod generators;
mod iso;
mod suppress;

pub use generators::*;
pub use iso::{is_homeomorphic, is_isomorphic, is_isomorphic_with_cap, DEFAULT_ISO_CAP};
pub use suppress::{suppress_degree_two, Suppression, SuppressionStop};

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which copy of the Sunlet graph a product vertex lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Ring,
    Pendant,
}

/// A vertex label. Product vertices of `S_n □ K_{1,m}` carry the star index
/// `j` (0 is the star centre) and the ring index `i`; everything else is
/// `Plain`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    Product { star: usize, ring: usize, kind: Kind },
    Plain(String),
}

impl VertexLabel {
    pub fn ring(star: usize, ring: usize) -> Self {
        VertexLabel::Product { star, ring, kind: Kind::Ring }
    }

    pub fn pendant(star: usize, ring: usize) -> Self {
        VertexLabel::Product { star, ring, kind: Kind::Pendant }
    }

    pub fn plain(name: impl Into<String>) -> Self {
        VertexLabel::Plain(name.into())
    }

    /// Plain name, or the canonical string of a product label.
    pub fn name(&self) -> String {
        match self {
            VertexLabel::Plain(name) => name.clone(),
            other => other.to_string(),
        }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Product { star, ring, kind: Kind::Ring } => write!(f, "{star}:{ring}:r"),
            VertexLabel::Product { star, ring, kind: Kind::Pendant } => write!(f, "{star}:{ring}:p"),
            VertexLabel::Plain(name) => write!(f, "{name}:~:x"),
        }
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.rsplitn(3, ':');
        let (tag, mid, head) = match (parts.next(), parts.next(), parts.next()) {
            (Some(t), Some(m), Some(h)) => (t, m, h),
            _ => return Err(Error::Format(format!("malformed vertex label {s:?}"))),
        };
        match tag {
            "x" if mid == "~" => Ok(VertexLabel::Plain(head.to_string())),
            "r" | "p" => {
                let star = head.parse().map_err(|_| Error::Format(format!("bad star index in {s:?}")))?;
                let ring = mid.parse().map_err(|_| Error::Format(format!("bad ring index in {s:?}")))?;
                let kind = if tag == "r" { Kind::Ring } else { Kind::Pendant };
                Ok(VertexLabel::Product { star, ring, kind })
            }
            _ => Err(Error::Format(format!("unknown vertex label kind in {s:?}"))),
        }
    }
}

// Lexicographic on the canonical string form; this is what fixes edge
// orientation and serialized order.
impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Simple undirected graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    index: HashMap<VertexLabel, usize>,
    /// `(u, v)` with `u < v`, sorted.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting duplicate labels, loops, parallel edges and
    /// dangling endpoints.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexLabel>,
        E: IntoIterator<Item = (VertexLabel, VertexLabel)>,
    {
        let mut keyed: Vec<(String, VertexLabel)> = vertices.into_iter().map(|l| (l.to_string(), l)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        for w in keyed.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidGraph(format!("duplicate vertex {}", w[0].0)));
            }
        }
        let labels: Vec<VertexLabel> = keyed.into_iter().map(|(_, l)| l).collect();
        let index: HashMap<VertexLabel, usize> = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();

        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let ia = *index.get(&a).ok_or_else(|| Error::InvalidGraph(format!("unknown endpoint {a}")))?;
            let ib = *index.get(&b).ok_or_else(|| Error::InvalidGraph(format!("unknown endpoint {b}")))?;
            if ia == ib {
                return Err(Error::InvalidGraph(format!("loop at {a}")));
            }
            if !set.insert((ia.min(ib), ia.max(ib))) {
                return Err(Error::InvalidGraph(format!("parallel edge {a}-{b}")));
            }
        }
        Ok(Self::assemble(labels, index, set.into_iter().collect()))
    }

    /// Builds from labels and index-based edges; edges may come in any
    /// orientation but must be simple.
    pub(crate) fn from_indexed(labels: Vec<VertexLabel>, edges: &[(usize, usize)]) -> Result<Self> {
        let es: Vec<(VertexLabel, VertexLabel)> =
            edges.iter().map(|&(a, b)| (labels[a].clone(), labels[b].clone())).collect();
        Graph::new(labels, es)
    }

    fn assemble(labels: Vec<VertexLabel>, index: HashMap<VertexLabel, usize>, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); labels.len()];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { labels, index, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Edges as `(u, v)` index pairs with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Edge index for a pair of labels.
    pub fn edge_by_labels(&self, a: &VertexLabel, b: &VertexLabel) -> Option<usize> {
        let (u, v) = (self.index_of(a)?, self.index_of(b)?);
        self.edge_index(u, v)
    }

    pub fn edge_labels(&self, e: usize) -> (&VertexLabel, &VertexLabel) {
        let (u, v) = self.edges[e];
        (&self.labels[u], &self.labels[v])
    }

    /// Canonical `"a|b"` key of an edge, smaller label first.
    pub fn edge_key(&self, e: usize) -> String {
        let (a, b) = self.edge_labels(e);
        format!("{a}|{b}")
    }

    pub fn edges_share_endpoint(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Subgraph formed by the given edges and their endpoints.
    pub fn edge_induced(&self, edges: &[usize]) -> Graph {
        let mut verts = BTreeSet::new();
        for &e in edges {
            let (u, v) = self.edges[e];
            verts.insert(u);
            verts.insert(v);
        }
        let labels: Vec<VertexLabel> = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let es = edges.iter().map(|&e| {
            let (u, v) = self.edges[e];
            (self.labels[u].clone(), self.labels[v].clone())
        });
        Graph::new(labels, es).expect("subgraph of a simple graph is simple")
    }

    /// Removes the given edges and then any vertex left isolated.
    pub fn without_edges(&self, edges: &[usize]) -> Graph {
        let drop: BTreeSet<usize> = edges.iter().copied().collect();
        let keep: Vec<usize> = (0..self.edge_count()).filter(|e| !drop.contains(e)).collect();
        self.edge_induced(&keep)
    }
}
