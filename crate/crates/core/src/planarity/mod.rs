//! Planarity decision, planar embeddings and face tracing.

mod lr;

pub use lr::LrPlanarity;

use std::cell::RefCell;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cyclic order of neighbours around each vertex. Darts are identified by
/// `(tail, head)`, which is unambiguous in a simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    pub order: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FaceReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub components: usize,
    pub genus: usize,
}

impl FaceReport {
    pub fn is_planar(&self) -> bool {
        self.genus == 0
    }
}

thread_local! {
    static TESTER: RefCell<LrPlanarity> = RefCell::new(LrPlanarity::new());
}

/// Planarity of an index graph, using a per-thread reusable tester.
pub fn is_planar_indexed(n: usize, edges: &[(usize, usize)]) -> bool {
    TESTER.with(|t| t.borrow_mut().is_planar(n, edges))
}

pub fn embed_indexed(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    TESTER.with(|t| t.borrow_mut().embed(n, edges))
}

pub fn is_planar(g: &Graph) -> bool {
    is_planar_indexed(g.vertex_count(), g.edges())
}

pub fn planar_embedding(g: &Graph) -> Result<RotationSystem> {
    embed_indexed(g.vertex_count(), g.edges()).map(|order| RotationSystem { order }).ok_or(Error::NonPlanar)
}

pub fn validate_embedding(g: &Graph, r: &RotationSystem) -> Result<FaceReport> {
    validate_rotation(g.vertex_count(), g.edges(), &r.order)
}

/// Checks that `rot` lists each vertex's neighbours exactly once and traces
/// its faces.
pub fn validate_rotation(n: usize, edges: &[(usize, usize)], rot: &[Vec<usize>]) -> Result<FaceReport> {
    if rot.len() != n {
        return Err(Error::Structure(format!("rotation covers {} of {n} vertices", rot.len())));
    }
    let mut nbrs = vec![Vec::new(); n];
    for &(a, b) in edges {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    for v in 0..n {
        let mut expect = nbrs[v].clone();
        expect.sort_unstable();
        let mut got = rot[v].clone();
        got.sort_unstable();
        if expect != got {
            return Err(Error::Structure(format!("rotation at vertex {v} is not a permutation of its darts")));
        }
    }
    let faces = trace_faces(rot).count;
    let components = count_components(n, &nbrs);
    let chi = n as i64 - edges.len() as i64 + faces as i64;
    let genus = (2 * components as i64 - chi) / 2;
    Ok(FaceReport { vertices: n, edges: edges.len(), faces, components, genus: genus.max(0) as usize })
}

fn count_components(n: usize, nbrs: &[Vec<usize>]) -> usize {
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
            for &w in &nbrs[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Faces of a rotation system. Isolated vertices count as one face each.
pub struct Faces {
    /// Dart `(v, rot[v][p])` lives at `offset[v] + p`.
    pub offset: Vec<usize>,
    pub face_of_dart: Vec<usize>,
    /// Darts of each face in traversal order, as `(tail, head)`.
    pub boundary: Vec<Vec<(usize, usize)>>,
    pub count: usize,
}

impl Faces {
    pub fn dart(&self, rot: &[Vec<usize>], tail: usize, head: usize) -> usize {
        self.offset[tail] + position(&rot[tail], head)
    }
}

fn position(list: &[usize], x: usize) -> usize {
    list.iter().position(|&y| y == x).expect("dart present in rotation")
}

/// Face tracing: the successor of dart `u→v` is the dart following `v→u` in
/// the rotation at `v`.
pub fn trace_faces(rot: &[Vec<usize>]) -> Faces {
    let n = rot.len();
    let mut offset = Vec::with_capacity(n + 1);
    let mut total = 0;
    for r in rot {
        offset.push(total);
        total += r.len();
    }
    offset.push(total);
    let mut face_of_dart = vec![usize::MAX; total];
    let mut boundary = Vec::new();
    for v in 0..n {
        for p in 0..rot[v].len() {
            if face_of_dart[offset[v] + p] != usize::MAX {
                continue;
            }
            let f = boundary.len();
            let mut cycle = Vec::new();
            let (mut tail, mut pos) = (v, p);
            loop {
                let d = offset[tail] + pos;
                if face_of_dart[d] != usize::MAX {
                    break;
                }
                face_of_dart[d] = f;
                let head = rot[tail][pos];
                cycle.push((tail, head));
                let back = position(&rot[head], tail);
                pos = (back + 1) % rot[head].len();
                tail = head;
            }
            boundary.push(cycle);
        }
    }
    let isolated = rot.iter().filter(|r| r.is_empty()).count();
    let count = boundary.len() + isolated;
    offset.truncate(n);
    Faces { offset, face_of_dart, boundary, count }
}
