#![allow(dead_code)]

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use sunlet_crossings::drawing::{CombinatorialDrawing, CrossingSpec};
use sunlet_crossings::graph::{Graph, VertexLabel};

/// Bitmask over the pairs of at most 11 vertices; loops map to no bit.
fn bit(u: usize, v: usize) -> u64 {
    if u == v {
        return 0;
    }
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    1u64 << (b * (b - 1) / 2 + a)
}

fn pairs_of(mask: u64, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if mask & bit(a, b) != 0 {
                out.push((a, b));
            }
        }
    }
    out
}

fn degrees(mask: u64, n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for (a, b) in pairs_of(mask, n) {
        d[a] += 1;
        d[b] += 1;
    }
    d
}

/// Drops vertices of degree at most one and smooths degree two vertices
/// until every remaining vertex has degree at least three. Parallel edges
/// and loops created on the way are discarded; neither affects planarity.
fn reduce(mut mask: u64, n: usize) -> u64 {
    loop {
        let d = degrees(mask, n);
        let Some(v) = (0..n).find(|&v| d[v] == 1 || d[v] == 2) else {
            return mask;
        };
        let nb: Vec<usize> = (0..n).filter(|&w| w != v && mask & bit(v, w) != 0).collect();
        for &w in &nb {
            mask &= !bit(v, w);
        }
        if nb.len() == 2 {
            mask |= bit(nb[0], nb[1]);
        }
    }
}

fn is_k5_or_k33(mask: u64, n: usize) -> bool {
    let d = degrees(mask, n);
    let live: Vec<usize> = (0..n).filter(|&v| d[v] > 0).collect();
    let e = mask.count_ones() as usize;
    if live.len() == 5 && e == 10 {
        return true;
    }
    if live.len() != 6 || e != 9 || live.iter().any(|&v| d[v] != 3) {
        return false;
    }
    // 3-regular on 6 vertices is K_{3,3} exactly when it is bipartite
    let mut colour = vec![usize::MAX; n];
    let mut stack = vec![live[0]];
    colour[live[0]] = 0;
    while let Some(v) = stack.pop() {
        for &w in &live {
            if mask & bit(v, w) != 0 {
                if colour[w] == usize::MAX {
                    colour[w] = 1 - colour[v];
                    stack.push(w);
                } else if colour[w] == colour[v] {
                    return false;
                }
            }
        }
    }
    true
}

struct Kuratowski {
    n: usize,
    planar: HashSet<u64>,
}

impl Kuratowski {
    /// True when some subgraph is a subdivision of K5 or K3,3.
    fn nonplanar(&mut self, mask: u64) -> bool {
        let mask = reduce(mask, self.n);
        if mask == 0 || self.planar.contains(&mask) {
            return false;
        }
        let live = degrees(mask, self.n).iter().filter(|&&d| d > 0).count();
        let e = mask.count_ones() as usize;
        if live >= 3 && e > 3 * live - 6 {
            return true;
        }
        if is_k5_or_k33(mask, self.n) {
            return true;
        }
        if e <= 9 {
            // six degree-3 vertices are the only non-planar option here
            self.planar.insert(mask);
            return false;
        }
        for (a, b) in pairs_of(mask, self.n) {
            if self.nonplanar(mask & !bit(a, b)) {
                return true;
            }
        }
        self.planar.insert(mask);
        false
    }
}

/// Planarity by searching for a Kuratowski subdivision. Exponential; meant
/// for at most 11 vertices.
pub fn kuratowski_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    assert!(n <= 11, "oracle is limited to 11 vertices");
    let mask = edges.iter().filter(|(a, b)| a != b).fold(0u64, |m, &(a, b)| m | bit(a, b));
    !Kuratowski { n, planar: HashSet::new() }.nonplanar(mask)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Whether some drawing with exactly the given crossing pairs has a planar
/// planarization, trying every order of crossings along each edge.
fn some_order_planar(g: &Graph, pairs: &[(usize, usize)]) -> bool {
    let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); g.edge_count()];
    for (p, &(e, f)) in pairs.iter().enumerate() {
        on_edge[e].push(p);
        on_edge[f].push(p);
    }
    let crossed: Vec<usize> = (0..g.edge_count()).filter(|&e| !on_edge[e].is_empty()).collect();
    let choices: Vec<Vec<Vec<usize>>> = crossed.iter().map(|&e| permutations(&on_edge[e])).collect();
    let mut pick = vec![0usize; crossed.len()];
    let v = g.vertex_count();
    loop {
        let mut edges = Vec::new();
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            match crossed.iter().position(|&c| c == e) {
                None => edges.push((a, b)),
                Some(k) => {
                    let mut prev = a;
                    for &p in &choices[k][pick[k]] {
                        edges.push((prev, v + p));
                        prev = v + p;
                    }
                    edges.push((prev, b));
                }
            }
        }
        if kuratowski_planar(v + pairs.len(), &edges) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == pick.len() {
                return false;
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop();
    }
}

/// Smallest k <= max_k such that some choice of k crossing pairs of
/// independent edges planarizes, or None when there is none.
pub fn brute_force_crossing_number(g: &Graph, max_k: usize) -> Option<usize> {
    let mut candidates = Vec::new();
    for e in 0..g.edge_count() {
        for f in e + 1..g.edge_count() {
            if !g.edges_share_endpoint(e, f) {
                candidates.push((e, f));
            }
        }
    }
    for k in 0..=max_k {
        let mut sets = Vec::new();
        subsets(candidates.len(), k, 0, &mut Vec::new(), &mut sets);
        for s in sets {
            let pairs: Vec<(usize, usize)> = s.iter().map(|&i| candidates[i]).collect();
            if some_order_planar(g, &pairs) {
                return Some(k);
            }
        }
    }
    None
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, edges: usize) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
    all.shuffle(rng);
    all.truncate(edges);
    let names: Vec<VertexLabel> = (0..n).map(|v| VertexLabel::plain(format!("v{v}"))).collect();
    let edges: Vec<(VertexLabel, VertexLabel)> =
        all.iter().map(|&(a, b)| (names[a].clone(), names[b].clone())).collect();
    Graph::new(names, edges).expect("generated graph is simple")
}

/// Faces of a rotation system, traced independently of the library.
pub fn face_count(rot: &[Vec<usize>]) -> usize {
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut faces = 0;
    for (u, r) in rot.iter().enumerate() {
        for &v in r {
            if seen.contains(&(u, v)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                let rb = &rot[b];
                let k = rb.iter().position(|&x| x == a).expect("rotation is symmetric");
                let c = rb[(k + 1) % rb.len()];
                a = b;
                b = c;
            }
        }
    }
    faces
}

/// Genus of a connected rotation system.
pub fn genus(rot: &[Vec<usize>]) -> usize {
    let v = rot.len() as i64;
    let e = rot.iter().map(Vec::len).sum::<usize>() as i64 / 2;
    let f = face_count(rot) as i64;
    ((2 - v + e - f) / 2) as usize
}

pub fn next_id(d: &CombinatorialDrawing) -> usize {
    d.crossings.iter().map(|c| c.id + 1).max().unwrap_or(0)
}

/// A second crossing between the two edges of crossing `p`.
pub fn mutate_duplicate_pair(d: &CombinatorialDrawing, p: usize) -> CombinatorialDrawing {
    let mut out = d.clone();
    let (e, f) = d.crossings[p].edges;
    let id = next_id(d);
    out.crossings.push(CrossingSpec::new(id, e, f));
    out.edge_orders.entry(e).or_default().push(id);
    out.edge_orders.entry(f).or_default().push(id);
    out
}

/// Crossing `p` re-pointed at two edges sharing an endpoint.
pub fn mutate_incident_pair(d: &CombinatorialDrawing, p: usize) -> Option<CombinatorialDrawing> {
    let g = &d.base;
    let (e, _) = d.crossings[p].edges;
    let f = (0..g.edge_count()).find(|&f| f != e && g.edges_share_endpoint(e, f))?;
    let mut out = d.clone();
    let old = out.crossings[p].edges.1;
    let id = out.crossings[p].id;
    out.crossings[p] = CrossingSpec::new(id, e, f);
    if let Some(list) = out.edge_orders.get_mut(&old) {
        list.retain(|&x| x != id);
    }
    out.edge_orders.entry(f).or_default().push(id);
    out.edge_orders.retain(|_, list| !list.is_empty());
    Some(out)
}

/// Two adjacent darts at the dummy of crossing `p` swapped, so the two edges
/// touch rather than cross.
pub fn mutate_alternation(d: &CombinatorialDrawing, p: usize) -> CombinatorialDrawing {
    let mut out = d.clone();
    let x = d.base.vertex_count() + p;
    out.rotations[x].swap(1, 2);
    out
}

/// A transposition in one base vertex's rotation that raises the genus of
/// the planarization to 1, checked with [`genus`].
pub fn mutate_genus_one<R: Rng>(d: &CombinatorialDrawing, rng: &mut R) -> Option<CombinatorialDrawing> {
    let mut vertices: Vec<usize> = (0..d.base.vertex_count()).filter(|&v| d.rotations[v].len() >= 3).collect();
    vertices.shuffle(rng);
    for v in vertices {
        let k = d.rotations[v].len();
        for i in 0..k {
            for j in i + 1..k {
                let mut out = d.clone();
                out.rotations[v].swap(i, j);
                if genus(&out.rotations) == 1 {
                    return Some(out);
                }
            }
        }
    }
    None
}
