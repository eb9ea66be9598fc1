//! Small-graph isomorphism by backtracking over colour-refined candidates.

use std::collections::{BTreeMap, HashMap};

use super::{suppress_degree_two, Graph};
use crate::error::{Error, Result};

pub const DEFAULT_ISO_CAP: usize = 64;

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic_with_cap(g, h, DEFAULT_ISO_CAP)
}

/// Graphs with identical label sets and edge sets are reported isomorphic
/// without search, so the cap only bounds genuine searches.
pub fn is_isomorphic_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<bool> {
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(false);
    }
    if g == h {
        return Ok(true);
    }
    for x in [g, h] {
        if x.vertex_count() > cap {
            return Err(Error::TooLarge { vertices: x.vertex_count(), cap });
        }
    }
    let (cg, ch) = refine_jointly(g, h);
    let mut hist_g = BTreeMap::new();
    let mut hist_h = BTreeMap::new();
    for &c in &cg {
        *hist_g.entry(c).or_insert(0usize) += 1;
    }
    for &c in &ch {
        *hist_h.entry(c).or_insert(0usize) += 1;
    }
    if hist_g != hist_h {
        return Ok(false);
    }
    Ok(Matcher::new(g, h, &cg, &ch).run())
}

pub fn is_homeomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    is_isomorphic(&suppress_degree_two(g).graph, &suppress_degree_two(h).graph)
}

/// 1-dimensional Weisfeiler-Leman refinement run on both graphs with a shared
/// colour dictionary so colours are comparable across them.
fn refine_jointly(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..h.vertex_count()).map(|v| h.degree(v)).collect();
    loop {
        let mut dict: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut step = |graph: &Graph, col: &[usize]| -> Vec<usize> {
            (0..graph.vertex_count())
                .map(|v| {
                    let mut sig: Vec<usize> = graph.neighbors(v).iter().map(|&w| col[w]).collect();
                    sig.sort_unstable();
                    let key = (col[v], sig);
                    let next = dict.len();
                    *dict.entry(key).or_insert(next)
                })
                .collect()
        };
        let ng = step(g, &cg);
        let nh = step(h, &ch);
        let classes = |c: &[usize]| {
            let mut s = c.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        let stable = classes(&ng) == classes(&cg) && classes(&nh) == classes(&ch);
        cg = ng;
        ch = nh;
        if stable {
            return (cg, ch);
        }
    }
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cg: &'a [usize],
    ch: &'a [usize],
    order: Vec<usize>,
    g_to_h: Vec<Option<usize>>,
    h_used: Vec<bool>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a Graph, h: &'a Graph, cg: &'a [usize], ch: &'a [usize]) -> Self {
        // connectivity order: BFS from the rarest colours so each new vertex
        // usually has a mapped neighbour constraining it
        let n = g.vertex_count();
        let mut freq: HashMap<usize, usize> = HashMap::new();
        for &c in cg {
            *freq.entry(c).or_insert(0) += 1;
        }
        let mut starts: Vec<usize> = (0..n).collect();
        starts.sort_by_key(|&v| (freq[&cg[v]], std::cmp::Reverse(g.degree(v)), v));
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for s in starts {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut head = order.len();
            order.push(s);
            while head < order.len() {
                let v = order[head];
                head += 1;
                let mut next: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| !seen[w]).collect();
                next.sort_by_key(|&w| (freq[&cg[w]], std::cmp::Reverse(g.degree(w)), w));
                for w in next {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        Matcher { g, h, cg, ch, order, g_to_h: vec![None; n], h_used: vec![false; h.vertex_count()] }
    }

    fn run(&mut self) -> bool {
        self.extend(0)
    }

    fn feasible(&self, v: usize, x: usize) -> bool {
        if self.cg[v] != self.ch[x] {
            return false;
        }
        // adjacency with every mapped vertex must agree
        for (u, mapped) in self.g_to_h.iter().enumerate() {
            if let Some(y) = *mapped {
                if self.g.has_edge(u, v) != self.h.has_edge(y, x) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        // candidates: neighbours of the image of a mapped neighbour, if any
        let anchor = self.g.neighbors(v).iter().find_map(|&u| self.g_to_h[u]);
        let candidates: Vec<usize> = match anchor {
            Some(y) => self.h.neighbors(y).to_vec(),
            None => (0..self.h.vertex_count()).collect(),
        };
        for x in candidates {
            if self.h_used[x] || !self.feasible(v, x) {
                continue;
            }
            self.g_to_h[v] = Some(x);
            self.h_used[x] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.g_to_h[v] = None;
            self.h_used[x] = false;
        }
        false
    }
}
