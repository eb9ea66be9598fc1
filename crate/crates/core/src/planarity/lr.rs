//! Left-right planarity test with embedding extraction.
//!
//! Operates on index graphs `(n, &[(u, v)])` and keeps every buffer between
//! calls, so one tester can be reused for many small tests without fresh
//! allocation.

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

#[derive(Clone, Copy)]
struct Ring {
    nbr: usize,
    cw: usize,
    ccw: usize,
}

/// Reusable left-right planarity tester.
#[derive(Default)]
pub struct LrPlanarity {
    n: usize,
    adj_start: Vec<usize>,
    adj: Vec<(usize, usize)>,
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<i64>,
    out_start: Vec<usize>,
    out: Vec<usize>,
    out_len: Vec<usize>,
    roots: Vec<usize>,
    reference: Vec<Option<usize>>,
    side: Vec<i64>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    // embedding
    ring: Vec<Vec<Ring>>,
    first: Vec<usize>,
    left_ref: Vec<usize>,
    right_ref: Vec<usize>,
    chain: Vec<usize>,
}

impl LrPlanarity {
    pub fn new() -> Self {
        Self::default()
    }

    /// Planarity decision only.
    pub fn is_planar(&mut self, n: usize, edges: &[(usize, usize)]) -> bool {
        self.test(n, edges)
    }

    /// Clockwise neighbour order per vertex of a planar embedding, or `None`
    /// when the graph is not planar.
    pub fn embed(&mut self, n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
        if !self.test(n, edges) {
            return None;
        }
        Some(self.build_embedding())
    }

    fn test(&mut self, n: usize, edges: &[(usize, usize)]) -> bool {
        let m = edges.len();
        if n > 2 && m > 3 * n - 6 {
            return false;
        }
        self.reset(n, edges);
        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        // out-edges of each vertex by nesting depth
        for v in 0..n {
            let (s, l) = (self.out_start[v], self.out_len[v]);
            let nesting = &self.nesting;
            self.out[s..s + l].sort_by_key(|&k| nesting[k]);
        }
        for r in 0..self.roots.len() {
            let root = self.roots[r];
            if !self.testing(root) {
                return false;
            }
        }
        true
    }

    fn reset(&mut self, n: usize, edges: &[(usize, usize)]) {
        let m = edges.len();
        self.n = n;
        self.adj_start.clear();
        self.adj_start.resize(n + 1, 0);
        for &(a, b) in edges {
            self.adj_start[a + 1] += 1;
            self.adj_start[b + 1] += 1;
        }
        for v in 0..n {
            self.adj_start[v + 1] += self.adj_start[v];
        }
        self.adj.clear();
        self.adj.resize(2 * m, (0, 0));
        let mut fill = self.adj_start.clone();
        for (k, &(a, b)) in edges.iter().enumerate() {
            self.adj[fill[a]] = (b, k);
            fill[a] += 1;
            self.adj[fill[b]] = (a, k);
            fill[b] += 1;
        }
        // out lists are carved from the same layout: each vertex owns at
        // most its degree many out-edges
        self.out_start.clear();
        self.out_start.extend_from_slice(&self.adj_start[..n]);
        self.out.clear();
        self.out.resize(2 * m, 0);
        self.out_len.clear();
        self.out_len.resize(n, 0);

        for buf in [&mut self.src, &mut self.dst, &mut self.lowpt, &mut self.lowpt2] {
            buf.clear();
            buf.resize(m, NONE);
        }
        self.oriented.clear();
        self.oriented.resize(m, false);
        self.nesting.clear();
        self.nesting.resize(m, 0);
        self.reference.clear();
        self.reference.resize(m, None);
        self.side.clear();
        self.side.resize(m, 1);
        self.lowpt_edge.clear();
        self.lowpt_edge.resize(m, NONE);
        self.stack_bottom.clear();
        self.stack_bottom.resize(m, 0);
        self.height.clear();
        self.height.resize(n, NONE);
        self.parent_edge.clear();
        self.parent_edge.resize(n, NONE);
        self.roots.clear();
        self.stack.clear();
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        for idx in self.adj_start[v]..self.adj_start[v + 1] {
            let (w, k) = self.adj[idx];
            if self.oriented[k] {
                continue;
            }
            self.oriented[k] = true;
            self.src[k] = v;
            self.dst[k] = w;
            self.out[self.out_start[v] + self.out_len[v]] = k;
            self.out_len[v] += 1;
            self.lowpt[k] = self.height[v];
            self.lowpt2[k] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = k;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[k] = self.height[w];
            }
            self.nesting[k] = 2 * self.lowpt[k] as i64;
            if self.lowpt2[k] < self.height[v] {
                // chordal
                self.nesting[k] += 1;
            }
            if e != NONE {
                if self.lowpt[k] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[k]);
                    self.lowpt[e] = self.lowpt[k];
                } else if self.lowpt[k] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[k]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[k]);
                }
            }
        }
    }

    fn testing(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let start = self.out_start[v];
        for idx in start..start + self.out_len[v] {
            let k = self.out[idx];
            let w = self.dst[k];
            self.stack_bottom[k] = self.stack.len();
            if self.parent_edge[w] == k {
                if !self.testing(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[k] = k;
                self.stack
                    .push(ConflictPair { left: Interval::default(), right: Interval { low: Some(k), high: Some(k) } });
            }
            if self.lowpt[k] < self.height[v] {
                if idx == start {
                    self.lowpt_edge[e] = self.lowpt_edge[k];
                } else if !self.add_constraints(k, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) if !i.is_empty() => self.lowpt[h] > self.lowpt[b],
            _ => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.unwrap()];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.unwrap()];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        // merge return edges of ei into p.right
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.unwrap();
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                // align
                self.reference[q_low] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.reference[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low.unwrap()] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(l) = p.right.low {
                    self.reference[l] = p.left.low;
                    self.side[l] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = *self.stack.last().expect("edge with return edge has a conflict pair");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        self.chain.clear();
        let mut cur = e;
        while let Some(next) = self.reference[cur] {
            self.chain.push(cur);
            cur = next;
        }
        let mut s = self.side[cur];
        while let Some(k) = self.chain.pop() {
            self.side[k] *= s;
            self.reference[k] = None;
            s = self.side[k];
        }
        self.side[e]
    }

    fn build_embedding(&mut self) -> Vec<Vec<usize>> {
        let n = self.n;
        let m = self.src.len();
        for k in 0..m {
            let s = self.sign(k);
            self.nesting[k] *= s;
        }
        self.ring.clear();
        self.ring.resize(n, Vec::new());
        self.first.clear();
        self.first.resize(n, NONE);
        self.left_ref.clear();
        self.left_ref.resize(n, NONE);
        self.right_ref.clear();
        self.right_ref.resize(n, NONE);
        for v in 0..n {
            let (s, l) = (self.out_start[v], self.out_len[v]);
            let nesting = &self.nesting;
            self.out[s..s + l].sort_by_key(|&k| nesting[k]);
            let mut prev = NONE;
            for idx in s..s + l {
                let w = self.dst[self.out[idx]];
                self.add_cw(v, w, prev);
                prev = w;
            }
        }
        for r in 0..self.roots.len() {
            let root = self.roots[r];
            self.embed_dfs(root);
        }
        (0..n)
            .map(|v| {
                let ring = &self.ring[v];
                let mut order = Vec::with_capacity(ring.len());
                if ring.is_empty() {
                    return order;
                }
                let mut at = self.slot(v, self.first[v]);
                for _ in 0..ring.len() {
                    order.push(ring[at].nbr);
                    at = self.slot(v, ring[at].cw);
                }
                order
            })
            .collect()
    }

    fn embed_dfs(&mut self, v: usize) {
        let start = self.out_start[v];
        for idx in start..start + self.out_len[v] {
            let k = self.out[idx];
            let w = self.dst[k];
            if self.parent_edge[w] == k {
                self.add_first(w, v);
                self.left_ref[v] = w;
                self.right_ref[v] = w;
                self.embed_dfs(w);
            } else if self.side[k] == 1 {
                let r = self.right_ref[w];
                self.add_cw(w, v, r);
            } else {
                let l = self.left_ref[w];
                self.add_ccw(w, v, l);
                self.left_ref[w] = v;
            }
        }
    }

    fn slot(&self, v: usize, nbr: usize) -> usize {
        self.ring[v].iter().position(|r| r.nbr == nbr).expect("reference neighbour present in rotation")
    }

    /// Inserts `w` directly clockwise after `reference` around `v`.
    fn add_cw(&mut self, v: usize, w: usize, reference: usize) {
        if reference == NONE || self.ring[v].is_empty() {
            self.ring[v].push(Ring { nbr: w, cw: w, ccw: w });
            self.first[v] = w;
            return;
        }
        let r = self.slot(v, reference);
        let cw_ref = self.ring[v][r].cw;
        let c = self.slot(v, cw_ref);
        self.ring[v][r].cw = w;
        self.ring[v][c].ccw = w;
        self.ring[v].push(Ring { nbr: w, cw: cw_ref, ccw: reference });
    }

    /// Inserts `w` directly counter-clockwise before `reference` around `v`.
    fn add_ccw(&mut self, v: usize, w: usize, reference: usize) {
        if reference == NONE || self.ring[v].is_empty() {
            self.ring[v].push(Ring { nbr: w, cw: w, ccw: w });
            self.first[v] = w;
            return;
        }
        let r = self.slot(v, reference);
        let ccw_ref = self.ring[v][r].ccw;
        self.add_cw(v, w, ccw_ref);
        if reference == self.first[v] {
            self.first[v] = w;
        }
    }

    fn add_first(&mut self, v: usize, w: usize) {
        let reference = if self.ring[v].is_empty() { NONE } else { self.first[v] };
        self.add_ccw(v, w, reference);
    }
}
