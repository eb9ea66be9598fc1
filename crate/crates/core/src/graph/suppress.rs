use std::collections::BTreeSet;

use super::Graph;

/// Why suppression left a degree-2 vertex in place.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuppressionStop {
    /// Both edges of the vertex go to the same neighbour.
    WouldCreateLoop,
    /// The two neighbours are already adjacent.
    WouldCreateParallel,
}

#[derive(Clone, Debug)]
pub struct Suppression {
    pub graph: Graph,
    /// Empty when every degree-2 vertex was removed.
    pub stopped: Vec<SuppressionStop>,
}

impl Suppression {
    pub fn is_complete(&self) -> bool {
        self.stopped.is_empty()
    }
}

/// Repeatedly replaces a degree-2 vertex and its two edges by a single edge.
/// A step that would produce a loop or a parallel edge is refused and
/// reported; the vertex is then kept.
pub fn suppress_degree_two(g: &Graph) -> Suppression {
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive[v] || adj[v].len() != 2 {
                continue;
            }
            let mut it = adj[v].iter().copied();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            if adj[a].contains(&b) {
                continue;
            }
            adj[a].remove(&v);
            adj[b].remove(&v);
            adj[a].insert(b);
            adj[b].insert(a);
            adj[v].clear();
            alive[v] = false;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    // a simple graph cannot hold a 2-loop, so only parallel refusals remain
    let stopped: Vec<SuppressionStop> =
        (0..n).filter(|&v| alive[v] && adj[v].len() == 2).map(|_| SuppressionStop::WouldCreateParallel).collect();
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let mut new_index = vec![usize::MAX; n];
    for (k, &v) in keep.iter().enumerate() {
        new_index[v] = k;
    }
    let labels = keep.iter().map(|&v| g.label(v).clone()).collect();
    let mut edges = Vec::new();
    for &v in &keep {
        for &w in &adj[v] {
            if v < w {
                edges.push((new_index[v], new_index[w]));
            }
        }
    }
    let graph = Graph::from_indexed(labels, &edges).expect("suppression keeps the graph simple");
    Suppression { graph, stopped }
}
