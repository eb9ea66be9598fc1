use super::{Graph, Kind, VertexLabel};
use crate::error::{Error, Result};

/// Sunlet graph `S_n`: an `n`-cycle `u0..u{n-1}` with pendant `u'i` on each
/// cycle vertex.
pub fn make_sunlet(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("sunlet needs n >= 3, got {n}")));
    }
    let ring = |i: usize| VertexLabel::plain(format!("u{i}"));
    let pend = |i: usize| VertexLabel::plain(format!("u'{i}"));
    let vertices = (0..n).flat_map(|i| [ring(i), pend(i)]);
    let edges = (0..n).flat_map(|i| [(ring(i), ring((i + 1) % n)), (ring(i), pend(i))]);
    Graph::new(vertices, edges)
}

/// Star `K_{1,m}` with centre `v0` and leaves `v1..vm`.
pub fn make_star(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("star needs m >= 1, got {m}")));
    }
    let v = |j: usize| VertexLabel::plain(format!("v{j}"));
    Graph::new((0..=m).map(v), (1..=m).map(|j| (v(0), v(j))))
}

pub fn make_path(vertices: usize) -> Result<Graph> {
    if vertices < 1 {
        return Err(Error::InvalidParameter("path needs at least one vertex".into()));
    }
    let p = |i: usize| VertexLabel::plain(format!("p{i}"));
    Graph::new((0..vertices).map(p), (1..vertices).map(|i| (p(i - 1), p(i))))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let c = |i: usize| VertexLabel::plain(format!("c{i}"));
    Graph::new((0..n).map(c), (0..n).map(|i| (c(i), c((i + 1) % n))))
}

pub fn make_complete(n: usize) -> Result<Graph> {
    make_complete_multipartite(&vec![1; n])
}

/// Complete multipartite graph, e.g. `[3, 3]` is `K_{3,3}` and `[1, 3, 3]`
/// is `K_{1,3,3}`.
pub fn make_complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidParameter("parts must be nonempty and positive".into()));
    }
    let mut vertices = Vec::new();
    let mut part_of = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        for k in 0..size {
            vertices.push(VertexLabel::plain(format!("k{p}_{k}")));
            part_of.push(p);
        }
    }
    let mut edges = Vec::new();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            if part_of[a] != part_of[b] {
                edges.push((vertices[a].clone(), vertices[b].clone()));
            }
        }
    }
    Graph::new(vertices, edges)
}

/// Cartesian product `g □ h`. Labels are plain `"(a,b)"` pairs.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(Error::InvalidParameter("product factors must be nonempty".into()));
    }
    let pair = |a: usize, x: usize| VertexLabel::plain(format!("({},{})", g.label(a).name(), h.label(x).name()));
    let mut vertices = Vec::with_capacity(g.vertex_count() * h.vertex_count());
    for a in 0..g.vertex_count() {
        for x in 0..h.vertex_count() {
            vertices.push(pair(a, x));
        }
    }
    let mut edges = Vec::new();
    for a in 0..g.vertex_count() {
        for &(x, y) in h.edges() {
            edges.push((pair(a, x), pair(a, y)));
        }
    }
    for x in 0..h.vertex_count() {
        for &(a, b) in g.edges() {
            edges.push((pair(a, x), pair(b, x)));
        }
    }
    Graph::new(vertices, edges)
}

/// `S_n □ K_{1,m}` with structured labels: `(j, i, Ring)` is `(v_j, u_i)` and
/// `(j, i, Pendant)` is `(v_j, u'_i)`.
pub fn sunlet_star(n: usize, m: usize) -> Result<Graph> {
    check_sunlet_star(n, m)?;
    let mut vertices = Vec::with_capacity(2 * n * (m + 1));
    let mut edges = Vec::with_capacity(2 * n * (2 * m + 1));
    for i in 0..n {
        for j in 0..=m {
            for kind in [Kind::Ring, Kind::Pendant] {
                vertices.push(VertexLabel::Product { star: j, ring: i, kind });
            }
            // sunlet edges inside star copy j
            edges.push((VertexLabel::ring(j, i), VertexLabel::ring(j, (i + 1) % n)));
            edges.push((VertexLabel::ring(j, i), VertexLabel::pendant(j, i)));
        }
        // star edges inside sunlet copies u_i and u'_i
        for j in 1..=m {
            edges.push((VertexLabel::ring(0, i), VertexLabel::ring(j, i)));
            edges.push((VertexLabel::pendant(0, i), VertexLabel::pendant(j, i)));
        }
    }
    Graph::new(vertices, edges)
}

pub(crate) fn check_sunlet_star(n: usize, m: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be >= 3, got {n}")));
    }
    if m < 1 {
        return Err(Error::InvalidParameter(format!("m must be >= 1, got {m}")));
    }
    Ok(())
}

/// Reads `(n, m)` back off a graph with product labels, if it is exactly
/// `sunlet_star(n, m)`.
pub fn sunlet_star_params(g: &Graph) -> Option<(usize, usize)> {
    let mut n = 0;
    let mut m = 0;
    for l in g.labels() {
        match l {
            VertexLabel::Product { star, ring, .. } => {
                m = m.max(*star);
                n = n.max(*ring + 1);
            }
            VertexLabel::Plain(_) => return None,
        }
    }
    let expected = sunlet_star(n, m).ok()?;
    (expected == *g).then_some((n, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sunlet_counts() {
        let g = make_sunlet(6).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 12);
        let d = g.degree_sequence();
        assert_eq!(d.iter().filter(|&&x| x == 3).count(), 6);
        assert_eq!(d.iter().filter(|&&x| x == 1).count(), 6);
        let g = make_sunlet(3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        assert!(matches!(make_sunlet(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn star_counts() {
        assert_eq!(make_star(3).unwrap().degree_sequence(), vec![3, 1, 1, 1]);
        let k11 = make_star(1).unwrap();
        assert_eq!((k11.vertex_count(), k11.edge_count()), (2, 1));
        assert!(make_star(0).is_err());
    }

    #[test]
    fn product_counts() {
        let p = cartesian_product(&make_sunlet(6).unwrap(), &make_star(1).unwrap()).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (24, 36));
        let p = cartesian_product(&make_sunlet(3).unwrap(), &make_star(2).unwrap()).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (18, 30));
        let k2 = make_path(2).unwrap();
        let sq = cartesian_product(&k2, &k2).unwrap();
        assert!(super::super::is_isomorphic(&sq, &make_cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn sunlet_star_counts() {
        for n in 3..=12 {
            for m in 1..=8 {
                let g = sunlet_star(n, m).unwrap();
                assert_eq!(g.vertex_count(), 2 * n * (m + 1));
                assert_eq!(g.edge_count(), 2 * n * (2 * m + 1));
            }
        }
        assert!(sunlet_star(2, 1).is_err());
        assert!(sunlet_star(3, 0).is_err());
        let g = sunlet_star(3, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (24, 42));
        assert_eq!(sunlet_star_params(&g), Some((3, 3)));
    }

    #[test]
    fn sunlet_star_matches_generic_product() {
        for (n, m) in [(3, 1), (3, 2), (4, 2), (3, 3)] {
            let a = sunlet_star(n, m).unwrap();
            let b = cartesian_product(&make_sunlet(n).unwrap(), &make_star(m).unwrap()).unwrap();
            assert!(super::super::is_isomorphic(&a, &b).unwrap(), "n={n} m={m}");
        }
    }

    #[test]
    fn label_round_trip() {
        for l in [VertexLabel::ring(3, 11), VertexLabel::pendant(0, 2), VertexLabel::plain("(u0:~:x,v1:~:x)")] {
            assert_eq!(l.to_string().parse::<VertexLabel>().unwrap(), l);
        }
        assert!("3:4:q".parse::<VertexLabel>().is_err());
    }
}
