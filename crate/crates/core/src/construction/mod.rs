//! Closed-form bounds and the explicit drawing of `S_n □ K_{1,m}` with
//! `n·m(m−1)/2` crossings.
//!
//! The drawing is laid out on a strip with column `i` at `X = i` and star row
//! `v_j` at a fixed height, then wrapped onto an annulus. Leaves `v_1..v_c`
//! (`c = ⌈m/2⌉`) sit above the centre row, the remaining `⌊m/2⌋` below. Star
//! edges of column `i` bend left into the gap `(i−1, i)`; the pendant copy
//! `(v_0, u'_i)` sits in the gap `(i, i+1)` just above the centre row and
//! its edges bend right.

use std::f64::consts::TAU;

use crate::drawing::{geometric_to_combinatorial, CombinatorialDrawing, GeometricDrawing, Point};
use crate::error::Result;
use crate::graph::{check_sunlet_star, sunlet_star, Graph, VertexLabel};

/// Pieces per unit of strip `X` when bending segments onto the annulus.
/// Prime so that breakpoints avoid the offsets used below.
const PIECES: usize = 37;

/// `U(n, m) = n·m(m−1)/2`.
pub fn upper_bound(n: usize, m: usize) -> Result<usize> {
    check_sunlet_star(n, m)?;
    Ok(n * m * (m - 1) / 2)
}

/// Crossings of the ring part `C_n □ K_{1,m}`: `n·⌊m/2⌋·⌊(m−1)/2⌋`.
pub fn ring_crossing_count(n: usize, m: usize) -> Result<usize> {
    check_sunlet_star(n, m)?;
    Ok(n * (m / 2) * ((m - 1) / 2))
}

/// Left side of the closed form: `⌊m/2⌋·(⌊(m−1)/2⌋ + ⌈m/2⌉)`.
pub fn per_section_closed_form(m: u64) -> u64 {
    (m / 2) * ((m - 1) / 2 + m.div_ceil(2))
}

struct Layout {
    n: usize,
    m: usize,
    outside: usize,
    inside: usize,
}

impl Layout {
    fn new(n: usize, m: usize) -> Self {
        let outside = m.div_ceil(2);
        Layout { n, m, outside, inside: m - outside }
    }

    /// Signed row of star vertex `v_j`.
    fn row(&self, j: usize) -> f64 {
        if j == 0 {
            0.0
        } else if j <= self.outside {
            j as f64
        } else {
            -((j - self.outside) as f64)
        }
    }

    fn deepest(&self) -> usize {
        self.outside.max(self.inside)
    }

    /// Left offset of the bend of a star edge to row `k ≥ 2`.
    fn delta(&self, k: usize) -> f64 {
        0.08 + 0.3 * (k - 1) as f64 / self.deepest() as f64 + 0.00731
    }

    /// Right offset of the pendant-copy edge to row `k ≥ 1`.
    fn epsilon(&self, k: usize) -> f64 {
        0.06 + 0.25 * k as f64 / (self.deepest() + 1) as f64 + 0.00419
    }

    /// Radial spacing between rows, keeping the innermost row off the centre.
    fn spacing(&self) -> f64 {
        1.0 / (self.inside as f64 + 1.0)
    }

    fn map(&self, p: Point) -> Point {
        let theta = TAU * p.x / self.n as f64;
        let rho = 1.0 + p.y * self.spacing();
        Point::new(rho * theta.cos(), rho * theta.sin())
    }

    /// Maps a strip polyline onto the annulus, subdividing every segment
    /// that is not radial.
    fn bend(&self, strip: &[Point]) -> Vec<Point> {
        let mut out = vec![self.map(strip[0])];
        for w in strip.windows(2) {
            let dx = (w[1].x - w[0].x).abs();
            let pieces = if dx == 0.0 { 1 } else { ((dx * PIECES as f64).ceil() as usize).max(2) };
            for t in 1..=pieces {
                let s = t as f64 / pieces as f64;
                out.push(self.map(Point::new(w[0].x + (w[1].x - w[0].x) * s, w[0].y + (w[1].y - w[0].y) * s)));
            }
        }
        out
    }

    /// Strip path of the star edge `(v_0,u_i)–(v_j,u_i)`.
    fn star_edge(&self, i: usize, j: usize) -> Vec<Point> {
        let x = i as f64;
        let r = self.row(j);
        let k = r.abs() as usize;
        if k == 1 {
            return vec![Point::new(x, 0.0), Point::new(x, r)];
        }
        let s = r.signum();
        let bx = x - self.delta(k);
        vec![Point::new(x, 0.0), Point::new(bx, 0.5 * s), Point::new(bx, s * (k as f64 - 0.5)), Point::new(x, r)]
    }

    fn extension_point(&self, i: usize) -> Point {
        Point::new(i as f64 + 0.5, 0.25)
    }

    /// Strip path from `(v_0,u'_i)` to `(v_j,u_i)`, `j ≥ 1`; the
    /// subdivision vertex `(v_j,u'_i)` sits on its first segment.
    fn extension_edge(&self, i: usize, j: usize) -> (Point, Vec<Point>) {
        let x = i as f64;
        let r = self.row(j);
        let k = r.abs() as usize;
        let s = r.signum();
        let w = self.extension_point(i);
        let bend = Point::new(x + self.epsilon(k), 0.5 * s);
        let sub = Point::new(w.x + (bend.x - w.x) * 0.3, w.y + (bend.y - w.y) * 0.3);
        let mut rest = vec![sub, bend];
        if k > 1 {
            rest.push(Point::new(bend.x, s * (k as f64 - 0.5)));
        }
        rest.push(Point::new(x, r));
        (sub, rest)
    }
}

struct Builder<'a> {
    layout: &'a Layout,
    base: Graph,
    coords: Vec<Option<Point>>,
    polylines: Vec<Vec<Point>>,
}

impl<'a> Builder<'a> {
    fn new(layout: &'a Layout, base: Graph) -> Self {
        let (v, e) = (base.vertex_count(), base.edge_count());
        Builder { layout, base, coords: vec![None; v], polylines: vec![Vec::new(); e] }
    }

    fn place(&mut self, l: &VertexLabel, strip: Point) {
        let v = self.base.index_of(l).expect("label in base graph");
        self.coords[v] = Some(self.layout.map(strip));
    }

    fn edge(&mut self, a: &VertexLabel, b: &VertexLabel, strip: &[Point]) {
        let e = self.base.edge_by_labels(a, b).expect("edge in base graph");
        let mut poly = self.layout.bend(strip);
        let (ia, ib) = (self.base.index_of(a).unwrap(), self.base.index_of(b).unwrap());
        // snap the ends onto the vertices so wrap-around edges close exactly
        let (ca, cb) = (self.coords[ia].unwrap(), self.coords[ib].unwrap());
        *poly.first_mut().unwrap() = ca;
        *poly.last_mut().unwrap() = cb;
        if ia > ib {
            poly.reverse();
        }
        self.polylines[e] = poly;
    }

    fn finish(self) -> GeometricDrawing {
        GeometricDrawing {
            base: self.base,
            coords: self.coords.into_iter().map(|c| c.expect("every vertex placed")).collect(),
            polylines: self.polylines,
        }
    }
}

/// `C_n □ K_{1,m}` with labels `(v_j, u_i)`.
pub fn ring_graph(n: usize, m: usize) -> Result<Graph> {
    check_sunlet_star(n, m)?;
    let vertices = (0..n).flat_map(|i| (0..=m).map(move |j| VertexLabel::ring(j, i)));
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..=m {
            edges.push((VertexLabel::ring(j, i), VertexLabel::ring(j, (i + 1) % n)));
        }
        for j in 1..=m {
            edges.push((VertexLabel::ring(0, i), VertexLabel::ring(j, i)));
        }
    }
    Graph::new(vertices, edges)
}

fn place_ring(b: &mut Builder<'_>) {
    let (n, m) = (b.layout.n, b.layout.m);
    for i in 0..n {
        for j in 0..=m {
            b.place(&VertexLabel::ring(j, i), Point::new(i as f64, b.layout.row(j)));
        }
    }
    for i in 0..n {
        let x = i as f64;
        for j in 0..=m {
            let y = b.layout.row(j);
            let path = [Point::new(x, y), Point::new(x + 1.0, y)];
            b.edge(&VertexLabel::ring(j, i), &VertexLabel::ring(j, (i + 1) % n), &path);
        }
        for j in 1..=m {
            let path = b.layout.star_edge(i, j);
            b.edge(&VertexLabel::ring(0, i), &VertexLabel::ring(j, i), &path);
        }
    }
}

/// Geometric realization of the ring drawing on the annulus.
pub fn ring_geometry(n: usize, m: usize) -> Result<GeometricDrawing> {
    let layout = Layout::new(n, m);
    let mut b = Builder::new(&layout, ring_graph(n, m)?);
    place_ring(&mut b);
    Ok(b.finish())
}

/// Geometric realization of the full construction on the annulus.
pub fn sunlet_geometry(n: usize, m: usize) -> Result<GeometricDrawing> {
    let layout = Layout::new(n, m);
    let mut b = Builder::new(&layout, sunlet_star(n, m)?);
    place_ring(&mut b);
    for i in 0..n {
        let w = VertexLabel::pendant(0, i);
        let wp = layout.extension_point(i);
        b.place(&w, wp);
        b.edge(&w, &VertexLabel::ring(0, i), &[wp, Point::new(i as f64, 0.0)]);
        for j in 1..=m {
            let (sub, rest) = layout.extension_edge(i, j);
            let p = VertexLabel::pendant(j, i);
            b.place(&p, sub);
            b.edge(&w, &p, &[wp, sub]);
            b.edge(&p, &VertexLabel::ring(j, i), &rest);
        }
    }
    Ok(b.finish())
}

/// Drawing of `C_n □ K_{1,m}` with `ring_crossing_count(n, m)` crossings.
pub fn construct_ring_drawing(n: usize, m: usize) -> Result<CombinatorialDrawing> {
    geometric_to_combinatorial(&ring_geometry(n, m)?)
}

/// Drawing of `S_n □ K_{1,m}` with `upper_bound(n, m)` crossings.
pub fn construct_sunlet_drawing(n: usize, m: usize) -> Result<CombinatorialDrawing> {
    geometric_to_combinatorial(&sunlet_geometry(n, m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::crossing_count;
    use crate::error::Error;
    use crate::graph::is_isomorphic;

    #[test]
    fn closed_forms() {
        assert_eq!(upper_bound(3, 3).unwrap(), 9);
        assert_eq!(upper_bound(5, 2).unwrap(), 5);
        for n in 3..20 {
            assert_eq!(upper_bound(n, 1).unwrap(), 0);
            assert_eq!(ring_crossing_count(n, 2).unwrap(), 0);
        }
        assert_eq!(ring_crossing_count(6, 3).unwrap(), 6);
        assert_eq!(ring_crossing_count(4, 5).unwrap(), 16);
        assert_eq!(ring_crossing_count(3, 4).unwrap(), 6);
        assert!(matches!(upper_bound(2, 3), Err(Error::InvalidParameter(_))));
        assert!(matches!(ring_crossing_count(3, 0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn closed_form_identity() {
        for m in 1..=10_000u64 {
            assert_eq!(per_section_closed_form(m), m * (m - 1) / 2, "m = {m}");
        }
    }

    #[test]
    fn ring_drawing_counts() {
        for n in 3..=8 {
            for m in 1..=7 {
                let d = construct_ring_drawing(n, m).unwrap();
                assert_eq!(crossing_count(&d).unwrap(), ring_crossing_count(n, m).unwrap(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn sunlet_drawing_examples() {
        let d = construct_sunlet_drawing(6, 3).unwrap();
        assert_eq!(crossing_count(&d).unwrap(), 18);
        assert_eq!(crossing_count(&construct_sunlet_drawing(6, 1).unwrap()).unwrap(), 0);
        assert_eq!(crossing_count(&construct_sunlet_drawing(3, 3).unwrap()).unwrap(), 9);
        assert_eq!(crossing_count(&construct_sunlet_drawing(3, 2).unwrap()).unwrap(), 3);
    }

    #[test]
    fn full_range_matches_upper_bound() {
        for n in 3..=10 {
            for m in 1..=8 {
                let d = construct_sunlet_drawing(n, m).unwrap();
                assert_eq!(crossing_count(&d).unwrap(), upper_bound(n, m).unwrap(), "n={n} m={m}");
                assert!(is_isomorphic(&d.base, &sunlet_star(n, m).unwrap()).unwrap());
            }
        }
    }
}
