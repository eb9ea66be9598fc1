//! Straight-segment polyline drawings and their conversion to the
//! combinatorial form.

use std::collections::BTreeMap;

use super::{drawing_from_parts, planarization_from_orders, CombinatorialDrawing};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    fn lerp(self, o: Point, t: f64) -> Point {
        Point::new(self.x + (o.x - self.x) * t, self.y + (o.y - self.y) * t)
    }
}

/// Vertex coordinates plus one polyline per edge, running from the edge's
/// smaller endpoint to its larger one.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricDrawing {
    pub base: Graph,
    pub coords: Vec<Point>,
    pub polylines: Vec<Vec<Point>>,
}

struct Hit {
    edges: (usize, usize),
    seg: (usize, usize),
    point: Point,
    arc: (f64, f64),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Contact {
    None,
    Proper,
    Degenerate,
}

fn side(a: Point, b: Point, c: Point) -> i8 {
    let ab = b.sub(a);
    let ac = c.sub(a);
    let v = ab.cross(ac);
    let tol = 1e-12 * ab.norm() * ac.norm();
    if v > tol {
        1
    } else if v < -tol {
        -1
    } else {
        0
    }
}

fn classify(a: Point, b: Point, c: Point, d: Point) -> Contact {
    let (o1, o2, o3, o4) = (side(a, b, c), side(a, b, d), side(c, d, a), side(c, d, b));
    if o1 * o2 > 0 || o3 * o4 > 0 {
        return Contact::None;
    }
    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return Contact::Proper;
    }
    if o1 == 0 && o2 == 0 {
        // collinear: disjoint projections mean no contact
        let dir = b.sub(a);
        let len2 = dir.dot(dir);
        let (tc, td) = (c.sub(a).dot(dir) / len2, d.sub(a).dot(dir) / len2);
        if tc.max(td) < 0.0 || tc.min(td) > 1.0 {
            return Contact::None;
        }
    }
    Contact::Degenerate
}

fn intersection_param(a: Point, b: Point, c: Point, d: Point) -> f64 {
    let r = b.sub(a);
    let s = d.sub(c);
    c.sub(a).cross(s) / r.cross(s)
}

#[derive(Clone, Copy)]
struct BBox {
    lo: Point,
    hi: Point,
}

impl BBox {
    fn of(points: &[Point]) -> BBox {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        BBox { lo, hi }
    }

    fn overlaps(&self, o: &BBox, eps: f64) -> bool {
        self.lo.x <= o.hi.x + eps && o.lo.x <= self.hi.x + eps && self.lo.y <= o.hi.y + eps && o.lo.y <= self.hi.y + eps
    }
}

fn close(p: Point, q: Point, eps: f64) -> bool {
    p.sub(q).norm() <= eps
}

/// Finds all proper crossings and derives edge orders and rotations from
/// local geometry. Degenerate contacts are rejected with a general-position
/// error that names the edges involved.
pub fn geometric_to_combinatorial(g: &GeometricDrawing) -> Result<CombinatorialDrawing> {
    let base = &g.base;
    if g.coords.len() != base.vertex_count() || g.polylines.len() != base.edge_count() {
        return Err(Error::GeneralPosition("coordinate or polyline count does not match the graph".into()));
    }
    let all = BBox::of(&g.coords);
    let scale = (all.hi.x - all.lo.x).max(all.hi.y - all.lo.y).max(1.0);
    let eps = 1e-9 * scale;

    for (e, &(u, v)) in base.edges().iter().enumerate() {
        let poly = &g.polylines[e];
        if poly.len() < 2 || !close(poly[0], g.coords[u], eps) || !close(*poly.last().unwrap(), g.coords[v], eps) {
            return Err(Error::GeneralPosition(format!(
                "polyline of {} does not join its endpoints",
                base.edge_key(e)
            )));
        }
        for w in poly.windows(2) {
            if close(w[0], w[1], eps) {
                return Err(Error::GeneralPosition(format!("zero-length segment on {}", base.edge_key(e))));
            }
        }
    }
    for a in 0..base.vertex_count() {
        for b in a + 1..base.vertex_count() {
            if close(g.coords[a], g.coords[b], eps) {
                return Err(Error::GeneralPosition(format!(
                    "vertices {} and {} coincide",
                    base.label(a),
                    base.label(b)
                )));
            }
        }
    }

    // arc length at the start of every segment
    let arcs: Vec<Vec<f64>> = g
        .polylines
        .iter()
        .map(|p| {
            let mut acc = 0.0;
            let mut out = Vec::with_capacity(p.len());
            for w in p.windows(2) {
                out.push(acc);
                acc += w[1].sub(w[0]).norm();
            }
            out
        })
        .collect();
    let boxes: Vec<BBox> = g.polylines.iter().map(|p| BBox::of(p)).collect();

    let mut hits: Vec<Hit> = Vec::new();
    for e in 0..base.edge_count() {
        check_self(g, e)?;
        for f in e + 1..base.edge_count() {
            if !boxes[e].overlaps(&boxes[f], eps) {
                continue;
            }
            scan_pair(g, e, f, &arcs, eps, &mut hits)?;
        }
    }

    // triple points
    let mut by_x: Vec<usize> = (0..hits.len()).collect();
    by_x.sort_by(|&a, &b| hits[a].point.x.total_cmp(&hits[b].point.x));
    for (k, &a) in by_x.iter().enumerate() {
        for &b in &by_x[k + 1..] {
            if hits[b].point.x - hits[a].point.x > eps {
                break;
            }
            if close(hits[a].point, hits[b].point, eps) {
                let (ha, hb) = (&hits[a], &hits[b]);
                return Err(Error::GeneralPosition(format!(
                    "more than two edges cross at one point: {}, {}, {}, {}",
                    base.edge_key(ha.edges.0),
                    base.edge_key(ha.edges.1),
                    base.edge_key(hb.edges.0),
                    base.edge_key(hb.edges.1)
                )));
            }
        }
    }

    let mut seen_pairs = BTreeMap::new();
    for h in &hits {
        let (e, f) = h.edges;
        if base.edges_share_endpoint(e, f) {
            return Err(Error::BadCrossing(format!(
                "edges {} and {} share an endpoint and cross",
                base.edge_key(e),
                base.edge_key(f)
            )));
        }
        if seen_pairs.insert(h.edges, ()).is_some() {
            return Err(Error::BadCrossing(format!(
                "edges {} and {} cross more than once",
                base.edge_key(e),
                base.edge_key(f)
            )));
        }
    }

    hits.sort_by(|a, b| a.edges.cmp(&b.edges).then(a.arc.0.total_cmp(&b.arc.0)));
    let pairs: Vec<(usize, usize)> = hits.iter().map(|h| h.edges).collect();
    let mut along: Vec<Vec<(f64, usize)>> = vec![Vec::new(); base.edge_count()];
    for (p, h) in hits.iter().enumerate() {
        along[h.edges.0].push((h.arc.0, p));
        along[h.edges.1].push((h.arc.1, p));
    }
    let orders: Vec<Vec<usize>> = along
        .into_iter()
        .map(|mut list| {
            list.sort_by(|a, b| a.0.total_cmp(&b.0));
            list.into_iter().map(|(_, p)| p).collect()
        })
        .collect();
    let pz = planarization_from_orders(base, hits.len(), &orders);

    let n = base.vertex_count();
    let mut spokes: Vec<Vec<(f64, usize)>> = vec![Vec::new(); pz.vertex_count];
    for (e, &(u, v)) in base.edges().iter().enumerate() {
        let poly = &g.polylines[e];
        let path = &pz.paths[e];
        let out_u = poly[1].sub(poly[0]);
        let out_v = poly[poly.len() - 2].sub(poly[poly.len() - 1]);
        spokes[u].push((out_u.y.atan2(out_u.x), path[1]));
        spokes[v].push((out_v.y.atan2(out_v.x), path[path.len() - 2]));
    }
    for (p, h) in hits.iter().enumerate() {
        let x = n + p;
        for (which, e) in [(0, h.edges.0), (1, h.edges.1)] {
            let s = if which == 0 { h.seg.0 } else { h.seg.1 };
            let poly = &g.polylines[e];
            let dir = poly[s + 1].sub(poly[s]);
            let path = &pz.paths[e];
            let at = path.iter().position(|&y| y == x).unwrap();
            spokes[x].push((dir.y.atan2(dir.x), path[at + 1]));
            spokes[x].push(((-dir.y).atan2(-dir.x), path[at - 1]));
        }
    }
    let mut rotations = Vec::with_capacity(pz.vertex_count);
    for (k, mut list) in spokes.into_iter().enumerate() {
        list.sort_by(|a, b| a.0.total_cmp(&b.0));
        for w in list.windows(2) {
            if (w[1].0 - w[0].0).abs() < 1e-12 {
                let name = if k < n { base.label(k).to_string() } else { format!("crossing {}", k - n) };
                return Err(Error::GeneralPosition(format!("overlapping edges leave {name} in the same direction")));
            }
        }
        rotations.push(list.into_iter().map(|(_, w)| w).collect());
    }
    Ok(drawing_from_parts(base, &pairs, &orders, rotations))
}

fn check_self(g: &GeometricDrawing, e: usize) -> Result<()> {
    let poly = &g.polylines[e];
    let segs = poly.len() - 1;
    for s in 0..segs {
        for t in s + 1..segs {
            let (a, b, c, d) = (poly[s], poly[s + 1], poly[t], poly[t + 1]);
            let contact = classify(a, b, c, d);
            if t == s + 1 {
                // consecutive segments meet at the breakpoint; only a fold back is wrong
                let back = b.sub(a).dot(d.sub(c)) < 0.0 && side(a, b, d) == 0;
                if back {
                    return Err(Error::GeneralPosition(format!("{} folds back on itself", g.base.edge_key(e))));
                }
                continue;
            }
            match contact {
                Contact::None => {}
                Contact::Proper => {
                    return Err(Error::BadCrossing(format!("edge {} crosses itself", g.base.edge_key(e))))
                }
                Contact::Degenerate => {
                    return Err(Error::GeneralPosition(format!("edge {} touches itself", g.base.edge_key(e))))
                }
            }
        }
    }
    Ok(())
}

fn scan_pair(g: &GeometricDrawing, e: usize, f: usize, arcs: &[Vec<f64>], eps: f64, hits: &mut Vec<Hit>) -> Result<()> {
    let base = &g.base;
    let (pe, pf) = (&g.polylines[e], &g.polylines[f]);
    let (eu, ev) = base.edges()[e];
    let (fu, fv) = base.edges()[f];
    // common endpoint, if any
    let shared = [eu, ev].into_iter().find(|&w| w == fu || w == fv);
    for s in 0..pe.len() - 1 {
        let (a, b) = (pe[s], pe[s + 1]);
        let sb = BBox::of(&[a, b]);
        for t in 0..pf.len() - 1 {
            let (c, d) = (pf[t], pf[t + 1]);
            if !sb.overlaps(&BBox::of(&[c, d]), eps) {
                continue;
            }
            match classify(a, b, c, d) {
                Contact::None => {}
                Contact::Proper => {
                    let tp = intersection_param(a, b, c, d);
                    let point = a.lerp(b, tp);
                    let arc_e = arcs[e][s] + point.sub(a).norm();
                    let arc_f = arcs[f][t] + point.sub(c).norm();
                    hits.push(Hit { edges: (e, f), seg: (s, t), point, arc: (arc_e, arc_f) });
                }
                Contact::Degenerate => {
                    if let Some(w) = shared {
                        let p = g.coords[w];
                        let at_vertex_e = (s == 0 && w == eu) || (s == pe.len() - 2 && w == ev);
                        let at_vertex_f = (t == 0 && w == fu) || (t == pf.len() - 2 && w == fv);
                        let collinear = side(a, b, c) == 0 && side(a, b, d) == 0;
                        let touches_p = close(a, p, eps) || close(b, p, eps);
                        if at_vertex_e && at_vertex_f && touches_p && !overlapping_at(a, b, c, d, p, eps, collinear) {
                            continue;
                        }
                    }
                    return Err(Error::GeneralPosition(format!(
                        "edges {} and {} meet degenerately (touching, overlap or through a vertex)",
                        base.edge_key(e),
                        base.edge_key(f)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Whether two segments sharing endpoint `p` overlap or meet elsewhere.
fn overlapping_at(a: Point, b: Point, c: Point, d: Point, p: Point, eps: f64, collinear: bool) -> bool {
    let other_e = if close(a, p, eps) { b } else { a };
    let other_f = if close(c, p, eps) { d } else { c };
    if collinear {
        return other_e.sub(p).dot(other_f.sub(p)) > 0.0;
    }
    // the far ends must not lie on the other segment
    side(c, d, other_e) == 0 && within(c, d, other_e) || side(a, b, other_f) == 0 && within(a, b, other_f)
}

fn within(a: Point, b: Point, q: Point) -> bool {
    let dir = b.sub(a);
    let t = q.sub(a).dot(dir) / dir.dot(dir);
    (0.0..=1.0).contains(&t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::validate_good_drawing;
    use crate::graph::VertexLabel;

    fn two_edges(p: [(f64, f64); 4]) -> GeometricDrawing {
        let l = |s: &str| VertexLabel::plain(s);
        let base = Graph::new([l("a"), l("b"), l("c"), l("d")], [(l("a"), l("c")), (l("b"), l("d"))]).unwrap();
        let coords: Vec<Point> = p.iter().map(|&(x, y)| Point::new(x, y)).collect();
        let polylines = base.edges().iter().map(|&(u, v)| vec![coords[u], coords[v]]).collect();
        GeometricDrawing { base, coords, polylines }
    }

    #[test]
    fn two_segments_cross_once() {
        let g = two_edges([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let d = geometric_to_combinatorial(&g).unwrap();
        assert_eq!(d.crossings.len(), 1);
        assert!(validate_good_drawing(&d).is_valid());
    }

    #[test]
    fn triple_point_rejected() {
        let l = |s: &str| VertexLabel::plain(s);
        let names = ["a", "b", "c", "d", "e", "f"];
        let base =
            Graph::new(names.iter().map(|s| l(s)), [(l("a"), l("b")), (l("c"), l("d")), (l("e"), l("f"))]).unwrap();
        let pos = [(-1.0, 0.0), (1.0, 0.0), (0.0, -1.0), (0.0, 1.0), (-1.0, -1.0), (1.0, 1.0)];
        let coords: Vec<Point> = pos.iter().map(|&(x, y)| Point::new(x, y)).collect();
        let polylines = base.edges().iter().map(|&(u, v)| vec![coords[u], coords[v]]).collect();
        let err = geometric_to_combinatorial(&GeometricDrawing { base, coords, polylines }).unwrap_err();
        assert!(matches!(err, Error::GeneralPosition(_)), "{err}");
    }

    #[test]
    fn touching_rejected() {
        // b-d passes exactly through c
        let g = two_edges([(0.0, 0.0), (1.0, -1.0), (1.0, 1.0), (1.0, 2.0)]);
        assert!(matches!(geometric_to_combinatorial(&g), Err(Error::GeneralPosition(_))));
    }
}
