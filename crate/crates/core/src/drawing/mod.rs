//! Drawings: combinatorial (crossings + planarization rotation) and
//! geometric (coordinates + polylines), the good-drawing validator and the
//! crossing ledger `cr_D(A)`, `cr_D(A, B)`.

mod geometry;
mod ledger;
mod svg;

pub use geometry::{geometric_to_combinatorial, GeometricDrawing, Point};
pub use ledger::{crossings_between, crossings_on, crossings_within, CrossingLedger, EdgeSet};
pub use svg::{export_svg, import_svg, render_svg, SvgSource};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};
use crate::planarity::validate_rotation;

/// A crossing between two base edges, by edge index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrossingSpec {
    pub id: usize,
    pub edges: (usize, usize),
}

impl CrossingSpec {
    pub fn new(id: usize, e: usize, f: usize) -> Self {
        CrossingSpec { id, edges: (e.min(f), e.max(f)) }
    }

    pub fn involves(&self, e: usize) -> bool {
        self.edges.0 == e || self.edges.1 == e
    }
}

/// A drawing up to plane isotopy. Planarization vertex `k < V` is base
/// vertex `k`; vertex `V + p` is the dummy of `crossings[p]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialDrawing {
    pub base: Graph,
    pub crossings: Vec<CrossingSpec>,
    /// Crossing ids along each crossed edge, walking from its smaller
    /// endpoint.
    pub edge_orders: BTreeMap<usize, Vec<usize>>,
    /// Rotation of every planarization vertex, as planarization indices.
    pub rotations: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    UnknownEdge,
    DuplicateId,
    SelfCrossing,
    SharedEndpoint,
    RepeatedPair,
    EdgeOrderMismatch,
    RotationMismatch,
    NonTransversal,
    NotPlane,
}

impl ViolationKind {
    pub fn describe(&self) -> &'static str {
        match self {
            ViolationKind::UnknownEdge => "crossing refers to an unknown edge",
            ViolationKind::DuplicateId => "crossing id used twice",
            ViolationKind::SelfCrossing => "edge crosses itself",
            ViolationKind::SharedEndpoint => "edges which share an endpoint cross",
            ViolationKind::RepeatedPair => "edges have more than one point in common",
            ViolationKind::EdgeOrderMismatch => "edge orders disagree with crossing list",
            ViolationKind::RotationMismatch => "rotation does not match planarization",
            ViolationKind::NonTransversal => "edges touch instead of crossing at a dummy vertex",
            ViolationKind::NotPlane => "not a plane embedding",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind.describe(), self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub genus: Option<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    fn push(&mut self, kind: ViolationKind, detail: String) {
        self.violations.push(Violation { kind, detail });
    }
}

/// Index graph of a planarization plus, for each base edge, its path of
/// planarization vertices from the smaller endpoint.
#[derive(Clone, Debug)]
pub struct Planarization {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub paths: Vec<Vec<usize>>,
}

/// Builds the planarization with every base edge split at its crossings in
/// the given order (positions into `crossings`).
pub(crate) fn planarization_from_orders(base: &Graph, crossing_count: usize, orders: &[Vec<usize>]) -> Planarization {
    let v = base.vertex_count();
    let mut edges = Vec::with_capacity(base.edge_count() + 2 * crossing_count);
    let mut paths = Vec::with_capacity(base.edge_count());
    for (e, &(a, b)) in base.edges().iter().enumerate() {
        let mut path = Vec::with_capacity(orders[e].len() + 2);
        path.push(a);
        path.extend(orders[e].iter().map(|&p| v + p));
        path.push(b);
        for w in path.windows(2) {
            edges.push((w[0], w[1]));
        }
        paths.push(path);
    }
    Planarization { vertex_count: v + crossing_count, edges, paths }
}

fn check_specs(base: &Graph, crossings: &[CrossingSpec], report: &mut ValidationReport) {
    let mut ids = BTreeSet::new();
    let mut pairs = BTreeSet::new();
    for c in crossings {
        if !ids.insert(c.id) {
            report.push(ViolationKind::DuplicateId, format!("id {}", c.id));
        }
        let (e, f) = c.edges;
        if e >= base.edge_count() || f >= base.edge_count() {
            report.push(ViolationKind::UnknownEdge, format!("crossing {}", c.id));
            continue;
        }
        let name = |x: usize| base.edge_key(x);
        if e == f {
            report.push(ViolationKind::SelfCrossing, format!("crossing {} on {}", c.id, name(e)));
            continue;
        }
        if base.edges_share_endpoint(e, f) {
            report
                .push(ViolationKind::SharedEndpoint, format!("crossing {} between {} and {}", c.id, name(e), name(f)));
        }
        if !pairs.insert((e.min(f), e.max(f))) {
            report.push(ViolationKind::RepeatedPair, format!("{} and {} cross more than once", name(e), name(f)));
        }
    }
}

/// Planarization graph with one dummy vertex `x<id>` per crossing. Each
/// edge is split at its crossings in ascending id order.
pub fn planarize(base: &Graph, crossings: &[CrossingSpec]) -> Result<Graph> {
    let mut report = ValidationReport::default();
    check_specs(base, crossings, &mut report);
    if let Some(v) = report.violations.first() {
        return Err(Error::BadCrossing(v.to_string()));
    }
    let mut sorted: Vec<(usize, usize)> = crossings.iter().enumerate().map(|(p, c)| (c.id, p)).collect();
    sorted.sort_unstable();
    let mut orders = vec![Vec::new(); base.edge_count()];
    for &(_, p) in &sorted {
        let (e, f) = crossings[p].edges;
        orders[e].push(p);
        orders[f].push(p);
    }
    let pz = planarization_from_orders(base, crossings.len(), &orders);
    let mut labels: Vec<VertexLabel> = base.labels().to_vec();
    for c in crossings {
        let l = VertexLabel::plain(format!("x{}", c.id));
        if base.index_of(&l).is_some() {
            return Err(Error::BadCrossing(format!("dummy label {l} collides with a base vertex")));
        }
        labels.push(l);
    }
    Graph::from_indexed(labels, &pz.edges)
}

impl CombinatorialDrawing {
    /// A crossing-free drawing from a planar rotation system of `base`.
    pub fn planar(base: Graph, rotations: Vec<Vec<usize>>) -> Self {
        CombinatorialDrawing { base, crossings: Vec::new(), edge_orders: BTreeMap::new(), rotations }
    }

    pub fn crossing_count_unchecked(&self) -> usize {
        self.crossings.len()
    }

    fn position_of_id(&self) -> HashMap<usize, usize> {
        self.crossings.iter().enumerate().map(|(p, c)| (c.id, p)).collect()
    }

    /// Per-edge order as crossing positions; fails when orders and crossing
    /// list disagree.
    fn orders_by_position(&self) -> std::result::Result<Vec<Vec<usize>>, String> {
        let pos = self.position_of_id();
        let mut orders = vec![Vec::new(); self.base.edge_count()];
        for (&e, ids) in &self.edge_orders {
            if e >= self.base.edge_count() {
                return Err(format!("edge order for unknown edge index {e}"));
            }
            for id in ids {
                let p = *pos.get(id).ok_or_else(|| format!("unknown crossing id {id} on {}", self.base.edge_key(e)))?;
                orders[e].push(p);
            }
        }
        for (e, order) in orders.iter().enumerate() {
            let mut got = order.clone();
            got.sort_unstable();
            let mut expect: Vec<usize> =
                self.crossings.iter().enumerate().filter(|(_, c)| c.involves(e)).map(|(p, _)| p).collect();
            expect.sort_unstable();
            if got != expect {
                return Err(format!("order on {} does not list exactly its crossings", self.base.edge_key(e)));
            }
        }
        Ok(orders)
    }

    pub fn planarization(&self) -> Result<Planarization> {
        let orders = self.orders_by_position().map_err(Error::Validation)?;
        Ok(planarization_from_orders(&self.base, self.crossings.len(), &orders))
    }

    /// Name of a planarization vertex: base label, or `x<id>` for dummies.
    pub fn vertex_name(&self, k: usize) -> String {
        let v = self.base.vertex_count();
        if k < v {
            self.base.label(k).to_string()
        } else {
            format!("x{}", self.crossings[k - v].id)
        }
    }

    pub fn validate(&self) -> ValidationReport {
        validate_good_drawing(self)
    }
}

/// Checks every good-drawing condition and reports all violations found.
pub fn validate_good_drawing(d: &CombinatorialDrawing) -> ValidationReport {
    let mut report = ValidationReport::default();
    check_specs(&d.base, &d.crossings, &mut report);
    let orders = match d.orders_by_position() {
        Ok(o) => o,
        Err(msg) => {
            report.push(ViolationKind::EdgeOrderMismatch, msg);
            return report;
        }
    };
    // a planarization with repeated pairs, self or incident crossings is a
    // multigraph; the structural checks above already fail it
    if report.has(ViolationKind::SelfCrossing)
        || report.has(ViolationKind::SharedEndpoint)
        || report.has(ViolationKind::RepeatedPair)
        || report.has(ViolationKind::UnknownEdge)
        || report.has(ViolationKind::DuplicateId)
    {
        return report;
    }
    let pz = planarization_from_orders(&d.base, d.crossings.len(), &orders);
    let face = match validate_rotation(pz.vertex_count, &pz.edges, &d.rotations) {
        Ok(f) => f,
        Err(e) => {
            report.push(ViolationKind::RotationMismatch, e.to_string());
            return report;
        }
    };
    let v = d.base.vertex_count();
    for (p, c) in d.crossings.iter().enumerate() {
        let x = v + p;
        let neighbours_on = |e: usize| -> [usize; 2] {
            let path = &pz.paths[e];
            let at = path.iter().position(|&y| y == x).unwrap();
            [path[at - 1], path[at + 1]]
        };
        let on_e = neighbours_on(c.edges.0);
        let rot = &d.rotations[x];
        let tags: Vec<bool> = rot.iter().map(|y| on_e.contains(y)).collect();
        let alternating = tags.len() == 4 && (0..4).all(|i| tags[i] != tags[(i + 1) % 4]);
        if !alternating {
            report.push(
                ViolationKind::NonTransversal,
                format!("dummy x{} of {} and {}", c.id, d.base.edge_key(c.edges.0), d.base.edge_key(c.edges.1)),
            );
        }
    }
    report.genus = Some(face.genus);
    if face.genus > 0 {
        report.push(ViolationKind::NotPlane, format!("planarization has genus {}", face.genus));
    }
    report
}

/// Number of crossings of a valid drawing.
pub fn crossing_count(d: &CombinatorialDrawing) -> Result<usize> {
    let report = validate_good_drawing(d);
    if let Some(v) = report.violations.first() {
        return Err(Error::Validation(v.to_string()));
    }
    Ok(d.crossings.len())
}

/// Assembles a drawing from crossing pairs, per-edge orders (positions into
/// `pairs`) and a rotation of the corresponding planarization.
pub(crate) fn drawing_from_parts(
    base: &Graph,
    pairs: &[(usize, usize)],
    orders: &[Vec<usize>],
    rotations: Vec<Vec<usize>>,
) -> CombinatorialDrawing {
    let crossings: Vec<CrossingSpec> =
        pairs.iter().enumerate().map(|(p, &(e, f))| CrossingSpec::new(p, e, f)).collect();
    let edge_orders = orders
        .iter()
        .enumerate()
        .filter(|(_, o)| !o.is_empty())
        .map(|(e, o)| (e, o.iter().map(|&p| crossings[p].id).collect()))
        .collect();
    CombinatorialDrawing { base: base.clone(), crossings, edge_orders, rotations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_complete;
    use crate::planarity::{embed_indexed, planar_embedding};

    fn k5_one_crossing() -> CombinatorialDrawing {
        let k5 = make_complete(5).unwrap();
        let e = |a: usize, b: usize| k5.edge_index(a, b).unwrap();
        let pairs = [(e(0, 2), e(1, 3))];
        let mut orders = vec![Vec::new(); k5.edge_count()];
        orders[pairs[0].0].push(0);
        orders[pairs[0].1].push(0);
        let pz = planarization_from_orders(&k5, 1, &orders);
        let rot = embed_indexed(pz.vertex_count, &pz.edges).expect("K5 minus a crossing is planar");
        drawing_from_parts(&k5, &pairs, &orders, rot)
    }

    #[test]
    fn planarize_counts() {
        let k5 = make_complete(5).unwrap();
        let e = |a: usize, b: usize| k5.edge_index(a, b).unwrap();
        let p = planarize(&k5, &[CrossingSpec::new(0, e(0, 2), e(1, 3))]).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (6, 12));
        assert_eq!(planarize(&k5, &[]).unwrap(), k5);
        let err = planarize(&k5, &[CrossingSpec::new(0, e(0, 1), e(1, 2))]).unwrap_err();
        assert!(err.to_string().contains("share an endpoint"));
    }

    #[test]
    fn valid_k5_drawing() {
        let d = k5_one_crossing();
        let r = validate_good_drawing(&d);
        assert!(r.is_valid(), "{:?}", r);
        assert_eq!(crossing_count(&d).unwrap(), 1);
    }

    #[test]
    fn planar_embedding_is_zero_crossing_drawing() {
        let k4 = make_complete(4).unwrap();
        let rot = planar_embedding(&k4).unwrap().order;
        let d = CombinatorialDrawing::planar(k4, rot);
        assert_eq!(crossing_count(&d).unwrap(), 0);
    }

    #[test]
    fn mutations_are_caught() {
        let base = k5_one_crossing();
        let (e, f) = base.crossings[0].edges;

        let mut dup = base.clone();
        dup.crossings.push(CrossingSpec::new(1, e, f));
        dup.edge_orders.get_mut(&e).unwrap().push(1);
        dup.edge_orders.get_mut(&f).unwrap().push(1);
        assert!(validate_good_drawing(&dup).has(ViolationKind::RepeatedPair));

        let mut inc = base.clone();
        let g = inc.base.edge_index(0, 1).unwrap();
        let h = inc.base.edge_index(1, 2).unwrap();
        inc.crossings[0] = CrossingSpec::new(0, g, h);
        assert!(validate_good_drawing(&inc).has(ViolationKind::SharedEndpoint));

        let mut flip = base.clone();
        let x = flip.base.vertex_count();
        flip.rotations[x].swap(1, 2);
        let r = validate_good_drawing(&flip);
        assert!(r.has(ViolationKind::NonTransversal), "{:?}", r);
    }
}
