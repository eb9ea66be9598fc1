//! Section edge sets `a_i, b_i, b'_i, c_i, t_{i−1}, t_i, t_{i+1}` of
//! `S_n □ K_{1,m}`, the subgraphs built from them, and the crossing
//! inequalities evaluated on concrete drawings.

use crate::drawing::{crossings_between, crossings_on, crossings_within, CombinatorialDrawing, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::{check_sunlet_star, is_homeomorphic, sunlet_star, suppress_degree_two, Graph, VertexLabel};

/// The seven sets of section `i`, as edge indices of `sunlet_star(n, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionEdgeSets {
    pub n: usize,
    pub m: usize,
    pub i: usize,
    pub a: EdgeSet,
    pub b: EdgeSet,
    pub b_prime: EdgeSet,
    pub c: EdgeSet,
    pub t_prev: EdgeSet,
    pub t: EdgeSet,
    pub t_next: EdgeSet,
}

impl SectionEdgeSets {
    pub fn all(&self) -> [&EdgeSet; 7] {
        [&self.a, &self.b, &self.b_prime, &self.c, &self.t_prev, &self.t, &self.t_next]
    }

    /// `F_i = t_i ∪ b_i ∪ b'_i`.
    pub fn f(&self) -> EdgeSet {
        let mut f = self.t.union(&self.b).union(&self.b_prime);
        f.name = format!("F_{}", self.i);
        f
    }

    fn union_of(&self, sets: &[&EdgeSet]) -> Vec<usize> {
        sets.iter().flat_map(|s| s.edges.iter().copied()).collect()
    }
}

fn check_section(n: usize, m: usize, i: usize) -> Result<()> {
    check_sunlet_star(n, m)?;
    if i >= n {
        return Err(Error::InvalidParameter(format!("section index {i} out of range for n = {n}")));
    }
    Ok(())
}

fn set_of(g: &Graph, name: String, pairs: impl IntoIterator<Item = (VertexLabel, VertexLabel)>) -> EdgeSet {
    let edges: Vec<usize> =
        pairs.into_iter().map(|(x, y)| g.edge_by_labels(&x, &y).expect("edge of the product")).collect();
    EdgeSet::new(name, edges)
}

fn sets_in(g: &Graph, n: usize, m: usize, i: usize) -> SectionEdgeSets {
    let (prev, next) = ((i + n - 1) % n, (i + 1) % n);
    let ring = VertexLabel::ring;
    let pend = VertexLabel::pendant;
    let star = |s: usize, name: String| set_of(g, name, (1..=m).map(move |j| (ring(0, s), ring(j, s))));
    SectionEdgeSets {
        n,
        m,
        i,
        a: set_of(g, format!("a_{i}"), (0..=m).map(|j| (ring(j, i), ring(j, next)))),
        b: set_of(g, format!("b_{i}"), (0..=m).map(|j| (ring(j, i), pend(j, i)))),
        b_prime: set_of(g, format!("b'_{i}"), (1..=m).map(|j| (pend(0, i), pend(j, i)))),
        c: set_of(g, format!("c_{i}"), (0..=m).map(|j| (ring(j, i), ring(j, prev)))),
        t_prev: star(prev, format!("t_{prev}")),
        t: star(i, format!("t_{i}")),
        t_next: star(next, format!("t_{next}")),
    }
}

pub fn edge_sets(n: usize, m: usize, i: usize) -> Result<SectionEdgeSets> {
    check_section(n, m, i)?;
    Ok(sets_in(&sunlet_star(n, m)?, n, m, i))
}

/// `H_i`: the subgraph induced by all seven sets.
pub fn subgraph_h(n: usize, m: usize, i: usize) -> Result<Graph> {
    check_section(n, m, i)?;
    let g = sunlet_star(n, m)?;
    let s = sets_in(&g, n, m, i);
    Ok(g.edge_induced(&s.union_of(&s.all())))
}

/// `H'_i = H_i` without `t_i`.
pub fn subgraph_hprime(n: usize, m: usize, i: usize) -> Result<Graph> {
    check_section(n, m, i)?;
    let g = sunlet_star(n, m)?;
    let s = sets_in(&g, n, m, i);
    Ok(g.edge_induced(&s.union_of(&[&s.a, &s.b, &s.b_prime, &s.c, &s.t_prev, &s.t_next])))
}

pub fn subgraph_f(n: usize, m: usize, i: usize) -> Result<EdgeSet> {
    Ok(edge_sets(n, m, i)?.f())
}

/// One `cr_D(A, B)` evaluation with the names of both sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerTerm {
    pub left: String,
    pub right: String,
    pub value: usize,
}

fn term(d: &CombinatorialDrawing, a: &EdgeSet, b: &EdgeSet) -> Result<LedgerTerm> {
    let value = if a.edges == b.edges { crossings_within(d, a)? } else { crossings_between(d, a, b)? };
    Ok(LedgerTerm { left: a.name.clone(), right: b.name.clone(), value })
}

fn sum(terms: &[LedgerTerm]) -> usize {
    terms.iter().map(|t| t.value).sum()
}

/// The three-term inequality for `m = 2`, on the subdrawing of `H'_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct M2Ledger {
    pub i: usize,
    /// Third term pairs `b_i ∪ b'_i` with `c_i ∪ t_{i+1}`.
    pub literal: Vec<LedgerTerm>,
    /// Third term pairs `b_i ∪ b'_i` with `c_i ∪ t_{i−1}`.
    pub symmetric: Vec<LedgerTerm>,
    pub literal_sum: usize,
    pub symmetric_sum: usize,
}

impl M2Ledger {
    /// The symmetric form is the one that follows from `H'_i` being a
    /// subdivided `K_{3,3}`.
    pub fn holds(&self) -> bool {
        self.symmetric_sum >= 1
    }
}

/// The four-term inequality for `m = 3` and its restricted form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct M3Ledger {
    pub i: usize,
    pub eq4: Vec<LedgerTerm>,
    pub eq4_sum: usize,
    /// `t_{i±1}` dropped from the two `F_i` terms.
    pub eq5: Vec<LedgerTerm>,
    pub eq5_sum: usize,
    pub crossings_on_f: usize,
    pub crossings_within_f: usize,
}

impl M3Ledger {
    pub fn holds(&self) -> bool {
        self.eq4_sum >= 3
    }
}

fn require(d: &CombinatorialDrawing, m: usize) -> Result<(usize, Graph)> {
    let Some(n) = crate::graph::sunlet_star_params(&d.base).filter(|&(_, mm)| mm == m).map(|(n, _)| n) else {
        return Err(Error::Usage(format!("drawing is not of S_n □ K_1,{m}")));
    };
    Ok((n, d.base.clone()))
}

pub fn check_lemma_m2(d: &CombinatorialDrawing, i: usize) -> Result<M2Ledger> {
    let (n, g) = require(d, 2)?;
    check_section(n, 2, i)?;
    let s = sets_in(&g, n, 2, i);
    let a_t = s.a.union(&s.t_next);
    let bb = s.b.union(&s.b_prime);
    let c_next = s.c.union(&s.t_next);
    let c_prev = s.c.union(&s.t_prev);
    let literal = vec![term(d, &a_t, &bb)?, term(d, &a_t, &c_prev)?, term(d, &bb, &c_next)?];
    let symmetric = vec![term(d, &a_t, &bb)?, term(d, &a_t, &c_prev)?, term(d, &bb, &c_prev)?];
    Ok(M2Ledger { i, literal_sum: sum(&literal), symmetric_sum: sum(&symmetric), literal, symmetric })
}

pub fn check_lemma_m3(d: &CombinatorialDrawing, i: usize) -> Result<M3Ledger> {
    let (n, g) = require(d, 3)?;
    check_section(n, 3, i)?;
    let s = sets_in(&g, n, 3, i);
    let f = s.f();
    let a_t = s.a.union(&s.t_next);
    let c_t = s.c.union(&s.t_prev);
    let eq4 = vec![term(d, &a_t, &f)?, term(d, &c_t, &f)?, term(d, &a_t, &c_t)?, term(d, &f, &f)?];
    let eq5 = vec![term(d, &s.a, &f)?, term(d, &s.c, &f)?, term(d, &a_t, &c_t)?, term(d, &f, &f)?];
    Ok(M3Ledger {
        i,
        eq4_sum: sum(&eq4),
        eq5_sum: sum(&eq5),
        eq4,
        eq5,
        crossings_on_f: crossings_on(d, &f)?,
        crossings_within_f: crossings_within(d, &f)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FHypothesis {
    /// `(i, crossings_on(F_i))` for every section.
    pub per_section: Vec<(usize, usize)>,
    /// Every `F_i` is crossed at most twice.
    pub applies: bool,
    pub total: usize,
    /// When the hypothesis applies, whether the drawing has at least `3n`
    /// crossings.
    pub bound_holds: Option<bool>,
}

pub fn check_f_hypothesis(d: &CombinatorialDrawing) -> Result<FHypothesis> {
    let (n, g) = require(d, 3)?;
    let per_section =
        (0..n).map(|i| Ok((i, crossings_on(d, &sets_in(&g, n, 3, i).f())?))).collect::<Result<Vec<_>>>()?;
    let applies = per_section.iter().all(|&(_, c)| c <= 2);
    let total = d.crossings.len();
    Ok(FHypothesis { per_section, applies, total, bound_holds: applies.then_some(total >= 3 * n) })
}

#[derive(Clone, Debug)]
pub struct Deletion {
    /// `sunlet_star(n, m)` without `F_i`, isolated vertices dropped.
    pub graph: Graph,
    /// Degree-2 vertices suppressed.
    pub suppressed: Graph,
    /// Set for `n = 3`: suppression stops at parallel edges and there is no
    /// `S_2` to compare against.
    pub degenerate: bool,
}

impl Deletion {
    /// Whether the result is homeomorphic to `sunlet_star(n − 1, m)`.
    pub fn matches_smaller(&self, n: usize, m: usize) -> Result<Option<bool>> {
        if self.degenerate {
            return Ok(None);
        }
        Ok(Some(is_homeomorphic(&self.graph, &sunlet_star(n - 1, m)?)?))
    }
}

pub fn delete_f_section(n: usize, m: usize, i: usize) -> Result<Deletion> {
    check_section(n, m, i)?;
    let g = sunlet_star(n, m)?;
    let f = sets_in(&g, n, m, i).f();
    let graph = g.without_edges(&f.edges.iter().copied().collect::<Vec<_>>());
    let s = suppress_degree_two(&graph);
    let degenerate = n == 3;
    Ok(Deletion { graph, suppressed: s.graph, degenerate })
}
