//! Exact crossing numbers of small graphs by iterative deepening over sets
//! of crossing pairs.
//!
//! A level `j` enumerates every `j`-subset of non-incident edge pairs in
//! lexicographic order, and for each subset every crossing order along
//! edges that carry more than one crossing. A subset is feasible when the
//! resulting planarization is planar and its embedding is a valid good
//! drawing. Levels are searched in increasing order, so the first feasible
//! level is the crossing number.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::drawing::{drawing_from_parts, planarization_from_orders, validate_good_drawing, CombinatorialDrawing};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarity::{embed_indexed, is_planar_indexed};

/// `max(0, |E| − 3|V| + 6)`, or 0 below three vertices.
pub fn euler_lower_bound(g: &Graph) -> usize {
    if g.vertex_count() < 3 {
        return 0;
    }
    (g.edge_count() + 6).saturating_sub(3 * g.vertex_count())
}

/// Limits on a search. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Budget {
    pub seconds: Option<f64>,
    pub planarity_calls: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn seconds(s: f64) -> Self {
        Budget { seconds: Some(s), planarity_calls: None }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SearchStats {
    pub planarity_calls: u64,
    pub elapsed: Duration,
    /// Every level below this one was searched exhaustively with no
    /// feasible set, so the crossing number is at least this value.
    pub certified_lower_bound: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Decision {
    Yes(CombinatorialDrawing),
    No,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExactStatus {
    Solved {
        value: usize,
        witness: CombinatorialDrawing,
    },
    /// `max_k` reached or budget exhausted; the value is at least
    /// `stats.certified_lower_bound`.
    Unresolved {
        budget_exhausted: bool,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactResult {
    pub status: ExactStatus,
    pub stats: SearchStats,
}

struct Search<'g> {
    g: &'g Graph,
    pairs: Vec<(usize, usize)>,
    start: Instant,
    budget: Budget,
    calls: AtomicU64,
    exhausted: AtomicBool,
}

enum Level {
    Found(CombinatorialDrawing),
    Empty,
    Exhausted,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, budget: Budget) -> Self {
        let mut pairs = Vec::new();
        for e in 0..g.edge_count() {
            for f in e + 1..g.edge_count() {
                if !g.edges_share_endpoint(e, f) {
                    pairs.push((e, f));
                }
            }
        }
        Search { g, pairs, start: Instant::now(), budget, calls: AtomicU64::new(0), exhausted: AtomicBool::new(false) }
    }

    fn over_budget(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return true;
        }
        let calls = self.calls.load(Ordering::Relaxed);
        let over = self.budget.planarity_calls.is_some_and(|c| calls >= c)
            || self.budget.seconds.is_some_and(|s| self.start.elapsed().as_secs_f64() >= s);
        if over {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        over
    }

    fn stats(&self, certified: usize) -> SearchStats {
        SearchStats {
            planarity_calls: self.calls.load(Ordering::Relaxed),
            elapsed: self.start.elapsed(),
            certified_lower_bound: certified,
        }
    }

    /// Tries every crossing order for one subset; `Err(())` on budget.
    fn try_subset(&self, subset: &[usize]) -> std::result::Result<Option<CombinatorialDrawing>, ()> {
        let chosen: Vec<(usize, usize)> = subset.iter().map(|&p| self.pairs[p]).collect();
        let mut orders = vec![Vec::new(); self.g.edge_count()];
        for (p, &(e, f)) in chosen.iter().enumerate() {
            orders[e].push(p);
            orders[f].push(p);
        }
        let multi: Vec<usize> = (0..orders.len()).filter(|&e| orders[e].len() > 1).collect();
        let mut perms: Vec<Vec<Vec<usize>>> = multi.iter().map(|&e| permutations(&orders[e])).collect();
        let mut idx = vec![0usize; multi.len()];
        loop {
            for (k, &e) in multi.iter().enumerate() {
                orders[e] = std::mem::take(&mut perms[k][idx[k]]);
            }
            if self.over_budget() {
                return Err(());
            }
            let pz = planarization_from_orders(self.g, chosen.len(), &orders);
            self.calls.fetch_add(1, Ordering::Relaxed);
            if is_planar_indexed(pz.vertex_count, &pz.edges) {
                let rot = embed_indexed(pz.vertex_count, &pz.edges).expect("planar graph embeds");
                let d = drawing_from_parts(self.g, &chosen, &orders, rot);
                if validate_good_drawing(&d).is_valid() {
                    return Ok(Some(d));
                }
            }
            for (k, &e) in multi.iter().enumerate() {
                perms[k][idx[k]] = std::mem::take(&mut orders[e]);
            }
            let mut k = 0;
            while k < multi.len() {
                idx[k] += 1;
                if idx[k] < perms[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == multi.len() {
                return Ok(None);
            }
        }
    }

    /// All `j`-subsets whose smallest pair is `first`, in lexicographic order.
    fn scan_first(&self, j: usize, first: usize) -> std::result::Result<Option<CombinatorialDrawing>, ()> {
        let p = self.pairs.len();
        let mut subset: Vec<usize> = (0..j).map(|t| first + t).collect();
        if subset.last().is_some_and(|&l| l >= p) {
            return Ok(None);
        }
        loop {
            if let Some(d) = self.try_subset(&subset)? {
                return Ok(Some(d));
            }
            // advance positions 1..j, keeping subset[0] fixed
            let mut t = j;
            loop {
                if t <= 1 {
                    return Ok(None);
                }
                t -= 1;
                if subset[t] < p - (j - t) {
                    break;
                }
            }
            subset[t] += 1;
            for s in t + 1..j {
                subset[s] = subset[s - 1] + 1;
            }
        }
    }

    fn level(&self, j: usize) -> Level {
        if j == 0 {
            return match self.try_subset(&[]) {
                Ok(Some(d)) => Level::Found(d),
                Ok(None) => Level::Empty,
                Err(()) => Level::Exhausted,
            };
        }
        if j > self.pairs.len() {
            return Level::Empty;
        }
        let firsts = self.pairs.len() - j + 1;
        let found =
            (0..firsts).into_par_iter().map(|first| self.scan_first(j, first)).find_first(|r| !matches!(r, Ok(None)));
        match found {
            Some(Ok(Some(d))) => Level::Found(d),
            Some(_) => Level::Exhausted,
            None if self.exhausted.load(Ordering::Relaxed) => Level::Exhausted,
            None => Level::Empty,
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Is `cr(g) ≤ k`? A `Yes` witness is the lexicographically first feasible
/// subset at the smallest feasible level.
pub fn decide_leq(g: &Graph, k: usize, budget: Budget) -> (Decision, SearchStats) {
    let search = Search::new(g, budget);
    let lb = euler_lower_bound(g);
    for j in lb..=k {
        match search.level(j) {
            Level::Found(d) => return (Decision::Yes(d), search.stats(j)),
            Level::Empty => {}
            Level::Exhausted => return (Decision::BudgetExhausted, search.stats(j)),
        }
    }
    (Decision::No, search.stats(k.max(lb.saturating_sub(1)) + 1))
}

/// Smallest `k ≤ max_k` with `decide_leq(g, k)`, with its witness.
pub fn crossing_number_exact(g: &Graph, max_k: usize, budget: Budget) -> Result<ExactResult> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidGraph("empty graph".into()));
    }
    let search = Search::new(g, budget);
    let lb = euler_lower_bound(g);
    for j in lb..=max_k {
        match search.level(j) {
            Level::Found(witness) => {
                return Ok(ExactResult { status: ExactStatus::Solved { value: j, witness }, stats: search.stats(j) })
            }
            Level::Empty => {}
            Level::Exhausted => {
                return Ok(ExactResult {
                    status: ExactStatus::Unresolved { budget_exhausted: true },
                    stats: search.stats(j),
                })
            }
        }
    }
    Ok(ExactResult {
        status: ExactStatus::Unresolved { budget_exhausted: false },
        stats: search.stats(max_k.max(lb.saturating_sub(1)) + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::crossing_count;
    use crate::graph::{
        cartesian_product, make_complete, make_complete_multipartite, make_path, make_star, sunlet_star,
    };

    fn value(g: &Graph, max_k: usize) -> usize {
        match crossing_number_exact(g, max_k, Budget::unlimited()).unwrap().status {
            ExactStatus::Solved { value, witness } => {
                assert_eq!(crossing_count(&witness).unwrap(), value);
                value
            }
            s => panic!("unresolved: {s:?}"),
        }
    }

    #[test]
    fn euler_bound() {
        assert_eq!(euler_lower_bound(&make_complete(5).unwrap()), 1);
        assert_eq!(euler_lower_bound(&make_complete_multipartite(&[3, 3]).unwrap()), 0);
        assert_eq!(euler_lower_bound(&sunlet_star(3, 3).unwrap()), 0);
    }

    #[test]
    fn k5_decisions() {
        let k5 = make_complete(5).unwrap();
        assert_eq!(decide_leq(&k5, 0, Budget::unlimited()).0, Decision::No);
        match decide_leq(&k5, 1, Budget::unlimited()).0 {
            Decision::Yes(d) => assert_eq!(crossing_count(&d).unwrap(), 1),
            other => panic!("{other:?}"),
        }
        assert_eq!(Search::new(&k5, Budget::unlimited()).pairs.len(), 15);
    }

    #[test]
    fn small_values() {
        assert_eq!(value(&make_complete_multipartite(&[3, 3]).unwrap(), 3), 1);
        assert_eq!(value(&make_complete(6).unwrap(), 4), 3);
        assert_eq!(value(&make_complete_multipartite(&[3, 4]).unwrap(), 3), 2);
        assert_eq!(value(&sunlet_star(4, 1).unwrap(), 0), 0);
        let p2k13 = cartesian_product(&make_path(3).unwrap(), &make_star(3).unwrap()).unwrap();
        assert_eq!(decide_leq(&p2k13, 0, Budget::unlimited()).0, Decision::No);
        assert_eq!(value(&p2k13, 2), 1);
    }

    #[test]
    fn budget_is_distinct_from_no() {
        let k6 = make_complete(6).unwrap();
        let budget = Budget { seconds: None, planarity_calls: Some(10) };
        let (d, stats) = decide_leq(&k6, 3, budget);
        assert_eq!(d, Decision::BudgetExhausted);
        assert!(stats.planarity_calls >= 10);
        let r = crossing_number_exact(&k6, 3, budget).unwrap();
        assert_eq!(r.status, ExactStatus::Unresolved { budget_exhausted: true });
    }

    #[test]
    fn witness_is_stable() {
        let k = make_complete_multipartite(&[3, 3]).unwrap();
        let a = decide_leq(&k, 2, Budget::unlimited()).0;
        let b = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| decide_leq(&k, 2, Budget::unlimited()).0);
        assert_eq!(a, b);
    }

    #[test]
    fn order_enumeration_matters() {
        assert_eq!(permutations(&[1, 2, 3]).len(), 6);
        assert_eq!(permutations(&[4]), vec![vec![4]]);
    }
}
