use std::collections::BTreeSet;

use super::CombinatorialDrawing;
use crate::error::{Error, Result};

/// A named set of base edges (by index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSet {
    pub name: String,
    pub edges: BTreeSet<usize>,
}

impl EdgeSet {
    pub fn new(name: impl Into<String>, edges: impl IntoIterator<Item = usize>) -> Self {
        EdgeSet { name: name.into(), edges: edges.into_iter().collect() }
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet {
            name: format!("{} ∪ {}", self.name, other.name),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

fn check_known(d: &CombinatorialDrawing, a: &EdgeSet) -> Result<()> {
    match a.edges.iter().find(|&&e| e >= d.base.edge_count()) {
        Some(e) => Err(Error::Usage(format!("edge index {e} in set {} is not in the graph", a.name))),
        None => Ok(()),
    }
}

/// `cr_D(A, B)`: crossings with one edge in `A` and the other in `B`. The
/// sets must be disjoint; use [`crossings_within`] for self-pairs.
pub fn crossings_between(d: &CombinatorialDrawing, a: &EdgeSet, b: &EdgeSet) -> Result<usize> {
    check_known(d, a)?;
    check_known(d, b)?;
    if a.edges.intersection(&b.edges).next().is_some() {
        return Err(Error::Usage(format!(
            "sets {} and {} overlap; use crossings_within for self-pairs",
            a.name, b.name
        )));
    }
    Ok(d.crossings
        .iter()
        .filter(|c| {
            let (e, f) = c.edges;
            (a.contains(e) && b.contains(f)) || (a.contains(f) && b.contains(e))
        })
        .count())
}

/// Crossings with both edges in `A`.
pub fn crossings_within(d: &CombinatorialDrawing, a: &EdgeSet) -> Result<usize> {
    check_known(d, a)?;
    Ok(d.crossings.iter().filter(|c| a.contains(c.edges.0) && a.contains(c.edges.1)).count())
}

/// `cr_D(A)`: crossings with at least one edge in `A`, each counted once.
pub fn crossings_on(d: &CombinatorialDrawing, a: &EdgeSet) -> Result<usize> {
    check_known(d, a)?;
    Ok(d.crossings.iter().filter(|c| a.contains(c.edges.0) || a.contains(c.edges.1)).count())
}

/// Matrix of `cr_D(A, B)` over a family of named sets, with
/// `crossings_within` on the diagonal and `cr_D(A)` alongside.
#[derive(Clone, Debug)]
pub struct CrossingLedger {
    pub sets: Vec<EdgeSet>,
    pub on: Vec<usize>,
    pub pair: Vec<Vec<usize>>,
}

impl CrossingLedger {
    pub fn new(d: &CombinatorialDrawing, sets: Vec<EdgeSet>) -> Result<Self> {
        for s in &sets {
            check_known(d, s)?;
        }
        let k = sets.len();
        let on = sets.iter().map(|s| crossings_on(d, s)).collect::<Result<Vec<_>>>()?;
        let mut pair = vec![vec![0; k]; k];
        for c in &d.crossings {
            let (e, f) = c.edges;
            for a in 0..k {
                for b in 0..k {
                    let hit = if a == b {
                        sets[a].contains(e) && sets[a].contains(f)
                    } else {
                        (sets[a].contains(e) && sets[b].contains(f)) || (sets[a].contains(f) && sets[b].contains(e))
                    };
                    if hit {
                        pair[a][b] += 1;
                    }
                }
            }
        }
        Ok(CrossingLedger { sets, on, pair })
    }

    fn index(&self, name: &str) -> Option<usize> {
        self.sets.iter().position(|s| s.name == name)
    }

    pub fn between(&self, a: &str, b: &str) -> Option<usize> {
        Some(self.pair[self.index(a)?][self.index(b)?])
    }

    pub fn on(&self, a: &str) -> Option<usize> {
        Some(self.on[self.index(a)?])
    }
}
