//! Slow, obviously-correct reference implementations used to cross-check
//! the fast paths in tests.

use crate::conditions::Verdict;
use crate::profile::UnionGraph;
use crate::relations::{Alt, AltSet};

/// Every simple cycle of length at least 3, each once, as a node list
/// starting at its smallest node with `second < last`.
pub fn simple_cycles(graph: &UnionGraph) -> Vec<Vec<Alt>> {
    fn extend(graph: &UnionGraph, path: &mut Vec<Alt>, out: &mut Vec<Vec<Alt>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for next in graph.neighbors(last) {
            if next == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            } else if next > start && !path.contains(&next) {
                path.push(next);
                extend(graph, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for start in graph.nodes() {
        extend(graph, &mut vec![start], &mut out);
    }
    out
}

/// Node sets that carry some simple cycle.
pub fn cyclic_sets(graph: &UnionGraph) -> Vec<AltSet> {
    let mut sets: Vec<AltSet> =
        simple_cycles(graph).iter().map(|c| c.iter().copied().collect()).collect();
    sets.sort_by_key(|s| s.bits());
    sets.dedup();
    sets
}

/// Every cycle's nodes lie inside a single evaluable set.
pub fn condition1(n_alts: usize, sets: &[AltSet]) -> bool {
    let graph = UnionGraph::from_sets(n_alts, sets);
    simple_cycles(&graph).iter().all(|cycle| {
        let nodes: AltSet = cycle.iter().copied().collect();
        sets.iter().any(|s| nodes.is_subset(*s))
    })
}

/// No cycle visits every alternative.
pub fn condition2(n_alts: usize, sets: &[AltSet]) -> bool {
    let graph = UnionGraph::from_sets(n_alts, sets);
    !simple_cycles(&graph).iter().any(|c| c.len() == n_alts)
}

pub fn classify(n_alts: usize, sets: &[AltSet]) -> Verdict {
    if !condition1(n_alts, sets) {
        Verdict::Impossible
    } else if !condition2(n_alts, sets) {
        Verdict::Dictatorship
    } else {
        Verdict::Possible
    }
}

/// Number of weak orders on `n` labelled items, by
/// `a(n) = sum_{k=1..n} C(n,k) a(n-k)`.
pub fn ordered_bell(n: usize) -> u64 {
    let mut a = vec![1u64; n + 1];
    for i in 1..=n {
        let mut binom = 1u64;
        let mut sum = 0;
        for k in 1..=i {
            binom = binom * (i - k + 1) as u64 / k as u64;
            sum += binom * a[i - k];
        }
        a[i] = sum;
    }
    a[n]
}
