//! Weak orders, strict digraphs and the small amount of relation algebra the
//! aggregation rules need.
//!
//! Alternatives (and individuals) are dense indices below 64, so every set is
//! a single `u64` bitmask. Weak orders are stored as tier lists; this makes
//! reflexivity, completeness and transitivity hold by construction.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::profile::EvaluabilityProfile;

/// Dense index of an alternative.
pub type Alt = usize;
/// Dense index of an individual.
pub type Ind = usize;

/// Largest id a set can hold, plus one.
pub const MAX_IDS: usize = 64;

/// A set of dense ids stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IdSet(pub u64);

pub type AltSet = IdSet;
pub type IndSet = IdSet;

impl IdSet {
    pub const EMPTY: IdSet = IdSet(0);

    pub fn singleton(id: usize) -> Self {
        debug_assert!(id < MAX_IDS);
        IdSet(1 << id)
    }

    /// The set `{0, .., n-1}`.
    pub fn prefix(n: usize) -> Self {
        assert!(n <= MAX_IDS, "id sets hold at most {MAX_IDS} members");
        if n == MAX_IDS {
            IdSet(u64::MAX)
        } else {
            IdSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, id: usize) -> bool {
        id < MAX_IDS && self.0 >> id & 1 == 1
    }

    pub fn with(self, id: usize) -> Self {
        self | IdSet::singleton(id)
    }

    pub fn without(self, id: usize) -> Self {
        IdSet(self.0 & !(1 << id))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: IdSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_strict_subset(self, other: IdSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersects(self, other: IdSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// One past the largest member; zero for the empty set.
    pub fn bound(self) -> usize {
        MAX_IDS - self.0.leading_zeros() as usize
    }

    /// Members in increasing order.
    pub fn iter(self) -> IdIter {
        IdIter(self.0)
    }
}

impl std::ops::BitOr for IdSet {
    type Output = IdSet;
    fn bitor(self, rhs: IdSet) -> IdSet {
        IdSet(self.0 | rhs.0)
    }
}

impl std::ops::BitOrAssign for IdSet {
    fn bitor_assign(&mut self, rhs: IdSet) {
        self.0 |= rhs.0;
    }
}

impl std::ops::BitAnd for IdSet {
    type Output = IdSet;
    fn bitand(self, rhs: IdSet) -> IdSet {
        IdSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for IdSet {
    type Output = IdSet;
    fn sub(self, rhs: IdSet) -> IdSet {
        IdSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for IdSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(IdSet::EMPTY, IdSet::with)
    }
}

impl IntoIterator for IdSet {
    type Item = usize;
    type IntoIter = IdIter;
    fn into_iter(self) -> IdIter {
        self.iter()
    }
}

impl fmt::Debug for IdSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct IdIter(u64);

impl Iterator for IdIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let id = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(id)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for IdIter {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("tiers do not partition the ground set")]
    NotAPartition,
    #[error("alternative {0} is outside the ground set")]
    OutsideGround(Alt),
    #[error("subset is not contained in the ground set")]
    NotASubset,
    #[error("arc ({0}, {0}) would be reflexive")]
    SelfLoop(Alt),
    #[error("arc ({a}, {b}) conflicts with existing arc ({b}, {a})")]
    Symmetric { a: Alt, b: Alt },
    #[error("relation contains the directed cycle {cycle:?}")]
    Cyclic { cycle: Vec<Alt> },
    #[error("tie-break order must be a linear order on the same ground set")]
    BadTiebreak,
    #[error("expected {expected} rankings, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("ranking of individual {individual} is not on its evaluable set")]
    GroundMismatch { individual: Ind },
}

/// Reflexive, complete, transitive relation stored as an ordered partition
/// (best tier first).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeakOrder {
    ground: AltSet,
    tiers: Vec<AltSet>,
}

impl WeakOrder {
    pub fn new(tiers: Vec<AltSet>) -> Result<Self, RelationError> {
        let mut ground = AltSet::EMPTY;
        for &tier in &tiers {
            if tier.is_empty() || tier.intersects(ground) {
                return Err(RelationError::NotAPartition);
            }
            ground |= tier;
        }
        Ok(WeakOrder { ground, tiers })
    }

    /// Linear order from a best-to-worst sequence.
    pub fn linear(sequence: &[Alt]) -> Result<Self, RelationError> {
        Self::new(sequence.iter().map(|&a| AltSet::singleton(a)).collect())
    }

    /// Everything tied.
    pub fn indifferent(ground: AltSet) -> Self {
        let tiers = if ground.is_empty() { vec![] } else { vec![ground] };
        WeakOrder { ground, tiers }
    }

    pub fn ground(&self) -> AltSet {
        self.ground
    }

    pub fn tiers(&self) -> &[AltSet] {
        &self.tiers
    }

    pub fn tier_of(&self, a: Alt) -> Option<usize> {
        self.tiers.iter().position(|t| t.contains(a))
    }

    /// `a R b`: `a` is at least as good as `b`.
    pub fn weakly_prefers(&self, a: Alt, b: Alt) -> bool {
        match (self.tier_of(a), self.tier_of(b)) {
            (Some(x), Some(y)) => x <= y,
            _ => false,
        }
    }

    /// `a P(R) b`.
    pub fn strictly_prefers(&self, a: Alt, b: Alt) -> bool {
        match (self.tier_of(a), self.tier_of(b)) {
            (Some(x), Some(y)) => x < y,
            _ => false,
        }
    }

    /// `a I(R) b`.
    pub fn is_indifferent(&self, a: Alt, b: Alt) -> bool {
        match (self.tier_of(a), self.tier_of(b)) {
            (Some(x), Some(y)) => x == y,
            _ => false,
        }
    }

    pub fn is_linear(&self) -> bool {
        self.tiers.iter().all(|t| t.len() == 1)
    }

    /// Alternatives best to worst, ties broken by index.
    pub fn sequence(&self) -> Vec<Alt> {
        self.tiers.iter().flat_map(|t| t.iter()).collect()
    }

    pub fn strict_part(&self) -> StrictDigraph {
        let mut d = StrictDigraph::new(self.ground);
        let mut below = self.ground;
        for &tier in &self.tiers {
            below = below - tier;
            for a in tier {
                d.out[a] = below.0;
            }
        }
        d
    }

    /// `I(R)`, including the diagonal.
    pub fn symmetric_part(&self) -> BinaryRelation {
        let mut rel = BinaryRelation::empty(self.ground);
        for &tier in &self.tiers {
            for a in tier {
                rel.rows[a] = tier.0;
            }
        }
        rel
    }

    pub fn to_relation(&self) -> BinaryRelation {
        let mut rel = BinaryRelation::empty(self.ground);
        let mut at_or_below = self.ground;
        for &tier in &self.tiers {
            for a in tier {
                rel.rows[a] = at_or_below.0;
            }
            at_or_below = at_or_below - tier;
        }
        rel
    }

    /// `R ∩ (S × S)`; tier order is kept and emptied tiers are dropped.
    pub fn restrict(&self, subset: AltSet) -> Result<WeakOrder, RelationError> {
        if !subset.is_subset(self.ground) {
            return Err(RelationError::NotASubset);
        }
        Ok(WeakOrder {
            ground: subset,
            tiers: self.tiers.iter().map(|&t| t & subset).filter(|t| !t.is_empty()).collect(),
        })
    }
}

/// Asymmetric relation on a ground set. Arcs `(a, b)` read "a above b".
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StrictDigraph {
    ground: AltSet,
    out: Vec<u64>,
}

impl StrictDigraph {
    pub fn new(ground: AltSet) -> Self {
        StrictDigraph { ground, out: vec![0; ground.bound()] }
    }

    pub fn ground(&self) -> AltSet {
        self.ground
    }

    /// Adds `(a, b)`. Re-adding an existing arc is a no-op.
    pub fn insert(&mut self, a: Alt, b: Alt) -> Result<(), RelationError> {
        for x in [a, b] {
            if !self.ground.contains(x) {
                return Err(RelationError::OutsideGround(x));
            }
        }
        if a == b {
            return Err(RelationError::SelfLoop(a));
        }
        if self.contains(b, a) {
            return Err(RelationError::Symmetric { a, b });
        }
        self.out[a] |= 1 << b;
        Ok(())
    }

    pub fn contains(&self, a: Alt, b: Alt) -> bool {
        self.out.get(a).is_some_and(|row| row >> b & 1 == 1)
    }

    pub fn successors(&self, a: Alt) -> AltSet {
        IdSet(self.out.get(a).copied().unwrap_or(0))
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(Alt, Alt)> {
        self.ground.iter().flat_map(|a| self.successors(a).iter().map(move |b| (a, b))).collect()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_subset_of(&self, other: &StrictDigraph) -> bool {
        self.ground.iter().all(|a| self.successors(a).is_subset(other.successors(a)))
    }

    pub fn is_transitive(&self) -> bool {
        self.ground.iter().all(|a| {
            let direct = self.successors(a);
            direct.iter().all(|b| self.successors(b).is_subset(direct))
        })
    }

    /// A directed cycle `c_0 -> c_1 -> .. -> c_k -> c_0`, if any.
    ///
    /// Depth-first from the smallest unvisited node, successors in index
    /// order, so the witness is deterministic.
    pub fn find_cycle(&self) -> Option<Vec<Alt>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Open,
            Done,
        }
        let mut mark = vec![Mark::New; self.out.len()];
        for root in self.ground {
            if mark[root] != Mark::New {
                continue;
            }
            // (node, successors not yet explored)
            let mut stack: Vec<(Alt, IdSet)> = vec![(root, self.successors(root))];
            mark[root] = Mark::Open;
            while let Some(top) = stack.last_mut() {
                let Some(next) = top.1.min() else {
                    mark[top.0] = Mark::Done;
                    stack.pop();
                    continue;
                };
                top.1 = top.1.without(next);
                match mark[next] {
                    Mark::New => {
                        mark[next] = Mark::Open;
                        stack.push((next, self.successors(next)));
                    }
                    Mark::Open => {
                        let start = stack.iter().position(|&(n, _)| n == next).unwrap();
                        return Some(stack[start..].iter().map(|&(n, _)| n).collect());
                    }
                    Mark::Done => {}
                }
            }
        }
        None
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// True when `cycle` is a closed directed walk on distinct nodes of this
    /// digraph.
    pub fn has_cycle(&self, cycle: &[Alt]) -> bool {
        if cycle.len() < 2 {
            return false;
        }
        let distinct: IdSet = cycle.iter().copied().collect();
        distinct.len() == cycle.len()
            && (0..cycle.len()).all(|i| self.contains(cycle[i], cycle[(i + 1) % cycle.len()]))
    }
}

/// Kahn-style linear extension: repeatedly emit the source that comes first
/// in `tiebreak`.
pub fn linear_extension(
    digraph: &StrictDigraph,
    tiebreak: &WeakOrder,
) -> Result<WeakOrder, RelationError> {
    if !tiebreak.is_linear() || tiebreak.ground() != digraph.ground() {
        return Err(RelationError::BadTiebreak);
    }
    let mut indegree = vec![0usize; digraph.ground().bound()];
    for (_, b) in digraph.arcs() {
        indegree[b] += 1;
    }
    let priority = tiebreak.sequence();
    let mut remaining = digraph.ground();
    let mut order = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let Some(&next) = priority.iter().find(|&&a| remaining.contains(a) && indegree[a] == 0)
        else {
            let rest = restricted(digraph, remaining);
            let cycle = rest.find_cycle().expect("no source implies a cycle");
            return Err(RelationError::Cyclic { cycle });
        };
        remaining = remaining.without(next);
        order.push(next);
        for b in digraph.successors(next) {
            indegree[b] -= 1;
        }
    }
    WeakOrder::linear(&order)
}

fn restricted(digraph: &StrictDigraph, subset: AltSet) -> StrictDigraph {
    let mut d = StrictDigraph::new(subset);
    for a in subset {
        d.out[a] = (digraph.successors(a) & subset).0;
    }
    d
}

/// Every weak order on `set`, each exactly once.
///
/// Order: the best tier ranges over the nonempty subsets of what is left in
/// increasing bitmask order, recursively.
pub fn enumerate_weak_orders(set: AltSet) -> Vec<WeakOrder> {
    fn go(rest: AltSet, prefix: &mut Vec<AltSet>, out: &mut Vec<WeakOrder>, ground: AltSet) {
        if rest.is_empty() {
            out.push(WeakOrder { ground, tiers: prefix.clone() });
            return;
        }
        let mut sub = 0u64;
        loop {
            // next nonempty submask of `rest` in increasing order
            sub = sub.wrapping_sub(rest.0) & rest.0;
            if sub == 0 {
                break;
            }
            prefix.push(IdSet(sub));
            go(rest - IdSet(sub), prefix, out, ground);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(set, &mut Vec::new(), &mut out, set);
    out
}

/// A reflexive binary relation on a ground set, as produced by an arbitrary
/// aggregation rule (not necessarily transitive).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryRelation {
    ground: AltSet,
    rows: Vec<u64>,
}

/// How a relation ranks an ordered pair `(a, b)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairOutcome {
    /// `a P b`
    Above,
    /// `b P a`
    Below,
    /// `a I b`
    Tied,
    /// neither `a R b` nor `b R a`
    Unrelated,
}

impl PairOutcome {
    pub fn index(self) -> usize {
        self as usize
    }
}

impl BinaryRelation {
    /// Only the diagonal.
    pub fn empty(ground: AltSet) -> Self {
        let mut rows = vec![0; ground.bound()];
        for a in ground {
            rows[a] = 1 << a;
        }
        BinaryRelation { ground, rows }
    }

    /// Everything related to everything.
    pub fn full(ground: AltSet) -> Self {
        BinaryRelation {
            ground,
            rows: (0..ground.bound())
                .map(|a| if ground.contains(a) { ground.0 } else { 0 })
                .collect(),
        }
    }

    pub fn ground(&self) -> AltSet {
        self.ground
    }

    pub fn unset(&mut self, a: Alt, b: Alt) {
        self.rows[a] &= !(1 << b);
    }

    pub fn set(&mut self, a: Alt, b: Alt) {
        assert!(self.ground.contains(a) && self.ground.contains(b));
        self.rows[a] |= 1 << b;
    }

    pub fn holds(&self, a: Alt, b: Alt) -> bool {
        self.rows.get(a).is_some_and(|r| r >> b & 1 == 1)
    }

    pub fn strict(&self, a: Alt, b: Alt) -> bool {
        self.holds(a, b) && !self.holds(b, a)
    }

    pub fn outcome(&self, a: Alt, b: Alt) -> PairOutcome {
        match (self.holds(a, b), self.holds(b, a)) {
            (true, false) => PairOutcome::Above,
            (false, true) => PairOutcome::Below,
            (true, true) => PairOutcome::Tied,
            (false, false) => PairOutcome::Unrelated,
        }
    }

    pub fn is_reflexive(&self) -> bool {
        self.ground.iter().all(|a| self.holds(a, a))
    }

    pub fn is_complete(&self) -> bool {
        self.ground.iter().all(|a| self.ground.iter().all(|b| self.holds(a, b) || self.holds(b, a)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.ground
            .iter()
            .all(|a| self.ground.iter().all(|b| a == b || !(self.holds(a, b) && self.holds(b, a))))
    }

    /// First `(a, b, c)` with `a R b`, `b R c` and not `a R c`.
    pub fn transitivity_violation(&self) -> Option<(Alt, Alt, Alt)> {
        for a in self.ground {
            let row_a = IdSet(self.rows[a]);
            for b in row_a {
                let missing = IdSet(self.rows[b]) - row_a;
                if let Some(c) = missing.min() {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    /// Reads the relation back as a weak order when it is one.
    pub fn to_weak_order(&self) -> Option<WeakOrder> {
        if !(self.is_reflexive() && self.is_complete() && self.is_transitive()) {
            return None;
        }
        // Tiers by descending number of alternatives weakly below.
        let mut alts: Vec<Alt> = self.ground.iter().collect();
        alts.sort_by_key(|&a| std::cmp::Reverse(self.rows[a].count_ones()));
        let mut tiers: Vec<AltSet> = Vec::new();
        for a in alts {
            match tiers.last_mut() {
                Some(t)
                    if self.holds(a, IdSet::min(*t).unwrap())
                        && self.holds(IdSet::min(*t).unwrap(), a) =>
                {
                    *t = t.with(a)
                }
                _ => tiers.push(IdSet::singleton(a)),
            }
        }
        WeakOrder::new(tiers).ok()
    }
}

/// One weak order per individual, each on that individual's evaluable set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RankingProfile {
    orders: Vec<WeakOrder>,
}

impl RankingProfile {
    pub fn new(
        profile: &EvaluabilityProfile,
        orders: Vec<WeakOrder>,
    ) -> Result<Self, RelationError> {
        if orders.len() != profile.n_inds() {
            return Err(RelationError::WrongLength {
                expected: profile.n_inds(),
                got: orders.len(),
            });
        }
        if let Some(v) = (0..orders.len()).find(|&v| orders[v].ground() != profile.evaluable(v)) {
            return Err(RelationError::GroundMismatch { individual: v });
        }
        Ok(RankingProfile { orders })
    }

    /// Caller guarantees each order sits on the matching evaluable set.
    pub(crate) fn from_orders_unchecked(orders: Vec<WeakOrder>) -> Self {
        RankingProfile { orders }
    }

    pub fn get(&self, v: Ind) -> &WeakOrder {
        &self.orders[v]
    }

    pub fn orders(&self) -> &[WeakOrder] {
        &self.orders
    }

    pub fn into_orders(self) -> Vec<WeakOrder> {
        self.orders
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> AltSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn strict_part_examples() {
        let linear = WeakOrder::linear(&[0, 1, 2]).unwrap();
        assert_eq!(linear.strict_part().arcs(), vec![(0, 1), (0, 2), (1, 2)]);

        let tied_top = WeakOrder::new(vec![set(&[0, 1]), set(&[2])]).unwrap();
        assert_eq!(tied_top.strict_part().arcs(), vec![(0, 2), (1, 2)]);

        let flat = WeakOrder::indifferent(set(&[0, 1, 2]));
        assert!(flat.strict_part().arcs().is_empty());
        assert!(flat.symmetric_part().holds(0, 2));
    }

    #[test]
    fn restrict_examples() {
        let r = WeakOrder::linear(&[0, 1, 2]).unwrap();
        assert_eq!(r.restrict(set(&[0, 2])).unwrap().sequence(), vec![0, 2]);
        assert_eq!(r.restrict(r.ground()).unwrap(), r);
        assert_eq!(r.restrict(set(&[3])), Err(RelationError::NotASubset));

        // R^1 on the 3-cycle a1,a2,a3 is a1,a3,a2; on {a2,a3} that leaves a3 over a2.
        let r1 = WeakOrder::linear(&[0, 2, 1]).unwrap();
        let restricted = r1.restrict(set(&[1, 2])).unwrap();
        assert_eq!(restricted.tiers(), &[set(&[2]), set(&[1])]);
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert_eq!(
            WeakOrder::new(vec![set(&[0, 1]), set(&[1])]),
            Err(RelationError::NotAPartition)
        );
        assert_eq!(WeakOrder::new(vec![AltSet::EMPTY]), Err(RelationError::NotAPartition));
    }

    #[test]
    fn acyclicity_examples() {
        let mut d = StrictDigraph::new(set(&[0, 1, 2]));
        d.insert(0, 1).unwrap();
        d.insert(1, 2).unwrap();
        assert!(d.is_acyclic());
        d.insert(2, 0).unwrap();
        let cycle = d.find_cycle().unwrap();
        assert_eq!(cycle, vec![0, 1, 2]);
        assert!(d.has_cycle(&cycle));
    }

    #[test]
    fn insertion_enforces_asymmetry() {
        let mut d = StrictDigraph::new(set(&[0, 1]));
        d.insert(0, 1).unwrap();
        assert_eq!(d.insert(1, 0), Err(RelationError::Symmetric { a: 1, b: 0 }));
        assert_eq!(d.insert(0, 0), Err(RelationError::SelfLoop(0)));
        assert_eq!(d.insert(0, 5), Err(RelationError::OutsideGround(5)));
        assert!(d.insert(0, 1).is_ok());
    }

    #[test]
    fn extension_examples() {
        let ground = set(&[0, 1, 2]);
        let tiebreak = WeakOrder::linear(&[0, 1, 2]).unwrap();
        let empty = StrictDigraph::new(ground);
        assert_eq!(linear_extension(&empty, &tiebreak).unwrap(), tiebreak);

        let mut chain = StrictDigraph::new(ground);
        chain.insert(0, 1).unwrap();
        chain.insert(1, 2).unwrap();
        for tb in [[2, 1, 0], [1, 0, 2], [0, 1, 2]] {
            let tb = WeakOrder::linear(&tb).unwrap();
            assert_eq!(linear_extension(&chain, &tb).unwrap().sequence(), vec![0, 1, 2]);
        }

        chain.insert(2, 0).unwrap();
        assert!(matches!(linear_extension(&chain, &tiebreak), Err(RelationError::Cyclic { .. })));
        let tied = WeakOrder::indifferent(ground);
        assert_eq!(linear_extension(&empty, &tied), Err(RelationError::BadTiebreak));
    }

    #[test]
    fn weak_order_counts_small() {
        assert_eq!(enumerate_weak_orders(set(&[4, 7])).len(), 3);
        assert_eq!(enumerate_weak_orders(set(&[0, 1, 2])).len(), 13);
        assert_eq!(enumerate_weak_orders(set(&[0, 1, 2, 3])).len(), 75);
    }

    #[test]
    fn relation_round_trips_weak_order() {
        for w in enumerate_weak_orders(set(&[0, 2, 3])) {
            assert_eq!(w.to_relation().to_weak_order(), Some(w));
        }
    }

    #[test]
    fn nontransitive_relation_reports_triple() {
        let mut rel = BinaryRelation::empty(set(&[0, 1, 2]));
        rel.set(0, 1);
        rel.set(1, 2);
        rel.set(2, 0);
        assert!(rel.is_complete());
        assert_eq!(rel.transitivity_violation(), Some((0, 1, 2)));
        assert_eq!(rel.to_weak_order(), None);
    }
}
