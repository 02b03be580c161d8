//! Cycle-coverage (Condition 1) and Hamiltonicity (Condition 2) decisions,
//! profile classification, and the cyclic ranking profile that certifies
//! impossibility when a cycle is left uncovered.
//!
//! Both conditions reduce to one table: for every node subset `S`, the set of
//! nodes `x` such that some simple path starts at `min(S)`, visits exactly
//! `S` and ends at `x`. `S` is the node set of a cycle iff `|S| >= 3` and one
//! of those endpoints is adjacent to `min(S)`. The table costs
//! `O(2^n * n^2)` and is shared by every query on the same graph.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::profile::{EvaluabilityProfile, UnionGraph};
use crate::relations::{Alt, AltSet, IdSet, Ind, RankingProfile, WeakOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error("not a cycle of the union graph: {0}")]
    NotACycle(String),
    #[error("cycle {cycle:?} lies inside the evaluable set of individual {individual}")]
    CoveredCycle { cycle: Vec<Alt>, individual: Ind },
}

/// Hamiltonian-path table over the subsets of a node set.
pub struct CycleSpace {
    /// local index -> alternative
    nodes: Vec<Alt>,
    /// local adjacency
    adjacency: Vec<u32>,
    /// local subset -> endpoints of spanning paths from its minimum
    ends: Vec<u32>,
}

impl CycleSpace {
    /// Table for the subgraph of `graph` induced by `within`.
    pub fn new(graph: &UnionGraph, within: AltSet) -> Self {
        let nodes: Vec<Alt> = within.iter().collect();
        assert!(nodes.len() <= 24, "cycle table limited to 24 nodes");
        let k = nodes.len();
        let adjacency: Vec<u32> =
            nodes.iter().map(|&a| local_bits(&nodes, graph.neighbors(a) & within)).collect();
        let mut ends = vec![0u32; 1 << k];
        for s in 0..k {
            ends[1 << s] = 1 << s;
        }
        for set in 1usize..(1 << k) {
            let tips = ends[set];
            if tips == 0 {
                continue;
            }
            let low = set.trailing_zeros();
            // extensions must keep min(set) as the start
            let allowed = !(set as u32) & !((1u32 << low) - 1) & !(1u32 << low);
            let mut t = tips;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                let mut next = adjacency[v] & allowed;
                while next != 0 {
                    let w = next.trailing_zeros();
                    next &= next - 1;
                    ends[set | 1 << w] |= 1 << w;
                }
            }
        }
        CycleSpace { nodes, adjacency, ends }
    }

    pub fn for_graph(graph: &UnionGraph) -> Self {
        Self::new(graph, graph.nodes())
    }

    fn to_local(&self, set: AltSet) -> Option<usize> {
        let mut local = 0usize;
        let mut seen = 0;
        for (i, &a) in self.nodes.iter().enumerate() {
            if set.contains(a) {
                local |= 1 << i;
                seen += 1;
            }
        }
        (seen == set.len()).then_some(local)
    }

    fn to_global(&self, local: usize) -> AltSet {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(i, _)| local >> i & 1 == 1)
            .map(|(_, &a)| a)
            .collect()
    }

    fn is_cyclic_local(&self, set: usize) -> bool {
        if set.count_ones() < 3 {
            return false;
        }
        let s = set.trailing_zeros() as usize;
        self.ends[set] & self.adjacency[s] != 0
    }

    /// True iff `set` is the node set of some cycle.
    pub fn is_cyclic(&self, set: AltSet) -> bool {
        self.to_local(set).is_some_and(|l| self.is_cyclic_local(l))
    }

    /// Node sets of all cycles, in increasing bitmask order of the local
    /// encoding (identical to global order because the mapping is monotone).
    pub fn cyclic_subsets(&self) -> Vec<AltSet> {
        (1usize..self.ends.len())
            .filter(|&l| self.is_cyclic_local(l))
            .map(|l| self.to_global(l))
            .collect()
    }

    /// Cyclic subsets not strictly contained in another cyclic subset.
    pub fn maximal_cyclic_subsets(&self) -> Vec<AltSet> {
        let size = self.ends.len();
        let k = self.nodes.len();
        // above[s]: some cyclic superset of s (including s) exists
        let mut above = vec![false; size];
        for set in (1..size).rev() {
            let mut hit = self.is_cyclic_local(set);
            let mut free = !set & (size - 1);
            while !hit && free != 0 {
                let x = free.trailing_zeros();
                free &= free - 1;
                hit = above[set | 1 << x];
            }
            above[set] = hit;
        }
        (1..size)
            .filter(|&set| {
                self.is_cyclic_local(set)
                    && (0..k).all(|x| set >> x & 1 == 1 || !above[set | 1 << x])
            })
            .map(|l| self.to_global(l))
            .collect()
    }

    /// The lexicographically smallest cycle through exactly `set`, starting
    /// at its smallest node.
    pub fn cycle_through(&self, set: AltSet) -> Option<Vec<Alt>> {
        let local = self.to_local(set)?;
        if !self.is_cyclic_local(local) {
            return None;
        }
        let s = local.trailing_zeros() as usize;
        let mut seq = vec![s];
        let mut visited = 1usize << s;
        let mut at = s;
        while visited != local {
            let rest = (local & !visited) | 1 << s;
            // w can start a path over the rest that closes back to s
            let candidates = self.adjacency[at] & self.ends[rest] & !(visited as u32);
            let w = candidates.trailing_zeros() as usize;
            debug_assert!(candidates != 0);
            seq.push(w);
            visited |= 1 << w;
            at = w;
        }
        Some(seq.into_iter().map(|i| self.nodes[i]).collect())
    }
}

fn local_bits(nodes: &[Alt], set: AltSet) -> u32 {
    nodes.iter().enumerate().filter(|(_, &a)| set.contains(a)).fold(0, |acc, (i, _)| acc | 1 << i)
}

/// Does `G[subset]` contain a cycle through every node of `subset`?
pub fn is_cyclic_subset(graph: &UnionGraph, subset: AltSet) -> bool {
    subset.len() >= 3 && CycleSpace::new(graph, subset).is_cyclic(subset)
}

/// A cycle visiting exactly `subset`, if one exists.
pub fn hamiltonian_cycle(graph: &UnionGraph, subset: AltSet) -> Option<Vec<Alt>> {
    CycleSpace::new(graph, subset).cycle_through(subset)
}

/// A maximal cyclic node set together with the first individual covering it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverEntry {
    pub nodes: AltSet,
    pub individual: Ind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Condition1 {
    /// Every cycle is covered; one entry per maximal cyclic node set.
    Holds { certificate: Vec<CoverEntry> },
    /// This cycle's node set is in no evaluable set.
    Fails { cycle: Vec<Alt> },
}

impl Condition1 {
    pub fn holds(&self) -> bool {
        matches!(self, Condition1::Holds { .. })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Condition2 {
    Holds,
    Fails { hamiltonian_cycle: Vec<Alt> },
}

impl Condition2 {
    pub fn holds(&self) -> bool {
        matches!(self, Condition2::Holds)
    }
}

fn first_uncovered(space: &CycleSpace, sets: &[AltSet]) -> Option<AltSet> {
    space.cyclic_subsets().into_iter().find(|c| !sets.iter().any(|s| c.is_subset(*s)))
}

fn condition1_on(space: &CycleSpace, sets: &[AltSet]) -> Condition1 {
    if let Some(uncovered) = first_uncovered(space, sets) {
        let cycle = space.cycle_through(uncovered).expect("cyclic subset");
        return Condition1::Fails { cycle };
    }
    let certificate = space
        .maximal_cyclic_subsets()
        .into_iter()
        .map(|nodes| CoverEntry {
            nodes,
            individual: sets.iter().position(|s| nodes.is_subset(*s)).expect("covered"),
        })
        .collect();
    Condition1::Holds { certificate }
}

/// Every cycle of `G` lies inside some `A_v`.
///
/// Node sets are scanned in increasing bitmask order, so a failure reports
/// the smallest uncovered cyclic set.
pub fn check_condition1(profile: &EvaluabilityProfile) -> Condition1 {
    let graph = profile.union_graph();
    condition1_on(&CycleSpace::for_graph(&graph), profile.evaluable_sets())
}

/// `G` has no Hamiltonian cycle.
pub fn check_condition2(profile: &EvaluabilityProfile) -> Condition2 {
    let graph = profile.union_graph();
    let space = CycleSpace::for_graph(&graph);
    match space.cycle_through(graph.nodes()) {
        Some(hamiltonian_cycle) => Condition2::Fails { hamiltonian_cycle },
        None => Condition2::Holds,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Verdict {
    /// Condition 1 fails: no rule is transitive-valued and Pareto.
    #[serde(rename = "IP")]
    Impossible,
    /// Condition 1 holds, Condition 2 fails: only dictatorial rules.
    #[serde(rename = "DP")]
    Dictatorship,
    /// Both hold.
    #[serde(rename = "PP")]
    Possible,
}

impl Verdict {
    pub fn code(self) -> &'static str {
        match self {
            Verdict::Impossible => "IP",
            Verdict::Dictatorship => "DP",
            Verdict::Possible => "PP",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    UncoveredCycle {
        cycle: Vec<Alt>,
    },
    CompleteIndividual {
        individual: Ind,
    },
    /// Coverage of every maximal cyclic set, and `G` has no Hamiltonian cycle.
    Coverage {
        certificate: Vec<CoverEntry>,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProfileClassification {
    pub verdict: Verdict,
    pub witness: Witness,
}

impl ProfileClassification {
    /// Re-checks the witness against `profile` from scratch.
    pub fn revalidate(&self, profile: &EvaluabilityProfile) -> Result<(), String> {
        let graph = profile.union_graph();
        match (&self.verdict, &self.witness) {
            (Verdict::Impossible, Witness::UncoveredCycle { cycle }) => {
                check_cycle(&graph, cycle)?;
                let nodes: AltSet = cycle.iter().copied().collect();
                match profile.first_covering(nodes) {
                    Some(v) => Err(format!("cycle is covered by individual {v}")),
                    None => Ok(()),
                }
            }
            (Verdict::Dictatorship, Witness::CompleteIndividual { individual }) => {
                if profile.evaluable(*individual) == profile.all_alts() {
                    Ok(())
                } else {
                    Err(format!("individual {individual} is not complete"))
                }
            }
            (Verdict::Possible, Witness::Coverage { certificate }) => {
                let space = CycleSpace::for_graph(&graph);
                if space.is_cyclic(graph.nodes()) {
                    return Err("graph has a Hamiltonian cycle".into());
                }
                for entry in certificate {
                    if !entry.nodes.is_subset(profile.evaluable(entry.individual)) {
                        return Err(format!(
                            "{:?} not covered by {}",
                            entry.nodes, entry.individual
                        ));
                    }
                }
                // every cyclic set sits inside some certified maximal set
                for c in space.cyclic_subsets() {
                    if !certificate.iter().any(|e| c.is_subset(e.nodes)) {
                        return Err(format!("cyclic set {c:?} missing from certificate"));
                    }
                }
                Ok(())
            }
            _ => Err("witness kind does not match verdict".into()),
        }
    }
}

/// Checks that `cycle` is a cycle of `graph` (distinct nodes, at least 3,
/// consecutive nodes adjacent, closing edge present).
pub fn check_cycle(graph: &UnionGraph, cycle: &[Alt]) -> Result<(), String> {
    if cycle.len() < 3 {
        return Err(format!("a cycle needs at least 3 nodes, got {}", cycle.len()));
    }
    if let Some(&a) = cycle.iter().find(|&&a| a >= graph.n_nodes()) {
        return Err(format!("unknown node {a}"));
    }
    let nodes: AltSet = cycle.iter().copied().collect();
    if nodes.len() != cycle.len() {
        return Err("repeated node".into());
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if !graph.has_edge(a, b) {
            return Err(format!("missing edge {a}-{b}"));
        }
    }
    Ok(())
}

/// IP / DP / PP with a witness.
pub fn classify(profile: &EvaluabilityProfile) -> ProfileClassification {
    let graph = profile.union_graph();
    let space = CycleSpace::for_graph(&graph);
    match condition1_on(&space, profile.evaluable_sets()) {
        Condition1::Fails { cycle } => ProfileClassification {
            verdict: Verdict::Impossible,
            witness: Witness::UncoveredCycle { cycle },
        },
        Condition1::Holds { certificate } => {
            if space.is_cyclic(graph.nodes()) {
                // a Hamiltonian cycle inside some A_v forces A_v = A
                let individual = profile
                    .complete_individuals()
                    .min()
                    .expect("covered Hamiltonian cycle implies a complete individual");
                ProfileClassification {
                    verdict: Verdict::Dictatorship,
                    witness: Witness::CompleteIndividual { individual },
                }
            } else {
                ProfileClassification {
                    verdict: Verdict::Possible,
                    witness: Witness::Coverage { certificate },
                }
            }
        }
    }
}

/// Verdict only, straight from evaluable-set bitmasks over `n_alts`
/// alternatives. Used by the census.
pub fn classify_sets(n_alts: usize, sets: &[AltSet]) -> Verdict {
    let graph = UnionGraph::from_sets(n_alts, sets);
    let space = CycleSpace::for_graph(&graph);
    if first_uncovered(&space, sets).is_some() {
        Verdict::Impossible
    } else if space.is_cyclic(graph.nodes()) {
        Verdict::Dictatorship
    } else {
        Verdict::Possible
    }
}

/// Ranking profile that forces unanimous strict preferences all the way
/// around an uncovered cycle `a_1 .. a_M`.
///
/// Individual `v` takes the rotation `R^m: a_m, a_{m-1}, .., a_1, a_M, .., a_{m+1}`
/// for the smallest `m` with `a_m` outside `A_v`, restricted to `A_v`, and
/// ranks its remaining alternatives below in input order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclicProfileWitness {
    pub cycle: Vec<Alt>,
    pub rankings: RankingProfile,
    /// Per individual, the 0-based cycle position `m` it rotates around.
    pub chosen: Vec<usize>,
}

impl CyclicProfileWitness {
    /// `R^m` on the cycle's node set (0-based `m`).
    pub fn rotation(&self, m: usize) -> WeakOrder {
        rotation(&self.cycle, m)
    }

    pub fn cycle_nodes(&self) -> AltSet {
        self.cycle.iter().copied().collect()
    }

    /// The directed cycle `a_{m+1} -> a_m` every ranking agrees on, listed
    /// from `a_2`: `a_2, a_1, a_M, .., a_3`.
    pub fn unanimity_cycle(&self) -> Vec<Alt> {
        let m = self.cycle.len();
        (0..m).map(|i| self.cycle[(1 + m - i) % m]).collect()
    }

    /// Checks both defining properties against `profile`.
    pub fn validate(&self, profile: &EvaluabilityProfile) -> Result<(), String> {
        let graph = profile.union_graph();
        check_cycle(&graph, &self.cycle)?;
        let nodes = self.cycle_nodes();
        let m_len = self.cycle.len();
        for v in 0..profile.n_inds() {
            let ranking = self.rankings.get(v);
            let evaluable = profile.evaluable(v);
            if ranking.ground() != evaluable || !ranking.is_linear() {
                return Err(format!("ranking of {v} is not a linear order on its evaluable set"));
            }
            let m = self.chosen[v];
            if m >= m_len || evaluable.contains(self.cycle[m]) {
                return Err(format!("individual {v} evaluates its rotation pivot"));
            }
            let shared = evaluable & nodes;
            let mine = ranking.restrict(shared).map_err(|e| e.to_string())?;
            let target = self.rotation(m).restrict(shared).map_err(|e| e.to_string())?;
            if mine != target {
                return Err(format!("ranking of {v} disagrees with its rotation on the cycle"));
            }
        }
        for i in 0..m_len {
            let (lo, hi) = (self.cycle[i], self.cycle[(i + 1) % m_len]);
            for v in profile.common_evaluators(lo, hi) {
                if !self.rankings.get(v).strictly_prefers(hi, lo) {
                    return Err(format!("individual {v} does not rank {hi} over {lo}"));
                }
            }
        }
        Ok(())
    }
}

fn rotation(cycle: &[Alt], m: usize) -> WeakOrder {
    let len = cycle.len();
    let seq: Vec<Alt> = (0..len).map(|i| cycle[(m + len - i) % len]).collect();
    WeakOrder::linear(&seq).expect("cycle nodes are distinct")
}

/// Builds the cyclic profile around `cycle`. The cycle must be a cycle of
/// `G` whose node set no individual evaluates in full.
pub fn cyclic_profile(
    profile: &EvaluabilityProfile,
    cycle: &[Alt],
) -> Result<CyclicProfileWitness, ConditionError> {
    let graph = profile.union_graph();
    check_cycle(&graph, cycle).map_err(ConditionError::NotACycle)?;
    let nodes: AltSet = cycle.iter().copied().collect();
    if let Some(individual) = profile.first_covering(nodes) {
        return Err(ConditionError::CoveredCycle { cycle: cycle.to_vec(), individual });
    }
    let mut chosen = Vec::with_capacity(profile.n_inds());
    let mut orders = Vec::with_capacity(profile.n_inds());
    for v in 0..profile.n_inds() {
        let evaluable = profile.evaluable(v);
        let m = cycle
            .iter()
            .position(|&a| !evaluable.contains(a))
            .expect("uncovered cycle has a node outside every A_v");
        let on_cycle = rotation(cycle, m).restrict(evaluable & nodes).unwrap();
        let mut tiers: Vec<AltSet> = on_cycle.tiers().to_vec();
        tiers.extend((evaluable - nodes).iter().map(IdSet::singleton));
        chosen.push(m);
        orders.push(WeakOrder::new(tiers).unwrap());
    }
    let rankings = RankingProfile::new(profile, orders).expect("grounds match by construction");
    Ok(CyclicProfileWitness { cycle: cycle.to_vec(), rankings, chosen })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> AltSet {
        ids.iter().copied().collect()
    }

    fn example1() -> EvaluabilityProfile {
        EvaluabilityProfile::from_sets(7, vec![set(&[0, 1, 2, 3]), set(&[3, 4, 5]), set(&[5, 6])])
            .unwrap()
    }

    fn peer_rating() -> EvaluabilityProfile {
        EvaluabilityProfile::new(
            &["1", "2", "3"],
            &[("1", vec!["2", "3"]), ("2", vec!["1", "3"]), ("3", vec!["1", "2"])],
        )
        .unwrap()
    }

    fn two_cliques() -> EvaluabilityProfile {
        EvaluabilityProfile::from_sets(4, vec![set(&[0, 1, 2]), set(&[0, 2, 3]), set(&[0, 1, 2])])
            .unwrap()
    }

    #[test]
    fn cyclic_subset_examples() {
        let g = example1().union_graph();
        assert!(is_cyclic_subset(&g, set(&[0, 1, 2, 3])));
        assert!(is_cyclic_subset(&g, set(&[3, 4, 5])));
        assert!(!is_cyclic_subset(&g, set(&[5, 6])));
        assert!(!is_cyclic_subset(&g, set(&[3, 4, 5, 6])));

        let g = two_cliques().union_graph();
        assert!(is_cyclic_subset(&g, set(&[0, 1, 2, 3])));
        assert_eq!(hamiltonian_cycle(&g, set(&[0, 1, 2, 3])), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn maximal_sets_of_example1() {
        let g = example1().union_graph();
        let space = CycleSpace::for_graph(&g);
        assert_eq!(space.maximal_cyclic_subsets(), vec![set(&[0, 1, 2, 3]), set(&[3, 4, 5])]);
    }

    #[test]
    fn condition1_examples() {
        match check_condition1(&example1()) {
            Condition1::Holds { certificate } => assert_eq!(
                certificate,
                vec![
                    CoverEntry { nodes: set(&[0, 1, 2, 3]), individual: 0 },
                    CoverEntry { nodes: set(&[3, 4, 5]), individual: 1 },
                ]
            ),
            other => panic!("{other:?}"),
        }
        assert_eq!(check_condition1(&peer_rating()), Condition1::Fails { cycle: vec![0, 1, 2] });
        // every triangle is covered, but the chorded 4-cycle is not
        assert_eq!(check_condition1(&two_cliques()), Condition1::Fails { cycle: vec![0, 1, 2, 3] });
        let complete =
            EvaluabilityProfile::from_sets(4, vec![set(&[0, 1]), set(&[0, 1, 2, 3]), set(&[2, 3])])
                .unwrap();
        assert!(check_condition1(&complete).holds());
    }

    #[test]
    fn condition2_examples() {
        assert!(check_condition2(&example1()).holds());
        let complete =
            EvaluabilityProfile::from_sets(4, vec![set(&[0, 1]), set(&[0, 1, 2, 3]), set(&[2, 3])])
                .unwrap();
        assert_eq!(
            check_condition2(&complete),
            Condition2::Fails { hamiltonian_cycle: vec![0, 1, 2, 3] }
        );
        let path =
            EvaluabilityProfile::from_sets(4, vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 3])])
                .unwrap();
        assert!(check_condition2(&path).holds());
        assert!(check_condition1(&path).holds());
    }

    #[test]
    fn classify_examples() {
        let ip = EvaluabilityProfile::from_sets(3, vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])])
            .unwrap();
        let c = classify(&ip);
        assert_eq!(c.verdict, Verdict::Impossible);
        c.revalidate(&ip).unwrap();

        let dp =
            EvaluabilityProfile::from_sets(3, vec![set(&[0, 1]), set(&[0, 1, 2]), set(&[1, 2])])
                .unwrap();
        let c = classify(&dp);
        assert_eq!(c.witness, Witness::CompleteIndividual { individual: 1 });
        c.revalidate(&dp).unwrap();

        let c = classify(&example1());
        assert_eq!(c.verdict, Verdict::Possible);
        c.revalidate(&example1()).unwrap();
        assert_eq!(classify_sets(7, example1().evaluable_sets()), Verdict::Possible);

        let forged = ProfileClassification {
            verdict: Verdict::Dictatorship,
            witness: Witness::CompleteIndividual { individual: 0 },
        };
        assert!(forged.revalidate(&example1()).is_err());
    }

    #[test]
    fn peer_rating_cyclic_profile() {
        let p = peer_rating();
        let w = cyclic_profile(&p, &[0, 1, 2]).unwrap();
        assert_eq!(w.chosen, vec![0, 1, 2]);
        assert_eq!(w.rankings.get(0).sequence(), vec![2, 1]);
        assert_eq!(w.rankings.get(1).sequence(), vec![0, 2]);
        assert_eq!(w.rankings.get(2).sequence(), vec![1, 0]);
        assert_eq!(w.unanimity_cycle(), vec![1, 0, 2]);
        w.validate(&p).unwrap();
    }

    #[test]
    fn cyclic_profile_rejects_bad_input() {
        assert!(matches!(
            cyclic_profile(&example1(), &[0, 1, 2, 3]),
            Err(ConditionError::CoveredCycle { individual: 0, .. })
        ));
        assert!(matches!(
            cyclic_profile(&example1(), &[0, 6, 5]),
            Err(ConditionError::NotACycle(_))
        ));
        assert!(matches!(
            cyclic_profile(&peer_rating(), &[0, 1]),
            Err(ConditionError::NotACycle(_))
        ));
    }

    #[test]
    fn cyclic_profile_appends_outside_alternatives_below() {
        let p = two_cliques();
        let w = cyclic_profile(&p, &[0, 1, 2, 3]).unwrap();
        w.validate(&p).unwrap();
        // v2 evaluates {0,2,3} and misses node 1 (position 1): R^1 = 1,0,3,2
        assert_eq!(w.chosen[1], 1);
        assert_eq!(w.rankings.get(1).sequence(), vec![0, 3, 2]);
    }
}
