//! Evaluability profiles and the union graph built from them.

use std::collections::HashSet;

use thiserror::Error;

use crate::relations::{Alt, AltSet, IdSet, Ind, IndSet};

/// Hard cap on alternatives. Condition checks are exponential in this.
pub const MAX_ALTERNATIVES: usize = 20;
/// Hard cap on individuals (individual sets are bitmasks).
pub const MAX_INDIVIDUALS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("need at least 3 alternatives, got {0}")]
    TooFewAlternatives(usize),
    #[error("need at least 3 individuals, got {0}")]
    TooFewIndividuals(usize),
    #[error("at most {MAX_ALTERNATIVES} alternatives are supported, got {0}")]
    TooManyAlternatives(usize),
    #[error("at most {MAX_INDIVIDUALS} individuals are supported, got {0}")]
    TooManyIndividuals(usize),
    #[error("duplicate alternative id {0:?}")]
    DuplicateAlternative(String),
    #[error("duplicate individual id {0:?}")]
    DuplicateIndividual(String),
    #[error("unknown alternative {0:?}")]
    UnknownAlternative(String),
    #[error("unknown individual {0:?}")]
    UnknownIndividual(String),
    #[error("individual {individual:?} evaluates unknown alternative {alternative:?}")]
    EvaluatesUnknown { individual: String, alternative: String },
    #[error("individual {individual:?} lists alternative {alternative:?} twice")]
    RepeatedEvaluation { individual: String, alternative: String },
    #[error("individual {individual:?} evaluates {size} alternative(s); at least 2 are required")]
    EvaluableSetTooSmall { individual: String, size: usize },
}

/// Who can rank what: alternatives `A`, individuals `V` and the evaluable
/// sets `A_v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvaluabilityProfile {
    alternatives: Vec<String>,
    individuals: Vec<String>,
    evaluable: Vec<AltSet>,
}

impl EvaluabilityProfile {
    /// Builds and validates a profile from string ids. Individuals are given
    /// with the alternatives they evaluate; list order fixes the dense indices.
    pub fn new<S: AsRef<str>>(
        alternatives: &[S],
        individuals: &[(S, Vec<S>)],
    ) -> Result<Self, ProfileError> {
        let alternatives: Vec<String> =
            alternatives.iter().map(|s| s.as_ref().to_owned()).collect();
        check_unique(&alternatives).map_err(ProfileError::DuplicateAlternative)?;
        if alternatives.len() > MAX_ALTERNATIVES {
            return Err(ProfileError::TooManyAlternatives(alternatives.len()));
        }
        let names: Vec<String> = individuals.iter().map(|(id, _)| id.as_ref().to_owned()).collect();
        check_unique(&names).map_err(ProfileError::DuplicateIndividual)?;

        let mut evaluable = Vec::with_capacity(individuals.len());
        for (name, (_, evaluates)) in names.iter().zip(individuals) {
            let mut set = AltSet::EMPTY;
            for alt in evaluates {
                let alt = alt.as_ref();
                let a = alternatives.iter().position(|x| x == alt).ok_or_else(|| {
                    ProfileError::EvaluatesUnknown {
                        individual: name.clone(),
                        alternative: alt.to_owned(),
                    }
                })?;
                if set.contains(a) {
                    return Err(ProfileError::RepeatedEvaluation {
                        individual: name.clone(),
                        alternative: alt.to_owned(),
                    });
                }
                set = set.with(a);
            }
            evaluable.push(set);
        }
        Self::validated(alternatives, names, evaluable)
    }

    /// Profile over alternatives `a1..an` and individuals `v1..vm`, with
    /// evaluable sets given as bitmasks.
    pub fn from_sets(n_alts: usize, evaluable: Vec<AltSet>) -> Result<Self, ProfileError> {
        if n_alts > MAX_ALTERNATIVES {
            return Err(ProfileError::TooManyAlternatives(n_alts));
        }
        let alternatives = (1..=n_alts).map(|i| format!("a{i}")).collect();
        let individuals = (1..=evaluable.len()).map(|i| format!("v{i}")).collect();
        let all = AltSet::prefix(n_alts);
        if let Some(v) = evaluable.iter().position(|s| !s.is_subset(all)) {
            let a = (evaluable[v] - all).min().unwrap();
            return Err(ProfileError::EvaluatesUnknown {
                individual: format!("v{}", v + 1),
                alternative: format!("#{a}"),
            });
        }
        Self::validated(alternatives, individuals, evaluable)
    }

    fn validated(
        alternatives: Vec<String>,
        individuals: Vec<String>,
        evaluable: Vec<AltSet>,
    ) -> Result<Self, ProfileError> {
        if alternatives.len() < 3 {
            return Err(ProfileError::TooFewAlternatives(alternatives.len()));
        }
        if individuals.len() < 3 {
            return Err(ProfileError::TooFewIndividuals(individuals.len()));
        }
        if individuals.len() > MAX_INDIVIDUALS {
            return Err(ProfileError::TooManyIndividuals(individuals.len()));
        }
        for (name, set) in individuals.iter().zip(&evaluable) {
            if set.len() < 2 {
                return Err(ProfileError::EvaluableSetTooSmall {
                    individual: name.clone(),
                    size: set.len(),
                });
            }
        }
        Ok(EvaluabilityProfile { alternatives, individuals, evaluable })
    }

    pub fn n_alts(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_inds(&self) -> usize {
        self.individuals.len()
    }

    pub fn all_alts(&self) -> AltSet {
        AltSet::prefix(self.n_alts())
    }

    pub fn all_inds(&self) -> IndSet {
        IndSet::prefix(self.n_inds())
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn individuals(&self) -> &[String] {
        &self.individuals
    }

    pub fn alt_name(&self, a: Alt) -> &str {
        &self.alternatives[a]
    }

    pub fn ind_name(&self, v: Ind) -> &str {
        &self.individuals[v]
    }

    pub fn alt_index(&self, name: &str) -> Result<Alt, ProfileError> {
        self.alternatives
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| ProfileError::UnknownAlternative(name.to_owned()))
    }

    pub fn ind_index(&self, name: &str) -> Result<Ind, ProfileError> {
        self.individuals
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| ProfileError::UnknownIndividual(name.to_owned()))
    }

    /// `A_v`.
    pub fn evaluable(&self, v: Ind) -> AltSet {
        self.evaluable[v]
    }

    pub fn evaluable_sets(&self) -> &[AltSet] {
        &self.evaluable
    }

    /// `V(a)`.
    pub fn evaluators_of(&self, a: Alt) -> IndSet {
        self.evaluable.iter().enumerate().filter(|(_, s)| s.contains(a)).map(|(v, _)| v).collect()
    }

    /// `V(a) ∩ V(b)`.
    pub fn common_evaluators(&self, a: Alt, b: Alt) -> IndSet {
        self.evaluators_of(a) & self.evaluators_of(b)
    }

    pub fn complete_individuals(&self) -> IndSet {
        let all = self.all_alts();
        self.evaluable.iter().enumerate().filter(|(_, &s)| s == all).map(|(v, _)| v).collect()
    }

    pub fn union_graph(&self) -> UnionGraph {
        UnionGraph::from_sets(self.n_alts(), &self.evaluable)
    }

    /// Every pair of alternatives is evaluated together by someone.
    pub fn is_nontrivial(&self) -> bool {
        self.union_graph().is_complete()
    }

    /// Smallest individual (input order) whose evaluable set contains `set`.
    pub fn first_covering(&self, set: AltSet) -> Option<Ind> {
        self.evaluable.iter().position(|s| set.is_subset(*s))
    }
}

fn check_unique(ids: &[String]) -> Result<(), String> {
    let mut seen = HashSet::new();
    match ids.iter().find(|id| !seen.insert(id.as_str())) {
        Some(dup) => Err(dup.clone()),
        None => Ok(()),
    }
}

/// The graph `G` on the alternatives, with one clique `G_v` per individual.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnionGraph {
    nodes: AltSet,
    adjacency: Vec<AltSet>,
    cliques: Vec<AltSet>,
}

impl UnionGraph {
    pub fn from_sets(n_alts: usize, sets: &[AltSet]) -> Self {
        let mut adjacency = vec![AltSet::EMPTY; n_alts];
        for &set in sets {
            for a in set {
                adjacency[a] |= set.without(a);
            }
        }
        UnionGraph { nodes: AltSet::prefix(n_alts), adjacency, cliques: sets.to_vec() }
    }

    pub fn nodes(&self) -> AltSet {
        self.nodes
    }

    pub fn n_nodes(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, a: Alt) -> AltSet {
        self.adjacency[a]
    }

    pub fn has_edge(&self, a: Alt, b: Alt) -> bool {
        self.adjacency[a].contains(b)
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(Alt, Alt)> {
        self.nodes
            .iter()
            .flat_map(|a| (self.adjacency[a] - IdSet::prefix(a + 1)).iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Node sets of the cliques `G_v`, in individual order.
    pub fn cliques(&self) -> &[AltSet] {
        &self.cliques
    }

    /// Edges of `G_v`.
    pub fn clique_edges(&self, v: Ind) -> Vec<(Alt, Alt)> {
        let set = self.cliques[v];
        set.iter().flat_map(|a| (set - IdSet::prefix(a + 1)).iter().map(move |b| (a, b))).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.nodes.iter().all(|a| self.adjacency[a] == self.nodes.without(a))
    }

    /// Adjacency restricted to `subset`.
    pub fn induced_neighbors(&self, a: Alt, subset: AltSet) -> AltSet {
        self.adjacency[a] & subset
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example1() -> EvaluabilityProfile {
        EvaluabilityProfile::new(
            &["a1", "a2", "a3", "a4", "a5", "a6", "a7"],
            &[
                ("v1", vec!["a1", "a2", "a3", "a4"]),
                ("v2", vec!["a4", "a5", "a6"]),
                ("v3", vec!["a6", "a7"]),
            ],
        )
        .unwrap()
    }

    fn set(ids: &[usize]) -> AltSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn builds_example1() {
        let p = example1();
        assert_eq!(p.n_alts(), 7);
        assert_eq!(p.evaluable(1), set(&[3, 4, 5]));
        assert_eq!(p.evaluators_of(3), set(&[0, 1]));
        assert!(p.common_evaluators(0, 6).is_empty());
        assert!(p.complete_individuals().is_empty());
        assert!(!p.is_nontrivial());
    }

    #[test]
    fn validation_errors() {
        let err = EvaluabilityProfile::new(
            &["a", "b", "c"],
            &[("x", vec!["a"]), ("y", vec!["a", "b"]), ("z", vec!["b", "c"])],
        );
        assert_eq!(
            err,
            Err(ProfileError::EvaluableSetTooSmall { individual: "x".into(), size: 1 })
        );
        let err = EvaluabilityProfile::new(&["a", "b"], &[("x", vec!["a", "b"])]);
        assert_eq!(err, Err(ProfileError::TooFewAlternatives(2)));
        let err = EvaluabilityProfile::new(
            &["a", "b", "c"],
            &[("x", vec!["a", "b"]), ("y", vec!["a", "b"])],
        );
        assert_eq!(err, Err(ProfileError::TooFewIndividuals(2)));
        let err = EvaluabilityProfile::new(
            &["a", "b", "a"],
            &[("x", vec!["a", "b"]), ("y", vec!["a", "b"]), ("z", vec!["a", "b"])],
        );
        assert_eq!(err, Err(ProfileError::DuplicateAlternative("a".into())));
        let err = EvaluabilityProfile::new(
            &["a", "b", "c"],
            &[("x", vec!["a", "d"]), ("y", vec!["a", "b"]), ("x", vec!["a", "b"])],
        );
        assert_eq!(err, Err(ProfileError::DuplicateIndividual("x".into())));
        let err = EvaluabilityProfile::new(
            &["a", "b", "c"],
            &[("x", vec!["a", "d"]), ("y", vec!["a", "b"]), ("z", vec!["a", "b"])],
        );
        assert!(matches!(err, Err(ProfileError::EvaluatesUnknown { .. })));
        assert!(EvaluabilityProfile::from_sets(3, vec![set(&[0, 5]); 3]).is_err());
        assert_eq!(
            EvaluabilityProfile::from_sets(21, vec![set(&[0, 1]); 3]),
            Err(ProfileError::TooManyAlternatives(21))
        );
    }

    #[test]
    fn peer_rating_is_nontrivial_without_complete_individual() {
        let p = EvaluabilityProfile::new(
            &["1", "2", "3"],
            &[("1", vec!["2", "3"]), ("2", vec!["1", "3"]), ("3", vec!["1", "2"])],
        )
        .unwrap();
        assert!(p.complete_individuals().is_empty());
        assert!(p.is_nontrivial());
    }

    #[test]
    fn union_graph_example1() {
        let g = example1().union_graph();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(
            g.edges(),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)]
        );
        assert_eq!(g.clique_edges(2), vec![(5, 6)]);
    }

    #[test]
    fn union_of_two_cliques() {
        let p = EvaluabilityProfile::from_sets(
            4,
            vec![set(&[0, 1, 2]), set(&[0, 2, 3]), set(&[0, 1, 2])],
        )
        .unwrap();
        assert_eq!(p.union_graph().edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn complete_individual_makes_graph_complete() {
        let p =
            EvaluabilityProfile::from_sets(4, vec![set(&[0, 1]), set(&[0, 1, 2, 3]), set(&[2, 3])])
                .unwrap();
        assert_eq!(p.complete_individuals(), set(&[1]));
        assert!(p.is_nontrivial());
        assert_eq!(p.alt_index("a3"), Ok(2));
        assert!(p.alt_index("zz").is_err());
    }
}
