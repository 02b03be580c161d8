//! The two constructive aggregation rules.
//!
//! `f*` keeps only unanimous strict preferences among the common evaluators
//! of each pair and extends them to a linear order. `f**` hands every pair
//! to a single designated evaluator: the local dictator of the maximal cycle
//! containing the pair if there is one, otherwise the first common
//! evaluator. Ties of the designee fall back to the tie-break order.

use thiserror::Error;

use crate::conditions::{Condition1, CycleSpace};
use crate::profile::EvaluabilityProfile;
use crate::relations::{
    linear_extension, Alt, AltSet, BinaryRelation, Ind, RankingProfile, StrictDigraph, WeakOrder,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AggregationError {
    #[error("the cycle {cycle:?} is not covered by any evaluable set")]
    Condition1Fails { cycle: Vec<Alt> },
    #[error("cycle family does not fit the profile: {0}")]
    FamilyMismatch(String),
    #[error("invalid pair designation: {0}")]
    BadDesignation(String),
}

/// An aggregation rule applied to ranking profiles of one fixed
/// evaluability profile.
pub trait Arf: Sync {
    fn name(&self) -> String;
    fn aggregate(&self, rankings: &RankingProfile) -> BinaryRelation;
}

/// Constraint digraph, the returned order, and whether the constraint was
/// cyclic (in which case the order is total indifference and nothing is
/// promised about it).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AggregationResult {
    pub constraint: StrictDigraph,
    pub order: WeakOrder,
    pub degenerate: bool,
}

fn extend(constraint: StrictDigraph, tiebreak: &WeakOrder) -> AggregationResult {
    match linear_extension(&constraint, tiebreak) {
        Ok(order) => AggregationResult { constraint, order, degenerate: false },
        Err(_) => {
            let order = WeakOrder::indifferent(constraint.ground());
            AggregationResult { constraint, order, degenerate: true }
        }
    }
}

/// Input order of the alternatives, as a linear order.
pub fn default_tiebreak(profile: &EvaluabilityProfile) -> WeakOrder {
    WeakOrder::linear(&(0..profile.n_alts()).collect::<Vec<_>>()).unwrap()
}

/// `a R* b` iff `a` and `b` share an evaluator and every common evaluator
/// strictly prefers `a`.
pub fn r_star(profile: &EvaluabilityProfile, rankings: &RankingProfile) -> StrictDigraph {
    let mut d = StrictDigraph::new(profile.all_alts());
    let evaluators: Vec<_> = (0..profile.n_alts()).map(|a| profile.evaluators_of(a)).collect();
    for a in 0..profile.n_alts() {
        for b in 0..profile.n_alts() {
            let common = evaluators[a] & evaluators[b];
            if a != b
                && !common.is_empty()
                && common.iter().all(|v| rankings.get(v).strictly_prefers(a, b))
            {
                d.insert(a, b).expect("unanimous strict preference is asymmetric");
            }
        }
    }
    d
}

pub fn f_star(
    profile: &EvaluabilityProfile,
    rankings: &RankingProfile,
    tiebreak: &WeakOrder,
) -> AggregationResult {
    extend(r_star(profile, rankings), tiebreak)
}

/// Maximal cycles `A^1..A^X` covering every node that lies on a cycle, the
/// residual `A^0`, and a local dictator per cycle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MaximalCycleFamily {
    pub sets: Vec<AltSet>,
    pub residual: AltSet,
    pub dictators: Vec<Ind>,
}

impl MaximalCycleFamily {
    /// Index `x` of the family member containing both `a` and `b`.
    pub fn containing_pair(&self, a: Alt, b: Alt) -> Option<usize> {
        self.sets.iter().position(|s| s.contains(a) && s.contains(b))
    }

    pub fn check(&self, profile: &EvaluabilityProfile) -> Result<(), AggregationError> {
        let mismatch = |msg: String| Err(AggregationError::FamilyMismatch(msg));
        if self.sets.len() != self.dictators.len() {
            return mismatch("one dictator per set required".into());
        }
        let mut union = AltSet::EMPTY;
        for (&set, &v) in self.sets.iter().zip(&self.dictators) {
            if !set.is_subset(profile.all_alts()) {
                return mismatch(format!("{set:?} has unknown alternatives"));
            }
            if v >= profile.n_inds() || !set.is_subset(profile.evaluable(v)) {
                return mismatch(format!("dictator {v} does not evaluate {set:?}"));
            }
            union |= set;
        }
        if self.residual != profile.all_alts() - union {
            return mismatch("residual is not the complement of the cycle sets".into());
        }
        for (x, &sx) in self.sets.iter().enumerate() {
            for &sy in &self.sets[x + 1..] {
                if (sx & sy).len() > 1 {
                    return mismatch(format!("{sx:?} and {sy:?} share more than one node"));
                }
            }
        }
        Ok(())
    }
}

/// Greedy construction: take the smallest uncovered node lying on some
/// cycle, add the smallest (bitmask order) maximal cyclic set containing it,
/// repeat. Each set's dictator is the first individual evaluating all of it.
pub fn maximal_cycle_family(
    profile: &EvaluabilityProfile,
) -> Result<MaximalCycleFamily, AggregationError> {
    let graph = profile.union_graph();
    let space = CycleSpace::for_graph(&graph);
    let certificate = match crate::conditions::check_condition1(profile) {
        Condition1::Fails { cycle } => return Err(AggregationError::Condition1Fails { cycle }),
        Condition1::Holds { certificate } => certificate,
    };
    let maximal: Vec<AltSet> = certificate.iter().map(|e| e.nodes).collect();
    debug_assert_eq!(maximal, space.maximal_cyclic_subsets());
    let on_cycles = maximal.iter().fold(AltSet::EMPTY, |acc, &s| acc | s);

    let mut sets = Vec::new();
    let mut covered = AltSet::EMPTY;
    while let Some(a) = (on_cycles - covered).min() {
        let chosen = *maximal.iter().find(|s| s.contains(a)).expect("node lies on a cycle");
        sets.push(chosen);
        covered |= chosen;
    }
    let dictators =
        sets.iter().map(|&s| profile.first_covering(s).expect("Condition 1 holds")).collect();
    Ok(MaximalCycleFamily { sets, residual: profile.all_alts() - covered, dictators })
}

/// Which individual decides each unordered pair in `R**`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairDesignation {
    n_alts: usize,
    designee: Vec<Option<Ind>>,
}

impl PairDesignation {
    /// Pairs inside a family set go to its dictator; other pairs with a
    /// common evaluator go to the first one; the rest stay undecided.
    pub fn canonical(profile: &EvaluabilityProfile, family: &MaximalCycleFamily) -> Self {
        let n = profile.n_alts();
        let mut designee = vec![None; n * n];
        for a in 0..n {
            for b in a + 1..n {
                let who = match family.containing_pair(a, b) {
                    Some(x) => Some(family.dictators[x]),
                    None => profile.common_evaluators(a, b).min(),
                };
                designee[a * n + b] = who;
                designee[b * n + a] = who;
            }
        }
        PairDesignation { n_alts: n, designee }
    }

    pub fn designee(&self, a: Alt, b: Alt) -> Option<Ind> {
        self.designee[a * self.n_alts + b]
    }

    /// Reassigns a pair outside every family set to another common evaluator.
    pub fn with_designee(
        mut self,
        profile: &EvaluabilityProfile,
        family: &MaximalCycleFamily,
        (a, b): (Alt, Alt),
        v: Ind,
    ) -> Result<Self, AggregationError> {
        if a == b || a >= self.n_alts || b >= self.n_alts {
            return Err(AggregationError::BadDesignation(format!("bad pair ({a}, {b})")));
        }
        if family.containing_pair(a, b).is_some() {
            return Err(AggregationError::BadDesignation(format!(
                "pair ({a}, {b}) is decided by its cycle's dictator"
            )));
        }
        if !profile.common_evaluators(a, b).contains(v) {
            return Err(AggregationError::BadDesignation(format!(
                "individual {v} does not evaluate both {a} and {b}"
            )));
        }
        self.designee[a * self.n_alts + b] = Some(v);
        self.designee[b * self.n_alts + a] = Some(v);
        Ok(self)
    }
}

/// `R**`: one arc per pair with a designee, following the designee's strict
/// preference and the tie-break on indifference.
pub fn r_double_star(
    profile: &EvaluabilityProfile,
    rankings: &RankingProfile,
    family: &MaximalCycleFamily,
    tiebreak: &WeakOrder,
    designation: &PairDesignation,
) -> Result<StrictDigraph, AggregationError> {
    family.check(profile)?;
    if designation.n_alts != profile.n_alts() {
        return Err(AggregationError::FamilyMismatch("designation size differs".into()));
    }
    if !tiebreak.is_linear() || tiebreak.ground() != profile.all_alts() {
        return Err(AggregationError::FamilyMismatch("tie-break must be linear on A".into()));
    }
    Ok(decide_pairs(profile.n_alts(), rankings, tiebreak, designation))
}

fn decide_pairs(
    n: usize,
    rankings: &RankingProfile,
    tiebreak: &WeakOrder,
    designation: &PairDesignation,
) -> StrictDigraph {
    let mut d = StrictDigraph::new(AltSet::prefix(n));
    for a in 0..n {
        for b in a + 1..n {
            let Some(v) = designation.designee(a, b) else { continue };
            let r = rankings.get(v);
            let a_first = r.strictly_prefers(a, b)
                || (r.is_indifferent(a, b) && tiebreak.strictly_prefers(a, b));
            let (hi, lo) = if a_first { (a, b) } else { (b, a) };
            d.insert(hi, lo).expect("one arc per pair");
        }
    }
    d
}

pub fn f_double_star(
    profile: &EvaluabilityProfile,
    rankings: &RankingProfile,
    tiebreak: &WeakOrder,
) -> Result<AggregationResult, AggregationError> {
    Ok(FStarStar::new(profile, tiebreak.clone())?.result(rankings))
}

/// `f*` bound to a profile and tie-break.
pub struct FStar {
    profile: EvaluabilityProfile,
    tiebreak: WeakOrder,
}

impl FStar {
    pub fn new(profile: &EvaluabilityProfile, tiebreak: WeakOrder) -> Self {
        FStar { profile: profile.clone(), tiebreak }
    }

    pub fn result(&self, rankings: &RankingProfile) -> AggregationResult {
        f_star(&self.profile, rankings, &self.tiebreak)
    }
}

impl Arf for FStar {
    fn name(&self) -> String {
        "fstar".into()
    }

    fn aggregate(&self, rankings: &RankingProfile) -> BinaryRelation {
        self.result(rankings).order.to_relation()
    }
}

/// `f**` with its cycle family and pair designation computed once.
pub struct FStarStar {
    family: MaximalCycleFamily,
    designation: PairDesignation,
    tiebreak: WeakOrder,
    n_alts: usize,
}

impl FStarStar {
    pub fn new(
        profile: &EvaluabilityProfile,
        tiebreak: WeakOrder,
    ) -> Result<Self, AggregationError> {
        let family = maximal_cycle_family(profile)?;
        let designation = PairDesignation::canonical(profile, &family);
        if !tiebreak.is_linear() || tiebreak.ground() != profile.all_alts() {
            return Err(AggregationError::FamilyMismatch("tie-break must be linear on A".into()));
        }
        Ok(FStarStar { family, designation, tiebreak, n_alts: profile.n_alts() })
    }

    pub fn family(&self) -> &MaximalCycleFamily {
        &self.family
    }

    pub fn designation(&self) -> &PairDesignation {
        &self.designation
    }

    pub fn result(&self, rankings: &RankingProfile) -> AggregationResult {
        extend(
            decide_pairs(self.n_alts, rankings, &self.tiebreak, &self.designation),
            &self.tiebreak,
        )
    }
}

impl Arf for FStarStar {
    fn name(&self) -> String {
        "fstarstar".into()
    }

    fn aggregate(&self, rankings: &RankingProfile) -> BinaryRelation {
        self.result(rankings).order.to_relation()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> AltSet {
        ids.iter().copied().collect()
    }

    fn example1() -> (EvaluabilityProfile, RankingProfile) {
        let p = EvaluabilityProfile::from_sets(
            7,
            vec![set(&[0, 1, 2, 3]), set(&[3, 4, 5]), set(&[5, 6])],
        )
        .unwrap();
        let r = RankingProfile::new(
            &p,
            vec![
                WeakOrder::linear(&[1, 3, 0, 2]).unwrap(),
                WeakOrder::linear(&[4, 5, 3]).unwrap(),
                WeakOrder::linear(&[6, 5]).unwrap(),
            ],
        )
        .unwrap();
        (p, r)
    }

    const EXAMPLE1_ARCS: [(Alt, Alt); 10] =
        [(1, 3), (1, 0), (1, 2), (3, 0), (3, 2), (0, 2), (4, 5), (4, 3), (5, 3), (6, 5)];

    fn sorted(mut arcs: Vec<(Alt, Alt)>) -> Vec<(Alt, Alt)> {
        arcs.sort();
        arcs
    }

    #[test]
    fn r_star_example1_single_evaluator_pairs() {
        let (p, r) = example1();
        assert_eq!(r_star(&p, &r).arcs(), sorted(EXAMPLE1_ARCS.to_vec()));
    }

    #[test]
    fn r_star_opposed_and_unanimous() {
        let p = EvaluabilityProfile::from_sets(3, vec![set(&[0, 1, 2]); 3]).unwrap();
        let up = WeakOrder::linear(&[0, 1, 2]).unwrap();
        let down = WeakOrder::linear(&[2, 1, 0]).unwrap();
        let r = RankingProfile::new(&p, vec![up.clone(), down, up.clone()]).unwrap();
        assert!(r_star(&p, &r).arcs().is_empty());
        let r = RankingProfile::new(&p, vec![up.clone(); 3]).unwrap();
        assert_eq!(r_star(&p, &r), up.strict_part());
        let out = f_star(&p, &r, &WeakOrder::linear(&[2, 0, 1]).unwrap());
        assert_eq!(out.order, up);
        assert!(!out.degenerate);
    }

    #[test]
    fn family_example1() {
        let (p, _) = example1();
        let fam = maximal_cycle_family(&p).unwrap();
        assert_eq!(fam.sets, vec![set(&[0, 1, 2, 3]), set(&[3, 4, 5])]);
        assert_eq!(fam.residual, set(&[6]));
        assert_eq!(fam.dictators, vec![0, 1]);
        fam.check(&p).unwrap();
    }

    #[test]
    fn family_edge_cases() {
        let path =
            EvaluabilityProfile::from_sets(4, vec![set(&[0, 1]), set(&[1, 2]), set(&[2, 3])])
                .unwrap();
        let fam = maximal_cycle_family(&path).unwrap();
        assert!(fam.sets.is_empty());
        assert_eq!(fam.residual, set(&[0, 1, 2, 3]));

        let dp =
            EvaluabilityProfile::from_sets(4, vec![set(&[0, 1]), set(&[0, 1, 2, 3]), set(&[2, 3])])
                .unwrap();
        let fam = maximal_cycle_family(&dp).unwrap();
        assert_eq!(fam.sets, vec![set(&[0, 1, 2, 3])]);
        assert_eq!(fam.dictators, vec![1]);
        assert!(fam.residual.is_empty());

        let ip = EvaluabilityProfile::from_sets(3, vec![set(&[0, 1]), set(&[0, 2]), set(&[1, 2])])
            .unwrap();
        assert_eq!(
            maximal_cycle_family(&ip),
            Err(AggregationError::Condition1Fails { cycle: vec![0, 1, 2] })
        );
    }

    #[test]
    fn r_double_star_example1() {
        let (p, r) = example1();
        let fam = maximal_cycle_family(&p).unwrap();
        let des = PairDesignation::canonical(&p, &fam);
        assert_eq!(des.designee(0, 6), None);
        assert_eq!(des.designee(3, 5), Some(1));
        assert_eq!(des.designee(5, 6), Some(2));
        let tb = default_tiebreak(&p);
        let d = r_double_star(&p, &r, &fam, &tb, &des).unwrap();
        assert_eq!(d.arcs(), sorted(EXAMPLE1_ARCS.to_vec()));
        assert!(!d.contains(0, 6) && !d.contains(6, 0));

        let out = f_double_star(&p, &r, &tb).unwrap();
        assert!(!out.degenerate);
        assert!(d.is_subset_of(&out.order.strict_part()));
        let known = WeakOrder::linear(&[1, 4, 6, 5, 3, 0, 2]).unwrap();
        assert!(d.is_subset_of(&known.strict_part()));
    }

    #[test]
    fn indifferent_dictator_defers_to_tiebreak() {
        let p =
            EvaluabilityProfile::from_sets(3, vec![set(&[0, 1, 2]), set(&[0, 1]), set(&[1, 2])])
                .unwrap();
        let r = RankingProfile::new(
            &p,
            vec![
                WeakOrder::indifferent(set(&[0, 1, 2])),
                WeakOrder::linear(&[1, 0]).unwrap(),
                WeakOrder::linear(&[2, 1]).unwrap(),
            ],
        )
        .unwrap();
        let tb = WeakOrder::linear(&[2, 0, 1]).unwrap();
        let out = f_double_star(&p, &r, &tb).unwrap();
        assert_eq!(out.constraint, tb.strict_part());
        assert_eq!(out.order, tb);
    }

    #[test]
    fn designation_overrides_are_checked() {
        let p =
            EvaluabilityProfile::from_sets(4, vec![set(&[0, 1]), set(&[1, 2]), set(&[1, 2, 3])])
                .unwrap();
        let fam = maximal_cycle_family(&p).unwrap();
        assert_eq!(fam.sets, vec![set(&[1, 2, 3])]);
        let des = PairDesignation::canonical(&p, &fam);
        assert!(des.clone().with_designee(&p, &fam, (1, 2), 1).is_err());
        assert!(des.clone().with_designee(&p, &fam, (0, 1), 2).is_err());
        let p2 = EvaluabilityProfile::from_sets(4, vec![set(&[0, 1]), set(&[0, 1]), set(&[2, 3])])
            .unwrap();
        let fam2 = maximal_cycle_family(&p2).unwrap();
        let des2 = PairDesignation::canonical(&p2, &fam2);
        assert_eq!(des2.designee(0, 1), Some(0));
        let des2 = des2.with_designee(&p2, &fam2, (1, 0), 1).unwrap();
        assert_eq!(des2.designee(0, 1), Some(1));
    }

    #[test]
    fn cyclic_unanimity_is_degenerate_for_f_star() {
        let p = EvaluabilityProfile::from_sets(3, vec![set(&[1, 2]), set(&[0, 2]), set(&[0, 1])])
            .unwrap();
        let w = crate::conditions::cyclic_profile(&p, &[0, 1, 2]).unwrap();
        let out = f_star(&p, &w.rankings, &default_tiebreak(&p));
        assert!(out.degenerate);
        assert_eq!(out.order, WeakOrder::indifferent(p.all_alts()));
        assert!(out.constraint.has_cycle(&w.unanimity_cycle()));
    }
}
