//! Exhaustive axiom checks over the whole ranking-profile space `W`.
//!
//! Pareto, IIA and non-constancy are only quantified over pairs that share
//! at least one evaluator. Taken literally on pairs with no common evaluator,
//! the Pareto premise is vacuous in both directions and IIA would force a
//! constant outcome, so those pairs are exempt.
//!
//! The space is scanned once, in index order, in parallel chunks. Every
//! piece of per-chunk state keeps minimum indices only, so merging is
//! order-independent and the reported counterexample is always the one with
//! the smallest profile index.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::aggregators::{Arf, FStar, FStarStar};
use crate::conditions::CyclicProfileWitness;
use crate::profile::EvaluabilityProfile;
use crate::relations::{
    enumerate_weak_orders, Alt, BinaryRelation, Ind, IndSet, PairOutcome, RankingProfile, WeakOrder,
};

pub const DEFAULT_BUDGET: u128 = 10_000_000;
const CHUNK: u64 = 2048;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    Tv,
    Pc,
    Wpc,
    Iia,
    Nc,
    Nd,
}

impl Axiom {
    pub const ALL: [Axiom; 6] =
        [Axiom::Tv, Axiom::Pc, Axiom::Wpc, Axiom::Iia, Axiom::Nc, Axiom::Nd];

    pub fn code(self) -> &'static str {
        match self {
            Axiom::Tv => "tv",
            Axiom::Pc => "pc",
            Axiom::Wpc => "wpc",
            Axiom::Iia => "iia",
            Axiom::Nc => "nc",
            Axiom::Nd => "nd",
        }
    }

    pub fn parse(code: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.code() == code)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("ranking-profile space has {required} elements, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("no complete individual to act as dictator")]
    NoCompleteIndividual,
    #[error("individual {0} is not complete")]
    NotComplete(Ind),
    #[error(transparent)]
    Aggregation(#[from] crate::aggregators::AggregationError),
}

/// `W`: every combination of one weak order per individual. Index `i`
/// decodes in mixed radix with the last individual varying fastest.
pub struct RankingSpace {
    choices: Vec<Vec<WeakOrder>>,
    size: u128,
}

impl RankingSpace {
    pub fn new(profile: &EvaluabilityProfile) -> Self {
        let choices: Vec<Vec<WeakOrder>> =
            profile.evaluable_sets().iter().map(|&s| enumerate_weak_orders(s)).collect();
        let size = choices.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
        RankingSpace { choices, size }
    }

    pub fn size(&self) -> u128 {
        self.size
    }

    pub fn get(&self, mut index: u64) -> RankingProfile {
        let mut orders = vec![];
        for options in self.choices.iter().rev() {
            let radix = options.len() as u64;
            orders.push(options[(index % radix) as usize].clone());
            index /= radix;
        }
        orders.reverse();
        RankingProfile::from_orders_unchecked(orders)
    }
}

/// A reported axiom failure. Profile indices refer to [`RankingSpace`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Counterexample {
    Intransitive {
        index: u64,
        rankings: RankingProfile,
        triple: (Alt, Alt, Alt),
    },
    /// All common evaluators rank `pair.0` strictly over `pair.1`, the output
    /// does not (strictly, for PC; weakly, for wPC).
    Pareto {
        index: u64,
        rankings: RankingProfile,
        pair: (Alt, Alt),
    },
    /// Same restriction on the pair for all common evaluators, different
    /// output restriction.
    Iia {
        pair: (Alt, Alt),
        first: (u64, RankingProfile),
        second: (u64, RankingProfile),
    },
    /// The output on the pair never changes.
    Constant {
        pair: (Alt, Alt),
        outcome: PairOutcome,
    },
    /// A complete individual whose strict preferences always survive.
    Dictator {
        individual: Ind,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AxiomResult {
    Pass,
    Fail(Counterexample),
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomResult::Pass)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PropertyReport {
    pub rule: String,
    pub profile_space_size: u64,
    pub results: Vec<(Axiom, AxiomResult)>,
    pub quasi_dictators: IndSet,
}

impl PropertyReport {
    pub fn result(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|(a, _)| *a == axiom).map(|(_, r)| r)
    }

    pub fn passed(&self, axiom: Axiom) -> bool {
        self.result(axiom).is_some_and(AxiomResult::passed)
    }
}

/// Pairs with a common evaluator, and who those evaluators are.
struct PairIndex {
    /// unordered pairs a < b with common evaluators
    pairs: Vec<(Alt, Alt, Vec<Ind>)>,
}

impl PairIndex {
    fn new(profile: &EvaluabilityProfile) -> Self {
        let n = profile.n_alts();
        let mut pairs = vec![];
        for a in 0..n {
            for b in a + 1..n {
                let common: Vec<Ind> = profile.common_evaluators(a, b).iter().collect();
                if !common.is_empty() {
                    pairs.push((a, b, common));
                }
            }
        }
        PairIndex { pairs }
    }
}

fn ranking_outcome(r: &WeakOrder, a: Alt, b: Alt) -> PairOutcome {
    if r.strictly_prefers(a, b) {
        PairOutcome::Above
    } else if r.strictly_prefers(b, a) {
        PairOutcome::Below
    } else {
        PairOutcome::Tied
    }
}

type MinByOutcome = [Option<u64>; 4];

fn merge_min(into: &mut MinByOutcome, from: &MinByOutcome) {
    for (x, y) in into.iter_mut().zip(from) {
        *x = match (*x, *y) {
            (Some(p), Some(q)) => Some(p.min(q)),
            (p, q) => p.or(q),
        };
    }
}

fn keep_min<T: Copy>(slot: &mut Option<(u64, T)>, candidate: Option<(u64, T)>) {
    if let Some((i, t)) = candidate {
        if slot.is_none_or(|(j, _)| i < j) {
            *slot = Some((i, t));
        }
    }
}

#[derive(Default)]
struct ScanState {
    intransitive: Option<(u64, (Alt, Alt, Alt))>,
    pc: Option<(u64, (Alt, Alt))>,
    wpc: Option<(u64, (Alt, Alt))>,
    /// per pair: restriction key -> min index per output outcome
    iia: Vec<HashMap<u128, MinByOutcome>>,
    /// per pair: min index per output outcome
    nc: Vec<MinByOutcome>,
    /// per individual: first profile where a strict preference is lost
    quasi: Vec<Option<(u64, (Alt, Alt))>>,
}

impl ScanState {
    fn new(n_pairs: usize, n_inds: usize) -> Self {
        ScanState {
            iia: vec![HashMap::new(); n_pairs],
            nc: vec![[None; 4]; n_pairs],
            quasi: vec![None; n_inds],
            ..Default::default()
        }
    }

    fn observe(
        &mut self,
        index: u64,
        rankings: &RankingProfile,
        out: &BinaryRelation,
        pairs: &PairIndex,
    ) {
        if self.intransitive.is_none() {
            self.intransitive = out.transitivity_violation().map(|t| (index, t));
        }
        for (k, (a, b, common)) in pairs.pairs.iter().enumerate() {
            let (a, b) = (*a, *b);
            let mut key = 0u128;
            let mut unanimous = [true, true];
            for &v in common {
                let o = ranking_outcome(rankings.get(v), a, b);
                key = key * 3 + o.index() as u128;
                unanimous[0] &= o == PairOutcome::Above;
                unanimous[1] &= o == PairOutcome::Below;
            }
            let outcome = out.outcome(a, b);
            for (hi, lo, flag) in [(a, b, unanimous[0]), (b, a, unanimous[1])] {
                if flag {
                    if self.pc.is_none() && !out.strict(hi, lo) {
                        self.pc = Some((index, (hi, lo)));
                    }
                    if self.wpc.is_none() && !out.holds(hi, lo) {
                        self.wpc = Some((index, (hi, lo)));
                    }
                }
            }
            let slot = &mut self.iia[k].entry(key).or_insert([None; 4])[outcome.index()];
            slot.get_or_insert(index);
            self.nc[k][outcome.index()].get_or_insert(index);
        }
        for (v, slot) in self.quasi.iter_mut().enumerate() {
            if slot.is_some() {
                continue;
            }
            let r = rankings.get(v);
            'pairs: for (t, &upper) in r.tiers().iter().enumerate() {
                for &lower in &r.tiers()[t + 1..] {
                    for a in upper {
                        for b in lower {
                            if !out.strict(a, b) {
                                *slot = Some((index, (a, b)));
                                break 'pairs;
                            }
                        }
                    }
                }
            }
        }
    }

    fn merge(mut self, other: ScanState) -> ScanState {
        keep_min(&mut self.intransitive, other.intransitive);
        keep_min(&mut self.pc, other.pc);
        keep_min(&mut self.wpc, other.wpc);
        for (mine, theirs) in self.iia.iter_mut().zip(other.iia) {
            for (key, mins) in theirs {
                merge_min(mine.entry(key).or_insert([None; 4]), &mins);
            }
        }
        for (mine, theirs) in self.nc.iter_mut().zip(&other.nc) {
            merge_min(mine, theirs);
        }
        for (mine, theirs) in self.quasi.iter_mut().zip(other.quasi) {
            keep_min(mine, theirs);
        }
        self
    }
}

/// Runs `arf` on every ranking profile and evaluates the requested axioms.
pub fn verify(
    arf: &dyn Arf,
    profile: &EvaluabilityProfile,
    axioms: &[Axiom],
    budget: u128,
) -> Result<PropertyReport, VerifyError> {
    let space = RankingSpace::new(profile);
    if space.size() > budget {
        return Err(VerifyError::BudgetExceeded { required: space.size(), budget });
    }
    let size = space.size() as u64;
    let pairs = PairIndex::new(profile);
    let n_chunks = size.div_ceil(CHUNK);
    let state = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let mut st = ScanState::new(pairs.pairs.len(), profile.n_inds());
            for i in c * CHUNK..((c + 1) * CHUNK).min(size) {
                let rankings = space.get(i);
                let out = arf.aggregate(&rankings);
                st.observe(i, &rankings, &out, &pairs);
            }
            st
        })
        .reduce(|| ScanState::new(pairs.pairs.len(), profile.n_inds()), ScanState::merge);

    let quasi_dictators: IndSet =
        state.quasi.iter().enumerate().filter(|(_, s)| s.is_none()).map(|(v, _)| v).collect();

    let results = axioms
        .iter()
        .map(|&axiom| {
            let result = match axiom {
                Axiom::Tv => match state.intransitive {
                    Some((index, triple)) => AxiomResult::Fail(Counterexample::Intransitive {
                        index,
                        rankings: space.get(index),
                        triple,
                    }),
                    None => AxiomResult::Pass,
                },
                Axiom::Pc | Axiom::Wpc => {
                    let hit = if axiom == Axiom::Pc { state.pc } else { state.wpc };
                    match hit {
                        Some((index, pair)) => AxiomResult::Fail(Counterexample::Pareto {
                            index,
                            rankings: space.get(index),
                            pair,
                        }),
                        None => AxiomResult::Pass,
                    }
                }
                Axiom::Iia => iia_result(&state, &pairs, &space),
                Axiom::Nc => nc_result(&state, &pairs),
                Axiom::Nd => {
                    let complete = profile.complete_individuals();
                    match (quasi_dictators & complete).min() {
                        Some(individual) => {
                            AxiomResult::Fail(Counterexample::Dictator { individual })
                        }
                        None => AxiomResult::Pass,
                    }
                }
            };
            (axiom, result)
        })
        .collect();

    Ok(PropertyReport { rule: arf.name(), profile_space_size: size, results, quasi_dictators })
}

fn iia_result(state: &ScanState, pairs: &PairIndex, space: &RankingSpace) -> AxiomResult {
    // smallest (pair, second index) over all violating buckets
    let mut best: Option<(usize, u64, u64)> = None;
    for (k, buckets) in state.iia.iter().enumerate() {
        for mins in buckets.values() {
            let mut seen: Vec<u64> = mins.iter().flatten().copied().collect();
            if seen.len() < 2 {
                continue;
            }
            seen.sort_unstable();
            let candidate = (k, seen[1], seen[0]);
            if best.is_none_or(|b| (candidate.0, candidate.1) < (b.0, b.1)) {
                best = Some(candidate);
            }
        }
        if best.is_some() {
            break;
        }
    }
    match best {
        None => AxiomResult::Pass,
        Some((k, second, first)) => {
            let (a, b, _) = pairs.pairs[k];
            AxiomResult::Fail(Counterexample::Iia {
                pair: (a, b),
                first: (first, space.get(first)),
                second: (second, space.get(second)),
            })
        }
    }
}

fn nc_result(state: &ScanState, pairs: &PairIndex) -> AxiomResult {
    for (k, mins) in state.nc.iter().enumerate() {
        let present: Vec<usize> = (0..4).filter(|&o| mins[o].is_some()).collect();
        if present.len() == 1 {
            let outcome =
                [PairOutcome::Above, PairOutcome::Below, PairOutcome::Tied, PairOutcome::Unrelated]
                    [present[0]];
            let (a, b, _) = pairs.pairs[k];
            return AxiomResult::Fail(Counterexample::Constant { pair: (a, b), outcome });
        }
    }
    AxiomResult::Pass
}

pub fn check_axiom(
    arf: &dyn Arf,
    profile: &EvaluabilityProfile,
    axiom: Axiom,
    budget: u128,
) -> Result<AxiomResult, VerifyError> {
    let report = verify(arf, profile, &[axiom], budget)?;
    Ok(report.results.into_iter().next().unwrap().1)
}

pub fn check_tv(arf: &dyn Arf, profile: &EvaluabilityProfile) -> Result<AxiomResult, VerifyError> {
    check_axiom(arf, profile, Axiom::Tv, DEFAULT_BUDGET)
}

pub fn check_pc(arf: &dyn Arf, profile: &EvaluabilityProfile) -> Result<AxiomResult, VerifyError> {
    check_axiom(arf, profile, Axiom::Pc, DEFAULT_BUDGET)
}

pub fn check_wpc(arf: &dyn Arf, profile: &EvaluabilityProfile) -> Result<AxiomResult, VerifyError> {
    check_axiom(arf, profile, Axiom::Wpc, DEFAULT_BUDGET)
}

pub fn check_iia(arf: &dyn Arf, profile: &EvaluabilityProfile) -> Result<AxiomResult, VerifyError> {
    check_axiom(arf, profile, Axiom::Iia, DEFAULT_BUDGET)
}

pub fn check_nc(arf: &dyn Arf, profile: &EvaluabilityProfile) -> Result<AxiomResult, VerifyError> {
    check_axiom(arf, profile, Axiom::Nc, DEFAULT_BUDGET)
}

pub fn check_nd(arf: &dyn Arf, profile: &EvaluabilityProfile) -> Result<AxiomResult, VerifyError> {
    check_axiom(arf, profile, Axiom::Nd, DEFAULT_BUDGET)
}

/// Individuals whose strict preferences are reproduced in every output.
pub fn quasi_dictators(
    arf: &dyn Arf,
    profile: &EvaluabilityProfile,
) -> Result<IndSet, VerifyError> {
    Ok(verify(arf, profile, &[], DEFAULT_BUDGET)?.quasi_dictators)
}

impl Counterexample {
    /// Re-checks the failure from the definition of the axiom.
    pub fn replay(&self, arf: &dyn Arf, profile: &EvaluabilityProfile) -> bool {
        let unanimous = |r: &RankingProfile, hi: Alt, lo: Alt| {
            let common = profile.common_evaluators(hi, lo);
            !common.is_empty() && common.iter().all(|v| r.get(v).strictly_prefers(hi, lo))
        };
        match self {
            Counterexample::Intransitive { rankings, triple: (a, b, c), .. } => {
                let out = arf.aggregate(rankings);
                out.holds(*a, *b) && out.holds(*b, *c) && !out.holds(*a, *c)
            }
            Counterexample::Pareto { rankings, pair: (hi, lo), .. } => {
                // a wPC failure is in particular a PC failure
                unanimous(rankings, *hi, *lo) && !arf.aggregate(rankings).strict(*hi, *lo)
            }
            Counterexample::Iia { pair: (a, b), first, second } => {
                let same_input = profile.common_evaluators(*a, *b).iter().all(|v| {
                    ranking_outcome(first.1.get(v), *a, *b)
                        == ranking_outcome(second.1.get(v), *a, *b)
                });
                same_input
                    && arf.aggregate(&first.1).outcome(*a, *b)
                        != arf.aggregate(&second.1).outcome(*a, *b)
            }
            Counterexample::Constant { pair: (a, b), outcome } => {
                let space = RankingSpace::new(profile);
                !profile.common_evaluators(*a, *b).is_empty()
                    && (0..space.size() as u64)
                        .all(|i| arf.aggregate(&space.get(i)).outcome(*a, *b) == *outcome)
            }
            Counterexample::Dictator { individual } => {
                let v = *individual;
                let space = RankingSpace::new(profile);
                profile.evaluable(v) == profile.all_alts()
                    && (0..space.size() as u64).all(|i| {
                        let r = space.get(i);
                        let out = arf.aggregate(&r);
                        let mine = r.get(v);
                        profile.all_alts().iter().all(|a| {
                            profile
                                .all_alts()
                                .iter()
                                .all(|b| !mine.strictly_prefers(a, b) || out.strict(a, b))
                        })
                    })
            }
        }
    }
}

/// How a rule fails on a cyclic ranking profile: either some link of the
/// cycle loses its unanimous strict preference, or the output is not
/// transitive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WitnessViolation {
    Pareto { pair: (Alt, Alt) },
    Intransitive { triple: (Alt, Alt, Alt) },
}

/// Feeds the cyclic profile to `arf` and returns the violation it is forced
/// into. `None` would mean a transitive, Pareto output on a strict cycle.
pub fn replay_cyclic_witness(
    arf: &dyn Arf,
    witness: &CyclicProfileWitness,
) -> Option<WitnessViolation> {
    let out = arf.aggregate(&witness.rankings);
    let m = witness.cycle.len();
    for i in 0..m {
        let (lo, hi) = (witness.cycle[i], witness.cycle[(i + 1) % m]);
        if !out.strict(hi, lo) {
            return Some(WitnessViolation::Pareto { pair: (hi, lo) });
        }
    }
    out.transitivity_violation().map(|triple| WitnessViolation::Intransitive { triple })
}

/// Builtin rules available by name.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rule {
    FStar,
    FStarStar,
    /// Output is the given (or first) complete individual's ranking.
    Dictatorship(Option<Ind>),
    /// Output is always the tie-break order.
    Constant,
    /// Strict majority among common evaluators; ties and pairs nobody
    /// compares are indifferent.
    PairwiseMajority,
}

impl Rule {
    pub fn build(
        self,
        profile: &EvaluabilityProfile,
        tiebreak: WeakOrder,
    ) -> Result<Box<dyn Arf>, RuleError> {
        Ok(match self {
            Rule::FStar => Box::new(FStar::new(profile, tiebreak)),
            Rule::FStarStar => Box::new(FStarStar::new(profile, tiebreak)?),
            Rule::Dictatorship(who) => {
                let complete = profile.complete_individuals();
                let v = match who {
                    Some(v) if complete.contains(v) => v,
                    Some(v) => return Err(RuleError::NotComplete(v)),
                    None => complete.min().ok_or(RuleError::NoCompleteIndividual)?,
                };
                Box::new(Dictatorship(v))
            }
            Rule::Constant => Box::new(Constant(tiebreak)),
            Rule::PairwiseMajority => Box::new(PairwiseMajority::new(profile)),
        })
    }
}

struct Dictatorship(Ind);

impl Arf for Dictatorship {
    fn name(&self) -> String {
        "dictatorship".into()
    }

    fn aggregate(&self, rankings: &RankingProfile) -> BinaryRelation {
        rankings.get(self.0).to_relation()
    }
}

struct Constant(WeakOrder);

impl Arf for Constant {
    fn name(&self) -> String {
        "constant".into()
    }

    fn aggregate(&self, _: &RankingProfile) -> BinaryRelation {
        self.0.to_relation()
    }
}

struct PairwiseMajority {
    pairs: PairIndex,
    ground: crate::relations::AltSet,
}

impl PairwiseMajority {
    fn new(profile: &EvaluabilityProfile) -> Self {
        PairwiseMajority { pairs: PairIndex::new(profile), ground: profile.all_alts() }
    }
}

impl Arf for PairwiseMajority {
    fn name(&self) -> String {
        "majority".into()
    }

    fn aggregate(&self, rankings: &RankingProfile) -> BinaryRelation {
        let mut rel = BinaryRelation::full(self.ground);
        for (a, b, common) in &self.pairs.pairs {
            let (a, b) = (*a, *b);
            let up = common.iter().filter(|&&v| rankings.get(v).strictly_prefers(a, b)).count();
            let down = common.iter().filter(|&&v| rankings.get(v).strictly_prefers(b, a)).count();
            if up > down {
                rel.unset(b, a);
            } else if down > up {
                rel.unset(a, b);
            }
        }
        rel
    }
}
