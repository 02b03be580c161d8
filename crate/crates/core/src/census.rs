//! Counting evaluability profiles by verdict.
//!
//! All counts are over labelled individuals, each choosing one evaluable set
//! of size at least 2. The symmetric census classifies each multiset of sets
//! once and weights it by the number of labelled assignments realising it;
//! it must agree exactly with the brute-force count.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conditions::{classify_sets, Verdict};
use crate::profile::MAX_ALTERNATIVES;
use crate::relations::{AltSet, IdSet};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("need at least 3 alternatives and 3 individuals, got {alts} and {inds}")]
    TooSmall { alts: usize, inds: usize },
    #[error("at most {MAX_ALTERNATIVES} alternatives are supported, got {0}")]
    TooManyAlternatives(usize),
    #[error("census needs {required} classifications, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusMethod {
    Brute,
    Symmetric,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusReport {
    pub alt_count: usize,
    pub ind_count: usize,
    pub total: u128,
    pub ip: u128,
    pub dp: u128,
    pub pp: u128,
    pub method: CensusMethod,
}

impl CensusReport {
    pub fn count(&self, verdict: Verdict) -> u128 {
        match verdict {
            Verdict::Impossible => self.ip,
            Verdict::Dictatorship => self.dp,
            Verdict::Possible => self.pp,
        }
    }

    pub fn proportion(&self, verdict: Verdict) -> BigRational {
        BigRational::new(BigInt::from(self.count(verdict)), BigInt::from(self.total))
    }

    /// Same numbers, regardless of how they were obtained.
    pub fn same_counts(&self, other: &CensusReport) -> bool {
        (self.alt_count, self.ind_count, self.total, self.ip, self.dp, self.pp)
            == (other.alt_count, other.ind_count, other.total, other.ip, other.dp, other.pp)
    }
}

/// `2^n - n - 1`: subsets with at least two members.
pub fn evaluable_set_count(n_alts: usize) -> u64 {
    assert!((1..64).contains(&n_alts));
    (1u64 << n_alts) - n_alts as u64 - 1
}

/// Share of profiles with at least one complete individual:
/// `1 - ((k-1)/k)^m` with `k = 2^n - n - 1`.
pub fn dp_proportion(n_alts: usize, n_inds: usize) -> BigRational {
    let k = BigInt::from(evaluable_set_count(n_alts));
    let ratio = BigRational::new(&k - 1, k);
    BigRational::one() - num_traits::pow(ratio, n_inds)
}

/// Round half up to two decimals.
pub fn render_2dp(x: &BigRational) -> String {
    let scaled = x * BigRational::from_integer(BigInt::from(100))
        + BigRational::new(BigInt::one(), BigInt::from(2));
    let hundredths = scaled.floor().to_integer();
    let whole = &hundredths / BigInt::from(100);
    let frac = (&hundredths % BigInt::from(100)).to_i64().unwrap().abs();
    format!("{whole}.{frac:02}")
}

/// Evaluable sets over `n` alternatives, in increasing bitmask order.
pub fn evaluable_sets(n_alts: usize) -> Vec<AltSet> {
    (0u64..1 << n_alts).map(IdSet).filter(|s| s.len() >= 2).collect()
}

fn check_args(n_alts: usize, n_inds: usize) -> Result<(), CensusError> {
    if n_alts < 3 || n_inds < 3 {
        return Err(CensusError::TooSmall { alts: n_alts, inds: n_inds });
    }
    if n_alts > MAX_ALTERNATIVES {
        return Err(CensusError::TooManyAlternatives(n_alts));
    }
    Ok(())
}

#[derive(Default, Clone, Copy)]
struct Tally([u128; 3]);

impl Tally {
    fn add(mut self, verdict: Verdict, weight: u128) -> Self {
        self.0[verdict as usize] += weight;
        self
    }

    fn merge(self, other: Tally) -> Tally {
        Tally([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }
}

fn report(
    n_alts: usize,
    n_inds: usize,
    total: u128,
    t: Tally,
    method: CensusMethod,
) -> CensusReport {
    CensusReport {
        alt_count: n_alts,
        ind_count: n_inds,
        total,
        ip: t.0[Verdict::Impossible as usize],
        dp: t.0[Verdict::Dictatorship as usize],
        pp: t.0[Verdict::Possible as usize],
        method,
    }
}

/// Classifies every labelled assignment of evaluable sets.
pub fn census_brute(
    n_alts: usize,
    n_inds: usize,
    budget: u128,
) -> Result<CensusReport, CensusError> {
    check_args(n_alts, n_inds)?;
    let sets = evaluable_sets(n_alts);
    let k = sets.len() as u128;
    let total = (0..n_inds).try_fold(1u128, |acc, _| acc.checked_mul(k)).unwrap_or(u128::MAX);
    if total > budget {
        return Err(CensusError::BudgetExceeded { required: total, budget });
    }
    let tally = (0..total as u64)
        .into_par_iter()
        .fold(
            || (Tally::default(), vec![AltSet::EMPTY; n_inds]),
            |(tally, mut profile), mut index| {
                for slot in profile.iter_mut().rev() {
                    *slot = sets[(index % k as u64) as usize];
                    index /= k as u64;
                }
                (tally.add(classify_sets(n_alts, &profile), 1), profile)
            },
        )
        .map(|(t, _)| t)
        .reduce(Tally::default, Tally::merge);
    Ok(report(n_alts, n_inds, total, tally, CensusMethod::Brute))
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Classifies each multiset of evaluable sets once, weighted by its number of
/// labelled arrangements `m! / prod(mult!)`.
pub fn census_symmetric(
    n_alts: usize,
    n_inds: usize,
    budget: u128,
) -> Result<CensusReport, CensusError> {
    check_args(n_alts, n_inds)?;
    let sets = evaluable_sets(n_alts);
    let k = sets.len();
    let classes = binomial((k + n_inds - 1) as u128, n_inds as u128);
    if classes > budget {
        return Err(CensusError::BudgetExceeded { required: classes, budget });
    }
    let total = (0..n_inds)
        .try_fold(1u128, |acc, _| acc.checked_mul(k as u128))
        .ok_or(CensusError::BudgetExceeded { required: u128::MAX, budget })?;

    // multisets as non-decreasing index sequences, grouped by first element
    let tally = (0..k)
        .into_par_iter()
        .map(|first| {
            let mut tally = Tally::default();
            let mut seq = vec![first; n_inds];
            loop {
                let chosen: Vec<AltSet> = seq.iter().map(|&i| sets[i]).collect();
                tally = tally.add(classify_sets(n_alts, &chosen), arrangements(&seq));
                // advance positions 1.. keeping seq non-decreasing
                let Some(pos) = (1..n_inds).rev().find(|&p| seq[p] + 1 < k) else { break };
                let next = seq[pos] + 1;
                for slot in &mut seq[pos..] {
                    *slot = next;
                }
            }
            tally
        })
        .reduce(Tally::default, Tally::merge);
    Ok(report(n_alts, n_inds, total, tally, CensusMethod::Symmetric))
}

/// Multinomial coefficient of a sorted sequence's run lengths.
fn arrangements(sorted: &[usize]) -> u128 {
    let mut remaining = sorted.len() as u128;
    let mut ways = 1u128;
    let mut i = 0;
    while i < sorted.len() {
        let run = sorted[i..].iter().take_while(|&&x| x == sorted[i]).count() as u128;
        ways *= binomial(remaining, run);
        remaining -= run;
        i += run as usize;
    }
    ways
}

/// Grid of DP proportions, rows by alternatives, columns by individuals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DpTable {
    pub alts: Vec<usize>,
    pub inds: Vec<usize>,
    pub cells: Vec<Vec<BigRational>>,
}

impl DpTable {
    pub fn rendered(&self) -> Vec<Vec<String>> {
        self.cells.iter().map(|row| row.iter().map(render_2dp).collect()).collect()
    }
}

pub const TABLE1_ALTS: [usize; 4] = [3, 5, 7, 9];
pub const TABLE1_INDS: [usize; 9] = [3, 6, 9, 12, 15, 18, 21, 24, 27];

pub fn table1(alts: &[usize], inds: &[usize]) -> DpTable {
    DpTable {
        alts: alts.to_vec(),
        inds: inds.to_vec(),
        cells: alts.iter().map(|&n| inds.iter().map(|&m| dp_proportion(n, m)).collect()).collect(),
    }
}

/// `k^m - (k-1)^m`: labelled profiles with a complete individual.
pub fn dp_count_closed_form(n_alts: usize, n_inds: usize) -> BigInt {
    let k = BigInt::from(evaluable_set_count(n_alts));
    num_traits::pow(k.clone(), n_inds) - num_traits::pow(k - 1, n_inds)
}
