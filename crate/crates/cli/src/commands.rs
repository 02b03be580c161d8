//! Subcommand bodies. Each takes parsed inputs and returns the text to print.

use num_rational::BigRational;
use rankagg_core::aggregators::{default_tiebreak, AggregationResult, FStar, FStarStar};
use rankagg_core::census::{self, CensusError, CensusMethod, CensusReport};
use rankagg_core::conditions::{classify, cyclic_profile, Verdict, Witness};
use rankagg_core::profile::EvaluabilityProfile;
use rankagg_core::properties::{
    self, Axiom, AxiomResult, Counterexample, PropertyReport, Rule, RuleError, VerifyError,
};
use rankagg_core::relations::{Alt, PairOutcome, RankingProfile, WeakOrder};
use serde_json::{json, Value};

use crate::documents::{names, tier_names, to_pretty, RankingsDocument};
use crate::error::CliError;

fn alt_list(profile: &EvaluabilityProfile, alts: &[Alt]) -> Vec<String> {
    alts.iter().map(|&a| profile.alt_name(a).to_string()).collect()
}

fn big(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(n) => json!(n),
        Err(_) => json!(n.to_string()),
    }
}

/// Parses `--tiebreak a,b,c` into a linear order over all alternatives.
pub fn parse_tiebreak(
    profile: &EvaluabilityProfile,
    spec: Option<&str>,
) -> Result<WeakOrder, CliError> {
    let Some(spec) = spec else { return Ok(default_tiebreak(profile)) };
    let seq = spec
        .split(',')
        .map(|name| profile.alt_index(name.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    let order =
        WeakOrder::linear(&seq).map_err(|e| CliError::Validation(format!("tie-break: {e}")))?;
    if order.ground() != profile.all_alts() {
        return Err(CliError::Validation("tie-break must list every alternative once".into()));
    }
    Ok(order)
}

fn witness_json(profile: &EvaluabilityProfile, witness: &Witness) -> Value {
    match witness {
        Witness::UncoveredCycle { cycle } => json!({ "cycle": alt_list(profile, cycle) }),
        Witness::CompleteIndividual { individual } => {
            json!({ "complete_individual": profile.ind_name(*individual) })
        }
        Witness::Coverage { certificate } => json!({
            "coverage": certificate
                .iter()
                .map(|e| json!({
                    "nodes": names(profile, e.nodes),
                    "individual": profile.ind_name(e.individual),
                }))
                .collect::<Vec<_>>()
        }),
    }
}

pub fn classify_cmd(profile: &EvaluabilityProfile) -> Result<String, CliError> {
    let c = classify(profile);
    Ok(to_pretty(&json!({
        "verdict": c.verdict.code(),
        "witness": witness_json(profile, &c.witness),
    })))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum AggregateRule {
    Fstar,
    Fstarstar,
}

fn condition1_blocked(profile: &EvaluabilityProfile, cycle: &[Alt]) -> CliError {
    CliError::Precondition {
        message: format!(
            "Condition 1 fails: cycle {} is not evaluated in full by anyone",
            alt_list(profile, cycle).join("-")
        ),
        output: Some(to_pretty(&json!({ "cycle": alt_list(profile, cycle) }))),
    }
}

pub fn aggregate_cmd(
    profile: &EvaluabilityProfile,
    rankings: &RankingProfile,
    rule: AggregateRule,
    tiebreak: WeakOrder,
) -> Result<String, CliError> {
    let result: AggregationResult = match rule {
        AggregateRule::Fstar => FStar::new(profile, tiebreak).result(rankings),
        AggregateRule::Fstarstar => match FStarStar::new(profile, tiebreak) {
            Ok(arf) => arf.result(rankings),
            Err(rankagg_core::aggregators::AggregationError::Condition1Fails { cycle }) => {
                return Err(condition1_blocked(profile, &cycle))
            }
            Err(e) => return Err(CliError::Validation(e.to_string())),
        },
    };
    let arcs: Vec<[&str; 2]> = result
        .constraint
        .arcs()
        .into_iter()
        .map(|(a, b)| [profile.alt_name(a), profile.alt_name(b)])
        .collect();
    Ok(to_pretty(&json!({
        "order": tier_names(profile, &result.order),
        "constraint_arcs": arcs,
        "degenerate": result.degenerate,
    })))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum VerifyRule {
    Fstar,
    Fstarstar,
    Dictatorship,
    Constant,
    Majority,
}

pub fn parse_axioms(spec: &str) -> Result<Vec<Axiom>, CliError> {
    let mut out: Vec<Axiom> = Vec::new();
    for code in spec.split(',').map(str::trim).filter(|c| !c.is_empty()) {
        let axiom = Axiom::parse(&code.to_ascii_lowercase())
            .ok_or_else(|| CliError::Validation(format!("unknown axiom {code}")))?;
        if !out.contains(&axiom) {
            out.push(axiom);
        }
    }
    Ok(out)
}

fn outcome_name(o: PairOutcome) -> &'static str {
    match o {
        PairOutcome::Above => "above",
        PairOutcome::Below => "below",
        PairOutcome::Tied => "tied",
        PairOutcome::Unrelated => "unrelated",
    }
}

fn counterexample_json(profile: &EvaluabilityProfile, cx: &Counterexample) -> Value {
    let rankings = |r: &RankingProfile| RankingsDocument::from_rankings(profile, r).rankings;
    let pair = |(a, b): (Alt, Alt)| alt_list(profile, &[a, b]);
    match cx {
        Counterexample::Intransitive { index, rankings: r, triple: (a, b, c) } => json!({
            "kind": "intransitive",
            "index": index,
            "rankings": rankings(r),
            "triple": alt_list(profile, &[*a, *b, *c]),
        }),
        Counterexample::Pareto { index, rankings: r, pair: p } => json!({
            "kind": "pareto",
            "index": index,
            "rankings": rankings(r),
            "pair": pair(*p),
        }),
        Counterexample::Iia { pair: p, first, second } => json!({
            "kind": "iia",
            "pair": pair(*p),
            "first": { "index": first.0, "rankings": rankings(&first.1) },
            "second": { "index": second.0, "rankings": rankings(&second.1) },
        }),
        Counterexample::Constant { pair: p, outcome } => json!({
            "kind": "constant",
            "pair": pair(*p),
            "outcome": outcome_name(*outcome),
        }),
        Counterexample::Dictator { individual } => json!({
            "kind": "dictator",
            "individual": profile.ind_name(*individual),
        }),
    }
}

pub fn report_json(profile: &EvaluabilityProfile, report: &PropertyReport) -> Value {
    let mut results = serde_json::Map::new();
    for (axiom, result) in &report.results {
        let entry = match result {
            AxiomResult::Pass => json!({ "pass": true }),
            AxiomResult::Fail(cx) => {
                json!({ "pass": false, "counterexample": counterexample_json(profile, cx) })
            }
        };
        results.insert(axiom.code().to_string(), entry);
    }
    json!({
        "rule": report.rule,
        "profile_space_size": report.profile_space_size,
        "results": results,
        "quasi_dictators": report
            .quasi_dictators
            .iter()
            .map(|v| profile.ind_name(v))
            .collect::<Vec<_>>(),
    })
}

pub fn verify_cmd(
    profile: &EvaluabilityProfile,
    rule: VerifyRule,
    dictator: Option<&str>,
    axioms: &[Axiom],
    tiebreak: WeakOrder,
    budget: u128,
) -> Result<String, CliError> {
    let rule = match rule {
        VerifyRule::Fstar => Rule::FStar,
        VerifyRule::Fstarstar => Rule::FStarStar,
        VerifyRule::Dictatorship => {
            Rule::Dictatorship(dictator.map(|d| profile.ind_index(d)).transpose()?)
        }
        VerifyRule::Constant => Rule::Constant,
        VerifyRule::Majority => Rule::PairwiseMajority,
    };
    let arf = match rule.build(profile, tiebreak) {
        Ok(arf) => arf,
        Err(RuleError::Aggregation(
            rankagg_core::aggregators::AggregationError::Condition1Fails { cycle },
        )) => return Err(condition1_blocked(profile, &cycle)),
        Err(e @ (RuleError::NoCompleteIndividual | RuleError::NotComplete(_))) => {
            return Err(CliError::Precondition { message: e.to_string(), output: None })
        }
        Err(e) => return Err(CliError::Validation(e.to_string())),
    };
    let report =
        properties::verify(arf.as_ref(), profile, axioms, budget).map_err(|e| match e {
            VerifyError::BudgetExceeded { required, budget } => CliError::Budget(format!(
                "exhaustive check needs {required} ranking profiles, budget is {budget}"
            )),
        })?;
    Ok(to_pretty(&report_json(profile, &report)))
}

fn ratio_json(r: &BigRational) -> Value {
    json!({ "exact": r.to_string(), "decimal": census::render_2dp(r) })
}

pub fn census_json(report: &CensusReport) -> Value {
    let method = match report.method {
        CensusMethod::Brute => "brute",
        CensusMethod::Symmetric => "symmetric",
    };
    let verdicts = [Verdict::Impossible, Verdict::Dictatorship, Verdict::Possible];
    let mut counts = serde_json::Map::new();
    let mut shares = serde_json::Map::new();
    for v in verdicts {
        counts.insert(v.code().into(), big(report.count(v)));
        shares.insert(v.code().into(), ratio_json(&report.proportion(v)));
    }
    json!({
        "alternatives": report.alt_count,
        "individuals": report.ind_count,
        "method": method,
        "total": big(report.total),
        "counts": counts,
        "proportions": shares,
    })
}

pub fn census_cmd(
    alts: usize,
    inds: usize,
    method: CensusMethod,
    budget: u128,
) -> Result<String, CliError> {
    let report = match method {
        CensusMethod::Brute => census::census_brute(alts, inds, budget),
        CensusMethod::Symmetric => census::census_symmetric(alts, inds, budget),
    }
    .map_err(|e| match e {
        CensusError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
        other => CliError::Validation(other.to_string()),
    })?;
    Ok(to_pretty(&census_json(&report)))
}

pub fn table1_cmd(alts: &[usize], inds: &[usize], as_json: bool) -> Result<String, CliError> {
    if let Some(&n) = alts.iter().find(|&&n| !(3..64).contains(&n)) {
        return Err(CliError::Validation(format!("alternative count {n} out of range 3..=63")));
    }
    if let Some(&m) = inds.iter().find(|&&m| m < 3) {
        return Err(CliError::Validation(format!("individual count {m} below 3")));
    }
    let table = census::table1(alts, inds);
    let rendered = table.rendered();
    if as_json {
        let exact: Vec<Vec<String>> =
            table.cells.iter().map(|row| row.iter().map(|c| c.to_string()).collect()).collect();
        return Ok(to_pretty(&json!({
            "alternatives": alts,
            "individuals": inds,
            "cells": rendered,
            "exact": exact,
        })));
    }
    let mut out = String::new();
    let header: Vec<String> = inds.iter().map(|m| format!("{m:>5}")).collect();
    out.push_str(&format!("{:>7} |{}\n", "|A|\\|I|", header.join("")));
    out.push_str(&format!("{}\n", "-".repeat(9 + 5 * inds.len())));
    for (n, row) in alts.iter().zip(&rendered) {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>5}")).collect();
        out.push_str(&format!("{n:>7} |{}\n", cells.join("")));
    }
    Ok(out)
}

pub fn witness_cmd(profile: &EvaluabilityProfile) -> Result<String, CliError> {
    let c = classify(profile);
    let Witness::UncoveredCycle { cycle } = c.witness else {
        return Err(CliError::Precondition {
            message: "Condition 1 holds; no witness".into(),
            output: None,
        });
    };
    let witness =
        cyclic_profile(profile, &cycle).map_err(|e| CliError::Validation(e.to_string()))?;
    witness.validate(profile).map_err(CliError::Validation)?;
    let pivots: indexmap::IndexMap<&str, &str> = (0..profile.n_inds())
        .map(|v| (profile.ind_name(v), profile.alt_name(cycle[witness.chosen[v]])))
        .collect();
    let unanimity = witness.unanimity_cycle();
    Ok(to_pretty(&json!({
        "cycle": alt_list(profile, &witness.cycle),
        "rankings": RankingsDocument::from_rankings(profile, &witness.rankings).rankings,
        "pivots": pivots,
        "unanimity_cycle": alt_list(profile, &unanimity),
    })))
}
