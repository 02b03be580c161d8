//! JSON documents read and written by the CLI.

use std::path::Path;

use indexmap::IndexMap;
use rankagg_core::profile::EvaluabilityProfile;
use rankagg_core::relations::{AltSet, RankingProfile, WeakOrder};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDocument {
    pub schema_version: u32,
    pub alternatives: Vec<String>,
    pub individuals: Vec<IndividualEntry>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndividualEntry {
    pub id: String,
    pub evaluates: Vec<String>,
}

/// Individual id to tiers, best first.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankingsDocument {
    pub rankings: IndexMap<String, Vec<Vec<String>>>,
}

impl ProfileDocument {
    pub fn to_profile(&self) -> Result<EvaluabilityProfile, CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Validation(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let individuals: Vec<(&str, Vec<&str>)> = self
            .individuals
            .iter()
            .map(|e| (e.id.as_str(), e.evaluates.iter().map(String::as_str).collect()))
            .collect();
        let alternatives: Vec<&str> = self.alternatives.iter().map(String::as_str).collect();
        Ok(EvaluabilityProfile::new(&alternatives, &individuals)?)
    }

    #[cfg(test)]
    pub fn from_profile(profile: &EvaluabilityProfile) -> Self {
        ProfileDocument {
            schema_version: SCHEMA_VERSION,
            alternatives: profile.alternatives().to_vec(),
            individuals: (0..profile.n_inds())
                .map(|v| IndividualEntry {
                    id: profile.ind_name(v).to_string(),
                    evaluates: names(profile, profile.evaluable(v)),
                })
                .collect(),
        }
    }
}

impl RankingsDocument {
    pub fn to_rankings(&self, profile: &EvaluabilityProfile) -> Result<RankingProfile, CliError> {
        for id in self.rankings.keys() {
            profile.ind_index(id)?;
        }
        let mut orders = Vec::with_capacity(profile.n_inds());
        for v in 0..profile.n_inds() {
            let id = profile.ind_name(v);
            let tiers = self
                .rankings
                .get(id)
                .ok_or_else(|| CliError::Validation(format!("no ranking for individual {id}")))?;
            let mut sets = Vec::with_capacity(tiers.len());
            for tier in tiers {
                let mut set = AltSet::EMPTY;
                for name in tier {
                    let a = profile.alt_index(name)?;
                    if set.contains(a) {
                        return Err(CliError::Validation(format!(
                            "individual {id} lists {name} twice"
                        )));
                    }
                    set = set.with(a);
                }
                sets.push(set);
            }
            let order = WeakOrder::new(sets)
                .map_err(|e| CliError::Validation(format!("ranking of {id}: {e}")))?;
            orders.push(order);
        }
        RankingProfile::new(profile, orders).map_err(|e| CliError::Validation(e.to_string()))
    }

    pub fn from_rankings(profile: &EvaluabilityProfile, rankings: &RankingProfile) -> Self {
        RankingsDocument {
            rankings: (0..profile.n_inds())
                .map(|v| (profile.ind_name(v).to_string(), tier_names(profile, rankings.get(v))))
                .collect(),
        }
    }
}

pub fn names(profile: &EvaluabilityProfile, set: AltSet) -> Vec<String> {
    set.iter().map(|a| profile.alt_name(a).to_string()).collect()
}

pub fn tier_names(profile: &EvaluabilityProfile, order: &WeakOrder) -> Vec<Vec<String>> {
    order.tiers().iter().map(|&t| names(profile, t)).collect()
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    parse_json(&text).map_err(|e| match e {
        CliError::Validation(msg) => CliError::Validation(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Validation(e.to_string()))
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("documents serialize");
    out.push('\n');
    out
}
