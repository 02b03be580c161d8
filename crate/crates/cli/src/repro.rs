//! Golden outputs compiled into the binary, regenerated and diffed by
//! `rankagg repro`.

use rankagg_core::census::{CensusMethod, DEFAULT_BUDGET, TABLE1_ALTS, TABLE1_INDS};
use rankagg_core::properties::Axiom;

use crate::commands::{self, AggregateRule, VerifyRule};
use crate::documents::{parse_json, ProfileDocument, RankingsDocument};
use crate::error::CliError;

const EXAMPLE1: &str = include_str!("../fixtures/example1.json");
const EXAMPLE1_RANKINGS: &str = include_str!("../fixtures/example1_rankings.json");
const PEER_RATING: &str = include_str!("../fixtures/peer_rating.json");

pub struct Golden {
    pub name: &'static str,
    pub file: &'static str,
    pub expected: &'static str,
}

macro_rules! golden {
    ($name:expr, $file:literal) => {
        Golden {
            name: $name,
            file: $file,
            expected: include_str!(concat!("../fixtures/golden/", $file)),
        }
    };
}

pub const GOLDENS: &[Golden] = &[
    golden!("example 1 classification", "example1_classify.json"),
    golden!("example 1 f** order", "example1_aggregate.json"),
    golden!("example 1 axioms for f**", "example1_verify.json"),
    golden!("peer rating classification", "peer_rating_classify.json"),
    golden!("peer rating cyclic profile", "peer_rating_witness.json"),
    golden!("DP proportion table", "table1.txt"),
    golden!("census 3 alternatives, 3 individuals", "census_a3_i3.json"),
    golden!("census 3 alternatives, 4 individuals", "census_a3_i4.json"),
    golden!("census 4 alternatives, 3 individuals", "census_a4_i3.json"),
];

fn profile(text: &str) -> Result<rankagg_core::profile::EvaluabilityProfile, CliError> {
    parse_json::<ProfileDocument>(text)?.to_profile()
}

/// Recomputes the output for one golden file.
pub fn regenerate(file: &str) -> Result<String, CliError> {
    let example1 = profile(EXAMPLE1)?;
    let peer = profile(PEER_RATING)?;
    let tiebreak = |p| commands::parse_tiebreak(p, None);
    match file {
        "example1_classify.json" => commands::classify_cmd(&example1),
        "example1_aggregate.json" => {
            let rankings =
                parse_json::<RankingsDocument>(EXAMPLE1_RANKINGS)?.to_rankings(&example1)?;
            commands::aggregate_cmd(
                &example1,
                &rankings,
                AggregateRule::Fstarstar,
                tiebreak(&example1)?,
            )
        }
        "example1_verify.json" => commands::verify_cmd(
            &example1,
            VerifyRule::Fstarstar,
            None,
            &Axiom::ALL,
            tiebreak(&example1)?,
            rankagg_core::properties::DEFAULT_BUDGET,
        ),
        "peer_rating_classify.json" => commands::classify_cmd(&peer),
        "peer_rating_witness.json" => commands::witness_cmd(&peer),
        "table1.txt" => commands::table1_cmd(&TABLE1_ALTS, &TABLE1_INDS, false),
        "census_a3_i3.json" => commands::census_cmd(3, 3, CensusMethod::Brute, DEFAULT_BUDGET),
        "census_a3_i4.json" => commands::census_cmd(3, 4, CensusMethod::Brute, DEFAULT_BUDGET),
        "census_a4_i3.json" => commands::census_cmd(4, 3, CensusMethod::Brute, DEFAULT_BUDGET),
        other => Err(CliError::Validation(format!("no golden named {other}"))),
    }
}

/// One line per golden; `Ok(true)` when everything matched.
pub fn run(out: &mut String) -> Result<bool, CliError> {
    let mut all_match = true;
    for golden in GOLDENS {
        let actual = regenerate(golden.file)?;
        if actual == golden.expected {
            out.push_str(&format!("ok    {} ({})\n", golden.name, golden.file));
        } else {
            all_match = false;
            let line = actual
                .lines()
                .zip(golden.expected.lines())
                .position(|(a, e)| a != e)
                .unwrap_or_else(|| actual.lines().count().min(golden.expected.lines().count()));
            out.push_str(&format!(
                "DIFF  {} ({}): first difference at line {}\n",
                golden.name,
                golden.file,
                line + 1
            ));
        }
    }
    Ok(all_match)
}
