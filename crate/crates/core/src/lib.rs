//! Aggregation of incomplete rankings: which evaluability profiles admit
//! transitive, Pareto, independent, non-dictatorial rules, and the rules
//! themselves.

pub mod aggregators;
pub mod census;
pub mod conditions;
pub mod profile;
pub mod properties;
pub mod relations;

#[cfg(any(test, feature = "oracles"))]
pub mod oracle;

pub use conditions::{classify, Verdict};
pub use profile::{EvaluabilityProfile, ProfileError, UnionGraph};
pub use relations::{Alt, AltSet, Ind, IndSet, RankingProfile, WeakOrder};
