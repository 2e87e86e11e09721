//! Situation tables, exact rationals, thresholds and rating trisections.

mod rating;
pub mod ratings;
mod table;
mod threshold;
mod trisection;

/// Exact rational, always reduced with a positive denominator.
pub type Rational = num_rational::Rational64;

pub use rating::Rating;
pub use ratings::{
    aggregate_over_agents, aggregate_over_issues, non_neutral_count, non_neutral_issues,
    trisect_agents, trisect_issues_by_rating, Scope,
};
pub use table::{normalize, Agent, Format, Issue, SituationTable};
pub use threshold::{
    parse_rational, RuleContext, RulePair, ThresholdKind, ThresholdPair, ThresholdRule,
};
pub use trisection::{Part, Trisection};
