//! Rating function aggregations and the rating-based trisections.

use num_traits::Zero;

use super::table::normalize;
use super::{Agent, Issue, Part, Rational, SituationTable, ThresholdKind, ThresholdPair, Trisection};
use crate::error::{Error, Result};

/// Single element, or a set cut by a signed threshold pair.
#[derive(Debug, Clone, Copy)]
pub enum Scope<'a, T> {
    Single(T),
    Set(&'a [T], ThresholdPair),
}

/// r(x, J): average rating of `x` over the issues in `j`.
pub fn aggregate_over_issues(table: &SituationTable, x: Agent, j: &[Issue]) -> Result<Rational> {
    let j = normalize(j);
    if j.is_empty() {
        return Err(Error::EmptyIssueSet);
    }
    let sum: i64 = j.iter().map(|&i| table.rating(x, i).value()).sum();
    Ok(Rational::new(sum, j.len() as i64))
}

/// r(X, i): average rating on `i` over the agents in `x`.
pub fn aggregate_over_agents(table: &SituationTable, x: &[Agent], i: Issue) -> Result<Rational> {
    let x = normalize(x);
    if x.is_empty() {
        return Err(Error::EmptyAgentSet);
    }
    let sum: i64 = x.iter().map(|&a| table.rating(a, i).value()).sum();
    Ok(Rational::new(sum, x.len() as i64))
}

fn by_rating(v: i64) -> Part {
    match v {
        1 => Part::Positive,
        -1 => Part::Negative,
        _ => Part::Neutral,
    }
}

fn by_threshold(v: Rational, t: &ThresholdPair) -> Part {
    if v >= t.high {
        Part::Positive
    } else if v <= t.low {
        Part::Negative
    } else {
        Part::Neutral
    }
}

/// Trisects agents by their rating on one issue or their average over a set.
pub fn trisect_agents(
    table: &SituationTable,
    agents: &[Agent],
    scope: Scope<'_, Issue>,
) -> Result<Trisection<Agent>> {
    let agents = normalize(agents);
    match scope {
        Scope::Single(i) => Ok(Trisection::classify(agents, |&a| {
            by_rating(table.rating(a, i).value())
        })),
        Scope::Set(j, t) => {
            t.expect_kind(ThresholdKind::SignedRating)?;
            if agents.is_empty() {
                return Ok(Trisection::default());
            }
            Trisection::try_classify(agents, |&a| {
                Ok(by_threshold(aggregate_over_issues(table, a, j)?, &t))
            })
        }
    }
}

/// Mirror of [`trisect_agents`] with agents and issues exchanged.
pub fn trisect_issues_by_rating(
    table: &SituationTable,
    issues: &[Issue],
    scope: Scope<'_, Agent>,
) -> Result<Trisection<Issue>> {
    let issues = normalize(issues);
    match scope {
        Scope::Single(a) => Ok(Trisection::classify(issues, |&i| {
            by_rating(table.rating(a, i).value())
        })),
        Scope::Set(x, t) => {
            t.expect_kind(ThresholdKind::SignedRating)?;
            if issues.is_empty() {
                return Ok(Trisection::default());
            }
            Trisection::try_classify(issues, |&i| {
                Ok(by_threshold(aggregate_over_agents(table, x, i)?, &t))
            })
        }
    }
}

/// J_x^{+-}: issues of `j` on which `x` is not neutral, in table order.
pub fn non_neutral_issues(table: &SituationTable, x: Agent, j: &[Issue]) -> Vec<Issue> {
    normalize(j)
        .into_iter()
        .filter(|&i| !table.rating(x, i).is_neutral())
        .collect()
}

/// Count of non-neutral ratings of `x` over `j`.
pub fn non_neutral_count(table: &SituationTable, x: Agent, j: &[Issue]) -> usize {
    non_neutral_issues(table, x, j).len()
}

pub(crate) fn ratio(count: usize, total: usize) -> Rational {
    if total == 0 {
        Rational::zero()
    } else {
        Rational::new(count as i64, total as i64)
    }
}
