//! Separate alliance and conflict functions and their aggregations.

use std::fmt;

use num_traits::{One, Zero};

use crate::auxiliary::{phi_single, AuxiliaryModel};
use crate::error::{Error, Result};
use crate::model::ratings::ratio;
use crate::model::{normalize, Agent, Issue, Rating, Rational, SituationTable};

/// Alliance degree and conflict degree, each in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegreePair {
    pub alliance: Rational,
    pub conflict: Rational,
}

impl DegreePair {
    pub fn zero() -> Self {
        DegreePair {
            alliance: Rational::zero(),
            conflict: Rational::zero(),
        }
    }

    pub fn new(alliance: Rational, conflict: Rational) -> Self {
        DegreePair { alliance, conflict }
    }

    /// Φ^= and Φ^≍ of one auxiliary value.
    pub fn split(r: Rating) -> Self {
        let (one, zero) = (Rational::one(), Rational::zero());
        match r {
            Rating::Positive => DegreePair::new(one, zero),
            Rating::Negative => DegreePair::new(zero, one),
            Rating::Neutral => DegreePair::new(zero, zero),
        }
    }

    fn from_counts(alliance: usize, conflict: usize, total: usize) -> Self {
        DegreePair::new(ratio(alliance, total), ratio(conflict, total))
    }
}

impl fmt::Display for DegreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alliance, self.conflict)
    }
}

/// Φ_i^=(x, y) and Φ_i^≍(x, y).
pub fn alliance_conflict_single(
    model: &AuxiliaryModel,
    table: &SituationTable,
    x: Agent,
    y: Agent,
    i: Issue,
) -> DegreePair {
    DegreePair::split(phi_single(model, table, x, y, i))
}

/// Inverse of [`DegreePair::split`]: Φ_i = Φ_i^= - Φ_i^≍.
pub fn reconstruct_auxiliary(d: DegreePair) -> Result<Rating> {
    let (one, zero) = (Rational::one(), Rational::zero());
    match (d.alliance, d.conflict) {
        (a, c) if a == one && c == zero => Ok(Rating::Positive),
        (a, c) if a == zero && c == one => Ok(Rating::Negative),
        (a, c) if a == zero && c == zero => Ok(Rating::Neutral),
        (alliance, conflict) => Err(Error::InvalidDegree { alliance, conflict }),
    }
}

/// Issues J and agent sets X (left) and Y (right) of a general aggregation.
/// Singleton sets give the per-issue and per-agent special cases.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AggregationScope {
    pub issues: Vec<Issue>,
    pub left: Vec<Agent>,
    pub right: Vec<Agent>,
}

impl AggregationScope {
    pub fn new(issues: &[Issue], left: &[Agent], right: &[Agent]) -> Self {
        AggregationScope {
            issues: normalize(issues),
            left: normalize(left),
            right: normalize(right),
        }
    }

    pub fn pair(issues: &[Issue], x: Agent, y: Agent) -> Self {
        Self::new(issues, &[x], &[y])
    }
}

/// Φ_J^=(X, Y) and Φ_J^≍(X, Y): averages over J x X x Y, (0, 0) if any set is empty.
pub fn alliance_conflict_aggregate(
    model: &AuxiliaryModel,
    table: &SituationTable,
    scope: &AggregationScope,
) -> DegreePair {
    let (j, xs, ys) = (
        normalize(&scope.issues),
        normalize(&scope.left),
        normalize(&scope.right),
    );
    let total = j.len() * xs.len() * ys.len();
    if total == 0 {
        return DegreePair::zero();
    }
    let (mut alliance, mut conflict) = (0, 0);
    for &i in &j {
        for &x in &xs {
            for &y in &ys {
                match phi_single(model, table, x, y, i) {
                    Rating::Positive => alliance += 1,
                    Rating::Negative => conflict += 1,
                    Rating::Neutral => {}
                }
            }
        }
    }
    DegreePair::from_counts(alliance, conflict, total)
}

/// Degrees of `y` supporting and opposing `x` over J_x^{+-}.
///
/// Not symmetric: the denominator is the non-neutral count of `x`. An
/// agent with no non-neutral issue gets (0, 0) against every other agent;
/// the self pair stays (1, 0).
pub fn alliance_conflict_non_neutral(
    model: &AuxiliaryModel,
    table: &SituationTable,
    x: Agent,
    y: Agent,
    j: &[Issue],
) -> DegreePair {
    if x == y {
        return DegreePair::split(Rating::Positive);
    }
    let own = crate::model::non_neutral_issues(table, x, j);
    let (mut alliance, mut conflict) = (0, 0);
    for &i in &own {
        match phi_single(model, table, x, y, i) {
            Rating::Positive => alliance += 1,
            Rating::Negative => conflict += 1,
            Rating::Neutral => {}
        }
    }
    DegreePair::from_counts(alliance, conflict, own.len())
}
