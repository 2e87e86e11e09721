//! Two-function agent-pair trisections, alliance sets and maximal
//! consistent alliance sets.

mod clique;

pub use clique::maximal_cliques;

use num_traits::{One, Zero};

use crate::auxiliary::{all_pairs, AuxiliaryModel};
use crate::bifunctions::{
    alliance_conflict_aggregate, alliance_conflict_non_neutral, AggregationScope, DegreePair,
};
use crate::error::{Error, Result};
use crate::model::{
    non_neutral_count, normalize, Agent, Issue, Part, Rational, RuleContext, RulePair,
    SituationTable, ThresholdKind, ThresholdPair, ThresholdRule, Trisection,
};

/// Default cap on the number of agents for clique enumeration.
pub const DEFAULT_AGENT_CAP: usize = 64;

/// Which degrees decide a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairScope {
    /// Φ_J^=(x, y) and Φ_J^≍(x, y), symmetric.
    IssueSet,
    /// Degrees over the first agent's non-neutral issues, not symmetric.
    NonNeutral,
}

/// (l_a, h_a) for alliance and (l_c, h_c) for conflict degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairThresholds {
    pub alliance: ThresholdPair,
    pub conflict: ThresholdPair,
}

impl PairThresholds {
    pub fn new(alliance: ThresholdPair, conflict: ThresholdPair) -> Result<Self> {
        alliance.expect_kind(ThresholdKind::UnitDegree)?;
        conflict.expect_kind(ThresholdKind::UnitDegree)?;
        Ok(PairThresholds { alliance, conflict })
    }

    /// Only h_a and l_c given; l_a = 0 and h_c = 1.
    pub fn quoted(h_a: Rational, l_c: Rational) -> Result<Self> {
        Self::new(
            ThresholdPair::unit(Rational::zero(), h_a)?,
            ThresholdPair::unit(l_c, Rational::one())?,
        )
    }
}

/// Supplies the thresholds for pairs whose first agent is `anchor`.
pub trait PairThresholdSource {
    fn thresholds_for(&self, table: &SituationTable, anchor: Agent, issues: &[Issue]) -> Result<PairThresholds>;
}

impl PairThresholdSource for PairThresholds {
    fn thresholds_for(&self, _: &SituationTable, _: Agent, _: &[Issue]) -> Result<PairThresholds> {
        Ok(*self)
    }
}

/// Thresholds given as rules, resolved per anchor agent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairRules {
    pub alliance: RulePair,
    pub conflict: RulePair,
}

impl PairRules {
    /// Only h_a and l_c given; l_a = 0 and h_c = 1.
    pub fn quoted(h_a: ThresholdRule, l_c: ThresholdRule) -> Self {
        PairRules {
            alliance: RulePair::new(ThresholdRule::Constant(Rational::zero()), h_a),
            conflict: RulePair::new(l_c, ThresholdRule::Constant(Rational::one())),
        }
    }
}

impl PairThresholdSource for PairRules {
    fn thresholds_for(&self, table: &SituationTable, anchor: Agent, issues: &[Issue]) -> Result<PairThresholds> {
        let ctx = RuleContext {
            non_neutral: Some(non_neutral_count(table, anchor, issues)),
            members: None,
        };
        PairThresholds::new(self.alliance.resolve(&ctx)?, self.conflict.resolve(&ctx)?)
    }
}

/// Degrees of the ordered pair (x, y) under `scope`.
pub fn pair_degrees(
    model: &AuxiliaryModel,
    table: &SituationTable,
    x: Agent,
    y: Agent,
    issues: &[Issue],
    scope: PairScope,
) -> DegreePair {
    match scope {
        PairScope::IssueSet => {
            alliance_conflict_aggregate(model, table, &AggregationScope::pair(issues, x, y))
        }
        PairScope::NonNeutral => alliance_conflict_non_neutral(model, table, x, y, issues),
    }
}

fn classify(d: DegreePair, t: &PairThresholds) -> Part {
    if d.alliance >= t.alliance.high && d.conflict <= t.conflict.low {
        Part::Positive
    } else if d.alliance <= t.alliance.low && d.conflict >= t.conflict.high {
        Part::Negative
    } else {
        Part::Neutral
    }
}

/// Alliance (positive), conflict (negative) and neutrality relations.
pub fn trisect_pairs_two_functions(
    model: &AuxiliaryModel,
    table: &SituationTable,
    issues: &[Issue],
    thresholds: &dyn PairThresholdSource,
    scope: PairScope,
) -> Result<Trisection<(Agent, Agent)>> {
    let issues = normalize(issues);
    let per_anchor = table
        .agent_list()
        .map(|x| thresholds.thresholds_for(table, x, &issues))
        .collect::<Result<Vec<_>>>()?;
    Ok(Trisection::classify(all_pairs(table), |&(x, y)| {
        classify(pair_degrees(model, table, x, y, &issues, scope), &per_anchor[x.0])
    }))
}

/// Agents allied with one anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllianceSet {
    pub anchor: Agent,
    pub members: Vec<Agent>,
    pub scope: PairScope,
}

/// A maximal set of agents pairwise allied in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalConsistentAllianceSet {
    pub members: Vec<Agent>,
    pub scope: PairScope,
}

fn alliance_row(
    model: &AuxiliaryModel,
    table: &SituationTable,
    x: Agent,
    issues: &[Issue],
    t: &PairThresholds,
    scope: PairScope,
) -> Vec<bool> {
    table
        .agent_list()
        .map(|y| classify(pair_degrees(model, table, x, y, issues, scope), t) == Part::Positive)
        .collect()
}

/// AS(x) = {y : (x, y) in the alliance relation}.
pub fn alliance_set(
    model: &AuxiliaryModel,
    table: &SituationTable,
    anchor: Agent,
    issues: &[Issue],
    thresholds: &dyn PairThresholdSource,
    scope: PairScope,
) -> Result<AllianceSet> {
    let issues = normalize(issues);
    let t = thresholds.thresholds_for(table, anchor, &issues)?;
    let row = alliance_row(model, table, anchor, &issues, &t, scope);
    Ok(AllianceSet {
        anchor,
        members: table.agent_list().filter(|y| row[y.0]).collect(),
        scope,
    })
}

/// Alliance relation as a boolean matrix indexed [first][second].
pub fn alliance_matrix(
    model: &AuxiliaryModel,
    table: &SituationTable,
    issues: &[Issue],
    thresholds: &dyn PairThresholdSource,
    scope: PairScope,
) -> Result<Vec<Vec<bool>>> {
    let issues = normalize(issues);
    table
        .agent_list()
        .map(|x| {
            let t = thresholds.thresholds_for(table, x, &issues)?;
            Ok(alliance_row(model, table, x, &issues, &t, scope))
        })
        .collect()
}

/// Maximal cliques of the mutual-alliance graph, in lexicographic order.
pub fn maximal_consistent_alliance_sets(
    model: &AuxiliaryModel,
    table: &SituationTable,
    issues: &[Issue],
    thresholds: &dyn PairThresholdSource,
    scope: PairScope,
    agent_cap: usize,
) -> Result<Vec<MaximalConsistentAllianceSet>> {
    let n = table.n_agents();
    if n > agent_cap {
        return Err(Error::ResourceLimit {
            what: "agent count",
            limit: agent_cap,
            actual: n,
        });
    }
    let r = alliance_matrix(model, table, issues, thresholds, scope)?;
    // Agents not allied with themselves belong to no consistent set.
    let vertices: Vec<usize> = (0..n).filter(|&x| r[x][x]).collect();
    let mutual: Vec<Vec<bool>> = vertices
        .iter()
        .map(|&x| vertices.iter().map(|&y| r[x][y] && r[y][x]).collect())
        .collect();
    Ok(maximal_cliques(&mutual)
        .into_iter()
        .map(|c| MaximalConsistentAllianceSet {
            members: c.into_iter().map(|k| Agent(vertices[k])).collect(),
            scope,
        })
        .collect())
}
