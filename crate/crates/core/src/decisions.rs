//! Descriptions of agents and agent sets, imaginary agents x⁺ / x⁻ and
//! the two-function trisections of issues.

use std::fmt;

use serde_json::json;

use crate::auxiliary::AuxiliaryModel;
use crate::bifunctions::DegreePair;
use crate::error::{Error, Result};
use crate::model::ratings::ratio;
use crate::model::{
    non_neutral_issues, normalize, Agent, Issue, Part, Rating, Rational, RuleContext, RulePair,
    SituationTable, ThresholdKind, ThresholdPair, Trisection,
};
use crate::relations::AllianceSet;

/// Conjunction of issue-rating literals, at most one per issue, kept in
/// issue order. The empty description means "no condition".
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Description {
    literals: Vec<(Issue, Rating)>,
}

impl Description {
    pub fn new(mut literals: Vec<(Issue, Rating)>) -> Result<Self> {
        literals.sort_by_key(|&(i, _)| i);
        if let Some(w) = literals.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateIssue(w[0].0 .0));
        }
        Ok(Description { literals })
    }

    pub fn empty() -> Self {
        Description::default()
    }

    pub fn literal(issue: Issue, rating: Rating) -> Self {
        Description {
            literals: vec![(issue, rating)],
        }
    }

    pub fn literals(&self) -> &[(Issue, Rating)] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn issues(&self) -> Vec<Issue> {
        self.literals.iter().map(|&(i, _)| i).collect()
    }

    pub fn rating_on(&self, issue: Issue) -> Option<Rating> {
        self.literals
            .iter()
            .find(|&&(i, _)| i == issue)
            .map(|&(_, r)| r)
    }

    pub fn is_non_neutral(&self) -> bool {
        self.literals.iter().all(|&(_, r)| !r.is_neutral())
    }

    /// `⟨i1,+1⟩∧⟨i4,-1⟩`; the empty description renders as `∅`.
    pub fn render(&self, table: &SituationTable) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        self.literals
            .iter()
            .map(|&(i, r)| format!("⟨{},{}⟩", table.issue_id(i), r))
            .collect::<Vec<_>>()
            .join("∧")
    }

    pub fn to_json(&self, table: &SituationTable) -> serde_json::Value {
        serde_json::Value::Array(
            self.literals
                .iter()
                .map(|&(i, r)| json!({ "issue": table.issue_id(i), "rating": r.value() }))
                .collect(),
        )
    }

    /// Parses the rendered form or a comma list `i1:+1,i4:-1`. Empty input
    /// and `∅` give the empty description.
    pub fn parse(src: &str, table: &SituationTable) -> Result<Self> {
        let src = src.trim();
        if src.is_empty() || src == "∅" {
            return Ok(Description::empty());
        }
        let parts: Vec<&str> = if src.contains('⟨') {
            src.split('∧').collect()
        } else {
            src.split(',').collect()
        };
        let mut literals = Vec::with_capacity(parts.len());
        for part in parts {
            let body = part.trim().trim_start_matches('⟨').trim_end_matches('⟩');
            let (issue, rating) = body
                .split_once([',', ':'])
                .ok_or_else(|| Error::Parse(format!("not a literal: {part:?}")))?;
            literals.push((table.issue(issue.trim())?, rating.parse::<Rating>()?));
        }
        Description::new(literals)
    }
}

/// Description of one agent; `valid` is false for an agent that has no
/// non-neutral rating when only non-neutral issues are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgentDescription {
    pub description: Description,
    pub valid: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restrict {
    All,
    NonNeutral,
}

/// Des_J(x), or Des over J_x^{+-} for [`Restrict::NonNeutral`].
pub fn describe_agent(table: &SituationTable, x: Agent, issues: &[Issue], restrict: Restrict) -> AgentDescription {
    let kept = match restrict {
        Restrict::All => normalize(issues),
        Restrict::NonNeutral => non_neutral_issues(table, x, issues),
    };
    let description = Description {
        literals: kept.iter().map(|&i| (i, table.rating(x, i))).collect(),
    };
    let valid = restrict == Restrict::All || !description.is_empty();
    AgentDescription { description, valid }
}

/// Des(AS_J(x)) = Des_J(x).
pub fn describe_alliance_set(
    table: &SituationTable,
    set: &AllianceSet,
    issues: &[Issue],
    restrict: Restrict,
) -> AgentDescription {
    describe_agent(table, set.anchor, issues, restrict)
}

/// The all-positive agent x⁺ or the all-negative agent x⁻.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pole {
    XPlus,
    XMinus,
}

impl Pole {
    fn rating(self) -> Rating {
        match self {
            Pole::XPlus => Rating::Positive,
            Pole::XMinus => Rating::Negative,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Alliance,
    Conflict,
}

/// Alliance or conflict degree between an imaginary agent and the set `x`
/// on issue `i`. The imaginary agent is never one of the members.
pub fn imaginary_degree(
    model: &AuxiliaryModel,
    table: &SituationTable,
    pole: Pole,
    relation: Relation,
    x: &[Agent],
    i: Issue,
) -> Result<Rational> {
    let x = normalize(x);
    if x.is_empty() {
        return Err(Error::EmptyAgentSet);
    }
    let hits = x
        .iter()
        .filter(|&&y| {
            let d = DegreePair::split(model.cell(pole.rating(), table.rating(y, i)));
            let v = match relation {
                Relation::Alliance => d.alliance,
                Relation::Conflict => d.conflict,
            };
            v == Rational::from_integer(1)
        })
        .count();
    Ok(ratio(hits, x.len()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositiveView {
    AllianceWithXPlus,
    ConflictWithXMinus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegativeView {
    ConflictWithXPlus,
    AllianceWithXMinus,
}

/// Which degree measures how positive, and which how negative, a set is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CombinationChoice {
    pub positive_view: PositiveView,
    pub negative_view: NegativeView,
}

impl CombinationChoice {
    /// Combinations 1 to 4:
    /// 1. Φ^=(x⁺, X) with Φ^≍(x⁺, X)
    /// 2. Φ^=(x⁺, X) with Φ^=(x⁻, X)
    /// 3. Φ^≍(x⁻, X) with Φ^≍(x⁺, X)
    /// 4. Φ^≍(x⁻, X) with Φ^=(x⁻, X)
    pub fn numbered(n: u8) -> Result<Self> {
        use NegativeView::*;
        use PositiveView::*;
        let (positive_view, negative_view) = match n {
            1 => (AllianceWithXPlus, ConflictWithXPlus),
            2 => (AllianceWithXPlus, AllianceWithXMinus),
            3 => (ConflictWithXMinus, ConflictWithXPlus),
            4 => (ConflictWithXMinus, AllianceWithXMinus),
            _ => return Err(Error::Parse(format!("combination must be 1 to 4, got {n}"))),
        };
        Ok(CombinationChoice {
            positive_view,
            negative_view,
        })
    }

    pub fn all() -> [CombinationChoice; 4] {
        [1, 2, 3, 4].map(|n| Self::numbered(n).expect("in range"))
    }

    pub fn number(&self) -> u8 {
        use NegativeView::*;
        use PositiveView::*;
        match (self.positive_view, self.negative_view) {
            (AllianceWithXPlus, ConflictWithXPlus) => 1,
            (AllianceWithXPlus, AllianceWithXMinus) => 2,
            (ConflictWithXMinus, ConflictWithXPlus) => 3,
            (ConflictWithXMinus, AllianceWithXMinus) => 4,
        }
    }
}

impl fmt::Display for CombinationChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

fn positive_degree(
    model: &AuxiliaryModel,
    table: &SituationTable,
    view: PositiveView,
    x: &[Agent],
    i: Issue,
) -> Result<Rational> {
    match view {
        PositiveView::AllianceWithXPlus => imaginary_degree(model, table, Pole::XPlus, Relation::Alliance, x, i),
        PositiveView::ConflictWithXMinus => imaginary_degree(model, table, Pole::XMinus, Relation::Conflict, x, i),
    }
}

fn negative_degree(
    model: &AuxiliaryModel,
    table: &SituationTable,
    view: NegativeView,
    x: &[Agent],
    i: Issue,
) -> Result<Rational> {
    match view {
        NegativeView::ConflictWithXPlus => imaginary_degree(model, table, Pole::XPlus, Relation::Conflict, x, i),
        NegativeView::AllianceWithXMinus => imaginary_degree(model, table, Pole::XMinus, Relation::Alliance, x, i),
    }
}

/// Positive issues: positive view >= h_p and negative view <= l_n.
/// Negative issues: positive view <= l_p and negative view >= h_n.
pub fn trisect_issues_two_functions(
    model: &AuxiliaryModel,
    table: &SituationTable,
    agents: &[Agent],
    issues: &[Issue],
    combo: CombinationChoice,
    tp: ThresholdPair,
    tn: ThresholdPair,
) -> Result<Trisection<Issue>> {
    tp.expect_kind(ThresholdKind::UnitDegree)?;
    tn.expect_kind(ThresholdKind::UnitDegree)?;
    let agents = normalize(agents);
    if agents.is_empty() {
        return Err(Error::EmptyAgentSet);
    }
    Trisection::try_classify(normalize(issues), |&i| {
        let p = positive_degree(model, table, combo.positive_view, &agents, i)?;
        let n = negative_degree(model, table, combo.negative_view, &agents, i)?;
        Ok(if p >= tp.high && n <= tn.low {
            Part::Positive
        } else if p <= tp.low && n >= tn.high {
            Part::Negative
        } else {
            Part::Neutral
        })
    })
}

/// Issue-trisection thresholds as rules, resolved per agent set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IssueRules {
    pub positive: RulePair,
    pub negative: RulePair,
}

impl IssueRules {
    pub fn same(pair: RulePair) -> Self {
        IssueRules {
            positive: pair,
            negative: pair,
        }
    }

    pub fn resolve(&self, members: usize) -> Result<(ThresholdPair, ThresholdPair)> {
        let ctx = RuleContext {
            non_neutral: None,
            members: Some(members),
        };
        Ok((self.positive.resolve(&ctx)?, self.negative.resolve(&ctx)?))
    }
}

/// Literals ⟨i,+1⟩ for positive issues, ⟨i,-1⟩ for negative ones and, unless
/// restricted to non-neutral issues, ⟨i,0⟩ for the rest.
pub fn decision_from_trisection(t: &Trisection<Issue>, restrict: Restrict) -> Description {
    let mut literals: Vec<(Issue, Rating)> = t
        .positive
        .iter()
        .map(|&i| (i, Rating::Positive))
        .chain(t.negative.iter().map(|&i| (i, Rating::Negative)))
        .collect();
    if restrict == Restrict::All {
        literals.extend(t.neutral.iter().map(|&i| (i, Rating::Neutral)));
    }
    Description::new(literals).expect("trisection parts are disjoint")
}

/// Decision of an agent set such as a maximal consistent alliance set.
#[allow(clippy::too_many_arguments)]
pub fn decide_alliance_set(
    model: &AuxiliaryModel,
    table: &SituationTable,
    members: &[Agent],
    issues: &[Issue],
    combo: CombinationChoice,
    tp: ThresholdPair,
    tn: ThresholdPair,
    restrict: Restrict,
) -> Result<Description> {
    let t = trisect_issues_two_functions(model, table, members, issues, combo, tp, tn)?;
    Ok(decision_from_trisection(&t, restrict))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combos_roundtrip() {
        for n in 1..=4 {
            assert_eq!(CombinationChoice::numbered(n).unwrap().number(), n);
        }
        assert!(CombinationChoice::numbered(5).is_err());
    }

    #[test]
    fn description_text_forms() {
        let t = SituationTable::from_values(&["x1"], &["i1", "i2"], &[&[1, -1]]).unwrap();
        let d = Description::parse("⟨i2,-1⟩∧⟨i1,+1⟩", &t).unwrap();
        assert_eq!(d.render(&t), "⟨i1,+1⟩∧⟨i2,-1⟩");
        assert_eq!(Description::parse("i1:+1,i2:-1", &t).unwrap(), d);
        assert_eq!(Description::parse("∅", &t).unwrap(), Description::empty());
        assert!(matches!(
            Description::parse("i1:+1,i1:-1", &t),
            Err(Error::DuplicateIssue(0))
        ));
        assert_eq!(
            d.to_json(&t).to_string(),
            r#"[{"issue":"i1","rating":1},{"issue":"i2","rating":-1}]"#
        );
    }
}
