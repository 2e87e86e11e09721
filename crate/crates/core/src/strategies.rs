//! Strategies as issue-rating conjunctions: composition, families,
//! strategy-agent degrees, agent trisections, duals.

use crate::auxiliary::AuxiliaryModel;
use crate::bifunctions::DegreePair;
use crate::decisions::Description;
use crate::error::{Error, IdKind, Result};
use crate::model::ratings::ratio;
use crate::model::{normalize, Agent, Issue, Part, Rating, SituationTable, ThresholdKind, ThresholdPair, Trisection};

pub type Strategy = Description;

/// Default cap on the number of issues a family may range over.
pub const DEFAULT_FAMILY_CAP: usize = 12;

/// Single-literal strategy S_i^+, S_i^- or S_i^0.
pub fn atom(issue: Issue, rating: Rating) -> Strategy {
    Description::literal(issue, rating)
}

/// Conjunction of atoms on pairwise distinct issues.
pub fn compose(atoms: &[Strategy]) -> Result<Strategy> {
    Description::new(atoms.iter().flat_map(|a| a.literals().iter().copied()).collect())
}

pub fn decompose(s: &Strategy) -> Vec<Strategy> {
    s.literals().iter().map(|&(i, r)| atom(i, r)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// Each issue absent or rated +1, -1 or 0: 4^n strategies.
    Full,
    /// Each issue absent or rated +1 or -1: 3^n strategies.
    NonNeutral,
}

impl FamilyKind {
    fn states(self) -> u64 {
        match self {
            FamilyKind::Full => 4,
            FamilyKind::NonNeutral => 3,
        }
    }
}

/// Lazy enumeration of a strategy family.
///
/// Strategies come in mixed-radix order with the first issue most
/// significant and per-issue states ordered absent, +1, -1, 0. The empty
/// strategy comes first.
#[derive(Debug, Clone)]
pub struct Family {
    issues: Vec<Issue>,
    base: u64,
    next: u64,
    end: u64,
}

impl Family {
    pub fn size(&self) -> u64 {
        self.end
    }
}

impl Iterator for Family {
    type Item = Strategy;

    fn next(&mut self) -> Option<Strategy> {
        if self.next >= self.end {
            return None;
        }
        let mut code = self.next;
        self.next += 1;
        let mut literals = Vec::new();
        for &issue in self.issues.iter().rev() {
            let digit = code % self.base;
            code /= self.base;
            match digit {
                0 => {}
                d => literals.push((issue, Rating::ALL[d as usize - 1])),
            }
        }
        Some(Description::new(literals).expect("issues are distinct"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Family {}

pub fn enumerate_family(issues: &[Issue], kind: FamilyKind, cap: usize) -> Result<Family> {
    let issues = normalize(issues);
    if issues.len() > cap {
        return Err(Error::ResourceLimit {
            what: "family issue count",
            limit: cap,
            actual: issues.len(),
        });
    }
    let base = kind.states();
    let end = base
        .checked_pow(issues.len() as u32)
        .ok_or(Error::ResourceLimit {
            what: "family issue count",
            limit: cap,
            actual: issues.len(),
        })?;
    Ok(Family {
        issues,
        base,
        next: 0,
        end,
    })
}

fn check_issues(table: &SituationTable, s: &Strategy) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptyStrategy);
    }
    if let Some(&(i, _)) = s.literals().iter().find(|(i, _)| i.0 >= table.n_issues()) {
        return Err(Error::UnknownId {
            kind: IdKind::Issue,
            id: format!("#{}", i.0),
        });
    }
    Ok(())
}

/// Φ_{J_S}^=(S, x) and Φ_{J_S}^≍(S, x), with S read as an extra agent rating
/// each of its issues as its literal says.
pub fn strategy_agent_degrees(
    model: &AuxiliaryModel,
    table: &SituationTable,
    s: &Strategy,
    x: Agent,
) -> Result<DegreePair> {
    check_issues(table, s)?;
    let (mut alliance, mut conflict) = (0, 0);
    for &(i, r) in s.literals() {
        match model.cell(r, table.rating(x, i)) {
            Rating::Positive => alliance += 1,
            Rating::Negative => conflict += 1,
            Rating::Neutral => {}
        }
    }
    Ok(DegreePair::new(ratio(alliance, s.len()), ratio(conflict, s.len())))
}

/// Supporting (positive): alliance >= h_s and conflict <= l_o.
/// Opposing (negative): alliance <= l_s and conflict >= h_o.
pub fn trisect_agents_by_strategy(
    model: &AuxiliaryModel,
    table: &SituationTable,
    s: &Strategy,
    agents: &[Agent],
    ts: ThresholdPair,
    to: ThresholdPair,
) -> Result<Trisection<Agent>> {
    ts.expect_kind(ThresholdKind::UnitDegree)?;
    to.expect_kind(ThresholdKind::UnitDegree)?;
    check_issues(table, s)?;
    Trisection::try_classify(normalize(agents), |&x| {
        let d = strategy_agent_degrees(model, table, s, x)?;
        Ok(if d.alliance >= ts.high && d.conflict <= to.low {
            Part::Positive
        } else if d.alliance <= ts.low && d.conflict >= to.high {
            Part::Negative
        } else {
            Part::Neutral
        })
    })
}

pub fn is_non_neutral(s: &Strategy) -> bool {
    s.is_non_neutral()
}

pub fn to_non_neutral(s: &Strategy) -> Strategy {
    Description::new(
        s.literals()
            .iter()
            .copied()
            .filter(|(_, r)| !r.is_neutral())
            .collect(),
    )
    .expect("subset of a valid strategy")
}

/// Flips the sign of every literal.
pub fn dual(s: &Strategy) -> Result<Strategy> {
    if let Some(&(i, _)) = s.literals().iter().find(|(_, r)| r.is_neutral()) {
        return Err(Error::NeutralLiteral(i.0));
    }
    Description::new(s.literals().iter().map(|&(i, r)| (i, r.flipped())).collect())
}
