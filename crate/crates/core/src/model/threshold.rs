use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdKind {
    /// Cuts averaged ratings in [-1, +1]: -1 <= low < 0 < high <= 1.
    SignedRating,
    /// Cuts degrees in [0, 1]: 0 <= low < high <= 1.
    UnitDegree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdPair {
    pub low: Rational,
    pub high: Rational,
    pub kind: ThresholdKind,
}

impl ThresholdPair {
    pub fn signed(low: Rational, high: Rational) -> Result<Self> {
        let one = Rational::one();
        if !(-one <= low && low < Rational::zero() && Rational::zero() < high && high <= one) {
            return Err(Error::InvalidThreshold(format!(
                "signed pair needs -1 <= low < 0 < high <= 1, got ({low}, {high})"
            )));
        }
        Ok(ThresholdPair {
            low,
            high,
            kind: ThresholdKind::SignedRating,
        })
    }

    pub fn unit(low: Rational, high: Rational) -> Result<Self> {
        if low >= high {
            return Err(Error::InvalidThreshold(format!(
                "unit pair needs low < high, got ({low}, {high})"
            )));
        }
        Self::unit_unordered(low, high)
    }

    /// Unit pair checked for range only. Used for per-set thresholds
    /// derived from rules, where the two bounds may meet or cross.
    pub fn unit_unordered(low: Rational, high: Rational) -> Result<Self> {
        let in_range = |q: Rational| q >= Rational::zero() && q <= Rational::one();
        if !in_range(low) || !in_range(high) {
            return Err(Error::InvalidThreshold(format!(
                "unit thresholds must lie in [0, 1], got ({low}, {high})"
            )));
        }
        Ok(ThresholdPair {
            low,
            high,
            kind: ThresholdKind::UnitDegree,
        })
    }

    pub(crate) fn expect_kind(&self, kind: ThresholdKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::InvalidThreshold(format!(
                "expected {kind:?} thresholds, got {:?}",
                self.kind
            )))
        }
    }
}

/// Counts a rule may refer to when it is resolved.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RuleContext {
    /// |J_x^{+-}| of the anchor agent.
    pub non_neutral: Option<usize>,
    /// Size of the agent set being described.
    pub members: Option<usize>,
}

/// A threshold given as a constant or derived from a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdRule {
    Constant(Rational),
    /// 1 / |J_x^{+-}| of the anchor agent.
    InverseNonNeutralCount,
    /// 1 / |X| of the agent set.
    InverseMemberCount,
}

fn reciprocal(count: usize) -> Rational {
    // An empty count resolves to 1.
    Rational::new(1, count.max(1) as i64)
}

impl ThresholdRule {
    pub fn resolve(&self, ctx: &RuleContext) -> Result<Rational> {
        match self {
            ThresholdRule::Constant(q) => Ok(*q),
            ThresholdRule::InverseNonNeutralCount => ctx.non_neutral.map(reciprocal).ok_or_else(|| {
                Error::InvalidThreshold("non-neutral count rule used outside a pair trisection".into())
            }),
            ThresholdRule::InverseMemberCount => ctx.members.map(reciprocal).ok_or_else(|| {
                Error::InvalidThreshold("member count rule used outside an issue trisection".into())
            }),
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, ThresholdRule::Constant(_))
    }
}

impl From<Rational> for ThresholdRule {
    fn from(q: Rational) -> Self {
        ThresholdRule::Constant(q)
    }
}

impl fmt::Display for ThresholdRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThresholdRule::Constant(q) => write!(f, "{q}"),
            ThresholdRule::InverseNonNeutralCount => f.write_str("inverse-non-neutral"),
            ThresholdRule::InverseMemberCount => f.write_str("inverse-members"),
        }
    }
}

impl FromStr for ThresholdRule {
    type Err = Error;

    /// Accepts `p/q`, an integer, `inverse-non-neutral` or `inverse-members`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inverse-non-neutral" => Ok(ThresholdRule::InverseNonNeutralCount),
            "inverse-members" => Ok(ThresholdRule::InverseMemberCount),
            other => parse_rational(other).map(ThresholdRule::Constant),
        }
    }
}

/// Parses `p/q` or an integer, with an optional leading sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let body = s.strip_prefix('+').unwrap_or(s);
    let bad = || Error::Parse(format!("not a rational p/q: {s:?}"));
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (body, "1"),
    };
    let num: i64 = num.parse().map_err(|_| bad())?;
    let den: i64 = den.parse().map_err(|_| bad())?;
    if den == 0 {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Low and high bounds as rules; resolved into a unit pair per context.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RulePair {
    pub low: ThresholdRule,
    pub high: ThresholdRule,
}

impl RulePair {
    pub fn new(low: impl Into<ThresholdRule>, high: impl Into<ThresholdRule>) -> Self {
        RulePair {
            low: low.into(),
            high: high.into(),
        }
    }

    pub fn constant(pair: ThresholdPair) -> Self {
        RulePair::new(pair.low, pair.high)
    }

    /// Constant pairs get the strict check; rule-derived pairs the range check.
    pub fn resolve(&self, ctx: &RuleContext) -> Result<ThresholdPair> {
        let low = self.low.resolve(ctx)?;
        let high = self.high.resolve(ctx)?;
        if self.low.is_constant() && self.high.is_constant() {
            ThresholdPair::unit(low, high)
        } else {
            ThresholdPair::unit_unordered(low, high)
        }
    }
}
