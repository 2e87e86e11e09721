//! TOML analysis configuration.
//!
//! ```toml
//! table = "tables/survey.csv"      # relative to this file
//! model = "pawlak"                 # pawlak | yao | custom:<path>
//! issues = ["i1", "i2"]            # omit for all issues
//! combo = 1
//! format = "md"
//! priority = ["x14", "x2"]         # tie-break for candidate strategies
//!
//! [thresholds]
//! agents = { low = "-3/5", high = "3/5" }
//! pair-scope = "non-neutral"
//! alliance = { high = "1/4" }
//! conflict = { low = "inverse-non-neutral" }
//! issue-positive = { low = "0", high = "inverse-members" }
//! ```

use std::path::{Path, PathBuf};

use serde::Deserialize;
use trisect_core::decisions::IssueRules;
use trisect_core::model::{RulePair, ThresholdRule};
use trisect_core::relations::{PairRules, PairScope};
use trisect_core::{Rational, ThresholdPair};

use crate::error::{CliError, CliResult};
use crate::report::Format;

/// Low and high bounds; each is `p/q` or a rule name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    pub low: Option<String>,
    pub high: Option<String>,
}

impl Bounds {
    /// Parses `low,high`.
    pub fn parse_pair(s: &str) -> CliResult<Self> {
        let (l, h) = s
            .split_once(',')
            .ok_or_else(|| CliError::Input(format!("thresholds must be written low,high; got {s:?}")))?;
        Ok(Bounds {
            low: Some(l.trim().to_string()),
            high: Some(h.trim().to_string()),
        })
    }

    fn rule(v: &Option<String>, default: Option<Rational>, what: &str, side: &str) -> CliResult<ThresholdRule> {
        match (v, default) {
            (Some(s), _) => Ok(s.parse()?),
            (None, Some(d)) => Ok(ThresholdRule::Constant(d)),
            (None, None) => Err(CliError::Input(format!("missing {side} threshold for {what}"))),
        }
    }

    pub fn rules(&self, what: &str, default_low: Option<Rational>, default_high: Option<Rational>) -> CliResult<RulePair> {
        Ok(RulePair::new(
            Self::rule(&self.low, default_low, what, "low")?,
            Self::rule(&self.high, default_high, what, "high")?,
        ))
    }

    fn constant(&self, what: &str) -> CliResult<(Rational, Rational)> {
        let p = self.rules(what, None, None)?;
        match (p.low, p.high) {
            (ThresholdRule::Constant(l), ThresholdRule::Constant(h)) => Ok((l, h)),
            _ => Err(CliError::Input(format!("{what} thresholds must be constants p/q"))),
        }
    }

    pub fn signed(&self, what: &str) -> CliResult<ThresholdPair> {
        let (l, h) = self.constant(what)?;
        Ok(ThresholdPair::signed(l, h)?)
    }

    pub fn unit(&self, what: &str) -> CliResult<ThresholdPair> {
        let (l, h) = self.constant(what)?;
        Ok(ThresholdPair::unit(l, h)?)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct ThresholdConfig {
    /// Signed pair for agent trisections by average rating.
    pub agents: Option<Bounds>,
    /// Signed pair for issue trisections by average rating.
    pub issues: Option<Bounds>,
    /// Signed pair for pair trisections by the aggregated auxiliary value.
    pub auxiliary_pairs: Option<Bounds>,
    pub pair_scope: Option<String>,
    pub alliance: Option<Bounds>,
    pub conflict: Option<Bounds>,
    pub issue_positive: Option<Bounds>,
    pub issue_negative: Option<Bounds>,
    pub supporting: Option<Bounds>,
    pub opposing: Option<Bounds>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct AnalysisConfig {
    pub table: Option<PathBuf>,
    pub model: Option<String>,
    pub issues: Option<Vec<String>>,
    pub combo: Option<u8>,
    pub format: Option<String>,
    #[serde(default)]
    pub priority: Vec<String>,
    pub family_cap: Option<usize>,
    pub agent_cap: Option<usize>,
    #[serde(default)]
    pub thresholds: ThresholdConfig,
}

pub fn parse_scope(s: &str) -> CliResult<PairScope> {
    match s {
        "issue-set" => Ok(PairScope::IssueSet),
        "non-neutral" => Ok(PairScope::NonNeutral),
        other => Err(CliError::Input(format!(
            "unknown pair scope {other:?}; expected issue-set or non-neutral"
        ))),
    }
}

fn missing(key: &str) -> CliError {
    CliError::Input(format!("no thresholds given for {key}; set [thresholds] {key} or pass them on the command line"))
}

impl AnalysisConfig {
    /// Reads a config file; relative paths inside it are taken from its directory.
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
        let mut cfg: AnalysisConfig =
            toml::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        if let Some(t) = &cfg.table {
            if t.is_relative() {
                cfg.table = Some(base.join(t));
            }
        }
        if let Some(custom) = cfg.model.as_deref().and_then(|m| m.strip_prefix("custom:")) {
            let p = Path::new(custom);
            if p.is_relative() {
                cfg.model = Some(format!("custom:{}", base.join(p).display()));
            }
        }
        Ok(cfg)
    }

    /// Parses every threshold block that is present and checks that
    /// referenced files exist.
    pub fn validate(&self) -> CliResult<()> {
        if let Some(t) = &self.table {
            if !t.exists() {
                return Err(CliError::Input(format!("table {} does not exist", t.display())));
            }
        }
        if let Some(p) = self.model.as_deref().and_then(|m| m.strip_prefix("custom:")) {
            if !Path::new(p).exists() {
                return Err(CliError::Input(format!("model file {p} does not exist")));
            }
        }
        if let Some(f) = &self.format {
            f.parse::<Format>().map_err(CliError::Input)?;
        }
        let t = &self.thresholds;
        if let Some(b) = &t.agents {
            b.signed("agents")?;
        }
        if let Some(b) = &t.issues {
            b.signed("issues")?;
        }
        if let Some(b) = &t.auxiliary_pairs {
            b.signed("auxiliary-pairs")?;
        }
        if let Some(s) = &t.pair_scope {
            parse_scope(s)?;
        }
        if t.alliance.is_some() || t.conflict.is_some() {
            self.pair_rules(None, None)?;
        }
        if t.issue_positive.is_some() || t.issue_negative.is_some() {
            self.issue_rules(None, None)?;
        }
        if let Some(b) = &t.supporting {
            b.unit("supporting")?;
        }
        if let Some(b) = &t.opposing {
            b.unit("opposing")?;
        }
        if let Some(c) = self.combo {
            trisect_core::CombinationChoice::numbered(c)?;
        }
        Ok(())
    }

    pub fn signed(&self, key: &str, cli: Option<&Bounds>) -> CliResult<ThresholdPair> {
        let t = &self.thresholds;
        let from_config = match key {
            "agents" => &t.agents,
            "issues" => &t.issues,
            "auxiliary-pairs" => &t.auxiliary_pairs,
            _ => unreachable!("signed threshold key {key}"),
        };
        cli.or(from_config.as_ref()).ok_or_else(|| missing(key))?.signed(key)
    }

    pub fn pair_scope(&self, cli: Option<&str>) -> CliResult<PairScope> {
        match cli.or(self.thresholds.pair_scope.as_deref()) {
            Some(s) => parse_scope(s),
            None => Ok(PairScope::NonNeutral),
        }
    }

    /// Pair thresholds; l_a defaults to 0 and h_c to 1.
    pub fn pair_rules(&self, alliance: Option<&Bounds>, conflict: Option<&Bounds>) -> CliResult<PairRules> {
        let t = &self.thresholds;
        let a = alliance.or(t.alliance.as_ref()).ok_or_else(|| missing("alliance"))?;
        let c = conflict.or(t.conflict.as_ref()).ok_or_else(|| missing("conflict"))?;
        let rules = PairRules {
            alliance: a.rules("alliance", Some(Rational::from_integer(0)), None)?,
            conflict: c.rules("conflict", None, Some(Rational::from_integer(1)))?,
        };
        check_rule_pair(&rules.alliance, "alliance")?;
        check_rule_pair(&rules.conflict, "conflict")?;
        Ok(rules)
    }

    /// Issue thresholds; a missing negative block reuses the positive one.
    pub fn issue_rules(&self, positive: Option<&Bounds>, negative: Option<&Bounds>) -> CliResult<IssueRules> {
        let t = &self.thresholds;
        let p = positive.or(t.issue_positive.as_ref()).ok_or_else(|| missing("issue-positive"))?;
        let n = negative.or(t.issue_negative.as_ref()).unwrap_or(p);
        let rules = IssueRules {
            positive: p.rules("issue-positive", None, None)?,
            negative: n.rules("issue-negative", None, None)?,
        };
        check_rule_pair(&rules.positive, "issue-positive")?;
        check_rule_pair(&rules.negative, "issue-negative")?;
        Ok(rules)
    }

    pub fn strategy_thresholds(
        &self,
        supporting: Option<&Bounds>,
        opposing: Option<&Bounds>,
    ) -> CliResult<(ThresholdPair, ThresholdPair)> {
        let t = &self.thresholds;
        let s = supporting.or(t.supporting.as_ref()).ok_or_else(|| missing("supporting"))?;
        let o = opposing.or(t.opposing.as_ref()).ok_or_else(|| missing("opposing"))?;
        Ok((s.unit("supporting")?, o.unit("opposing")?))
    }
}

/// Constant pairs must already be valid unit pairs.
fn check_rule_pair(p: &RulePair, what: &str) -> CliResult<()> {
    if let (ThresholdRule::Constant(l), ThresholdRule::Constant(h)) = (p.low, p.high) {
        ThresholdPair::unit(l, h).map_err(|e| CliError::Input(format!("{what}: {e}")))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
model = "pawlak"
combo = 1
priority = ["x14"]

[thresholds]
agents = { low = "-3/5", high = "3/5" }
pair-scope = "non-neutral"
alliance = { high = "1/4" }
conflict = { low = "inverse-non-neutral" }
issue-positive = { low = "0", high = "inverse-members" }
supporting = { low = "1/7", high = "1/6" }
opposing = { low = "1/6", high = "1/3" }
"#;

    #[test]
    fn parses_and_validates() {
        let cfg: AnalysisConfig = toml::from_str(SAMPLE).unwrap();
        cfg.validate().unwrap();
        assert_eq!(cfg.priority, vec!["x14"]);
        let r = cfg.pair_rules(None, None).unwrap();
        assert_eq!(r.conflict.low, ThresholdRule::InverseNonNeutralCount);
        assert_eq!(r.alliance.low, ThresholdRule::Constant(Rational::from_integer(0)));
        let i = cfg.issue_rules(None, None).unwrap();
        assert_eq!(i.negative, i.positive);
        assert!(cfg.signed("issues", None).is_err());
    }

    #[test]
    fn command_line_overrides_config() {
        let cfg: AnalysisConfig = toml::from_str(SAMPLE).unwrap();
        let b = Bounds::parse_pair("-1/2, 1/2").unwrap();
        let t = cfg.signed("agents", Some(&b)).unwrap();
        assert_eq!(t.low, Rational::new(-1, 2));
        assert_eq!(cfg.pair_scope(Some("issue-set")).unwrap(), PairScope::IssueSet);
    }

    #[test]
    fn rejects_bad_values() {
        let bad: AnalysisConfig = toml::from_str("[thresholds]\nagents = { low = \"0.5\", high = \"1\" }").unwrap();
        assert!(bad.validate().is_err());
        let bad: AnalysisConfig = toml::from_str("[thresholds]\nsupporting = { low = \"1/2\", high = \"1/3\" }").unwrap();
        assert!(bad.validate().is_err());
        assert!(toml::from_str::<AnalysisConfig>("tabel = \"x\"").is_err());
        assert!(Bounds::parse_pair("1/2").is_err());
    }
}
