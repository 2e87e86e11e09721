//! Subcommands: argument definitions and thin shells over the core crate.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use trisect_core::auxiliary::{phi_aggregated, phi_single, trisect_pairs_auxiliary, AuxiliaryModel};
use trisect_core::decisions::{decide_alliance_set, describe_agent, trisect_issues_two_functions};
use trisect_core::model::{
    aggregate_over_agents, aggregate_over_issues, trisect_agents, trisect_issues_by_rating, Scope,
};
use trisect_core::relations::{
    alliance_set, maximal_consistent_alliance_sets, pair_degrees, trisect_pairs_two_functions, AllianceSet,
    DEFAULT_AGENT_CAP,
};
use trisect_core::strategies::{
    enumerate_family, strategy_agent_degrees, trisect_agents_by_strategy, DEFAULT_FAMILY_CAP,
};
use trisect_core::{
    Agent, CombinationChoice, Description, FamilyKind, Issue, PairScope, Part, Restrict, SituationTable,
};

use crate::config::{AnalysisConfig, Bounds};
use crate::error::{CliError, CliResult};
use crate::fixtures::Fixtures;
use crate::report::{Format, Report, Section};
use crate::reproduce::{reproduce, Target};

#[derive(Debug, Parser)]
#[command(name = "trisect", version, about = "Three-way conflict analysis over three-valued situation tables")]
pub struct Cli {
    /// TOML analysis configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Situation table (CSV or JSON).
    #[arg(long, global = true)]
    pub table: Option<PathBuf>,
    /// pawlak, yao or custom:<path to JSON matrix>.
    #[arg(long, global = true)]
    pub model: Option<String>,
    /// csv, md or json.
    #[arg(long, global = true)]
    pub format: Option<Format>,
    /// Write the report to <dir>/<command>.<ext> instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the table, model and configuration.
    Validate,
    /// Trisect agents by their rating on one issue or their average over the issues.
    TrisectAgents(TrisectAgents),
    /// Trisect issues by rating or by a combination of alliance and conflict degrees.
    TrisectIssues(TrisectIssues),
    /// Alliance, conflict and neutrality relations between agents.
    TrisectPairs(TrisectPairs),
    /// Alliance set of each agent.
    AllianceSets(PairArgs),
    /// Maximal consistent alliance sets.
    Mcas(McasArgs),
    /// Issue trisections and decisions of agent sets.
    Decisions(DecisionArgs),
    /// Enumerate a strategy family with per-agent degrees.
    Strategies(StrategiesArgs),
    /// Supporting, opposing and neutral agents of strategies.
    StrategyTrisect(StrategyTrisectArgs),
    /// Recompute the bundled worked examples and diff them against expected outputs.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
pub struct TrisectAgents {
    /// Trisect by the rating on this single issue.
    #[arg(long)]
    pub issue: Option<String>,
    /// Signed thresholds low,high for the average rating.
    #[arg(long, allow_hyphen_values = true)]
    pub thresholds: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IssueMethod {
    Rating,
    Combination,
}

#[derive(Debug, Args)]
pub struct TrisectIssues {
    #[arg(long, value_enum, default_value_t = IssueMethod::Rating)]
    pub method: IssueMethod,
    /// Trisect by this single agent's ratings.
    #[arg(long, conflicts_with = "agents")]
    pub agent: Option<String>,
    /// Comma-separated agent set; all agents when omitted.
    #[arg(long)]
    pub agents: Option<String>,
    /// Signed thresholds low,high (rating method).
    #[arg(long, allow_hyphen_values = true)]
    pub thresholds: Option<String>,
    #[command(flatten)]
    pub combination: CombinationArgs,
}

#[derive(Debug, Args)]
pub struct CombinationArgs {
    /// Combination of degree views, 1 to 4.
    #[arg(long)]
    pub combo: Option<u8>,
    /// Thresholds low,high for the positive view; rules allowed.
    #[arg(long)]
    pub positive: Option<String>,
    /// Thresholds low,high for the negative view; defaults to the positive ones.
    #[arg(long)]
    pub negative: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairMethod {
    Auxiliary,
    TwoFunction,
}

#[derive(Debug, Args)]
pub struct TrisectPairs {
    #[arg(long, value_enum, default_value_t = PairMethod::TwoFunction)]
    pub method: PairMethod,
    /// Restrict to a single issue.
    #[arg(long)]
    pub issue: Option<String>,
    /// Signed thresholds low,high (auxiliary method over several issues).
    #[arg(long, allow_hyphen_values = true)]
    pub thresholds: Option<String>,
    #[command(flatten)]
    pub pairs: PairArgs,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// issue-set or non-neutral.
    #[arg(long)]
    pub scope: Option<String>,
    /// Alliance thresholds low,high; rules allowed.
    #[arg(long)]
    pub alliance: Option<String>,
    /// Conflict thresholds low,high; rules allowed.
    #[arg(long)]
    pub conflict: Option<String>,
}

#[derive(Debug, Args)]
pub struct McasArgs {
    #[command(flatten)]
    pub pairs: PairArgs,
    /// Largest agent count accepted for clique enumeration.
    #[arg(long)]
    pub agent_cap: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DecisionArgs {
    /// Comma-separated agent set; the maximal consistent alliance sets when omitted.
    #[arg(long)]
    pub agents: Option<String>,
    /// Keep neutral issues as literals rated 0.
    #[arg(long)]
    pub keep_neutral: bool,
    #[command(flatten)]
    pub combination: CombinationArgs,
    #[command(flatten)]
    pub mcas: McasArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Full,
    NonNeutral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DegreeArg {
    Alliance,
    Conflict,
    None,
}

#[derive(Debug, Args)]
pub struct StrategiesArgs {
    #[arg(long, value_enum, default_value_t = KindArg::NonNeutral)]
    pub kind: KindArg,
    /// Which degree to tabulate per agent.
    #[arg(long, value_enum, default_value_t = DegreeArg::Alliance)]
    pub degrees: DegreeArg,
    /// Largest issue count accepted for enumeration.
    #[arg(long)]
    pub cap: Option<usize>,
}

#[derive(Debug, Args)]
pub struct StrategyTrisectArgs {
    /// Strategy as "i1:+1,i2:-1" or "⟨i1,+1⟩∧⟨i2,-1⟩".
    #[arg(long, conflicts_with_all = ["anchor", "candidates"])]
    pub strategy: Option<String>,
    /// Use the non-neutral description of this agent as the strategy.
    #[arg(long, conflicts_with = "candidates")]
    pub anchor: Option<String>,
    /// Use the descriptions of the N agents with the largest alliance sets.
    #[arg(long)]
    pub candidates: Option<usize>,
    /// Comma-separated tie-break order for candidate anchors.
    #[arg(long)]
    pub priority: Option<String>,
    /// Supporting thresholds low,high.
    #[arg(long)]
    pub supporting: Option<String>,
    /// Opposing thresholds low,high.
    #[arg(long)]
    pub opposing: Option<String>,
    #[command(flatten)]
    pub pairs: PairArgs,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Targets to run; all when omitted.
    pub targets: Vec<Target>,
    /// Read fixtures from this directory instead of the built-in copies.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::TrisectAgents(_) => "trisect-agents",
            Command::TrisectIssues(_) => "trisect-issues",
            Command::TrisectPairs(_) => "trisect-pairs",
            Command::AllianceSets(_) => "alliance-sets",
            Command::Mcas(_) => "mcas",
            Command::Decisions(_) => "decisions",
            Command::Strategies(_) => "strategies",
            Command::StrategyTrisect(_) => "strategy-trisect",
            Command::Reproduce(_) => "reproduce",
        }
    }
}

/// Result of running a command.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub format: Format,
    /// Set when reproduction checks failed.
    pub failures: usize,
}

/// Table, model and configuration shared by the analysis commands.
struct Session {
    cfg: AnalysisConfig,
    table: SituationTable,
    model: AuxiliaryModel,
    issues: Vec<Issue>,
}

fn bounds(s: &Option<String>) -> CliResult<Option<Bounds>> {
    s.as_deref().map(Bounds::parse_pair).transpose()
}

fn list(s: &str) -> Vec<String> {
    s.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
}

pub fn load_model(spec: &str) -> CliResult<AuxiliaryModel> {
    match spec {
        "pawlak" => Ok(AuxiliaryModel::pawlak()),
        "yao" => Ok(AuxiliaryModel::yao()),
        other => match other.strip_prefix("custom:") {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
                Ok(AuxiliaryModel::from_json(&text)?)
            }
            None => Err(CliError::Input(format!(
                "unknown model {other:?}; expected pawlak, yao or custom:<path>"
            ))),
        },
    }
}

pub fn load_table(path: &Path) -> CliResult<SituationTable> {
    let file = std::fs::File::open(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
    let format = match path.extension().and_then(|e| e.to_str()) {
        Some("json") => trisect_core::model::Format::Json,
        _ => trisect_core::model::Format::Csv,
    };
    Ok(SituationTable::load(file, format)?)
}

impl Session {
    fn open(cli: &Cli, cfg: AnalysisConfig) -> CliResult<Self> {
        let path = cli
            .table
            .clone()
            .or_else(|| cfg.table.clone())
            .ok_or_else(|| CliError::Input("no situation table; pass --table or set table in the config".into()))?;
        let table = load_table(&path)?;
        let model = load_model(cli.model.as_deref().or(cfg.model.as_deref()).unwrap_or("pawlak"))?;
        let issues = match &cfg.issues {
            Some(ids) => {
                let v = table.issues_of(ids)?;
                if v.is_empty() {
                    return Err(trisect_core::Error::EmptyIssueSet.into());
                }
                v
            }
            None => table.all_issues(),
        };
        Ok(Session {
            cfg,
            table,
            model,
            issues,
        })
    }

    fn agent_set(&self, s: &Option<String>) -> CliResult<Vec<Agent>> {
        match s {
            Some(s) => Ok(self.table.agents_of(&list(s))?),
            None => Ok(self.table.all_agents()),
        }
    }

    fn names_a(&self, v: &[Agent]) -> String {
        v.iter().map(|&a| self.table.agent_id(a)).collect::<Vec<_>>().join(" ")
    }

    fn names_i(&self, v: &[Issue]) -> String {
        v.iter().map(|&i| self.table.issue_id(i)).collect::<Vec<_>>().join(" ")
    }

    fn combo(&self, arg: Option<u8>) -> CliResult<CombinationChoice> {
        Ok(CombinationChoice::numbered(arg.or(self.cfg.combo).unwrap_or(1))?)
    }

    fn pair_rules(&self, a: &PairArgs) -> CliResult<(trisect_core::PairRules, PairScope)> {
        let rules = self.cfg.pair_rules(bounds(&a.alliance)?.as_ref(), bounds(&a.conflict)?.as_ref())?;
        Ok((rules, self.cfg.pair_scope(a.scope.as_deref())?))
    }

    fn alliance_sets(&self, a: &PairArgs) -> CliResult<Vec<AllianceSet>> {
        let (rules, scope) = self.pair_rules(a)?;
        self.table
            .agent_list()
            .map(|x| Ok(alliance_set(&self.model, &self.table, x, &self.issues, &rules, scope)?))
            .collect()
    }

    fn mcas(&self, a: &McasArgs) -> CliResult<Vec<Vec<Agent>>> {
        let (rules, scope) = self.pair_rules(&a.pairs)?;
        let cap = a.agent_cap.or(self.cfg.agent_cap).unwrap_or(DEFAULT_AGENT_CAP);
        Ok(maximal_consistent_alliance_sets(&self.model, &self.table, &self.issues, &rules, scope, cap)?
            .into_iter()
            .map(|m| m.members)
            .collect())
    }
}

fn part_name(p: Part) -> &'static str {
    match p {
        Part::Positive => "positive",
        Part::Negative => "negative",
        Part::Neutral => "neutral",
    }
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let cfg = match &cli.config {
        Some(p) => AnalysisConfig::load(p)?,
        None => AnalysisConfig::default(),
    };
    let format = match (cli.format, &cfg.format) {
        (Some(f), _) => f,
        (None, Some(s)) => s.parse().map_err(CliError::Input)?,
        (None, None) => Format::Csv,
    };
    let mut failures = 0;
    let report = match &cli.command {
        Command::Reproduce(a) => {
            let fixtures = match &a.fixtures {
                Some(d) => Fixtures::from_dir(d),
                None => Fixtures::embedded(),
            };
            let targets = if a.targets.is_empty() { Target::ALL.to_vec() } else { a.targets.clone() };
            let outcome = reproduce(&fixtures, &targets)?;
            failures = outcome.failures();
            outcome.report()
        }
        cmd => {
            cfg.validate()?;
            let s = Session::open(cli, cfg)?;
            match cmd {
                Command::Validate => validate(&s),
                Command::TrisectAgents(a) => trisect_agents_cmd(&s, a)?,
                Command::TrisectIssues(a) => trisect_issues_cmd(&s, a)?,
                Command::TrisectPairs(a) => trisect_pairs_cmd(&s, a)?,
                Command::AllianceSets(a) => alliance_sets_cmd(&s, a)?,
                Command::Mcas(a) => mcas_cmd(&s, a)?,
                Command::Decisions(a) => decisions_cmd(&s, a)?,
                Command::Strategies(a) => strategies_cmd(&s, a)?,
                Command::StrategyTrisect(a) => strategy_trisect_cmd(&s, a)?,
                Command::Reproduce(_) => unreachable!("handled above"),
            }
        }
    };
    Ok(Outcome {
        report,
        format,
        failures,
    })
}

fn validate(s: &Session) -> Report {
    let mut sec = Section::new("table", &["property", "value"]);
    sec.push(["agents", &s.table.n_agents().to_string()]);
    sec.push(["issues", &s.table.n_issues().to_string()]);
    sec.push(["selected issues", &s.names_i(&s.issues)]);
    sec.push(["model", s.model.name()]);
    sec.push(["status", "ok"]);
    Report::new("validate").with(sec)
}

fn trisect_agents_cmd(s: &Session, a: &TrisectAgents) -> CliResult<Report> {
    let t = &s.table;
    let agents = t.all_agents();
    let mut sec = Section::new("agents", &["agent", "rating", "part"]);
    let tri = match &a.issue {
        Some(i) => {
            let i = t.issue(i)?;
            let tri = trisect_agents(t, &agents, Scope::Single(i))?;
            for &x in &agents {
                let part = tri.part_of(&x).expect("every agent is classified");
                sec.push([t.agent_id(x), &t.rating(x, i).to_string(), part_name(part)]);
            }
            tri
        }
        None => {
            let th = s.cfg.signed("agents", bounds(&a.thresholds)?.as_ref())?;
            let tri = trisect_agents(t, &agents, Scope::Set(&s.issues, th))?;
            for &x in &agents {
                let part = tri.part_of(&x).expect("every agent is classified");
                let r = aggregate_over_issues(t, x, &s.issues)?;
                sec.push([t.agent_id(x), &r.to_string(), part_name(part)]);
            }
            tri
        }
    };
    Ok(Report::new("trisect-agents").with(sec).with(summary(&tri, |v| s.names_a(v))))
}

fn summary<T: Clone>(tri: &trisect_core::Trisection<T>, names: impl Fn(&[T]) -> String) -> Section {
    let mut sec = Section::new("trisection", &["part", "members"]);
    for p in [Part::Positive, Part::Negative, Part::Neutral] {
        sec.push([part_name(p).to_string(), names(tri.part(p))]);
    }
    sec
}

fn issue_rule_bounds(s: &Session, c: &CombinationArgs) -> CliResult<trisect_core::decisions::IssueRules> {
    s.cfg.issue_rules(bounds(&c.positive)?.as_ref(), bounds(&c.negative)?.as_ref())
}

fn trisect_issues_cmd(s: &Session, a: &TrisectIssues) -> CliResult<Report> {
    let t = &s.table;
    let agents = match &a.agent {
        Some(x) => vec![t.agent(x)?],
        None => s.agent_set(&a.agents)?,
    };
    let tri = match a.method {
        IssueMethod::Rating => {
            let mut sec = Section::new("issues", &["issue", "rating", "part"]);
            let tri = match &a.agent {
                Some(_) => {
                    let x = agents[0];
                    let tri = trisect_issues_by_rating(t, &s.issues, Scope::Single(x))?;
                    for &i in &s.issues {
                        let part = tri.part_of(&i).expect("every issue is classified");
                        sec.push([t.issue_id(i), &t.rating(x, i).to_string(), part_name(part)]);
                    }
                    tri
                }
                None => {
                    let th = s.cfg.signed("issues", bounds(&a.thresholds)?.as_ref())?;
                    let tri = trisect_issues_by_rating(t, &s.issues, Scope::Set(&agents, th))?;
                    for &i in &s.issues {
                        let part = tri.part_of(&i).expect("every issue is classified");
                        let r = aggregate_over_agents(t, &agents, i)?;
                        sec.push([t.issue_id(i), &r.to_string(), part_name(part)]);
                    }
                    tri
                }
            };
            return Ok(Report::new("trisect-issues").with(sec).with(summary(&tri, |v| s.names_i(v))));
        }
        IssueMethod::Combination => {
            let combo = s.combo(a.combination.combo)?;
            let (tp, tn) = issue_rule_bounds(s, &a.combination)?.resolve(agents.len())?;
            trisect_issues_two_functions(&s.model, t, &agents, &s.issues, combo, tp, tn)?
        }
    };
    let mut sec = Section::new("issues", &["issue", "part"]);
    for &i in &s.issues {
        sec.push([t.issue_id(i), part_name(tri.part_of(&i).expect("every issue is classified"))]);
    }
    Ok(Report::new("trisect-issues").with(sec).with(summary(&tri, |v| s.names_i(v))))
}

fn trisect_pairs_cmd(s: &Session, a: &TrisectPairs) -> CliResult<Report> {
    let t = &s.table;
    let single = a.issue.as_deref().map(|i| t.issue(i)).transpose()?;
    let pair_name = |&(x, y): &(Agent, Agent)| format!("({},{})", t.agent_id(x), t.agent_id(y));
    let (sec, tri) = match a.method {
        PairMethod::Auxiliary => {
            let mut sec = Section::new("pairs", &["first", "second", "value", "part"]);
            let tri = match single {
                Some(i) => trisect_pairs_auxiliary(&s.model, t, Scope::Single(i))?,
                None => {
                    let th = s.cfg.signed("auxiliary-pairs", bounds(&a.thresholds)?.as_ref())?;
                    trisect_pairs_auxiliary(&s.model, t, Scope::Set(&s.issues, th))?
                }
            };
            for x in t.agent_list() {
                for y in t.agent_list() {
                    let v = match single {
                        Some(i) => phi_single(&s.model, t, x, y, i).to_string(),
                        None => phi_aggregated(&s.model, t, x, y, &s.issues).to_string(),
                    };
                    let part = tri.part_of(&(x, y)).expect("every pair is classified");
                    sec.push([t.agent_id(x), t.agent_id(y), &v, part_name(part)]);
                }
            }
            (sec, tri)
        }
        PairMethod::TwoFunction => {
            let (rules, scope) = s.pair_rules(&a.pairs)?;
            let issues = match single {
                Some(i) => vec![i],
                None => s.issues.clone(),
            };
            let tri = trisect_pairs_two_functions(&s.model, t, &issues, &rules, scope)?;
            let mut sec = Section::new("pairs", &["first", "second", "alliance", "conflict", "part"]);
            for x in t.agent_list() {
                for y in t.agent_list() {
                    let d = pair_degrees(&s.model, t, x, y, &issues, scope);
                    let part = tri.part_of(&(x, y)).expect("every pair is classified");
                    sec.push([
                        t.agent_id(x),
                        t.agent_id(y),
                        &d.alliance.to_string(),
                        &d.conflict.to_string(),
                        part_name(part),
                    ]);
                }
            }
            (sec, tri)
        }
    };
    let rel = summary(&tri, |v| v.iter().map(pair_name).collect::<Vec<_>>().join(" "));
    Ok(Report::new("trisect-pairs").with(sec).with(rel))
}

fn alliance_sets_cmd(s: &Session, a: &PairArgs) -> CliResult<Report> {
    let mut sec = Section::new("alliance sets", &["anchor", "size", "members"]);
    for set in s.alliance_sets(a)? {
        sec.push([
            s.table.agent_id(set.anchor).to_string(),
            set.members.len().to_string(),
            s.names_a(&set.members),
        ]);
    }
    Ok(Report::new("alliance-sets").with(sec))
}

fn mcas_cmd(s: &Session, a: &McasArgs) -> CliResult<Report> {
    let mut sec = Section::new("maximal consistent alliance sets", &["set", "size", "members"]);
    for (k, m) in s.mcas(a)?.iter().enumerate() {
        sec.push([format!("X{}", k + 1), m.len().to_string(), s.names_a(m)]);
    }
    Ok(Report::new("mcas").with(sec))
}

fn decisions_cmd(s: &Session, a: &DecisionArgs) -> CliResult<Report> {
    let t = &s.table;
    let sets: Vec<(String, Vec<Agent>)> = match &a.agents {
        Some(_) => vec![("X".to_string(), s.agent_set(&a.agents)?)],
        None => s
            .mcas(&a.mcas)?
            .into_iter()
            .enumerate()
            .map(|(k, m)| (format!("X{}", k + 1), m))
            .collect(),
    };
    let combo = s.combo(a.combination.combo)?;
    let rules = issue_rule_bounds(s, &a.combination)?;
    let restrict = if a.keep_neutral { Restrict::All } else { Restrict::NonNeutral };
    let mut sec = Section::new(
        "decisions",
        &["set", "members", "positive", "negative", "neutral", "decision"],
    );
    for (name, members) in sets {
        let (tp, tn) = rules.resolve(members.len())?;
        let tri = trisect_issues_two_functions(&s.model, t, &members, &s.issues, combo, tp, tn)?;
        let d = decide_alliance_set(&s.model, t, &members, &s.issues, combo, tp, tn, restrict)?;
        sec.push([
            name,
            s.names_a(&members),
            s.names_i(&tri.positive),
            s.names_i(&tri.negative),
            s.names_i(&tri.neutral),
            d.render(t),
        ]);
    }
    Ok(Report::new("decisions").with(sec))
}

fn strategies_cmd(s: &Session, a: &StrategiesArgs) -> CliResult<Report> {
    let t = &s.table;
    let kind = match a.kind {
        KindArg::Full => FamilyKind::Full,
        KindArg::NonNeutral => FamilyKind::NonNeutral,
    };
    let cap = a.cap.or(s.cfg.family_cap).unwrap_or(DEFAULT_FAMILY_CAP);
    let family = enumerate_family(&s.issues, kind, cap)?;
    let mut columns = vec!["strategy".to_string()];
    if a.degrees != DegreeArg::None {
        columns.extend(t.agent_ids().iter().cloned());
    }
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut sec = Section::new("strategies", &cols);
    for st in family {
        let mut row = vec![st.render(t)];
        if a.degrees != DegreeArg::None {
            for x in t.agent_list() {
                row.push(if st.is_empty() {
                    String::new()
                } else {
                    let d = strategy_agent_degrees(&s.model, t, &st, x)?;
                    match a.degrees {
                        DegreeArg::Alliance => d.alliance.to_string(),
                        _ => d.conflict.to_string(),
                    }
                });
            }
        }
        sec.push(row);
    }
    Ok(Report::new("strategies").with(sec))
}

/// Anchors ordered by descending alliance-set size, then by position in
/// `priority`, then by table order.
pub fn rank_candidates(sets: &[AllianceSet], priority: &[Agent]) -> Vec<Agent> {
    let rank = |x: Agent| priority.iter().position(|&p| p == x).unwrap_or(usize::MAX);
    let mut v: Vec<&AllianceSet> = sets.iter().collect();
    v.sort_by_key(|s| (std::cmp::Reverse(s.members.len()), rank(s.anchor), s.anchor));
    v.into_iter().map(|s| s.anchor).collect()
}

fn strategy_trisect_cmd(s: &Session, a: &StrategyTrisectArgs) -> CliResult<Report> {
    let t = &s.table;
    let describe = |x: Agent| describe_agent(t, x, &s.issues, Restrict::NonNeutral).description;
    let strategies: Vec<(String, Description)> = match (&a.strategy, &a.anchor, a.candidates) {
        (Some(st), _, _) => vec![(String::new(), Description::parse(st, t)?)],
        (None, Some(x), _) => {
            let x = t.agent(x)?;
            vec![(t.agent_id(x).to_string(), describe(x))]
        }
        (None, None, Some(n)) => {
            let priority = match &a.priority {
                Some(p) => t.agents_of(&list(p))?,
                None => t.agents_of(&s.cfg.priority)?,
            };
            let sets = s.alliance_sets(&a.pairs)?;
            rank_candidates(&sets, &priority)
                .into_iter()
                .take(n)
                .map(|x| (t.agent_id(x).to_string(), describe(x)))
                .collect()
        }
        (None, None, None) => {
            return Err(CliError::Input("pass one of --strategy, --anchor or --candidates".into()));
        }
    };
    let (ts, to) = s
        .cfg
        .strategy_thresholds(bounds(&a.supporting)?.as_ref(), bounds(&a.opposing)?.as_ref())?;
    let agents = t.all_agents();
    let mut sum = Section::new("strategies", &["anchor", "strategy", "supporting", "opposing", "neutral"]);
    let mut det = Section::new("degrees", &["strategy", "agent", "alliance", "conflict", "part"]);
    for (anchor, st) in strategies {
        if st.is_empty() {
            return Err(trisect_core::Error::EmptyStrategy.into());
        }
        let tri = trisect_agents_by_strategy(&s.model, t, &st, &agents, ts, to)?;
        let label = st.render(t);
        sum.push([
            anchor,
            label.clone(),
            s.names_a(&tri.positive),
            s.names_a(&tri.negative),
            s.names_a(&tri.neutral),
        ]);
        for &x in &agents {
            let d = strategy_agent_degrees(&s.model, t, &st, x)?;
            let part = match tri.part_of(&x).expect("every agent is classified") {
                Part::Positive => "supporting",
                Part::Negative => "opposing",
                Part::Neutral => "neutral",
            };
            det.push([
                label.clone(),
                t.agent_id(x).to_string(),
                d.alliance.to_string(),
                d.conflict.to_string(),
                part.to_string(),
            ]);
        }
    }
    Ok(Report::new("strategy-trisect").with(sum).with(det))
}

/// Writes the report to stdout or to `<dir>/<command>.<ext>`.
pub fn emit(cli: &Cli, outcome: &Outcome) -> CliResult<()> {
    let body = outcome.report.render(outcome.format);
    match &cli.out {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir.display().to_string(), e))?;
            let path = dir.join(format!("{}.{}", cli.command.name(), outcome.format.extension()));
            std::fs::write(&path, body).map_err(|e| CliError::io(path.display().to_string(), e))
        }
    }
}
