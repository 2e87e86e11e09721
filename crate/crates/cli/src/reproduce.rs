//! Recomputes the bundled worked examples and diffs them cell by cell
//! against the expected-output fixtures.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde_json::Value;
use trisect_core::auxiliary::{phi_aggregated, phi_single, trisect_pairs_auxiliary, AuxiliaryModel};
use trisect_core::bifunctions::{alliance_conflict_aggregate, alliance_conflict_non_neutral, alliance_conflict_single};
use trisect_core::decisions::{decide_alliance_set, describe_agent, trisect_issues_two_functions, IssueRules};
use trisect_core::model::{
    aggregate_over_agents, aggregate_over_issues, non_neutral_count, parse_rational, RulePair, Scope, ThresholdRule,
};
use trisect_core::relations::{
    alliance_set, maximal_consistent_alliance_sets, PairThresholdSource, DEFAULT_AGENT_CAP,
};
use trisect_core::strategies::{enumerate_family, strategy_agent_degrees, trisect_agents_by_strategy, DEFAULT_FAMILY_CAP};
use trisect_core::{
    AggregationScope, Agent, CombinationChoice, Description, FamilyKind, Issue, PairRules, PairScope, PairThresholds,
    Rating, Rational, Restrict, SituationTable, ThresholdPair, Trisection,
};

use crate::error::{CliError, CliResult};
use crate::fixtures::{Fixtures, FOURTEEN_BY_ELEVEN, SIX_BY_FIVE, TWELVE_BY_FOUR};
use crate::report::{Report, Section};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    /// Average ratings and rating trisections of the six-agent table.
    Ratings,
    /// Auxiliary values of the six-agent table and the single-issue grids.
    Cells,
    /// Alliance, conflict and non-neutral degrees of the twelve-agent table.
    Degrees,
    /// Alliance sets, maximal sets and decisions of the twelve-agent table.
    Alliances,
    /// Strategy family, strategy degrees and strategy trisections.
    Strategies,
    /// Everything for the fourteen-agent table.
    CaseStudy,
}

impl Target {
    pub const ALL: [Target; 6] = [
        Target::Ratings,
        Target::Cells,
        Target::Degrees,
        Target::Alliances,
        Target::Strategies,
        Target::CaseStudy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Ratings => "ratings",
            Target::Cells => "cells",
            Target::Degrees => "degrees",
            Target::Alliances => "alliances",
            Target::Strategies => "strategies",
            Target::CaseStudy => "case-study",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown target {s:?}; expected one of ratings, cells, degrees, alliances, strategies, case-study"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// Every mismatch is a self-inconsistent printed value.
    Erratum,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Erratum => "pass-with-erratum",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diff {
    pub cell: String,
    pub expected: String,
    pub actual: String,
    pub erratum: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub target: Target,
    pub name: String,
    pub compared: usize,
    pub diffs: Vec<Diff>,
}

impl Check {
    pub fn status(&self) -> Status {
        if self.diffs.iter().any(|d| d.erratum.is_none()) {
            Status::Fail
        } else if self.diffs.is_empty() {
            Status::Pass
        } else {
            Status::Erratum
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub checks: Vec<Check>,
}

impl Outcome {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status() == Status::Fail).count()
    }

    pub fn target_ok(&self, target: Target) -> bool {
        self.checks
            .iter()
            .filter(|c| c.target == target)
            .all(|c| c.status() != Status::Fail)
    }

    pub fn report(&self) -> Report {
        let mut checks = Section::new("checks", &["target", "check", "status", "compared", "mismatches"]);
        let mut diffs = Section::new("diffs", &["target", "check", "cell", "expected", "actual", "note"]);
        for c in &self.checks {
            checks.push([
                c.target.to_string(),
                c.name.clone(),
                c.status().to_string(),
                c.compared.to_string(),
                c.diffs.len().to_string(),
            ]);
            for d in &c.diffs {
                diffs.push([
                    c.target.to_string(),
                    c.name.clone(),
                    d.cell.clone(),
                    d.expected.clone(),
                    d.actual.clone(),
                    d.erratum.clone().unwrap_or_default(),
                ]);
            }
        }
        Report::new("reproduce").with(checks).with(diffs)
    }
}

/// Accumulates comparisons for one check.
struct Cmp {
    check: Check,
}

impl Cmp {
    fn new(target: Target, name: &str) -> Self {
        Cmp {
            check: Check {
                target,
                name: name.to_string(),
                compared: 0,
                diffs: Vec::new(),
            },
        }
    }

    fn eq<E: ToString, A: ToString>(&mut self, cell: impl ToString, expected: E, actual: A) {
        let (e, a) = (expected.to_string(), actual.to_string());
        self.check.compared += 1;
        if e != a {
            self.check.diffs.push(Diff {
                cell: cell.to_string(),
                expected: e,
                actual: a,
                erratum: None,
            });
        }
    }

    fn rational(&mut self, cell: impl ToString, expected: &str, actual: Rational) -> CliResult<()> {
        let e = parse_rational(expected)?;
        self.eq(cell, e, actual);
        Ok(())
    }

    fn parts<T>(&mut self, cell: &str, expected: &Value, actual: &Trisection<T>, name: impl Fn(&T) -> String) -> CliResult<()> {
        for (part, got) in [("positive", &actual.positive), ("negative", &actual.negative), ("neutral", &actual.neutral)] {
            let want = field(expected, part)?;
            let want: Vec<String> = match want {
                Value::Array(items) => items.iter().map(element_name).collect::<CliResult<_>>()?,
                _ => return Err(shape(part)),
            };
            self.eq(
                format!("{cell}.{part}"),
                want.join(" "),
                got.iter().map(&name).collect::<Vec<_>>().join(" "),
            );
        }
        Ok(())
    }

    fn done(self) -> Check {
        self.check
    }
}

fn shape(what: &str) -> CliError {
    CliError::Input(format!("fixture field {what:?} is missing or has the wrong shape"))
}

fn field<'a>(v: &'a Value, key: &str) -> CliResult<&'a Value> {
    v.get(key).ok_or_else(|| shape(key))
}

fn text<'a>(v: &'a Value, key: &str) -> CliResult<&'a str> {
    field(v, key)?.as_str().ok_or_else(|| shape(key))
}

fn strings(v: &Value) -> CliResult<Vec<String>> {
    v.as_array()
        .ok_or_else(|| shape("list"))?
        .iter()
        .map(|s| s.as_str().map(String::from).ok_or_else(|| shape("string")))
        .collect()
}

fn items<'a>(v: &'a Value, key: &str) -> CliResult<&'a Vec<Value>> {
    field(v, key)?.as_array().ok_or_else(|| shape(key))
}

fn object<'a>(v: &'a Value, key: &str) -> CliResult<&'a serde_json::Map<String, Value>> {
    field(v, key)?.as_object().ok_or_else(|| shape(key))
}

/// A name, or a pair of names written `(x,y)`.
fn element_name(v: &Value) -> CliResult<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Array(p) if p.len() == 2 => {
            let s = strings(v)?;
            Ok(format!("({},{})", s[0], s[1]))
        }
        _ => Err(shape("element")),
    }
}

fn agent_names(t: &SituationTable, v: &[Agent]) -> String {
    v.iter().map(|&a| t.agent_id(a)).collect::<Vec<_>>().join(" ")
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn signed(l: Rational, h: Rational) -> ThresholdPair {
    ThresholdPair::signed(l, h).expect("constant thresholds are valid")
}

fn unit(l: Rational, h: Rational) -> CliResult<ThresholdPair> {
    Ok(ThresholdPair::unit(l, h)?)
}

fn model_named(name: &str) -> CliResult<AuxiliaryModel> {
    match name {
        "pawlak" => Ok(AuxiliaryModel::pawlak()),
        "yao" => Ok(AuxiliaryModel::yao()),
        other => Err(CliError::Input(format!("fixture names unknown model {other:?}"))),
    }
}

pub fn reproduce(fixtures: &Fixtures, targets: &[Target]) -> CliResult<Outcome> {
    let targets: BTreeSet<Target> = targets.iter().copied().collect();
    let mut checks = Vec::new();
    for t in targets {
        checks.extend(match t {
            Target::Ratings => ratings(fixtures)?,
            Target::Cells => cells(fixtures)?,
            Target::Degrees => degrees(fixtures)?,
            Target::Alliances => alliances(fixtures)?,
            Target::Strategies => strategies(fixtures)?,
            Target::CaseStudy => case_study(fixtures)?,
        });
    }
    Ok(Outcome { checks })
}

fn ratings(f: &Fixtures) -> CliResult<Vec<Check>> {
    const T: Target = Target::Ratings;
    let t = f.table(SIX_BY_FIVE)?;
    let e = f.json("expected/ratings.json")?;
    let (agents, issues) = (t.all_agents(), t.all_issues());
    let mut out = Vec::new();

    let mut c = Cmp::new(T, "agent ratings");
    for (x, v) in object(&e, "agent_ratings")? {
        let got = aggregate_over_issues(&t, t.agent(x)?, &issues)?;
        c.rational(x, v.as_str().ok_or_else(|| shape(x))?, got)?;
    }
    out.push(c.done());

    let mut c = Cmp::new(T, "agent trisection");
    let tri = trisect_agents_scope(&t, &agents, Scope::Set(&issues, signed(q(-3, 5), q(3, 5))))?;
    c.parts("agents", field(&e, "agent_trisection")?, &tri, |&a| t.agent_id(a).to_string())?;
    out.push(c.done());

    let mut c = Cmp::new(T, "issue ratings");
    for (i, v) in object(&e, "issue_ratings")? {
        let got = aggregate_over_agents(&t, &agents, t.issue(i)?)?;
        c.rational(i, v.as_str().ok_or_else(|| shape(i))?, got)?;
    }
    out.push(c.done());

    let mut c = Cmp::new(T, "issue trisection");
    let tri = trisect_core::model::trisect_issues_by_rating(&t, &issues, Scope::Set(&agents, signed(q(-1, 3), q(1, 3))))?;
    c.parts("issues", field(&e, "issue_trisection")?, &tri, |&i| t.issue_id(i).to_string())?;
    out.push(c.done());

    let pairs = field(&e, "pairs")?;
    for name in ["pawlak", "yao"] {
        let mut c = Cmp::new(T, &format!("{name} pair trisection"));
        let m = model_named(name)?;
        let tri = trisect_pairs_auxiliary(&m, &t, Scope::Set(&issues, signed(q(-1, 2), q(1, 2))))?;
        c.parts(name, field(pairs, name)?, &tri, |&(x, y)| format!("({},{})", t.agent_id(x), t.agent_id(y)))?;
        out.push(c.done());
    }

    let mut c = Cmp::new(T, "auxiliary spot values");
    for spot in items(&e, "auxiliary_spots")? {
        let m = model_named(text(spot, "model")?)?;
        let (x, y) = (t.agent(text(spot, "first")?)?, t.agent(text(spot, "second")?)?);
        let js = t.issues_of(&strings(field(spot, "issues")?)?)?;
        let per = items(spot, "per_issue")?;
        let key = format!("{}({},{})", m.name(), t.agent_id(x), t.agent_id(y));
        for (&i, v) in js.iter().zip(per) {
            c.eq(format!("{key}.{}", t.issue_id(i)), v, phi_single(&m, &t, x, y, i).value());
        }
        c.rational(format!("{key}.aggregate"), text(spot, "aggregate")?, phi_aggregated(&m, &t, x, y, &js))?;
    }
    out.push(c.done());
    Ok(out)
}

fn trisect_agents_scope(t: &SituationTable, agents: &[Agent], scope: Scope<'_, Issue>) -> CliResult<Trisection<Agent>> {
    Ok(trisect_core::model::trisect_agents(t, agents, scope)?)
}

type PairRow = (String, String, Vec<String>);

/// Rows `first,second,<value columns>` keyed by the agent pair.
fn pair_rows(f: &Fixtures, name: &str) -> CliResult<(Vec<String>, Vec<PairRow>)> {
    let (header, rows) = f.csv(name)?;
    let rows = rows
        .into_iter()
        .map(|mut r| {
            if r.len() != header.len() || r.len() < 3 {
                return Err(shape(name));
            }
            let rest = r.split_off(2);
            Ok((r[0].clone(), r[1].clone(), rest))
        })
        .collect::<CliResult<_>>()?;
    Ok((header[2..].to_vec(), rows))
}

fn cells(f: &Fixtures) -> CliResult<Vec<Check>> {
    const T: Target = Target::Cells;
    let t = f.table(SIX_BY_FIVE)?;
    let issues = t.all_issues();
    let mut out = Vec::new();

    let mut c = Cmp::new(T, "aggregated auxiliary values");
    let (cols, rows) = pair_rows(f, "expected/aggregated_auxiliary.csv")?;
    for (x, y, vals) in rows {
        let (a, b) = (t.agent(&x)?, t.agent(&y)?);
        for (model, v) in cols.iter().zip(&vals) {
            let m = model_named(model)?;
            c.rational(format!("{model}({x},{y})"), v, phi_aggregated(&m, &t, a, b, &issues))?;
        }
    }
    out.push(c.done());

    let mut c = Cmp::new(T, "single-issue degree grids");
    let e = f.json("expected/single_issue.json")?;
    for name in ["pawlak", "yao"] {
        let m = model_named(name)?;
        let grids = field(&e, name)?;
        for (kind, grid) in [("alliance", field(grids, "alliance")?), ("conflict", field(grids, "conflict")?)] {
            for (ri, &a) in Rating::ALL.iter().enumerate() {
                for (ci, &b) in Rating::ALL.iter().enumerate() {
                    let want = grid.get(ri).and_then(|r| r.get(ci)).ok_or_else(|| shape(kind))?;
                    let pair = SituationTable::from_values(&["x", "y"], &["i"], &[&[a.value()], &[b.value()]])?;
                    let d = alliance_conflict_single(&m, &pair, Agent(0), Agent(1), Issue(0));
                    let got = if kind == "alliance" { d.alliance } else { d.conflict };
                    c.eq(format!("{name}.{kind}({a},{b})"), want, got);
                }
            }
        }
    }
    out.push(c.done());
    Ok(out)
}

fn degree_table(
    c: &mut Cmp,
    f: &Fixtures,
    name: &str,
    t: &SituationTable,
    compute: impl Fn(Agent, Agent) -> (Rational, Rational),
) -> CliResult<()> {
    let (cols, rows) = pair_rows(f, name)?;
    if cols != ["alliance", "conflict"] {
        return Err(shape(name));
    }
    for (x, y, vals) in rows {
        let (a, cf) = compute(t.agent(&x)?, t.agent(&y)?);
        c.rational(format!("alliance({x},{y})"), &vals[0], a)?;
        c.rational(format!("conflict({x},{y})"), &vals[1], cf)?;
    }
    Ok(())
}

fn degrees(f: &Fixtures) -> CliResult<Vec<Check>> {
    const T: Target = Target::Degrees;
    let t = f.table(TWELVE_BY_FOUR)?;
    let j = t.all_issues();
    let (p, y) = (AuxiliaryModel::pawlak(), AuxiliaryModel::yao());
    let agg = |m: &AuxiliaryModel, a: Agent, b: Agent| {
        let d = alliance_conflict_aggregate(m, &t, &AggregationScope::pair(&j, a, b));
        (d.alliance, d.conflict)
    };
    let nn = |m: &AuxiliaryModel, a: Agent, b: Agent| {
        let d = alliance_conflict_non_neutral(m, &t, a, b, &j);
        (d.alliance, d.conflict)
    };
    let mut out = Vec::new();

    let mut c = Cmp::new(T, "pawlak degrees");
    degree_table(&mut c, f, "expected/degrees_pawlak.csv", &t, |a, b| agg(&p, a, b))?;
    out.push(c.done());
    let mut c = Cmp::new(T, "yao degrees");
    degree_table(&mut c, f, "expected/degrees_yao.csv", &t, |a, b| agg(&y, a, b))?;
    out.push(c.done());
    for (name, m) in [("pawlak", &p), ("yao", &y)] {
        let mut c = Cmp::new(T, &format!("non-neutral degrees ({name})"));
        degree_table(&mut c, f, "expected/degrees_non_neutral.csv", &t, |a, b| nn(m, a, b))?;
        out.push(c.done());
    }

    let (x2, x4, x10) = (t.agent("x2")?, t.agent("x4")?, t.agent("x10")?);
    let mut c = Cmp::new(T, "spot values");
    c.eq("pawlak conflict(x4,x10)", q(1, 4), agg(&p, x4, x10).1);
    c.eq("yao alliance(x4,x10)", q(1, 4), agg(&y, x4, x10).0);
    c.eq("non-neutral conflict(x4,x10)", q(1, 2), nn(&p, x4, x10).1);
    out.push(c.done());

    let mut c = Cmp::new(T, "asymmetry witness");
    c.eq("non-neutral alliance(x2,x4)", q(1, 2), nn(&p, x2, x4).0);
    c.eq("non-neutral alliance(x4,x2)", q(1, 1), nn(&p, x4, x2).0);
    out.push(c.done());
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn set_checks(
    out: &mut Vec<Check>,
    target: Target,
    t: &SituationTable,
    e: &Value,
    pairs: &dyn PairThresholdSource,
    issue_rules: IssueRules,
    anchors_key: &str,
) -> CliResult<()> {
    let m = AuxiliaryModel::pawlak();
    let j = t.all_issues();
    let combo = CombinationChoice::numbered(1)?;

    let mut c = Cmp::new(target, "alliance sets");
    for (x, want) in object(e, "alliance_sets")? {
        let s = alliance_set(&m, t, t.agent(x)?, &j, pairs, PairScope::NonNeutral)?;
        c.eq(format!("AS({x})"), strings(want)?.join(" "), agent_names(t, &s.members));
    }
    out.push(c.done());

    let mut c = Cmp::new(target, "anchor descriptions");
    for (x, want) in object(e, anchors_key)? {
        let d = describe_agent(t, t.agent(x)?, &j, Restrict::NonNeutral).description;
        c.eq(format!("Des({x})"), want.as_str().ok_or_else(|| shape(x))?, d.render(t));
    }
    out.push(c.done());

    let got = maximal_consistent_alliance_sets(&m, t, &j, pairs, PairScope::NonNeutral, DEFAULT_AGENT_CAP)?;
    let want: Vec<Vec<String>> = items(e, "maximal_sets")?.iter().map(strings).collect::<CliResult<_>>()?;
    let mut c = Cmp::new(target, "maximal consistent alliance sets");
    c.eq("count", want.len(), got.len());
    for (k, w) in want.iter().enumerate() {
        let g = got.get(k).map(|s| agent_names(t, &s.members)).unwrap_or_default();
        c.eq(format!("X{}", k + 1), w.join(" "), g);
    }
    out.push(c.done());

    let tris = items(e, "issue_trisections")?;
    let decisions = items(e, "decisions")?;
    let mut ct = Cmp::new(target, "issue trisections");
    let mut cd = Cmp::new(target, "decisions");
    for (k, w) in want.iter().enumerate() {
        let members = t.agents_of(w)?;
        let (tp, tn) = issue_rules.resolve(members.len())?;
        let tri = trisect_issues_two_functions(&m, t, &members, &j, combo, tp, tn)?;
        ct.parts(&format!("X{}", k + 1), tris.get(k).ok_or_else(|| shape("issue_trisections"))?, &tri, |&i| {
            t.issue_id(i).to_string()
        })?;
        let d = decide_alliance_set(&m, t, &members, &j, combo, tp, tn, Restrict::NonNeutral)?;
        let want_d = decisions.get(k).and_then(Value::as_str).ok_or_else(|| shape("decisions"))?;
        cd.eq(format!("Des(X{})", k + 1), want_d, d.render(t));
    }
    out.push(ct.done());
    out.push(cd.done());
    Ok(())
}

fn alliances(f: &Fixtures) -> CliResult<Vec<Check>> {
    let t = f.table(TWELVE_BY_FOUR)?;
    let e = f.json("expected/alliances.json")?;
    let pairs = PairThresholds::quoted(q(1, 2), q(1, 3))?;
    let rules = IssueRules::same(RulePair::new(ThresholdRule::InverseMemberCount, q(1, 2)));
    let mut out = Vec::new();
    set_checks(&mut out, Target::Alliances, &t, &e, &pairs, rules, "anchor_description")?;
    Ok(out)
}

fn strategy_trisection(c: &mut Cmp, t: &SituationTable, spec: &Value, strategy: &Description) -> CliResult<()> {
    let bounds = |key: &str| -> CliResult<ThresholdPair> {
        let v = strings(field(spec, key)?)?;
        if v.len() != 2 {
            return Err(shape(key));
        }
        unit(parse_rational(&v[0])?, parse_rational(&v[1])?)
    };
    let tri = trisect_agents_by_strategy(
        &AuxiliaryModel::pawlak(),
        t,
        strategy,
        &t.all_agents(),
        bounds("supporting")?,
        bounds("opposing")?,
    )?;
    c.parts(&strategy.render(t), field(spec, "result")?, &tri, |&a| t.agent_id(a).to_string())
}

fn strategies(f: &Fixtures) -> CliResult<Vec<Check>> {
    const T: Target = Target::Strategies;
    let t = f.table(TWELVE_BY_FOUR)?;
    let e = f.json("expected/strategies.json")?;
    let m = AuxiliaryModel::pawlak();
    let mut out = Vec::new();

    let (header, rows) = f.csv("expected/strategy_alliance.csv")?;
    let family: Vec<Description> =
        enumerate_family(&t.all_issues(), FamilyKind::NonNeutral, DEFAULT_FAMILY_CAP)?.collect();
    let mut listed = BTreeSet::from([Description::empty()]);
    let mut cv = Cmp::new(T, "strategy alliance values");
    for row in &rows {
        let s = Description::parse(&row[0], &t)?;
        for (x, v) in header.iter().zip(row).skip(1) {
            let d = strategy_agent_degrees(&m, &t, &s, t.agent(x)?)?;
            cv.rational(format!("{}:{x}", s.render(&t)), v, d.alliance)?;
        }
        listed.insert(s);
    }
    let mut c = Cmp::new(T, "non-neutral family");
    c.eq("size", field(&e, "family_size")?, family.len());
    c.eq("3^4", 81, family.len());
    let enumerated: BTreeSet<Description> = family.into_iter().collect();
    for s in listed.symmetric_difference(&enumerated) {
        let (want, got) = if listed.contains(s) { ("listed", "absent") } else { ("absent", "enumerated") };
        c.eq(s.render(&t), want, got);
    }
    c.eq("distinct", listed.len(), enumerated.len());
    out.push(c.done());
    out.push(cv.done());

    let mut c = Cmp::new(T, "spot values");
    for spot in items(&e, "spot_values")? {
        let s = Description::parse(text(spot, "strategy")?, &t)?;
        let x = text(spot, "agent")?;
        let d = strategy_agent_degrees(&m, &t, &s, t.agent(x)?)?;
        c.rational(format!("alliance({},{x})", s.render(&t)), text(spot, "alliance")?, d.alliance)?;
    }
    out.push(c.done());

    let mut c = Cmp::new(T, "strategy trisections");
    for spec in items(&e, "trisections")? {
        let s = Description::parse(text(spec, "strategy")?, &t)?;
        strategy_trisection(&mut c, &t, spec, &s)?;
    }
    out.push(c.done());
    Ok(out)
}

fn case_study(f: &Fixtures) -> CliResult<Vec<Check>> {
    const T: Target = Target::CaseStudy;
    let t = f.table(FOURTEEN_BY_ELEVEN)?;
    let e = f.json("expected/case_study.json")?;
    let j = t.all_issues();
    let m = AuxiliaryModel::pawlak();
    let mut out = Vec::new();

    let mut c = Cmp::new(T, "non-neutral degrees");
    let computed = |a: Agent, b: Agent| {
        let d = alliance_conflict_non_neutral(&m, &t, a, b, &j);
        (d.alliance, d.conflict)
    };
    degree_table(&mut c, f, "expected/degrees_fourteen.csv", &t, computed)?;
    let printed = printed_degrees(f, "expected/degrees_fourteen.csv", &t)?;
    for d in &mut c.check.diffs {
        d.erratum = classify_erratum(&t, &j, &d.cell, &printed, &computed);
    }
    out.push(c.done());

    // Alliance threshold 1/4 for every anchor; conflict threshold 1/|J_x^{+-}| per anchor.
    let pairs = PairRules::quoted(ThresholdRule::Constant(q(1, 4)), ThresholdRule::InverseNonNeutralCount);
    let rules = IssueRules::same(RulePair::new(q(0, 1), ThresholdRule::InverseMemberCount));
    set_checks(&mut out, T, &t, &e, &pairs, rules, "anchor_descriptions")?;

    let mut c = Cmp::new(T, "candidate strategies");
    for spec in items(&e, "strategies")? {
        let anchor = text(spec, "anchor")?;
        let s = Description::parse(text(spec, "strategy")?, &t)?;
        let des = describe_agent(&t, t.agent(anchor)?, &j, Restrict::NonNeutral).description;
        c.eq(format!("strategy of {anchor}"), s.render(&t), des.render(&t));
        strategy_trisection(&mut c, &t, spec, &s)?;
    }
    out.push(c.done());
    Ok(out)
}

type DegreeMap = BTreeMap<(Agent, Agent), (Rational, Rational)>;

fn printed_degrees(f: &Fixtures, name: &str, t: &SituationTable) -> CliResult<DegreeMap> {
    let (_, rows) = pair_rows(f, name)?;
    rows.into_iter()
        .map(|(x, y, v)| Ok(((t.agent(&x)?, t.agent(&y)?), (parse_rational(&v[0])?, parse_rational(&v[1])?))))
        .collect()
}

/// A printed non-neutral cell is an erratum when it breaks the count
/// identity |J_x| d(x,y) = |J_y| d(y,x), its mirror cell is printed
/// correctly and the recomputed cell satisfies the identity.
fn classify_erratum(
    t: &SituationTable,
    j: &[Issue],
    cell: &str,
    printed: &DegreeMap,
    computed: &dyn Fn(Agent, Agent) -> (Rational, Rational),
) -> Option<String> {
    let inner = cell.split_once('(')?.1.strip_suffix(')')?;
    let (x, y) = inner.split_once(',')?;
    let (x, y) = (t.agent(x).ok()?, t.agent(y).ok()?);
    if x == y {
        return None;
    }
    let (nx, ny) = (
        Rational::from_integer(non_neutral_count(t, x, j) as i64),
        Rational::from_integer(non_neutral_count(t, y, j) as i64),
    );
    let holds = |a: (Rational, Rational), b: (Rational, Rational)| nx * a.0 == ny * b.0 && nx * a.1 == ny * b.1;
    let (p_xy, p_yx) = (*printed.get(&(x, y))?, *printed.get(&(y, x))?);
    let (c_xy, c_yx) = (computed(x, y), computed(y, x));
    (!holds(p_xy, p_yx) && p_yx == c_yx && holds(c_xy, c_yx)).then(|| {
        format!(
            "printed pair breaks |J_{a}|*d({a},{b}) = |J_{b}|*d({b},{a}); mirror cell and recomputation agree",
            a = t.agent_id(x),
            b = t.agent_id(y)
        )
    })
}
