use std::collections::HashMap;
use std::io::Read;

use serde::{Deserialize, Serialize};

use super::Rating;
use crate::error::{Error, IdKind, Result};

/// Row index of an agent in a [`SituationTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Agent(pub usize);

/// Column index of an issue in a [`SituationTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Issue(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Agents by issues matrix of ratings with stable identifiers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SituationTable {
    agents: Vec<String>,
    issues: Vec<String>,
    cells: Vec<Rating>,
    agent_ix: HashMap<String, usize>,
    issue_ix: HashMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    agents: Vec<String>,
    issues: Vec<String>,
    ratings: Vec<Vec<i64>>,
}

fn index_ids(ids: &[String], kind: IdKind) -> Result<HashMap<String, usize>> {
    let mut map = HashMap::with_capacity(ids.len());
    for (k, id) in ids.iter().enumerate() {
        if map.insert(id.clone(), k).is_some() {
            return Err(Error::DuplicateId {
                kind,
                id: id.clone(),
            });
        }
    }
    Ok(map)
}

impl SituationTable {
    /// Builds a table from row-major ratings.
    pub fn new(agents: Vec<String>, issues: Vec<String>, rows: Vec<Vec<Rating>>) -> Result<Self> {
        if agents.is_empty() || issues.is_empty() {
            return Err(Error::EmptyTable);
        }
        if rows.len() != agents.len() {
            return Err(Error::Parse(format!(
                "{} agents but {} rating rows",
                agents.len(),
                rows.len()
            )));
        }
        let agent_ix = index_ids(&agents, IdKind::Agent)?;
        let issue_ix = index_ids(&issues, IdKind::Issue)?;
        let mut cells = Vec::with_capacity(agents.len() * issues.len());
        for (row, agent) in rows.into_iter().zip(&agents) {
            if row.len() != issues.len() {
                return Err(Error::Parse(format!(
                    "row {agent:?} has {} ratings, expected {}",
                    row.len(),
                    issues.len()
                )));
            }
            cells.extend(row);
        }
        Ok(SituationTable {
            agents,
            issues,
            cells,
            agent_ix,
            issue_ix,
        })
    }

    /// Builds a table from integer ratings in {+1, -1, 0}.
    pub fn from_values(agents: &[&str], issues: &[&str], rows: &[&[i64]]) -> Result<Self> {
        let mut parsed = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (c, &v) in row.iter().enumerate() {
                out.push(Rating::from_value(v).ok_or_else(|| Error::Domain {
                    row: r + 1,
                    agent: agents.get(r).map(|s| s.to_string()).unwrap_or_default(),
                    issue: issues.get(c).map(|s| s.to_string()).unwrap_or_default(),
                    value: v.to_string(),
                })?);
            }
            parsed.push(out);
        }
        SituationTable::new(
            agents.iter().map(|s| s.to_string()).collect(),
            issues.iter().map(|s| s.to_string()).collect(),
            parsed,
        )
    }

    pub fn load<R: Read>(source: R, format: Format) -> Result<Self> {
        match format {
            Format::Csv => Self::from_csv(source),
            Format::Json => Self::from_json(source),
        }
    }

    /// Reads `agent,i1,...` CSV. Lines starting with `#` are skipped.
    pub fn from_csv<R: Read>(source: R) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(source);
        let header = reader
            .headers()
            .map_err(|e| Error::Parse(e.to_string()))?
            .clone();
        let mut cols = header.iter();
        match cols.next() {
            Some("agent") => {}
            Some(other) => {
                return Err(Error::Parse(format!(
                    "first header cell must be \"agent\", found {other:?}"
                )))
            }
            None => return Err(Error::EmptyTable),
        }
        let issues: Vec<String> = cols.map(str::to_string).collect();
        let mut agents = Vec::new();
        let mut rows = Vec::new();
        for (r, record) in reader.records().enumerate() {
            let record = record.map_err(|e| Error::Parse(e.to_string()))?;
            let mut fields = record.iter();
            let agent = fields.next().unwrap_or_default().to_string();
            let mut row = Vec::with_capacity(issues.len());
            for (c, cell) in fields.enumerate() {
                let rating = cell.parse::<Rating>().map_err(|_| Error::Domain {
                    row: r + 1,
                    agent: agent.clone(),
                    issue: issues.get(c).cloned().unwrap_or_else(|| format!("#{}", c + 1)),
                    value: cell.to_string(),
                })?;
                row.push(rating);
            }
            agents.push(agent);
            rows.push(row);
        }
        SituationTable::new(agents, issues, rows)
    }

    pub fn from_json<R: Read>(source: R) -> Result<Self> {
        let raw: JsonTable =
            serde_json::from_reader(source).map_err(|e| Error::Parse(e.to_string()))?;
        let agents: Vec<&str> = raw.agents.iter().map(String::as_str).collect();
        let issues: Vec<&str> = raw.issues.iter().map(String::as_str).collect();
        let rows: Vec<&[i64]> = raw.ratings.iter().map(Vec::as_slice).collect();
        SituationTable::from_values(&agents, &issues, &rows)
    }

    /// Canonical CSV: header `agent,...`, ratings written as `+1`, `-1`, `0`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("agent");
        for issue in &self.issues {
            out.push(',');
            out.push_str(issue);
        }
        out.push('\n');
        for (r, agent) in self.agents.iter().enumerate() {
            out.push_str(agent);
            for c in 0..self.issues.len() {
                out.push(',');
                out.push_str(&self.cells[r * self.issues.len() + c].to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let raw = JsonTable {
            agents: self.agents.clone(),
            issues: self.issues.clone(),
            ratings: self
                .agent_list()
                .map(|a| self.issue_list().map(|i| self.rating(a, i).value()).collect())
                .collect(),
        };
        serde_json::to_string(&raw).expect("table serializes")
    }

    pub fn n_agents(&self) -> usize {
        self.agents.len()
    }

    pub fn n_issues(&self) -> usize {
        self.issues.len()
    }

    pub fn agent_ids(&self) -> &[String] {
        &self.agents
    }

    pub fn issue_ids(&self) -> &[String] {
        &self.issues
    }

    pub fn agent_id(&self, a: Agent) -> &str {
        &self.agents[a.0]
    }

    pub fn issue_id(&self, i: Issue) -> &str {
        &self.issues[i.0]
    }

    pub fn agent(&self, id: &str) -> Result<Agent> {
        self.agent_ix
            .get(id)
            .map(|&k| Agent(k))
            .ok_or_else(|| Error::UnknownId {
                kind: IdKind::Agent,
                id: id.to_string(),
            })
    }

    pub fn issue(&self, id: &str) -> Result<Issue> {
        self.issue_ix
            .get(id)
            .map(|&k| Issue(k))
            .ok_or_else(|| Error::UnknownId {
                kind: IdKind::Issue,
                id: id.to_string(),
            })
    }

    /// Resolves a list of agent ids, keeping the given order.
    pub fn agents_of<S: AsRef<str>>(&self, ids: &[S]) -> Result<Vec<Agent>> {
        ids.iter().map(|s| self.agent(s.as_ref())).collect()
    }

    pub fn issues_of<S: AsRef<str>>(&self, ids: &[S]) -> Result<Vec<Issue>> {
        ids.iter().map(|s| self.issue(s.as_ref())).collect()
    }

    pub fn agent_list(&self) -> impl Iterator<Item = Agent> + Clone {
        (0..self.agents.len()).map(Agent)
    }

    pub fn issue_list(&self) -> impl Iterator<Item = Issue> + Clone {
        (0..self.issues.len()).map(Issue)
    }

    pub fn all_agents(&self) -> Vec<Agent> {
        self.agent_list().collect()
    }

    pub fn all_issues(&self) -> Vec<Issue> {
        self.issue_list().collect()
    }

    /// Panics if either index is out of range for this table.
    pub fn rating(&self, a: Agent, i: Issue) -> Rating {
        assert!(a.0 < self.agents.len() && i.0 < self.issues.len());
        self.cells[a.0 * self.issues.len() + i.0]
    }

    /// Id-based lookup.
    pub fn rating_of(&self, agent: &str, issue: &str) -> Result<Rating> {
        Ok(self.rating(self.agent(agent)?, self.issue(issue)?))
    }
}

/// Sorts into table order and drops duplicates.
pub fn normalize<T: Ord + Copy>(items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}
