//! Bundled input tables and expected outputs used by `reproduce`.

use std::path::PathBuf;

use trisect_core::SituationTable;

use crate::error::{CliError, CliResult};

pub const SIX_BY_FIVE: &str = "six_by_five.csv";
pub const TWELVE_BY_FOUR: &str = "twelve_by_four.csv";
pub const FOURTEEN_BY_ELEVEN: &str = "fourteen_by_eleven.csv";

macro_rules! embedded {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name)))),*]
    };
}

const EMBEDDED: &[(&str, &str)] = embedded![
    "six_by_five.csv",
    "twelve_by_four.csv",
    "fourteen_by_eleven.csv",
    "expected/aggregated_auxiliary.csv",
    "expected/alliances.json",
    "expected/case_study.json",
    "expected/degrees_fourteen.csv",
    "expected/degrees_non_neutral.csv",
    "expected/degrees_pawlak.csv",
    "expected/degrees_yao.csv",
    "expected/ratings.json",
    "expected/single_issue.json",
    "expected/strategies.json",
    "expected/strategy_alliance.csv",
];

/// Fixture files, either compiled into the binary or read from a directory
/// with the same layout.
#[derive(Debug, Clone, Default)]
pub struct Fixtures {
    dir: Option<PathBuf>,
}

impl Fixtures {
    pub fn embedded() -> Self {
        Fixtures { dir: None }
    }

    pub fn from_dir(dir: impl Into<PathBuf>) -> Self {
        Fixtures { dir: Some(dir.into()) }
    }

    pub fn names() -> impl Iterator<Item = &'static str> {
        EMBEDDED.iter().map(|(n, _)| *n)
    }

    pub fn read(&self, name: &str) -> CliResult<String> {
        match &self.dir {
            None => EMBEDDED
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, body)| body.to_string())
                .ok_or_else(|| CliError::FixtureMissing(name.to_string())),
            Some(dir) => {
                let path = dir.join(name);
                std::fs::read_to_string(&path).map_err(|e| match e.kind() {
                    std::io::ErrorKind::NotFound => CliError::FixtureMissing(path.display().to_string()),
                    _ => CliError::io(path.display().to_string(), e),
                })
            }
        }
    }

    pub fn table(&self, name: &str) -> CliResult<SituationTable> {
        Ok(SituationTable::from_csv(self.read(name)?.as_bytes())?)
    }

    pub fn json(&self, name: &str) -> CliResult<serde_json::Value> {
        serde_json::from_str(&self.read(name)?).map_err(|e| CliError::Input(format!("fixture {name}: {e}")))
    }

    /// Header and rows of a CSV fixture.
    pub fn csv(&self, name: &str) -> CliResult<(Vec<String>, Vec<Vec<String>>)> {
        let body = self.read(name)?;
        let bad = |e: csv::Error| CliError::Input(format!("fixture {name}: {e}"));
        let mut rdr = csv::Reader::from_reader(body.as_bytes());
        let header = rdr.headers().map_err(bad)?.iter().map(String::from).collect();
        let rows = rdr
            .records()
            .map(|r| r.map(|r| r.iter().map(String::from).collect()).map_err(bad))
            .collect::<CliResult<_>>()?;
        Ok((header, rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_embedded_fixture_is_readable() {
        let f = Fixtures::embedded();
        for name in Fixtures::names() {
            assert!(!f.read(name).unwrap().is_empty(), "{name}");
        }
        assert_eq!(f.table(TWELVE_BY_FOUR).unwrap().n_agents(), 12);
    }

    #[test]
    fn missing_fixture() {
        let f = Fixtures::from_dir("/nonexistent-fixture-dir");
        assert!(matches!(f.read(SIX_BY_FIVE), Err(CliError::FixtureMissing(_))));
        assert!(matches!(Fixtures::embedded().read("nope.csv"), Err(CliError::FixtureMissing(_))));
    }
}
