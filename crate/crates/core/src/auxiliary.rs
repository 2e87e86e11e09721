//! Single-function baseline: auxiliary models and their pair trisections.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::model::{
    normalize, Agent, Issue, Part, Rating, Rational, Scope, SituationTable, ThresholdKind,
    Trisection,
};

/// Value of Φ_i for two distinct agents, as a map over rating pairs.
/// A pair of an agent with itself is always +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryModel {
    name: String,
    cells: [[Rating; 3]; 3],
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ModelSpec {
    Bare([[i64; 3]; 3]),
    Named { name: String, matrix: [[i64; 3]; 3] },
}

impl AuxiliaryModel {
    pub fn pawlak() -> Self {
        Self::preset("pawlak", Rating::Neutral)
    }

    pub fn yao() -> Self {
        Self::preset("yao", Rating::Positive)
    }

    fn preset(name: &str, both_neutral: Rating) -> Self {
        use Rating::*;
        AuxiliaryModel {
            name: name.to_string(),
            cells: [
                [Positive, Negative, Neutral],
                [Negative, Positive, Neutral],
                [Neutral, Neutral, both_neutral],
            ],
        }
    }

    /// Matrix rows and columns are indexed [+1, -1, 0]. Fixed cells and
    /// symmetry are checked.
    pub fn custom(name: &str, matrix: [[i64; 3]; 3]) -> Result<Self> {
        let mut cells = [[Rating::Neutral; 3]; 3];
        for (r, row) in matrix.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                cells[r][c] = Rating::from_value(v).ok_or_else(|| {
                    Error::InvalidModel(format!("cell ({r},{c}) = {v} is not +1, -1 or 0"))
                })?;
            }
        }
        let fixed = [
            (0, 0, Rating::Positive),
            (1, 1, Rating::Positive),
            (0, 1, Rating::Negative),
            (1, 0, Rating::Negative),
        ];
        for (r, c, want) in fixed {
            if cells[r][c] != want {
                return Err(Error::InvalidModel(format!(
                    "cell ({}, {}) must be {want}",
                    Rating::ALL[r],
                    Rating::ALL[c]
                )));
            }
        }
        #[allow(clippy::needless_range_loop)]
        for r in 0..3 {
            for c in 0..3 {
                if cells[r][c] != cells[c][r] {
                    return Err(Error::InvalidModel(format!(
                        "not symmetric at ({}, {})",
                        Rating::ALL[r],
                        Rating::ALL[c]
                    )));
                }
            }
        }
        Ok(AuxiliaryModel {
            name: name.to_string(),
            cells,
        })
    }

    /// Accepts a bare 3x3 matrix or `{"name": ..., "matrix": ...}`.
    pub fn from_json(src: &str) -> Result<Self> {
        match serde_json::from_str::<ModelSpec>(src).map_err(|e| Error::Parse(e.to_string()))? {
            ModelSpec::Bare(m) => Self::custom("custom", m),
            ModelSpec::Named { name, matrix } => Self::custom(&name, matrix),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Value for two distinct agents rating `a` and `b`.
    pub fn cell(&self, a: Rating, b: Rating) -> Rating {
        self.cells[a.index()][b.index()]
    }
}

/// Φ_i(x, y).
pub fn phi_single(model: &AuxiliaryModel, table: &SituationTable, x: Agent, y: Agent, i: Issue) -> Rating {
    if x == y {
        Rating::Positive
    } else {
        model.cell(table.rating(x, i), table.rating(y, i))
    }
}

/// Φ_J(x, y): average of Φ_i over `j`, 0 for an empty set.
pub fn phi_aggregated(
    model: &AuxiliaryModel,
    table: &SituationTable,
    x: Agent,
    y: Agent,
    j: &[Issue],
) -> Rational {
    let j = normalize(j);
    let sum: i64 = j.iter().map(|&i| phi_single(model, table, x, y, i).value()).sum();
    if j.is_empty() {
        Rational::from_integer(0)
    } else {
        Rational::new(sum, j.len() as i64)
    }
}

/// All ordered pairs of A x A, row-major, diagonal included.
pub fn all_pairs(table: &SituationTable) -> Vec<(Agent, Agent)> {
    let agents = table.all_agents();
    agents
        .iter()
        .flat_map(|&x| agents.iter().map(move |&y| (x, y)))
        .collect()
}

/// Alliance (positive), conflict (negative) and neutrality of agent pairs.
pub fn trisect_pairs_auxiliary(
    model: &AuxiliaryModel,
    table: &SituationTable,
    scope: Scope<'_, Issue>,
) -> Result<Trisection<(Agent, Agent)>> {
    match scope {
        Scope::Single(i) => Ok(Trisection::classify(all_pairs(table), |&(x, y)| {
            match phi_single(model, table, x, y, i) {
                Rating::Positive => Part::Positive,
                Rating::Negative => Part::Negative,
                Rating::Neutral => Part::Neutral,
            }
        })),
        Scope::Set(j, t) => {
            t.expect_kind(ThresholdKind::SignedRating)?;
            Ok(Trisection::classify(all_pairs(table), |&(x, y)| {
                let v = phi_aggregated(model, table, x, y, j);
                if v >= t.high {
                    Part::Positive
                } else if v <= t.low {
                    Part::Negative
                } else {
                    Part::Neutral
                }
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_differ_only_on_both_neutral() {
        let (p, y) = (AuxiliaryModel::pawlak(), AuxiliaryModel::yao());
        for a in Rating::ALL {
            for b in Rating::ALL {
                let same = p.cell(a, b) == y.cell(a, b);
                assert_eq!(same, !(a.is_neutral() && b.is_neutral()));
            }
        }
    }

    #[test]
    fn custom_validation() {
        assert!(AuxiliaryModel::custom("m", [[1, -1, 0], [-1, 1, -1], [0, -1, 1]]).is_ok());
        // asymmetric star cells
        assert!(AuxiliaryModel::custom("m", [[1, -1, 1], [-1, 1, 0], [0, 0, 0]]).is_err());
        // broken fixed cell
        assert!(AuxiliaryModel::custom("m", [[1, 0, 0], [0, 1, 0], [0, 0, 0]]).is_err());
        assert!(AuxiliaryModel::custom("m", [[1, -1, 2], [-1, 1, 0], [2, 0, 0]]).is_err());
        let m = AuxiliaryModel::from_json("[[1,-1,0],[-1,1,0],[0,0,1]]").unwrap();
        assert_eq!(m.cell(Rating::Neutral, Rating::Neutral), Rating::Positive);
        let m = AuxiliaryModel::from_json(r#"{"name":"strict","matrix":[[1,-1,-1],[-1,1,-1],[-1,-1,0]]}"#).unwrap();
        assert_eq!(m.name(), "strict");
    }
}
