use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Attitude of an agent on an issue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rating {
    Positive,
    Negative,
    Neutral,
}

impl Rating {
    /// All ratings in matrix index order: +1, -1, 0.
    pub const ALL: [Rating; 3] = [Rating::Positive, Rating::Negative, Rating::Neutral];

    pub fn value(self) -> i64 {
        match self {
            Rating::Positive => 1,
            Rating::Negative => -1,
            Rating::Neutral => 0,
        }
    }

    pub fn from_value(v: i64) -> Option<Rating> {
        match v {
            1 => Some(Rating::Positive),
            -1 => Some(Rating::Negative),
            0 => Some(Rating::Neutral),
            _ => None,
        }
    }

    /// Position in the [+1, -1, 0] ordering used by model matrices.
    pub fn index(self) -> usize {
        match self {
            Rating::Positive => 0,
            Rating::Negative => 1,
            Rating::Neutral => 2,
        }
    }

    pub fn is_neutral(self) -> bool {
        self == Rating::Neutral
    }

    pub fn flipped(self) -> Rating {
        match self {
            Rating::Positive => Rating::Negative,
            Rating::Negative => Rating::Positive,
            Rating::Neutral => Rating::Neutral,
        }
    }
}

impl fmt::Display for Rating {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rating::Positive => "+1",
            Rating::Negative => "-1",
            Rating::Neutral => "0",
        })
    }
}

impl FromStr for Rating {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rating> {
        match s.trim() {
            "+1" | "1" => Ok(Rating::Positive),
            "-1" => Ok(Rating::Negative),
            "0" => Ok(Rating::Neutral),
            other => Err(Error::Parse(format!("not a rating: {other:?}"))),
        }
    }
}
