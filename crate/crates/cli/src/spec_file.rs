//! JSON game descriptions: one object per file, tagged by `family`.
//!
//! ```json
//! {"family": "bankruptcy", "liabilities": [2, 3, 5, 7], "assets": 9}
//! {"family": "weighted_voting", "weights": [5, 1, 1], "quota": 5}
//! {"family": "liability", "liabilities": [2, 3], "assets": 4}
//! {"family": "airport", "costs": [1, 5, 5, 7, 7, 10]}
//! {"family": "table", "weights": [1, 2], "f": [0, 1, 1, 3]}
//! ```

use std::io::Read;
use std::path::Path;

use linshap_core::GameFamily;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Raw file contents. Integers are read signed so that negative entries can
/// be reported against the field that holds them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum GameSpecFile {
    WeightedVoting { weights: Vec<i64>, quota: i64 },
    Bankruptcy { liabilities: Vec<i64>, assets: i64 },
    Liability { liabilities: Vec<i64>, assets: i64 },
    Airport { costs: Vec<i64> },
    Table {
        weights: Vec<i64>,
        #[serde(alias = "values")]
        f: Vec<i64>,
    },
}

fn nonnegative(field: &str, value: i64) -> Result<u64, CliError> {
    u64::try_from(value)
        .map_err(|_| CliError::invalid(field, format!("must be nonnegative, got {value}")))
}

fn nonnegative_list(field: &str, values: &[i64]) -> Result<Vec<u64>, CliError> {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            u64::try_from(v).map_err(|_| {
                CliError::invalid(field, format!("entry {i} must be nonnegative, got {v}"))
            })
        })
        .collect()
}

impl GameSpecFile {
    /// Converts to a validated family.
    pub fn into_family(self) -> Result<GameFamily, CliError> {
        let family = match self {
            GameSpecFile::WeightedVoting { weights, quota } => GameFamily::WeightedVoting {
                weights: nonnegative_list("weights", &weights)?,
                quota: nonnegative("quota", quota)?,
            },
            GameSpecFile::Bankruptcy { liabilities, assets } => GameFamily::Bankruptcy {
                liabilities: nonnegative_list("liabilities", &liabilities)?,
                assets: nonnegative("assets", assets)?,
            },
            GameSpecFile::Liability { liabilities, assets } => GameFamily::Liability {
                liabilities: nonnegative_list("liabilities", &liabilities)?,
                assets: nonnegative("assets", assets)?,
            },
            GameSpecFile::Airport { costs } => GameFamily::Airport {
                costs: nonnegative_list("costs", &costs)?,
            },
            GameSpecFile::Table { weights, f } => {
                nonnegative_list("f", &f)?;
                GameFamily::ExplicitTable {
                    weights: nonnegative_list("weights", &weights)?,
                    values: f,
                }
            }
        };
        family.validate()?;
        Ok(family)
    }

    pub fn from_family(family: &GameFamily) -> Self {
        let signed = |xs: &[u64]| xs.iter().map(|&x| x as i64).collect::<Vec<_>>();
        match family {
            GameFamily::WeightedVoting { weights, quota } => GameSpecFile::WeightedVoting {
                weights: signed(weights),
                quota: *quota as i64,
            },
            GameFamily::Bankruptcy { liabilities, assets } => GameSpecFile::Bankruptcy {
                liabilities: signed(liabilities),
                assets: *assets as i64,
            },
            GameFamily::Liability { liabilities, assets } => GameSpecFile::Liability {
                liabilities: signed(liabilities),
                assets: *assets as i64,
            },
            GameFamily::Airport { costs } => GameSpecFile::Airport {
                costs: signed(costs),
            },
            GameFamily::ExplicitTable { weights, values } => GameSpecFile::Table {
                weights: signed(weights),
                f: values.clone(),
            },
        }
    }
}

pub fn parse_family(text: &str) -> Result<GameFamily, CliError> {
    let spec: GameSpecFile = serde_json::from_str(text)?;
    spec.into_family()
}

/// Reads a game from `path`, or from standard input when `path` is `-`.
pub fn load_family(path: &Path) -> Result<GameFamily, CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(io_err)?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(io_err)?
    };
    parse_family(&text)
}
