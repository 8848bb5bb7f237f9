//! Chain specification files.
//!
//! JSON with a `kind` tag:
//!
//! ```json
//! { "kind": "birth_death", "p": [0.5, 0.6667], "q": [0.25] }
//! { "kind": "banded", "m": 2, "rows": [[0,0,0,0.5,0.5]], "tail_row": [0.25,0.25,0,0.25,0.25] }
//! { "kind": "chebyshev" }
//! { "kind": "pentadiagonal_chebyshev" }
//! ```
//!
//! The last listed `p`/`q` value (resp. the `tail_row`) repeats for all
//! states beyond those listed. Probabilities are parsed as JSON numbers
//! with correctly-rounded decimal conversion, so dyadic rationals written
//! in decimal (`0.25`, `0.0625`, ...) are represented bit-exactly.

use std::path::Path;

use kmspec_core::chain::{chebyshev_chain, pentadiagonal_chebyshev, BandedChain, BirthDeathChain};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ChainSpec {
    BirthDeath {
        p: Vec<f64>,
        q: Vec<f64>,
    },
    Banded {
        m: usize,
        rows: Vec<Vec<f64>>,
        tail_row: Vec<f64>,
    },
    Chebyshev,
    PentadiagonalChebyshev,
}

impl ChainSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ChainSpec::BirthDeath { .. } => "birth_death",
            ChainSpec::Banded { .. } => "banded",
            ChainSpec::Chebyshev => "chebyshev",
            ChainSpec::PentadiagonalChebyshev => "pentadiagonal_chebyshev",
        }
    }

    pub fn build(&self) -> Result<BandedChain, CliError> {
        match self {
            ChainSpec::BirthDeath { p, q } => {
                Ok(BirthDeathChain::new(p.clone(), q.clone())?.to_banded())
            }
            ChainSpec::Banded { m, rows, tail_row } => {
                if *m == 0 {
                    return Err(CliError::Config("bandwidth m must be positive".into()));
                }
                Ok(BandedChain::from_rows(*m, rows.clone(), tail_row.clone())?)
            }
            ChainSpec::Chebyshev => Ok(chebyshev_chain()),
            ChainSpec::PentadiagonalChebyshev => Ok(pentadiagonal_chebyshev()),
        }
    }
}

pub fn load(path: &Path) -> Result<ChainSpec, CliError> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}
