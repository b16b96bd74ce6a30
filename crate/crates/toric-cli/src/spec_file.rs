//! The cone input format: `{"rank": n, "generators": [[..], ..], "name": ..}`.

use serde::{Deserialize, Serialize};
use toric_core::LatticeVector;

use crate::{CliError, CliResult};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConeSpecFile {
    pub rank: usize,
    pub generators: Vec<Vec<i128>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl ConeSpecFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        let spec: ConeSpecFile = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed cone file: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: &std::path::Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.rank == 0 {
            return Err(CliError::Input("rank must be positive".into()));
        }
        if self.generators.is_empty() {
            return Err(CliError::Input("generator list is empty".into()));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.len() != self.rank {
                return Err(CliError::Input(format!(
                    "generator row {i} has {} entries, expected rank {}",
                    g.len(),
                    self.rank
                )));
            }
        }
        Ok(())
    }

    pub fn generator_vectors(&self) -> Vec<LatticeVector> {
        self.generators
            .iter()
            .map(|g| LatticeVector::new(g.iter().map(|&c| c.into()).collect()))
            .collect()
    }
}
