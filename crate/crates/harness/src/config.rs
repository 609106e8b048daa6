use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

pub const K_CAP: usize = 32;
pub const D_CAP: usize = 16;
pub const N_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FlavorChoice {
    Cstar,
    Hstar,
    Both,
}

impl FlavorChoice {
    pub fn includes_cstar(self) -> bool {
        matches!(self, FlavorChoice::Cstar | FlavorChoice::Both)
    }

    pub fn includes_hstar(self) -> bool {
        matches!(self, FlavorChoice::Hstar | FlavorChoice::Both)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub k_max: usize,
    pub d_max: usize,
    pub n_max: usize,
    pub flavor: FlavorChoice,
    pub slack_scale: f64,
    pub strict_radius_mode: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            trials: 1000,
            k_max: 4,
            d_max: 4,
            n_max: 8,
            flavor: FlavorChoice::Both,
            slack_scale: 1.0,
            strict_radius_mode: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        check_dim("k_max", self.k_max, K_CAP)?;
        check_dim("d_max", self.d_max, D_CAP)?;
        check_dim("n_max", self.n_max, N_CAP)?;
        if !(self.slack_scale.is_finite() && self.slack_scale > 0.0) {
            return Err(HarnessError::InvalidConfig(format!(
                "slack_scale must be positive, got {}",
                self.slack_scale
            )));
        }
        Ok(())
    }

    /// Reads a JSON config; missing fields take their defaults.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let config: SuiteConfig = serde_json::from_str(&text)?;
        config.validate()?;
        Ok(config)
    }
}

pub(crate) fn check_dim(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value == 0 {
        return Err(HarnessError::InvalidConfig(format!("{what} must be at least 1")));
    }
    if value > cap {
        return Err(HarnessError::CapExceeded { what, value, cap });
    }
    Ok(())
}
