//! Policy configuration shared by training, inference, and the benchmark.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Chunked-policy shape: a context window of `c` past observations predicts
/// `l` future actions, of which `h` are executed before replanning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolicyConfig {
    /// Context length in timesteps (past observations fed to the denoiser).
    pub c: usize,
    /// Prediction length in timesteps (rows of an action chunk).
    pub l: usize,
    /// Execution horizon in timesteps; `1 <= h <= l`. `h = 1` is fully
    /// closed-loop, `h = l` is open-loop over the whole chunk.
    pub h: usize,
    pub action_dim: usize,
    pub obs_dim: usize,
}

impl PolicyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.c < 1 {
            return Err(Error::invalid_config("policy.c", "context length must be >= 1"));
        }
        if self.h < 1 {
            return Err(Error::invalid_config("policy.h", "execution horizon must be >= 1"));
        }
        if self.h > self.l {
            return Err(Error::invalid_config(
                "policy.h",
                format!("execution horizon {} exceeds prediction length {}", self.h, self.l),
            ));
        }
        if self.action_dim < 1 {
            return Err(Error::invalid_config("policy.action_dim", "must be >= 1"));
        }
        if self.obs_dim < 1 {
            return Err(Error::invalid_config("policy.obs_dim", "must be >= 1"));
        }
        Ok(())
    }

    /// Flattened chunk size `l * action_dim` (the diffusion variable's dim).
    pub fn chunk_len(&self) -> usize {
        self.l * self.action_dim
    }

    /// Flattened observation-window size `c * obs_dim`.
    pub fn obs_window_len(&self) -> usize {
        self.c * self.obs_dim
    }

    pub fn with_h(self, h: usize) -> Self {
        PolicyConfig { h, ..self }
    }
}
