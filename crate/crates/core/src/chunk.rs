//! Action chunks: the diffusion variable.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Real;

/// An `l x action_dim` matrix of future actions, row-major. Row `k` is the
/// action for `k` timesteps after the chunk's birth time.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionChunk<T: Scalar = Real> {
    l: usize,
    action_dim: usize,
    values: Vec<T>,
}

impl<T: Scalar> ActionChunk<T> {
    pub fn new(l: usize, action_dim: usize, values: Vec<T>) -> Result<Self> {
        if values.len() != l * action_dim {
            return Err(Error::InvalidInput(format!(
                "chunk payload has {} entries, expected {}x{}",
                values.len(),
                l,
                action_dim
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NumericInput("action chunk contains non-finite entries".into()));
        }
        Ok(ActionChunk { l, action_dim, values })
    }

    pub fn zeros(l: usize, action_dim: usize) -> Self {
        ActionChunk { l, action_dim, values: vec![T::zero(); l * action_dim] }
    }

    /// Builds from per-row action vectors.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let action_dim = rows.first().map_or(0, Vec::len);
        if action_dim == 0 {
            return Err(Error::InvalidInput("chunk needs at least one non-empty row".into()));
        }
        let mut values = Vec::with_capacity(rows.len() * action_dim);
        for row in rows {
            if row.len() != action_dim {
                return Err(Error::InvalidInput("ragged chunk rows".into()));
            }
            values.extend_from_slice(row);
        }
        ActionChunk::new(rows.len(), action_dim, values)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn action_dim(&self) -> usize {
        self.action_dim
    }

    pub fn row(&self, k: usize) -> &[T] {
        &self.values[k * self.action_dim..(k + 1) * self.action_dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.values.chunks_exact(self.action_dim)
    }

    pub fn as_slice(&self) -> &[T] {
        &self.values
    }

    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.values
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        ActionChunk {
            l: self.l,
            action_dim: self.action_dim,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }
}

/// The previously executed chunk together with the absolute timestep at which
/// it was generated; the anchor for coherence selection and guidance.
#[derive(Debug, Clone, PartialEq)]
pub struct PriorChunk<T: Scalar = Real> {
    pub chunk: ActionChunk<T>,
    pub birth_time: usize,
}

impl<T: Scalar> PriorChunk<T> {
    pub fn new(chunk: ActionChunk<T>, birth_time: usize) -> Self {
        PriorChunk { chunk, birth_time }
    }

    /// Checks the replan bookkeeping contract: a prior queried at time `t`
    /// must have been generated exactly one execution horizon ago.
    pub fn check_age(&self, t: usize, h: usize) -> Result<()> {
        if t < self.birth_time || t - self.birth_time != h {
            return Err(Error::ContractViolation(format!(
                "prior chunk born at {} queried at {}, expected age {}",
                self.birth_time, t, h
            )));
        }
        Ok(())
    }
}
