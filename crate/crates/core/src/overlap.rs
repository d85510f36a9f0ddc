//! Overlap arithmetic between a prior chunk and its successor.
//!
//! A chunk born at `t - h` and a chunk born at `t` both cover the absolute
//! timesteps `t .. t-h+l`, i.e. `l - h` steps. Index `k = 0` is the first
//! overlapping step: local row `h + k` of the prior lines up with local row
//! `k` of the current chunk. Boundary actions outside the overlap carry no
//! weight.

use crate::chunk::{ActionChunk, PriorChunk};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_horizon(l: usize, h: usize) -> Result<()> {
    if h < 1 || h > l {
        return Err(Error::invalid_config(
            "h",
            format!("execution horizon {h} must satisfy 1 <= h <= l (= {l})"),
        ));
    }
    Ok(())
}

/// Exponentially decaying weights over the overlap region: `w[k] = decay^k`
/// for `k = 0 .. l-h-1`. Empty when `h == l`.
pub fn overlap_weights<T: Scalar>(l: usize, h: usize, decay: T) -> Result<Vec<T>> {
    check_horizon(l, h)?;
    if decay <= T::zero() || decay > T::one() {
        return Err(Error::invalid_config("decay", "must lie in (0, 1]"));
    }
    let mut w = Vec::with_capacity(l - h);
    let mut acc = T::one();
    for _ in 0..l - h {
        w.push(acc);
        acc = acc * decay;
    }
    Ok(w)
}

/// The rows of `prior` and `current` that cover identical absolute timesteps:
/// prior rows `h..l` paired with current rows `0..l-h`. Both halves are empty
/// when `h == l`.
pub fn extract_overlap<'a, T: Scalar>(
    prior: &'a PriorChunk<T>,
    current: &'a ActionChunk<T>,
    h: usize,
) -> Result<(Vec<&'a [T]>, Vec<&'a [T]>)> {
    let l = current.l();
    check_horizon(l, h)?;
    if prior.chunk.l() != l || prior.chunk.action_dim() != current.action_dim() {
        return Err(Error::InvalidInput(format!(
            "prior shape {}x{} does not match current {}x{}",
            prior.chunk.l(),
            prior.chunk.action_dim(),
            l,
            current.action_dim()
        )));
    }
    let n = l - h;
    let prior_rows = (h..l).map(|k| prior.chunk.row(k)).collect();
    let current_rows = (0..n).map(|k| current.row(k)).collect();
    Ok((prior_rows, current_rows))
}
