//! Action-chunk diffusion policies with prior-guided inference.
//!
//! The crate is organized around a small closed-loop pipeline:
//!
//! - [`env`]: two deterministic 2D tasks (a reach-avoid maze and a push task
//!   with an optionally moving goal).
//! - [`expert`]: scripted demonstrators with controllable variance presets,
//!   producing [`data::Dataset`]s.
//! - [`model`]: a preconditioned MLP denoiser with exact manual backprop.
//! - [`train`]: denoising score-matching training with Adam.
//! - [`infer`]: the probability-flow ODE sampler and the four inference
//!   strategies (random, coherence, temporal ensembling, and self-guided
//!   diffusion with prior-gradient updates inside the denoising loop).
//! - [`bench`]: closed-loop rollouts, sweeps, β tuning, CSV and SVG output.
//!
//! All numeric kernels are generic over the scalar type via [`scalar::Scalar`]
//! (`f32` or `f64`); configuration structs are plain `f64` + serde. The
//! default pipeline scalar is [`Real`], and the public generic types default
//! their parameter to it, so `ActionChunk` written bare is the `f64` variant.

pub mod bench;
pub mod chunk;
pub mod config;
pub mod data;
pub mod env;
pub mod error;
pub mod expert;
pub mod infer;
pub mod model;
pub mod overlap;
pub mod rng;
pub mod scalar;
pub mod train;

/// Default scalar for the end-to-end pipeline.
pub type Real = f64;

pub use chunk::{ActionChunk, PriorChunk};
pub use config::PolicyConfig;
pub use data::{Dataset, DatasetMeta, Trajectory};
pub use error::{Error, Result};
pub use rng::Rng;
pub use scalar::Scalar;
