//! Demonstration trajectories and the on-disk dataset container.
//!
//! # File layout
//!
//! A dataset file is a self-describing container: a fixed preamble, a JSON
//! header, then one little-endian `f32` block per trajectory.
//!
//! | offset | size          | contents                                    |
//! |--------|---------------|---------------------------------------------|
//! | 0      | 4             | magic `ADLD`                                |
//! | 4      | 4             | format version, `u32` LE (currently 1)      |
//! | 8      | 4             | header length `n`, `u32` LE                 |
//! | 12     | n             | JSON header (dims, counts, generation meta) |
//! | 12+n   | per trajectory| `u32` LE step count `T`, then `T*obs_dim` f32 states, then `T*action_dim` f32 actions |
//!
//! Payloads are `f32`, so round trips are bit-exact for every value the
//! pipeline itself produces (recording quantizes through f32 — see
//! [`payload_quantize`]).

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Real;

const MAGIC: [u8; 4] = *b"ADLD";
pub const DATASET_VERSION: u32 = 1;

/// One demonstration: equal-length state and action sequences.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<T: Scalar = Real> {
    pub states: Vec<Vec<T>>,
    pub actions: Vec<Vec<T>>,
}

impl<T: Scalar> Trajectory<T> {
    pub fn new(states: Vec<Vec<T>>, actions: Vec<Vec<T>>) -> Result<Self> {
        let traj = Trajectory { states, actions };
        traj.validate()?;
        Ok(traj)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn obs_dim(&self) -> usize {
        self.states.first().map_or(0, Vec::len)
    }

    pub fn action_dim(&self) -> usize {
        self.actions.first().map_or(0, Vec::len)
    }

    fn validate(&self) -> Result<()> {
        if self.states.is_empty() || self.states.len() != self.actions.len() {
            return Err(Error::InvalidInput(format!(
                "trajectory needs equal non-zero lengths, got {} states / {} actions",
                self.states.len(),
                self.actions.len()
            )));
        }
        let od = self.obs_dim();
        let ad = self.action_dim();
        for (s, a) in self.states.iter().zip(&self.actions) {
            if s.len() != od || a.len() != ad {
                return Err(Error::InvalidInput("ragged trajectory rows".into()));
            }
            if s.iter().chain(a.iter()).any(|v| !v.is_finite()) {
                return Err(Error::NumericInput("trajectory contains non-finite entries".into()));
            }
        }
        Ok(())
    }
}

/// Generation config echo stored in the file header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetMeta {
    pub env_id: String,
    pub preset: String,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset<T: Scalar = Real> {
    pub trajectories: Vec<Trajectory<T>>,
    pub meta: DatasetMeta,
}

#[derive(Serialize, Deserialize)]
struct Header {
    obs_dim: usize,
    action_dim: usize,
    n_trajectories: usize,
    meta: DatasetMeta,
}

impl<T: Scalar> Dataset<T> {
    pub fn new(trajectories: Vec<Trajectory<T>>, meta: DatasetMeta) -> Result<Self> {
        if trajectories.is_empty() {
            return Err(Error::InvalidInput("dataset must contain at least one trajectory".into()));
        }
        let od = trajectories[0].obs_dim();
        let ad = trajectories[0].action_dim();
        for (i, t) in trajectories.iter().enumerate() {
            t.validate()?;
            if t.obs_dim() != od || t.action_dim() != ad {
                return Err(Error::InvalidInput(format!(
                    "trajectory {i} dims {}x{} differ from dataset dims {od}x{ad}",
                    t.obs_dim(),
                    t.action_dim()
                )));
            }
        }
        Ok(Dataset { trajectories, meta })
    }

    pub fn obs_dim(&self) -> usize {
        self.trajectories[0].obs_dim()
    }

    pub fn action_dim(&self) -> usize {
        self.trajectories[0].action_dim()
    }

    pub fn n_steps(&self) -> usize {
        self.trajectories.iter().map(Trajectory::len).sum()
    }

    pub fn write_to(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let file = File::create(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        let mut w = BufWriter::new(file);
        let io_err = |e| Error::io(path.display().to_string(), e);

        let header = Header {
            obs_dim: self.obs_dim(),
            action_dim: self.action_dim(),
            n_trajectories: self.trajectories.len(),
            meta: self.meta.clone(),
        };
        let header_bytes = serde_json::to_vec(&header)
            .map_err(|e| Error::InvalidInput(format!("header serialization: {e}")))?;

        w.write_all(&MAGIC).map_err(io_err)?;
        w.write_all(&DATASET_VERSION.to_le_bytes()).map_err(io_err)?;
        w.write_all(&(header_bytes.len() as u32).to_le_bytes()).map_err(io_err)?;
        w.write_all(&header_bytes).map_err(io_err)?;
        for traj in &self.trajectories {
            w.write_all(&(traj.len() as u32).to_le_bytes()).map_err(io_err)?;
            for row in traj.states.iter().chain(traj.actions.iter()) {
                for &v in row {
                    w.write_all(&v.to_payload().to_le_bytes()).map_err(io_err)?;
                }
            }
        }
        w.flush().map_err(io_err)
    }

    pub fn read_from(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        let mut r = CountingReader::new(BufReader::new(file));

        let magic = r.take::<4>("magic")?;
        if magic != MAGIC {
            return Err(Error::Parse { offset: 0, what: "bad magic, not a dataset file".into() });
        }
        let version = u32::from_le_bytes(r.take::<4>("version")?);
        if version != DATASET_VERSION {
            return Err(Error::Version { found: version, expected: DATASET_VERSION });
        }
        let header_len = u32::from_le_bytes(r.take::<4>("header length")?) as usize;
        let header_start = r.offset;
        let header_bytes = r.take_vec(header_len, "header")?;
        let header: Header = serde_json::from_slice(&header_bytes).map_err(|e| Error::Parse {
            offset: header_start,
            what: format!("header JSON: {e}"),
        })?;
        if header.obs_dim == 0 || header.action_dim == 0 || header.n_trajectories == 0 {
            return Err(Error::InvalidInput(format!(
                "header declares degenerate dims {}x{} with {} trajectories",
                header.obs_dim, header.action_dim, header.n_trajectories
            )));
        }

        let mut trajectories = Vec::with_capacity(header.n_trajectories);
        for _ in 0..header.n_trajectories {
            let t_len = u32::from_le_bytes(r.take::<4>("trajectory length")?) as usize;
            if t_len == 0 {
                return Err(Error::Parse { offset: r.offset - 4, what: "zero-length trajectory".into() });
            }
            let mut read_block = |rows: usize, dim: usize| -> Result<Vec<Vec<T>>> {
                let mut out = Vec::with_capacity(rows);
                for _ in 0..rows {
                    let mut row = Vec::with_capacity(dim);
                    for _ in 0..dim {
                        let b = r.take::<4>("float payload")?;
                        row.push(T::from_payload(f32::from_le_bytes(b)));
                    }
                    out.push(row);
                }
                Ok(out)
            };
            let states = read_block(t_len, header.obs_dim)?;
            let actions = read_block(t_len, header.action_dim)?;
            trajectories.push(Trajectory::new(states, actions)?);
        }
        let mut tail = [0u8; 1];
        match r.inner.read(&mut tail) {
            Ok(0) => {}
            Ok(_) => {
                return Err(Error::Parse {
                    offset: r.offset,
                    what: "trailing bytes after declared payload (dims/count mismatch)".into(),
                })
            }
            Err(e) => return Err(Error::io(path.display().to_string(), e)),
        }
        Dataset::new(trajectories, header.meta)
    }
}

/// Quantizes a scalar through the f32 on-disk representation, so recorded
/// values survive a write/read cycle bit-exactly.
pub fn payload_quantize<T: Scalar>(x: T) -> T {
    T::from_payload(x.to_payload())
}

struct CountingReader<R> {
    inner: R,
    offset: u64,
}

impl<R: Read> CountingReader<R> {
    fn new(inner: R) -> Self {
        CountingReader { inner, offset: 0 }
    }

    fn take<const N: usize>(&mut self, what: &str) -> Result<[u8; N]> {
        let mut buf = [0u8; N];
        self.fill(&mut buf, what)?;
        Ok(buf)
    }

    fn take_vec(&mut self, n: usize, what: &str) -> Result<Vec<u8>> {
        let mut buf = vec![0u8; n];
        self.fill(&mut buf, what)?;
        Ok(buf)
    }

    fn fill(&mut self, buf: &mut [u8], what: &str) -> Result<()> {
        match self.inner.read_exact(buf) {
            Ok(()) => {
                self.offset += buf.len() as u64;
                Ok(())
            }
            Err(e) if e.kind() == std::io::ErrorKind::UnexpectedEof => Err(Error::Parse {
                offset: self.offset,
                what: format!("truncated while reading {what}"),
            }),
            Err(e) => Err(Error::Parse { offset: self.offset, what: format!("{what}: {e}") }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample_dataset() -> Dataset<f64> {
        let traj = Trajectory::new(
            vec![vec![0.125, -1.5], vec![0.25, 2.0]],
            vec![vec![0.5], vec![-0.75]],
        )
        .unwrap();
        Dataset::new(
            vec![traj],
            DatasetMeta { env_id: "maze".into(), preset: "low".into(), seed: 7 },
        )
        .unwrap()
    }

    #[test]
    fn roundtrip_identity() {
        let dir = std::env::temp_dir().join("adlab_data_rt");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("d.bin");
        let d = sample_dataset();
        d.write_to(&path).unwrap();
        let back = Dataset::<f64>::read_from(&path).unwrap();
        assert_eq!(d, back);
    }

    #[test]
    fn truncated_file_reports_offset() {
        let dir = std::env::temp_dir().join("adlab_data_trunc");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("d.bin");
        sample_dataset().write_to(&path).unwrap();
        let bytes = std::fs::read(&path).unwrap();
        std::fs::write(&path, &bytes[..bytes.len() - 3]).unwrap();
        match Dataset::<f64>::read_from(&path) {
            Err(Error::Parse { offset, .. }) => assert!(offset > 0),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn mismatched_action_dim_rejected() {
        let dir = std::env::temp_dir().join("adlab_data_dim");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("d.bin");
        sample_dataset().write_to(&path).unwrap();
        let mut bytes = std::fs::read(&path).unwrap();
        // Corrupt the header's action_dim from 1 to 2; payload no longer fits.
        let needle = b"\"action_dim\":1";
        let pos = bytes.windows(needle.len()).position(|w| w == needle).unwrap();
        bytes[pos + needle.len() - 1] = b'2';
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(
            Dataset::<f64>::read_from(&path),
            Err(Error::Parse { .. }) | Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn version_mismatch_detected() {
        let dir = std::env::temp_dir().join("adlab_data_ver");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("d.bin");
        sample_dataset().write_to(&path).unwrap();
        let mut bytes = std::fs::read(&path).unwrap();
        bytes[4] = 9;
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(
            Dataset::<f64>::read_from(&path),
            Err(Error::Version { found: 9, expected: DATASET_VERSION })
        ));
    }

    #[test]
    fn empty_dataset_rejected() {
        let meta = DatasetMeta { env_id: "maze".into(), preset: "low".into(), seed: 0 };
        assert!(Dataset::<f64>::new(vec![], meta).is_err());
    }

    #[test]
    fn mixed_dims_rejected() {
        let a = Trajectory::new(vec![vec![0.0]], vec![vec![0.0]]).unwrap();
        let b = Trajectory::new(vec![vec![0.0, 1.0]], vec![vec![0.0]]).unwrap();
        let meta = DatasetMeta { env_id: "maze".into(), preset: "low".into(), seed: 0 };
        assert!(Dataset::new(vec![a, b], meta).is_err());
    }

    proptest! {
        // Round trips are bit-exact for any f32-representable payload.
        #[test]
        fn roundtrip_bit_exact(raw in proptest::collection::vec(-1e6f32..1e6, 4..40), t_len in 1usize..6) {
            let dim_budget = raw.len() / (t_len * 2);
            prop_assume!(dim_budget >= 1);
            let vals: Vec<f64> = raw.iter().map(|&v| v as f64).collect();
            let states: Vec<Vec<f64>> = (0..t_len).map(|i| vec![vals[i % vals.len()], vals[(i + 1) % vals.len()]]).collect();
            let actions: Vec<Vec<f64>> = (0..t_len).map(|i| vec![vals[(i + 2) % vals.len()]]).collect();
            let d = Dataset::new(
                vec![Trajectory::new(states, actions).unwrap()],
                DatasetMeta { env_id: "push".into(), preset: "high".into(), seed: 1 },
            ).unwrap();
            let dir = std::env::temp_dir().join("adlab_data_prop");
            std::fs::create_dir_all(&dir).unwrap();
            let path = dir.join(format!("d_{t_len}.bin"));
            d.write_to(&path).unwrap();
            let back = Dataset::<f64>::read_from(&path).unwrap();
            prop_assert_eq!(d, back);
        }
    }
}
