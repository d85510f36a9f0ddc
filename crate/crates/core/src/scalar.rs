//! Floating-point scalar abstraction: f32 or f64.

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Scalar type for all numeric kernels.
///
/// Everything downstream of configuration (chunks, denoiser weights, the ODE
/// sampler, environments) is generic over this trait; `f64` is the default
/// pipeline scalar and the one the acceptance tolerances are stated for.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + std::iter::Sum
    + std::fmt::Debug
    + std::fmt::Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal; panics on values outside the type's range,
    /// which cannot happen for the finite constants used in this crate.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }

    /// Narrows to the f32 on-disk payload representation.
    #[inline]
    fn to_payload(self) -> f32 {
        self.as_f64() as f32
    }

    /// Widens from the f32 on-disk payload representation (exact for both
    /// `f32` and `f64`).
    #[inline]
    fn from_payload(v: f32) -> Self {
        Self::from_f32(v).expect("f32 widens exactly")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn payload_widening_is_exact() {
        let xs = [0.1f32, -3.25, 1e-20, 6.5e12, f32::MIN_POSITIVE];
        for &x in &xs {
            assert_eq!(f64::from_payload(x) as f32, x);
            assert_eq!(f32::from_payload(x), x);
        }
    }

    #[test]
    fn lit_roundtrip() {
        assert_eq!(f64::lit(0.25), 0.25);
        assert_eq!(f32::lit(0.25), 0.25f32);
    }
}
