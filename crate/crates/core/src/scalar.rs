//! Scalar abstraction for all cost metrics and learning math.
//!
//! Everything that carries physical units (cycles, picojoules, square
//! micrometers) or probability mass is generic over [`Real`], so the whole
//! stack can be instantiated with `f32` or `f64`. The crate-root aliases pin
//! `f64`, which is what the CLI and the test suite use.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};
use serde::{de::DeserializeOwned, Serialize};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float
    + FromPrimitive
    + ToPrimitive
    + Default
    + Debug
    + Display
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from `f64`, for literals and RNG draws.
    fn from_f(v: f64) -> Self {
        Self::from_f64(v).expect("f64 conversion")
    }

    /// Conversion from an unsigned 128-bit count (tile products, MAC counts).
    /// Counts beyond the mantissa round; that is acceptable for cost metrics.
    fn from_count(v: u128) -> Self {
        Self::from_u128(v).unwrap_or_else(Self::infinity)
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("to_f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}
