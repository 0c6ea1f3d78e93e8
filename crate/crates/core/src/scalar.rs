//! Scalar abstraction: every numeric kernel in this crate is generic over
//! [`Sample`], implemented for `f32` and `f64`.

use rand::distributions::uniform::SampleUniform;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Floating-point sample type usable throughout the crate.
///
/// `f64` is the reference precision (all oracles and tolerances are stated
/// for it); `f32` is available for hot paths and on-disk payloads.
pub trait Sample:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + num_traits::NumAssign
    + num_traits::Signed
    + SampleUniform
    + std::iter::Sum
    + std::fmt::Debug
    + std::fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Draw one standard-normal variate from `rng`.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Lossless-as-possible conversion from `f64` literals and config values.
    fn from_f64_lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 converts to any Sample type")
    }

    /// Round-trip to `f64` for reporting and serialization.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("Sample converts to f64")
    }
}

macro_rules! impl_sample {
    ($ty:ty) => {
        impl Sample for $ty {
            fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
                <StandardNormal as Distribution<$ty>>::sample(&StandardNormal, rng)
            }
        }
    };
}

impl_sample!(f32);
impl_sample!(f64);
