//! Scalar abstraction so the numeric core runs at f32 or f64.

use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Floating-point element type for tensors, scores and losses.
pub trait Scalar:
    num_traits::Float + num_traits::NumAssignOps + Sum + Debug + Display + Send + Sync + 'static
{
    fn from_f64(v: f64) -> Self {
        <Self as num_traits::NumCast>::from(v).expect("f64 conversion")
    }

    fn to_f64(self) -> f64 {
        <Self as num_traits::ToPrimitive>::to_f64(&self).expect("f64 conversion")
    }

    fn from_usize(v: usize) -> Self {
        Self::from_f64(v as f64)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
