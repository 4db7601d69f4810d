//! Scalar abstraction: the numeric code is generic over `f32`/`f64`.

use num_traits::{FromPrimitive, ToPrimitive};

/// Floating-point scalar usable throughout the library.
///
/// `nalgebra::RealField` supplies the transcendental and linear-algebra
/// operations; the num-traits bounds supply conversions from literals and
/// indices. `num_traits::Float` is deliberately not a supertrait: its methods
/// shadow `RealField`'s and would make every `x.sqrt()` ambiguous.
pub trait Real:
    nalgebra::RealField + FromPrimitive + ToPrimitive + Copy + Default + Send + Sync
{
}

impl<T> Real for T where
    T: nalgebra::RealField + FromPrimitive + ToPrimitive + Copy + Default + Send + Sync
{
}

/// Shorthand for converting an `f64` literal into the working scalar.
#[inline]
pub fn cst<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal must convert to the scalar type")
}

/// Converts an index/count into the working scalar.
#[inline]
pub fn cst_usize<T: Real>(n: usize) -> T {
    T::from_usize(n).expect("usize must convert to the scalar type")
}
