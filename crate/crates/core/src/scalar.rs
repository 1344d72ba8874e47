//! Scalar abstraction shared by every kernel.

use std::fmt::{Debug, Display, LowerExp};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point type the kernels are generic over (`f32` or `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal. Every supported type can represent (or round) any `f64`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Converts a small integer count.
    #[inline]
    fn of(n: i64) -> Self {
        Self::from_i64(n).expect("integer representable")
    }

    /// Relative tolerance used by the iterative kernels: `1e-15`, floored at a few ulps.
    #[inline]
    fn kernel_tol() -> Self {
        Self::lit(1e-15).max(Self::epsilon() * Self::lit(4.0))
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Builds a complex value from two `f64` literals.
#[inline]
pub fn cplx<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

/// Lifts a real scalar into the complex plane.
#[inline]
pub fn real<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// `true` when both components are finite.
#[inline]
pub fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Returns `Some(n)` when `z` is exactly the integer `n`.
pub fn as_integer<T: Real>(z: Complex<T>) -> Option<i64> {
    if z.im != T::zero() || z.re.fract() != T::zero() {
        return None;
    }
    z.re.to_i64()
}
