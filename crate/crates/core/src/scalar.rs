//! Scalar abstraction and the tolerance table.
//!
//! Every numerical routine in the crate is generic over [`Real`]. The
//! tolerances used for validation live here, one set per scalar type, so
//! that f32 runs get thresholds matched to single precision.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Tolerances for f64, the reference precision.
pub mod f64_tol {
    /// Hermiticity, unit trace, positivity and unitarity-of-structure checks.
    pub const STRUCTURAL: f64 = 1e-10;
    /// Comparisons of derived quantities (unitarity of propagators, spectra).
    pub const DERIVED: f64 = 1e-9;
    /// Convergence of iterative kernels and radicand floors.
    pub const ACCUMULATION: f64 = 1e-12;
}

/// Tolerances for f32.
pub mod f32_tol {
    pub const STRUCTURAL: f32 = 1e-4;
    pub const DERIVED: f32 = 1e-3;
    pub const ACCUMULATION: f32 = 1e-5;
}

/// Real floating-point scalar usable by every kernel in the crate.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// See [`f64_tol::STRUCTURAL`].
    const STRUCTURAL: Self;
    /// See [`f64_tol::DERIVED`].
    const DERIVED: Self;
    /// See [`f64_tol::ACCUMULATION`].
    const ACCUMULATION: Self;

    /// Converts an f64 literal. Every literal used by the crate is finite
    /// and in range for both supported types.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const STRUCTURAL: f64 = f64_tol::STRUCTURAL;
    const DERIVED: f64 = f64_tol::DERIVED;
    const ACCUMULATION: f64 = f64_tol::ACCUMULATION;
}

impl Real for f32 {
    const STRUCTURAL: f32 = f32_tol::STRUCTURAL;
    const DERIVED: f32 = f32_tol::DERIVED;
    const ACCUMULATION: f32 = f32_tol::ACCUMULATION;
}

/// Shorthand for a complex number over `T`.
#[inline]
pub fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

/// Complex number with zero imaginary part.
#[inline]
pub fn re<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}
