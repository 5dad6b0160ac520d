//! Scalar abstraction shared by every amplitude computation.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real field the simulator is generic over.
///
/// Amplitudes are `Complex<T>`; roots of unity are irrational so only
/// floating point types implement this.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Tolerance for norm and unitarity checks at this precision.
    fn unit_tolerance() -> Self;

    /// Tolerance for comparing amplitudes produced along different paths.
    fn cross_tolerance() -> Self;

    fn from_usize_lossy(v: usize) -> Self {
        Self::from_usize(v).expect("usize is representable as a float")
    }

    fn from_f64_lossy(v: f64) -> Self {
        Self::from_f64(v).expect("f64 is representable as a float")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn unit_tolerance() -> Self {
        1e-12
    }

    fn cross_tolerance() -> Self {
        1e-10
    }
}

impl Real for f32 {
    fn unit_tolerance() -> Self {
        1e-5
    }

    fn cross_tolerance() -> Self {
        1e-4
    }
}

/// Amplitude type for a given scalar.
pub type Amp<T> = Complex<T>;

pub(crate) fn amp_is_finite<T: Real>(a: &Amp<T>) -> bool {
    a.re.is_finite() && a.im.is_finite()
}

/// Sum of squared magnitudes, accumulated in index order.
pub fn norm_sqr<T: Real>(amps: &[Amp<T>]) -> T {
    amps.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr())
}

/// `⟨lhs|rhs⟩`, conjugate-linear in the first argument.
pub fn inner<T: Real>(lhs: &[Amp<T>], rhs: &[Amp<T>]) -> Amp<T> {
    debug_assert_eq!(lhs.len(), rhs.len());
    lhs.iter()
        .zip(rhs)
        .fold(Amp::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b)
}

/// L2 distance between two amplitude vectors of equal length.
pub fn l2_distance<T: Real>(lhs: &[Amp<T>], rhs: &[Amp<T>]) -> T {
    debug_assert_eq!(lhs.len(), rhs.len());
    lhs.iter()
        .zip(rhs)
        .fold(T::zero(), |acc, (a, b)| acc + (a - b).norm_sqr())
        .sqrt()
}

/// Largest per-component deviation between two amplitude vectors.
pub fn max_abs_diff<T: Real>(lhs: &[Amp<T>], rhs: &[Amp<T>]) -> T {
    debug_assert_eq!(lhs.len(), rhs.len());
    lhs.iter()
        .zip(rhs)
        .fold(T::zero(), |acc, (a, b)| acc.max((a - b).norm()))
}
