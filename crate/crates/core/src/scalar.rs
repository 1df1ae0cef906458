//! Scalar abstractions.
//!
//! [`Ring`] is enough for every polynomial map in the crate; [`Real`] adds
//! the transcendental operations needed by quaternion normalization, flows
//! and sampling.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{Float, FloatConst, FromPrimitive, Num};

/// Exact rationals used to check polynomial identities without roundoff.
pub type Rational = num_rational::Ratio<i128>;

/// Commutative ring with unit, copyable and signed.
pub trait Ring: Num + Copy + Neg<Output = Self> + Debug {
    /// Small non-negative integer constant.
    fn small(k: u8) -> Self {
        let mut acc = Self::zero();
        for _ in 0..k {
            acc = acc + Self::one();
        }
        acc
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn four() -> Self {
        let two = Self::two();
        two + two
    }
}

impl<T: Num + Copy + Neg<Output = T> + Debug> Ring for T {}

/// Floating-point scalar.
pub trait Real: Ring + Float + FloatConst + FromPrimitive + Display + Send + Sync + 'static {
    /// Accepted deviation of a quaternion norm from 1.
    const NORM_TOL: Self;

    /// Converts an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const NORM_TOL: f64 = 1e-12;
}

impl Real for f32 {
    const NORM_TOL: f32 = 1e-5;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_constants() {
        assert_eq!(<i64 as Ring>::small(5), 5);
        assert_eq!(Rational::four(), Rational::from_integer(4));
        assert_eq!(f32::two(), 2.0);
    }
}
