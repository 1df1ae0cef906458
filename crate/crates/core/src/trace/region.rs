//! Membership regions: the rank-2 character variety `V_3`, the intervals
//! `Y(a, d)`, boundary realizability, and the elliptical slices `Ē_y`.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{Real, Ring};

/// Slack used by every membership predicate.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

fn check_trace<T: Real>(what: &'static str, v: T) -> Result<()> {
    if v.abs() <= T::two() {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what,
            value: v.to_f64_lossy(),
        })
    }
}

/// `x1² + x2² + x3² − x1 x2 x3`; equals `tr[A, B] + 2` when
/// `(x1, x2, x3) = (tr A, tr B, tr AB)`.
pub fn v3_form<T: Ring>(x1: T, x2: T, x3: T) -> T {
    x1 * x1 + x2 * x2 + x3 * x3 - x1 * x2 * x3
}

/// Whether `(x1, x2, x3)` are the traces `(tr A, tr B, tr AB)` of some pair
/// in SU(2): all in `[−2, 2]` and `v3_form ≤ 4`.
pub fn v3_contains<T: Real>(x1: T, x2: T, x3: T) -> bool {
    let tol = T::lit(MEMBERSHIP_TOL);
    let bound = T::two() + tol;
    x1.abs() <= bound
        && x2.abs() <= bound
        && x3.abs() <= bound
        && v3_form(x1, x2, x3) <= T::four() + tol
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceInterval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Real> TraceInterval<T> {
    pub fn contains(&self, y: T) -> bool {
        let tol = T::lit(MEMBERSHIP_TOL);
        y >= self.lo - tol && y <= self.hi + tol
    }

    /// `max(lo) − min(hi)`; non-positive exactly when the intervals meet.
    pub fn gap(&self, other: &Self) -> T {
        self.lo.max(other.lo) - self.hi.min(other.hi)
    }

    pub fn intersection(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Some(Self { lo, hi })
        } else if lo - hi <= T::lit(MEMBERSHIP_TOL) {
            let mid = (lo + hi) / T::two();
            Some(Self { lo: mid, hi: mid })
        } else {
            None
        }
    }

    pub fn width(&self) -> T {
        self.hi - self.lo
    }
}

/// `Y(a, d)`: the values `y` with `(a, d, y) ∈ V_3`, with endpoints
/// `(ad ± √((4 − a²)(4 − d²))) / 2`.
pub fn y_interval<T: Real>(a: T, d: T) -> Result<TraceInterval<T>> {
    check_trace("a", a)?;
    check_trace("d", d)?;
    let four = T::four();
    let s = ((four - a * a) * (four - d * d)).max(T::zero()).sqrt();
    let two = T::two();
    Ok(TraceInterval {
        lo: ((a * d - s) / two).max(-two),
        hi: ((a * d + s) / two).min(two),
    })
}

/// `E = 2(a² + b² + c² + d²) − abcd − 16`, so that
/// `Δ = E² − (4 − a²)(4 − b²)(4 − c²)(4 − d²)`.
pub fn delta_base<T: Ring>(a: T, b: T, c: T, d: T) -> T {
    T::two() * (a * a + b * b + c * c + d * d) - a * b * c * d - T::small(16)
}

/// `Δ(a, b, c, d) = (2(a² + b² + c² + d²) − abcd − 16)² − Π(4 − t²)`.
pub fn delta<T: Ring>(a: T, b: T, c: T, d: T) -> T {
    let e = delta_base(a, b, c, d);
    let four = T::four();
    e * e - (four - a * a) * (four - b * b) * (four - c * c) * (four - d * d)
}

/// Realizability of boundary traces through the discriminant.
///
/// `Y(a,d) ∩ Y(b,c) ≠ ∅` is equivalent to
/// `|ad − bc| ≤ √((4−a²)(4−d²)) + √((4−b²)(4−c²))`; squaring twice turns this
/// into `E ≤ 0 or Δ ≤ 0`. The branch `E < 0 < Δ` is realizable (for
/// instance `(0, 0, 0, 1)` has `Δ = 4`), so `Δ ≤ 0` alone is not the right
/// test.
pub fn realizable<T: Real>(a: T, b: T, c: T, d: T) -> bool {
    let tol = T::lit(MEMBERSHIP_TOL);
    delta_base(a, b, c, d) <= tol || delta(a, b, c, d) <= tol
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealizabilityMethod {
    Discriminant,
    Interval,
}

impl FromStr for RealizabilityMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "discriminant" => Ok(Self::Discriminant),
            "interval" => Ok(Self::Interval),
            other => Err(Error::InvalidMethod(other.to_string())),
        }
    }
}

/// Whether `(a, b, c, d) = (tr X_1, tr X_2, tr X_3, tr X_0)` occurs for some
/// rank-3 representation.
pub fn boundary_realizable<T: Real>(
    a: T,
    b: T,
    c: T,
    d: T,
    method: RealizabilityMethod,
) -> Result<bool> {
    for (what, v) in [("a", a), ("b", b), ("c", c), ("d", d)] {
        check_trace(what, v)?;
    }
    Ok(match method {
        RealizabilityMethod::Discriminant => realizable(a, b, c, d),
        RealizabilityMethod::Interval => {
            y_interval(a, d)?.gap(&y_interval(b, c)?) <= T::lit(MEMBERSHIP_TOL)
        }
    })
}

/// `Ē_y = {(b, c) : b² + c² + y² − bcy ≤ 4}`, the `(b, c)` with
/// `y ∈ Y(b, c)`. For `|y| = 2` it is the segment `c = sign(y) b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipseRegion<T> {
    y: T,
}

impl<T: Real> EllipseRegion<T> {
    pub fn new(y: T) -> Result<Self> {
        check_trace("y", y)?;
        Ok(Self { y })
    }

    pub fn level(&self) -> T {
        self.y
    }

    pub fn is_degenerate(&self) -> bool {
        self.y.abs() == T::two()
    }

    pub fn form(&self, b: T, c: T) -> T {
        v3_form(b, c, self.y)
    }

    pub fn contains(&self, b: T, c: T) -> bool {
        let tol = T::lit(MEMBERSHIP_TOL);
        if self.is_degenerate() {
            let sign = self.y.signum();
            return b.abs() <= T::two() + tol && (c - sign * b).abs() <= tol;
        }
        self.form(b, c) <= T::four() + tol
    }

    /// Boundary point at parameter `s`:
    /// `b = √(4 − y²) cos s + y sin s`, `c = 2 sin s`.
    pub fn boundary_point(&self, s: T) -> (T, T) {
        let r = (T::four() - self.y * self.y).max(T::zero()).sqrt();
        let c = T::two() * s.sin();
        (r * s.cos() + self.y * s.sin(), c)
    }

    /// Points where `∂Ē_y` touches the square `[−2, 2]²`:
    /// `(2, y), (y, 2), (−2, −y), (−y, −2)`.
    pub fn tangency_points(&self) -> Result<[(T, T); 4]> {
        if self.is_degenerate() {
            return Err(Error::OutOfRange {
                what: "non-degenerate level y",
                value: self.y.to_f64_lossy(),
            });
        }
        let (two, y) = (T::two(), self.y);
        Ok([(two, y), (y, two), (-two, -y), (-y, -two)])
    }
}

pub fn ellipse_contains<T: Real>(y: T, b: T, c: T) -> Result<bool> {
    Ok(EllipseRegion::new(y)?.contains(b, c))
}

pub fn ellipse_tangency_points<T: Real>(y: T) -> Result<[(T, T); 4]> {
    EllipseRegion::new(y)?.tangency_points()
}
