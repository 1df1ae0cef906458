use crate::error::{Error, Result};
use crate::scalar::{Real, Ring};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanePoint<T> {
    pub x: T,
    pub y: T,
}

impl<T> PlanePoint<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }
}

/// `L_a(x, y) = (ax − y, x)`.
pub fn la_apply<T: Ring>(a: T, p: &PlanePoint<T>) -> PlanePoint<T> {
    PlanePoint {
        x: a * p.x - p.y,
        y: p.x,
    }
}

/// `Q_a(x, y) = x² − axy + y²`, preserved by `L_a`.
pub fn q_eval<T: Ring>(a: T, p: &PlanePoint<T>) -> T {
    p.x * p.x - a * p.x * p.y + p.y * p.y
}

/// Argument of the eigenvalues of `L_a`, `arccos(a / 2)`.
///
/// `L_a` has trace `a` and determinant 1, so its eigenvalues are
/// `e^{±iθ}` with `2 cos θ = a`.
pub fn rotation_angle<T: Real>(a: T) -> Result<T> {
    if !(a.abs() < T::two()) {
        return Err(Error::Domain(format!(
            "rotation angle needs |a| < 2, got {a}"
        )));
    }
    Ok((a / T::two()).acos())
}

/// Average angular advance of `L_a` iterates of `p`, measured in
/// coordinates where `Q_a` is the Euclidean norm:
/// `u = x − (a/2) y`, `v = √(1 − a²/4) y`.
pub fn rotation_number_estimate<T: Real>(a: T, p: &PlanePoint<T>, iterations: usize) -> Result<T> {
    if !(a.abs() < T::two()) {
        return Err(Error::Domain(format!(
            "rotation number needs |a| < 2, got {a}"
        )));
    }
    if iterations == 0 || (p.x == T::zero() && p.y == T::zero()) {
        return Err(Error::Domain("need a nonzero point and at least one iterate".into()));
    }
    let half = a / T::two();
    let omega = (T::one() - half * half).sqrt();
    let angle = |q: &PlanePoint<T>| (omega * q.y).atan2(q.x - half * q.y);
    let mut cur = *p;
    let mut total = T::zero();
    let mut prev = angle(&cur);
    for _ in 0..iterations {
        cur = la_apply(a, &cur);
        let next = angle(&cur);
        let mut step = next - prev;
        let (pi, tau) = (T::PI(), T::TAU());
        while step <= -pi {
            step = step + tau;
        }
        while step > pi {
            step = step - tau;
        }
        total = total + step;
        prev = next;
    }
    Ok(total / T::lit(iterations as f64))
}
