use super::alpha::Mat2;
use crate::scalar::{Real, Ring};

/// Point `(x, b, c, z)` of a level set of `(a, d, y)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiberPoint4<T> {
    pub x: T,
    pub b: T,
    pub c: T,
    pub z: T,
}

impl<T: Copy> FiberPoint4<T> {
    pub fn new(x: T, b: T, c: T, z: T) -> Self {
        Self { x, b, c, z }
    }

    pub fn from_array(v: [T; 4]) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    pub fn to_array(&self) -> [T; 4] {
        [self.x, self.b, self.c, self.z]
    }
}

impl<T: Real> FiberPoint4<T> {
    pub fn norm(&self) -> T {
        self.to_array()
            .iter()
            .fold(T::zero(), |acc, &v| acc + v * v)
            .sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let (p, q) = (self.to_array(), other.to_array());
        (0..4).fold(T::zero(), |m, i| m.max((p[i] - q[i]).abs()))
    }
}

pub const EQUILIBRIUM_TOL: f64 = 1e-12;

/// Linear field generating the one-parameter group through `alpha_star`:
/// `M ⊕ M` with `M = [[a0/2, −1], [1, −a0/2]]` on `(x, b)` and `(c, z)`.
pub fn field_a<T: Ring>(a0: T, p: &FiberPoint4<T>) -> FiberPoint4<T> {
    let h = a0 / T::two();
    FiberPoint4 {
        x: h * p.x - p.b,
        b: p.x - h * p.b,
        c: h * p.c - p.z,
        z: p.c - h * p.z,
    }
}

/// `ω = √(1 − a0²/4)`. Zero at `|a0| = 2`, NaN beyond.
pub fn angular_frequency<T: Real>(a0: T) -> T {
    let h = a0 / T::two();
    (T::one() - h * h).sqrt()
}

/// Time after which the flow returns to the identity, if it does.
pub fn period<T: Real>(a0: T) -> Option<T> {
    let w = angular_frequency(a0);
    (w > T::zero()).then(|| T::TAU() / w)
}

/// `exp(tM)`. Since `M² = −ω² I` this is `cos(ωt) I + sin(ωt)/ω M`,
/// with the hyperbolic form for `|a0| > 2`.
pub fn flow_matrix<T: Real>(a0: T, t: T) -> Mat2<T> {
    let h = a0 / T::two();
    let w2 = T::one() - h * h;
    let wt2 = w2 * t * t;
    let (c, s) = if wt2.abs() < T::lit(1e-8) {
        // Taylor in ω²t² keeps the |a0| ≈ 2 regime smooth.
        let c = T::one() - wt2 / T::two() + wt2 * wt2 / T::lit(24.0);
        let s = t * (T::one() - wt2 / T::lit(6.0) + wt2 * wt2 / T::lit(120.0));
        (c, s)
    } else if w2 > T::zero() {
        let w = w2.sqrt();
        ((w * t).cos(), (w * t).sin() / w)
    } else {
        let k = (-w2).sqrt();
        ((k * t).cosh(), (k * t).sinh() / k)
    };
    [[c + s * h, -s], [s, c - s * h]]
}

/// Time-`t` map of `field_a`.
pub fn flow<T: Real>(a0: T, t: T, p: &FiberPoint4<T>) -> FiberPoint4<T> {
    let m = flow_matrix(a0, t);
    FiberPoint4 {
        x: m[0][0] * p.x + m[0][1] * p.b,
        b: m[1][0] * p.x + m[1][1] * p.b,
        c: m[0][0] * p.c + m[0][1] * p.z,
        z: m[1][0] * p.c + m[1][1] * p.z,
    }
}

/// Time at which the flow equals `alpha_star` on the level set:
/// `arccos(a0/2) / ω`.
pub fn alpha_time<T: Real>(a0: T) -> Option<T> {
    let w = angular_frequency(a0);
    (w > T::zero()).then(|| (a0 / T::two()).acos() / w)
}

pub fn is_equilibrium<T: Real>(a0: T, p: &FiberPoint4<T>) -> bool {
    field_a(a0, p).norm() < T::lit(EQUILIBRIUM_TOL)
}
