//! SU(2) as the group of unit quaternions.
//!
//! `w + x i + y j + z k` with `w² + x² + y² + z² = 1`. The trace of the
//! corresponding 2×2 unitary matrix is `2w`, and the inverse is the
//! quaternion conjugate.

use std::fmt;
use std::ops::{Mul, Neg};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupElement<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> GroupElement<T> {
    /// Validated constructor; the components must already have unit norm.
    pub fn new(w: T, x: T, y: T, z: T) -> Result<Self> {
        let g = Self { w, x, y, z };
        let norm = g.norm();
        if (norm - T::one()).abs() > T::NORM_TOL || !norm.is_finite() {
            return Err(Error::NotUnit {
                norm: norm.to_f64_lossy(),
            });
        }
        Ok(g)
    }

    /// Projects an arbitrary nonzero quaternion onto the unit sphere.
    pub fn normalized(w: T, x: T, y: T, z: T) -> Result<Self> {
        let n = (w * w + x * x + y * y + z * z).sqrt();
        if !(n > T::zero()) || !n.is_finite() {
            return Err(Error::NotUnit {
                norm: n.to_f64_lossy(),
            });
        }
        Ok(Self {
            w: w / n,
            x: x / n,
            y: y / n,
            z: z / n,
        })
    }

    pub fn identity() -> Self {
        Self {
            w: T::one(),
            x: T::zero(),
            y: T::zero(),
            z: T::zero(),
        }
    }

    pub fn i() -> Self {
        Self {
            w: T::zero(),
            x: T::one(),
            y: T::zero(),
            z: T::zero(),
        }
    }

    pub fn j() -> Self {
        Self {
            w: T::zero(),
            x: T::zero(),
            y: T::one(),
            z: T::zero(),
        }
    }

    pub fn k() -> Self {
        Self {
            w: T::zero(),
            x: T::zero(),
            y: T::zero(),
            z: T::one(),
        }
    }

    pub fn components(&self) -> [T; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn norm(&self) -> T {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Quaternion product, renormalized.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b, c, d) = (self.w, self.x, self.y, self.z);
        let (e, f, g, h) = (rhs.w, rhs.x, rhs.y, rhs.z);
        let w = a * e - b * f - c * g - d * h;
        let x = a * f + b * e + c * h - d * g;
        let y = a * g - b * h + c * e + d * f;
        let z = a * h + b * g - c * f + d * e;
        let n = (w * w + x * x + y * y + z * z).sqrt();
        Self {
            w: w / n,
            x: x / n,
            y: y / n,
            z: z / n,
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            w: self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    /// `2w`, clamped into `[-2, 2]` against the last ulp of drift.
    pub fn trace(&self) -> T {
        let two = T::two();
        (two * self.w).max(-two).min(two)
    }

    /// `g h g⁻¹ h⁻¹`.
    pub fn commutator(&self, h: &Self) -> Self {
        self.mul(h).mul(&self.inverse()).mul(&h.inverse())
    }

    /// `g self g⁻¹`.
    pub fn conjugated_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    /// Euclidean distance in R⁴.
    pub fn distance(&self, other: &Self) -> T {
        let d = [
            self.w - other.w,
            self.x - other.x,
            self.y - other.y,
            self.z - other.z,
        ];
        d.iter().fold(T::zero(), |acc, &v| acc + v * v).sqrt()
    }

    /// Imaginary part as a 3-vector.
    pub fn axis(&self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    pub fn cast<U: Real>(&self) -> GroupElement<U> {
        let f = |v: T| U::lit(v.to_f64_lossy());
        GroupElement {
            w: f(self.w),
            x: f(self.x),
            y: f(self.y),
            z: f(self.z),
        }
    }
}

impl<T: Real> Mul for &GroupElement<T> {
    type Output = GroupElement<T>;

    fn mul(self, rhs: Self) -> GroupElement<T> {
        GroupElement::mul(self, rhs)
    }
}

impl<T: Real> Neg for GroupElement<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            w: -self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

impl<T: Real> fmt::Display for GroupElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

/// Deterministic random stream.
///
/// ChaCha8 keyed by `seed` (expanded with `seed_from_u64`) with the ChaCha
/// stream counter set to `stream`. Distinct stream ids give independent
/// sequences for the same seed, so parallel walkers never share state.
#[derive(Clone, Debug)]
pub struct RngStream {
    seed: u64,
    stream: u64,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { seed, stream, rng }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Fresh stream with the same seed and a different id.
    pub fn fork(&self, stream: u64) -> Self {
        Self::new(self.seed, stream)
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        // 53 random mantissa bits.
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform integer in `0..n`.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        // Lemire's multiply-shift; the bias at these sizes is below 2⁻⁵⁰.
        ((self.rng.next_u64() as u128 * n as u128) >> 64) as usize
    }

    pub fn normal(&mut self) -> f64 {
        StandardNormal.sample(&mut self.rng)
    }

    /// Uniform point on the unit 2-sphere.
    pub fn unit_vector3(&mut self) -> [f64; 3] {
        loop {
            let v = [self.normal(), self.normal(), self.normal()];
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            if n > 1e-12 {
                return [v[0] / n, v[1] / n, v[2] / n];
            }
        }
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.rng.fill_bytes(dest)
    }
}

/// Haar-distributed element: four standard normals projected to S³.
pub fn haar_sample<T: Real>(rng: &mut RngStream) -> GroupElement<T> {
    loop {
        let v = [rng.normal(), rng.normal(), rng.normal(), rng.normal()];
        let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n > 1e-12 {
            return GroupElement {
                w: T::lit(v[0] / n),
                x: T::lit(v[1] / n),
                y: T::lit(v[2] / n),
                z: T::lit(v[3] / n),
            };
        }
    }
}

/// Uniform element of the conjugacy class `tr⁻¹(tau)`.
///
/// The real part is set to `tau / 2` exactly, so the trace of the result is
/// `tau` to the last bit.
pub fn sample_with_trace<T: Real>(tau: T, rng: &mut RngStream) -> Result<GroupElement<T>> {
    let two = T::two();
    if !(tau.abs() <= two) {
        return Err(Error::OutOfRange {
            what: "trace",
            value: tau.to_f64_lossy(),
        });
    }
    let w = tau / two;
    let r = (T::one() - w * w).max(T::zero()).sqrt();
    let u = rng.unit_vector3();
    Ok(GroupElement {
        w,
        x: r * T::lit(u[0]),
        y: r * T::lit(u[1]),
        z: r * T::lit(u[2]),
    })
}

/// Unit quaternion `q` with `q u q⁻¹ = v` for unit 3-vectors `u`, `v`.
pub fn rotation_between<T: Real>(u: [T; 3], v: [T; 3]) -> GroupElement<T> {
    let dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    let cross = [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ];
    let w = T::one() + dot;
    if w > T::lit(1e-9) {
        return GroupElement::normalized(w, cross[0], cross[1], cross[2])
            .unwrap_or_else(|_| GroupElement::identity());
    }
    // Antipodal: half turn about any axis orthogonal to u.
    let pick = if u[0].abs() < T::lit(0.9) {
        [T::one(), T::zero(), T::zero()]
    } else {
        [T::zero(), T::one(), T::zero()]
    };
    let axis = [
        u[1] * pick[2] - u[2] * pick[1],
        u[2] * pick[0] - u[0] * pick[2],
        u[0] * pick[1] - u[1] * pick[0],
    ];
    GroupElement::normalized(T::zero(), axis[0], axis[1], axis[2])
        .unwrap_or_else(|_| GroupElement::identity())
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = GroupElement<f64>;

    fn close(a: &G, b: &G, tol: f64) -> bool {
        a.distance(b) < tol
    }

    #[test]
    fn quaternion_units() {
        assert_eq!(&G::i() * &G::j(), G::k());
        let g = G::normalized(0.3, -0.1, 0.5, 0.2).unwrap();
        assert!(close(&(&G::identity() * &g), &g, 1e-15));
        assert_eq!(G::identity().inverse(), G::identity());
        assert_eq!(G::i().inverse(), -G::i());
    }

    #[test]
    fn traces() {
        assert_eq!(G::identity().trace(), 2.0);
        assert_eq!((-G::identity()).trace(), -2.0);
        assert_eq!(G::i().trace(), 0.0);
    }

    #[test]
    fn commutators() {
        let g = G::normalized(0.3, -0.1, 0.5, 0.2).unwrap();
        assert!(close(&g.commutator(&g), &G::identity(), 1e-15));
        assert!(close(&g.commutator(&G::identity()), &G::identity(), 1e-15));
        assert!(close(&G::i().commutator(&G::j()), &(-G::identity()), 1e-15));
    }

    #[test]
    fn construction_validates_norm() {
        assert!(G::new(1.0, 0.0, 0.0, 0.0).is_ok());
        assert!(matches!(G::new(1.0, 0.1, 0.0, 0.0), Err(Error::NotUnit { .. })));
        assert!(G::normalized(0.0, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn stream_determinism() {
        let mut a = RngStream::new(7, 0);
        let mut b = RngStream::new(7, 0);
        let mut c = RngStream::new(7, 1);
        let sa: Vec<G> = (0..100).map(|_| haar_sample(&mut a)).collect();
        let sb: Vec<G> = (0..100).map(|_| haar_sample(&mut b)).collect();
        let sc: Vec<G> = (0..100).map(|_| haar_sample(&mut c)).collect();
        assert_eq!(sa, sb);
        assert_ne!(sa, sc);
    }

    #[test]
    fn prescribed_trace_classes() {
        let mut rng = RngStream::new(1, 0);
        assert_eq!(sample_with_trace(2.0, &mut rng).unwrap(), G::identity());
        assert_eq!(sample_with_trace(-2.0, &mut rng).unwrap(), -G::identity());
        let g: G = sample_with_trace(0.0, &mut rng).unwrap();
        assert_eq!(g.w, 0.0);
        assert!((g.norm() - 1.0).abs() < 1e-15);
        for _ in 0..1000 {
            let tau = rng.uniform_in(-2.0, 2.0);
            let g: G = sample_with_trace(tau, &mut rng).unwrap();
            assert_eq!(g.trace(), tau);
        }
        assert!(sample_with_trace(2.5, &mut rng).is_err());
        assert!(sample_with_trace(f64::NAN, &mut rng).is_err());
    }

    #[test]
    fn rotation_between_maps_axes() {
        let mut rng = RngStream::new(3, 0);
        for _ in 0..200 {
            let u = rng.unit_vector3();
            let v = rng.unit_vector3();
            let q = rotation_between(u, v);
            let pu = G { w: 0.0, x: u[0], y: u[1], z: u[2] };
            let r = pu.conjugated_by(&q);
            for (a, b) in r.axis().iter().zip(v.iter()) {
                assert!((a - b).abs() < 1e-12);
            }
        }
        let u = [0.0, 0.0, 1.0];
        let q = rotation_between(u, [0.0, 0.0, -1.0]);
        let r = G::k().conjugated_by(&q);
        assert!(close(&r, &(-G::k()), 1e-12));
    }

    #[test]
    fn single_precision_instantiation() {
        let g = GroupElement::<f32>::i().mul(&GroupElement::<f32>::j());
        assert_eq!(g, GroupElement::<f32>::k());
        let mut rng = RngStream::new(2, 0);
        let h: GroupElement<f32> = haar_sample(&mut rng);
        assert!((h.norm() - 1.0).abs() < 1e-6);
    }
}
