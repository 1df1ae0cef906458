use crate::error::{Error, Result};
use crate::free_group::{boundary_word, Representation, Word};
use crate::scalar::{Real, Ring};

/// `(a, b, c, d, x, y, z)` = traces of `A, B, C, D, AB, BC, CA` where
/// `A, B, C` are the free generators of `F_3` and `D = C⁻¹B⁻¹A⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceCoords3<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Copy> TraceCoords3<T> {
    pub fn from_array(v: [T; 7]) -> Self {
        Self {
            a: v[0],
            b: v[1],
            c: v[2],
            d: v[3],
            x: v[4],
            y: v[5],
            z: v[6],
        }
    }

    pub fn to_array(&self) -> [T; 7] {
        [self.a, self.b, self.c, self.d, self.x, self.y, self.z]
    }

    pub fn splat(v: T) -> Self {
        Self::from_array([v; 7])
    }
}

impl<T: Real> TraceCoords3<T> {
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.to_array()
            .iter()
            .zip(other.to_array().iter())
            .map(|(p, q)| (*p - *q).abs())
            .fold(T::zero(), T::max)
    }

    pub fn in_cube(&self) -> bool {
        self.to_array().iter().all(|v| v.abs() <= T::two())
    }
}

/// Seven trace coordinates of a rank-3 representation.
pub fn trace_coords3<T: Real>(rho: &Representation<T>) -> Result<TraceCoords3<T>> {
    if rho.rank() != 3 {
        return Err(Error::RankMismatch {
            expected: 3,
            found: rho.rank(),
        });
    }
    let (a, b, c) = (rho.image(1), rho.image(2), rho.image(3));
    let ab = a.mul(b);
    let d = ab.mul(c).inverse();
    Ok(TraceCoords3 {
        a: a.trace(),
        b: b.trace(),
        c: c.trace(),
        d: d.trace(),
        x: ab.trace(),
        y: b.mul(c).trace(),
        z: c.mul(a).trace(),
    })
}

/// Left side minus right side of the defining relation
///
/// `x² + y² + z² + xyz = (ab+cd)x + (ad+bc)y + (ac+bd)z + 4 − a² − b² − c² − d² − abcd`.
pub fn fourholes_residual<T: Ring>(t: &TraceCoords3<T>) -> T {
    let TraceCoords3 { a, b, c, d, x, y, z } = *t;
    let lhs = x * x + y * y + z * z + x * y * z;
    let rhs = (a * b + c * d) * x + (a * d + b * c) * y + (a * c + b * d) * z + T::four()
        - a * a
        - b * b
        - c * c
        - d * d
        - a * b * c * d;
    lhs - rhs
}

/// `(tr ρ(X_0), tr ρ(X_1), ..., tr ρ(X_n))`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryTraces<T> {
    pub values: Vec<T>,
}

impl<T: Real> BoundaryTraces<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::RankTooSmall(values.len().saturating_sub(1)));
        }
        if let Some(v) = values.iter().find(|v| !(v.abs() <= T::two())) {
            return Err(Error::OutOfRange {
                what: "boundary trace",
                value: v.to_f64_lossy(),
            });
        }
        Ok(Self { values })
    }

    pub fn rank(&self) -> usize {
        self.values.len() - 1
    }

    /// `(a, b, c, d) = (tr X_1, tr X_2, tr X_3, tr X_0)` for rank 3.
    pub fn quadruple(&self) -> Option<[T; 4]> {
        match self.values.as_slice() {
            &[d, a, b, c] => Some([a, b, c, d]),
            _ => None,
        }
    }

    pub fn from_quadruple(a: T, b: T, c: T, d: T) -> Result<Self> {
        Self::new(vec![d, a, b, c])
    }

    pub fn sorted(&self) -> Vec<T> {
        let mut v = self.values.clone();
        v.sort_by(|p, q| p.partial_cmp(q).unwrap_or(std::cmp::Ordering::Equal));
        v
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(p, q)| (*p - *q).abs())
            .fold(T::zero(), T::max)
    }
}

pub fn t_boundary<T: Real>(rho: &Representation<T>) -> Result<BoundaryTraces<T>> {
    let n = rho.rank();
    let x0 = boundary_word(n)?;
    let mut values = Vec::with_capacity(n + 1);
    values.push(rho.trace_of(&x0)?);
    values.extend(rho.images().iter().map(|g| g.trace()));
    Ok(BoundaryTraces { values })
}

/// `tr ρ([X_1, X_2])` for a rank-2 representation.
pub fn kappa<T: Real>(rho: &Representation<T>) -> Result<T> {
    if rho.rank() != 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            found: rho.rank(),
        });
    }
    Ok(rho.image(1).commutator(rho.image(2)).trace())
}

/// Trace of a word given in the letter syntax; convenience for tests and
/// statistics.
pub fn trace_of_literal<T: Real>(rho: &Representation<T>, literal: &str) -> Result<T> {
    rho.trace_of(&Word::parse(rho.rank(), literal)?)
}
