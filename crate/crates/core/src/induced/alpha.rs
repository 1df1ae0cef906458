use super::flow::FiberPoint4;
use crate::scalar::Ring;
use crate::trace::TraceCoords3;

pub type Mat2<T> = [[T; 2]; 2];
pub type Mat4<T> = [[T; 4]; 4];

/// Induced map of `alpha: A ↦ A, B ↦ BA⁻¹, C ↦ AC`:
/// `(a, b, c, d, x, y, z) ↦ (a, x, ac − z, d, ax − b, y, c)`.
///
/// `a`, `d` and `y` are copied through untouched.
pub fn alpha_star<T: Ring>(t: &TraceCoords3<T>) -> TraceCoords3<T> {
    TraceCoords3 {
        a: t.a,
        b: t.x,
        c: t.a * t.c - t.z,
        d: t.d,
        x: t.a * t.x - t.b,
        y: t.y,
        z: t.c,
    }
}

/// Induced map of `gamma: A ↦ CA, B ↦ B, C ↦ C`:
/// `(a, b, c, d, x, y, z) ↦ (ca − z, b, c, x, cx − d, y, a)`.
///
/// Obtained from `ρ ∘ γ⁻¹ = (C⁻¹A, B, C)` and `tr(U⁻¹V) = tr U tr V − tr UV`.
/// It fixes `b, c, y` and acts on the planes `(a, z)` and `(x, d)` by two
/// copies of `L_c`.
pub fn gamma_star<T: Ring>(t: &TraceCoords3<T>) -> TraceCoords3<T> {
    TraceCoords3 {
        a: t.c * t.a - t.z,
        b: t.b,
        c: t.c,
        d: t.x,
        x: t.c * t.x - t.d,
        y: t.y,
        z: t.a,
    }
}

/// Matrix of `L_a: (x, y) ↦ (ax − y, x)`.
pub fn la_matrix<T: Ring>(a: T) -> Mat2<T> {
    [[a, -T::one()], [T::one(), T::zero()]]
}

/// Restriction of `alpha_star` to a level set of `(a, d, y)`, acting on
/// `(x, b, c, z)`.
pub fn alpha_star_block_matrix<T: Ring>(a0: T) -> Mat4<T> {
    let (o, l) = (T::zero(), T::one());
    [
        [a0, -l, o, o],
        [l, o, o, o],
        [o, o, a0, -l],
        [o, o, l, o],
    ]
}

/// Block-diagonal `m1 ⊕ m2`.
pub fn block_sum<T: Ring>(m1: &Mat2<T>, m2: &Mat2<T>) -> Mat4<T> {
    let mut out = [[T::zero(); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = m1[i][j];
            out[i + 2][j + 2] = m2[i][j];
        }
    }
    out
}

pub fn mat4_apply<T: Ring>(m: &Mat4<T>, p: &FiberPoint4<T>) -> FiberPoint4<T> {
    let v = p.to_array();
    let row = |r: &[T; 4]| {
        r.iter()
            .zip(v.iter())
            .fold(T::zero(), |acc, (&m, &x)| acc + m * x)
    };
    FiberPoint4::from_array([row(&m[0]), row(&m[1]), row(&m[2]), row(&m[3])])
}

pub fn mat2_mul<T: Ring>(p: &Mat2<T>, q: &Mat2<T>) -> Mat2<T> {
    let mut out = [[T::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
        }
    }
    out
}

pub fn mat2_pow<T: Ring>(m: &Mat2<T>, k: u32) -> Mat2<T> {
    let mut acc = [[T::one(), T::zero()], [T::zero(), T::one()]];
    for _ in 0..k {
        acc = mat2_mul(&acc, m);
    }
    acc
}
