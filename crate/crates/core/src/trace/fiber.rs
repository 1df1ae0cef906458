//! Constructing representations with prescribed traces.

use super::coords::{t_boundary, BoundaryTraces};
use super::region::{realizable, v3_contains, y_interval, MEMBERSHIP_TOL};
use crate::error::{Error, Result};
use crate::free_group::Representation;
use crate::scalar::Real;
use crate::su2::{haar_sample, rotation_between, sample_with_trace, GroupElement, RngStream};

/// A random pair `(P, Q)` with `tr P = x`, `tr Q = y`, `tr PQ = z`.
///
/// `P` is placed on the `i`-axis, `Q` is chosen so its axis has the unique
/// `i`-component forced by `z` and a uniform angle around it, and the pair
/// is then conjugated by a Haar element.
pub fn sample_pair_with_traces<T: Real>(
    x: T,
    y: T,
    z: T,
    rng: &mut RngStream,
) -> Result<(GroupElement<T>, GroupElement<T>)> {
    if !v3_contains(x, y, z) {
        return Err(Error::Unrealizable);
    }
    let (one, two) = (T::one(), T::two());
    let clamp = |v: T| v.max(-two).min(two);
    let (x, y, z) = (clamp(x), clamp(y), clamp(z));
    let ca = x / two;
    let sa = (one - ca * ca).max(T::zero()).sqrt();
    let cb = y / two;
    let sb = (one - cb * cb).max(T::zero()).sqrt();
    let p = GroupElement {
        w: ca,
        x: sa,
        y: T::zero(),
        z: T::zero(),
    };
    let q = if sa * sb < T::lit(1e-12) {
        sample_with_trace(y, rng)?
    } else {
        let u1 = ((ca * cb - z / two) / (sa * sb)).max(-one).min(one);
        let r = (one - u1 * u1).max(T::zero()).sqrt();
        let phi = T::lit(rng.uniform_in(0.0, std::f64::consts::TAU));
        GroupElement {
            w: cb,
            x: sb * u1,
            y: sb * r * phi.cos(),
            z: sb * r * phi.sin(),
        }
    };
    let g = haar_sample(rng);
    Ok((p.conjugated_by(&g), q.conjugated_by(&g)))
}

fn unit_axis<T: Real>(g: &GroupElement<T>) -> Option<[T; 3]> {
    let v = g.axis();
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if n < T::lit(1e-12) {
        None
    } else {
        Some([v[0] / n, v[1] / n, v[2] / n])
    }
}

/// A rank-3 representation whose boundary traces match `target` to 1e−9.
///
/// Picks `y = tr BC` uniformly in `Y(a,d) ∩ Y(b,c)`, builds `(B, C)` with
/// traces `(b, c, y)` and an independent pair `(P, Q)` with traces
/// `(a, y, d)`, then conjugates `P` so that `Q` lands on `BC` (plus a random
/// twist about that axis). `A = gPg⁻¹` gives `tr(ABC) = tr(PQ) = d`.
pub fn sample_fiber<T: Real>(
    target: &BoundaryTraces<T>,
    rng: &mut RngStream,
    max_tries: usize,
) -> Result<Representation<T>> {
    let [a, b, c, d] = target.quadruple().ok_or(Error::RankMismatch {
        expected: 3,
        found: target.rank(),
    })?;
    if !realizable(a, b, c, d) {
        return Err(Error::Unrealizable);
    }
    let ad = y_interval(a, d)?;
    let bc = y_interval(b, c)?;
    let (lo, hi) = match ad.intersection(&bc) {
        Some(i) => (i.lo, i.hi),
        None => {
            // Discriminant says yes, intervals miss by roundoff.
            let m = (ad.lo.max(bc.lo) + ad.hi.min(bc.hi)) / T::two();
            (m, m)
        }
    };
    let tol = T::lit(MEMBERSHIP_TOL);
    for _ in 0..max_tries {
        let y = lo + (hi - lo) * T::lit(rng.uniform());
        let Ok((bb, cc)) = sample_pair_with_traces(b, c, y, rng) else {
            continue;
        };
        let Ok((p, q)) = sample_pair_with_traces(a, y, d, rng) else {
            continue;
        };
        let bcp = bb.mul(&cc);
        let g = match (unit_axis(&q), unit_axis(&bcp)) {
            (Some(u), Some(v)) => {
                let twist_angle = T::lit(rng.uniform_in(0.0, std::f64::consts::TAU));
                let half = twist_angle / T::two();
                let s = half.sin();
                let twist = GroupElement {
                    w: half.cos(),
                    x: v[0] * s,
                    y: v[1] * s,
                    z: v[2] * s,
                };
                twist.mul(&rotation_between(u, v))
            }
            _ => GroupElement::identity(),
        };
        let rho = Representation::new(vec![p.conjugated_by(&g), bb, cc])?;
        if t_boundary(&rho)?.max_abs_diff(target) < tol {
            return Ok(rho);
        }
    }
    Err(Error::ExhaustedTries(max_tries))
}

/// A rank-2 representation with `tr ρ([X_1, X_2]) = t`.
///
/// Samples `(tr X_1, tr X_2)` uniformly, solves the quadratic
/// `z² − xy z + x² + y² − t − 2 = 0` for `tr X_1X_2`, and rejects when no
/// root lies in `[−2, 2]`. The isolated level `t = −2` is the class of
/// `(i, j)`.
pub fn sample_kappa_level<T: Real>(
    t: T,
    rng: &mut RngStream,
    max_tries: usize,
) -> Result<Representation<T>> {
    let two = T::two();
    if !(t.abs() <= two) {
        return Err(Error::OutOfRange {
            what: "kappa",
            value: t.to_f64_lossy(),
        });
    }
    if t + two < T::lit(1e-12) {
        let g = haar_sample(rng);
        return Representation::new(vec![
            GroupElement::i().conjugated_by(&g),
            GroupElement::j().conjugated_by(&g),
        ]);
    }
    for _ in 0..max_tries {
        let x = T::lit(rng.uniform_in(-2.0, 2.0));
        let y = T::lit(rng.uniform_in(-2.0, 2.0));
        let disc = x * x * y * y - T::four() * (x * x + y * y - t - two);
        if disc < T::zero() {
            continue;
        }
        let sign = if rng.uniform() < 0.5 { -T::one() } else { T::one() };
        let z = (x * y + sign * disc.sqrt()) / two;
        if z.abs() > two {
            continue;
        }
        if let Ok((p, q)) = sample_pair_with_traces(x, y, z, rng) {
            return Representation::new(vec![p, q]);
        }
    }
    Err(Error::ExhaustedTries(max_tries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::{kappa, v3_form};

    #[test]
    fn pairs_hit_their_traces() {
        let mut rng = RngStream::new(21, 0);
        for _ in 0..2000 {
            let x = rng.uniform_in(-2.0, 2.0);
            let y = rng.uniform_in(-2.0, 2.0);
            let z = rng.uniform_in(-2.0, 2.0);
            match sample_pair_with_traces(x, y, z, &mut rng) {
                Ok((p, q)) => {
                    assert!(v3_form(x, y, z) <= 4.0 + 1e-9);
                    assert!((p.trace() - x).abs() < 1e-12);
                    assert!((q.trace() - y).abs() < 1e-12);
                    assert!((p.mul(&q).trace() - z).abs() < 1e-9);
                }
                Err(e) => {
                    assert_eq!(e, Error::Unrealizable);
                    assert!(v3_form(x, y, z) > 4.0);
                }
            }
        }
    }

    #[test]
    fn fiber_examples() {
        let mut rng = RngStream::new(4, 0);
        let twos = BoundaryTraces::from_quadruple(2.0, 2.0, 2.0, 2.0).unwrap();
        let rho = sample_fiber(&twos, &mut rng, 10).unwrap();
        for g in rho.images() {
            assert!(g.distance(&GroupElement::identity()) < 1e-12);
        }
        let bad = BoundaryTraces::from_quadruple(2.0, 2.0, 2.0, -2.0).unwrap();
        assert_eq!(sample_fiber(&bad, &mut rng, 10), Err(Error::Unrealizable));
        let zeros = BoundaryTraces::from_quadruple(0.0, 0.0, 0.0, 0.0).unwrap();
        let rho = sample_fiber(&zeros, &mut rng, 10).unwrap();
        assert!(t_boundary(&rho).unwrap().max_abs_diff(&zeros) < 1e-9);
    }

    #[test]
    fn fiber_random_targets() {
        let mut rng = RngStream::new(8, 0);
        let mut hits = 0;
        for _ in 0..2000 {
            let q: Vec<f64> = (0..4).map(|_| rng.uniform_in(-2.0, 2.0)).collect();
            let target = BoundaryTraces::from_quadruple(q[0], q[1], q[2], q[3]).unwrap();
            match sample_fiber(&target, &mut rng, 20) {
                Ok(rho) => {
                    hits += 1;
                    assert!(t_boundary(&rho).unwrap().max_abs_diff(&target) < 1e-9);
                }
                Err(e) => assert_eq!(e, Error::Unrealizable),
            }
        }
        assert!(hits > 500);
    }

    #[test]
    fn kappa_levels() {
        let mut rng = RngStream::new(9, 0);
        for t in [-2.0f64, -1.5, 0.0, 0.7, 1.0, 2.0] {
            let rho = sample_kappa_level(t, &mut rng, 100_000).unwrap();
            assert!((kappa(&rho).unwrap() - t).abs() < 1e-9, "t = {t}");
        }
        assert!(sample_kappa_level(2.5, &mut rng, 10).is_err());
    }
}
