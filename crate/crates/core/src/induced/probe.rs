//! Numeric search for chains of `alpha`-flow segments joining two points of
//! `V_3(a0, d0)`, the set of `(b, c)` admitting some `y` with
//! `(a0, d0, y), (b, c, y) ∈ V_3`.
//!
//! A point `(b, c)` lifts to the variety by choosing `y` in
//! `Y(a0, d0) ∩ Y(b, c)` and then `(x, z)` on a conic. The flow keeps
//! `(a0, d0, y)` fixed and moves `(x, b, c, z)`; projecting back to `(b, c)`
//! gives one segment. Switching to another lift of the same `(b, c)` is free.

use super::flow::{angular_frequency, flow, FiberPoint4};
use crate::error::{Error, Result};
use crate::su2::RngStream;
use crate::trace::{fourholes_residual, y_interval, TraceCoords3, TraceInterval};
use std::f64::consts::TAU;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiberLift {
    pub a0: f64,
    pub d0: f64,
    pub y: f64,
    pub point: FiberPoint4<f64>,
}

impl FiberLift {
    pub fn coords(&self) -> TraceCoords3<f64> {
        let p = &self.point;
        TraceCoords3 {
            a: self.a0,
            b: p.b,
            c: p.c,
            d: self.d0,
            x: p.x,
            y: self.y,
            z: p.z,
        }
    }

    pub fn residual(&self) -> f64 {
        fourholes_residual(&self.coords())
    }

    pub fn bc(&self) -> (f64, f64) {
        (self.point.b, self.point.c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbeParams {
    pub epsilon: f64,
    /// Grid of `y` values tried per one-segment search.
    pub y_samples: usize,
    /// Grid of conic angles per `y`.
    pub s_samples: usize,
    /// Random intermediate points tried before giving up.
    pub max_intermediates: usize,
    pub seed: u64,
}

impl Default for ProbeParams {
    fn default() -> Self {
        Self {
            epsilon: 1e-3,
            y_samples: 16,
            s_samples: 64,
            max_intermediates: 200,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FlowSegment {
    pub lift: FiberLift,
    pub time: f64,
    pub end: FiberPoint4<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Chain {
    pub a0: f64,
    pub d0: f64,
    pub segments: Vec<FlowSegment>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Replays every segment and checks that it starts where the previous
    /// one ended, that each lift lies on the variety, and that the chain
    /// joins `p` to within `eps` of `q`.
    pub fn verify(&self, p: (f64, f64), q: (f64, f64), eps: f64) -> bool {
        let mut here = p;
        let mut joined = true;
        for seg in &self.segments {
            let (b, c) = seg.lift.bc();
            joined &= dist(here, (b, c)) <= eps;
            joined &= seg.lift.residual().abs() <= 1e-8;
            joined &= in_fiber_at(self.a0, self.d0, b, c, seg.lift.y);
            let end = flow(self.a0, seg.time, &seg.lift.point);
            joined &= end.max_abs_diff(&seg.end) <= 1e-12;
            here = (end.b, end.c);
        }
        joined && dist(here, q) <= eps
    }
}

fn dist(p: (f64, f64), q: (f64, f64)) -> f64 {
    (p.0 - q.0).hypot(p.1 - q.1)
}

fn common_y(a0: f64, d0: f64, b: f64, c: f64) -> Option<TraceInterval<f64>> {
    let base = y_interval(a0, d0).ok()?;
    base.intersection(&y_interval(b, c).ok()?)
}

fn in_fiber_at(a0: f64, d0: f64, b: f64, c: f64, y: f64) -> bool {
    common_y(a0, d0, b, c).is_some_and(|i| i.contains(y))
}

/// Whether `(b, c)` lies in `V_3(a0, d0)`.
pub fn in_fiber(a0: f64, d0: f64, b: f64, c: f64) -> bool {
    common_y(a0, d0, b, c).is_some()
}

/// Lift of `(b, c)` with middle trace `y`, at angle `s` on the conic of
/// admissible `(x, z)`. `None` when the conic is empty or `|y| = 2`.
pub fn lift_at(a0: f64, d0: f64, b: f64, c: f64, y: f64, s: f64) -> Option<FiberLift> {
    let det = 4.0 - y * y;
    if det <= 1e-12 {
        return None;
    }
    let (a, d) = (a0, d0);
    let p = a * b + c * d;
    let q = a * c + b * d;
    let k = y * y - (a * d + b * c) * y - 4.0 + a * a + b * b + c * c + d * d + a * b * c * d;
    let x0 = (2.0 * p - y * q) / det;
    let z0 = (2.0 * q - y * p) / det;
    let r = (p * x0 + q * z0) / 2.0 - k;
    if r < -1e-9 {
        return None;
    }
    let r = r.max(0.0);
    // (u + yv/2)² + (1 − y²/4)v² = r with u = x − x0, v = z − z0.
    let v = (r / (1.0 - y * y / 4.0)).sqrt() * s.sin();
    let u = r.sqrt() * s.cos() - y * v / 2.0;
    Some(FiberLift {
        a0,
        d0,
        y,
        point: FiberPoint4::new(x0 + u, b, c, z0 + v),
    })
}

/// `(cos ωt, sin ωt)` that would carry the lift to `target`, from the
/// linear system `b(t), c(t)`. Not necessarily on the unit circle.
fn solve_cs(a0: f64, start: &FiberPoint4<f64>, target: (f64, f64)) -> Option<(f64, f64)> {
    let w = angular_frequency(a0);
    let h = a0 / 2.0;
    let vb = (start.x - h * start.b) / w;
    let vc = (h * start.c - start.z) / w;
    let det = start.b * vc - vb * start.c;
    if det.abs() < 1e-14 {
        return None;
    }
    let cs = (target.0 * vc - vb * target.1) / det;
    let sn = (start.b * target.1 - start.c * target.0) / det;
    Some((cs, sn))
}

fn time_from_cs(a0: f64, cs: f64, sn: f64) -> f64 {
    sn.atan2(cs).rem_euclid(TAU) / angular_frequency(a0)
}

/// Time `t ∈ [0, 2π/ω)` with `flow(a0, t, start)` projecting to
/// `target`, if `target` lies on that trajectory up to `1e-9`.
pub fn recover_flow_time(a0: f64, start: &FiberPoint4<f64>, target: (f64, f64)) -> Option<f64> {
    if !(a0.abs() < 2.0) {
        return None;
    }
    if dist((start.b, start.c), target) <= 1e-15 {
        return Some(0.0);
    }
    let (cs, sn) = solve_cs(a0, start, target)?;
    if (cs.hypot(sn) - 1.0).abs() > 1e-9 {
        return None;
    }
    Some(time_from_cs(a0, cs, sn))
}

struct Search {
    a0: f64,
    d0: f64,
    params: ProbeParams,
    lifts_scanned: usize,
    best_miss: f64,
}

impl Search {
    fn g(&self, lift: &FiberLift, q: (f64, f64)) -> Option<f64> {
        let (cs, sn) = solve_cs(self.a0, &lift.point, q)?;
        Some(cs * cs + sn * sn - 1.0)
    }

    fn try_finish(&mut self, lift: FiberLift, q: (f64, f64)) -> Option<FlowSegment> {
        let (cs, sn) = solve_cs(self.a0, &lift.point, q)?;
        let time = time_from_cs(self.a0, cs, sn);
        let end = flow(self.a0, time, &lift.point);
        let miss = dist((end.b, end.c), q);
        self.best_miss = self.best_miss.min(miss);
        (miss <= self.params.epsilon / 2.0).then_some(FlowSegment { lift, time, end })
    }

    /// One flow segment from `p` to `q`: scan lifts of `p` whose `y` also
    /// serves `q`, and bisect on sign changes of `|(C, S)|² − 1`.
    fn one_segment(&mut self, p: (f64, f64), q: (f64, f64)) -> Option<FlowSegment> {
        let ip = common_y(self.a0, self.d0, p.0, p.1)?;
        let iq = y_interval(q.0, q.1).ok()?;
        let range = ip.intersection(&iq)?;
        let ny = self.params.y_samples.max(1);
        let ns = self.params.s_samples.max(4);
        for iy in 0..ny {
            let y = range.lo + range.width() * (iy as f64 + 0.5) / ny as f64;
            let (a0, d0) = (self.a0, self.d0);
            let at = |s: f64| lift_at(a0, d0, p.0, p.1, y, s);
            let mut prev: Option<(f64, f64)> = None;
            for is in 0..=ns {
                let s = TAU * is as f64 / ns as f64;
                self.lifts_scanned += 1;
                let Some(lift) = at(s) else {
                    prev = None;
                    continue;
                };
                let Some(gv) = self.g(&lift, q) else {
                    prev = None;
                    continue;
                };
                if let Some((s0, g0)) = prev {
                    if g0.signum() != gv.signum() {
                        let (mut lo, mut hi, mut glo) = (s0, s, g0);
                        for _ in 0..60 {
                            let mid = 0.5 * (lo + hi);
                            let Some(gm) = at(mid).and_then(|l| self.g(&l, q)) else {
                                break;
                            };
                            if gm.signum() == glo.signum() {
                                lo = mid;
                                glo = gm;
                            } else {
                                hi = mid;
                            }
                        }
                        if let Some(seg) = at(0.5 * (lo + hi)).and_then(|l| self.try_finish(l, q)) {
                            return Some(seg);
                        }
                    }
                }
                prev = Some((s, gv));
            }
        }
        None
    }
}

/// Searches for a chain of flow segments from `p` to within
/// `params.epsilon` of `q`, both points of `V_3(a0, d0)`.
///
/// Tries a single segment first, then two segments through random points
/// reachable from `p`. Failure is reported as `SearchFailed` with the
/// closest approach seen.
pub fn fiber_connectivity_probe(
    a0: f64,
    d0: f64,
    p: (f64, f64),
    q: (f64, f64),
    params: &ProbeParams,
) -> Result<Chain> {
    if !(a0.abs() < 2.0 && d0.abs() < 2.0) {
        return Err(Error::Domain(format!(
            "probe needs |a0|, |d0| < 2, got ({a0}, {d0})"
        )));
    }
    for (name, pt) in [("p", p), ("q", q)] {
        if !in_fiber(a0, d0, pt.0, pt.1) {
            return Err(Error::Domain(format!(
                "{name} = ({}, {}) is not in V_3({a0}, {d0})",
                pt.0, pt.1
            )));
        }
    }
    let chain = |segments| Chain { a0, d0, segments };
    if dist(p, q) <= params.epsilon {
        return Ok(chain(Vec::new()));
    }
    let mut search = Search {
        a0,
        d0,
        params: *params,
        lifts_scanned: 0,
        best_miss: f64::INFINITY,
    };
    if let Some(seg) = search.one_segment(p, q) {
        return Ok(chain(vec![seg]));
    }
    let ip = common_y(a0, d0, p.0, p.1).expect("checked above");
    let mut rng = RngStream::new(params.seed, 0);
    let period = TAU / angular_frequency(a0);
    for _ in 0..params.max_intermediates {
        let y = rng.uniform_in(ip.lo, ip.hi);
        let Some(lift) = lift_at(a0, d0, p.0, p.1, y, rng.uniform_in(0.0, TAU)) else {
            continue;
        };
        let time = rng.uniform_in(0.0, period);
        let end = flow(a0, time, &lift.point);
        let m = (end.b, end.c);
        if !in_fiber(a0, d0, m.0, m.1) {
            continue;
        }
        if let Some(last) = search.one_segment(m, q) {
            return Ok(chain(vec![FlowSegment { lift, time, end }, last]));
        }
    }
    Err(Error::SearchFailed(format!(
        "no chain from ({:.6}, {:.6}) to ({:.6}, {:.6}) in V_3({a0}, {d0}): \
         {} intermediates, {} lifts scanned, closest miss {:.3e}",
        p.0, p.1, q.0, q.1, params.max_intermediates, search.lifts_scanned, search.best_miss
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    const A0: f64 = 0.5;
    const D0: f64 = 0.3;

    fn random_point(rng: &mut RngStream) -> (f64, f64) {
        loop {
            let (b, c) = (rng.uniform_in(-2.0, 2.0), rng.uniform_in(-2.0, 2.0));
            if in_fiber(A0, D0, b, c) {
                return (b, c);
            }
        }
    }

    #[test]
    fn lifts_lie_on_variety() {
        let mut rng = RngStream::new(5, 0);
        for _ in 0..200 {
            let (b, c) = random_point(&mut rng);
            let i = common_y(A0, D0, b, c).unwrap();
            let y = rng.uniform_in(i.lo, i.hi);
            let lift = lift_at(A0, D0, b, c, y, rng.uniform_in(0.0, TAU)).unwrap();
            assert!(lift.residual().abs() < 1e-10);
            let t = rng.uniform_in(0.0, 10.0);
            let moved = FiberLift {
                point: flow(A0, t, &lift.point),
                ..lift
            };
            assert!(moved.residual().abs() < 1e-10);
        }
    }

    #[test]
    fn equal_points_give_empty_chain() {
        let chain = fiber_connectivity_probe(A0, D0, (0.1, 0.2), (0.1, 0.2), &ProbeParams::default()).unwrap();
        assert!(chain.is_empty());
        assert!(chain.verify((0.1, 0.2), (0.1, 0.2), 1e-3));
    }

    #[test]
    fn time_is_recovered_on_a_trajectory() {
        let mut rng = RngStream::new(9, 0);
        for _ in 0..50 {
            let (b, c) = random_point(&mut rng);
            let i = common_y(A0, D0, b, c).unwrap();
            let lift = lift_at(A0, D0, b, c, 0.5 * (i.lo + i.hi), rng.uniform_in(0.0, TAU)).unwrap();
            let t = rng.uniform_in(0.0, TAU / angular_frequency(A0));
            let end = flow(A0, t, &lift.point);
            let rec = recover_flow_time(A0, &lift.point, (end.b, end.c)).unwrap();
            assert!((rec - t).abs() < 1e-6, "{rec} vs {t}");
        }
    }

    #[test]
    fn rejects_points_outside_fiber() {
        let r = fiber_connectivity_probe(1.9, 1.9, (-1.9, 1.9), (0.0, 0.0), &ProbeParams::default());
        assert!(r.is_err());
    }

    #[test]
    fn random_pairs_connect() {
        let mut rng = RngStream::new(21, 0);
        let params = ProbeParams::default();
        let mut ok = 0;
        for _ in 0..20 {
            let (p, q) = (random_point(&mut rng), random_point(&mut rng));
            if let Ok(chain) = fiber_connectivity_probe(A0, D0, p, q, &params) {
                assert!(chain.verify(p, q, params.epsilon));
                ok += 1;
            }
        }
        assert!(ok >= 18, "{ok} of 20");
    }
}
