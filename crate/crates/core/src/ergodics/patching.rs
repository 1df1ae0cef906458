use crate::error::{Error, Result};
use crate::free_group::Representation;
use crate::su2::{haar_sample, sample_with_trace, RngStream};

/// A representation whose first generator has trace `t1` and whose last
/// has trace `tn`, the others Haar-random.
fn with_end_traces(n: usize, t1: f64, tn: f64, rng: &mut RngStream) -> Result<Representation<f64>> {
    let mut images = Vec::with_capacity(n);
    images.push(sample_with_trace(t1, rng)?);
    for _ in 1..n - 1 {
        images.push(haar_sample(rng));
    }
    images.push(sample_with_trace(tn, rng)?);
    Representation::new(images)
}

/// `ρ″` with `tr ρ″(X_1) = tr ρ(X_1)` and `tr ρ″(X_n) = tr ρ′(X_n)`.
pub fn patch_pair(
    rho: &Representation<f64>,
    rho2: &Representation<f64>,
    rng: &mut RngStream,
) -> Result<Representation<f64>> {
    let n = rho.rank();
    if rho2.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: rho2.rank(),
        });
    }
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    if rho == rho2 {
        return Ok(rho.clone());
    }
    with_end_traces(n, rho.image(1).trace(), rho2.image(n).trace(), rng)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PatchingReport {
    pub rank: usize,
    pub pairs: usize,
    pub successes: usize,
    pub max_error_first: f64,
    pub max_error_last: f64,
    /// Side of the `[−2, 2]²` target grid checked for surjectivity.
    pub grid_side: usize,
    pub grid_failures: usize,
}

impl PatchingReport {
    pub fn success_rate(&self) -> f64 {
        self.successes as f64 / self.pairs.max(1) as f64
    }
}

/// Joins random pairs `(ρ, ρ′)` by a `ρ″` matching `t_1` of the first and
/// `t_n` of the second, then hits every point of a grid of `(t_1, t_n)`.
pub fn patching_experiment(n: usize, pairs: usize, seed: u64) -> Result<PatchingReport> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    let mut rng = RngStream::new(seed, 0);
    let tol = 1e-9;
    let mut report = PatchingReport {
        rank: n,
        pairs,
        successes: 0,
        max_error_first: 0.0,
        max_error_last: 0.0,
        grid_side: 21,
        grid_failures: 0,
    };
    for _ in 0..pairs {
        let rho = Representation::haar(n, &mut rng);
        let rho2 = Representation::haar(n, &mut rng);
        let joined = patch_pair(&rho, &rho2, &mut rng)?;
        let e1 = (joined.image(1).trace() - rho.image(1).trace()).abs();
        let en = (joined.image(n).trace() - rho2.image(n).trace()).abs();
        report.max_error_first = report.max_error_first.max(e1);
        report.max_error_last = report.max_error_last.max(en);
        if e1 <= tol && en <= tol {
            report.successes += 1;
        }
    }
    let side = report.grid_side;
    for i in 0..side {
        for j in 0..side {
            let t1 = -2.0 + 4.0 * i as f64 / (side - 1) as f64;
            let tn = -2.0 + 4.0 * j as f64 / (side - 1) as f64;
            let r = with_end_traces(n, t1, tn, &mut rng)?;
            if (r.image(1).trace() - t1).abs() > tol || (r.image(n).trace() - tn).abs() > tol {
                report.grid_failures += 1;
            }
        }
    }
    Ok(report)
}
