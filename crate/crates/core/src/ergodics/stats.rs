use crate::error::{Error, Result};
use std::f64::consts::PI;

pub const DEFAULT_BINS: usize = 64;

/// Fixed-bin histogram of trace values on `[−2, 2]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Histogram {
    edges: Vec<f64>,
    counts: Vec<u64>,
    total: u64,
}

impl Histogram {
    pub fn new(bins: usize, lo: f64, hi: f64) -> Result<Self> {
        if bins == 0 || !(lo < hi) {
            return Err(Error::Domain(format!("bad histogram range [{lo}, {hi}] with {bins} bins")));
        }
        let edges = (0..=bins)
            .map(|i| lo + (hi - lo) * i as f64 / bins as f64)
            .collect();
        Ok(Self {
            edges,
            counts: vec![0; bins],
            total: 0,
        })
    }

    /// 64 uniform bins on `[−2, 2]`.
    pub fn traces() -> Self {
        Self::new(DEFAULT_BINS, -2.0, 2.0).expect("valid default range")
    }

    pub fn from_samples(samples: &[f64]) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySample);
        }
        let mut h = Self::traces();
        for &v in samples {
            h.add(v)?;
        }
        Ok(h)
    }

    /// Values within `1e-9` outside the range are clamped into the end bins.
    pub fn add(&mut self, v: f64) -> Result<()> {
        let (lo, hi) = (self.edges[0], self.edges[self.counts.len()]);
        if !(v >= lo - 1e-9 && v <= hi + 1e-9) {
            return Err(Error::OutOfRange {
                what: "histogram sample",
                value: v,
            });
        }
        let bins = self.counts.len();
        let k = (((v - lo) / (hi - lo)) * bins as f64).floor();
        let k = (k.max(0.0) as usize).min(bins - 1);
        self.counts[k] += 1;
        self.total += 1;
        Ok(())
    }

    pub fn merge(&mut self, other: &Self) -> Result<()> {
        if self.edges != other.edges {
            return Err(Error::Domain("histograms have different bins".into()));
        }
        for (c, o) in self.counts.iter_mut().zip(&other.counts) {
            *c += o;
        }
        self.total += other.total;
        Ok(())
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Empirical CDF at each right bin edge.
    pub fn cdf(&self) -> Vec<f64> {
        let mut acc = 0u64;
        self.counts
            .iter()
            .map(|&c| {
                acc += c;
                acc as f64 / self.total.max(1) as f64
            })
            .collect()
    }
}

/// `max |F₁ − F₂|` over the shared bin edges.
pub fn ks_distance(h1: &Histogram, h2: &Histogram) -> Result<f64> {
    if h1.edges != h2.edges {
        return Err(Error::Domain("histograms have different bins".into()));
    }
    if h1.total == 0 || h2.total == 0 {
        return Err(Error::EmptySample);
    }
    Ok(h1
        .cdf()
        .iter()
        .zip(h2.cdf())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

/// Binned distance to a reference CDF, evaluated at the bin edges.
pub fn ks_to_cdf(h: &Histogram, cdf: impl Fn(f64) -> f64) -> Result<f64> {
    if h.total == 0 {
        return Err(Error::EmptySample);
    }
    Ok(h.cdf()
        .iter()
        .zip(&h.edges[1..])
        .map(|(f, &e)| (f - cdf(e)).abs())
        .fold(0.0, f64::max))
}

/// One-sample Kolmogorov–Smirnov statistic against a continuous CDF.
pub fn sample_ks(samples: &[f64], cdf: impl Fn(f64) -> f64) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    Ok(sorted
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let f = cdf(v);
            (f - i as f64 / n).max((i as f64 + 1.0) / n - f)
        })
        .fold(0.0, f64::max))
}

/// CDF of the trace of a Haar-random SU(2) element, with density
/// `√(4 − τ²) / 2π` on `[−2, 2]`.
pub fn semicircle_cdf(tau: f64) -> Result<f64> {
    if !(tau.abs() <= 2.0) {
        return Err(Error::OutOfRange {
            what: "trace",
            value: tau,
        });
    }
    let f = 0.5 + tau * (4.0 - tau * tau).sqrt() / (4.0 * PI) + (tau / 2.0).asin() / PI;
    Ok(f.clamp(0.0, 1.0))
}

pub fn uniform_cdf(v: f64) -> f64 {
    v.clamp(0.0, 1.0)
}
