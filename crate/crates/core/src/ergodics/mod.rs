//! Orbit experiments: random walks over automorphism generator sets,
//! conservation checks, equidistribution statistics and torus dynamics.

mod patching;
mod stats;
mod torus;
mod walk;

pub use patching::{patch_pair, patching_experiment, PatchingReport};
pub use stats::{ks_distance, ks_to_cdf, sample_ks, semicircle_cdf, uniform_cdf, Histogram, DEFAULT_BINS};
pub use torus::{torus_step, TorusMap, TorusPoint};
pub use walk::{
    conservation_check, level_set_walk, random_walk, random_walk_from, Conserved, OrbitLog,
    Statistic, WalkSpec,
};
