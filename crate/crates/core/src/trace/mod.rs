//! Trace coordinates on the SU(2)-character varieties of `F_2` and `F_3`.

mod coords;
mod fiber;
mod region;

pub use coords::{
    fourholes_residual, kappa, t_boundary, trace_coords3, trace_of_literal, BoundaryTraces,
    TraceCoords3,
};
pub use fiber::{sample_fiber, sample_kappa_level, sample_pair_with_traces};
pub use region::{
    boundary_realizable, delta, delta_base, ellipse_contains, ellipse_tangency_points,
    realizable, v3_contains, v3_form, y_interval, EllipseRegion, RealizabilityMethod,
    TraceInterval, MEMBERSHIP_TOL,
};
