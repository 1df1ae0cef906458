//! Maps induced on trace coordinates by the rank-3 automorphisms `alpha`
//! and `gamma`, their linear structure on level sets, and the associated
//! linear flow.

mod alpha;
mod flow;
mod planar;
mod probe;

pub use alpha::{
    alpha_star, alpha_star_block_matrix, block_sum, gamma_star, la_matrix, mat2_mul, mat2_pow,
    mat4_apply, Mat2, Mat4,
};
pub use flow::{
    alpha_time, angular_frequency, field_a, flow, flow_matrix, is_equilibrium, period, FiberPoint4,
    EQUILIBRIUM_TOL,
};
pub use planar::{la_apply, q_eval, rotation_angle, rotation_number_estimate, PlanePoint};
pub use probe::{
    fiber_connectivity_probe, in_fiber, lift_at, recover_flow_time, Chain, FiberLift,
    FlowSegment, ProbeParams,
};
