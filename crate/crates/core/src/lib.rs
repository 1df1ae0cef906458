//! Trace-coordinate geometry of SU(2)-character varieties of free groups and
//! the dynamics of `Out(F_n)` on them.
//!
//! The numerical core is generic over the scalar type: group elements,
//! representations and the analytic maps accept any [`Real`] (`f32`, `f64`),
//! while the polynomial identities (the trace relation, the induced maps of
//! the automorphisms `alpha` and `gamma`, the planar maps `L_a`) accept any
//! [`Ring`], including the exact [`Rational`] type. The experiment layer in
//! [`ergodics`] works in `f64`.
//!
//! Concrete aliases for the common instantiations live at the crate root.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod ergodics;
pub mod free_group;
pub mod induced;
pub mod scalar;
pub mod su2;
pub mod trace;

pub use error::{Error, Result};
pub use free_group::{Automorphism, Endomorphism, IntMatrix, Representation, Word};
pub use scalar::{Rational, Real, Ring};
pub use su2::{GroupElement, RngStream};
pub use trace::{BoundaryTraces, TraceCoords3, TraceInterval};

/// SU(2) element in double precision.
pub type Su2 = GroupElement<f64>;
/// SU(2) element in single precision.
pub type Su2F32 = GroupElement<f32>;
/// Representation of a free group into SU(2), double precision.
pub type Rep = Representation<f64>;
/// Representation of a free group into SU(2), single precision.
pub type RepF32 = Representation<f32>;
/// Seven trace coordinates of a rank-3 character, double precision.
pub type Coords = TraceCoords3<f64>;
/// Seven trace coordinates with exact rational entries.
pub type ExactCoords = TraceCoords3<Rational>;
/// Boundary traces `(tr X_0, ..., tr X_n)` in double precision.
pub type Boundary = BoundaryTraces<f64>;
