//! Exact construction and analysis of a "Cantor oscillator": a continuous
//! function on `[0, 1]` that vanishes precisely on the middle-thirds Cantor
//! set, carries a triangular bump on every removed gap, and has divergent
//! total variation, so it is nowhere close to absolutely continuous.
//!
//! Everything is computed with arbitrary-precision rationals; there is no
//! floating point anywhere in this crate. Decimal strings exist for export
//! only. The crate is `no_std` + `alloc`; IO, file formats and the CLI live
//! in the companion `cantor-osc-cli` crate.
//!
//! Module map:
//!
//! * [`rational`] — the exact scalar type and its text/decimal formats.
//! * [`cantor`] — gap addressing and exact Cantor-set membership.
//! * [`piecewise`] — continuous piecewise-linear functions on `[0, 1]`:
//!   exact evaluation, sup-norm distances, total variation, sign layout.
//! * [`oscillator`] — the construction itself: approximants, closed-form
//!   limit evaluation, Cauchy-gap certificates, variation growth,
//!   non-absolute-continuity witness families, axis-cut audits.
//! * [`verify`] — machine-checkable invariant suites over all of the above.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cantor;
pub mod oscillator;
pub mod piecewise;
pub mod rational;
pub mod verify;

pub use cantor::{CantorLocation, GapAddress, Interval};
pub use oscillator::{CauchyGap, CutReport, Orientation, TriangleSpec, WitnessFamily};
pub use piecewise::PiecewiseLinear;
pub use rational::Rational;
