//! Markovian relaxation of a qubit on the Bloch ball, and how unitary control
//! speeds it up or slows it down.
//!
//! The crate simulates the controlled master equation for a single qubit whose
//! state is the real Bloch 3-vector `r`, under three dissipative channels
//! (generalized amplitude damping, depolarizing, phase damping). It provides:
//!
//! - geometric primitives on the Bloch ball ([`bloch`]),
//! - channel definitions, dissipator velocity fields and fixed points
//!   ([`channels`]),
//! - adaptive high-order integration of the controlled dynamics with
//!   hitting-time (ball entry) detection ([`dynamics`]),
//! - the closed-form catalogue of free and optimal relaxation times, stall
//!   angles, and the weak-field slope expansion ([`analytic`]),
//! - bounded-amplitude control synthesis (truncated random Fourier basis) and
//!   derivative-free minimization of the relaxation time ([`control`]).
//!
//! Relaxation targets are fixed points of the dissipator; arrival is measured
//! by trace distance, i.e. entry into a Euclidean `eps`-ball around the target.
//!
//! With the default `parallel` feature, grid sweeps and optimizer restarts run
//! on a rayon pool; disabling it falls back to equivalent sequential code.

pub mod analytic;
pub mod bloch;
pub mod channels;
pub mod control;
pub mod dynamics;
pub mod error;
pub mod numeric;
pub(crate) mod ode;
pub(crate) mod par;

pub use bloch::{BlochState, SphericalCoords};
pub use channels::{ChannelKind, ChannelSpec, LindbladChannel};
pub use dynamics::{BallHit, IntegratorConfig, TerminalReason, Trajectory};
pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
