use thiserror::Error;

/// Errors produced by state validation, channel construction, integration and
/// optimization.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid Bloch state: |r| = {norm} exceeds the unit ball tolerance")]
    StateOutsideBall { norm: f64 },

    #[error("invalid Bloch state: components must be finite")]
    StateNotFinite,

    #[error("rotation axis must be nonzero")]
    ZeroAxis,

    #[error("invalid channel: {0}")]
    InvalidChannel(String),

    #[error("Lindblad vectors are not orthonormal: |l_{a} . conj(l_{b}) - delta| = {deviation:.3e}")]
    NotOrthonormal { a: usize, b: usize, deviation: f64 },

    #[error("channel has no fixed point inside the Bloch ball")]
    NoFixedPointInBall,

    #[error("integration failure at t = {t}: {reason}")]
    Integration { t: f64, reason: String },

    #[error("state is not stallable: radial dissipative velocity {radial:.3e} exceeds tolerance")]
    NotStallable { radial: f64 },

    #[error("polar angle at a pole: azimuthal rate undefined for transverse fields")]
    PolarSingularity,

    #[error("stall angle undefined: radius {r_i} exceeds the fixed-point radius {r_fp}")]
    NoStallAngle { r_i: f64, r_fp: f64 },

    #[error("polar angle is not monotone along the drift trajectory (heating-side caveat): {0}")]
    NonMonotonePolarAngle(String),

    #[error("weak-field expansion is numerically singular: |1 - D| = {one_minus_d:.3e}")]
    SingularEndpointFactor { one_minus_d: f64 },

    #[error("target ball is never reached: {0}")]
    TargetNotReached(String),

    #[error("optimization error: {0}")]
    Optimization(String),

    #[error("fit requires at least {required} points, got {got}")]
    NotEnoughPoints { required: usize, got: usize },

    #[error("control field evaluated outside its horizon: t = {t}, horizon = {tau}")]
    OutsideHorizon { t: f64, tau: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),
}
