//! Geometric primitives on the Bloch ball.
//!
//! A qubit density matrix is encoded as the real 3-vector `r` with `|r| <= 1`
//! (`rho = (I + r . sigma) / 2`). Purity is `(1 + |r|^2) / 2` and the trace
//! distance between two states is half the Euclidean distance of their Bloch
//! vectors, so everything here is plain vector geometry.

use nalgebra::Vector3;

use crate::error::Error;
use crate::Result;

/// Norm excess accepted silently (integrator roundoff).
const NORM_SLACK: f64 = 1e-9;
/// Norm excess above which construction fails instead of renormalizing, so
/// that genuinely broken dynamics are not masked.
const NORM_HARD_LIMIT: f64 = 1e-6;

/// A qubit state as a point of the closed unit ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochState {
    r: Vector3<f64>,
}

impl BlochState {
    /// Builds a state from a Bloch vector.
    ///
    /// Norms up to `1 + 1e-9` are accepted as-is; norms up to `1 + 1e-6` are
    /// renormalized onto the sphere; anything larger (or non-finite) is an
    /// error.
    pub fn new(r: Vector3<f64>) -> Result<Self> {
        if !(r.x.is_finite() && r.y.is_finite() && r.z.is_finite()) {
            return Err(Error::StateNotFinite);
        }
        let norm = r.norm();
        if norm <= 1.0 + NORM_SLACK {
            Ok(Self { r })
        } else if norm <= 1.0 + NORM_HARD_LIMIT {
            Ok(Self { r: r / norm })
        } else {
            Err(Error::StateOutsideBall { norm })
        }
    }

    /// Builds a state from Cartesian components.
    pub fn from_components(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::new(Vector3::new(x, y, z))
    }

    /// The maximally mixed state, `r = 0`.
    pub fn mixed() -> Self {
        Self { r: Vector3::zeros() }
    }

    pub fn vector(&self) -> Vector3<f64> {
        self.r
    }

    pub fn x(&self) -> f64 {
        self.r.x
    }

    pub fn y(&self) -> f64 {
        self.r.y
    }

    pub fn z(&self) -> f64 {
        self.r.z
    }

    /// Bloch vector length `|r|` (1 for pure states).
    pub fn radius(&self) -> f64 {
        self.r.norm()
    }

    /// Purity `(1 + |r|^2) / 2`, in `[1/2, 1]`.
    pub fn purity(&self) -> f64 {
        0.5 * (1.0 + self.r.norm_squared())
    }

    /// Trace distance to `other`: half the Euclidean Bloch distance.
    pub fn trace_distance(&self, other: &BlochState) -> f64 {
        0.5 * (self.r - other.r).norm()
    }

    /// Rigid rotation by `angle` (radians) about `axis`.
    ///
    /// The axis is normalized internally; a zero axis is rejected. Rotations
    /// preserve the radius, hence the purity.
    pub fn rotate(&self, axis: Vector3<f64>, angle: f64) -> Result<Self> {
        let n = axis.norm();
        if n < 1e-12 {
            return Err(Error::ZeroAxis);
        }
        let k = axis / n;
        let (sin, cos) = angle.sin_cos();
        // Rodrigues formula.
        let rotated = self.r * cos + k.cross(&self.r) * sin + k * (k.dot(&self.r)) * (1.0 - cos);
        Ok(Self { r: rotated })
    }

    pub fn to_spherical(&self) -> SphericalCoords {
        SphericalCoords::from_vector(self.r)
    }
}

impl From<BlochState> for Vector3<f64> {
    fn from(s: BlochState) -> Self {
        s.r
    }
}

/// Spherical coordinates of a Bloch vector: radius, polar angle from the `+z`
/// axis in `[0, pi]`, azimuth in `[-pi, pi)`.
///
/// The polar convention puts the amplitude-damping fixed point
/// `(0, 0, -r_fp)` at `polar = pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalCoords {
    pub radius: f64,
    pub polar: f64,
    pub azimuth: f64,
}

impl SphericalCoords {
    pub fn new(radius: f64, polar: f64, azimuth: f64) -> Self {
        Self { radius, polar, azimuth }
    }

    /// The origin maps to `(0, 0, 0)` by convention.
    pub fn from_vector(r: Vector3<f64>) -> Self {
        let radius = r.norm();
        if radius == 0.0 {
            return Self { radius: 0.0, polar: 0.0, azimuth: 0.0 };
        }
        let polar = (r.z / radius).clamp(-1.0, 1.0).acos();
        let mut azimuth = r.y.atan2(r.x);
        // atan2 returns (-pi, pi]; fold the +pi endpoint to keep [-pi, pi).
        if azimuth >= std::f64::consts::PI {
            azimuth = -std::f64::consts::PI;
        }
        Self { radius, polar, azimuth }
    }

    pub fn to_vector(&self) -> Vector3<f64> {
        let (sin_p, cos_p) = self.polar.sin_cos();
        let (sin_a, cos_a) = self.azimuth.sin_cos();
        Vector3::new(
            self.radius * sin_p * cos_a,
            self.radius * sin_p * sin_a,
            self.radius * cos_p,
        )
    }

    pub fn to_state(&self) -> Result<BlochState> {
        BlochState::new(self.to_vector())
    }
}
