//! Velocity of the magnetoelectric medium from the stationarity condition of
//! the first-order Lagrangian:
//!
//! ```text
//! ρ⁰ v ẑ = (1/4πμc) [(εμ − 1) E×B + E×(χᵀE) − B×(χB)]
//!        − (1/4πμc) (n − 1/n) (B·χᵀE) ẑ
//! ```
//!
//! The last term comes from the boost dependence of `μ′` and is reported
//! separately as `shen_term_z`. The right-hand side is kept as a full vector;
//! its transverse part is surfaced rather than projected away.

use crate::algebra::{FieldState, Material, Vec3};
use crate::constants::{FOUR_PI, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::lagrangian::{coupling, vector_form_density_velocity};

/// Below this the classical ẑ terms count as absent in [`term_ratio`].
pub const RATIO_FLOOR: f64 = 1e-300;

/// The four field bilinears entering the velocity equation. Classical fields
/// give them directly; the vacuum ensemble gives mode sums.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FieldBilinears {
    /// `E×B`
    pub e_cross_b: Vec3,
    /// `E×(χᵀE)`
    pub e_cross_chi_t_e: Vec3,
    /// `B×(χB)`
    pub b_cross_chi_b: Vec3,
    /// `B·χᵀE`
    pub b_dot_chi_t_e: f64,
}

impl FieldBilinears {
    pub fn classical(m: &Material, f: &FieldState) -> Self {
        let chi = m.chi();
        Self {
            e_cross_b: f.e.cross(f.b),
            e_cross_chi_t_e: f.e.cross(chi.transpose().apply(f.e)),
            b_cross_chi_b: f.b.cross(chi.apply(f.b)),
            b_dot_chi_t_e: coupling(m, f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityResult {
    /// Right-hand side divided by ρ⁰, cm/s.
    pub rhs_vector: Vec3,
    pub v_z: f64,
    /// `(1/4πμc)(εμ − 1) E×B`, momentum density.
    pub abraham_minkowski_term: Vec3,
    /// `(1/4πμc) E×(χᵀE)`
    pub chi_e_term: Vec3,
    /// `−(1/4πμc) B×(χB)`
    pub chi_b_term: Vec3,
    /// `−(1/4πμc)(n − 1/n) B·χᵀE`
    pub shen_term_z: f64,
    /// Norm of the (x, y) part of `rhs_vector`.
    pub transverse_residual: f64,
}

impl VelocityResult {
    /// ẑ component of the three classical (non-index) terms.
    pub fn classical_z(&self) -> f64 {
        (self.abraham_minkowski_term + self.chi_e_term + self.chi_b_term).z
    }

    /// `|shen_term_z| / |classical_z|`
    pub fn term_ratio(&self) -> Result<f64> {
        let denominator = self.classical_z().abs();
        if denominator < RATIO_FLOOR {
            return Err(Error::DivisionDegenerate);
        }
        Ok(self.shen_term_z.abs() / denominator)
    }

    /// χ-dependent part of the momentum density (`ρ⁰ · rhs` minus the
    /// Abraham–Minkowski term).
    pub fn chi_momentum_density(&self) -> Vec3 {
        self.chi_e_term + self.chi_b_term + Vec3::Z * self.shen_term_z
    }
}

pub fn velocity_from_bilinears(m: &Material, bl: &FieldBilinears) -> VelocityResult {
    let prefactor = 1.0 / (FOUR_PI * m.mu() * SPEED_OF_LIGHT);
    let product = m.epsilon() * m.mu();
    let abraham_minkowski_term = bl.e_cross_b * (prefactor * (product - 1.0));
    let chi_e_term = bl.e_cross_chi_t_e * prefactor;
    let chi_b_term = bl.b_cross_chi_b * -prefactor;
    let shen_term_z = -prefactor * m.index_excess() * bl.b_dot_chi_t_e;
    let rhs_vector = (abraham_minkowski_term + chi_e_term + chi_b_term) / m.rho0()
        + Vec3::Z * shen_term_z / m.rho0();
    VelocityResult {
        rhs_vector,
        v_z: rhs_vector.z,
        abraham_minkowski_term,
        chi_e_term,
        chi_b_term,
        shen_term_z,
        transverse_residual: rhs_vector.transverse_norm(),
    }
}

/// Medium velocity for uniform classical lab-frame fields.
pub fn medium_velocity(m: &Material, f: &FieldState) -> VelocityResult {
    velocity_from_bilinears(m, &FieldBilinears::classical(m, f))
}

pub fn term_ratio(m: &Material, f: &FieldState) -> Result<f64> {
    medium_velocity(m, f).term_ratio()
}

/// Check that the χ terms of the velocity equation are the velocity gradient
/// of the vector-form interaction density.
///
/// The gradient of the density (per `4π`) is taken by central differences
/// about `v = 0` with step `c · beta_probe` along each axis. The equation of
/// motion carries it with a minus sign, `ρ⁰ v = −∂L/∂v`, so the returned
/// value is `|∇L/4π + (χE + χB + shen ẑ)|`. The `(εμ − 1)E×B` term lies
/// outside the interaction density and is not part of the comparison.
pub fn lagrangian_consistency_check(m: &Material, f: &FieldState, beta_probe: f64) -> Result<f64> {
    if !(beta_probe > 0.0 && beta_probe <= 1e-3) {
        return Err(Error::DegenerateProbe(beta_probe));
    }
    let h = SPEED_OF_LIGHT * beta_probe;
    let partial = |axis: Vec3| {
        let plus = vector_form_density_velocity(m, f, axis * h);
        let minus = vector_form_density_velocity(m, f, axis * -h);
        (plus - minus) / (2.0 * h)
    };
    let gradient = Vec3::new(partial(Vec3::X), partial(Vec3::Y), partial(Vec3::Z)) / FOUR_PI;
    let expected = medium_velocity(m, f).chi_momentum_density();
    Ok((gradient + expected).norm())
}
