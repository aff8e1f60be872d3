//! Magnetoelectric interaction density of the moving medium.
//!
//! Three views of the same quantity:
//!
//! * [`me_density_exact`]: the reference model `(1/μ′) B′·χᵀE′`, with `μ′`
//!   from [`transform_constants`] and exact Lorentz-transformed fields. Its
//!   Taylor coefficients in `β` define what the truncations must reproduce.
//! * [`me_density_first_order`]: the truncation to first order in `v/c`,
//!   split into the rest-frame piece, the field-mixing piece and the
//!   correction coming from the boost dependence of `μ′`.
//! * [`vector_form_density`]: the same first-order content written as
//!   `v·{B×(χB) − E×(χᵀE)}` plus the `v·ẑ` index term.
//!
//! Densities are returned without the `1/4π` volume measure.

use crate::algebra::{BoostSpec, FieldState, Material, Vec3};
use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result};
use crate::fit::{central_difference, loglog_slope};
use crate::relativity::{transform_constants, transform_fields, FieldOrder};

/// Accepted range for the fitted residual order.
pub const SLOPE_RANGE: (f64, f64) = (1.9, 2.1);
/// Step for the central difference of the exact model at `β = 0`.
pub const DERIVATIVE_STEP: f64 = 1e-6;
/// Relative tolerance for the derivative check.
pub const DERIVATIVE_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_BETA_GRID: [f64; 5] = [1e-4, 3e-4, 1e-3, 3e-3, 1e-2];

/// First-order pieces of the interaction density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagrangianBreakdown {
    /// `(1/μ) B·χᵀE`
    pub zeroth: f64,
    /// `(1/μc) B·χᵀ(v×B)`, quadratic in B.
    pub mixing_b: f64,
    /// `(1/μc) (E×v)·χᵀE`, quadratic in E.
    pub mixing_e: f64,
    /// `mixing_b + mixing_e`
    pub mixing: f64,
    /// `(1/μc) v (n − 1/n) B·χᵀE`
    pub mu_correction: f64,
    pub total_first_order: f64,
}

/// `B·χᵀE`
pub fn coupling(m: &Material, f: &FieldState) -> f64 {
    f.b.dot(m.chi().transpose().apply(f.e))
}

/// Reference model `(1/μ′(β)) B′(β)·χᵀE′(β)`.
pub fn me_density_exact(m: &Material, f: &FieldState, b: &BoostSpec) -> Result<f64> {
    let tc = transform_constants(m, b)?;
    let moved = transform_fields(f, b, FieldOrder::Exact);
    Ok(coupling(m, &moved) / tc.mu_prime)
}

pub fn me_density_first_order(m: &Material, f: &FieldState, b: &BoostSpec) -> LagrangianBreakdown {
    let chi_t = m.chi().transpose();
    let v = b.velocity();
    let prefactor = 1.0 / (m.mu() * SPEED_OF_LIGHT);
    let zeroth = coupling(m, f) / m.mu();
    let mixing_b = prefactor * f.b.dot(chi_t.apply(v.cross(f.b)));
    let mixing_e = prefactor * f.e.cross(v).dot(chi_t.apply(f.e));
    let mixing = mixing_b + mixing_e;
    let mu_correction = prefactor * v.z * m.index_excess() * coupling(m, f);
    LagrangianBreakdown {
        zeroth,
        mixing_b,
        mixing_e,
        mixing,
        mu_correction,
        total_first_order: zeroth + mixing + mu_correction,
    }
}

/// First-order interaction density for an arbitrary velocity vector (cm/s),
/// in the `v·{…}` form. Only the ẑ component couples to the index term.
pub fn vector_form_density_velocity(m: &Material, f: &FieldState, velocity: Vec3) -> f64 {
    let chi = m.chi();
    let prefactor = 1.0 / (m.mu() * SPEED_OF_LIGHT);
    let stress = f.b.cross(chi.apply(f.b)) - f.e.cross(chi.transpose().apply(f.e));
    prefactor * velocity.dot(stress)
        + prefactor * velocity.dot(Vec3::Z) * m.index_excess() * coupling(m, f)
}

/// First-order (velocity-dependent) part of the interaction density in
/// vector form. Equals `mixing + mu_correction` of the expansion.
pub fn vector_form_density(m: &Material, f: &FieldState, b: &BoostSpec) -> f64 {
    vector_form_density_velocity(m, f, b.velocity())
}

/// `[1/μ′(β) − 1/μ] B·χᵀE` with untransformed fields: the part of the exact
/// model driven only by the boost dependence of `μ′`.
pub fn isolate_mu_term(m: &Material, f: &FieldState, b: &BoostSpec) -> Result<f64> {
    let tc = transform_constants(m, b)?;
    Ok((1.0 / tc.mu_prime - 1.0 / m.mu()) * coupling(m, f))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionPoint {
    pub beta: f64,
    pub exact: f64,
    pub first_order: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionReport {
    pub points: Vec<ExpansionPoint>,
    /// Fitted slope of `ln r` against `ln β`; `None` when fewer than two
    /// residuals are positive.
    pub slope: Option<f64>,
    /// Every residual is exactly zero (e.g. `χ = 0`).
    pub identically_zero: bool,
    /// Central difference of the exact model at `β = 0`.
    pub derivative_numeric: f64,
    /// `(mixing + mu_correction)/β` of the truncation.
    pub derivative_analytic: f64,
    pub derivative_delta: f64,
    /// `derivative_delta / max(|derivative_analytic|, |zeroth|)`, or zero
    /// when both scales vanish and the delta is zero.
    pub derivative_relative: f64,
}

impl ExpansionReport {
    pub fn slope_ok(&self) -> bool {
        self.slope
            .is_some_and(|s| (SLOPE_RANGE.0..=SLOPE_RANGE.1).contains(&s))
    }

    pub fn derivative_ok(&self) -> bool {
        self.derivative_relative <= DERIVATIVE_TOLERANCE
    }

    /// Truncation verified: residual order in range (or nothing to check)
    /// and the first derivative matches.
    pub fn passed(&self) -> bool {
        (self.identically_zero || self.slope_ok()) && self.derivative_ok()
    }
}

fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < 3 {
        return Err(Error::DegenerateGrid(format!(
            "need at least 3 beta values, got {}",
            grid.len()
        )));
    }
    if let Some(bad) = grid.iter().find(|b| !(**b > 0.0 && **b <= 0.1)) {
        return Err(Error::DegenerateGrid(format!(
            "beta {bad} outside (0, 0.1]"
        )));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::DegenerateGrid(
            "beta values must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Compare the exact model against its first-order truncation over
/// `beta_grid`.
pub fn verify_expansion(
    m: &Material,
    f: &FieldState,
    beta_grid: &[f64],
) -> Result<ExpansionReport> {
    validate_grid(beta_grid)?;
    let points = beta_grid
        .iter()
        .map(|&beta| {
            let b = BoostSpec::paired(beta, m)?;
            let exact = me_density_exact(m, f, &b)?;
            let first_order = me_density_first_order(m, f, &b).total_first_order;
            Ok(ExpansionPoint {
                beta,
                exact,
                first_order,
                residual: (exact - first_order).abs(),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let identically_zero = points.iter().all(|p| p.residual == 0.0);
    let betas: Vec<f64> = points.iter().map(|p| p.beta).collect();
    let residuals: Vec<f64> = points.iter().map(|p| p.residual).collect();
    let slope = if identically_zero {
        None
    } else {
        loglog_slope(&betas, &residuals)
    };

    let derivative_numeric = central_difference(
        |beta| me_density_exact(m, f, &BoostSpec::paired(beta, m)?),
        0.0,
        DERIVATIVE_STEP,
    )?;
    let probe = BoostSpec::paired(beta_grid[0], m)?;
    let breakdown = me_density_first_order(m, f, &probe);
    let derivative_analytic = (breakdown.mixing + breakdown.mu_correction) / probe.beta();
    let derivative_delta = (derivative_numeric - derivative_analytic).abs();
    let scale = derivative_analytic.abs().max(breakdown.zeroth.abs());
    let derivative_relative = if derivative_delta == 0.0 {
        0.0
    } else {
        derivative_delta / scale
    };

    Ok(ExpansionReport {
        points,
        slope,
        identically_zero,
        derivative_numeric,
        derivative_analytic,
        derivative_delta,
        derivative_relative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Mat3;

    fn crossed() -> FieldState {
        FieldState::new(Vec3::X, Vec3::Y).unwrap()
    }

    fn glass(chi: Mat3) -> Material {
        Material::new(2.25, 1.0, chi, 1.0).unwrap()
    }

    fn boost(beta: f64) -> BoostSpec {
        BoostSpec::new(beta).unwrap()
    }

    #[test]
    fn exact_at_rest_is_rest_frame_term() {
        let m = glass(Mat3::antisymmetric_xy(1e-3));
        let f = crossed();
        assert_eq!(
            me_density_exact(&m, &f, &BoostSpec::REST).unwrap(),
            coupling(&m, &f) / m.mu()
        );
    }

    #[test]
    fn exact_vanishes_without_chi() {
        let m = glass(Mat3::ZERO);
        let f = FieldState::new(Vec3::new(0.3, 1.0, -2.0), Vec3::new(1.0, 0.5, 0.2)).unwrap();
        assert_eq!(me_density_exact(&m, &f, &boost(0.2)).unwrap(), 0.0);
    }

    #[test]
    fn exact_matches_high_precision_oracle() {
        // mpmath, 40 digits: 9.8831224182020851092e-4
        let m = glass(Mat3::antisymmetric_xy(1e-3));
        let value = me_density_exact(&m, &crossed(), &boost(0.01)).unwrap();
        assert!((value - 9.883_122_418_202_085e-4).abs() < 1e-15 * 1e-3);
    }

    #[test]
    fn first_order_at_rest() {
        let m = glass(Mat3::antisymmetric_xy(1e-3));
        let f = crossed();
        let lb = me_density_first_order(&m, &f, &BoostSpec::REST);
        assert_eq!(lb.mixing, 0.0);
        assert_eq!(lb.mu_correction, 0.0);
        assert_eq!(lb.total_first_order, coupling(&m, &f) / m.mu());
    }

    #[test]
    fn mu_correction_zero_for_unit_index() {
        let m = Material::new(2.0, 0.5, Mat3::diag(1e-3, 2e-3, -1e-3), 1.0).unwrap();
        let f = FieldState::new(Vec3::new(1.0, 2.0, 0.5), Vec3::new(-1.0, 0.3, 2.0)).unwrap();
        for beta in [-0.5, 0.01, 0.3, 0.9] {
            assert_eq!(
                me_density_first_order(&m, &f, &boost(beta)).mu_correction,
                0.0
            );
        }
    }

    #[test]
    fn mu_correction_closed_form() {
        // 0.01 · (1.5 − 1/1.5) · 1e-3 = 8.3333…e-6
        let m = glass(Mat3::scalar(1e-3));
        let f = FieldState::new(Vec3::X, Vec3::X).unwrap();
        let lb = me_density_first_order(&m, &f, &boost(0.01));
        assert!((lb.mu_correction - 8.333_333_333_333_333e-6).abs() < 1e-15 * 8.4e-6);
    }

    #[test]
    fn vector_form_examples() {
        let f = FieldState::new(Vec3::new(1.0, 0.5, 0.0), Vec3::new(-0.2, 1.0, 0.4)).unwrap();
        let m = glass(Mat3::antisymmetric_xy(1e-3));
        assert_eq!(vector_form_density(&m, &f, &BoostSpec::REST), 0.0);

        // χ ∝ 1: both cross products vanish, only the index term survives.
        let m = glass(Mat3::scalar(2e-3));
        let b = boost(0.01);
        let lb = me_density_first_order(&m, &f, &b);
        let vf = vector_form_density(&m, &f, &b);
        assert!((vf - lb.mu_correction).abs() <= 1e-15 * lb.mu_correction.abs());
    }

    #[test]
    fn isolate_mu_term_examples() {
        let f = FieldState::new(Vec3::X, Vec3::X).unwrap();
        let m = glass(Mat3::scalar(1.0));
        assert_eq!(isolate_mu_term(&m, &f, &BoostSpec::REST).unwrap(), 0.0);

        let unit = Material::new(2.0, 0.5, Mat3::scalar(1.0), 1.0).unwrap();
        assert!(isolate_mu_term(&unit, &f, &boost(0.4)).unwrap().abs() < 1e-15);

        // B·χᵀE = 1
        let b = boost(1e-3);
        let iso = isolate_mu_term(&m, &f, &b).unwrap();
        let mc = me_density_first_order(&m, &f, &b).mu_correction;
        assert!((iso - mc).abs() / mc.abs() < 1e-3);
    }

    #[test]
    fn grid_validation() {
        let m = glass(Mat3::antisymmetric_xy(1e-3));
        let f = crossed();
        assert!(matches!(
            verify_expansion(&m, &f, &[1e-3, 1e-2]),
            Err(Error::DegenerateGrid(_))
        ));
        assert!(verify_expansion(&m, &f, &[1e-3, 1e-4, 1e-2]).is_err());
        assert!(verify_expansion(&m, &f, &[1e-3, 1e-2, 0.2]).is_err());
        assert!(verify_expansion(&m, &f, &[0.0, 1e-3, 1e-2]).is_err());
    }

    #[test]
    fn expansion_generic_slope_two() {
        let chi = Mat3::from_row_major([1e-3, 2e-4, -3e-4, -5e-4, 7e-4, 1e-4, 2e-4, -1e-4, 4e-4])
            .unwrap();
        let m = Material::new(2.25, 1.3, chi, 1.0).unwrap();
        let f = FieldState::new(Vec3::new(0.7, -0.4, 0.2), Vec3::new(0.3, 0.9, -0.5)).unwrap();
        let report = verify_expansion(&m, &f, &DEFAULT_BETA_GRID).unwrap();
        let slope = report.slope.unwrap();
        assert!((1.9..=2.1).contains(&slope), "slope {slope}");
        assert!(report.derivative_ok(), "{report:?}");
        assert!(report.passed());
    }

    #[test]
    fn expansion_zero_chi_flags_identically_zero() {
        let m = glass(Mat3::ZERO);
        let report = verify_expansion(&m, &crossed(), &DEFAULT_BETA_GRID).unwrap();
        assert!(report.identically_zero);
        assert_eq!(report.slope, None);
        assert!(report.passed());
    }

    #[test]
    fn expansion_unit_index() {
        let m = Material::new(2.0, 0.5, Mat3::antisymmetric_xy(1e-3), 1.0).unwrap();
        let f = FieldState::new(Vec3::new(1.0, 0.2, 0.0), Vec3::new(0.1, 1.0, 0.0)).unwrap();
        assert_ne!(coupling(&m, &f), 0.0);
        let report = verify_expansion(&m, &f, &DEFAULT_BETA_GRID).unwrap();
        assert!(report.slope_ok(), "{report:?}");
        assert!(report.derivative_ok(), "{report:?}");
    }

    #[test]
    fn zero_fields_are_legal() {
        let m = glass(Mat3::antisymmetric_xy(1e-3));
        let f = FieldState::default();
        let lb = me_density_first_order(&m, &f, &boost(0.05));
        assert_eq!(lb.total_first_order, 0.0);
        assert_eq!(me_density_exact(&m, &f, &boost(0.05)).unwrap(), 0.0);
        assert!(
            verify_expansion(&m, &f, &DEFAULT_BETA_GRID)
                .unwrap()
                .identically_zero
        );
    }
}
