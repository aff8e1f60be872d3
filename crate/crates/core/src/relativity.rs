//! Optical constants and fields seen from the lab frame for a medium moving
//! along ẑ.
//!
//! For a medium with intrinsic `ε`, `μ` and index `n = √(εμ)` moving at
//! `β = v/c`, the transverse constants observed in the lab are
//!
//! ```text
//! μ′ = √(μ/ε) · (n + β)/(1 + nβ)
//! ε′ = √(ε/μ) · (n + β)/(1 + nβ)
//! ```
//!
//! Both are scaled by the same boost factor, so the impedance `ε′/μ′ = ε/μ`
//! is unchanged and the lab index `√(ε′μ′)` is the relativistic sum of `n`
//! and `β`. Only the transverse (x–y) response is defined; `χ` is left
//! untransformed.

use crate::algebra::{BoostSpec, FieldState, Material, Vec3};
use crate::error::Result;

/// `ε′`, `μ′` at a given boost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformedConstants {
    pub epsilon_prime: f64,
    pub mu_prime: f64,
    pub beta: f64,
}

impl TransformedConstants {
    /// `ε′/μ′`
    pub fn impedance_ratio(&self) -> f64 {
        self.epsilon_prime / self.mu_prime
    }
}

/// Truncation used by [`transform_fields`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOrder {
    Exact,
    FirstOrder,
}

/// `(n + β)/(1 + nβ)`, the relativistic composition of index and boost.
pub fn boost_factor(index: f64, beta: f64) -> f64 {
    (index + beta) / (1.0 + index * beta)
}

/// Lab-frame `ε′`, `μ′` of the moving medium.
///
/// Fails with `DegenerateBoost` when `1 + nβ ≤ 0`. At `β = 0` the intrinsic
/// constants are returned unchanged.
pub fn transform_constants(m: &Material, b: &BoostSpec) -> Result<TransformedConstants> {
    let denominator = b.check_denominator(m)?;
    let beta = b.beta();
    if beta == 0.0 {
        return Ok(TransformedConstants {
            epsilon_prime: m.epsilon(),
            mu_prime: m.mu(),
            beta,
        });
    }
    let n = m.index();
    let factor = (n + beta) / denominator;
    Ok(TransformedConstants {
        epsilon_prime: (m.epsilon() / m.mu()).sqrt() * factor,
        mu_prime: (m.mu() / m.epsilon()).sqrt() * factor,
        beta,
    })
}

/// Lab-frame index `√(ε′μ′)`, signed like `ε′`.
///
/// `ε′` and `μ′` always share a sign. Both turn negative when `n < 1` and
/// `β < −n`; the signed index then still equals `(n + β)/(1 + nβ)`.
pub fn index_of(tc: &TransformedConstants) -> f64 {
    (tc.epsilon_prime * tc.mu_prime)
        .sqrt()
        .copysign(tc.epsilon_prime)
}

/// Lorentz transformation of a field pair into the frame moving at `βẑ`.
///
/// `Exact` applies `E′⊥ = γ(E + βẑ×B)⊥`, `B′⊥ = γ(B − βẑ×E)⊥` and leaves the
/// ẑ components alone. `FirstOrder` drops γ and keeps the linear terms for
/// every component.
pub fn transform_fields(f: &FieldState, b: &BoostSpec, order: FieldOrder) -> FieldState {
    let beta = b.beta();
    if beta == 0.0 {
        return *f;
    }
    let e_shift = Vec3::Z.cross(f.b) * beta;
    let b_shift = Vec3::Z.cross(f.e) * beta;
    match order {
        FieldOrder::FirstOrder => FieldState {
            e: f.e + e_shift,
            b: f.b - b_shift,
        },
        FieldOrder::Exact => {
            let gamma = b.gamma();
            let e = f.e + e_shift;
            let bf = f.b - b_shift;
            FieldState {
                e: Vec3::new(gamma * e.x, gamma * e.y, f.e.z),
                b: Vec3::new(gamma * bf.x, gamma * bf.y, f.b.z),
            }
        }
    }
}
