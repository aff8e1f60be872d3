//! C ABI over `mevac`.
//!
//! Every entry point returns a [`MevacStatus`] and writes results through out
//! pointers, which are left untouched on failure. Materials and mode sets are
//! opaque heap handles owned by the caller and released with the matching
//! `*_free` function. Panics never cross the boundary; they surface as
//! `MEVAC_STATUS_PANIC`.
//!
//! The header `include/mevac.h` is generated by the build script.

#![allow(clippy::missing_safety_doc)]

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use mevac::lagrangian::{
    isolate_mu_term, me_density_exact, me_density_first_order, vector_form_density,
    verify_expansion,
};
use mevac::momentum::{lagrangian_consistency_check, medium_velocity, VelocityResult};
use mevac::relativity::{index_of, transform_constants};
use mevac::vacuum::{build_mode_set, vacuum_bilinears, ModeSet};
use mevac::{BoostSpec, Error, FieldState, Mat3, Material, Vec3};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MevacStatus {
    Ok = 0,
    NullPointer = 1,
    NonFinite = 2,
    InvalidMaterial = 3,
    SuperluminalBoost = 4,
    DegenerateBoost = 5,
    DegenerateGrid = 6,
    DegenerateProbe = 7,
    DivisionDegenerate = 8,
    InvalidModeSet = 9,
    EmptyModeSet = 10,
    Panic = 11,
}

impl From<&Error> for MevacStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NonFinite(_) => MevacStatus::NonFinite,
            Error::InvalidMaterial(_) => MevacStatus::InvalidMaterial,
            Error::SuperluminalBoost(_) => MevacStatus::SuperluminalBoost,
            Error::DegenerateBoost { .. } => MevacStatus::DegenerateBoost,
            Error::DegenerateGrid(_) => MevacStatus::DegenerateGrid,
            Error::DegenerateProbe(_) => MevacStatus::DegenerateProbe,
            Error::DivisionDegenerate => MevacStatus::DivisionDegenerate,
            Error::InvalidModeSet(_) => MevacStatus::InvalidModeSet,
            Error::EmptyModeSet { .. } => MevacStatus::EmptyModeSet,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MevacVec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl From<Vec3> for MevacVec3 {
    fn from(v: Vec3) -> Self {
        Self {
            x: v.x,
            y: v.y,
            z: v.z,
        }
    }
}

impl From<MevacVec3> for Vec3 {
    fn from(v: MevacVec3) -> Self {
        Vec3::new(v.x, v.y, v.z)
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MevacFields {
    pub e: MevacVec3,
    pub b: MevacVec3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MevacTransformed {
    pub epsilon_prime: f64,
    pub mu_prime: f64,
    pub index_prime: f64,
    pub impedance_ratio: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MevacBreakdown {
    pub zeroth: f64,
    pub mixing_b: f64,
    pub mixing_e: f64,
    pub mixing: f64,
    pub mu_correction: f64,
    pub total_first_order: f64,
}

/// Summary of an expansion check. `slope` is NaN when undefined.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MevacExpansionSummary {
    pub slope: f64,
    pub identically_zero: bool,
    pub derivative_numeric: f64,
    pub derivative_analytic: f64,
    pub derivative_relative: f64,
    pub passed: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MevacVelocity {
    pub rhs: MevacVec3,
    pub v_z: f64,
    pub abraham_minkowski: MevacVec3,
    pub chi_e: MevacVec3,
    pub chi_b: MevacVec3,
    pub shen_z: f64,
    pub transverse_residual: f64,
}

impl From<VelocityResult> for MevacVelocity {
    fn from(r: VelocityResult) -> Self {
        Self {
            rhs: r.rhs_vector.into(),
            v_z: r.v_z,
            abraham_minkowski: r.abraham_minkowski_term.into(),
            chi_e: r.chi_e_term.into(),
            chi_b: r.chi_b_term.into(),
            shen_z: r.shen_term_z,
            transverse_residual: r.transverse_residual,
        }
    }
}

/// Weighted zero-point sums and their gross magnitudes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MevacBilinears {
    pub e_cross_b: MevacVec3,
    pub e_cross_chi_t_e: MevacVec3,
    pub b_cross_chi_b: MevacVec3,
    pub b_dot_chi_t_e: f64,
    pub e_cross_b_gross: f64,
    pub e_cross_chi_t_e_gross: f64,
    pub b_cross_chi_b_gross: f64,
    pub b_dot_chi_t_e_gross: f64,
    pub mode_count: usize,
}

/// Opaque material handle.
pub struct MevacMaterial(Material);

/// Opaque vacuum mode-set handle.
pub struct MevacModeSet(ModeSet);

fn guard(f: impl FnOnce() -> Result<(), MevacStatus>) -> MevacStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MevacStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => MevacStatus::Panic,
    }
}

fn lift<T>(r: mevac::Result<T>) -> Result<T, MevacStatus> {
    r.map_err(|e| MevacStatus::from(&e))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, MevacStatus> {
    p.as_ref().ok_or(MevacStatus::NullPointer)
}

unsafe fn store<T>(out: *mut T, value: T) -> Result<(), MevacStatus> {
    if out.is_null() {
        return Err(MevacStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

unsafe fn fields(f: *const MevacFields) -> Result<FieldState, MevacStatus> {
    let f = deref(f)?;
    lift(FieldState::new(f.e.into(), f.b.into()))
}

/// Static description of a status code. Never null.
#[no_mangle]
pub extern "C" fn mevac_status_message(status: MevacStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        MevacStatus::Ok => b"ok\0",
        MevacStatus::NullPointer => b"null pointer argument\0",
        MevacStatus::NonFinite => b"non-finite input\0",
        MevacStatus::InvalidMaterial => b"invalid material constants\0",
        MevacStatus::SuperluminalBoost => b"boost |beta| must be below 1\0",
        MevacStatus::DegenerateBoost => b"degenerate boost: 1 + n*beta <= 0\0",
        MevacStatus::DegenerateGrid => b"invalid beta grid\0",
        MevacStatus::DegenerateProbe => b"probe outside (0, 1e-3]\0",
        MevacStatus::DivisionDegenerate => b"ratio undefined\0",
        MevacStatus::InvalidModeSet => b"invalid mode-set parameters\0",
        MevacStatus::EmptyModeSet => b"mode set is empty\0",
        MevacStatus::Panic => b"internal panic\0",
    };
    s.as_ptr().cast()
}

/// Library version, NUL-terminated.
#[no_mangle]
pub extern "C" fn mevac_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Create a material. `chi` points to 9 row-major entries, or is null for
/// `χ = 0`.
#[no_mangle]
pub unsafe extern "C" fn mevac_material_new(
    epsilon: f64,
    mu: f64,
    chi: *const f64,
    rho0: f64,
    out: *mut *mut MevacMaterial,
) -> MevacStatus {
    guard(|| {
        let chi = if chi.is_null() {
            Mat3::ZERO
        } else {
            let mut entries = [0.0; 9];
            entries.copy_from_slice(std::slice::from_raw_parts(chi, 9));
            lift(Mat3::from_row_major(entries))?
        };
        let m = lift(Material::new(epsilon, mu, chi, rho0))?;
        store(out, Box::into_raw(Box::new(MevacMaterial(m))))
    })
}

/// Release a material. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn mevac_material_free(material: *mut MevacMaterial) {
    if !material.is_null() {
        drop(Box::from_raw(material));
    }
}

/// `n = √(εμ)`
#[no_mangle]
pub unsafe extern "C" fn mevac_material_index(
    material: *const MevacMaterial,
    out: *mut f64,
) -> MevacStatus {
    guard(|| store(out, deref(material)?.0.index()))
}

#[no_mangle]
pub unsafe extern "C" fn mevac_transform_constants(
    material: *const MevacMaterial,
    beta: f64,
    out: *mut MevacTransformed,
) -> MevacStatus {
    guard(|| {
        let m = &deref(material)?.0;
        let tc = lift(transform_constants(m, &lift(BoostSpec::new(beta))?))?;
        store(
            out,
            MevacTransformed {
                epsilon_prime: tc.epsilon_prime,
                mu_prime: tc.mu_prime,
                index_prime: index_of(&tc),
                impedance_ratio: tc.impedance_ratio(),
            },
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn mevac_me_density_exact(
    material: *const MevacMaterial,
    f: *const MevacFields,
    beta: f64,
    out: *mut f64,
) -> MevacStatus {
    guard(|| {
        let m = &deref(material)?.0;
        let value = lift(me_density_exact(
            m,
            &fields(f)?,
            &lift(BoostSpec::new(beta))?,
        ))?;
        store(out, value)
    })
}

#[no_mangle]
pub unsafe extern "C" fn mevac_me_density_first_order(
    material: *const MevacMaterial,
    f: *const MevacFields,
    beta: f64,
    out: *mut MevacBreakdown,
) -> MevacStatus {
    guard(|| {
        let m = &deref(material)?.0;
        let b = me_density_first_order(m, &fields(f)?, &lift(BoostSpec::new(beta))?);
        store(
            out,
            MevacBreakdown {
                zeroth: b.zeroth,
                mixing_b: b.mixing_b,
                mixing_e: b.mixing_e,
                mixing: b.mixing,
                mu_correction: b.mu_correction,
                total_first_order: b.total_first_order,
            },
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn mevac_vector_form_density(
    material: *const MevacMaterial,
    f: *const MevacFields,
    beta: f64,
    out: *mut f64,
) -> MevacStatus {
    guard(|| {
        let m = &deref(material)?.0;
        store(
            out,
            vector_form_density(m, &fields(f)?, &lift(BoostSpec::new(beta))?),
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn mevac_isolate_mu_term(
    material: *const MevacMaterial,
    f: *const MevacFields,
    beta: f64,
    out: *mut f64,
) -> MevacStatus {
    guard(|| {
        let m = &deref(material)?.0;
        let value = lift(isolate_mu_term(
            m,
            &fields(f)?,
            &lift(BoostSpec::new(beta))?,
        ))?;
        store(out, value)
    })
}

/// Expansion check over `grid_len` boosts at `grid`.
#[no_mangle]
pub unsafe extern "C" fn mevac_verify_expansion(
    material: *const MevacMaterial,
    f: *const MevacFields,
    grid: *const f64,
    grid_len: usize,
    out: *mut MevacExpansionSummary,
) -> MevacStatus {
    guard(|| {
        let m = &deref(material)?.0;
        if grid.is_null() {
            return Err(MevacStatus::NullPointer);
        }
        let grid = std::slice::from_raw_parts(grid, grid_len);
        let r = lift(verify_expansion(m, &fields(f)?, grid))?;
        store(
            out,
            MevacExpansionSummary {
                slope: r.slope.unwrap_or(f64::NAN),
                identically_zero: r.identically_zero,
                derivative_numeric: r.derivative_numeric,
                derivative_analytic: r.derivative_analytic,
                derivative_relative: r.derivative_relative,
                passed: r.passed(),
            },
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn mevac_medium_velocity(
    material: *const MevacMaterial,
    f: *const MevacFields,
    out: *mut MevacVelocity,
) -> MevacStatus {
    guard(|| {
        let m = &deref(material)?.0;
        store(out, medium_velocity(m, &fields(f)?).into())
    })
}

#[no_mangle]
pub unsafe extern "C" fn mevac_consistency_check(
    material: *const MevacMaterial,
    f: *const MevacFields,
    beta_probe: f64,
    out: *mut f64,
) -> MevacStatus {
    guard(|| {
        let m = &deref(material)?.0;
        let value = lift(lagrangian_consistency_check(m, &fields(f)?, beta_probe))?;
        store(out, value)
    })
}

/// Build the zero-point mode set of `material` on a `grid_n³` grid.
#[no_mangle]
pub unsafe extern "C" fn mevac_mode_set_new(
    material: *const MevacMaterial,
    grid_n: usize,
    cutoff: f64,
    volume: f64,
    out: *mut *mut MevacModeSet,
) -> MevacStatus {
    guard(|| {
        let m = &deref(material)?.0;
        let ms = lift(build_mode_set(m, grid_n, cutoff, volume))?;
        store(out, Box::into_raw(Box::new(MevacModeSet(ms))))
    })
}

/// Number of modes (two per kept wavevector).
#[no_mangle]
pub unsafe extern "C" fn mevac_mode_set_len(
    modes: *const MevacModeSet,
    out: *mut usize,
) -> MevacStatus {
    guard(|| store(out, deref(modes)?.0.len()))
}

/// Release a mode set. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn mevac_mode_set_free(modes: *mut MevacModeSet) {
    if !modes.is_null() {
        drop(Box::from_raw(modes));
    }
}

#[no_mangle]
pub unsafe extern "C" fn mevac_vacuum_bilinears(
    modes: *const MevacModeSet,
    material: *const MevacMaterial,
    out: *mut MevacBilinears,
) -> MevacStatus {
    guard(|| {
        let ms = &deref(modes)?.0;
        let m = &deref(material)?.0;
        let s = vacuum_bilinears(ms, m);
        store(
            out,
            MevacBilinears {
                e_cross_b: s.sums.e_cross_b.into(),
                e_cross_chi_t_e: s.sums.e_cross_chi_t_e.into(),
                b_cross_chi_b: s.sums.b_cross_chi_b.into(),
                b_dot_chi_t_e: s.sums.b_dot_chi_t_e,
                e_cross_b_gross: s.e_cross_b_gross,
                e_cross_chi_t_e_gross: s.e_cross_chi_t_e_gross,
                b_cross_chi_b_gross: s.b_cross_chi_b_gross,
                b_dot_chi_t_e_gross: s.b_dot_chi_t_e_gross,
                mode_count: s.mode_count,
            },
        )
    })
}
