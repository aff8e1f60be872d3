//! Zero-point averages of the velocity-equation bilinears.
//!
//! The vacuum is modelled as a finite set of plane-wave modes in the medium:
//! a cell-centred Cartesian grid of `grid_n³` wavevectors spanning
//! `[−Λ, Λ]³`, restricted to `|k| ≤ Λ`, with two transverse polarizations per
//! wavevector. Each mode carries the zero-point energy `ħω/2` in the
//! quantization volume `V`, which in Gaussian units gives the field amplitude
//!
//! ```text
//! a = √(2πħω/V),   ω = c|k|/n,   E = a e,   B = n a k̂×e.
//! ```
//!
//! The cycle-average factor ½ of the real-field bilinears is absorbed into
//! `a`, so every sum below is a plain `Σ` of products of these amplitudes.
//! A grid point stands for `V Δk³/(2π)³` physical modes (`Δk = 2Λ/grid_n`);
//! sums carry this weight, which makes them intensive (independent of `V`)
//! and turns them into Riemann sums of the continuum integrals.
//!
//! The cutoff is a free regulator. Nothing here claims a finite physical
//! vacuum momentum; [`cutoff_sweep`] reports how each sum scales with it.
//!
//! Summation is split into fixed-size chunks that may run on any number of
//! threads; each chunk is compensated and the chunk partials are reduced in
//! index order, so results are bit-identical for every thread count.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::algebra::{Material, Vec3};
use crate::constants::{HBAR, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::fit::{loglog_slope, CompensatedSum};
use crate::momentum::FieldBilinears;

/// Modes per summation chunk. Part of the result's bit pattern.
const CHUNK: usize = 512;
/// Largest accepted points per axis.
pub const MAX_GRID_N: usize = 256;
/// A signed sum within this fraction of its gross magnitude is treated as
/// cancelled by symmetry.
pub const NULL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mode {
    /// Wavevector, rad/cm.
    pub k: Vec3,
    /// Unit polarization, orthogonal to `k`.
    pub polarization: Vec3,
    /// Angular frequency `c|k|/n`, rad/s.
    pub omega: f64,
    /// Zero-point field amplitude, statvolt/cm.
    pub amplitude: f64,
}

impl Mode {
    /// `(E, B)` of this mode in a medium of the given index.
    pub fn fields(&self, index: f64) -> (Vec3, Vec3) {
        let e = self.polarization * self.amplitude;
        let k_hat = self.k / self.k.norm();
        (e, k_hat.cross(e) * index)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeSet {
    modes: Vec<Mode>,
    cutoff: f64,
    volume: f64,
    grid_n: usize,
    cell_weight: f64,
}

impl ModeSet {
    /// Modes in generation order; polarizations of one wavevector are
    /// adjacent.
    pub fn modes(&self) -> &[Mode] {
        &self.modes
    }

    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn volume(&self) -> f64 {
        self.volume
    }

    pub fn grid_n(&self) -> usize {
        self.grid_n
    }

    /// Physical modes represented by each grid point, `V Δk³/(2π)³`.
    pub fn cell_weight(&self) -> f64 {
        self.cell_weight
    }

    /// Total zero-point energy `Σ w ħω/2` in the quantization volume, erg.
    pub fn zero_point_energy(&self) -> f64 {
        let mut sum = CompensatedSum::default();
        for mode in &self.modes {
            sum.add(0.5 * HBAR * mode.omega);
        }
        self.cell_weight * sum.value()
    }

    /// Rotate the polarization pair of wavevector `p` about `k̂` by
    /// `angle(p)` radians.
    pub fn rotate_polarizations(&self, angle: impl Fn(usize) -> f64) -> ModeSet {
        let mut modes = self.modes.clone();
        for (p, pair) in modes.chunks_exact_mut(2).enumerate() {
            let (s, c) = angle(p).sin_cos();
            let e1 = pair[0].polarization;
            let e2 = pair[1].polarization;
            pair[0].polarization = e1 * c + e2 * s;
            pair[1].polarization = e2 * c - e1 * s;
        }
        ModeSet {
            modes,
            ..self.clone()
        }
    }
}

/// Unit vector orthogonal to `k_hat`, built from the coordinate axis least
/// aligned with it (lowest index on ties).
fn transverse_basis(k_hat: Vec3) -> (Vec3, Vec3) {
    let c = k_hat.to_array().map(f64::abs);
    let axis = if c[0] <= c[1] && c[0] <= c[2] {
        Vec3::X
    } else if c[1] <= c[2] {
        Vec3::Y
    } else {
        Vec3::Z
    };
    let e1 = axis
        .cross(k_hat)
        .normalized()
        .expect("axis least aligned with a unit vector is never parallel to it");
    (e1, k_hat.cross(e1))
}

/// Discretize the zero-point modes of the medium.
pub fn build_mode_set(m: &Material, grid_n: usize, cutoff: f64, volume: f64) -> Result<ModeSet> {
    if !(2..=MAX_GRID_N).contains(&grid_n) {
        return Err(Error::InvalidModeSet(format!(
            "grid_n = {grid_n} outside [2, {MAX_GRID_N}]"
        )));
    }
    if !(cutoff.is_finite() && cutoff > 0.0) {
        return Err(Error::InvalidModeSet(format!(
            "cutoff = {cutoff} must be > 0"
        )));
    }
    if !(volume.is_finite() && volume > 0.0) {
        return Err(Error::InvalidModeSet(format!(
            "volume = {volume} must be > 0"
        )));
    }

    let n = m.index();
    let spacing = 2.0 * cutoff / grid_n as f64;
    let cell_weight = volume * spacing.powi(3) / (2.0 * PI).powi(3);
    // Integer numerators keep the grid exactly symmetric under k → −k.
    let coordinate = |i: usize| cutoff * (2 * i as i64 + 1 - grid_n as i64) as f64 / grid_n as f64;
    let cutoff_sq = cutoff * cutoff;

    let mut modes = Vec::new();
    for ix in 0..grid_n {
        for iy in 0..grid_n {
            for iz in 0..grid_n {
                let k = Vec3::new(coordinate(ix), coordinate(iy), coordinate(iz));
                let k_sq = k.norm_squared();
                if k_sq == 0.0 || k_sq > cutoff_sq {
                    continue;
                }
                let k_norm = k_sq.sqrt();
                let omega = SPEED_OF_LIGHT * k_norm / n;
                let amplitude = (2.0 * PI * HBAR * omega / volume).sqrt();
                let (e1, e2) = transverse_basis(k / k_norm);
                for polarization in [e1, e2] {
                    modes.push(Mode {
                        k,
                        polarization,
                        omega,
                        amplitude,
                    });
                }
            }
        }
    }
    if modes.is_empty() {
        return Err(Error::EmptyModeSet { grid_n, cutoff });
    }
    Ok(ModeSet {
        modes,
        cutoff,
        volume,
        grid_n,
        cell_weight,
    })
}

/// Weighted mode sums of the four bilinears, with their gross magnitudes
/// `Σ w |per-mode term|` as the scale for cancellation checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilinearSums {
    pub sums: FieldBilinears,
    pub e_cross_b_gross: f64,
    pub e_cross_chi_t_e_gross: f64,
    pub b_cross_chi_b_gross: f64,
    pub b_dot_chi_t_e_gross: f64,
    pub mode_count: usize,
}

/// One of the four bilinears, for slope and null queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bilinear {
    ECrossB,
    ECrossChiTE,
    BCrossChiB,
    BDotChiTE,
}

impl Bilinear {
    pub const ALL: [Bilinear; 4] = [
        Bilinear::ECrossB,
        Bilinear::ECrossChiTE,
        Bilinear::BCrossChiB,
        Bilinear::BDotChiTE,
    ];
}

impl BilinearSums {
    /// Magnitude of the signed sum (vector norm or absolute value).
    pub fn magnitude(&self, which: Bilinear) -> f64 {
        match which {
            Bilinear::ECrossB => self.sums.e_cross_b.norm(),
            Bilinear::ECrossChiTE => self.sums.e_cross_chi_t_e.norm(),
            Bilinear::BCrossChiB => self.sums.b_cross_chi_b.norm(),
            Bilinear::BDotChiTE => self.sums.b_dot_chi_t_e.abs(),
        }
    }

    pub fn gross(&self, which: Bilinear) -> f64 {
        match which {
            Bilinear::ECrossB => self.e_cross_b_gross,
            Bilinear::ECrossChiTE => self.e_cross_chi_t_e_gross,
            Bilinear::BCrossChiB => self.b_cross_chi_b_gross,
            Bilinear::BDotChiTE => self.b_dot_chi_t_e_gross,
        }
    }

    /// The signed sum vanishes, either identically or by cancellation to
    /// within [`NULL_TOLERANCE`] of its gross magnitude.
    pub fn is_null(&self, which: Bilinear) -> bool {
        self.magnitude(which) <= NULL_TOLERANCE * self.gross(which)
    }
}

#[derive(Default, Clone, Copy)]
struct Accumulator {
    e_cross_b: [CompensatedSum; 3],
    e_cross_chi_t_e: [CompensatedSum; 3],
    b_cross_chi_b: [CompensatedSum; 3],
    b_dot_chi_t_e: CompensatedSum,
    gross: [CompensatedSum; 4],
}

fn add_vec(acc: &mut [CompensatedSum; 3], v: Vec3) {
    for (a, c) in acc.iter_mut().zip(v.to_array()) {
        a.add(c);
    }
}

fn value_vec(acc: &[CompensatedSum; 3]) -> Vec3 {
    Vec3::new(acc[0].value(), acc[1].value(), acc[2].value())
}

impl Accumulator {
    fn add(&mut self, bl: &FieldBilinears) {
        add_vec(&mut self.e_cross_b, bl.e_cross_b);
        add_vec(&mut self.e_cross_chi_t_e, bl.e_cross_chi_t_e);
        add_vec(&mut self.b_cross_chi_b, bl.b_cross_chi_b);
        self.b_dot_chi_t_e.add(bl.b_dot_chi_t_e);
        self.gross[0].add(bl.e_cross_b.norm());
        self.gross[1].add(bl.e_cross_chi_t_e.norm());
        self.gross[2].add(bl.b_cross_chi_b.norm());
        self.gross[3].add(bl.b_dot_chi_t_e.abs());
    }

    fn partial(&self) -> (FieldBilinears, [f64; 4]) {
        (
            FieldBilinears {
                e_cross_b: value_vec(&self.e_cross_b),
                e_cross_chi_t_e: value_vec(&self.e_cross_chi_t_e),
                b_cross_chi_b: value_vec(&self.b_cross_chi_b),
                b_dot_chi_t_e: self.b_dot_chi_t_e.value(),
            },
            self.gross.map(|g| g.value()),
        )
    }
}

/// Bilinears of a single mode, unweighted.
pub fn mode_bilinears(mode: &Mode, m: &Material) -> FieldBilinears {
    let (e, b) = mode.fields(m.index());
    let chi = m.chi();
    FieldBilinears {
        e_cross_b: e.cross(b),
        e_cross_chi_t_e: e.cross(chi.transpose().apply(e)),
        b_cross_chi_b: b.cross(chi.apply(b)),
        b_dot_chi_t_e: b.dot(chi.transpose().apply(e)),
    }
}

/// Sum the bilinears over every mode of `ms` in medium `m`.
pub fn vacuum_bilinears(ms: &ModeSet, m: &Material) -> BilinearSums {
    let partials: Vec<(FieldBilinears, [f64; 4])> = ms
        .modes
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut acc = Accumulator::default();
            for mode in chunk {
                acc.add(&mode_bilinears(mode, m));
            }
            acc.partial()
        })
        .collect();

    let mut total = Accumulator::default();
    for (bl, gross) in &partials {
        total.add_partial(bl, gross);
    }
    let (sums, gross) = total.partial();
    let w = ms.cell_weight;
    BilinearSums {
        sums: FieldBilinears {
            e_cross_b: sums.e_cross_b * w,
            e_cross_chi_t_e: sums.e_cross_chi_t_e * w,
            b_cross_chi_b: sums.b_cross_chi_b * w,
            b_dot_chi_t_e: sums.b_dot_chi_t_e * w,
        },
        e_cross_b_gross: gross[0] * w,
        e_cross_chi_t_e_gross: gross[1] * w,
        b_cross_chi_b_gross: gross[2] * w,
        b_dot_chi_t_e_gross: gross[3] * w,
        mode_count: ms.len(),
    }
}

impl Accumulator {
    fn add_partial(&mut self, bl: &FieldBilinears, gross: &[f64; 4]) {
        add_vec(&mut self.e_cross_b, bl.e_cross_b);
        add_vec(&mut self.e_cross_chi_t_e, bl.e_cross_chi_t_e);
        add_vec(&mut self.b_cross_chi_b, bl.b_cross_chi_b);
        self.b_dot_chi_t_e.add(bl.b_dot_chi_t_e);
        for (g, v) in self.gross.iter_mut().zip(gross) {
            g.add(*v);
        }
    }
}

/// Quantity varied along a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    Cutoff,
    GridN,
    Volume,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeSpec {
    pub grid_n: usize,
    pub cutoff: f64,
    pub volume: f64,
}

impl ModeSpec {
    fn axis_value(&self, axis: SweepAxis) -> f64 {
        match axis {
            SweepAxis::Cutoff => self.cutoff,
            SweepAxis::GridN => self.grid_n as f64,
            SweepAxis::Volume => self.volume,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub spec: ModeSpec,
    pub sums: BilinearSums,
}

/// Log-log slopes of each bilinear magnitude against the swept quantity.
/// `None` for a bilinear that is null at some row, or with fewer than two
/// rows.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BilinearSlopes {
    pub e_cross_b: Option<f64>,
    pub e_cross_chi_t_e: Option<f64>,
    pub b_cross_chi_b: Option<f64>,
    pub b_dot_chi_t_e: Option<f64>,
}

impl BilinearSlopes {
    pub fn get(&self, which: Bilinear) -> Option<f64> {
        match which {
            Bilinear::ECrossB => self.e_cross_b,
            Bilinear::ECrossChiTE => self.e_cross_chi_t_e,
            Bilinear::BCrossChiB => self.b_cross_chi_b,
            Bilinear::BDotChiTE => self.b_dot_chi_t_e,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub axis: SweepAxis,
    pub rows: Vec<SweepRow>,
    pub slopes: BilinearSlopes,
}

/// Evaluate the bilinears at each spec, in order.
pub fn sweep(m: &Material, axis: SweepAxis, specs: &[ModeSpec]) -> Result<SweepReport> {
    let rows = specs
        .iter()
        .map(|spec| {
            let ms = build_mode_set(m, spec.grid_n, spec.cutoff, spec.volume)?;
            Ok(SweepRow {
                spec: *spec,
                sums: vacuum_bilinears(&ms, m),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let xs: Vec<f64> = rows.iter().map(|r| r.spec.axis_value(axis)).collect();
    let slope = |which: Bilinear| {
        if rows.iter().any(|r| r.sums.is_null(which)) {
            return None;
        }
        let ys: Vec<f64> = rows.iter().map(|r| r.sums.magnitude(which)).collect();
        loglog_slope(&xs, &ys)
    };
    let slopes = BilinearSlopes {
        e_cross_b: slope(Bilinear::ECrossB),
        e_cross_chi_t_e: slope(Bilinear::ECrossChiTE),
        b_cross_chi_b: slope(Bilinear::BCrossChiB),
        b_dot_chi_t_e: slope(Bilinear::BDotChiTE),
    };
    Ok(SweepReport { axis, rows, slopes })
}

/// Bilinears at each cutoff, with the grid scaled in proportion (fixed
/// `grid_n`).
pub fn cutoff_sweep(
    m: &Material,
    grid_n: usize,
    cutoffs: &[f64],
    volume: f64,
) -> Result<SweepReport> {
    if cutoffs.iter().any(|c| !c.is_finite() || *c <= 0.0) {
        return Err(Error::InvalidModeSet(
            "cutoffs must be finite and > 0".into(),
        ));
    }
    if cutoffs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidModeSet("cutoffs must be ascending".into()));
    }
    let specs: Vec<ModeSpec> = cutoffs
        .iter()
        .map(|&cutoff| ModeSpec {
            grid_n,
            cutoff,
            volume,
        })
        .collect();
    sweep(m, SweepAxis::Cutoff, &specs)
}
