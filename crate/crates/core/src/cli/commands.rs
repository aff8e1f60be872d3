use crate::algebra::{BoostSpec, FieldState};
use crate::error::Error;
use crate::lagrangian::verify_expansion;
use crate::momentum::{medium_velocity, velocity_from_bilinears, VelocityResult};
use crate::relativity::{boost_factor, index_of, transform_constants};
use crate::vacuum::{build_mode_set, sweep, vacuum_bilinears, Bilinear, ModeSpec, SweepAxis};

use super::config::{RunConfig, Scenario, SweepParameter};
use super::output::{Cell, Table};
use super::Failure;

/// Longitudinal field content above this fraction of the transverse
/// magnitude triggers a warning.
pub const LONGITUDINAL_WARN: f64 = 1e-9;

pub const TRANSFORM_COLUMNS: &[&str] = &[
    "beta",
    "epsilon",
    "mu",
    "epsilon_prime",
    "mu_prime",
    "n_prime",
    "impedance_ratio",
    "impedance_rel_delta",
    "index_rel_delta",
];

pub const EXPAND_COLUMNS: &[&str] = &[
    "epsilon",
    "mu",
    "beta",
    "exact",
    "first_order",
    "residual",
    "slope",
    "derivative_numeric",
    "derivative_analytic",
    "derivative_rel_delta",
    "identically_zero",
    "passed",
];

pub const VELOCITY_COLUMNS: &[&str] = &[
    "epsilon",
    "mu",
    "rho0",
    "source",
    "grid_n",
    "cutoff",
    "volume",
    "mode_count",
    "v_z",
    "rhs_x",
    "rhs_y",
    "rhs_z",
    "abraham_minkowski_x",
    "abraham_minkowski_y",
    "abraham_minkowski_z",
    "chi_e_x",
    "chi_e_y",
    "chi_e_z",
    "chi_b_x",
    "chi_b_y",
    "chi_b_z",
    "shen_term_z",
    "term_ratio",
    "transverse_residual",
];

pub const VACUUM_SWEEP_COLUMNS: &[&str] = &[
    "grid_n",
    "cutoff",
    "volume",
    "mode_count",
    "e_cross_b_x",
    "e_cross_b_y",
    "e_cross_b_z",
    "e_cross_chi_t_e_x",
    "e_cross_chi_t_e_y",
    "e_cross_chi_t_e_z",
    "b_cross_chi_b_x",
    "b_cross_chi_b_y",
    "b_cross_chi_b_z",
    "b_dot_chi_t_e",
    "slope_e_cross_b",
    "slope_e_cross_chi_t_e",
    "slope_b_cross_chi_b",
    "slope_b_dot_chi_t_e",
    "rel_change",
];

/// Command output plus anything destined for the diagnostic stream.
pub struct Outcome {
    pub table: Table,
    pub warnings: Vec<String>,
    /// Set when the computation finished but a verification failed.
    pub failure: Option<Failure>,
}

fn scenarios(
    cfg: &RunConfig,
    allowed: &[SweepParameter],
    command: &str,
) -> Result<Vec<Scenario>, Failure> {
    if let Some(sweep) = &cfg.sweep {
        if !allowed.contains(&sweep.parameter) {
            return Err(Failure::config(format!(
                "sweep.parameter: {command} cannot sweep {}",
                sweep.parameter.name()
            )));
        }
    }
    cfg.expand()
        .map_err(Failure::from)?
        .iter()
        .map(|(_, c)| c.resolve().map_err(Failure::from))
        .collect()
}

fn require_fields(s: &Scenario, command: &str) -> Result<FieldState, Failure> {
    s.fields
        .ok_or_else(|| Failure::config(format!("fields: {command} requires a [fields] section")))
}

fn longitudinal_warning(f: &FieldState, warnings: &mut Vec<String>) {
    let fraction = f.longitudinal_fraction();
    if fraction > LONGITUDINAL_WARN {
        let msg = format!(
            "warning: longitudinal (z) field components reach {fraction:.3e} of the transverse \
             magnitude; the constant transforms describe only the transverse response"
        );
        if !warnings.contains(&msg) {
            warnings.push(msg);
        }
    }
}

pub fn transform(cfg: &RunConfig) -> Result<Outcome, Failure> {
    use SweepParameter::*;
    let mut table = Table::new(TRANSFORM_COLUMNS);
    for s in scenarios(cfg, &[Beta, Epsilon, Mu], "transform")? {
        let beta = s.beta.ok_or_else(|| {
            Failure::config("boost: transform requires a [boost] section or --beta")
        })?;
        let m = &s.material;
        let boost = BoostSpec::new(beta).map_err(Failure::from)?;
        let tc = transform_constants(m, &boost).map_err(Failure::from)?;
        let impedance = m.epsilon() / m.mu();
        let n_prime = index_of(&tc);
        let expected_index = boost_factor(m.index(), beta);
        table.push(vec![
            beta.into(),
            m.epsilon().into(),
            m.mu().into(),
            tc.epsilon_prime.into(),
            tc.mu_prime.into(),
            n_prime.into(),
            tc.impedance_ratio().into(),
            ((tc.impedance_ratio() - impedance).abs() / impedance).into(),
            ((n_prime - expected_index).abs() / expected_index).into(),
        ]);
    }
    Ok(Outcome {
        table,
        warnings: Vec::new(),
        failure: None,
    })
}

pub fn expand_check(cfg: &RunConfig, grid: &[f64]) -> Result<Outcome, Failure> {
    use SweepParameter::*;
    let mut table = Table::new(EXPAND_COLUMNS);
    let mut warnings = Vec::new();
    let mut failed = Vec::new();
    for s in scenarios(cfg, &[Epsilon, Mu], "expand-check")? {
        let f = require_fields(&s, "expand-check")?;
        longitudinal_warning(&f, &mut warnings);
        let m = &s.material;
        let report = verify_expansion(m, &f, grid).map_err(Failure::from)?;
        if !report.passed() {
            failed.push(format!(
                "expansion check failed (epsilon = {}, mu = {}): slope {:?}, derivative relative delta {:.3e}",
                m.epsilon(),
                m.mu(),
                report.slope,
                report.derivative_relative
            ));
        }
        for p in &report.points {
            table.push(vec![
                m.epsilon().into(),
                m.mu().into(),
                p.beta.into(),
                p.exact.into(),
                p.first_order.into(),
                p.residual.into(),
                report.slope.into(),
                report.derivative_numeric.into(),
                report.derivative_analytic.into(),
                report.derivative_relative.into(),
                report.identically_zero.into(),
                report.passed().into(),
            ]);
        }
    }
    let failure = (!failed.is_empty()).then(|| Failure::verification(failed.join("\n")));
    Ok(Outcome {
        table,
        warnings,
        failure,
    })
}

fn velocity_row(
    s: &Scenario,
    source: &'static str,
    spec: Option<(ModeSpec, usize)>,
    r: &VelocityResult,
) -> Vec<Cell> {
    let m = &s.material;
    let (grid_n, cutoff, volume, count) = match spec {
        Some((spec, count)) => (
            Cell::from(spec.grid_n),
            Cell::from(spec.cutoff),
            Cell::from(spec.volume),
            Cell::from(count),
        ),
        None => (Cell::Missing, Cell::Missing, Cell::Missing, Cell::Missing),
    };
    let mut row = vec![
        m.epsilon().into(),
        m.mu().into(),
        m.rho0().into(),
        Cell::Text(source),
        grid_n,
        cutoff,
        volume,
        count,
        r.v_z.into(),
    ];
    for v in [
        r.rhs_vector,
        r.abraham_minkowski_term,
        r.chi_e_term,
        r.chi_b_term,
    ] {
        row.extend(v.to_array().map(Cell::from));
    }
    row.push(r.shen_term_z.into());
    row.push(r.term_ratio().ok().into());
    row.push(r.transverse_residual.into());
    row
}

pub fn velocity(cfg: &RunConfig) -> Result<Outcome, Failure> {
    use SweepParameter::*;
    let allowed: &[SweepParameter] = if cfg.vacuum.is_some() {
        &[Epsilon, Mu, Rho0, Cutoff, GridN, Volume]
    } else {
        &[Epsilon, Mu, Rho0]
    };
    let mut table = Table::new(VELOCITY_COLUMNS);
    let mut warnings = Vec::new();
    for s in scenarios(cfg, allowed, "velocity")? {
        let m = &s.material;
        match s.vacuum {
            Some(spec) => {
                let ms = build_mode_set(m, spec.grid_n, spec.cutoff, spec.volume)
                    .map_err(Failure::from)?;
                let sums = vacuum_bilinears(&ms, m);
                let r = velocity_from_bilinears(m, &sums.sums);
                table.push(velocity_row(&s, "vacuum", Some((spec, ms.len())), &r));
            }
            None => {
                let f = require_fields(&s, "velocity")?;
                longitudinal_warning(&f, &mut warnings);
                let r = medium_velocity(m, &f);
                table.push(velocity_row(&s, "classical", None, &r));
            }
        }
    }
    Ok(Outcome {
        table,
        warnings,
        failure: None,
    })
}

pub fn vacuum_sweep(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let sweep_cfg = cfg
        .sweep
        .as_ref()
        .ok_or_else(|| Failure::config("sweep: vacuum-sweep requires a [sweep] section"))?;
    let axis = match sweep_cfg.parameter {
        SweepParameter::Cutoff => SweepAxis::Cutoff,
        SweepParameter::GridN => SweepAxis::GridN,
        SweepParameter::Volume => SweepAxis::Volume,
        other => {
            return Err(Failure::config(format!(
                "sweep.parameter: vacuum-sweep cannot sweep {}",
                other.name()
            )))
        }
    };
    let list = scenarios(
        cfg,
        &[
            SweepParameter::Cutoff,
            SweepParameter::GridN,
            SweepParameter::Volume,
        ],
        "vacuum-sweep",
    )?;
    let Some(first) = list.first() else {
        return Err(Failure::config("sweep.values: must not be empty"));
    };
    let m = first.material;
    let specs = list
        .iter()
        .map(|s| {
            s.vacuum
                .ok_or_else(|| Failure::config("vacuum: vacuum-sweep requires a [vacuum] section"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let report = sweep(&m, axis, &specs).map_err(Failure::from)?;

    let mut table = Table::new(VACUUM_SWEEP_COLUMNS);
    let mut previous: Option<&crate::vacuum::BilinearSums> = None;
    for row in &report.rows {
        let sums = &row.sums;
        let mut cells = vec![
            Cell::from(row.spec.grid_n),
            row.spec.cutoff.into(),
            row.spec.volume.into(),
            sums.mode_count.into(),
        ];
        for v in [
            sums.sums.e_cross_b,
            sums.sums.e_cross_chi_t_e,
            sums.sums.b_cross_chi_b,
        ] {
            cells.extend(v.to_array().map(Cell::from));
        }
        cells.push(sums.sums.b_dot_chi_t_e.into());
        for which in Bilinear::ALL {
            cells.push(report.slopes.get(which).into());
        }
        let change = previous.and_then(|prev| {
            Bilinear::ALL
                .iter()
                .filter(|w| !sums.is_null(**w) && !prev.is_null(**w))
                .map(|w| (sums.magnitude(*w) - prev.magnitude(*w)).abs() / sums.magnitude(*w))
                .reduce(f64::max)
        });
        cells.push(change.into());
        table.push(cells);
        previous = Some(sums);
    }
    Ok(Outcome {
        table,
        warnings: Vec::new(),
        failure: None,
    })
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DegenerateBoost { .. } => Failure::degenerate_boost(e.to_string()),
            Error::EmptyModeSet { .. } => Failure::empty_mode_set(e.to_string()),
            other => Failure::config(other.to_string()),
        }
    }
}
