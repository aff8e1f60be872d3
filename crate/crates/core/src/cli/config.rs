//! Run configuration: a TOML file with `material`, `boost`, `fields`,
//! `vacuum` and `sweep` tables. Unknown keys are rejected.
//!
//! ```toml
//! [material]
//! epsilon = 2.25
//! mu = 1.0
//! chi = [0.0, 1e-4, 0.0, -1e-4, 0.0, 0.0, 0.0, 0.0, 0.0]  # row-major
//! rho0 = 1.0
//!
//! [boost]
//! beta = 0.01
//!
//! [fields]
//! E = [1.0, 0.0, 0.0]
//! B = [0.0, 1.0, 0.0]
//!
//! [vacuum]
//! grid_n = 8
//! cutoff = 1e5
//! volume = 1.0
//!
//! [sweep]
//! parameter = "beta"
//! values = [0.0, 0.01, 0.02]
//! ```

use std::fmt;
use std::path::Path;

use serde::Deserialize;

use crate::algebra::{FieldState, Mat3, Material, Vec3};
use crate::vacuum::ModeSpec;

/// Configuration problem, reported with the offending key.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn bad(key: &str, msg: impl fmt::Display) -> ConfigError {
    ConfigError(format!("{key}: {msg}"))
}

fn fixed<const N: usize>(key: &str, values: &[f64]) -> Result<[f64; N], ConfigError> {
    values
        .try_into()
        .map_err(|_| bad(key, format!("expected {N} numbers, got {}", values.len())))
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialConfig {
    pub epsilon: f64,
    pub mu: f64,
    pub chi: Vec<f64>,
    pub rho0: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoostConfig {
    pub beta: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldsConfig {
    #[serde(rename = "E")]
    pub e: Vec<f64>,
    #[serde(rename = "B")]
    pub b: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VacuumConfig {
    pub grid_n: usize,
    pub cutoff: f64,
    pub volume: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParameter {
    Beta,
    Epsilon,
    Mu,
    Rho0,
    Cutoff,
    GridN,
    Volume,
}

impl SweepParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::Beta => "beta",
            SweepParameter::Epsilon => "epsilon",
            SweepParameter::Mu => "mu",
            SweepParameter::Rho0 => "rho0",
            SweepParameter::Cutoff => "cutoff",
            SweepParameter::GridN => "grid_n",
            SweepParameter::Volume => "volume",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub parameter: SweepParameter,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub material: MaterialConfig,
    pub boost: Option<BoostConfig>,
    pub fields: Option<FieldsConfig>,
    pub vacuum: Option<VacuumConfig>,
    pub sweep: Option<SweepConfig>,
}

/// A fully validated point of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub material: Material,
    pub beta: Option<f64>,
    pub fields: Option<FieldState>,
    pub vacuum: Option<ModeSpec>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError(format!("invalid config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Command-line values win over the file.
    pub fn apply_overrides(
        &mut self,
        beta: Option<f64>,
        cutoff: Option<f64>,
    ) -> Result<(), ConfigError> {
        if let Some(beta) = beta {
            self.boost = Some(BoostConfig { beta });
        }
        if let Some(cutoff) = cutoff {
            match self.vacuum.as_mut() {
                Some(v) => v.cutoff = cutoff,
                None => return Err(bad("--cutoff", "requires a [vacuum] section")),
            }
        }
        Ok(())
    }

    fn set(&mut self, parameter: SweepParameter, value: f64) -> Result<(), ConfigError> {
        let key = format!("sweep.values ({})", parameter.name());
        match parameter {
            SweepParameter::Beta => self.boost = Some(BoostConfig { beta: value }),
            SweepParameter::Epsilon => self.material.epsilon = value,
            SweepParameter::Mu => self.material.mu = value,
            SweepParameter::Rho0 => self.material.rho0 = value,
            SweepParameter::Cutoff | SweepParameter::GridN | SweepParameter::Volume => {
                let vacuum = self
                    .vacuum
                    .as_mut()
                    .ok_or_else(|| bad(&key, "requires a [vacuum] section"))?;
                match parameter {
                    SweepParameter::Cutoff => vacuum.cutoff = value,
                    SweepParameter::Volume => vacuum.volume = value,
                    _ => {
                        if !(value.fract() == 0.0 && value >= 2.0 && value <= usize::MAX as f64) {
                            return Err(bad(&key, format!("{value} is not an integer >= 2")));
                        }
                        vacuum.grid_n = value as usize;
                    }
                }
            }
        }
        Ok(())
    }

    /// One configuration per sweep value (or just `self`), each paired with
    /// the swept value.
    pub fn expand(&self) -> Result<Vec<(Option<f64>, RunConfig)>, ConfigError> {
        let Some(sweep) = &self.sweep else {
            return Ok(vec![(None, self.clone())]);
        };
        if sweep.values.is_empty() {
            return Err(bad("sweep.values", "must not be empty"));
        }
        sweep
            .values
            .iter()
            .map(|&value| {
                let mut cfg = self.clone();
                cfg.sweep = None;
                cfg.set(sweep.parameter, value)?;
                Ok((Some(value), cfg))
            })
            .collect()
    }

    pub fn resolve(&self) -> Result<Scenario, ConfigError> {
        let mc = &self.material;
        let chi = Mat3::from_row_major(fixed("material.chi", &mc.chi)?)
            .map_err(|e| bad("material.chi", e))?;
        for (key, value) in [
            ("material.epsilon", mc.epsilon),
            ("material.mu", mc.mu),
            ("material.rho0", mc.rho0),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(bad(key, format!("{value} must be finite and > 0")));
            }
        }
        let material =
            Material::new(mc.epsilon, mc.mu, chi, mc.rho0).map_err(|e| bad("material", e))?;

        let beta = match &self.boost {
            Some(b) if !(b.beta.is_finite() && b.beta.abs() < 1.0) => {
                return Err(bad(
                    "boost.beta",
                    format!("{} must satisfy |beta| < 1", b.beta),
                ))
            }
            Some(b) => Some(b.beta),
            None => None,
        };

        let fields = self
            .fields
            .as_ref()
            .map(|f| {
                let e =
                    Vec3::from_array(fixed("fields.E", &f.e)?).map_err(|e| bad("fields.E", e))?;
                let b =
                    Vec3::from_array(fixed("fields.B", &f.b)?).map_err(|e| bad("fields.B", e))?;
                Ok::<_, ConfigError>(FieldState { e, b })
            })
            .transpose()?;

        let vacuum = self
            .vacuum
            .as_ref()
            .map(|v| {
                if v.grid_n < 2 {
                    return Err(bad("vacuum.grid_n", format!("{} must be >= 2", v.grid_n)));
                }
                if !(v.cutoff.is_finite() && v.cutoff > 0.0) {
                    return Err(bad("vacuum.cutoff", format!("{} must be > 0", v.cutoff)));
                }
                if !(v.volume.is_finite() && v.volume > 0.0) {
                    return Err(bad("vacuum.volume", format!("{} must be > 0", v.volume)));
                }
                Ok(ModeSpec {
                    grid_n: v.grid_n,
                    cutoff: v.cutoff,
                    volume: v.volume,
                })
            })
            .transpose()?;

        Ok(Scenario {
            material,
            beta,
            fields,
            vacuum,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BASE: &str = r#"
[material]
epsilon = 2.25
mu = 1.0
chi = [0.0, 1e-4, 0.0, -1e-4, 0.0, 0.0, 0.0, 0.0, 0.0]
rho0 = 1.0

[fields]
E = [1.0, 0.0, 0.0]
B = [0.0, 1.0, 0.0]
"#;

    #[test]
    fn parses_minimal() {
        let cfg = RunConfig::parse(BASE).unwrap();
        let s = cfg.resolve().unwrap();
        assert_eq!(s.material.epsilon(), 2.25);
        assert_eq!(s.fields.unwrap().b, Vec3::Y);
        assert_eq!(s.beta, None);
    }

    #[test]
    fn rejects_unknown_key() {
        let text = BASE.replace("rho0 = 1.0", "rho0 = 1.0\nrh0 = 2.0");
        let err = RunConfig::parse(&text).unwrap_err();
        assert!(err.0.contains("rh0"), "{err}");
    }

    #[test]
    fn rejects_wrong_chi_length() {
        let text = BASE.replace("0.0, 0.0, 0.0]\nrho0", "0.0, 0.0, 0.0, 0.0, 0.0]\nrho0");
        assert_ne!(text, BASE);
        let err = RunConfig::parse(&text).unwrap().resolve().unwrap_err();
        assert_eq!(err.0, "material.chi: expected 9 numbers, got 11");
        let text = BASE.replace("E = [1.0, 0.0, 0.0]", "E = [1.0, 0.0]");
        let err = RunConfig::parse(&text).unwrap().resolve().unwrap_err();
        assert_eq!(err.0, "fields.E: expected 3 numbers, got 2");
    }

    #[test]
    fn rejects_bad_values_with_key() {
        let text = BASE.replace("epsilon = 2.25", "epsilon = -1.0");
        let err = RunConfig::parse(&text).unwrap().resolve().unwrap_err();
        assert!(err.0.starts_with("material.epsilon"), "{err}");
        let text = format!("{BASE}\n[boost]\nbeta = 1.5\n");
        let err = RunConfig::parse(&text).unwrap().resolve().unwrap_err();
        assert!(err.0.starts_with("boost.beta"), "{err}");
    }

    #[test]
    fn overrides_win() {
        let text = format!(
            "{BASE}\n[boost]\nbeta = 0.1\n[vacuum]\ngrid_n = 4\ncutoff = 1.0\nvolume = 1.0\n"
        );
        let mut cfg = RunConfig::parse(&text).unwrap();
        cfg.apply_overrides(Some(0.2), Some(5.0)).unwrap();
        let s = cfg.resolve().unwrap();
        assert_eq!(s.beta, Some(0.2));
        assert_eq!(s.vacuum.unwrap().cutoff, 5.0);

        let mut cfg = RunConfig::parse(BASE).unwrap();
        assert!(cfg.apply_overrides(None, Some(5.0)).is_err());
    }

    #[test]
    fn sweep_expands() {
        let text = format!("{BASE}\n[sweep]\nparameter = \"beta\"\nvalues = [0.0, 0.1]\n");
        let cfg = RunConfig::parse(&text).unwrap();
        let runs = cfg.expand().unwrap();
        assert_eq!(runs.len(), 2);
        assert_eq!(runs[1].1.resolve().unwrap().beta, Some(0.1));

        let text = format!(
            "{BASE}\n[vacuum]\ngrid_n = 4\ncutoff = 1.0\nvolume = 1.0\n[sweep]\nparameter = \"grid_n\"\nvalues = [4.5]\n"
        );
        assert!(RunConfig::parse(&text).unwrap().expand().is_err());
        let text = format!("{BASE}\n[sweep]\nparameter = \"cutoff\"\nvalues = [1.0]\n");
        assert!(RunConfig::parse(&text).unwrap().expand().is_err());
        let text = format!("{BASE}\n[sweep]\nparameter = \"speed\"\nvalues = [1.0]\n");
        assert!(RunConfig::parse(&text).is_err());
    }
}
