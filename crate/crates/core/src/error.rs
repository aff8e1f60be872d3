use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite {0}")]
    NonFinite(&'static str),

    #[error("invalid material: {0}")]
    InvalidMaterial(&'static str),

    #[error("boost |beta| = {0} must be finite and below 1")]
    SuperluminalBoost(f64),

    /// `1 + nβ ≤ 0`: the transform denominators vanish or change sign.
    #[error("degenerate boost: 1 + n*beta <= 0 (n = {index}, beta = {beta})")]
    DegenerateBoost { beta: f64, index: f64 },

    #[error("degenerate grid: {0}")]
    DegenerateGrid(String),

    #[error("finite-difference probe {0} outside (0, 1e-3]")]
    DegenerateProbe(f64),

    #[error("ratio undefined: the classical terms vanish along z")]
    DivisionDegenerate,

    #[error("invalid mode-set parameters: {0}")]
    InvalidModeSet(String),

    #[error("mode set is empty (grid_n = {grid_n}, cutoff = {cutoff})")]
    EmptyModeSet { grid_n: usize, cutoff: f64 },
}
