//! Physical constants, Gaussian (CGS) units.

/// Speed of light in vacuum, cm/s.
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e10;

/// Reduced Planck constant, erg·s.
pub const HBAR: f64 = 1.054_571_817e-27;

pub const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;
