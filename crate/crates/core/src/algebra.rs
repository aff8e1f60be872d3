//! Small fixed-size linear algebra and the domain value types.
//!
//! Everything here is an immutable `Copy` value. Units are Gaussian (CGS)
//! throughout; see [`crate::constants`].

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A real 3-vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// Checked constructor; rejects NaN and infinite components.
    pub fn try_new(x: f64, y: f64, z: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() && z.is_finite() {
            Ok(Self { x, y, z })
        } else {
            Err(Error::NonFinite("vector component"))
        }
    }

    pub fn from_array(a: [f64; 3]) -> Result<Self> {
        Self::try_new(a[0], a[1], a[2])
    }

    #[inline]
    pub const fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    #[inline]
    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Right-handed cross product.
    #[inline]
    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Unit vector along `self`, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        (n > 0.0).then(|| self / n)
    }

    /// Norm of the (x, y) part.
    #[inline]
    pub fn transverse_norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    #[inline]
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vec3 {
    #[inline]
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    #[inline]
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    #[inline]
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    #[inline]
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn div(self, s: f64) -> Vec3 {
        Vec3::new(self.x / s, self.y / s, self.z / s)
    }
}

pub fn dot(a: Vec3, b: Vec3) -> f64 {
    a.dot(b)
}

pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    a.cross(b)
}

/// Scalar triple product `a · (b × c)`.
pub fn triple(a: Vec3, b: Vec3, c: Vec3) -> f64 {
    a.dot(b.cross(c))
}

pub fn mat_apply(m: &Mat3, v: Vec3) -> Vec3 {
    m.apply(v)
}

/// A real 3×3 matrix, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat3 {
    rows: [[f64; 3]; 3],
}

impl Mat3 {
    pub const ZERO: Mat3 = Mat3 {
        rows: [[0.0; 3]; 3],
    };
    pub const IDENTITY: Mat3 = Mat3 {
        rows: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    pub fn from_rows(rows: [[f64; 3]; 3]) -> Result<Self> {
        if rows.iter().flatten().all(|v| v.is_finite()) {
            Ok(Self { rows })
        } else {
            Err(Error::NonFinite("matrix entry"))
        }
    }

    /// Nine entries in row-major order.
    pub fn from_row_major(e: [f64; 9]) -> Result<Self> {
        Self::from_rows([[e[0], e[1], e[2]], [e[3], e[4], e[5]], [e[6], e[7], e[8]]])
    }

    pub fn to_row_major(&self) -> [f64; 9] {
        let r = &self.rows;
        [
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2],
        ]
    }

    pub const fn diag(a: f64, b: f64, c: f64) -> Self {
        Self {
            rows: [[a, 0.0, 0.0], [0.0, b, 0.0], [0.0, 0.0, c]],
        }
    }

    pub fn scalar(s: f64) -> Self {
        Self::diag(s, s, s)
    }

    /// Antisymmetric matrix with `m[0][1] = g`, `m[1][0] = -g`.
    pub const fn antisymmetric_xy(g: f64) -> Self {
        Self {
            rows: [[0.0, g, 0.0], [-g, 0.0, 0.0], [0.0, 0.0, 0.0]],
        }
    }

    /// Rotation by `angle` radians about ẑ.
    pub fn rotation_z(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            rows: [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// Rotation by `angle` about the unit `axis` (Rodrigues).
    pub fn rotation(axis: Vec3, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        let t = 1.0 - c;
        let Vec3 { x, y, z } = axis;
        Self {
            rows: [
                [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
                [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
                [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
            ],
        }
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.rows[row][col]
    }

    pub fn rows(&self) -> [[f64; 3]; 3] {
        self.rows
    }

    pub fn transpose(&self) -> Mat3 {
        let r = &self.rows;
        Mat3 {
            rows: [
                [r[0][0], r[1][0], r[2][0]],
                [r[0][1], r[1][1], r[2][1]],
                [r[0][2], r[1][2], r[2][2]],
            ],
        }
    }

    #[inline]
    pub fn apply(&self, v: Vec3) -> Vec3 {
        let r = &self.rows;
        Vec3::new(
            r[0][0] * v.x + r[0][1] * v.y + r[0][2] * v.z,
            r[1][0] * v.x + r[1][1] * v.y + r[1][2] * v.z,
            r[2][0] * v.x + r[2][1] * v.y + r[2][2] * v.z,
        )
    }

    pub fn matmul(&self, other: &Mat3) -> Mat3 {
        let mut rows = [[0.0; 3]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..3).map(|k| self.rows[i][k] * other.rows[k][j]).sum();
            }
        }
        Mat3 { rows }
    }

    fn combine(&self, other: &Mat3, f: impl Fn(f64, f64) -> f64) -> Mat3 {
        let mut rows = [[0.0; 3]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = f(self.rows[i][j], other.rows[i][j]);
            }
        }
        Mat3 { rows }
    }

    /// `(M + Mᵀ) / 2`
    pub fn symmetric_part(&self) -> Mat3 {
        self.combine(&self.transpose(), |a, b| 0.5 * (a + b))
    }

    /// `(M − Mᵀ) / 2`
    pub fn antisymmetric_part(&self) -> Mat3 {
        self.combine(&self.transpose(), |a, b| 0.5 * (a - b))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|&v| v == 0.0)
    }
}

/// Intrinsic optical and magnetoelectric constants of the medium, plus its
/// rest mass density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Material {
    epsilon: f64,
    mu: f64,
    chi: Mat3,
    rho0: f64,
}

impl Material {
    /// `epsilon`, `mu` are dimensionless Gaussian constants, `rho0` in g/cm³.
    pub fn new(epsilon: f64, mu: f64, chi: Mat3, rho0: f64) -> Result<Self> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(epsilon) {
            return Err(Error::InvalidMaterial("epsilon must be finite and > 0"));
        }
        if !positive(mu) {
            return Err(Error::InvalidMaterial("mu must be finite and > 0"));
        }
        if !positive(rho0) {
            return Err(Error::InvalidMaterial("rho0 must be finite and > 0"));
        }
        Ok(Self {
            epsilon,
            mu,
            chi,
            rho0,
        })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn chi(&self) -> &Mat3 {
        &self.chi
    }

    pub fn rho0(&self) -> f64 {
        self.rho0
    }

    /// Refractive index `n = √(εμ)`.
    pub fn index(&self) -> f64 {
        (self.epsilon * self.mu).sqrt()
    }

    /// `n − 1/n`, evaluated as `(εμ − 1)/n` so it is exactly zero when the
    /// product rounds to one.
    pub fn index_excess(&self) -> f64 {
        (self.epsilon * self.mu - 1.0) / self.index()
    }

    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        Self::new(epsilon, self.mu, self.chi, self.rho0)
    }

    pub fn with_mu(&self, mu: f64) -> Result<Self> {
        Self::new(self.epsilon, mu, self.chi, self.rho0)
    }

    pub fn with_chi(&self, chi: Mat3) -> Self {
        Self { chi, ..*self }
    }

    pub fn with_rho0(&self, rho0: f64) -> Result<Self> {
        Self::new(self.epsilon, self.mu, self.chi, rho0)
    }
}

/// Dimensionless boost `β = v/c` along ẑ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostSpec {
    beta: f64,
}

impl BoostSpec {
    pub const REST: BoostSpec = BoostSpec { beta: 0.0 };

    pub fn new(beta: f64) -> Result<Self> {
        if beta.is_finite() && beta.abs() < 1.0 {
            Ok(Self { beta })
        } else {
            Err(Error::SuperluminalBoost(beta))
        }
    }

    /// Boost checked against a material: additionally requires `1 + nβ > 0`.
    pub fn paired(beta: f64, material: &Material) -> Result<Self> {
        let boost = Self::new(beta)?;
        boost.check_denominator(material)?;
        Ok(boost)
    }

    pub(crate) fn check_denominator(&self, material: &Material) -> Result<f64> {
        let denominator = 1.0 + material.index() * self.beta;
        if denominator > 0.0 {
            Ok(denominator)
        } else {
            Err(Error::DegenerateBoost {
                beta: self.beta,
                index: material.index(),
            })
        }
    }

    #[inline]
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Lorentz factor `1/√(1 − β²)`.
    pub fn gamma(&self) -> f64 {
        1.0 / (1.0 - self.beta * self.beta).sqrt()
    }

    /// Medium velocity vector `cβ ẑ` in cm/s.
    pub fn velocity(&self) -> Vec3 {
        Vec3::Z * (crate::constants::SPEED_OF_LIGHT * self.beta)
    }
}

/// Lab-frame field pair: `e` in statvolt/cm, `b` in gauss.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FieldState {
    pub e: Vec3,
    pub b: Vec3,
}

impl FieldState {
    pub fn new(e: Vec3, b: Vec3) -> Result<Self> {
        if e.is_finite() && b.is_finite() {
            Ok(Self { e, b })
        } else {
            Err(Error::NonFinite("field component"))
        }
    }

    pub fn scaled(&self, s: f64) -> FieldState {
        FieldState {
            e: self.e * s,
            b: self.b * s,
        }
    }

    /// Largest ratio of a longitudinal (ẑ) component to the corresponding
    /// transverse magnitude. Infinite when a field is purely longitudinal.
    pub fn longitudinal_fraction(&self) -> f64 {
        [self.e, self.b]
            .iter()
            .map(|v| {
                let t = v.transverse_norm();
                if v.z == 0.0 {
                    0.0
                } else if t == 0.0 {
                    f64::INFINITY
                } else {
                    v.z.abs() / t
                }
            })
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Vec3 = Vec3::new(1.0, 2.0, 3.0);
    const B: Vec3 = Vec3::new(4.0, 5.0, 6.0);

    #[test]
    fn dot_examples() {
        assert_eq!(dot(Vec3::X, Vec3::Y), 0.0);
        assert_eq!(dot(A, A), 14.0);
        assert_eq!(dot(A, B), 32.0);
    }

    #[test]
    fn cross_examples() {
        assert_eq!(cross(Vec3::X, Vec3::Y), Vec3::Z);
        assert_eq!(cross(A, A), Vec3::ZERO);
        assert_eq!(cross(A, B), Vec3::new(-3.0, 6.0, -3.0));
    }

    #[test]
    fn mat_apply_examples() {
        assert_eq!(mat_apply(&Mat3::IDENTITY, A), A);
        assert_eq!(mat_apply(&Mat3::ZERO, A), Vec3::ZERO);
        let ones = Vec3::new(1.0, 1.0, 1.0);
        assert_eq!(mat_apply(&Mat3::diag(1.0, 2.0, 3.0), ones), A);
    }

    #[test]
    fn transpose_applies_as_row_vector() {
        let m = Mat3::from_row_major([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 10.0]).unwrap();
        // (Mᵀ v)_i = Σ_j M_ji v_j
        let v = Vec3::new(1.0, -1.0, 2.0);
        let col = m.transpose().apply(v);
        assert_eq!(
            col,
            Vec3::new(1.0 - 4.0 + 14.0, 2.0 - 5.0 + 16.0, 3.0 - 6.0 + 20.0)
        );
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn triple_examples() {
        assert_eq!(triple(Vec3::X, Vec3::Y, Vec3::Z), 1.0);
        assert_eq!(triple(A, B, A), 0.0);
        assert_eq!(
            triple(Vec3::X, Vec3::new(1.0, 1.0, 0.0), Vec3::new(1.0, 1.0, 1.0)),
            1.0
        );
    }

    #[test]
    fn symmetric_split_recombines() {
        let m = Mat3::from_row_major([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0]).unwrap();
        let s = m.symmetric_part();
        let a = m.antisymmetric_part();
        assert_eq!(s, s.transpose());
        assert_eq!(a.transpose().to_row_major().map(|v| -v), a.to_row_major());
        for (x, y) in m.to_row_major().iter().zip(
            s.to_row_major()
                .iter()
                .zip(a.to_row_major())
                .map(|(p, q)| p + q),
        ) {
            assert_eq!(*x, y);
        }
    }

    #[test]
    fn material_rejects_nonpositive() {
        assert!(Material::new(0.0, 1.0, Mat3::ZERO, 1.0).is_err());
        assert!(Material::new(1.0, -1.0, Mat3::ZERO, 1.0).is_err());
        assert!(Material::new(1.0, 1.0, Mat3::ZERO, 0.0).is_err());
        assert!(Material::new(f64::NAN, 1.0, Mat3::ZERO, 1.0).is_err());
        assert!(Material::new(2.0, 0.5, Mat3::ZERO, 1.0).is_ok());
    }

    #[test]
    fn non_finite_rejected() {
        assert!(Vec3::try_new(f64::NAN, 0.0, 0.0).is_err());
        assert!(Vec3::try_new(0.0, f64::INFINITY, 0.0).is_err());
        let mut e = [0.0; 9];
        e[4] = f64::NEG_INFINITY;
        assert!(Mat3::from_row_major(e).is_err());
    }

    #[test]
    fn boost_limits() {
        assert!(BoostSpec::new(1.0).is_err());
        assert!(BoostSpec::new(-1.0).is_err());
        assert!(BoostSpec::new(0.99).is_ok());
        let m = Material::new(4.0, 1.0, Mat3::ZERO, 1.0).unwrap();
        // n = 2: 1 + 2β ≤ 0 for β ≤ −0.5
        assert!(matches!(
            BoostSpec::paired(-0.5, &m),
            Err(Error::DegenerateBoost { .. })
        ));
        assert!(BoostSpec::paired(-0.49, &m).is_ok());
    }

    #[test]
    fn index_excess_vanishes_at_unit_product() {
        let m = Material::new(2.0, 0.5, Mat3::ZERO, 1.0).unwrap();
        assert_eq!(m.index_excess(), 0.0);
        let m = Material::new(2.25, 1.0, Mat3::ZERO, 1.0).unwrap();
        assert!((m.index_excess() - (1.5 - 1.0 / 1.5)).abs() < 1e-15);
    }

    #[test]
    fn longitudinal_fraction() {
        let f = FieldState::new(Vec3::new(1.0, 0.0, 1e-3), Vec3::Y).unwrap();
        assert!((f.longitudinal_fraction() - 1e-3).abs() < 1e-18);
        let f = FieldState::new(Vec3::Z, Vec3::ZERO).unwrap();
        assert!(f.longitudinal_fraction().is_infinite());
        assert_eq!(FieldState::default().longitudinal_fraction(), 0.0);
    }
}
