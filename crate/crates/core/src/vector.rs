use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Tolerances};

/// A general 3-vector.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vector3 {
    /// The zero vector.
    pub const ZERO: Vector3 = Vector3::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vector3 { x, y, z }
    }

    /// Checked constructor rejecting NaN and infinities.
    pub fn try_new(x: f64, y: f64, z: f64) -> Result<Self, Error> {
        let v = Vector3::new(x, y, z);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFiniteVector)
        }
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Vector3::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn dot(&self, other: &Vector3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Vector3) -> Vector3 {
        Vector3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_squared(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.norm_squared())
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        libm::fmax(
            libm::fabs(self.x),
            libm::fmax(libm::fabs(self.y), libm::fabs(self.z)),
        )
    }
}

impl Add for Vector3 {
    type Output = Vector3;
    fn add(self, rhs: Vector3) -> Vector3 {
        Vector3::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Vector3 {
    type Output = Vector3;
    fn sub(self, rhs: Vector3) -> Vector3 {
        Vector3::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Mul<f64> for Vector3 {
    type Output = Vector3;
    fn mul(self, s: f64) -> Vector3 {
        Vector3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Vector3 {
    type Output = Vector3;
    fn neg(self) -> Vector3 {
        Vector3::new(-self.x, -self.y, -self.z)
    }
}

/// A unit-norm 3-vector, typically a rotation axis.
///
/// The norm is checked once at construction; everything downstream relies on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector3(Vector3);

impl UnitVector3 {
    /// +x.
    pub const X: UnitVector3 = UnitVector3(Vector3::new(1.0, 0.0, 0.0));
    /// +y.
    pub const Y: UnitVector3 = UnitVector3(Vector3::new(0.0, 1.0, 0.0));
    /// +z.
    pub const Z: UnitVector3 = UnitVector3(Vector3::new(0.0, 0.0, 1.0));

    /// Accepts `(x, y, z)` only if its norm is 1 within the default 1e-12.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, Error> {
        Self::new_with(x, y, z, Tolerances::DEFAULT.unit_norm)
    }

    /// As [`UnitVector3::new`] with an explicit norm tolerance. The stored
    /// components are exactly the ones passed in.
    pub fn new_with(x: f64, y: f64, z: f64, tolerance: f64) -> Result<Self, Error> {
        let v = Vector3::try_new(x, y, z)?;
        let norm = v.norm();
        if libm::fabs(norm - 1.0) > tolerance {
            return Err(Error::NonUnitAxis { norm });
        }
        Ok(UnitVector3(v))
    }

    /// Scales `v` to unit length. Fails on zero or non-finite input.
    pub fn normalize(v: Vector3) -> Result<Self, Error> {
        if !v.is_finite() {
            return Err(Error::NonFiniteVector);
        }
        let norm = v.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NonUnitAxis { norm });
        }
        Ok(UnitVector3(v * (1.0 / norm)))
    }

    pub fn x(&self) -> f64 {
        self.0.x
    }

    pub fn y(&self) -> f64 {
        self.0.y
    }

    pub fn z(&self) -> f64 {
        self.0.z
    }

    pub fn as_vector(&self) -> Vector3 {
        self.0
    }

    pub fn to_array(self) -> [f64; 3] {
        self.0.to_array()
    }

    pub fn dot(&self, other: &UnitVector3) -> f64 {
        self.0.dot(&other.0)
    }
}

impl Neg for UnitVector3 {
    type Output = UnitVector3;
    fn neg(self) -> UnitVector3 {
        UnitVector3(-self.0)
    }
}

impl From<UnitVector3> for Vector3 {
    fn from(u: UnitVector3) -> Vector3 {
        u.0
    }
}
