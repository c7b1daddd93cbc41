use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, MatrixDefect, Tolerances, UnitVector3, Vector3};

/// A general 3×3 matrix stored row-major: entry `(i, j)` is `m[3 * i + j]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix3(pub [f64; 9]);

impl Matrix3 {
    /// The identity.
    pub const IDENTITY: Matrix3 = Matrix3([1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]);
    /// All zeros.
    pub const ZERO: Matrix3 = Matrix3([0.0; 9]);

    /// Entry at row `i`, column `j` (zero-based).
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.0[3 * i + j]
    }

    /// `s · I`.
    pub fn scalar(s: f64) -> Matrix3 {
        Matrix3([s, 0.0, 0.0, 0.0, s, 0.0, 0.0, 0.0, s])
    }

    /// `a bᵀ`.
    pub fn outer(a: &Vector3, b: &Vector3) -> Matrix3 {
        let (a, b) = (a.to_array(), b.to_array());
        let mut m = [0.0; 9];
        for i in 0..3 {
            for j in 0..3 {
                m[3 * i + j] = a[i] * b[j];
            }
        }
        Matrix3(m)
    }

    pub fn transpose(&self) -> Matrix3 {
        let m = &self.0;
        Matrix3([m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]])
    }

    pub fn trace(&self) -> f64 {
        self.0[0] + self.0[4] + self.0[8]
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.0;
        m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
            + m[2] * (m[3] * m[7] - m[4] * m[6])
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vector3 {
        Vector3::new(self.at(0, j), self.at(1, j), self.at(2, j))
    }

    pub fn mul_vector(&self, v: &Vector3) -> Vector3 {
        let m = &self.0;
        Vector3::new(
            m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z,
        )
    }

    /// `tr(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &Matrix3) -> f64 {
        let mut t = 0.0;
        for i in 0..3 {
            for k in 0..3 {
                t += self.at(i, k) * other.at(k, i);
            }
        }
        t
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .fold(0.0, |acc, x| libm::fmax(acc, libm::fabs(*x)))
    }

    /// `‖self − other‖_max`.
    pub fn max_abs_diff(&self, other: &Matrix3) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }
}

impl Mul for Matrix3 {
    type Output = Matrix3;
    fn mul(self, rhs: Matrix3) -> Matrix3 {
        let mut out = [0.0; 9];
        for i in 0..3 {
            for j in 0..3 {
                out[3 * i + j] = (0..3).map(|k| self.at(i, k) * rhs.at(k, j)).sum();
            }
        }
        Matrix3(out)
    }
}

impl Mul<f64> for Matrix3 {
    type Output = Matrix3;
    fn mul(self, s: f64) -> Matrix3 {
        Matrix3(self.0.map(|x| x * s))
    }
}

impl Add for Matrix3 {
    type Output = Matrix3;
    fn add(self, rhs: Matrix3) -> Matrix3 {
        let mut out = self.0;
        out.iter_mut().zip(rhs.0).for_each(|(a, b)| *a += b);
        Matrix3(out)
    }
}

impl Sub for Matrix3 {
    type Output = Matrix3;
    fn sub(self, rhs: Matrix3) -> Matrix3 {
        let mut out = self.0;
        out.iter_mut().zip(rhs.0).for_each(|(a, b)| *a -= b);
        Matrix3(out)
    }
}

impl Neg for Matrix3 {
    type Output = Matrix3;
    fn neg(self) -> Matrix3 {
        Matrix3(self.0.map(|x| -x))
    }
}

/// A proper orthogonal 3×3 matrix.
///
/// Validated once at construction (orthogonality and `det = +1`), so every
/// operation taking a `RotationMatrix` may assume it really is a rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix(Matrix3);

impl RotationMatrix {
    pub const IDENTITY: RotationMatrix = RotationMatrix(Matrix3::IDENTITY);

    /// Validates `m` (row-major) against the default tolerances.
    pub fn new(m: [f64; 9]) -> Result<Self, Error> {
        Self::new_with(m, &Tolerances::DEFAULT)
    }

    /// Validates `m` (row-major) against `tol.orthogonality` and `tol.determinant`.
    pub fn new_with(m: [f64; 9], tol: &Tolerances) -> Result<Self, Error> {
        let m = Matrix3(m);
        if !m.is_finite() {
            return Err(Error::NonRotationInput(MatrixDefect::NonFinite));
        }
        let deviation = (m.transpose() * m).max_abs_diff(&Matrix3::IDENTITY);
        if !(deviation <= tol.orthogonality) {
            return Err(Error::NonRotationInput(MatrixDefect::NotOrthogonal {
                deviation,
            }));
        }
        let determinant = m.determinant();
        if !(libm::fabs(determinant - 1.0) <= tol.determinant) {
            return Err(Error::NonRotationInput(MatrixDefect::NotProper {
                determinant,
            }));
        }
        Ok(RotationMatrix(m))
    }

    /// Wraps a matrix that is a rotation by construction.
    pub(crate) fn from_matrix_unchecked(m: Matrix3) -> Self {
        RotationMatrix(m)
    }

    pub fn as_matrix(&self) -> &Matrix3 {
        &self.0
    }

    /// Row-major entries.
    pub fn to_array(&self) -> [f64; 9] {
        self.0 .0
    }

    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.0.at(i, j)
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    pub fn mul_vector(&self, v: &Vector3) -> Vector3 {
        self.0.mul_vector(v)
    }

    /// Composition `self · other`; the product of two rotations is a rotation.
    pub fn compose(&self, other: &RotationMatrix) -> RotationMatrix {
        RotationMatrix(self.0 * other.0)
    }

    /// The inverse rotation.
    pub fn transpose(&self) -> RotationMatrix {
        RotationMatrix(self.0.transpose())
    }

    /// `‖self − other‖_max`.
    pub fn max_abs_diff(&self, other: &RotationMatrix) -> f64 {
        self.0.max_abs_diff(&other.0)
    }
}

/// The cross-product matrix `N` of a unit axis `n`, so that `N v = n × v`.
///
/// Built from the axis, never checked: `N = −Nᵀ` and the zero diagonal hold
/// exactly by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewMatrix {
    axis: UnitVector3,
    m: Matrix3,
}

impl SkewMatrix {
    pub(crate) fn from_axis(axis: UnitVector3) -> Self {
        let (n1, n2, n3) = (axis.x(), axis.y(), axis.z());
        #[rustfmt::skip]
        let m = Matrix3([
            0.0, -n3,  n2,
             n3, 0.0, -n1,
            -n2,  n1, 0.0,
        ]);
        SkewMatrix { axis, m }
    }

    /// The axis this matrix was built from.
    pub fn axis(&self) -> UnitVector3 {
        self.axis
    }

    pub fn as_matrix(&self) -> &Matrix3 {
        &self.m
    }

    /// Row-major entries.
    pub fn to_array(&self) -> [f64; 9] {
        self.m.0
    }

    /// `N v`, i.e. `n × v`.
    pub fn mul_vector(&self, v: &Vector3) -> Vector3 {
        self.m.mul_vector(v)
    }

    /// `N N`. Equal to `n nᵀ − I` for a unit axis.
    pub fn squared(&self) -> Matrix3 {
        self.m * self.m
    }
}

impl Neg for SkewMatrix {
    type Output = SkewMatrix;
    fn neg(self) -> SkewMatrix {
        SkewMatrix::from_axis(-self.axis)
    }
}
