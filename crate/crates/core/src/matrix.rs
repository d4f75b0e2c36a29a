//! 2x2 determinant-1 matrices, exact over a coefficient ring or numeric
//! over complex floats. Group elements keep det = 1, so inverses come from
//! the adjugate and equality is tested projectively (up to sign).

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::ring::{RingElem, RingError, RingId};

/// Numeric tolerance for projective equality and det checks in the float
/// domain. Double precision with a handful of multiplications stays far
/// below this.
pub const FLOAT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("matrix determinant is not 1")]
    DetNotOne,
}

/// Exact 2x2 matrix `[[m11, m12], [m21, m22]]` over one of the four rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    m11: RingElem,
    m12: RingElem,
    m21: RingElem,
    m22: RingElem,
}

impl Mat2 {
    pub fn new(
        m11: RingElem,
        m12: RingElem,
        m21: RingElem,
        m22: RingElem,
    ) -> Result<Self, MatrixError> {
        let ring = m11.ring();
        for e in [&m12, &m21, &m22] {
            if e.ring() != ring {
                return Err(RingError::RingMismatch {
                    lhs: ring,
                    rhs: e.ring(),
                }
                .into());
            }
        }
        Ok(Mat2 { m11, m12, m21, m22 })
    }

    /// Builds a matrix from integer coefficient pairs `(a, b)`.
    pub fn from_coeffs(ring: RingId, rows: [(i64, i64); 4]) -> Result<Self, MatrixError> {
        let e = |(a, b)| RingElem::new(ring, a, b).map_err(MatrixError::from);
        Ok(Mat2 {
            m11: e(rows[0])?,
            m12: e(rows[1])?,
            m21: e(rows[2])?,
            m22: e(rows[3])?,
        })
    }

    pub fn identity(ring: RingId) -> Self {
        Mat2 {
            m11: RingElem::one(ring),
            m12: RingElem::zero(ring),
            m21: RingElem::zero(ring),
            m22: RingElem::one(ring),
        }
    }

    pub fn ring(&self) -> RingId {
        self.m11.ring()
    }

    pub fn entries(&self) -> [&RingElem; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }

    pub fn det(&self) -> Result<RingElem, MatrixError> {
        Ok(self
            .m11
            .mul(&self.m22)?
            .sub(&self.m12.mul(&self.m21)?)?)
    }

    pub fn is_unimodular(&self) -> bool {
        self.det()
            .map(|d| d == RingElem::one(self.ring()))
            .unwrap_or(false)
    }

    pub fn mul(&self, rhs: &Mat2) -> Result<Mat2, MatrixError> {
        if self.ring() != rhs.ring() {
            return Err(RingError::RingMismatch {
                lhs: self.ring(),
                rhs: rhs.ring(),
            }
            .into());
        }
        Ok(Mat2 {
            m11: self.m11.mul(&rhs.m11)?.add(&self.m12.mul(&rhs.m21)?)?,
            m12: self.m11.mul(&rhs.m12)?.add(&self.m12.mul(&rhs.m22)?)?,
            m21: self.m21.mul(&rhs.m11)?.add(&self.m22.mul(&rhs.m21)?)?,
            m22: self.m21.mul(&rhs.m12)?.add(&self.m22.mul(&rhs.m22)?)?,
        })
    }

    /// Inverse by adjugate; only valid (and only accepted) for det = 1.
    pub fn inv(&self) -> Result<Mat2, MatrixError> {
        if !self.is_unimodular() {
            return Err(MatrixError::DetNotOne);
        }
        Ok(Mat2 {
            m11: self.m22,
            m12: self.m12.neg()?,
            m21: self.m21.neg()?,
            m22: self.m11,
        })
    }

    pub fn pow(&self, k: u32) -> Result<Mat2, MatrixError> {
        let mut acc = Mat2::identity(self.ring());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<RingElem, MatrixError> {
        Ok(self.m11.add(&self.m22)?)
    }

    /// `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(&self, rhs: &Mat2) -> Result<Mat2, MatrixError> {
        self.mul(rhs)?.mul(&self.inv()?)?.mul(&rhs.inv()?)
    }

    pub fn neg(&self) -> Result<Mat2, MatrixError> {
        Ok(Mat2 {
            m11: self.m11.neg()?,
            m12: self.m12.neg()?,
            m21: self.m21.neg()?,
            m22: self.m22.neg()?,
        })
    }

    /// Equality in PSL2: entrywise equal to `rhs` or to `-rhs`.
    pub fn psl_eq(&self, rhs: &Mat2) -> bool {
        if self.ring() != rhs.ring() {
            return false;
        }
        if self == rhs {
            return true;
        }
        match rhs.neg() {
            Ok(n) => *self == n,
            Err(_) => false,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m11, self.m12, self.m21, self.m22
        )
    }
}

impl Serialize for Mat2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries().iter().map(|e| e.to_string()))
    }
}

/// 2x2 complex-float matrix for the numeric (triangle-group) checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FMat2 {
    pub m11: Complex64,
    pub m12: Complex64,
    pub m21: Complex64,
    pub m22: Complex64,
}

impl FMat2 {
    pub fn new(m11: Complex64, m12: Complex64, m21: Complex64, m22: Complex64) -> Self {
        FMat2 { m11, m12, m21, m22 }
    }

    pub fn from_reals(m11: f64, m12: f64, m21: f64, m22: f64) -> Self {
        let c = |x: f64| Complex64::new(x, 0.0);
        FMat2::new(c(m11), c(m12), c(m21), c(m22))
    }

    pub fn identity() -> Self {
        FMat2::from_reals(1.0, 0.0, 0.0, 1.0)
    }

    pub fn det(&self) -> Complex64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn mul(&self, rhs: &FMat2) -> FMat2 {
        FMat2 {
            m11: self.m11 * rhs.m11 + self.m12 * rhs.m21,
            m12: self.m11 * rhs.m12 + self.m12 * rhs.m22,
            m21: self.m21 * rhs.m11 + self.m22 * rhs.m21,
            m22: self.m21 * rhs.m12 + self.m22 * rhs.m22,
        }
    }

    /// Adjugate inverse; callers keep det = 1.
    pub fn inv(&self) -> FMat2 {
        FMat2 {
            m11: self.m22,
            m12: -self.m12,
            m21: -self.m21,
            m22: self.m11,
        }
    }

    pub fn pow(&self, k: u32) -> FMat2 {
        let mut acc = FMat2::identity();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Complex64 {
        self.m11 + self.m22
    }

    pub fn commutator(&self, rhs: &FMat2) -> FMat2 {
        self.mul(rhs).mul(&self.inv()).mul(&rhs.inv())
    }

    pub fn neg(&self) -> FMat2 {
        FMat2 {
            m11: -self.m11,
            m12: -self.m12,
            m21: -self.m21,
            m22: -self.m22,
        }
    }

    fn dist(&self, rhs: &FMat2) -> f64 {
        let ds = [
            (self.m11 - rhs.m11).norm(),
            (self.m12 - rhs.m12).norm(),
            (self.m21 - rhs.m21).norm(),
            (self.m22 - rhs.m22).norm(),
        ];
        ds.into_iter().fold(0.0, f64::max)
    }

    /// Distance to `rhs` in PSL2: min over the two lifts.
    pub fn psl_dist(&self, rhs: &FMat2) -> f64 {
        self.dist(rhs).min(self.dist(&rhs.neg()))
    }

    pub fn psl_eq(&self, rhs: &FMat2) -> bool {
        self.psl_dist(rhs) < FLOAT_TOL
    }
}
