//! Trace identities for an equal-trace generating pair.
//!
//! With `x = tr X = tr Y`, `y = tr XY - 2`, `z = 2 - tr[X, Y]`, standard
//! SL2 trace relations give `z = y(x^2 - (y + 4))`, so `y | z` and
//! `x^2 = z/y + y + 4`.

use crate::matrix::{Mat2, MatrixError};
use crate::ring::{quotient, RingElem, RingError};

/// The triple `(x, y, z)` attached to a pair of equal-trace matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceTriple {
    pub x: RingElem,
    pub y: RingElem,
    pub z: RingElem,
}

impl TraceTriple {
    /// Computes the triple from an actual matrix pair (which must have
    /// equal traces for the identity to mean anything).
    pub fn from_pair(x_mat: &Mat2, y_mat: &Mat2) -> Result<Self, MatrixError> {
        let ring = x_mat.ring();
        let two = RingElem::from_int(ring, 2);
        let x = x_mat.trace()?;
        let y = x_mat.mul(y_mat)?.trace()?.sub(&two)?;
        let z = two.sub(&x_mat.commutator(y_mat)?.trace()?)?;
        Ok(TraceTriple { x, y, z })
    }

    /// Checks `z = y(x^2 - (y + 4))` exactly.
    pub fn identity_holds(&self) -> Result<bool, RingError> {
        let four = RingElem::from_int(self.x.ring(), 4);
        let x2 = self.x.mul(&self.x)?;
        let rhs = self.y.mul(&x2.sub(&self.y.add(&four)?)?)?;
        Ok(self.z == rhs)
    }
}

/// `2 - tr[X, Y]` from the common generator trace `x` and `t = tr XY`:
/// `4 + x^2 t - t^2 - 2 x^2`.
pub fn defect_from_traces(x: &RingElem, t: &RingElem) -> Result<RingElem, RingError> {
    let ring_four = RingElem::from_int(x.ring(), 4);
    let two = RingElem::from_int(x.ring(), 2);
    let x2 = x.mul(x)?;
    ring_four
        .add(&x2.mul(t)?)?
        .sub(&t.mul(t)?)?
        .sub(&two.mul(&x2)?)
}

/// `x^2 = z/y + y + 4` when `y | z`; `None` when the division fails.
pub fn x_squared_from(y: &RingElem, z: &RingElem) -> Result<Option<RingElem>, RingError> {
    if y.is_zero() {
        return Err(RingError::DivisionByZero);
    }
    let four = RingElem::from_int(y.ring(), 4);
    match quotient(y, z)? {
        Some(q) => Ok(Some(q.add(y)?.add(&four)?)),
        None => Ok(None),
    }
}

/// Torsion-freeness filter on a trace value: rational traces must avoid the
/// open interval (-2, 2); non-real traces always pass.
pub fn admissible_trace(t: &RingElem) -> bool {
    !(t.is_rational() && -2 < t.a() && t.a() < 2)
}
