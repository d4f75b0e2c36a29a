//! Exact arithmetic in the four rings of integers that carry the traces:
//! `Z`, `Z[i]`, `Z[w]` with `w = e^{i pi/3}`, and `Z[th]` with
//! `th = (1 + i sqrt 7)/2`.
//!
//! Every ring is handled through one coefficient pair `(a, b)` meaning
//! `a + b*tau`, where `tau` satisfies `tau^2 = p*tau + q` per ring. The
//! rational integers are the degenerate case `b == 0`. All arithmetic is
//! checked 64-bit; overflow is reported, never wrapped.

use std::fmt;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

/// Identifies one of the four coefficient rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingId {
    /// Rational integers `Z` (no generator; `b` is pinned to 0).
    Integers,
    /// Gaussian integers `Z[i]`, `i^2 = -1`.
    Gaussian,
    /// `Z[w]` with `w = e^{i pi/3}`, so `w^2 = w - 1`.
    Eisenstein,
    /// `Z[th]` with `th = (1 + i sqrt 7)/2`, so `th^2 = th - 2`.
    Kleinian7,
}

impl RingId {
    /// Coefficients `(p, q)` of the defining relation `tau^2 = p*tau + q`.
    pub fn tau_relation(self) -> (i64, i64) {
        match self {
            RingId::Integers => (0, 0),
            RingId::Gaussian => (0, -1),
            RingId::Eisenstein => (1, -1),
            RingId::Kleinian7 => (1, -2),
        }
    }

    /// Short symbol used when printing elements (`None` for `Z`).
    pub fn symbol(self) -> Option<&'static str> {
        match self {
            RingId::Integers => None,
            RingId::Gaussian => Some("i"),
            RingId::Eisenstein => Some("w"),
            RingId::Kleinian7 => Some("th"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RingId::Integers => "integers",
            RingId::Gaussian => "gaussian",
            RingId::Eisenstein => "eisenstein",
            RingId::Kleinian7 => "kleinian7",
        }
    }

    pub fn parse(s: &str) -> Option<RingId> {
        match s {
            "integers" => Some(RingId::Integers),
            "gaussian" => Some(RingId::Gaussian),
            "eisenstein" => Some(RingId::Eisenstein),
            "kleinian7" => Some(RingId::Kleinian7),
            _ => None,
        }
    }

    /// The generator `tau` as an element, when the ring has one.
    pub fn tau(self) -> Option<RingElem> {
        match self {
            RingId::Integers => None,
            _ => Some(RingElem {
                ring: self,
                a: 0,
                b: 1,
            }),
        }
    }

    /// Numeric value of `tau` under the fixed complex embedding.
    fn tau_embedding(self) -> Complex64 {
        match self {
            RingId::Integers => Complex64::new(0.0, 0.0),
            RingId::Gaussian => Complex64::new(0.0, 1.0),
            RingId::Eisenstein => Complex64::new(0.5, 3.0_f64.sqrt() / 2.0),
            RingId::Kleinian7 => Complex64::new(0.5, 7.0_f64.sqrt() / 2.0),
        }
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for RingId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("ring mismatch: {lhs} vs {rhs}")]
    RingMismatch { lhs: RingId, rhs: RingId },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("division by zero element")]
    DivisionByZero,
    #[error("the integers ring has no tau coefficient (b must be 0)")]
    NotRational,
}

/// An element `a + b*tau` with exact 64-bit coefficients.
///
/// Value semantics: two elements are equal iff ring, `a`, `b` all agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElem {
    ring: RingId,
    a: i64,
    b: i64,
}

impl RingElem {
    pub fn new(ring: RingId, a: i64, b: i64) -> Result<Self, RingError> {
        if ring == RingId::Integers && b != 0 {
            return Err(RingError::NotRational);
        }
        Ok(RingElem { ring, a, b })
    }

    /// The rational integer `a` viewed in `ring`.
    pub fn from_int(ring: RingId, a: i64) -> Self {
        RingElem { ring, a, b: 0 }
    }

    pub fn zero(ring: RingId) -> Self {
        Self::from_int(ring, 0)
    }

    pub fn one(ring: RingId) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// True when the element lies in `Z` (no tau part).
    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    fn check_same_ring(&self, rhs: &RingElem) -> Result<(), RingError> {
        if self.ring != rhs.ring {
            return Err(RingError::RingMismatch {
                lhs: self.ring,
                rhs: rhs.ring,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &RingElem) -> Result<RingElem, RingError> {
        self.check_same_ring(rhs)?;
        Ok(RingElem {
            ring: self.ring,
            a: checked_add(self.a, rhs.a)?,
            b: checked_add(self.b, rhs.b)?,
        })
    }

    pub fn sub(&self, rhs: &RingElem) -> Result<RingElem, RingError> {
        self.check_same_ring(rhs)?;
        Ok(RingElem {
            ring: self.ring,
            a: checked_sub(self.a, rhs.a)?,
            b: checked_sub(self.b, rhs.b)?,
        })
    }

    pub fn neg(&self) -> Result<RingElem, RingError> {
        Ok(RingElem {
            ring: self.ring,
            a: self.a.checked_neg().ok_or(RingError::Overflow)?,
            b: self.b.checked_neg().ok_or(RingError::Overflow)?,
        })
    }

    /// `(a + b*tau)(c + d*tau) = ac + q*bd + (ad + bc + p*bd)*tau`.
    pub fn mul(&self, rhs: &RingElem) -> Result<RingElem, RingError> {
        self.check_same_ring(rhs)?;
        let (p, q) = self.ring.tau_relation();
        let bd = checked_mul(self.b, rhs.b)?;
        let a = checked_add(checked_mul(self.a, rhs.a)?, checked_mul(q, bd)?)?;
        let cross = checked_add(checked_mul(self.a, rhs.b)?, checked_mul(self.b, rhs.a)?)?;
        let b = checked_add(cross, checked_mul(p, bd)?)?;
        Ok(RingElem {
            ring: self.ring,
            a,
            b,
        })
    }

    /// Field norm: `a^2 + p*ab - q*b^2`. Nonnegative in all four rings.
    pub fn norm(&self) -> Result<i64, RingError> {
        let (p, q) = self.ring.tau_relation();
        let aa = checked_mul(self.a, self.a)?;
        let ab = checked_mul(p, checked_mul(self.a, self.b)?)?;
        let bb = checked_mul(q, checked_mul(self.b, self.b)?)?;
        checked_sub(checked_add(aa, ab)?, bb)
    }

    /// Algebraic conjugate: `a + b*tau -> (a + p*b) - b*tau`.
    pub fn conj(&self) -> Result<RingElem, RingError> {
        let (p, _) = self.ring.tau_relation();
        Ok(RingElem {
            ring: self.ring,
            a: checked_add(self.a, checked_mul(p, self.b)?)?,
            b: self.b.checked_neg().ok_or(RingError::Overflow)?,
        })
    }

    /// Image under the fixed embedding into `C`.
    pub fn embed(&self) -> Complex64 {
        Complex64::new(self.a as f64, 0.0) + self.ring.tau_embedding() * (self.b as f64)
    }

    /// Sort key for the deterministic enumeration order (norm, a, b).
    pub fn sort_key(&self) -> (i64, i64, i64) {
        (self.norm().unwrap_or(i64::MAX), self.a, self.b)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ring.symbol() {
            None => write!(f, "{}", self.a),
            Some(sym) => {
                if self.b >= 0 {
                    write!(f, "{}+{}*{}", self.a, self.b, sym)
                } else {
                    write!(f, "{}-{}*{}", self.a, self.b.unsigned_abs(), sym)
                }
            }
        }
    }
}

impl Serialize for RingElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn checked_add(x: i64, y: i64) -> Result<i64, RingError> {
    x.checked_add(y).ok_or(RingError::Overflow)
}

fn checked_sub(x: i64, y: i64) -> Result<i64, RingError> {
    x.checked_sub(y).ok_or(RingError::Overflow)
}

fn checked_mul(x: i64, y: i64) -> Result<i64, RingError> {
    x.checked_mul(y).ok_or(RingError::Overflow)
}

/// Sorts by (norm, a, b) for reproducible enumeration output.
pub fn sort_elems(elems: &mut [RingElem]) {
    elems.sort_by_key(RingElem::sort_key);
}

/// The complete unit group (the norm-1 elements).
///
/// These rings are `Z` or imaginary quadratic, so units have coefficients
/// in `{-1, 0, 1}`; a box of radius 2 is plenty.
pub fn units(ring: RingId) -> Vec<RingElem> {
    let mut out = Vec::new();
    let b_range: Vec<i64> = if ring == RingId::Integers {
        vec![0]
    } else {
        (-2..=2).collect()
    };
    for a in -2..=2 {
        for &b in &b_range {
            let e = RingElem { ring, a, b };
            if e.norm() == Ok(1) {
                out.push(e);
            }
        }
    }
    sort_elems(&mut out);
    out
}

/// Exact divisibility test: `d | z` iff `z * conj(d)` has both coefficients
/// divisible by `norm(d)`.
pub fn divides(d: &RingElem, z: &RingElem) -> Result<bool, RingError> {
    Ok(quotient(d, z)?.is_some())
}

/// The exact quotient `z / d` when `d | z`, otherwise `None`.
pub fn quotient(d: &RingElem, z: &RingElem) -> Result<Option<RingElem>, RingError> {
    d.check_same_ring(z)?;
    if d.is_zero() {
        return Err(RingError::DivisionByZero);
    }
    let n = d.norm()?;
    let num = z.mul(&d.conj()?)?;
    if num.a % n != 0 || num.b % n != 0 {
        return Ok(None);
    }
    Ok(Some(RingElem {
        ring: z.ring,
        a: num.a / n,
        b: num.b / n,
    }))
}

/// The complete divisor list of a nonzero element, in (norm, a, b) order.
///
/// Candidates are enumerated over the coefficient box `|a|, |b| <= norm(z)`;
/// the box is crude but sufficient since `norm(d) <= norm(z)` bounds both
/// coefficients well inside it. Each candidate is confirmed by exact division.
pub fn divisors(z: &RingElem) -> Result<Vec<RingElem>, RingError> {
    if z.is_zero() {
        return Err(RingError::DivisionByZero);
    }
    let n = z.norm()?;
    let bound = n;
    let mut out = Vec::new();
    let b_range: Vec<i64> = if z.ring == RingId::Integers {
        vec![0]
    } else {
        (-bound..=bound).collect()
    };
    for a in -bound..=bound {
        for &b in &b_range {
            let d = RingElem { ring: z.ring, a, b };
            if d.is_zero() {
                continue;
            }
            let nd = d.norm()?;
            if nd > n || n % nd != 0 {
                continue;
            }
            if divides(&d, z)? {
                out.push(d);
            }
        }
    }
    sort_elems(&mut out);
    Ok(out)
}

/// All exact square roots of `t`: the elements `r` with `r * r == t`.
///
/// Either empty, a `{r, -r}` pair, or `{0}`. The search box comes from
/// `norm(r)^2 = norm(t)`: the norm form dominates `(a^2 + b^2)/2` in every
/// ring here, so `|a|, |b| <= sqrt(2 * sqrt(norm t))` suffices.
pub fn sqrt_exact(t: &RingElem) -> Result<Vec<RingElem>, RingError> {
    if t.is_zero() {
        return Ok(vec![RingElem::zero(t.ring)]);
    }
    let n = t.norm()?;
    let s = n.isqrt();
    if s * s != n {
        return Ok(Vec::new());
    }
    let bound = (2 * s).isqrt() + 1;
    let mut out = Vec::new();
    let b_range: Vec<i64> = if t.ring == RingId::Integers {
        vec![0]
    } else {
        (-bound..=bound).collect()
    };
    for a in -bound..=bound {
        for &b in &b_range {
            let r = RingElem { ring: t.ring, a, b };
            if r.mul(&r)? == *t {
                out.push(r);
            }
        }
    }
    sort_elems(&mut out);
    Ok(out)
}
