//! Exact-arithmetic verification that equal-trace generating pairs of the
//! arithmetic two-bridge knot and link groups are parabolic (peripheral in
//! the trefoil case).
//!
//! The pipeline works entirely in the rings of integers of the trace
//! fields: commutator-defect candidates are unit multiples of the base
//! defect, divisor candidates come from exact divisibility, the candidate
//! squares `x^2 = z/y + y + 4` are tabulated, and exact square testing
//! (plus, for one link, geodesic-length elimination against a stored
//! spectrum) leaves only the parabolic value 4.

pub mod classify;
pub mod geodesic;
pub mod matrix;
pub mod ring;
pub mod scenarios;
pub mod tracecalc;
pub mod words;

pub use ring::{RingElem, RingId};
