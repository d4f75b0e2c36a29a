//! Real translation lengths of loxodromic elements and elimination of
//! trace candidates against a stored length spectrum.
//!
//! A loxodromic element of trace `x` translates along its axis by
//! `Re(2 acosh(x/2))`. The stored spectra are the shortest entries of a
//! manifold's length spectrum, so a candidate length that is absent from
//! the stored prefix (and lies below its top entry) cannot be realized.

use num_complex::Complex64;
use serde::Serialize;

/// Default gap tolerance for spectrum membership. The spectra carry 14
/// significant digits and the candidate lengths differ from every entry
/// by more than 0.2, so 1e-6 is comfortably strict.
pub const DEFAULT_ELIMINATION_TOL: f64 = 1e-6;

/// Traces closer to the real axis than this are treated as real.
const REAL_AXIS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeodesicError {
    #[error("trace {0} is elliptic (real, strictly inside (-2, 2)); no axis")]
    EllipticTrace(f64),
    #[error("empty length spectrum")]
    EmptySpectrum,
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("cannot parse spectrum data: {0}")]
    Parse(String),
}

/// Shortest closed-geodesic lengths of one manifold, ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumData {
    pub manifold: String,
    pub lengths: Vec<f64>,
}

impl SpectrumData {
    pub fn new(manifold: impl Into<String>, lengths: Vec<f64>) -> Result<Self, GeodesicError> {
        for pair in lengths.windows(2) {
            if pair[0] > pair[1] {
                return Err(GeodesicError::Parse("lengths must be ascending".into()));
            }
        }
        if lengths.iter().any(|&l| l <= 0.0 || !l.is_finite()) {
            return Err(GeodesicError::Parse("lengths must be positive".into()));
        }
        Ok(SpectrumData {
            manifold: manifold.into(),
            lengths,
        })
    }
}

/// Parses the plain-text spectrum format: `name length length ...` per
/// line, `#` comments and blank lines ignored.
pub fn parse_spectra(text: &str) -> Result<Vec<SpectrumData>, GeodesicError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let name = it.next().ok_or_else(|| GeodesicError::Parse(line.into()))?;
        let lengths = it
            .map(|tok| {
                tok.parse::<f64>()
                    .map_err(|_| GeodesicError::Parse(format!("bad length \"{tok}\"")))
            })
            .collect::<Result<Vec<f64>, _>>()?;
        out.push(SpectrumData::new(name, lengths)?);
    }
    Ok(out)
}

/// The spectra shipped with the crate.
pub fn builtin_spectra() -> Vec<SpectrumData> {
    parse_spectra(include_str!("../data/spectrum.txt")).expect("embedded spectrum data is valid")
}

pub fn builtin_spectrum(manifold: &str) -> Option<SpectrumData> {
    builtin_spectra().into_iter().find(|s| s.manifold == manifold)
}

/// Real translation length `Re(2 acosh(x/2))`, taken >= 0.
///
/// Real traces with `|x| = 2` are parabolic (length 0); real traces
/// strictly inside (-2, 2) are elliptic and rejected.
pub fn real_length(x: Complex64) -> Result<f64, GeodesicError> {
    if x.im.abs() < REAL_AXIS_TOL {
        let r = x.re.abs();
        if r < 2.0 - REAL_AXIS_TOL {
            return Err(GeodesicError::EllipticTrace(x.re));
        }
        if r <= 2.0 + REAL_AXIS_TOL {
            return Ok(0.0);
        }
        return Ok(2.0 * (r / 2.0).acosh());
    }
    // principal acosh has nonnegative real part, shared by both lifts
    Ok((2.0 * (x / 2.0).acosh()).re)
}

/// True (eliminated) iff the candidate length differs from every stored
/// entry by more than `tol` and lies below the largest stored entry, so
/// absence from the stored prefix is conclusive.
pub fn eliminate_by_spectrum(
    candidate_length: f64,
    spectrum: &SpectrumData,
    tol: f64,
) -> Result<bool, GeodesicError> {
    if tol <= 0.0 || tol.is_nan() {
        return Err(GeodesicError::BadTolerance(tol));
    }
    let top = spectrum
        .lengths
        .last()
        .copied()
        .ok_or(GeodesicError::EmptySpectrum)?;
    let far_from_all = spectrum
        .lengths
        .iter()
        .all(|&l| (candidate_length - l).abs() > tol);
    Ok(far_from_all && candidate_length < top)
}
