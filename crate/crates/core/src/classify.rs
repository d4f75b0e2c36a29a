//! Squareness decisions.
//!
//! For `Z[w]` the coefficient equation `x^2 = a^2 - b^2 + (2ab + b^2) w`
//! admits a closed-form case split on the `w`-coefficient `m` with
//! `|m| <= 4`; for `Z[i]` the analogous split runs on the imaginary part.
//! Every ring also has the definitional oracle: search for an exact root.

use serde::Serialize;

use crate::ring::{sqrt_exact, RingElem, RingError, RingId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("closed form only covers |m| <= 4, got {0} (fall back to the oracle)")]
    UnsupportedCoefficient(i64),
    #[error("expected an element of {expected}, got {got}")]
    WrongRing { expected: RingId, got: RingId },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Closed-form answer for "which `x^2` carry tau-coefficient `+-m`".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquareClassification {
    /// `m = 0`: possible only when the value is a perfect square or <= 0.
    /// The case is infinite, so it is a predicate rather than a list.
    RationalCase,
    /// Explicit finite list (empty when the coefficient is impossible).
    Squares(Vec<RingElem>),
}

impl SquareClassification {
    /// Whether the case analysis leaves `t` as a possible square.
    pub fn admits(&self, t: &RingElem) -> bool {
        match self {
            SquareClassification::RationalCase => {
                let n = t.a();
                n <= 0 || {
                    let r = n.isqrt();
                    r * r == n
                }
            }
            SquareClassification::Squares(list) => list.contains(t),
        }
    }
}

fn eis(a: i64, b: i64) -> RingElem {
    RingElem::new(RingId::Eisenstein, a, b).expect("eisenstein coefficients")
}

/// The closed-form case split for `Z[w]`, `|m| <= 4`.
///
/// Solving `2ab + b^2 = m` with `b | m` and parity constraints gives:
/// `m = +-1 -> {-1+w, -w}`; `m = +-2 -> none`;
/// `m = +-3 -> {3w, -8+3w, 3-3w, -5-3w}`; `m = +-4 -> {-4+4w, -4w}`.
pub fn eisenstein_squares_with_coeff(m: i64) -> Result<SquareClassification, ClassifyError> {
    match m.abs() {
        0 => Ok(SquareClassification::RationalCase),
        1 => Ok(SquareClassification::Squares(vec![eis(-1, 1), eis(0, -1)])),
        2 => Ok(SquareClassification::Squares(Vec::new())),
        3 => Ok(SquareClassification::Squares(vec![
            eis(0, 3),
            eis(-8, 3),
            eis(3, -3),
            eis(-5, -3),
        ])),
        4 => Ok(SquareClassification::Squares(vec![eis(-4, 4), eis(0, -4)])),
        _ => Err(ClassifyError::UnsupportedCoefficient(m)),
    }
}

/// Definitional squareness: `t` has an exact square root in its ring.
pub fn is_square(t: &RingElem) -> Result<bool, RingError> {
    Ok(!sqrt_exact(t)?.is_empty())
}

/// Whether the closed-form analysis leaves an eisenstein value as a
/// possible square (requires `|b| <= 4`).
pub fn eisenstein_lemma_admits(t: &RingElem) -> Result<bool, ClassifyError> {
    if t.ring() != RingId::Eisenstein {
        return Err(ClassifyError::WrongRing {
            expected: RingId::Eisenstein,
            got: t.ring(),
        });
    }
    Ok(eisenstein_squares_with_coeff(t.b())?.admits(t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseVerdict {
    /// Imaginary part 0: value must be a perfect square or nonpositive.
    SquareOrNonpositive,
    /// Odd imaginary part: `2ab` is even, impossible.
    OddImaginaryImpossible,
    /// Imaginary part +-2: forces `a^2 = b^2 = 1`, so only `+-2i`.
    OnlyPlusMinusTwoI,
}

#[derive(Debug, Clone, Serialize)]
pub struct GaussianCase {
    pub imaginary_part: i64,
    pub verdict: CaseVerdict,
    pub values: Vec<RingElem>,
    pub survivors: Vec<RingElem>,
}

/// Result of running the imaginary-part case split over table values.
#[derive(Debug, Clone, Serialize)]
pub struct GaussianCaseAnalysis {
    pub cases: Vec<GaussianCase>,
    pub survivors: Vec<RingElem>,
}

/// The `Z[i]` case analysis on `x^2 = a^2 - b^2 + 2ab i`, partitioned by
/// the imaginary part of each candidate value.
///
/// Table values must have imaginary part in `{0, +-1, +-2, +-3}`; that is
/// all that occurs in the tables this covers.
pub fn gaussian_square_cases(values: &[RingElem]) -> Result<GaussianCaseAnalysis, ClassifyError> {
    let mut by_im: std::collections::BTreeMap<i64, Vec<RingElem>> = Default::default();
    for v in values {
        if v.ring() != RingId::Gaussian {
            return Err(ClassifyError::WrongRing {
                expected: RingId::Gaussian,
                got: v.ring(),
            });
        }
        if v.b().abs() > 3 {
            return Err(ClassifyError::UnsupportedCoefficient(v.b()));
        }
        by_im.entry(v.b()).or_default().push(*v);
    }
    let mut cases = Vec::new();
    let mut survivors = Vec::new();
    for (im, mut vals) in by_im {
        crate::ring::sort_elems(&mut vals);
        vals.dedup();
        let (verdict, case_survivors): (CaseVerdict, Vec<RingElem>) = if im == 0 {
            let keep: Vec<RingElem> = vals
                .iter()
                .filter(|v| {
                    let n = v.a();
                    n <= 0 || {
                        let r = n.isqrt();
                        r * r == n
                    }
                })
                .copied()
                .collect();
            (CaseVerdict::SquareOrNonpositive, keep)
        } else if im.abs() == 2 {
            let keep: Vec<RingElem> = vals
                .iter()
                .filter(|v| v.a() == 0 && v.b().abs() == 2)
                .copied()
                .collect();
            (CaseVerdict::OnlyPlusMinusTwoI, keep)
        } else {
            (CaseVerdict::OddImaginaryImpossible, Vec::new())
        };
        survivors.extend(case_survivors.iter().copied());
        cases.push(GaussianCase {
            imaginary_part: im,
            verdict,
            values: vals,
            survivors: case_survivors,
        });
    }
    crate::ring::sort_elems(&mut survivors);
    survivors.dedup();
    Ok(GaussianCaseAnalysis { cases, survivors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::units;

    fn gau(a: i64, b: i64) -> RingElem {
        RingElem::new(RingId::Gaussian, a, b).unwrap()
    }

    #[test]
    fn closed_form_lists() {
        assert_eq!(
            eisenstein_squares_with_coeff(1).unwrap(),
            SquareClassification::Squares(vec![eis(-1, 1), eis(0, -1)])
        );
        assert_eq!(
            eisenstein_squares_with_coeff(-1).unwrap(),
            eisenstein_squares_with_coeff(1).unwrap()
        );
        assert_eq!(
            eisenstein_squares_with_coeff(2).unwrap(),
            SquareClassification::Squares(Vec::new())
        );
        assert_eq!(
            eisenstein_squares_with_coeff(-3).unwrap(),
            SquareClassification::Squares(vec![eis(0, 3), eis(-8, 3), eis(3, -3), eis(-5, -3)])
        );
        assert_eq!(
            eisenstein_squares_with_coeff(4).unwrap(),
            SquareClassification::Squares(vec![eis(-4, 4), eis(0, -4)])
        );
        assert!(matches!(
            eisenstein_squares_with_coeff(5),
            Err(ClassifyError::UnsupportedCoefficient(5))
        ));
    }

    #[test]
    fn is_square_examples() {
        assert!(!is_square(&eis(5, 1)).unwrap());
        assert!(is_square(&eis(3, -3)).unwrap());
        let roots = sqrt_exact(&eis(3, -3)).unwrap();
        assert!(roots.contains(&eis(2, -1)) && roots.contains(&eis(-2, 1)));
        assert!(!is_square(&gau(4, 3)).unwrap());
        assert!(is_square(&RingElem::from_int(RingId::Integers, 4)).unwrap());
    }

    #[test]
    fn gaussian_cases_on_whitehead_style_values() {
        let vals = [gau(3, 0), gau(5, 0), gau(4, 0)];
        let analysis = gaussian_square_cases(&vals).unwrap();
        assert_eq!(analysis.survivors, vec![gau(4, 0)]);

        let vals = [gau(4, 2)];
        let analysis = gaussian_square_cases(&vals).unwrap();
        assert!(analysis.survivors.is_empty());
        assert_eq!(analysis.cases[0].verdict, CaseVerdict::OnlyPlusMinusTwoI);

        let analysis = gaussian_square_cases(&[]).unwrap();
        assert!(analysis.cases.is_empty());
        assert!(analysis.survivors.is_empty());
    }

    #[test]
    fn oracle_agreement_small_sweep() {
        // full |n| <= 200 sweep lives in the acceptance suite
        for n in -40i64..=40 {
            for m in -4i64..=4 {
                let t = eis(n, m);
                let actual = is_square(&t).unwrap();
                let class = eisenstein_squares_with_coeff(m).unwrap();
                if m == 0 {
                    // the closed form is a necessary condition: it must
                    // never eliminate a genuine square
                    if actual {
                        assert!(class.admits(&t), "m=0 case dropped square {t}");
                    }
                } else {
                    assert_eq!(actual, class.admits(&t), "mismatch at {t}");
                }
            }
        }
    }

    #[test]
    fn squares_closed_under_unit_square_multiplication() {
        for ring in [RingId::Gaussian, RingId::Eisenstein, RingId::Kleinian7] {
            for a in -6i64..=6 {
                for b in -3i64..=3 {
                    let t = RingElem::new(ring, a, b).unwrap();
                    if !is_square(&t).unwrap() {
                        continue;
                    }
                    for u in units(ring) {
                        let scaled = u.mul(&u).unwrap().mul(&t).unwrap();
                        assert!(is_square(&scaled).unwrap(), "u^2 t not square: {u} {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn kleinian7_expansion_identity() {
        // (a + b th)^2 = a^2 - 2 b^2 + (2ab + b^2) th
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                let x = RingElem::new(RingId::Kleinian7, a, b).unwrap();
                let sq = x.mul(&x).unwrap();
                assert_eq!(sq.a(), a * a - 2 * b * b);
                assert_eq!(sq.b(), 2 * a * b + b * b);
            }
        }
    }
}
