//! Free words in group generators, stored run-length as `(symbol, exponent)`
//! pairs, plus evaluation under a matrix representation.
//!
//! Text syntax: a lowercase letter is a generator, the matching uppercase
//! letter is its inverse, and `^` attaches an integer exponent, e.g.
//! `a^-1 b^2`, `A b^2`, `ba^-1b`.

use std::collections::BTreeMap;
use std::fmt;

use crate::matrix::{Mat2, MatrixError};
use crate::ring::RingId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("cannot parse word at \"{0}\"")]
    Parse(String),
    #[error("generator '{0}' is not assigned in the representation")]
    UnassignedSymbol(char),
    #[error("generator '{0}' must map to a determinant-1 matrix")]
    NotUnimodular(char),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// A word in free generators; always kept freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word {
    letters: Vec<(char, i32)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from run-length letters, reducing as it goes.
    pub fn from_letters(letters: impl IntoIterator<Item = (char, i32)>) -> Self {
        let mut stack: Vec<(char, i32)> = Vec::new();
        for (sym, exp) in letters {
            if exp == 0 {
                continue;
            }
            match stack.last_mut() {
                Some((top, e)) if *top == sym => {
                    *e += exp;
                    if *e == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push((sym, exp)),
            }
        }
        Word { letters: stack }
    }

    pub fn generator(sym: char) -> Self {
        Word::from_letters([(sym, 1)])
    }

    /// Free reduction. Words are reduced on construction, so this is the
    /// identity; kept as the public operation and used by tests.
    pub fn free_reduce(&self) -> Word {
        Word::from_letters(self.letters.iter().copied())
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[(char, i32)] {
        &self.letters
    }

    pub fn inverse(&self) -> Word {
        Word::from_letters(self.letters.iter().rev().map(|&(s, e)| (s, -e)))
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        Word::from_letters(
            self.letters
                .iter()
                .chain(rhs.letters.iter())
                .copied(),
        )
    }

    pub fn pow(&self, k: i32) -> Word {
        if k < 0 {
            return self.inverse().pow(-k);
        }
        let mut out = Word::empty();
        for _ in 0..k {
            out = out.concat(self);
        }
        out
    }

    /// `by . w . by^-1`, freely reduced.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.concat(self).concat(&by.inverse())
    }

    pub fn parse(text: &str) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            if c.is_whitespace() {
                continue;
            }
            let (sym, mut exp) = if c.is_ascii_lowercase() {
                (c, 1i32)
            } else if c.is_ascii_uppercase() {
                (c.to_ascii_lowercase(), -1i32)
            } else {
                return Err(WordError::Parse(format!("{c}")));
            };
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                if chars.peek() == Some(&'-') {
                    digits.push('-');
                    chars.next();
                }
                while let Some(d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(*d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let e: i32 = digits
                    .parse()
                    .map_err(|_| WordError::Parse(format!("{sym}^{digits}")))?;
                exp *= e;
            }
            letters.push((sym, exp));
        }
        Ok(Word::from_letters(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for &(sym, exp) in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Assignment of exact determinant-1 matrices to generator symbols.
#[derive(Debug, Clone)]
pub struct Representation {
    ring: RingId,
    map: BTreeMap<char, Mat2>,
}

impl Representation {
    pub fn new(
        ring: RingId,
        assignments: impl IntoIterator<Item = (char, Mat2)>,
    ) -> Result<Self, WordError> {
        let mut map = BTreeMap::new();
        for (sym, mat) in assignments {
            if mat.ring() != ring {
                return Err(MatrixError::Ring(crate::ring::RingError::RingMismatch {
                    lhs: ring,
                    rhs: mat.ring(),
                })
                .into());
            }
            if !mat.is_unimodular() {
                return Err(WordError::NotUnimodular(sym));
            }
            map.insert(sym, mat);
        }
        Ok(Representation { ring, map })
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn matrix(&self, sym: char) -> Option<&Mat2> {
        self.map.get(&sym)
    }

    pub fn symbols(&self) -> impl Iterator<Item = char> + '_ {
        self.map.keys().copied()
    }
}

/// Product of the assigned matrices along the word.
pub fn evaluate(w: &Word, rep: &Representation) -> Result<Mat2, WordError> {
    let mut acc = Mat2::identity(rep.ring());
    for &(sym, exp) in w.letters() {
        let m = rep
            .matrix(sym)
            .ok_or(WordError::UnassignedSymbol(sym))?;
        let base = if exp < 0 { m.inv()? } else { m.clone() };
        let p = base.pow(exp.unsigned_abs())?;
        acc = acc.mul(&p)?;
    }
    Ok(acc)
}

/// Projective relator check: `lhs = rhs` in PSL2 under the representation.
pub fn check_relator(lhs: &Word, rhs: &Word, rep: &Representation) -> Result<bool, WordError> {
    Ok(evaluate(lhs, rep)?.psl_eq(&evaluate(rhs, rep)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Mat2;
    use crate::ring::{RingElem, RingId};
    use proptest::prelude::*;

    fn figure8_rep() -> Representation {
        let a = Mat2::from_coeffs(RingId::Eisenstein, [(1, 0), (1, 0), (0, 0), (1, 0)]).unwrap();
        let b = Mat2::from_coeffs(RingId::Eisenstein, [(1, 0), (0, 0), (0, 1), (1, 0)]).unwrap();
        Representation::new(RingId::Eisenstein, [('a', a), ('b', b)]).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert!(Word::parse("aA").unwrap().is_empty());
        assert_eq!(
            Word::parse("a^-1 b^2 b^-1 b").unwrap(),
            Word::from_letters([('a', -1), ('b', 2)])
        );
        let w = Word::from_letters([('b', 1), ('a', -1), ('b', 1)]);
        assert_eq!(w.free_reduce(), w);
    }

    #[test]
    fn parse_syntax() {
        assert_eq!(Word::parse("A").unwrap(), Word::from_letters([('a', -1)]));
        assert_eq!(
            Word::parse("ba^-1b").unwrap(),
            Word::from_letters([('b', 1), ('a', -1), ('b', 1)])
        );
        assert!(Word::parse("a^").is_err());
        assert!(Word::parse("3b").is_err());
    }

    #[test]
    fn conjugate_examples() {
        let alpha = Word::parse("a^-1 b^2").unwrap();
        let b = Word::generator('b');
        assert_eq!(alpha.conjugate(&b), Word::parse("b a^-1 b").unwrap());
        assert_eq!(
            alpha.conjugate(&b.inverse()),
            Word::parse("b^-1 a^-1 b^3").unwrap()
        );
        assert_eq!(alpha.conjugate(&Word::empty()), alpha);
    }

    #[test]
    fn evaluate_empty_and_gamma() {
        let rep = figure8_rep();
        assert_eq!(
            evaluate(&Word::empty(), &rep).unwrap(),
            Mat2::identity(RingId::Eisenstein)
        );
        // gamma = b^-1 a^-1 b^3 -> (1-3w, -1; -3+5w, 1+w)
        let gamma = Word::parse("b^-1 a^-1 b^3").unwrap();
        let m = evaluate(&gamma, &rep).unwrap();
        let expect =
            Mat2::from_coeffs(RingId::Eisenstein, [(1, -3), (-1, 0), (-3, 5), (1, 1)]).unwrap();
        assert_eq!(m, expect);
    }

    #[test]
    fn figure8_relator_holds() {
        let rep = figure8_rep();
        let lhs = Word::parse("a^-1 b a b^-1 a").unwrap();
        let rhs = Word::parse("b a^-1 b a b^-1").unwrap();
        assert!(check_relator(&lhs, &rhs, &rep).unwrap());
        assert!(!check_relator(&Word::generator('a'), &Word::generator('b'), &rep).unwrap());
    }

    #[test]
    fn trefoil_relator_projectively() {
        let c = Mat2::from_coeffs(RingId::Integers, [(0, 0), (1, 0), (-1, 0), (0, 0)]).unwrap();
        let d = Mat2::from_coeffs(RingId::Integers, [(0, 0), (1, 0), (-1, 0), (1, 0)]).unwrap();
        let rep = Representation::new(RingId::Integers, [('c', c), ('d', d)]).unwrap();
        assert!(check_relator(
            &Word::parse("c^2").unwrap(),
            &Word::parse("d^3").unwrap(),
            &rep
        )
        .unwrap());
    }

    #[test]
    fn unassigned_symbol_errors() {
        let rep = figure8_rep();
        let w = Word::generator('z');
        assert_eq!(evaluate(&w, &rep), Err(WordError::UnassignedSymbol('z')));
    }

    fn small_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec((prop_oneof![Just('a'), Just('b')], -3i32..=3), 0..8)
            .prop_map(Word::from_letters)
    }

    proptest! {
        #[test]
        fn evaluation_is_a_homomorphism(w1 in small_word(), w2 in small_word()) {
            let rep = figure8_rep();
            let lhs = evaluate(&w1.concat(&w2), &rep).unwrap();
            let rhs = evaluate(&w1, &rep).unwrap().mul(&evaluate(&w2, &rep).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn evaluation_of_inverse(w in small_word()) {
            let rep = figure8_rep();
            let lhs = evaluate(&w.inverse(), &rep).unwrap();
            let rhs = evaluate(&w, &rep).unwrap().inv().unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn conjugates_have_equal_trace(w in small_word(), u in small_word()) {
            let rep = figure8_rep();
            let tw = evaluate(&w, &rep).unwrap().trace().unwrap();
            let tc = evaluate(&w.conjugate(&u), &rep).unwrap().trace().unwrap();
            prop_assert_eq!(tw, tc);
        }

        #[test]
        fn reduction_preserves_evaluation(raw in proptest::collection::vec((prop_oneof![Just('a'), Just('b')], -3i32..=3), 0..8)) {
            let rep = figure8_rep();
            // evaluate the raw letter sequence without reduction
            let mut acc = Mat2::identity(RingId::Eisenstein);
            for (sym, exp) in &raw {
                let m = rep.matrix(*sym).unwrap();
                let base = if *exp < 0 { m.inv().unwrap() } else { m.clone() };
                acc = acc.mul(&base.pow(exp.unsigned_abs()).unwrap()).unwrap();
            }
            let reduced = evaluate(&Word::from_letters(raw), &rep).unwrap();
            prop_assert_eq!(acc, reduced);
        }
    }

    #[test]
    fn representation_rejects_non_unimodular() {
        let bad = Mat2::from_coeffs(RingId::Eisenstein, [(2, 0), (0, 0), (0, 0), (1, 0)]).unwrap();
        let err = Representation::new(RingId::Eisenstein, [('a', bad)]);
        assert_eq!(err.unwrap_err(), WordError::NotUnimodular('a'));
    }

    #[test]
    fn trace_is_conjugation_invariant_exact() {
        let rep = figure8_rep();
        let w = Word::parse("a b^2 a^-1").unwrap();
        let m = evaluate(&w, &rep).unwrap();
        assert_eq!(m.trace().unwrap(), RingElem::from_int(RingId::Eisenstein, 2));
    }
}
