use std::fmt;

use crate::error::{Error, Result};
use crate::free::alphabet::Letter;
use crate::free::word::Word;

/// Direction of an endpoint `w^{±∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// An eventually periodic point `u · p^∞` of the boundary `∂F_N`.
///
/// Kept in canonical form: `p` is primitive and cyclically reduced, and `u`
/// is as short as possible, so two points are equal iff their fields are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoundaryPoint {
    prefix: Word,
    period: Word,
}

impl BoundaryPoint {
    pub fn new(prefix: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidBoundaryPoint("empty period".into()));
        }
        if !period.is_cyclically_reduced() {
            return Err(Error::InvalidBoundaryPoint(format!(
                "period {period} is not cyclically reduced"
            )));
        }
        if !prefix.is_reduced_product(&period) {
            return Err(Error::InvalidBoundaryPoint(format!(
                "{prefix}·{period}^∞ is not reduced"
            )));
        }
        let mut prefix = prefix.letters().to_vec();
        let mut period = period.primitive_root().letters().to_vec();
        // absorb trailing prefix letters into a rotated period
        while prefix.last().is_some() && prefix.last() == period.last() {
            let l = prefix.pop().unwrap();
            period.pop();
            period.insert(0, l);
        }
        Ok(BoundaryPoint {
            prefix: Word::from_reduced_unchecked(prefix),
            period: Word::from_reduced_unchecked(period),
        })
    }

    pub fn parse(prefix: &str, period: &str) -> Result<Self> {
        BoundaryPoint::new(Word::parse(prefix)?, Word::parse(period)?)
    }

    /// `w^{+∞}` (or `w^{-∞}` for [`Sign::Minus`]).
    pub fn infinity_word(w: &Word, sign: Sign) -> Result<Self> {
        let w = match sign {
            Sign::Plus => w.clone(),
            Sign::Minus => w.inverse(),
        };
        let split = w.cyclic_reduce();
        if split.core.is_empty() {
            return Err(Error::TrivialWord);
        }
        BoundaryPoint::new(split.conjugator, split.core)
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// The letter at 0-based position `i`.
    pub fn letter_at(&self, i: usize) -> Letter {
        if i < self.prefix.len() {
            self.prefix.letters()[i]
        } else {
            let p = self.period.letters();
            p[(i - self.prefix.len()) % p.len()]
        }
    }

    /// The first `n` letters `X_n`.
    pub fn head(&self, n: usize) -> Word {
        Word::from_reduced_unchecked((0..n).map(|i| self.letter_at(i)).collect())
    }

    /// The point obtained by deleting the first `n` letters.
    pub fn tail(&self, n: usize) -> BoundaryPoint {
        if n <= self.prefix.len() {
            BoundaryPoint {
                prefix: self.prefix.subword(n..self.prefix.len()),
                period: self.period.clone(),
            }
        } else {
            BoundaryPoint {
                prefix: Word::empty(),
                period: self.period.rotate(n - self.prefix.len()),
            }
        }
    }

    /// Length of the longest common prefix, `None` when the points coincide.
    pub fn common_prefix_len(&self, other: &BoundaryPoint) -> Option<usize> {
        if self == other {
            return None;
        }
        // distinct eventually periodic words differ before this bound
        let bound = self.prefix.len().max(other.prefix.len()) + self.period.len() + other.period.len();
        (0..=bound).find(|&i| self.letter_at(i) != other.letter_at(i))
    }

    /// `d_𝒜(X, Y) = exp(−|X ∧ Y|)`, zero when the points coincide.
    pub fn distance(&self, other: &BoundaryPoint) -> f64 {
        match self.common_prefix_len(other) {
            None => 0.0,
            Some(n) => (-(n as f64)).exp(),
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})^∞", self.prefix, self.period)
    }
}

impl fmt::Debug for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
