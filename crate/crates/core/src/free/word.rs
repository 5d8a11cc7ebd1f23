use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::free::alphabet::Letter;

/// A freely reduced word, i.e. an element of the free group `F(𝒜)`.
///
/// Words order shortlex: first by length, then lexicographically in the
/// letter order `a < A < b < B < …`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

/// Decomposition `w = g · core · g⁻¹` with `core` cyclically reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicReduction {
    pub core: Word,
    pub conjugator: Word,
}

impl CyclicReduction {
    /// Length of the conjugator, the `r` of an almost cyclically reduced word.
    pub fn r(&self) -> usize {
        self.conjugator.len()
    }
}

impl Word {
    pub const fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Wraps letters already known to be reduced.
    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|p| p[0] != p[1].inverse()));
        Word(letters)
    }

    /// Parses the ASCII encoding over any rank up to 26 and reduces.
    pub fn parse(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(Letter::from_char)
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::reduce(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// The reduced product together with the number of letters cancelled
    /// from each side at the junction.
    pub fn concat(&self, other: &Word) -> (Word, usize) {
        let cancelled = self
            .0
            .iter()
            .rev()
            .zip(other.0.iter())
            .take_while(|(x, y)| **x == y.inverse())
            .count();
        let mut letters = Vec::with_capacity(self.len() + other.len() - 2 * cancelled);
        letters.extend_from_slice(&self.0[..self.len() - cancelled]);
        letters.extend_from_slice(&other.0[cancelled..]);
        (Word(letters), cancelled)
    }

    pub fn mul(&self, other: &Word) -> Word {
        self.concat(other).0
    }

    /// True when `self · other` involves no cancellation.
    pub fn is_reduced_product(&self, other: &Word) -> bool {
        match (self.last(), other.first()) {
            (Some(x), Some(y)) => x != y.inverse(),
            _ => true,
        }
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut out = Word::empty();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn subword(&self, range: Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.subword(0..len.min(self.len()))
    }

    pub fn suffix(&self, len: usize) -> Word {
        let len = len.min(self.len());
        self.subword(self.len() - len..self.len())
    }

    /// `w†_k`: drops `k` letters from each end, or everything if `|w| ≤ 2k`.
    pub fn chop(&self, k: usize) -> Word {
        if self.len() <= 2 * k {
            Word::empty()
        } else {
            self.subword(k..self.len() - k)
        }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => f != l.inverse(),
            _ => true,
        }
    }

    /// Decomposes `w = g · core · g⁻¹` with `core` cyclically reduced.
    ///
    /// The trivial word yields an empty core and an empty conjugator.
    pub fn cyclic_reduce(&self) -> CyclicReduction {
        let n = self.len();
        let mut r = 0;
        while 2 * r + 1 < n && self.0[r] == self.0[n - 1 - r].inverse() {
            r += 1;
        }
        CyclicReduction {
            core: self.subword(r..n - r),
            conjugator: self.subword(0..r),
        }
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return Word::empty();
        }
        let k = k % self.len();
        let mut letters = self.0[k..].to_vec();
        letters.extend_from_slice(&self.0[..k]);
        Word(letters)
    }

    /// Shortest `p` with `self = p^k`.
    pub fn primitive_root(&self) -> Word {
        let n = self.len();
        for d in 1..=n {
            if n % d == 0 && (d..n).all(|i| self.0[i] == self.0[i - d]) {
                return self.subword(0..d);
            }
        }
        Word::empty()
    }

    /// Index of the first occurrence of `needle` as a factor.
    pub fn find(&self, needle: &Word) -> Option<usize> {
        if needle.is_empty() {
            return Some(0);
        }
        self.0.windows(needle.len()).position(|w| w == needle.letters())
    }

    pub fn contains(&self, needle: &Word) -> bool {
        self.find(needle).is_some()
    }

    /// True when every letter is a generator (no formal inverses).
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.is_inverse())
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|l| l.is_inverse())
    }

    /// All factors of length `1..=max_len`, with repetitions.
    pub fn factors(&self, max_len: usize) -> impl Iterator<Item = Word> + '_ {
        let n = self.len();
        (1..=max_len.min(n)).flat_map(move |len| (0..=n - len).map(move |i| self.subword(i..i + len)))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{self}")
        }
    }
}

// Lets hash sets of words be probed with letter slices. Hash and equality
// agree with the slice; the shortlex `Ord` does not, so do not rely on this
// in ordered collections.
impl Borrow<[Letter]> for Word {
    fn borrow(&self) -> &[Letter] {
        &self.0
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl From<Letter> for Word {
    fn from(l: Letter) -> Self {
        Word::letter(l)
    }
}
