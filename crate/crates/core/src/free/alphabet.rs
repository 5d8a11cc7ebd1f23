use std::fmt;

use crate::error::{Error, Result};
use crate::free::word::Word;

/// One of the `2N` symbols of an involutive alphabet.
///
/// Letters are numbered so that the natural order is `a < A < b < B < …`:
/// generator `i` has index `2i`, its formal inverse `2i + 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub const fn generator(i: usize) -> Self {
        Letter((2 * i) as u8)
    }

    pub const fn from_index(index: usize) -> Self {
        Letter(index as u8)
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// Index of the underlying generator.
    pub const fn generator_index(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub const fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub const fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// The generator this letter belongs to, as a positive letter.
    pub const fn positive(self) -> Self {
        Letter(self.0 & !1)
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'a'..='z' => Ok(Letter::generator(c as usize - 'a' as usize)),
            'A'..='Z' => Ok(Letter::generator(c as usize - 'A' as usize).inverse()),
            _ => Err(Error::UnknownSymbol(c)),
        }
    }

    pub fn to_char(self) -> char {
        let base = if self.is_inverse() { b'A' } else { b'a' };
        (base + self.generator_index() as u8) as char
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// The alphabet `𝒜 ∪ 𝒜⁻¹` of a free group of rank `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    rank: usize,
}

impl Alphabet {
    pub const MAX_RANK: usize = 26;

    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 || rank > Self::MAX_RANK {
            return Err(Error::InvalidRank(rank));
        }
        Ok(Alphabet { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of letters, `2N`.
    pub fn size(&self) -> usize {
        2 * self.rank
    }

    /// All letters in canonical order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + Clone {
        (0..self.size()).map(Letter::from_index)
    }

    pub fn generators(&self) -> impl Iterator<Item = Letter> + Clone {
        (0..self.rank).map(Letter::generator)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.generator_index() < self.rank
    }

    pub fn contains_word(&self, word: &Word) -> bool {
        word.letters().iter().all(|&l| self.contains(l))
    }

    pub fn letter(&self, c: char) -> Result<Letter> {
        let letter = Letter::from_char(c)?;
        if self.contains(letter) {
            Ok(letter)
        } else {
            Err(Error::UnknownSymbol(c))
        }
    }

    /// Parses an ASCII word and freely reduces it.
    pub fn parse(&self, s: &str) -> Result<Word> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| self.letter(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::reduce(letters))
    }

    pub fn check_same(&self, other: &Alphabet) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.rank,
                right: other.rank,
            })
        }
    }

    /// Generator names in order, as used by the JSON formats.
    pub fn generator_names(&self) -> Vec<String> {
        self.generators().map(|l| l.to_char().to_string()).collect()
    }

    /// Every reduced word of length exactly `len`, in lexicographic order.
    pub fn reduced_words(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * (self.size() - 1).max(1));
            for w in &out {
                for l in self.letters() {
                    if w.last() != Some(l.inverse()) {
                        let mut letters = w.letters().to_vec();
                        letters.push(l);
                        next.push(Word::from_reduced_unchecked(letters));
                    }
                }
            }
            out = next;
        }
        out
    }

    /// Smallest alphabet that contains every letter of `words`, but never below `min_rank`.
    pub fn spanning<'a>(words: impl IntoIterator<Item = &'a Word>, min_rank: usize) -> Result<Self> {
        let rank = words
            .into_iter()
            .flat_map(|w| w.letters().iter())
            .map(|l| l.generator_index() + 1)
            .max()
            .unwrap_or(0)
            .max(min_rank);
        Alphabet::new(rank)
    }
}
