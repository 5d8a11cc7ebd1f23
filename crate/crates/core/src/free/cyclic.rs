use std::fmt;

use crate::error::{Error, Result};
use crate::free::word::Word;

/// A conjugacy class of nontrivial elements, stored as its least rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    canonical: Word,
}

impl CyclicWord {
    /// Cyclic word of the conjugacy class of `w`.
    pub fn new(w: &Word) -> Result<Self> {
        let core = w.cyclic_reduce().core;
        if core.is_empty() {
            return Err(Error::TrivialWord);
        }
        Ok(CyclicWord {
            canonical: least_rotation(&core),
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        CyclicWord::new(&Word::parse(s)?)
    }

    /// The least rotation, a cyclically reduced word.
    pub fn word(&self) -> &Word {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord {
            canonical: least_rotation(&self.canonical.inverse()),
        }
    }

    /// Representative of the class up to inversion: the lesser of the two
    /// canonical rotations.
    pub fn unoriented(&self) -> CyclicWord {
        let inv = self.inverse();
        if inv.canonical < self.canonical {
            inv
        } else {
            self.clone()
        }
    }

    pub fn same_up_to_inversion(&self, other: &CyclicWord) -> bool {
        self == other || self.inverse() == *other
    }

    pub fn is_primitive(&self) -> bool {
        self.canonical.primitive_root().len() == self.canonical.len()
    }

    /// The class of the primitive root.
    pub fn root(&self) -> CyclicWord {
        CyclicWord {
            canonical: least_rotation(&self.canonical.primitive_root()),
        }
    }
}

fn least_rotation(w: &Word) -> Word {
    (0..w.len()).map(|k| w.rotate(k)).min().unwrap_or_default()
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical)
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.canonical)
    }
}
