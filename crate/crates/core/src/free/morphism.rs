use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free::alphabet::{Alphabet, Letter};
use crate::free::word::Word;

/// A homomorphism `F(𝒜) → F(𝒜)` given by the images of the generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.rank() {
            return Err(Error::InvalidMorphism(format!(
                "expected {} generator images, got {}",
                alphabet.rank(),
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|w| !alphabet.contains_word(w)) {
            return Err(Error::InvalidMorphism(format!(
                "image {bad} uses letters outside rank {}",
                alphabet.rank()
            )));
        }
        Ok(Endomorphism { alphabet, images })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = alphabet.generators().map(Word::letter).collect();
        Endomorphism { alphabet, images }
    }

    /// Parses the compact form `"a:ab,b:a"`.
    ///
    /// The rank is the number of listed generators, which must be exactly
    /// `a, b, …` in some order.
    pub fn parse_rules(rules: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for rule in rules.split(',').map(str::trim).filter(|r| !r.is_empty()) {
            let (lhs, rhs) = rule
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("rule {rule:?} lacks ':'")))?;
            map.insert(lhs.trim().to_string(), rhs.trim().to_string());
        }
        Endomorphism::from_map(&map)
    }

    pub fn from_map(map: &BTreeMap<String, String>) -> Result<Self> {
        let alphabet = Alphabet::new(map.len())?;
        let mut images = vec![None; alphabet.rank()];
        for (key, value) in map {
            let mut chars = key.chars();
            let letter = match (chars.next(), chars.next()) {
                (Some(c), None) => alphabet.letter(c)?,
                _ => return Err(Error::Parse(format!("bad generator name {key:?}"))),
            };
            if letter.is_inverse() {
                return Err(Error::Parse(format!("generator name {key:?} must be lowercase")));
            }
            images[letter.generator_index()] = Some(alphabet.parse(value)?);
        }
        let images = images
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Parse("generator images are not contiguous from 'a'".into()))?;
        Endomorphism::new(alphabet, images)
    }

    pub fn to_map(&self) -> BTreeMap<String, String> {
        self.alphabet
            .generators()
            .zip(&self.images)
            .map(|(g, w)| (g.to_char().to_string(), w.to_string()))
            .collect()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image_of_letter(&self, l: Letter) -> Word {
        let w = &self.images[l.generator_index()];
        if l.is_inverse() {
            w.inverse()
        } else {
            w.clone()
        }
    }

    /// Letterwise image followed by free reduction.
    pub fn apply(&self, w: &Word) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for &l in w.letters() {
            let image = &self.images[l.generator_index()];
            let mut push = |x: Letter| {
                if out.last() == Some(&x.inverse()) {
                    out.pop();
                } else {
                    out.push(x);
                }
            };
            if l.is_inverse() {
                image.letters().iter().rev().for_each(|x| push(x.inverse()));
            } else {
                image.letters().iter().for_each(|&x| push(x));
            }
        }
        Word::from_reduced_unchecked(out)
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        self.alphabet.check_same(&other.alphabet)?;
        let images = other.images.iter().map(|w| self.apply(w)).collect();
        Ok(Endomorphism {
            alphabet: self.alphabet,
            images,
        })
    }

    /// True iff both compositions fix every generator.
    pub fn verify_inverse(&self, other: &Endomorphism) -> Result<bool> {
        Ok(self.compose(other)?.is_identity() && other.compose(self)?.is_identity())
    }

    pub fn is_identity(&self) -> bool {
        self.alphabet
            .generators()
            .zip(&self.images)
            .all(|(g, w)| w.letters() == [g])
    }

    /// `max{|φ(x)| : x ∈ 𝒜}`.
    pub fn norm(&self) -> usize {
        self.images.iter().map(Word::len).max().unwrap_or(0)
    }

    /// True when every generator image is a nonempty positive word.
    pub fn is_positive(&self) -> bool {
        self.images.iter().all(|w| !w.is_empty() && w.is_positive())
    }
}

impl fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rules: Vec<String> = self
            .to_map()
            .into_iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect();
        write!(f, "{}", rules.join(","))
    }
}

/// An automorphism together with a verified inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Automorphism {
    forward: Endomorphism,
    backward: Endomorphism,
}

impl Automorphism {
    /// Checks that `backward` inverts `forward` on every generator.
    pub fn new(forward: Endomorphism, backward: Endomorphism) -> Result<Self> {
        forward.alphabet.check_same(&backward.alphabet)?;
        let there = forward.compose(&backward)?;
        let back = backward.compose(&forward)?;
        for (g, (x, y)) in forward
            .alphabet
            .generators()
            .zip(there.images.iter().zip(&back.images))
        {
            if x.letters() != [g] || y.letters() != [g] {
                return Err(Error::NotInverse(g.to_string()));
            }
        }
        Ok(Automorphism { forward, backward })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let id = Endomorphism::identity(alphabet);
        Automorphism {
            forward: id.clone(),
            backward: id,
        }
    }

    /// The inner automorphism `x ↦ g⁻¹ x g`.
    pub fn inner(alphabet: Alphabet, g: &Word) -> Result<Self> {
        if !alphabet.contains_word(g) {
            return Err(Error::InvalidMorphism(format!("conjugator {g} outside rank")));
        }
        let ginv = g.inverse();
        let conj = |a: &Word, b: &Word| -> Vec<Word> {
            alphabet
                .generators()
                .map(|x| a.mul(&Word::letter(x)).mul(b))
                .collect()
        };
        let forward = Endomorphism::new(alphabet, conj(&ginv, g))?;
        let backward = Endomorphism::new(alphabet, conj(g, &ginv))?;
        Automorphism::new(forward, backward)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.forward.alphabet
    }

    pub fn forward(&self) -> &Endomorphism {
        &self.forward
    }

    pub fn backward(&self) -> &Endomorphism {
        &self.backward
    }

    pub fn apply(&self, w: &Word) -> Word {
        self.forward.apply(w)
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        Ok(Automorphism {
            forward: self.forward.compose(&other.forward)?,
            backward: other.backward.compose(&self.backward)?,
        })
    }

    /// `|α|_𝒜`.
    pub fn norm(&self) -> usize {
        self.forward.norm()
    }

    /// `|α⁻¹|_𝒜`.
    pub fn conorm(&self) -> usize {
        self.backward.norm()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: AutomorphismJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Automorphism::new(
            Endomorphism::from_map(&raw.images)?,
            Endomorphism::from_map(&raw.inverse)?,
        )
    }

    pub fn to_json(&self) -> String {
        let raw = AutomorphismJson {
            images: self.forward.to_map(),
            inverse: self.backward.to_map(),
        };
        serde_json::to_string_pretty(&raw).expect("plain maps serialize")
    }
}

#[derive(Serialize, Deserialize)]
struct AutomorphismJson {
    images: BTreeMap<String, String>,
    inverse: BTreeMap<String, String>,
}
