//! Horizon-truncated laminary languages.
//!
//! A [`FactorLanguage`] is a finite, symmetric and factorial set of reduced
//! words of length at most its horizon. The `exact` flag records that the
//! set is precisely `𝓛_n` of some lamination; only generators and operations
//! that preserve this property set it, and metric or minimality claims
//! require it.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::free::{Alphabet, Letter, Word};

#[derive(Clone, PartialEq, Eq)]
pub struct FactorLanguage {
    alphabet: Alphabet,
    horizon: usize,
    /// `levels[k]` holds the words of length `k`; `levels[0]` stays empty.
    levels: Vec<HashSet<Word>>,
    exact: bool,
}

/// Result of [`FactorLanguage::distance`].
///
/// The distance is `exp(-exponent)`. When `capped` is set every odd
/// truncation available within the common horizon agrees, so the true
/// distance is only known to be at most that value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distance {
    pub exponent: usize,
    pub capped: bool,
}

impl Distance {
    pub fn value(&self) -> f64 {
        (-(self.exponent as f64)).exp()
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.capped { "≤ " } else { "" };
        write!(f, "{rel}exp(-{}) = {rel}{:.6}", self.exponent, self.value())
    }
}

pub(crate) fn insert_slice(level: &mut HashSet<Word>, letters: &[Letter]) {
    if !level.contains(letters) {
        level.insert(Word::from_reduced_unchecked(letters.to_vec()));
    }
}

/// Inserts every distinct length-`len` window of `letters`, together with
/// its inverse.
///
/// Windows that repeat the window one period earlier are skipped without
/// hashing, where the period is that of the middle third of `letters`. This
/// keeps long, mostly periodic words linear in their length.
pub(crate) fn insert_windows(level: &mut HashSet<Word>, letters: &[Letter], len: usize) {
    if len == 0 || letters.len() < len {
        return;
    }
    let p = middle_period(letters).filter(|&p| p < len);
    let mut run = 0usize;
    let mut inverse = Vec::with_capacity(len);
    for end in 0..letters.len() {
        if let Some(p) = p {
            run = if end >= p && letters[end] == letters[end - p] { run + 1 } else { 0 };
        }
        let Some(start) = (end + 1).checked_sub(len) else { continue };
        if p.is_some() && run >= len {
            continue;
        }
        let window = &letters[start..=end];
        if !level.contains(window) {
            insert_slice(level, window);
            inverse.clear();
            inverse.extend(window.iter().rev().map(|l| l.inverse()));
            insert_slice(level, &inverse);
        }
    }
}

/// Least period of the middle third, via the prefix function.
fn middle_period(letters: &[Letter]) -> Option<usize> {
    let n = letters.len();
    let mid = &letters[n / 3..2 * n / 3];
    if mid.len() < 2 {
        return None;
    }
    let mut pi = vec![0usize; mid.len()];
    for i in 1..mid.len() {
        let mut k = pi[i - 1];
        while k > 0 && mid[i] != mid[k] {
            k = pi[k - 1];
        }
        if mid[i] == mid[k] {
            k += 1;
        }
        pi[i] = k;
    }
    Some(mid.len() - pi[mid.len() - 1])
}

/// The words of length exactly `horizon` of an exact laminary language.
///
/// Laminary languages are extendable, so the whole truncation is the factor
/// closure of these words. This is the cheap way to hold a language at a
/// large horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frontier {
    alphabet: Alphabet,
    horizon: usize,
    /// Sorted shortlex, closed under inversion.
    words: Vec<Word>,
}

impl Frontier {
    pub(crate) fn from_set(alphabet: Alphabet, horizon: usize, words: HashSet<Word>) -> Self {
        let mut words: Vec<Word> = words.into_iter().collect();
        words.sort();
        Frontier {
            alphabet,
            horizon,
            words,
        }
    }

    /// The top level of an exact language.
    pub fn of(lang: &FactorLanguage) -> Result<Self> {
        if !lang.exact {
            return Err(Error::NotExact);
        }
        Ok(Frontier::from_set(
            lang.alphabet,
            lang.horizon,
            lang.levels[lang.horizon].clone(),
        ))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// The words of length `n ≤ horizon`.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroHorizon);
        }
        if n > self.horizon {
            return Err(Error::HorizonTooSmall {
                needed: n,
                available: self.horizon,
            });
        }
        let mut level = HashSet::new();
        for w in &self.words {
            insert_windows(&mut level, w.letters(), n);
        }
        Ok(Frontier::from_set(self.alphabet, n, level))
    }

    /// The exact language whose top level this is.
    pub fn language(&self) -> FactorLanguage {
        let mut levels = FactorLanguage::empty_levels(self.horizon);
        for w in &self.words {
            FactorLanguage::add_factors(&mut levels, w.letters());
        }
        FactorLanguage::from_levels(self.alphabet, levels, true)
    }
}

impl FactorLanguage {
    pub(crate) fn empty_levels(horizon: usize) -> Vec<HashSet<Word>> {
        vec![HashSet::new(); horizon + 1]
    }

    /// Adds every factor of `letters` of length at most the horizon, together
    /// with its inverse.
    pub(crate) fn add_factors(levels: &mut [HashSet<Word>], letters: &[Letter]) {
        let horizon = levels.len() - 1;
        let inverse: Vec<Letter> = letters.iter().rev().map(|l| l.inverse()).collect();
        for len in 1..=horizon.min(letters.len()) {
            for window in letters.windows(len).chain(inverse.windows(len)) {
                insert_slice(&mut levels[len], window);
            }
        }
    }

    pub(crate) fn from_levels(
        alphabet: Alphabet,
        levels: Vec<HashSet<Word>>,
        exact: bool,
    ) -> Self {
        FactorLanguage {
            alphabet,
            horizon: levels.len() - 1,
            levels,
            exact,
        }
    }

    /// The smallest symmetric factorial set containing the length-`≤ n`
    /// factors of every seed. Never flagged exact.
    pub fn close<'a>(
        alphabet: Alphabet,
        seeds: impl IntoIterator<Item = &'a Word>,
        horizon: usize,
    ) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::ZeroHorizon);
        }
        let mut levels = Self::empty_levels(horizon);
        let mut any = false;
        for seed in seeds {
            if !alphabet.contains_word(seed) {
                return Err(Error::InvalidMorphism(format!("seed {seed} outside rank")));
            }
            any |= !seed.is_empty();
            Self::add_factors(&mut levels, seed.letters());
        }
        if !any {
            return Err(Error::EmptySeed);
        }
        Ok(Self::from_levels(alphabet, levels, false))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Total number of words.
    pub fn len(&self) -> usize {
        self.levels.iter().map(HashSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.levels.get(w.len()).is_some_and(|l| l.contains(w))
    }

    pub fn contains_letters(&self, letters: &[Letter]) -> bool {
        self.levels.get(letters.len()).is_some_and(|l| l.contains(letters))
    }

    /// Number of words of length exactly `k`.
    pub fn count_of_len(&self, k: usize) -> usize {
        self.levels.get(k).map_or(0, HashSet::len)
    }

    /// Words of length exactly `k`, sorted.
    pub fn words_of_len(&self, k: usize) -> Vec<&Word> {
        let mut out: Vec<&Word> = self.levels.get(k).into_iter().flatten().collect();
        out.sort();
        out
    }

    /// All words sorted by length, then letter order.
    pub fn words(&self) -> Vec<&Word> {
        (1..=self.horizon).flat_map(|k| self.words_of_len(k)).collect()
    }

    /// Positive words (only generator letters), sorted.
    pub fn positive_words_of_len(&self, k: usize) -> Vec<&Word> {
        self.words_of_len(k).into_iter().filter(|w| w.is_positive()).collect()
    }

    /// `𝓛_n` of the same language. Exactness is preserved.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroHorizon);
        }
        if n > self.horizon {
            return Err(Error::HorizonTooSmall {
                needed: n,
                available: self.horizon,
            });
        }
        Ok(FactorLanguage {
            alphabet: self.alphabet,
            horizon: n,
            levels: self.levels[..=n].to_vec(),
            exact: self.exact,
        })
    }

    /// Words admitting no one-letter extension on either side; every other
    /// word is a factor of one of these.
    pub(crate) fn maximal_words(&self) -> impl Iterator<Item = &Word> + '_ {
        let extends = move |w: &Word| {
            let mut buf = Vec::with_capacity(w.len() + 1);
            self.alphabet.letters().any(|x| {
                buf.clear();
                buf.extend_from_slice(w.letters());
                buf.push(x);
                if w.last() != Some(x.inverse()) && self.contains_letters(&buf) {
                    return true;
                }
                buf.clear();
                buf.push(x);
                buf.extend_from_slice(w.letters());
                w.first() != Some(x.inverse()) && self.contains_letters(&buf)
            })
        };
        self.levels.iter().flatten().filter(move |w| !extends(w))
    }

    /// `𝓛†_k`: replaces every word by `w†_k` and closes under factors. The
    /// horizon drops to `n − 2k`.
    pub fn chop(&self, k: usize) -> Result<Self> {
        if self.horizon <= 2 * k {
            return Err(Error::HorizonExhausted {
                horizon: self.horizon,
                chop: k,
            });
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let mut levels = Self::empty_levels(self.horizon - 2 * k);
        // chopping commutes with taking factors, so maximal words suffice
        for w in self.maximal_words() {
            if w.len() > 2 * k {
                Self::add_factors(&mut levels, &w.letters()[k..w.len() - k]);
            }
        }
        Ok(Self::from_levels(self.alphabet, levels, self.exact))
    }

    pub fn is_symmetric(&self) -> bool {
        self.levels.iter().flatten().all(|w| self.contains(&w.inverse()))
    }

    pub fn is_factorial(&self) -> bool {
        self.levels.iter().flatten().filter(|w| w.len() > 1).all(|w| {
            let l = w.letters();
            self.contains_letters(&l[1..]) && self.contains_letters(&l[..l.len() - 1])
        })
    }

    /// Horizon-level laminarity: nonempty, symmetric, factorial, and every
    /// word extends inside the language. Words of length `≤ n − 2` need a
    /// two-sided extension `xwy`; words of length `n − 1` need `xw` and `wy`.
    pub fn is_laminary_at(&self) -> bool {
        if self.is_empty() || !self.is_symmetric() || !self.is_factorial() {
            return false;
        }
        let n = self.horizon;
        for len in 1..n {
            let ok = if len + 2 <= n {
                let middles: HashSet<&[Letter]> = self.levels[len + 2]
                    .iter()
                    .map(|v| &v.letters()[1..=len])
                    .collect();
                self.levels[len].iter().all(|w| middles.contains(w.letters()))
            } else {
                let prefixes: HashSet<&[Letter]> =
                    self.levels[len + 1].iter().map(|v| &v.letters()[..len]).collect();
                let suffixes: HashSet<&[Letter]> =
                    self.levels[len + 1].iter().map(|v| &v.letters()[1..]).collect();
                self.levels[len]
                    .iter()
                    .all(|w| prefixes.contains(w.letters()) && suffixes.contains(w.letters()))
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// `𝓛_m(L) = 𝓛_m(L′)`.
    pub fn equal_at(&self, other: &FactorLanguage, m: usize) -> Result<bool> {
        self.alphabet.check_same(&other.alphabet)?;
        let available = self.horizon.min(other.horizon);
        if m > available {
            return Err(Error::HorizonTooSmall {
                needed: m,
                available,
            });
        }
        Ok((1..=m).all(|k| self.levels[k] == other.levels[k]))
    }

    /// The ultrametric `exp(−max({n ≥ 0 | 𝓛_{2n+1} = 𝓛′_{2n+1}} ∪ {0}))`,
    /// evaluated over the common horizon.
    pub fn distance(&self, other: &FactorLanguage) -> Result<Distance> {
        self.alphabet.check_same(&other.alphabet)?;
        if !self.exact || !other.exact {
            return Err(Error::NotExact);
        }
        let common = self.horizon.min(other.horizon);
        let cap = (common - 1) / 2;
        let first_diff = (1..=common).find(|&k| self.levels[k] != other.levels[k]);
        Ok(match first_diff {
            // 𝓛_{2n+1} agree iff 2n + 1 < first_diff
            Some(d) => Distance {
                exponent: if d >= 2 { (d - 2) / 2 } else { 0 },
                capped: false,
            },
            None => Distance {
                exponent: cap,
                capped: true,
            },
        })
    }

    /// Least `K ≤ horizon` such that every word of length `K` contains every
    /// word of length `≤ m` or its inverse. `None` means the bounded gap
    /// property is not witnessed at this horizon.
    pub fn gap_bound(&self, m: usize) -> Result<Option<usize>> {
        if !self.exact {
            return Err(Error::NotExact);
        }
        if m == 0 || m > self.horizon {
            return Err(Error::HorizonTooSmall {
                needed: m.max(1),
                available: self.horizon,
            });
        }
        let short: Vec<&Word> = (1..=m).flat_map(|k| self.levels[k].iter()).collect();
        for big_k in m..=self.horizon {
            let all = self.levels[big_k].iter().all(|v| {
                let factors: HashSet<&[Letter]> = (1..=m)
                    .flat_map(|k| v.letters().windows(k))
                    .collect();
                short.iter().all(|u| {
                    factors.contains(u.letters()) || factors.contains(u.inverse().letters())
                })
            });
            if all && !self.levels[big_k].is_empty() {
                return Ok(Some(big_k));
            }
        }
        Ok(None)
    }

    /// True iff the language splits as `P ∪ P⁻¹` with `P` positive.
    pub fn is_positive(&self) -> bool {
        self.levels
            .iter()
            .flatten()
            .all(|w| w.is_positive() || w.is_negative())
    }

    fn combine(
        &self,
        other: &FactorLanguage,
        op: impl Fn(&HashSet<Word>, &HashSet<Word>) -> HashSet<Word>,
    ) -> Result<Self> {
        self.alphabet.check_same(&other.alphabet)?;
        let horizon = self.horizon.min(other.horizon);
        let raw: Vec<HashSet<Word>> = (0..=horizon)
            .map(|k| op(&self.levels[k], &other.levels[k]))
            .collect();
        // both inputs are factorial and symmetric, but close again so the
        // invariants never rest on that
        let mut levels = Self::empty_levels(horizon);
        for w in raw.iter().flatten() {
            Self::add_factors(&mut levels, w.letters());
        }
        Ok(Self::from_levels(self.alphabet, levels, false))
    }

    /// Setwise union over the common horizon. Drops the exact flag.
    pub fn union(&self, other: &FactorLanguage) -> Result<Self> {
        self.combine(other, |a, b| a.union(b).cloned().collect())
    }

    /// Setwise intersection over the common horizon. Drops the exact flag.
    pub fn intersect(&self, other: &FactorLanguage) -> Result<Self> {
        self.combine(other, |a, b| a.intersection(b).cloned().collect())
    }

    pub fn is_subset(&self, other: &FactorLanguage) -> bool {
        self.levels
            .iter()
            .flatten()
            .all(|w| other.contains(w))
    }

    /// Marks the language as an exact truncation. Callers must know this to
    /// be true; see the module docs.
    pub fn assume_exact(mut self) -> Self {
        self.exact = true;
        self
    }

    pub fn to_json(&self) -> String {
        let doc = LanguageJson {
            alphabet: self.alphabet.generator_names(),
            horizon: self.horizon,
            exact: self.exact,
            words: self.words().iter().map(|w| w.to_string()).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("plain document serializes")
    }

    /// Parses the JSON document. The word set must already be symmetric and
    /// factorial.
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: LanguageJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let alphabet = Alphabet::new(doc.alphabet.len())?;
        if doc.alphabet != alphabet.generator_names() {
            return Err(Error::Parse(format!(
                "alphabet must list generators a, b, … in order, got {:?}",
                doc.alphabet
            )));
        }
        if doc.horizon == 0 {
            return Err(Error::ZeroHorizon);
        }
        let mut levels = Self::empty_levels(doc.horizon);
        for s in &doc.words {
            let w = alphabet.parse(s)?;
            if w.to_string() != *s || w.is_empty() {
                return Err(Error::Parse(format!("{s:?} is not a nonempty reduced word")));
            }
            if w.len() > doc.horizon {
                return Err(Error::Parse(format!("{s:?} is longer than the horizon")));
            }
            levels[w.len()].insert(w);
        }
        let lang = Self::from_levels(alphabet, levels, doc.exact);
        if !lang.is_symmetric() || !lang.is_factorial() {
            return Err(Error::Parse("word set is not symmetric and factorial".into()));
        }
        Ok(lang)
    }
}

impl fmt::Debug for FactorLanguage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FactorLanguage(rank {}, horizon {}{}) {:?}",
            self.alphabet.rank(),
            self.horizon,
            if self.exact { ", exact" } else { "" },
            self.words()
        )
    }
}

#[derive(Serialize, Deserialize)]
struct LanguageJson {
    alphabet: Vec<String>,
    horizon: usize,
    exact: bool,
    words: Vec<String>,
}
