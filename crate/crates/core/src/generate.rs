//! Generators of exact factor languages, and the conversions between
//! boundary points, biinfinite words and languages.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::free::{Alphabet, BoundaryPoint, Endomorphism, Letter, Word};
use crate::language::{insert_slice, insert_windows, FactorLanguage, Frontier};

/// Longest iterate a substitution may reach before giving up.
pub const SUBSTITUTION_LETTER_BUDGET: usize = 1 << 22;

/// An eventually periodic biinfinite reduced word `^∞(p_L) · c · (p_R)^∞`.
///
/// Position 1 is the first letter of `c`, or of `p_R` when `c` is empty;
/// position 0 is the last letter of `p_L`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiinfiniteWord {
    left_period: Word,
    center: Word,
    right_period: Word,
}

impl BiinfiniteWord {
    pub fn new(left_period: Word, center: Word, right_period: Word) -> Result<Self> {
        for p in [&left_period, &right_period] {
            if p.is_empty() {
                return Err(Error::InvalidBiinfinite("empty period".into()));
            }
            if !p.is_cyclically_reduced() {
                return Err(Error::InvalidBiinfinite(format!(
                    "period {p} is not cyclically reduced"
                )));
            }
        }
        let right_start = center.first().or(right_period.first());
        if left_period.last().map(Letter::inverse) == right_start {
            return Err(Error::InvalidBiinfinite(format!(
                "left junction {left_period}·{center}{right_period} cancels"
            )));
        }
        if !center.is_reduced_product(&right_period) {
            return Err(Error::InvalidBiinfinite(format!(
                "right junction {center}·{right_period} cancels"
            )));
        }
        Ok(BiinfiniteWord {
            left_period: left_period.primitive_root(),
            center,
            right_period: right_period.primitive_root(),
        })
    }

    pub fn parse(left: &str, center: &str, right: &str) -> Result<Self> {
        BiinfiniteWord::new(Word::parse(left)?, Word::parse(center)?, Word::parse(right)?)
    }

    /// The periodic leaf `…www·www…` of a cyclically reduced `w`.
    pub fn periodic(w: &Word) -> Result<Self> {
        let core = w.cyclic_reduce().core;
        if core.is_empty() {
            return Err(Error::TrivialWord);
        }
        BiinfiniteWord::new(core.clone(), Word::empty(), core)
    }

    pub fn left_period(&self) -> &Word {
        &self.left_period
    }

    pub fn center(&self) -> &Word {
        &self.center
    }

    pub fn right_period(&self) -> &Word {
        &self.right_period
    }

    /// The letter `z_i`.
    pub fn letter_at(&self, i: i64) -> Letter {
        if i >= 1 {
            let j = (i - 1) as usize;
            let c = self.center.letters();
            if j < c.len() {
                c[j]
            } else {
                let p = self.right_period.letters();
                p[(j - c.len()) % p.len()]
            }
        } else {
            let j = (-i) as usize;
            let p = self.left_period.letters();
            p[p.len() - 1 - j % p.len()]
        }
    }

    /// `Z_n = z_{−n} … z_n`.
    pub fn central_factors(&self, n: usize) -> Word {
        self.central_factors_at(n, 0)
    }

    /// The central word of length `2n + 1` of the shifted word `σ^s(Z)`.
    pub fn central_factors_at(&self, n: usize, s: i64) -> Word {
        let n = n as i64;
        Word::from_reduced_unchecked((s - n..=s + n).map(|i| self.letter_at(i)).collect())
    }

    /// The same leaf read backwards.
    pub fn inverse(&self) -> BiinfiniteWord {
        BiinfiniteWord {
            left_period: self.right_period.inverse(),
            center: self.center.inverse(),
            right_period: self.left_period.inverse(),
        }
    }

    /// Exact `𝓛_n` of the lamination generated by this leaf: all factors of
    /// length `≤ n` and their inverses. The two periodic leaves it
    /// accumulates on are included automatically.
    pub fn language(&self, alphabet: Alphabet, n: usize) -> Result<FactorLanguage> {
        check_input(alphabet, n, [&self.left_period, &self.center, &self.right_period])?;
        let (pl, c, pr) = (
            self.left_period.letters(),
            self.center.letters(),
            self.right_period.letters(),
        );
        let reps_left = n / pl.len() + 2;
        let reps_right = n / pr.len() + 2;
        let mut window = Vec::with_capacity(reps_left * pl.len() + c.len() + reps_right * pr.len());
        for _ in 0..reps_left {
            window.extend_from_slice(pl);
        }
        let center_start = window.len();
        window.extend_from_slice(c);
        let right_start = window.len();
        for _ in 0..reps_right {
            window.extend_from_slice(pr);
        }
        let mut levels = FactorLanguage::empty_levels(n);
        for len in 1..=n {
            // one period of purely left factors, everything meeting the
            // center, and one period of purely right factors
            let starts = (0..pl.len()).chain(
                (center_start + 1).saturating_sub(len)..(right_start + pr.len()).min(window.len() - len + 1),
            );
            for s in starts {
                let f = &window[s..s + len];
                insert_slice(&mut levels[len], f);
                let inv: Vec<Letter> = f.iter().rev().map(|l| l.inverse()).collect();
                insert_slice(&mut levels[len], &inv);
            }
        }
        Ok(FactorLanguage::from_levels(alphabet, levels, true))
    }
}

impl fmt::Display for BiinfiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "^∞({})·{}·({})^∞", self.left_period, self.center, self.right_period)
    }
}

impl fmt::Debug for BiinfiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_input<'a>(
    alphabet: Alphabet,
    n: usize,
    words: impl IntoIterator<Item = &'a Word>,
) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroHorizon);
    }
    for w in words {
        if !alphabet.contains_word(w) {
            return Err(Error::AlphabetMismatch {
                left: alphabet.rank(),
                right: w.letters().iter().map(|l| l.generator_index() + 1).max().unwrap_or(0),
            });
        }
    }
    Ok(())
}

/// Exact `𝓛_n` of the rational lamination `L(w)`.
pub fn rational(alphabet: Alphabet, w: &Word, n: usize) -> Result<FactorLanguage> {
    check_input(alphabet, n, [w])?;
    let core = w.cyclic_reduce().core;
    if core.is_empty() {
        return Err(Error::TrivialWord);
    }
    let y = core.letters();
    let reps = n / y.len() + 2;
    let window: Vec<Letter> = y.iter().copied().cycle().take(reps * y.len()).collect();
    let inverse: Vec<Letter> = window.iter().rev().map(|l| l.inverse()).collect();
    let mut levels = FactorLanguage::empty_levels(n);
    for len in 1..=n {
        for s in 0..y.len() {
            insert_slice(&mut levels[len], &window[s..s + len]);
            insert_slice(&mut levels[len], &inverse[s..s + len]);
        }
    }
    Ok(FactorLanguage::from_levels(alphabet, levels, true))
}

/// The length-`n` words of the rational lamination `L(w)`, without the
/// shorter levels.
pub fn rational_frontier(alphabet: Alphabet, w: &Word, n: usize) -> Result<Frontier> {
    check_input(alphabet, n, [w])?;
    let core = w.cyclic_reduce().core;
    if core.is_empty() {
        return Err(Error::TrivialWord);
    }
    let y = core.letters();
    let window: Vec<Letter> = y.iter().copied().cycle().take(n + y.len() - 1).collect();
    let mut level = HashSet::new();
    insert_windows(&mut level, &window, n);
    Ok(Frontier::from_set(alphabet, n, level))
}

/// Exact `𝓛_n` of the lamination generated by one eventually periodic leaf.
pub fn from_ends(alphabet: Alphabet, spec: &BiinfiniteWord, n: usize) -> Result<FactorLanguage> {
    spec.language(alphabet, n)
}

/// Positive factors of length `≤ h` of the prolongable iterates of `phi` on
/// `seed`, collected once two consecutive iterates agree.
fn substitution_factors(phi: &Endomorphism, seed: Letter, h: usize) -> Result<Vec<HashSet<Word>>> {
    let collect = |w: &Word| {
        let mut levels = FactorLanguage::empty_levels(h);
        for len in 1..=h.min(w.len()) {
            for f in w.letters().windows(len) {
                insert_slice(&mut levels[len], f);
            }
        }
        levels
    };
    let mut current = Word::letter(seed);
    let mut factors = collect(&current);
    loop {
        let next = phi.apply(&current);
        if next.len() > SUBSTITUTION_LETTER_BUDGET {
            return Err(Error::IterationBudget(SUBSTITUTION_LETTER_BUDGET));
        }
        let next_factors = collect(&next);
        if next_factors == factors && next.len() >= h {
            return Ok(factors);
        }
        current = next;
        factors = next_factors;
    }
}

/// Exact `𝓛_n` of the lamination generated by the fixed word `φ^∞(seed)` of
/// a prolongable positive substitution.
///
/// Factors of the iterates are collected until two consecutive iterates
/// agree. Words that occur only finitely often in the fixed word are then
/// removed by chopping: `chop(𝓛_{n+2j}, j)` is computed for growing `j`
/// until two consecutive depths agree.
pub fn from_substitution(phi: &Endomorphism, seed: Letter, n: usize) -> Result<FactorLanguage> {
    let alphabet = phi.alphabet();
    if n == 0 {
        return Err(Error::ZeroHorizon);
    }
    if !alphabet.contains(seed) || seed.is_inverse() {
        return Err(Error::NotProlongable(seed.to_string()));
    }
    for (g, image) in alphabet.generators().zip(phi.images()) {
        if image.is_empty() || !image.is_positive() {
            return Err(Error::NonPositiveImage(g.to_string()));
        }
    }
    let seed_image = phi.image_of_letter(seed);
    if seed_image.first() != Some(seed) || seed_image.len() < 2 {
        return Err(Error::NotProlongable(seed.to_string()));
    }
    let chopped = |j: usize| -> Result<FactorLanguage> {
        let mut levels = FactorLanguage::empty_levels(n + 2 * j);
        for w in substitution_factors(phi, seed, n + 2 * j)?.iter().flatten() {
            FactorLanguage::add_factors(&mut levels, w.letters());
        }
        FactorLanguage::from_levels(alphabet, levels, true).chop(j)
    };
    let budget = 2 * n + 16;
    let mut previous = chopped(0)?;
    for j in 1..=budget {
        let next = chopped(j)?;
        if next == previous {
            return Ok(next);
        }
        previous = next;
    }
    Err(Error::NoStabilization(budget))
}

/// `ρ(X, Y) = X⁻¹Y` with the common prefix of `X` and `Y` removed.
pub fn rho(x: &BoundaryPoint, y: &BoundaryPoint) -> Result<BiinfiniteWord> {
    let common = x.common_prefix_len(y).ok_or(Error::EqualBoundaryPoints)?;
    let (x_tail, y_tail) = (x.tail(common), y.tail(common));
    let center = x_tail.prefix().inverse().mul(y_tail.prefix());
    debug_assert_eq!(center.len(), x_tail.prefix().len() + y_tail.prefix().len());
    BiinfiniteWord::new(
        x_tail.period().inverse(),
        center,
        y_tail.period().clone(),
    )
}

/// `d_𝒜(X, Y)` on the boundary.
pub fn boundary_distance(x: &BoundaryPoint, y: &BoundaryPoint) -> f64 {
    x.distance(y)
}

/// Output of [`rational_approximant`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approximant {
    /// The constructed cyclically reduced word `v′`.
    pub word: Word,
    /// Length-`m` word used to cut the blocks (`u` or `u⁻¹`).
    pub anchor: Word,
    /// Gap bound `K`, the length of each block of `v = w₁w₂w₃`.
    pub gap: usize,
    /// The word `v = w₁w₂w₃` of length `3K`.
    pub source: Word,
}

/// Rational word `v′` with `𝓛_m(L(v′)) = 𝓛_m(L)` for a language with the
/// bounded gap property.
///
/// `u` is the least length-`m` word and `v` the least length-`3K` word of
/// `L`; with `v = w₁w₂w₃`, `w₁ = w₁′uw₁″` and `w₃ = w₃′uw₃″` (first
/// occurrences) the result is `v′ = u w₁″ w₂ w₃′`. When `u` does not occur in
/// both blocks, `u⁻¹` is used as the anchor instead. The postcondition is
/// checked before returning.
pub fn rational_approximant(lang: &FactorLanguage, m: usize) -> Result<Approximant> {
    let gap = lang.gap_bound(m)?.ok_or(Error::GapNotWitnessed {
        length: m,
        horizon: lang.horizon(),
    })?;
    if 3 * gap > lang.horizon() {
        return Err(Error::HorizonTooSmall {
            needed: 3 * gap,
            available: lang.horizon(),
        });
    }
    let u = (*lang.words_of_len(m).first().ok_or(Error::GapNotWitnessed {
        length: m,
        horizon: lang.horizon(),
    })?)
    .clone();
    let v = (*lang.words_of_len(3 * gap)[0]).clone();
    let (w1, w2, w3) = (
        v.subword(0..gap),
        v.subword(gap..2 * gap),
        v.subword(2 * gap..3 * gap),
    );
    let anchor = [u.clone(), u.inverse()]
        .into_iter()
        .find(|a| w1.contains(a) && w3.contains(a))
        .ok_or_else(|| Error::AnchorNotFound(u.to_string()))?;
    let i1 = w1.find(&anchor).expect("checked above");
    let i3 = w3.find(&anchor).expect("checked above");
    let w1_after = w1.subword(i1 + m..gap);
    let w3_before = w3.subword(0..i3);
    let mut letters = anchor.letters().to_vec();
    letters.extend_from_slice(w1_after.letters());
    letters.extend_from_slice(w2.letters());
    letters.extend_from_slice(w3_before.letters());
    let word = Word::from_reduced_unchecked(letters);
    if !word.is_cyclically_reduced() {
        return Err(Error::ApproximantRejected(word.to_string()));
    }
    let check = rational(lang.alphabet(), &word, m)?;
    if !check.equal_at(lang, m)? {
        return Err(Error::ApproximantRejected(word.to_string()));
    }
    Ok(Approximant {
        word,
        anchor,
        gap,
        source: v,
    })
}
