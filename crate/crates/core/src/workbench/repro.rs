use std::collections::BTreeSet;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::nielsen::random_automorphism;
use crate::action::ActionPlan;
use crate::error::{Error, Result};
use crate::free::{Alphabet, CyclicWord, Endomorphism, Letter, Word};
use crate::generate::{from_ends, from_substitution, rational, rational_approximant, BiinfiniteWord};
use crate::language::FactorLanguage;

/// Horizons above this are not tried when looking for a gap bound.
const LIMITSET_HORIZON_CAP: usize = 4096;

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn rank2() -> Alphabet {
    Alphabet::new(2).expect("rank 2 is valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WordKind {
    /// A proper power of a single generator.
    Pure,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NotDenseEntry {
    pub word: String,
    pub kind: WordKind,
    pub equal: bool,
    /// A word in exactly one of the two languages.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NotDenseReport {
    pub horizon: usize,
    pub max_len: usize,
    pub entries: Vec<NotDenseEntry>,
}

impl NotDenseReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| !e.equal && e.witness.is_some())
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

impl fmt::Display for NotDenseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "notdense n={} max_len={}", self.horizon, self.max_len)?;
        writeln!(f, "{:<12} {:<6} {:<6} witness", "word", "kind", "equal")?;
        for e in &self.entries {
            let kind = match e.kind {
                WordKind::Pure => "pure",
                WordKind::Mixed => "mixed",
            };
            writeln!(
                f,
                "{:<12} {:<6} {:<6} {}",
                e.word,
                kind,
                e.equal,
                e.witness.as_deref().unwrap_or("-")
            )?;
        }
        let failed = self.entries.iter().filter(|e| !e.equal).count();
        writeln!(f, "{failed}/{} rational languages differ", self.entries.len())
    }
}

/// Cyclic words of rank 2 up to rotation and inversion, by length.
fn cyclic_classes(max_len: usize) -> Vec<CyclicWord> {
    let al = rank2();
    let mut out = Vec::new();
    for len in 1..=max_len {
        let classes: BTreeSet<Word> = al
            .reduced_words(len)
            .into_iter()
            .filter(|w| w.is_cyclically_reduced())
            .map(|w| CyclicWord::new(&w).expect("nonempty").unoriented().word().clone())
            .collect();
        out.extend(classes.iter().map(|w| CyclicWord::new(w).expect("nonempty")));
    }
    out
}

fn symmetric_difference_min(x: &FactorLanguage, y: &FactorLanguage, n: usize) -> Option<Word> {
    (1..=n).find_map(|k| {
        let xs: BTreeSet<&Word> = x.words_of_len(k).into_iter().collect();
        let ys: BTreeSet<&Word> = y.words_of_len(k).into_iter().collect();
        xs.symmetric_difference(&ys).next().map(|w| (*w).clone())
    })
}

/// Checks that no rational lamination of a cyclic word of length
/// `≤ max_len` has the level-`n` language of `^∞a · b^∞`.
pub fn repro_notdense(n: usize, max_len: usize) -> Result<NotDenseReport> {
    if n < 2 {
        return Err(Error::HorizonTooSmall { needed: 2, available: n });
    }
    let al = rank2();
    let target = from_ends(al, &BiinfiniteWord::parse("a", "", "b")?, n)?;
    let ab = Word::parse("ab")?;
    let bx = [Word::parse("ba")?, Word::parse("bA")?];
    let mut entries = Vec::new();
    for class in cyclic_classes(max_len) {
        let w = class.word();
        let lang = rational(al, w, n)?;
        let equal = lang.equal_at(&target, n)?;
        let pure = w.letters().iter().all(|l| l.generator_index() == w.letters()[0].generator_index());
        let witness = if pure {
            Some(ab.clone()).filter(|ab| target.contains(ab) && !lang.contains(ab))
        } else {
            bx.iter().find(|x| lang.contains(x) && !target.contains(x)).cloned()
        }
        .or_else(|| symmetric_difference_min(&lang, &target, n));
        entries.push(NotDenseEntry {
            word: w.to_string(),
            kind: if pure { WordKind::Pure } else { WordKind::Mixed },
            equal,
            witness: witness.map(|w| w.to_string()),
        });
    }
    Ok(NotDenseReport { horizon: n, max_len, entries })
}

/// A generator of exact factor languages at any horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LanguageSource {
    Rational(Alphabet, Word),
    Ends(Alphabet, BiinfiniteWord),
    Substitution(Endomorphism, Letter),
}

impl LanguageSource {
    /// The fixed word of `a ↦ ab, b ↦ a`.
    pub fn fibonacci() -> Self {
        LanguageSource::Substitution(
            Endomorphism::parse_rules("a:ab,b:a").expect("valid rules"),
            Letter::generator(0),
        )
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            LanguageSource::Rational(al, _) | LanguageSource::Ends(al, _) => *al,
            LanguageSource::Substitution(phi, _) => phi.alphabet(),
        }
    }

    pub fn generate(&self, n: usize) -> Result<FactorLanguage> {
        match self {
            LanguageSource::Rational(al, w) => rational(*al, w, n),
            LanguageSource::Ends(al, spec) => from_ends(*al, spec, n),
            LanguageSource::Substitution(phi, seed) => from_substitution(phi, *seed, n),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            LanguageSource::Rational(_, w) => format!("rational({w})"),
            LanguageSource::Ends(_, s) => {
                format!("ends({}|{}|{})", s.left_period(), s.center(), s.right_period())
            }
            LanguageSource::Substitution(phi, seed) => {
                let rules: Vec<String> = phi.to_map().iter().map(|(k, v)| format!("{k}:{v}")).collect();
                format!("subst({};{seed})", rules.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitSetRow {
    pub m: usize,
    /// Gap bound `K(m)`.
    pub gap: usize,
    /// Horizon the source language was generated at.
    pub horizon: usize,
    pub word: String,
    pub word_len: usize,
    /// `⌊(m − 1)/2⌋`; the certified bound is `exp(−bound_exponent)`.
    pub bound_exponent: usize,
    pub distance_bound: f64,
    /// Exponent of the distance measured at the full horizon.
    pub measured_exponent: usize,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitSetReport {
    pub source: String,
    pub rows: Vec<LimitSetRow>,
}

impl LimitSetReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.certified)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

impl fmt::Display for LimitSetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "limitset {}", self.source)?;
        writeln!(f, "{:>3} {:>5} {:>7} {:>6} {:>10}  certified  word", "m", "K(m)", "horizon", "|v'|", "bound")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>3} {:>5} {:>7} {:>6} {:>10.6}  {:<9}  {}",
                r.m, r.gap, r.horizon, r.word_len, r.distance_bound, r.certified, r.word
            )?;
        }
        Ok(())
    }
}

/// Smallest generated language at which `3·K(m)` fits under the horizon.
fn language_for_gap(source: &LanguageSource, m: usize) -> Result<(FactorLanguage, usize)> {
    let mut h = (3 * m).max(4);
    loop {
        let lang = source.generate(h)?;
        match lang.gap_bound(m)? {
            Some(k) if 3 * k <= h => return Ok((lang, k)),
            Some(k) => h = 3 * k,
            None if 2 * h > LIMITSET_HORIZON_CAP => {
                return Err(Error::GapNotWitnessed { length: m, horizon: h })
            }
            None => h *= 2,
        }
    }
}

/// Runs the rational approximation construction for `m = 1..=m_max` and
/// certifies each approximant independently of the construction.
pub fn repro_limitset(source: &LanguageSource, m_max: usize) -> Result<LimitSetReport> {
    let mut rows = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let (lang, gap) = language_for_gap(source, m)?;
        let approx = rational_approximant(&lang, m)?;
        let check = rational(lang.alphabet(), &approx.word, lang.horizon())?;
        let agrees = check.equal_at(&lang, m)?;
        let measured = check.distance(&lang)?;
        let bound_exponent = (m - 1) / 2;
        rows.push(LimitSetRow {
            m,
            gap,
            horizon: lang.horizon(),
            word: approx.word.to_string(),
            word_len: approx.word.len(),
            bound_exponent,
            distance_bound: (-(bound_exponent as f64)).exp(),
            measured_exponent: measured.exponent,
            certified: agrees && measured.exponent >= bound_exponent,
        });
    }
    Ok(LimitSetReport {
        source: source.describe(),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointSample {
    pub moves: Vec<String>,
    pub images: Vec<String>,
    /// `α([a,b])` as a word.
    pub commutator_image: String,
    /// Cyclic core of the image equals `[a,b]^{±1}` up to rotation.
    pub cyclic_match: bool,
    /// The image language at level 3 equals that of `[a,b]`.
    pub language_fixed: bool,
    /// A word `xy` with `y ∉ {x, x⁻¹}` in the image language.
    pub mixed_word: Option<String>,
    pub distance_exponent: usize,
    pub distance_capped: bool,
    pub source_horizon: usize,
}

impl FixedPointSample {
    pub fn passed(&self) -> bool {
        self.cyclic_match
            && self.language_fixed
            && self.mixed_word.is_some()
            && self.distance_exponent == 0
            && !self.distance_capped
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub seed: u64,
    pub nielsen_len: usize,
    pub samples: Vec<FixedPointSample>,
}

impl FixedPointReport {
    pub fn passed(&self) -> bool {
        self.samples.iter().all(FixedPointSample::passed)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

impl fmt::Display for FixedPointReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fixedpoint seed={} nielsen_len={}", self.seed, self.nielsen_len)?;
        writeln!(f, "{:>4} {:<6} {:<6} {:<5} {:>8}  image", "#", "cyclic", "fixed", "xy", "d")?;
        for (i, s) in self.samples.iter().enumerate() {
            writeln!(
                f,
                "{:>4} {:<6} {:<6} {:<5} {:>8.6}  {}",
                i,
                s.cyclic_match,
                s.language_fixed,
                s.mixed_word.as_deref().unwrap_or("-"),
                (-(s.distance_exponent as f64)).exp(),
                s.commutator_image
            )?;
        }
        let ok = self.samples.iter().filter(|s| s.passed()).count();
        writeln!(f, "{ok}/{} samples pass", self.samples.len())
    }
}

/// Samples rank-2 automorphisms and checks that each fixes the lamination
/// of `[a,b]` while moving it away from that of `a`.
pub fn repro_fixedpoint(trials: usize, nielsen_len: usize, seed: u64) -> Result<FixedPointReport> {
    let al = rank2();
    let commutator = Word::parse("ABab")?;
    let target = CyclicWord::new(&commutator)?;
    let n = 3;
    let rational_a = rational(al, &Word::parse("a")?, n)?;
    let fixed_language = rational(al, &commutator, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(trials);
    for _ in 0..trials {
        let (alpha, moves) = random_automorphism(&mut rng, al, nielsen_len)?;
        let image = alpha.apply(&commutator);
        let cyclic_match = CyclicWord::new(&image)?.same_up_to_inversion(&target);

        let plan = ActionPlan::new(&alpha);
        let source_horizon = plan.required_horizon(n);
        let acted = plan.act(&rational(al, &commutator, source_horizon)?, n)?;
        let mixed_word = acted
            .words_of_len(2)
            .into_iter()
            .find(|w| {
                let (x, y) = (w.letters()[0], w.letters()[1]);
                y != x && !rational_a.contains(w)
            })
            .map(|w| w.to_string());
        let d = rational_a.distance(&acted)?;
        samples.push(FixedPointSample {
            moves: moves.iter().map(|m| format!("{m:?}")).collect(),
            images: alpha.forward().images().iter().map(|w| w.to_string()).collect(),
            commutator_image: image.to_string(),
            cyclic_match,
            language_fixed: acted == fixed_language,
            mixed_word,
            distance_exponent: d.exponent,
            distance_capped: d.capped,
            source_horizon,
        });
    }
    Ok(FixedPointReport {
        seed,
        nielsen_len,
        samples,
    })
}

/// Least index `K` with `𝓛_n(seq[k]) = 𝓛_n(target)` for every `k ≥ K`, or
/// `None` if the last language already differs.
pub fn converge_check(seq: &[FactorLanguage], target: &FactorLanguage, n: usize) -> Result<Option<usize>> {
    if !target.is_exact() || seq.iter().any(|l| !l.is_exact()) {
        return Err(Error::NotExact);
    }
    let mut first = None;
    for (k, lang) in seq.iter().enumerate().rev() {
        if !lang.equal_at(target, n)? {
            break;
        }
        first = Some(k);
    }
    // every language must also be checked for horizon shortfall
    for lang in seq {
        lang.equal_at(target, n)?;
    }
    Ok(first)
}
