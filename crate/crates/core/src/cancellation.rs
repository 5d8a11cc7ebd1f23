//! Bounded cancellation.
//!
//! For an automorphism `φ` there is a constant `C` with
//! `|φ(u)| + |φ(v)| − |φ(uv)| ≤ 2C` whenever `uv` is reduced. Nothing here
//! claims to compute the least such `C`; [`bbt_estimate`] reports a certified
//! lower bound together with a stabilization flag.

use crate::error::{Error, Result};
use crate::free::{Endomorphism, Letter, Word};

pub const DEFAULT_WINDOW: usize = 3;

/// Upper limit on the number of words enumerated by [`bbt_estimate`].
pub const SEARCH_WORD_BUDGET: usize = 150_000;

/// `(|φ(u)| + |φ(v)| − |φ(uv)|) / 2` for a reduced product `uv`.
pub fn defect(phi: &Endomorphism, u: &Word, v: &Word) -> Result<usize> {
    if !u.is_reduced_product(v) {
        return Err(Error::NotReducedProduct(u.to_string(), v.to_string()));
    }
    let (pu, pv) = (phi.apply(u), phi.apply(v));
    let puv = phi.apply(&u.mul(v));
    Ok((pu.len() + pv.len() - puv.len()) / 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BbtEstimate {
    /// Largest defect found.
    pub lower: usize,
    pub witness_u: Word,
    pub witness_v: Word,
    /// Radius actually searched: all reduced `u, v` with `|u|, |v| ≤` this.
    pub search_radius: usize,
    /// The maximum did not grow over the last `window` radii.
    pub stabilized: bool,
    pub window: usize,
    /// Maximum defect at each radius `1..=search_radius`.
    pub per_radius: Vec<usize>,
}

impl BbtEstimate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&serde_json::json!({
            "lower": self.lower,
            "witness_u": self.witness_u.to_string(),
            "witness_v": self.witness_v.to_string(),
            "stabilized": self.stabilized,
            "search_radius": self.search_radius,
            "window": self.window,
            "per_radius": self.per_radius,
        }))
        .expect("plain document serializes")
    }
}

/// Largest radius whose enumeration stays within [`SEARCH_WORD_BUDGET`].
pub fn max_search_radius(rank: usize) -> usize {
    let letters = 2 * rank;
    let mut total = 0usize;
    let mut level = letters;
    let mut k = 0;
    while total + level <= SEARCH_WORD_BUDGET {
        total += level;
        level = level.saturating_mul(letters - 1);
        k += 1;
    }
    k.max(1)
}

/// `4·|φ|`, clamped to the enumeration budget.
pub fn default_radius(phi: &Endomorphism) -> usize {
    (4 * phi.norm()).clamp(1, max_search_radius(phi.alphabet().rank()))
}

struct Entry {
    image: Word,
    word: Word,
}

fn enumerate_images(phi: &Endomorphism, k_max: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    let mut frontier = vec![Entry {
        image: Word::empty(),
        word: Word::empty(),
    }];
    for _ in 0..k_max {
        let mut next = Vec::new();
        for e in &frontier {
            for l in phi.alphabet().letters() {
                if e.word.last() == Some(l.inverse()) {
                    continue;
                }
                next.push(Entry {
                    image: e.image.mul(&phi.image_of_letter(l)),
                    word: e.word.mul(&Word::letter(l)),
                });
            }
        }
        out.extend(next.iter().map(|e| Entry {
            image: e.image.clone(),
            word: e.word.clone(),
        }));
        frontier = next;
    }
    out
}

fn lcp(x: &[Letter], y: &[Letter]) -> usize {
    x.iter().zip(y).take_while(|(a, b)| a == b).count()
}

/// Brute-force lower bound on the bounded cancellation constant over all
/// reduced pairs with `|u|, |v| ≤ k` for `k = 1..=k_max`.
///
/// The defect of `(u, v)` is the common prefix length of `φ(u⁻¹)` and `φ(v)`,
/// where `u⁻¹` and `v` start with different letters. Sorting all images
/// lexicographically, the maximum over such pairs is attained by two
/// neighbours, so each radius costs one linear scan.
pub fn bbt_estimate(phi: &Endomorphism, k_max: usize, window: usize) -> BbtEstimate {
    let radius = k_max.clamp(1, max_search_radius(phi.alphabet().rank()));
    let mut entries = enumerate_images(phi, radius);
    entries.sort_by(|a, b| a.image.letters().cmp(b.image.letters()));

    let mut per_radius = Vec::with_capacity(radius);
    let mut best: (usize, Word, Word) = (0, Word::empty(), Word::empty());
    for k in 1..=radius {
        let mut prev: Option<&Entry> = None;
        let mut best_k = best.clone();
        for e in entries.iter().filter(|e| e.word.len() <= k) {
            if let Some(p) = prev {
                if p.word.first() != e.word.first() {
                    let c = lcp(p.image.letters(), e.image.letters());
                    if c > best_k.0 {
                        best_k = (c, p.word.inverse(), e.word.clone());
                    }
                }
            }
            prev = Some(e);
        }
        best = best_k;
        per_radius.push(best.0);
    }

    let reference = if radius > window { per_radius[radius - 1 - window] } else { 0 };
    BbtEstimate {
        lower: best.0,
        witness_u: best.1,
        witness_v: best.2,
        search_radius: radius,
        stabilized: best.0 == reference,
        window,
        per_radius,
    }
}

/// `r` in `φ(w) = g · core · g⁻¹` for a cyclically reduced `w`.
pub fn almost_cyclic_r(phi: &Endomorphism, w: &Word) -> Result<usize> {
    if w.is_empty() || !w.is_cyclically_reduced() {
        return Err(Error::InvalidMorphism(format!("{w:?} is not cyclically reduced")));
    }
    Ok(phi.apply(w).cyclic_reduce().r())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::{Alphabet, Automorphism};

    fn endo(rules: &str) -> Endomorphism {
        Endomorphism::parse_rules(rules).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn naive_max_defect(phi: &Endomorphism, k: usize) -> usize {
        let al = phi.alphabet();
        let words: Vec<Word> = (1..=k).flat_map(|n| al.reduced_words(n)).collect();
        let mut best = 0;
        for u in &words {
            for v in &words {
                if u.is_reduced_product(v) {
                    best = best.max(defect(phi, u, v).unwrap());
                }
            }
        }
        best
    }

    #[test]
    fn defect_examples() {
        let id = Endomorphism::identity(Alphabet::new(2).unwrap());
        assert_eq!(defect(&id, &w("ab"), &w("a")).unwrap(), 0);
        let t = endo("a:ab,b:b");
        assert_eq!(defect(&t, &w("a"), &w("B")).unwrap(), 1);
        assert_eq!(defect(&t, &w("a"), &w("a")).unwrap(), 0);
        assert!(defect(&t, &w("a"), &w("A")).is_err());
    }

    #[test]
    fn estimate_examples() {
        let id = Endomorphism::identity(Alphabet::new(2).unwrap());
        let e = bbt_estimate(&id, 4, 3);
        assert_eq!((e.lower, e.stabilized), (0, true));

        let e = bbt_estimate(&endo("a:ab,b:b"), 8, 3);
        assert_eq!((e.lower, e.stabilized), (1, true));
        let t = endo("a:ab,b:b");
        assert_eq!(defect(&t, &e.witness_u, &e.witness_v).unwrap(), 1);

        let inner = Automorphism::inner(Alphabet::new(2).unwrap(), &w("b")).unwrap();
        let e = bbt_estimate(inner.forward(), 6, 3);
        assert_eq!(e.lower, naive_max_defect(inner.forward(), 4));
        assert_eq!(e.lower, 1);
        assert_eq!(defect(inner.forward(), &w("b"), &w("a")).unwrap(), 1);
        assert_eq!(defect(inner.forward(), &e.witness_u, &e.witness_v).unwrap(), 1);
    }

    #[test]
    fn sorted_scan_matches_naive_enumeration() {
        for rules in ["a:ab,b:b", "a:ba,b:a", "a:aab,b:ab", "a:bAB,b:bab", "a:Bab,b:b"] {
            let phi = endo(rules);
            let e = bbt_estimate(&phi, 4, 1);
            for k in 1..=4 {
                assert_eq!(e.per_radius[k - 1], naive_max_defect(&phi, k), "{rules} k={k}");
            }
            assert_eq!(defect(&phi, &e.witness_u, &e.witness_v).unwrap(), e.lower);
        }
    }

    #[test]
    fn per_radius_is_monotone() {
        let e = bbt_estimate(&endo("a:aba,b:ab"), 7, 3);
        assert!(e.per_radius.windows(2).all(|p| p[0] <= p[1]));
        assert_eq!(e.per_radius.len(), 7);
    }

    #[test]
    fn radius_is_clamped_to_budget() {
        let e = bbt_estimate(&endo("a:ab,b:b"), 40, 3);
        assert_eq!(e.search_radius, max_search_radius(2));
        assert!(max_search_radius(2) >= 8);
    }

    #[test]
    fn almost_cyclic_examples() {
        let id = Endomorphism::identity(Alphabet::new(2).unwrap());
        assert_eq!(almost_cyclic_r(&id, &w("ab")).unwrap(), 0);
        assert_eq!(almost_cyclic_r(&endo("a:ab,b:a"), &w("ab")).unwrap(), 0);
        let inner = Automorphism::inner(Alphabet::new(2).unwrap(), &w("b")).unwrap();
        assert_eq!(almost_cyclic_r(inner.forward(), &w("a")).unwrap(), 1);
        assert!(almost_cyclic_r(&id, &w("abA")).is_err());
    }
}
