//! The action of `Out(F_N)` on laminary languages.
//!
//! `α̂(𝓛) = α(𝓛)†_C` for a bounded cancellation constant `C`. Since
//! `𝓛(L(𝓛′)) = ∩_k 𝓛′†_k`, any chop depth past the point where the chopped
//! images stop changing gives the same answer, so the exact constant is never
//! needed: the estimate only sizes the source horizon and the chop budget.

use std::collections::HashSet;

use crate::cancellation::{bbt_estimate, default_radius, BbtEstimate, DEFAULT_WINDOW};
use crate::error::{Error, Result};
use crate::free::{Automorphism, Word};
use crate::language::{insert_windows, FactorLanguage, Frontier};

/// `|α|_𝒜`.
pub fn norm(alpha: &Automorphism) -> usize {
    alpha.norm()
}

/// An automorphism prepared for acting on languages.
#[derive(Debug, Clone)]
pub struct ActionPlan {
    automorphism: Automorphism,
    estimate: Option<BbtEstimate>,
    chop_budget: usize,
}

impl ActionPlan {
    /// Estimates the cancellation constant and sets the chop depth to
    /// `C₀ = lower + (lower + 2)`.
    pub fn new(alpha: &Automorphism) -> Self {
        let estimate = bbt_estimate(alpha.forward(), default_radius(alpha.forward()), DEFAULT_WINDOW);
        let chop_budget = 2 * estimate.lower + 2;
        ActionPlan {
            automorphism: alpha.clone(),
            estimate: Some(estimate),
            chop_budget,
        }
    }

    /// Uses `chop_budget` as `C₀` without running an estimate.
    pub fn with_chop_budget(alpha: &Automorphism, chop_budget: usize) -> Self {
        ActionPlan {
            automorphism: alpha.clone(),
            estimate: None,
            chop_budget,
        }
    }

    pub fn automorphism(&self) -> &Automorphism {
        &self.automorphism
    }

    pub fn estimate(&self) -> Option<&BbtEstimate> {
        self.estimate.as_ref()
    }

    pub fn chop_budget(&self) -> usize {
        self.chop_budget
    }

    /// Smallest source horizon accepted by [`ActionPlan::act`] for target `n`:
    /// `|α⁻¹|·(n + 2C₀) + 2`.
    pub fn required_horizon(&self, n: usize) -> usize {
        self.automorphism.conorm() * (n + 2 * self.chop_budget) + 2
    }

    /// Exact `𝓛_n` of the image lamination.
    ///
    /// The result is computed from the full source horizon `m` and again from
    /// `m − 2`; the two must agree.
    pub fn act(&self, lang: &FactorLanguage, n: usize) -> Result<FactorLanguage> {
        self.automorphism.alphabet().check_same(&lang.alphabet())?;
        Ok(self.act_frontier(&Frontier::of(lang)?, n)?.language())
    }

    /// [`ActionPlan::act`] on top levels only.
    pub fn act_frontier(&self, source: &Frontier, n: usize) -> Result<Frontier> {
        self.automorphism.alphabet().check_same(&source.alphabet())?;
        if n == 0 {
            return Err(Error::ZeroHorizon);
        }
        let m = source.horizon();
        let needed = self.required_horizon(n);
        if m < needed {
            return Err(Error::HorizonTooSmall { needed, available: m });
        }
        let deep = self.image_core(source, n)?;
        let shallow = self.image_core(&source.truncate(m - 2)?, n)?;
        if deep != shallow {
            return Err(Error::InconsistentRecomputation {
                shallow: m - 2,
                deep: m,
            });
        }
        Ok(deep)
    }

    /// Chops the images of the source words at depth `C₀` and checks that
    /// depth `C₀ − 1` gives the same length-`n` factors.
    ///
    /// Chopped images shrink as the depth grows and equal the image core from
    /// the cancellation constant on, but two consecutive depths below that
    /// constant can already agree, so the scan does not start at depth 0.
    fn image_core(&self, source: &Frontier, n: usize) -> Result<Frontier> {
        let images: Vec<Word> = source
            .words()
            .iter()
            .map(|w| self.automorphism.apply(w))
            .collect();
        let chopped = |k: usize| {
            let mut level = HashSet::new();
            for image in &images {
                if image.len() >= 2 * k + n {
                    insert_windows(&mut level, &image.letters()[k..image.len() - k], n);
                }
            }
            level
        };
        let depth = self.chop_budget;
        let core = chopped(depth);
        if core.is_empty() || (depth > 0 && chopped(depth - 1) != core) {
            return Err(Error::NoStabilization(depth));
        }
        Ok(Frontier::from_set(source.alphabet(), n, core))
    }
}

/// `α̂(𝓛)` truncated at `n`, estimating the chop budget from scratch.
pub fn act(alpha: &Automorphism, lang: &FactorLanguage, n: usize) -> Result<FactorLanguage> {
    ActionPlan::new(alpha).act(lang, n)
}

/// Both sides of the composition law for prepared plans.
#[derive(Debug, Clone)]
pub struct CompositionCheck {
    pub composite: FactorLanguage,
    pub chained: FactorLanguage,
    pub intermediate_horizon: usize,
}

impl CompositionCheck {
    pub fn agrees(&self) -> bool {
        self.composite == self.chained
    }
}

/// Source horizon needed to check `(αβ)^ = α̂ ∘ β̂` at target `n`.
pub fn composition_horizon(alpha: &ActionPlan, beta: &ActionPlan, composite: &ActionPlan, n: usize) -> usize {
    let intermediate = alpha.required_horizon(n);
    beta.required_horizon(intermediate).max(composite.required_horizon(n))
}

/// Computes `act(αβ, L, n)` and `act(α, act(β, L, n′), n)` with `n′` the
/// horizon `α` needs for target `n`. Each side reads the source at the
/// horizon it requires.
pub fn compare_composition(
    alpha: &ActionPlan,
    beta: &ActionPlan,
    composite: &ActionPlan,
    source: &Frontier,
    n: usize,
) -> Result<CompositionCheck> {
    let needed = composition_horizon(alpha, beta, composite, n);
    if source.horizon() < needed {
        return Err(Error::HorizonTooSmall {
            needed,
            available: source.horizon(),
        });
    }
    let intermediate_horizon = alpha.required_horizon(n);
    let composite_image = composite.act_frontier(&source.truncate(composite.required_horizon(n))?, n)?;
    let inner_source = source.truncate(beta.required_horizon(intermediate_horizon))?;
    let inner = beta.act_frontier(&inner_source, intermediate_horizon)?;
    let chained = alpha.act_frontier(&inner, n)?;
    Ok(CompositionCheck {
        composite: composite_image.language(),
        chained: chained.language(),
        intermediate_horizon,
    })
}

/// True iff `act(αβ, L, n) = act(α, act(β, L, n′), n)`.
pub fn verify_composition(
    alpha: &Automorphism,
    beta: &Automorphism,
    lang: &FactorLanguage,
    n: usize,
) -> Result<bool> {
    let composite = alpha.compose(beta)?;
    let check = compare_composition(
        &ActionPlan::new(alpha),
        &ActionPlan::new(beta),
        &ActionPlan::new(&composite),
        &Frontier::of(lang)?,
        n,
    )?;
    Ok(check.agrees())
}
