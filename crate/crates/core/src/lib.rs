//! Laminations on free groups represented by horizon-truncated laminary
//! languages.
//!
//! A lamination is handled through its language of finite factors, cut off
//! at some horizon `n` ([`FactorLanguage`]). Generators in [`generate`]
//! produce exact truncations for rational laminations, eventually periodic
//! leaves and substitutive words; [`action`] transports languages along
//! automorphisms; [`cancellation`] estimates Cooper's bounded cancellation
//! constant; [`workbench`] holds the reproducible experiments.

pub mod action;
pub mod cancellation;
mod error;
pub mod free;
pub mod generate;
pub mod language;
pub mod workbench;

pub use error::{Error, Result};
pub use free::{Alphabet, Automorphism, BoundaryPoint, CyclicWord, Endomorphism, Letter, Sign, Word};
pub use generate::BiinfiniteWord;
pub use language::{Distance, FactorLanguage, Frontier};
