//! Reproductions of the concrete propositions, Rauzy graphs and
//! convergence checks.

mod nielsen;
mod rauzy;
mod repro;

pub use nielsen::{random_automorphism, random_cyclic_word, random_word, NielsenMove};
pub use rauzy::{rauzy_export, RauzyGraph};
pub use repro::{
    converge_check, repro_fixedpoint, repro_limitset, repro_notdense, FixedPointReport,
    FixedPointSample, LanguageSource, LimitSetReport, LimitSetRow, NotDenseEntry, NotDenseReport,
    WordKind,
};
