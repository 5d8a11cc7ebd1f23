//! Reduced-word arithmetic in a free group of finite rank.
//!
//! Words use the ASCII encoding where a lowercase letter is a generator and
//! the matching uppercase letter its inverse, so `"aB"` is `a·b⁻¹`.

mod alphabet;
mod boundary;
mod cyclic;
mod morphism;
mod word;

pub use alphabet::{Alphabet, Letter};
pub use boundary::{BoundaryPoint, Sign};
pub use cyclic::CyclicWord;
pub use morphism::{Automorphism, Endomorphism};
pub use word::{CyclicReduction, Word};
