//! Fixtures shared by the benchmarks.

use lamina::{Alphabet, Automorphism, Endomorphism, Letter, Word};

pub fn rank2() -> Alphabet {
    Alphabet::new(2).expect("rank 2 is valid")
}

pub fn fibonacci() -> (Endomorphism, Letter) {
    (
        Endomorphism::parse_rules("a:ab,b:a").expect("valid rules"),
        Letter::generator(0),
    )
}

/// `a ↦ ab, b ↦ a` with its inverse `a ↦ b, b ↦ Ba`.
pub fn fibonacci_automorphism() -> Automorphism {
    Automorphism::new(
        fibonacci().0,
        Endomorphism::parse_rules("a:b,b:Ba").expect("valid rules"),
    )
    .expect("inverse pair")
}

/// A longer product of Nielsen moves: `a ↦ aabab, b ↦ aab`.
pub fn long_automorphism() -> Automorphism {
    Automorphism::new(
        Endomorphism::parse_rules("a:aabab,b:aab").expect("valid rules"),
        Endomorphism::parse_rules("a:bAb,b:BaBBa").expect("valid rules"),
    )
    .expect("inverse pair")
}

pub fn word(s: &str) -> Word {
    Word::parse(s).expect("valid word")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_automorphisms() {
        fibonacci_automorphism();
        long_automorphism();
    }
}
