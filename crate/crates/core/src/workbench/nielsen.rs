use rand::Rng;

use crate::error::Result;
use crate::free::{Alphabet, Automorphism, Endomorphism, Letter, Word};

/// An elementary automorphism acting on the generators `x_i`, `x_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NielsenMove {
    /// `x_i ↦ x_i x_j`
    RightMultiply { i: usize, j: usize },
    /// `x_i ↦ x_j x_i`
    LeftMultiply { i: usize, j: usize },
    /// `x_i ↦ x_i⁻¹`
    Invert { i: usize },
    /// `x_i ↔ x_j`
    Swap { i: usize, j: usize },
}

impl NielsenMove {
    fn images(alphabet: Alphabet, f: impl Fn(usize) -> Vec<Letter>) -> Endomorphism {
        let images = (0..alphabet.rank()).map(|k| Word::reduce(f(k))).collect();
        Endomorphism::new(alphabet, images).expect("images stay within the alphabet")
    }

    /// The move and its inverse, as a verified automorphism.
    pub fn automorphism(self, alphabet: Alphabet) -> Result<Automorphism> {
        let g = Letter::generator;
        let (forward, backward) = match self {
            NielsenMove::RightMultiply { i, j } => (
                Self::images(alphabet, |k| if k == i { vec![g(i), g(j)] } else { vec![g(k)] }),
                Self::images(alphabet, |k| if k == i { vec![g(i), g(j).inverse()] } else { vec![g(k)] }),
            ),
            NielsenMove::LeftMultiply { i, j } => (
                Self::images(alphabet, |k| if k == i { vec![g(j), g(i)] } else { vec![g(k)] }),
                Self::images(alphabet, |k| if k == i { vec![g(j).inverse(), g(i)] } else { vec![g(k)] }),
            ),
            NielsenMove::Invert { i } => {
                let inv = Self::images(alphabet, |k| if k == i { vec![g(i).inverse()] } else { vec![g(k)] });
                (inv.clone(), inv)
            }
            NielsenMove::Swap { i, j } => {
                let swap = Self::images(alphabet, |k| {
                    vec![g(if k == i { j } else if k == j { i } else { k })]
                });
                (swap.clone(), swap)
            }
        };
        Automorphism::new(forward, backward)
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, rank: usize) -> Self {
        assert!(rank >= 2, "Nielsen moves need two generators");
        let i = rng.gen_range(0..rank);
        let j = (i + rng.gen_range(1..rank)) % rank;
        match rng.gen_range(0..4) {
            0 => NielsenMove::RightMultiply { i, j },
            1 => NielsenMove::LeftMultiply { i, j },
            2 => NielsenMove::Invert { i },
            _ => NielsenMove::Swap { i, j },
        }
    }
}

/// Product of `len` random Nielsen moves; the inverse is the reversed
/// product of the inverse moves.
pub fn random_automorphism<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: Alphabet,
    len: usize,
) -> Result<(Automorphism, Vec<NielsenMove>)> {
    let mut alpha = Automorphism::identity(alphabet);
    let mut moves = Vec::with_capacity(len);
    for _ in 0..len {
        let m = NielsenMove::random(rng, alphabet.rank());
        alpha = alpha.compose(&m.automorphism(alphabet)?)?;
        moves.push(m);
    }
    // compose() tracks the inverse; re-verify the finished pair
    let alpha = Automorphism::new(alpha.forward().clone(), alpha.backward().clone())?;
    Ok((alpha, moves))
}

/// Uniformly random reduced word of exactly `len` letters.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: Alphabet, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter::from_index(rng.gen_range(0..alphabet.size()));
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    Word::reduce(letters)
}

/// Random cyclically reduced word of exactly `len ≥ 1` letters.
pub fn random_cyclic_word<R: Rng + ?Sized>(rng: &mut R, alphabet: Alphabet, len: usize) -> Word {
    loop {
        let w = random_word(rng, alphabet, len);
        if w.is_cyclically_reduced() {
            return w;
        }
    }
}
