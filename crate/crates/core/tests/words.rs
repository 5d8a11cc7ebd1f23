use lamina::{Alphabet, BoundaryPoint, CyclicWord, Endomorphism, Letter, Sign, Word};
use proptest::prelude::*;

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..4usize, 0..=max_len).prop_map(|v| Word::reduce(v.into_iter().map(Letter::from_index)))
}

fn nonempty_word(max_len: usize) -> impl Strategy<Value = Word> {
    word(max_len).prop_filter("nonempty", |w| !w.is_empty())
}

/// Reduction by repeated rewriting, independent of the stack implementation.
fn rewrite(mut s: Vec<Letter>) -> Vec<Letter> {
    while let Some(i) = s.windows(2).position(|p| p[0] == p[1].inverse()) {
        s.drain(i..i + 2);
    }
    s
}

#[test]
fn reduce_is_idempotent_up_to_length_12() {
    for len in 0..=12u32 {
        for code in 0..4usize.pow(len) {
            let seq: Vec<Letter> = (0..len)
                .map(|i| Letter::from_index(code / 4usize.pow(i) % 4))
                .collect();
            let once = Word::reduce(seq.iter().copied());
            assert_eq!(Word::reduce(once.letters().iter().copied()), once);
            if len <= 8 {
                assert_eq!(once.letters(), rewrite(seq).as_slice());
            }
        }
    }
}

#[test]
fn cyclic_reduce_reconstructs_up_to_length_10() {
    let al = Alphabet::new(2).unwrap();
    for len in 0..=10 {
        for w in al.reduced_words(len) {
            let c = w.cyclic_reduce();
            assert!(c.core.is_cyclically_reduced());
            assert_eq!(c.conjugator.mul(&c.core).mul(&c.conjugator.inverse()), w);
            assert_eq!(c.core.len() + 2 * c.r(), w.len());
        }
    }
}

proptest! {
    #[test]
    fn inversion_reverses_products(u in word(12), v in word(12)) {
        prop_assert_eq!(u.mul(&v).inverse(), v.inverse().mul(&u.inverse()));
        prop_assert_eq!(u.mul(&u.inverse()), Word::empty());
    }

    #[test]
    fn multiplication_is_associative(u in word(8), v in word(8), x in word(8)) {
        prop_assert_eq!(u.mul(&v).mul(&x), u.mul(&v.mul(&x)));
    }

    #[test]
    fn concat_counts_cancellation(u in word(10), v in word(10)) {
        let (p, c) = u.concat(&v);
        prop_assert_eq!(p.len(), u.len() + v.len() - 2 * c);
        let naive = rewrite(u.letters().iter().chain(v.letters()).copied().collect());
        prop_assert_eq!(p.letters(), naive.as_slice());
    }

    #[test]
    fn apply_respects_inversion(w in word(10), a in nonempty_word(4), b in nonempty_word(4)) {
        let phi = Endomorphism::new(Alphabet::new(2).unwrap(), vec![a, b]).unwrap();
        prop_assert_eq!(phi.apply(&w.inverse()), phi.apply(&w).inverse());
    }

    #[test]
    fn infinity_word_is_periodic(w in nonempty_word(6)) {
        let x = BoundaryPoint::infinity_word(&w, Sign::Plus).unwrap();
        let cube = w.pow(3);
        let known = cube.len() - w.cyclic_reduce().r();
        prop_assert_eq!(x.head(known), cube.prefix(known));
        let y = BoundaryPoint::infinity_word(&w, Sign::Minus).unwrap();
        prop_assert_eq!(y, BoundaryPoint::infinity_word(&w.inverse(), Sign::Plus).unwrap());
    }

    #[test]
    fn cyclic_words_ignore_rotation(w in nonempty_word(10), k in 0..10usize) {
        let core = w.cyclic_reduce().core;
        let c = CyclicWord::new(&core).unwrap();
        prop_assert_eq!(CyclicWord::new(&core.rotate(k)).unwrap(), c.clone());
        prop_assert_eq!(CyclicWord::new(&w).unwrap(), c.clone());
        prop_assert!(c.same_up_to_inversion(&CyclicWord::new(&w.inverse()).unwrap()));
    }

    #[test]
    fn shortlex_is_a_total_order(u in word(6), v in word(6)) {
        prop_assert_eq!(u.cmp(&v), v.cmp(&u).reverse());
        prop_assert_eq!(u == v, u.cmp(&v).is_eq());
        prop_assert_eq!(u.to_string().parse::<Word>().unwrap(), u);
    }
}
