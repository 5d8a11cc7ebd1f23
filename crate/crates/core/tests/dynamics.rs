use lamina::action::{act, compare_composition, composition_horizon, ActionPlan};
use lamina::cancellation::{almost_cyclic_r, bbt_estimate, default_radius, defect, DEFAULT_WINDOW};
use lamina::generate::{from_substitution, rational, rational_frontier};
use lamina::workbench::{random_automorphism, random_cyclic_word, random_word, repro_fixedpoint};
use lamina::{Alphabet, Automorphism, Endomorphism, Letter, Word};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rank2() -> Alphabet {
    Alphabet::new(2).unwrap()
}

fn sample(seed: u64, max_moves: usize) -> (Automorphism, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let moves = rng.gen_range(1..=max_moves);
    let (alpha, _) = random_automorphism(&mut rng, rank2(), moves).unwrap();
    (alpha, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn defect_is_symmetric(seed in any::<u64>()) {
        let (alpha, mut rng) = sample(seed, 6);
        for _ in 0..20 {
            let (u, v) = (random_word(&mut rng, rank2(), 6), random_word(&mut rng, rank2(), 6));
            if u.is_reduced_product(&v) {
                let phi = alpha.forward();
                prop_assert_eq!(defect(phi, &u, &v).unwrap(), defect(phi, &v.inverse(), &u.inverse()).unwrap());
            }
        }
    }

    #[test]
    fn stabilized_estimate_bounds_longer_pairs(seed in any::<u64>()) {
        let (alpha, mut rng) = sample(seed, 6);
        let phi = alpha.forward();
        let est = bbt_estimate(phi, default_radius(phi), DEFAULT_WINDOW);
        prop_assume!(est.stabilized);
        prop_assert_eq!(defect(phi, &est.witness_u, &est.witness_v).unwrap(), est.lower);
        for _ in 0..200 {
            let len = rng.gen_range(1..=2 * est.search_radius);
            let (u, v) = (random_word(&mut rng, rank2(), len), random_word(&mut rng, rank2(), len));
            if u.is_reduced_product(&v) {
                prop_assert!(defect(phi, &u, &v).unwrap() <= est.lower);
            }
        }
        for len in 1..=8 {
            let w = random_cyclic_word(&mut rng, rank2(), len);
            prop_assert!(almost_cyclic_r(phi, &w).unwrap() <= est.lower);
        }
    }

    #[test]
    fn action_is_rationally_equivariant(seed in any::<u64>()) {
        let (alpha, mut rng) = sample(seed, 6);
        let plan = ActionPlan::new(&alpha);
        let m = plan.required_horizon(4);
        for _ in 0..3 {
            let len = rng.gen_range(1..=6);
            let w = random_cyclic_word(&mut rng, rank2(), len);
            let image = plan.act(&rational(rank2(), &w, m).unwrap(), 4).unwrap();
            prop_assert!(image.is_laminary_at());
            prop_assert_eq!(image, rational(rank2(), &alpha.apply(&w), 4).unwrap());
        }
    }

    #[test]
    fn inner_automorphisms_act_trivially(g in prop::collection::vec(0..4usize, 1..5), seed in any::<u64>()) {
        let g = Word::reduce(g.into_iter().map(Letter::from_index));
        prop_assume!(!g.is_empty());
        let inner = Automorphism::inner(rank2(), &g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let len = rng.gen_range(1..=5);
        let w = random_cyclic_word(&mut rng, rank2(), len);
        let plan = ActionPlan::new(&inner);
        let lang = rational(rank2(), &w, plan.required_horizon(4)).unwrap();
        prop_assert_eq!(plan.act(&lang, 4).unwrap(), lang.truncate(4).unwrap());
    }

    #[test]
    fn action_round_trips(seed in any::<u64>()) {
        let (alpha, _) = sample(seed, 6);
        let back = ActionPlan::new(&alpha.inverse());
        let there = ActionPlan::new(&alpha);
        let middle = back.required_horizon(4);
        let source = rational(rank2(), &Word::parse("abb").unwrap(), there.required_horizon(middle)).unwrap();
        let image = there.act(&source, middle).unwrap();
        prop_assert_eq!(back.act(&image, 4).unwrap(), source.truncate(4).unwrap());
    }

    #[test]
    fn deeper_chopping_changes_nothing(seed in any::<u64>()) {
        let (alpha, _) = sample(seed, 6);
        let plan = ActionPlan::new(&alpha);
        let doubled = ActionPlan::with_chop_budget(&alpha, 2 * plan.chop_budget());
        let lang = rational(rank2(), &Word::parse("aBab").unwrap(), doubled.required_horizon(4)).unwrap();
        prop_assert_eq!(plan.act(&lang, 4).unwrap(), doubled.act(&lang, 4).unwrap());
    }

    #[test]
    fn composition_law(seed in any::<u64>()) {
        let (alpha, mut rng) = sample(seed, 6);
        let moves = rng.gen_range(1..=6);
        let (beta, _) = random_automorphism(&mut rng, rank2(), moves).unwrap();
        let plans = (
            ActionPlan::new(&alpha),
            ActionPlan::new(&beta),
            ActionPlan::new(&alpha.compose(&beta).unwrap()),
        );
        let h = composition_horizon(&plans.0, &plans.1, &plans.2, 4);
        let source = rational_frontier(rank2(), &Word::parse("abAbb").unwrap(), h).unwrap();
        let check = compare_composition(&plans.0, &plans.1, &plans.2, &source, 4).unwrap();
        prop_assert!(check.agrees());
    }
}

#[test]
fn acting_on_a_minimal_lamination() {
    // the Fibonacci substitution is invertible with inverse a ↦ b, b ↦ Ba,
    // so it acts on its own lamination by a shift of the leaves
    let fib = Endomorphism::parse_rules("a:ab,b:a").unwrap();
    let alpha = Automorphism::new(fib.clone(), Endomorphism::parse_rules("a:b,b:Ba").unwrap()).unwrap();
    let plan = ActionPlan::new(&alpha);
    let lang = from_substitution(&fib, Letter::generator(0), plan.required_horizon(5)).unwrap();
    let image = act(&alpha, &lang, 5).unwrap();
    assert_eq!(image, lang.truncate(5).unwrap());
}

#[test]
fn fixedpoint_reports_are_seed_stable() {
    let a = repro_fixedpoint(4, 6, 17).unwrap();
    assert!(a.passed());
    assert_eq!(a.to_json(), repro_fixedpoint(4, 6, 17).unwrap().to_json());
}
