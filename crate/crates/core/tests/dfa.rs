mod common;

use common::brute_force_min_transitions;
use modex::dfa::{
    brute_force_min_dfa, build_apta, complete_dfa, compute_conflicts, consistent, find_min_dfa,
    DfaError, DfaOptions, Objective, Sample,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn options(redundant: bool, objective: Objective, seed: u64) -> DfaOptions {
    DfaOptions {
        redundant,
        objective,
        seed,
        ..DfaOptions::default()
    }
}

#[test]
fn minimal_state_count_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut beyond = 0;
    for i in 0..200 {
        let s = Sample::random(2, 8, 5, &mut rng);
        let plain = find_min_dfa(&s, &options(false, Objective::States, i)).unwrap();
        let red = find_min_dfa(&s, &options(true, Objective::States, i)).unwrap();
        assert_eq!(plain.dfa.num_states(), red.dfa.num_states(), "sample {i}");
        for learned in [&plain, &red] {
            assert!(consistent(&complete_dfa(&learned.dfa), &s), "sample {i}");
        }
        match brute_force_min_dfa(&s, 4) {
            Ok(k) => assert_eq!(plain.dfa.num_states(), k, "sample {i}"),
            Err(DfaError::NotFoundWithin(4)) => {
                beyond += 1;
                assert!(plain.dfa.num_states() > 4, "sample {i}");
            }
            Err(e) => panic!("{e}"),
        }
    }
    assert!(beyond < 20, "{beyond} samples beyond the oracle's range");
}

#[test]
fn conflicting_states_get_different_colors() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for i in 0..100 {
        let s = Sample::random(2, 8, 5, &mut rng);
        let apta = build_apta(&s);
        let conflicts = compute_conflicts(&apta);
        let learned = find_min_dfa(&s, &options(i % 2 == 0, Objective::States, i)).unwrap();
        for (x, y) in conflicts.pairs() {
            assert_ne!(learned.coloring[x], learned.coloring[y], "sample {i}: {x} vs {y}");
        }
    }
}

#[test]
fn transition_objective_is_minimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut checked = 0;
    for i in 0..150 {
        let s = Sample::random(2, 6, 4, &mut rng);
        let learned = find_min_dfa(&s, &options(true, Objective::Transitions, i)).unwrap();
        let k = learned.dfa.num_states();
        if k > 3 {
            continue;
        }
        checked += 1;
        assert_eq!(Some(learned.dfa.num_transitions()), brute_force_min_transitions(&s, k), "sample {i}");
        assert!(consistent(&complete_dfa(&learned.dfa), &s));
    }
    assert!(checked > 100, "only {checked} samples within range");
}

#[test]
fn example_is_minimal_with_and_without_redundancy() {
    let s = Sample::example();
    let k = brute_force_min_dfa(&s, 4).unwrap();
    for redundant in [false, true] {
        assert_eq!(find_min_dfa(&s, &options(redundant, Objective::States, 0)).unwrap().dfa.num_states(), k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn learned_automata_are_consistent(seed in any::<u64>(), symbols in 1usize..=3, redundant in any::<bool>()) {
        let s = Sample::random(symbols, 8, 5, &mut ChaCha8Rng::seed_from_u64(seed));
        let learned = find_min_dfa(&s, &options(redundant, Objective::States, seed)).unwrap();
        prop_assert!(consistent(&complete_dfa(&learned.dfa), &s));
        prop_assert!(learned.dfa.num_states() >= learned.clique.len());
    }
}
