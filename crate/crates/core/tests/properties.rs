mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spacking::canon::canonical_form;
use spacking::constructive::{
    color_1_2x6, color_3irr_112, lift_subdivision, Construction, Mode, ReplayEntry,
};
use spacking::enumerate::enumerate_cubic_up_to;
use spacking::graph6::{parse_graph6, write_graph6};
use spacking::solver::{decide, decide_with, is_valid_total, Outcome, SolverOptions};
use spacking::Graph;

fn cubic() -> &'static [Graph] {
    static CUBIC: OnceLock<Vec<Graph>> = OnceLock::new();
    CUBIC.get_or_init(|| enumerate_cubic_up_to(12).unwrap().into_values().flatten().collect())
}

fn subcubic(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    common::random_subcubic(&mut rng, n, 2 * n)
}

fn irregular(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    common::random_3_irregular(&mut rng, n)
}

fn sorted_neighbors(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|v| {
            let mut ns = g.neighbors(v).to_vec();
            ns.sort_unstable();
            ns
        })
        .collect()
}

/// Replays `log` and hands each paint the coloring just before it.
fn replay(n: usize, log: &[ReplayEntry], mut f: impl FnMut(&[Option<usize>], &ReplayEntry)) {
    let mut state = vec![None; n];
    for e in log {
        if e.slot.is_some() {
            f(&state, e);
        }
        state[e.vertex] = e.slot;
    }
}

fn final_state(n: usize, out: &Construction) -> Vec<Option<usize>> {
    let mut state = vec![None; n];
    for e in &out.replay {
        state[e.vertex] = e.slot;
    }
    state
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_roundtrip(seed in any::<u64>(), n in 0usize..=70) {
        let g = subcubic(seed, n);
        let back = parse_graph6(write_graph6(&g).as_bytes()).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(sorted_neighbors(&back), sorted_neighbors(&g));
    }

    #[test]
    fn dominance(idx in any::<prop::sample::Index>(), i in 0usize..34, j in 0usize..34) {
        let g = idx.get(cubic());
        let seqs = common::small_sequences();
        let (weak, strong) = (&seqs[i], &seqs[j]);
        if weak.dominates(strong) && decide(g, strong).outcome.is_sat() {
            prop_assert!(decide(g, weak).outcome.is_sat(), "({}) vs ({}) on {}", weak, strong, write_graph6(g));
        }
    }

    #[test]
    fn lift_is_valid(seed in any::<u64>(), n in 1usize..=12, i in 0usize..34) {
        let g = subcubic(seed, n);
        let s = &common::small_sequences()[i];
        if let Outcome::Sat(c) = decide(&g, s).outcome {
            let out = lift_subdivision(&g, s, &c).unwrap();
            prop_assert!(is_valid_total(&g.subdivide(), &out.sequence, out.main()));
        }
    }

    #[test]
    fn canonical_form_is_invariant(idx in any::<prop::sample::Index>(), perm_seed in any::<u64>()) {
        let g = idx.get(cubic());
        let mut p: Vec<usize> = (0..g.n()).collect();
        rand::seq::SliceRandom::shuffle(&mut p[..], &mut ChaCha8Rng::seed_from_u64(perm_seed));
        prop_assert_eq!(canonical_form(&g.relabel(&p)).unwrap(), canonical_form(g).unwrap());
    }

    #[test]
    fn matches_naive_oracle(seed in any::<u64>(), n in 1usize..=7, i in 0usize..34) {
        let g = subcubic(seed, n);
        let s = &common::small_sequences()[i];
        let expected = common::naive_colorable(&g, s);
        for symmetry_breaking in [true, false] {
            let opts = SolverOptions { symmetry_breaking, ..SolverOptions::default() };
            match decide_with(&g, s, &opts).outcome {
                Outcome::Sat(c) => {
                    prop_assert!(expected);
                    prop_assert!(is_valid_total(&g, s, &c));
                }
                Outcome::Unsat => prop_assert!(!expected),
                Outcome::Unknown => prop_assert!(false, "unbounded search returned unknown"),
            }
        }
    }

    /// A vertex painted with a color 2 on a level already sees color 1.
    #[test]
    fn level_twos_see_a_one(idx in any::<prop::sample::Index>()) {
        let g = idx.get(cubic());
        let out = color_1_2x6(g, Mode::Strict).unwrap();
        replay(g.n(), &out.replay, |state, e| {
            if e.rule == "level-2" {
                assert!(g.neighbors(e.vertex).iter().any(|&w| state[w] == Some(0)), "{}", write_graph6(g));
            }
        });
    }

    /// Color 2 goes to degree-3 vertices, except at the root edge.
    #[test]
    fn irregular_112_twos(seed in any::<u64>(), n in 2usize..=40) {
        let g = irregular(seed, n);
        let out = color_3irr_112(&g, Mode::Strict).unwrap();
        prop_assert!(is_valid_total(&g, &out.sequence, out.main()));
        let last = final_state(g.n(), &out);
        prop_assert_eq!(last.as_slice(), out.main().slots());
        for e in out.replay.iter().filter(|e| e.slot == Some(2)) {
            prop_assert!(e.rule == "L0-2" || g.degree(e.vertex) == 3, "{} at {}", e.rule, e.vertex);
        }
    }
}
