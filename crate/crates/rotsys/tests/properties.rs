//! Property tests over randomly generated multigraphs.

use proptest::collection::vec;
use proptest::prelude::*;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rotsys::multigraph::MultiGraph;
use rotsys::process::{Sampler, Strategy as RunStrategy};
use rotsys::rotation::RotationSystem;

/// Entry lists over up to 6 vertices; loops and parallels allowed. The
/// filter keeps only lists covering every vertex, mirroring the
/// no-isolated-vertex construction rule.
fn arb_graph() -> impl Strategy<Value = MultiGraph> {
    (2usize..=6)
        .prop_flat_map(|n| {
            vec((1..=n, 1..=n, 1usize..=3), 1..=8)
                .prop_filter_map("all vertices must be covered", move |entries| {
                    MultiGraph::from_edge_list(n, &entries).ok()
                })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degrees_and_darts_are_consistent(g in arb_graph()) {
        let total: usize = (1..=g.vertex_count()).map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        let mu_total: usize = g.pairs().map(|(_, m)| m).sum();
        prop_assert_eq!(mu_total, g.edge_count());
        let mut seen = vec![false; g.dart_count()];
        for v in 1..=g.vertex_count() {
            for d in g.dart_range(v) {
                prop_assert!(!seen[d]);
                seen[d] = true;
            }
        }
        prop_assert!(seen.into_iter().all(|b| b));
    }

    #[test]
    fn construction_is_entry_order_independent(g in arb_graph(), seed in any::<u64>()) {
        let mut entries: Vec<(usize, usize, usize)> =
            g.pairs().map(|((u, v), m)| (u, v, m)).collect();
        // shuffle and split multiplicities; the graph must come out identical
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        use rand::seq::SliceRandom;
        let mut split = Vec::new();
        for &(u, v, m) in &entries {
            if m > 1 {
                split.push((v, u, 1));
                split.push((u, v, m - 1));
            } else {
                split.push((u, v, m));
            }
        }
        split.shuffle(&mut rng);
        entries.shuffle(&mut rng);
        let h1 = MultiGraph::from_edge_list(g.vertex_count(), &entries).unwrap();
        let h2 = MultiGraph::from_edge_list(g.vertex_count(), &split).unwrap();
        prop_assert_eq!(h1.to_text(), g.to_text());
        prop_assert_eq!(h1.edges(), g.edges());
        prop_assert_eq!(h2.edges(), g.edges());
    }

    #[test]
    fn text_format_round_trips(g in arb_graph()) {
        let h = MultiGraph::from_text(&g.to_text()).unwrap();
        prop_assert_eq!(h.edges(), g.edges());
        prop_assert_eq!(h.to_text(), g.to_text());
    }

    #[test]
    fn traced_faces_satisfy_euler(g in arb_graph(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rot = RotationSystem::uniform_random(&g, &mut rng);
        let census = rot.trace_faces(&g);
        // orbit partition covers every dart exactly once
        prop_assert_eq!(census.face_lengths.iter().sum::<usize>(), g.dart_count());
        prop_assert_eq!(census.face_lengths.len(), census.face_count);
        // genus_from_counts would have panicked on a non-integer genus;
        // check the summed Euler identity explicitly as well
        let c = g.components().len();
        let lhs = g.vertex_count() as i64 - g.edge_count() as i64 + census.face_count as i64;
        prop_assert_eq!(lhs, 2 * c as i64 - 2 * census.total_genus as i64);
    }

    #[test]
    fn structural_invariants_hold_on_every_run(g in arb_graph(), seed in any::<u64>()) {
        // walk count 2|E|-2k dropping by exactly two, dart bookkeeping and
        // closure sum = traced faces hold on arbitrary multigraphs; the
        // closable <= 2 mu witness is deliberately not asserted here (see
        // closable_witness_is_not_universal below)
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sampler = Sampler::new(&g);
        for strategy in RunStrategy::ALL {
            if let Err(v) = sampler.run_checked_structural(strategy, &mut rng) {
                return Err(TestCaseError::fail(format!(
                    "{} violated at step {}: {}",
                    strategy.as_str(),
                    v.step,
                    v.message
                )));
            }
        }
    }
}

/// On loop-heavy multigraphs the pairing can reach states where every
/// unprocessed pair has more closable faces than twice its remaining
/// multiplicity: two self-anchored walks (one per endpoint) merge into a
/// closed face, and such closures escape the anchored-walk pigeonhole. This
/// pins the smallest family found to exhibit it; structural invariants
/// still hold on the very same runs.
#[test]
fn closable_witness_is_not_universal() {
    let g = MultiGraph::from_edge_list(2, &[(1, 2, 9), (2, 2, 3)]).unwrap();
    let mut witness_failures = 0;
    for seed in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sampler = Sampler::new(&g);
        match sampler.run_checked(RunStrategy::Random, &mut rng) {
            Ok(()) => {}
            Err(v) => {
                assert!(
                    v.message.contains("closable <= 2 mu"),
                    "only the witness check may fail here, got: {}",
                    v.message
                );
                witness_failures += 1;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sampler
            .run_checked_structural(RunStrategy::Random, &mut rng)
            .expect("structural invariants are universal");
    }
    assert!(
        witness_failures > 0,
        "expected at least one witness failure on dipole(9) + 3 loops"
    );
}
