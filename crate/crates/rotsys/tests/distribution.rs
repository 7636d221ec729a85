//! Agreement between the direct rotation-system sampler and the exact
//! enumeration oracle, measured in total variation over face counts.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rotsys::enumeration::{exact_face_stats, DEFAULT_BUDGET};
use rotsys::generators::{bouquet, complete_graph, dipole};
use rotsys::multigraph::MultiGraph;
use rotsys::rotation::RotationSystem;

fn face_tv(g: &MultiGraph, draws: usize, seed: u64) -> f64 {
    let exact = exact_face_stats(g, DEFAULT_BUDGET).unwrap();
    let total = exact.total_embeddings.to_f64().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for _ in 0..draws {
        let rot = RotationSystem::uniform_random(g, &mut rng);
        *counts.entry(rot.trace_faces(g).face_count).or_insert(0) += 1;
    }
    let mut tv = 0.0;
    for (&f, &c) in &exact.face_distribution {
        let p = c as f64 / total;
        let q = counts.get(&f).copied().unwrap_or(0) as f64 / draws as f64;
        tv += (p - q).abs();
    }
    for (&f, &c) in &counts {
        if !exact.face_distribution.contains_key(&f) {
            tv += c as f64 / draws as f64;
        }
    }
    tv / 2.0
}

#[test]
fn uniform_sampler_matches_exact_face_distribution() {
    for (name, g) in [
        ("dipole(4)", dipole(4).unwrap()),
        ("bouquet(2)", bouquet(2).unwrap()),
        ("K4", complete_graph(4).unwrap()),
    ] {
        let tv = face_tv(&g, 100_000, 0x5EED_F0CE);
        assert!(tv < 0.02, "{name}: TV {tv} >= 0.02");
    }
}
