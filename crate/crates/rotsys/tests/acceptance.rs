//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measured values (`cargo test --test acceptance -- --nocapture`).

use num_traits::ToPrimitive;
use rotsys::analytics::{
    bound_corollary, bound_main, bound_simple, dipole_expected_faces, empirical_rotation_distribution,
    lower_bound_cycles, monte_carlo_expected_faces, rational, rational_str, tv_from_uniform,
};
use rotsys::cli::{run_capture, DEFAULT_SEED};
use rotsys::enumeration::{exact_face_stats, DEFAULT_BUDGET};
use rotsys::generators::{bouquet, complete_graph, cycle, dipole, dipole_chain, path, triangle_chain};
use rotsys::multigraph::MultiGraph;
use rotsys::process::{Sampler, Strategy};
use rotsys::rotation::rotation_count;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every graph the suite enumerates and instruments.
fn corpus() -> Vec<(String, MultiGraph)> {
    let mut graphs = Vec::new();
    for mu in 1..=6 {
        graphs.push((format!("dipole(mu={mu})"), dipole(mu).unwrap()));
    }
    for k in 1..=3 {
        for mu in 1..=3 {
            graphs.push((format!("dipole_chain(k={k},mu={mu})"), dipole_chain(k, mu).unwrap()));
        }
    }
    for k in 1..=2 {
        graphs.push((format!("triangle_chain(k={k})"), triangle_chain(k).unwrap()));
    }
    graphs.push(("K4".into(), complete_graph(4).unwrap()));
    graphs.push(("K5".into(), complete_graph(5).unwrap()));
    for loops in 1..=3 {
        graphs.push((format!("bouquet(loops={loops})"), bouquet(loops).unwrap()));
    }
    for n in 2..=8 {
        graphs.push((format!("path(n={n})"), path(n).unwrap()));
    }
    for n in 3..=8 {
        graphs.push((format!("cycle(n={n})"), cycle(n).unwrap()));
    }
    graphs
}

#[test]
fn criterion_1_dipole_closed_form() {
    let start = std::time::Instant::now();
    for mu in 1..=6u64 {
        let out = run_capture(&[
            "rotsys", "exact", "--gen", &format!("dipole:mu={mu}"), "--format", "json",
        ])
        .unwrap();
        assert_eq!(out.code, 0);
        let doc: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        let got = doc["expected_faces"].as_str().unwrap();
        let want = rational_str(&dipole_expected_faces(mu));
        assert_eq!(got, want, "dipole mu={mu}");
    }
    let dt = start.elapsed();
    assert!(dt.as_secs() < 10, "criterion demands < 10 s, took {dt:?}");
    println!("criterion 1 (dipole closed form, mu=1..6, exact rational equality): PASS in {dt:?}");
}

#[test]
fn criterion_2_uniformity_of_final_rotation_systems() {
    let start = std::time::Instant::now();
    let trials: u64 = 1_000_000;
    let cases = [
        ("dipole(3)", dipole(3).unwrap()),
        ("K4", complete_graph(4).unwrap()),
        ("bouquet(2)", bouquet(2).unwrap()),
    ];
    for (name, g) in &cases {
        let classes = rotation_count(g).to_u64().unwrap();
        for strategy in Strategy::ALL {
            let counts = empirical_rotation_distribution(g, strategy, trials, DEFAULT_SEED);
            let tv = tv_from_uniform(&counts, classes, trials);
            println!(
                "  {name} / {}: {} classes observed of {classes}, TV from uniform = {tv:.5}",
                strategy.as_str(),
                counts.len()
            );
            assert!(tv < 0.01, "{name}/{} TV {tv} >= 0.01", strategy.as_str());
            assert_eq!(counts.len() as u64, classes, "{name} must realize every class");
        }
    }
    let dt = start.elapsed();
    println!("criterion 2 (uniformity, 1e6 runs per graph/strategy, TV < 0.01): PASS in {dt:?}");
    assert!(dt.as_secs() < 120, "criterion demands < 2 min, took {dt:?}");
}

#[test]
fn criterion_3_partial_face_bookkeeping() {
    let start = std::time::Instant::now();
    let per_graph = 10_000u64;
    for (name, g) in corpus() {
        let mut sampler = Sampler::new(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        for i in 0..per_graph {
            let strategy = Strategy::ALL[(i % 3) as usize];
            if let Err(v) = sampler.run_checked(strategy, &mut rng) {
                panic!("{name}: bookkeeping violation at step {}: {}", v.step, v.message);
            }
        }
    }
    println!(
        "criterion 3 (walks = 2|E|-2k, -2 per step, sum X_e = traced F; 1e4 runs x {} graphs): PASS in {:?}",
        corpus().len(),
        start.elapsed()
    );
}

#[test]
fn criterion_4_closable_witness_and_greedy_bound() {
    // run_checked asserts at every step that some unprocessed pair has
    // closable <= 2 mu_ij and that greedy's choice satisfies it; rerun the
    // corpus with greedy-heavy sampling so the greedy check dominates
    let start = std::time::Instant::now();
    let per_graph = 10_000u64;
    for (name, g) in corpus() {
        let mut sampler = Sampler::new(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 0xA5A5);
        for i in 0..per_graph {
            let strategy = if i % 2 == 0 { Strategy::Greedy } else { Strategy::Random };
            if let Err(v) = sampler.run_checked(strategy, &mut rng) {
                panic!("{name}: witness violation at step {}: {}", v.step, v.message);
            }
        }
    }
    println!(
        "criterion 4 (closable witness each step, greedy closable <= 2mu; 1e4 runs x {} graphs): PASS in {:?}",
        corpus().len(),
        start.elapsed()
    );
}

#[test]
fn criterion_5_upper_bounds_hold_exactly() {
    let start = std::time::Instant::now();
    for (name, g) in corpus() {
        let stats = exact_face_stats(&g, DEFAULT_BUDGET)
            .unwrap_or_else(|e| panic!("{name} must fit the budget: {e}"));
        let ef = &stats.expected_faces;
        let main = bound_main(&g);
        let coro = bound_corollary(&g);
        assert!(ef <= &main, "{name}: E[F] {} > main {}", rational_str(ef), rational_str(&main));
        assert!(ef <= &coro, "{name}: E[F] {} > corollary {}", rational_str(ef), rational_str(&coro));
        if g.is_simple() {
            let ef_f = ef.numer().to_f64().unwrap() / ef.denom().to_f64().unwrap();
            let b = bound_simple(g.vertex_count());
            assert!(ef_f < b, "{name}: E[F] {ef_f} >= pi^2 n/6 {b}");
        }
    }
    println!(
        "criterion 5 (E[F] <= n + sum H_mu_i, corollary, pi^2 n/6; {} corpus graphs, exact): PASS in {:?}",
        corpus().len(),
        start.elapsed()
    );
}

#[test]
fn criterion_6_triangle_chain_value() {
    for k in 1..=2usize {
        let g = triangle_chain(k).unwrap();
        let ef = exact_face_stats(&g, DEFAULT_BUDGET).unwrap().expected_faces;
        let want = rational(k as i64 + 1, 1); // n/3 + 1 with n = 3k
        assert_eq!(ef, want, "triangle chain k={k}");
    }
    println!("criterion 6 (triangle chains: E[F] = n/3 + 1, values 2 and 3 exactly): PASS");
}

#[test]
fn criterion_7_cycle_lower_bound_tight_on_k3() {
    let g = triangle_chain(1).unwrap();
    let ef = exact_face_stats(&g, DEFAULT_BUDGET).unwrap().expected_faces;
    let lb = lower_bound_cycles(1, 3, 2).unwrap();
    assert_eq!(lb, 2.0);
    assert_eq!(ef, rational(2, 1));
    println!("criterion 7 (lower bound 2|C|/(d-1)^l = 2 equals exact E[F] on K3): PASS");
}

#[test]
fn criterion_8_monte_carlo_convergence_and_determinism() {
    let g = dipole(4).unwrap();
    let est = monte_carlo_expected_faces(&g, 100_000, DEFAULT_SEED, Strategy::Random);
    let target = 7.0 / 3.0;
    assert!(
        (est.mean - target).abs() <= 3.0 * est.std_error,
        "mean {} vs 7/3, se {}",
        est.mean,
        est.std_error
    );
    let args = [
        "rotsys", "estimate", "--gen", "dipole:mu=4", "--trials", "100000", "--format", "json",
    ];
    let a = run_capture(&args).unwrap().text;
    let b = run_capture(&args).unwrap().text;
    assert_eq!(a.as_bytes(), b.as_bytes(), "re-run must reproduce identical bytes");
    println!(
        "criterion 8 (dipole(4): |mean - 7/3| = {:.5} <= 3 se = {:.5}; byte-identical rerun): PASS",
        (est.mean - target).abs(),
        3.0 * est.std_error
    );
}

#[test]
fn criterion_9_asymptotics_covered_by_property_suite() {
    // The Theta(n) family claims are not desk-checkable as asymptotics;
    // they are exercised by criteria 2-5 over the growing-family corpus.
    println!("criterion 9 (asymptotic claims): covered by criteria 2-5 per the substitution rule");
}
