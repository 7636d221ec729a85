//! Bound reports across several families: the expected face count against
//! the harmonic upper bounds, the pi^2 n / 6 bound for simple graphs, and
//! the cycle-set lower bound.
//!
//! ```bash
//! cargo run -p rotsys --example bounds_table
//! ```

use rotsys::analytics::{bounds_report, CycleData, FaceValue};
use rotsys::enumeration::{exact_face_stats, DEFAULT_BUDGET};
use rotsys::generators::{bouquet, complete_graph, dipole, dipole_chain, triangle_chain};
use rotsys::multigraph::MultiGraph;

fn main() {
    let cases: Vec<(&str, MultiGraph, Option<CycleData>)> = vec![
        ("dipole(3)", dipole(3).unwrap(), None),
        (
            "K3",
            triangle_chain(1).unwrap(),
            // one cycle of length 3, max degree 2: lower bound 2, tight
            Some(CycleData { cycle_count: 1, max_len: 3, max_degree: 2 }),
        ),
        ("K4", complete_graph(4).unwrap(), None),
        ("bouquet(2)", bouquet(2).unwrap(), None),
        ("dipole_chain(2,3)", dipole_chain(2, 3).unwrap(), None),
    ];
    for (name, g, cycles) in cases {
        let exact = exact_face_stats(&g, DEFAULT_BUDGET).unwrap().expected_faces;
        let report = bounds_report(&g, &FaceValue::Exact(exact), cycles);
        println!("{name}: E[F] = {}", report.expected_faces);
        for b in &report.bounds {
            println!(
                "  {:<20} {:>14}  {}",
                b.name,
                b.value,
                if b.satisfied { "ok" } else { "VIOLATED" }
            );
        }
        assert!(!report.hard_violation());
    }
}
