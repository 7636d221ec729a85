//! Chains of triangles joined by cut edges satisfy E[F] = n/3 + 1 exactly;
//! in fact every embedding of such a chain has that many faces, since each
//! triangle block is planar in every rotation. Exact for small chains,
//! Monte Carlo for longer ones.
//!
//! ```bash
//! cargo run -p rotsys --example triangle_chains
//! ```

use rotsys::analytics::{monte_carlo_expected_faces, rational_str};
use rotsys::enumeration::{exact_face_stats, DEFAULT_BUDGET};
use rotsys::generators::triangle_chain;
use rotsys::process::Strategy;

fn main() {
    for k in 1..=2usize {
        let g = triangle_chain(k).unwrap();
        let n = g.vertex_count();
        let ef = exact_face_stats(&g, DEFAULT_BUDGET).unwrap().expected_faces;
        println!(
            "k={k} (n={n}): exact E[F] = {}   n/3 + 1 = {}",
            rational_str(&ef),
            n / 3 + 1
        );
    }
    for k in 3..=5usize {
        let g = triangle_chain(k).unwrap();
        let n = g.vertex_count();
        let est = monte_carlo_expected_faces(&g, 200_000, 0x5EED_F0CE, Strategy::Greedy);
        let target = n as f64 / 3.0 + 1.0;
        println!(
            "k={k} (n={n}): estimated E[F] = {:.4} +- {:.4}   n/3 + 1 = {target}",
            est.mean,
            2.0 * est.std_error
        );
    }
}
