//! The brute-force oracle: enumerate every rotation system of a small graph
//! and read off the exact face and genus distributions.
//!
//! ```bash
//! cargo run -p rotsys --example exact_census
//! ```

use rotsys::analytics::rational_str;
use rotsys::enumeration::{exact_face_stats, DEFAULT_BUDGET};
use rotsys::generators::{bouquet, complete_graph};

fn main() {
    for (name, g) in [
        ("K4", complete_graph(4).unwrap()),
        ("bouquet(3)", bouquet(3).unwrap()),
    ] {
        let stats = exact_face_stats(&g, DEFAULT_BUDGET).unwrap();
        println!("{name}: {} embeddings", stats.total_embeddings);
        for (faces, count) in &stats.face_distribution {
            println!("  F = {faces}: {count} embeddings");
        }
        for (genus, count) in &stats.genus_distribution {
            println!("  genus {genus}: {count} embeddings");
        }
        println!("  E[F] = {}", rational_str(&stats.expected_faces));
    }

    // the budget guards against accidental huge enumerations
    let big = rotsys::generators::dipole(12).unwrap();
    match exact_face_stats(&big, DEFAULT_BUDGET) {
        Err(e) => println!("dipole(12): {e}"),
        Ok(_) => unreachable!("11!^2 is far over the default budget"),
    }
}
