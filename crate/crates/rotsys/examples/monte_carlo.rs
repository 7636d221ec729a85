//! Seeded Monte Carlo estimation of the expected face count, checked
//! against the exact oracle. Identical seeds give identical estimates
//! whatever the worker count.
//!
//! ```bash
//! cargo run -p rotsys --example monte_carlo
//! ```

use rotsys::analytics::{monte_carlo_expected_faces, rational_str};
use rotsys::enumeration::{exact_face_stats, DEFAULT_BUDGET};
use rotsys::generators::dipole;
use rotsys::process::Strategy;

fn main() {
    let g = dipole(4).unwrap();
    let exact = exact_face_stats(&g, DEFAULT_BUDGET).unwrap().expected_faces;
    println!("dipole(4) exact E[F] = {}", rational_str(&exact));

    for trials in [1_000u64, 10_000, 100_000] {
        let est = monte_carlo_expected_faces(&g, trials, 0x5EED_F0CE, Strategy::Random);
        println!(
            "{trials:>7} trials: mean {:.6}  se {:.6}  ci95 [{:.6}, {:.6}]",
            est.mean, est.std_error, est.ci95.0, est.ci95.1
        );
    }

    let a = monte_carlo_expected_faces(&g, 50_000, 123, Strategy::Greedy);
    let b = monte_carlo_expected_faces(&g, 50_000, 123, Strategy::Greedy);
    assert_eq!(a, b);
    println!("same seed, same trials: bit-identical estimates");
}
