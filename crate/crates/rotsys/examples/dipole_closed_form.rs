//! The dipole identity: the expected face count of two vertices joined by
//! mu parallel edges is H_{mu-1} + 1/ceil(mu/2), exactly. The enumeration
//! oracle reproduces it as a rational for every mu here.
//!
//! ```bash
//! cargo run -p rotsys --example dipole_closed_form
//! ```

use rotsys::analytics::{dipole_expected_faces, rational_str};
use rotsys::enumeration::{exact_face_stats, DEFAULT_BUDGET};
use rotsys::generators::dipole;
use rotsys::rotation::rotation_count;

fn main() {
    println!("{:>3} {:>10} {:>12} {:>12}", "mu", "systems", "oracle", "closed form");
    for mu in 1..=6 {
        let g = dipole(mu).unwrap();
        let stats = exact_face_stats(&g, DEFAULT_BUDGET).unwrap();
        let formula = dipole_expected_faces(mu as u64);
        assert_eq!(stats.expected_faces, formula);
        println!(
            "{mu:>3} {:>10} {:>12} {:>12}",
            rotation_count(&g),
            rational_str(&stats.expected_faces),
            rational_str(&formula)
        );
    }
    println!("oracle and closed form agree exactly for mu = 1..6");
}
