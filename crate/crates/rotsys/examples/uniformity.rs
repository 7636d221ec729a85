//! Every edge-processing order samples embeddings uniformly: the empirical
//! distribution over final rotation systems is flat for the fixed, random
//! and greedy strategies alike.
//!
//! ```bash
//! cargo run -p rotsys --example uniformity
//! ```

use num_traits::ToPrimitive;
use rotsys::analytics::{empirical_rotation_distribution, tv_from_uniform};
use rotsys::generators::dipole;
use rotsys::process::Strategy;
use rotsys::rotation::rotation_count;

fn main() {
    let g = dipole(3).unwrap();
    let classes = rotation_count(&g).to_u64().unwrap();
    let trials = 200_000u64;
    println!("dipole(3): {classes} rotation systems, {trials} runs per strategy");
    for strategy in Strategy::ALL {
        let counts = empirical_rotation_distribution(&g, strategy, trials, 0x5EED_F0CE);
        let tv = tv_from_uniform(&counts, classes, trials);
        print!("  {:<7} counts", strategy.as_str());
        for c in counts.values() {
            print!(" {c}");
        }
        println!("  (TV from uniform {tv:.4})");
    }
}
