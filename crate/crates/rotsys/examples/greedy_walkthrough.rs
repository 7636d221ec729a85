//! One greedy run, step by step: at each state the process picks the
//! unprocessed pair minimizing closable faces / remaining multiplicity.
//! The chosen ratio never exceeds 2.
//!
//! ```bash
//! cargo run -p rotsys --example greedy_walkthrough
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rotsys::generators::dipole_chain;
use rotsys::process::ProcessState;

fn main() {
    let g = dipole_chain(3, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut st = ProcessState::new(&g);
    println!(
        "{:>4} {:>8} {:>9} {:>4} {:>6} {:>6} {:>7}",
        "step", "pair", "closable", "mu", "ratio", "X_e", "walks"
    );
    let mut step = 0;
    while let Some((u, v)) = st.greedy_next_edge() {
        let closable = st.closable_faces(u, v).unwrap();
        let mu = st.mu_remaining(u, v);
        let ratio = closable as f64 / mu as f64;
        assert!(ratio <= 2.0);
        let (a, b) = st.random_dart_choice(u, v, &mut rng).unwrap();
        let x = st.process_edge(u, v, a, b).unwrap();
        step += 1;
        println!(
            "{step:>4} {:>8} {closable:>9} {mu:>4} {ratio:>6.2} {x:>6} {:>7}",
            format!("({u},{v})"),
            st.walk_count()
        );
        assert_eq!(st.walk_count(), 2 * g.edge_count() - 2 * st.processed_count());
    }
    println!("faces closed in total: {}", st.closed_count());
}
