//! Rotation systems and face tracing: faces are the orbits of
//! `d -> sigma(alpha(d))`, and Euler's formula turns face counts into genus.
//!
//! ```bash
//! cargo run -p rotsys --example face_tracing
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rotsys::generators::{bouquet, complete_graph};
use rotsys::rotation::{rotation_count, RotationSystem};

fn main() {
    // the bouquet of two loops embeds in the sphere or the torus
    let b2 = bouquet(2).unwrap();
    println!("bouquet(2) has {} rotation systems", rotation_count(&b2));

    let planar = RotationSystem::canonical(&b2);
    let census = planar.trace_faces(&b2);
    println!(
        "canonical rotation: faces {:?}, genus {}",
        census.face_lengths, census.total_genus
    );

    // interleaving the two loops produces the toroidal embedding
    let toroidal = RotationSystem::from_next(&b2, vec![2, 3, 1, 0]).unwrap();
    let census = toroidal.trace_faces(&b2);
    println!(
        "interleaved rotation: faces {:?}, genus {}",
        census.face_lengths, census.total_genus
    );

    // random rotations of K4: face counts 4 (sphere) or 2 (torus)
    let k4 = complete_graph(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    print!("ten random K4 embeddings, face counts:");
    for _ in 0..10 {
        let rot = RotationSystem::uniform_random(&k4, &mut rng);
        print!(" {}", rot.trace_faces(&k4).face_count);
    }
    println!();

    // the per-vertex cyclic orders, anchored at the lowest dart
    let rot = RotationSystem::uniform_random(&k4, &mut rng);
    println!("one K4 rotation system:\n{}", rot.to_text(&k4));
}
