//! Building multigraphs: edge lists, loops, multiplicities, the text format.
//!
//! ```bash
//! cargo run -p rotsys --example graph_basics
//! ```

use rotsys::generators::{bouquet, dipole_chain};
use rotsys::multigraph::MultiGraph;

fn main() {
    // a dipole chain: three blocks of 5 parallel edges, joined by cut edges
    let chain = dipole_chain(3, 5).unwrap();
    println!(
        "dipole chain: n={} |E|={} mu={}",
        chain.vertex_count(),
        chain.edge_count(),
        chain.mu()
    );
    for v in 1..=chain.vertex_count() {
        println!(
            "  vertex {v}: degree {}, max incident multiplicity {}",
            chain.degree(v).unwrap(),
            chain.mu_at(v)
        );
    }
    println!("text format:\n{}", chain.to_text());

    // loops contribute 2 to the degree
    let b = bouquet(2).unwrap();
    println!("bouquet(2): degree {} from 2 loops", b.degree(1).unwrap());

    // duplicate entries are summed, entry order is irrelevant
    let g1 = MultiGraph::from_edge_list(3, &[(2, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
    let g2 = MultiGraph::from_edge_list(3, &[(2, 3, 1), (1, 2, 2)]).unwrap();
    assert_eq!(g1.to_text(), g2.to_text());
    println!("canonical form:\n{}", g1.to_text());

    // two disjoint loops: two components
    let two = MultiGraph::from_edge_list(2, &[(1, 1, 1), (2, 2, 1)]).unwrap();
    println!("components of two disjoint loops: {:?}", two.components());

    // degree-0 vertices are rejected at construction
    let err = MultiGraph::from_edge_list(3, &[(1, 2, 1)]).unwrap_err();
    println!("isolated vertex is an error: {err}");
}
