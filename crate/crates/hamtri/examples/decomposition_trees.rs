//! Splitting at separating triangles until every piece is 4-connected.
//!
//! The pieces form a tree: two pieces are adjacent when they share a
//! separating triangle. A triangulation with k separating triangles
//! always yields k+1 pieces whose orders sum to n + 3k. The shape of
//! this tree (path, star, ...) governs hamiltonian behavior.
//!
//! Run with: cargo run --example decomposition_trees

use hamtri::constructions::{counterexample_from_tree, fixture, Tree};
use hamtri::decomposition::decomposition_tree;
use hamtri::Result;

fn main() -> Result<()> {
    for name in ["octahedron", "b3", "stacked_4", "ce10"] {
        let g = fixture(name)?;
        let tree = decomposition_tree(&g);
        let shape = tree.shape();
        let orders: Vec<usize> = tree.pieces.iter().map(|p| p.graph.n()).collect();
        println!(
            "{name}: pieces={} orders={orders:?} max_degree={} path={} signature={}",
            shape.node_count,
            shape.max_degree,
            shape.is_path,
            tree.shape_signature()
        );
        for (i, j, t) in &tree.edges {
            println!("  pieces {i} and {j} share triangle {t:?}");
        }
    }

    // The construction below realizes any prescribed tree whose maximum
    // degree is at least 4 — here a 6-node star — and the decomposition
    // recovers that shape.
    let star = Tree::star(5);
    let ce = counterexample_from_tree(&star)?;
    let tree = decomposition_tree(&ce.graph);
    println!(
        "\nbuilt from a 6-node star: n={} pieces={} signature={}",
        ce.graph.n(),
        tree.pieces.len(),
        tree.shape_signature()
    );
    Ok(())
}
