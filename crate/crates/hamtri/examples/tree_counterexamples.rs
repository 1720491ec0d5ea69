//! Building non-hamiltonian-connected triangulations to order.
//!
//! Any tree with a vertex of degree >= 4 can be realized as the
//! decomposition tree of a triangulation that is NOT hamiltonian-connected:
//! the high-degree node becomes a bipyramid whose rim-plus-hub cut splits
//! the rest into as many components as the cut has vertices, so no two cut
//! vertices can be joined by a hamiltonian path.
//!
//! Run with: cargo run --example tree_counterexamples

use hamtri::checker::{check_hc, Mode, RuleConfig};
use hamtri::constructions::{counterexample_from_tree, Tree};
use hamtri::decomposition::decomposition_tree;
use hamtri::structure::scattering_lower_bound;
use hamtri::Result;

fn main() -> Result<()> {
    let spider = Tree::from_edges(&[
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 5),
        (2, 6),
    ])?;
    for (label, tree) in [
        ("4-star", Tree::star(4)),
        ("5-star", Tree::star(5)),
        ("spider", spider),
    ] {
        let ce = counterexample_from_tree(&tree)?;
        let g = &ce.graph;
        let shape = decomposition_tree(g).shape();
        let w = scattering_lower_bound(g, &ce.cut).expect("cut disconnects");
        let report = check_hc(g, Mode::Naive, &RuleConfig::default());
        println!(
            "{label}: n={} tree=({} nodes, max degree {}) cut={:?} \
             components={} bound={} hamiltonian_connected={} refuted_pairs={}",
            g.n(),
            shape.node_count,
            shape.max_degree,
            ce.cut.to_vec(),
            w.components,
            w.bound,
            report.hamiltonian_connected,
            report.refuted.len()
        );
        assert!(!report.hamiltonian_connected);
    }

    // Trees without a degree-4 node cannot be realized this way — and for
    // good reason: every triangulation whose tree has max degree <= 3 is
    // hamiltonian-connected (at the sizes this crate can sweep).
    let path = Tree::from_prufer(&[1, 2, 3])?;
    assert!(counterexample_from_tree(&path).is_err());
    println!("\na path tree is rejected: max degree {} < 4", path.max_degree());
    Ok(())
}
