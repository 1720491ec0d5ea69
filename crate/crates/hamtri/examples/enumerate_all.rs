//! Exhaustive generation of plane triangulations, one per isomorphism
//! class, by breadth-first search over diagonal flips with canonical-code
//! deduplication.
//!
//! Prints the class counts for n = 4..9 and, for n = 8, how the classes
//! distribute over separating-triangle counts and decomposition-tree
//! shapes.
//!
//! Run with: cargo run --release --example enumerate_all

use std::collections::BTreeMap;

use hamtri::decomposition::decomposition_tree;
use hamtri::enumerate::enumerate_triangulations;
use hamtri::structure::separating_triangles;
use hamtri::Result;

fn main() -> Result<()> {
    for n in 4..=9 {
        let count = enumerate_triangulations(n)?.count();
        println!("n={n}: {count} triangulations up to isomorphism");
    }

    println!("\nn=8 by separating-triangle count and tree shape:");
    let mut by_profile: BTreeMap<(usize, String), usize> = BTreeMap::new();
    for g in enumerate_triangulations(8)? {
        let septris = separating_triangles(&g).len();
        let sig = decomposition_tree(&g).shape_signature();
        *by_profile.entry((septris, sig)).or_insert(0) += 1;
    }
    for ((septris, sig), count) in by_profile {
        println!("  septris={septris} tree={sig}: {count}");
    }
    Ok(())
}
