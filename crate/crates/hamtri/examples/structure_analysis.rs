//! Separating triangles and the structure they impose.
//!
//! For each named fixture: the separating triangles, 4-connectivity, the
//! reducible edges (in no separating triangle and no chordless separating
//! quadrangle), and — when one exists — an edge shared by every
//! separating triangle, whose subdivision removes them all.
//!
//! Run with: cargo run --example structure_analysis

use hamtri::constructions::fixtures;
use hamtri::structure::{
    find_common_separating_edge, is_4_connected, is_reducible_edge, separating_triangles,
};
use hamtri::surgery::subdivide_edge;
use hamtri::Result;

fn main() -> Result<()> {
    for (name, g) in fixtures() {
        let septris = separating_triangles(&g);
        let reducible = g
            .edges()
            .into_iter()
            .filter(|&e| is_reducible_edge(&g, e))
            .count();
        println!(
            "{name}: n={} separating_triangles={} four_connected={} reducible_edges={}/{}",
            g.n(),
            septris.len(),
            is_4_connected(&g),
            reducible,
            g.edges().len()
        );
        for s in &septris {
            println!("  separating {:?}", s.triple);
        }
        if let Some(e) = find_common_separating_edge(&g) {
            let h = subdivide_edge(&g, e.0, e.1)?;
            println!(
                "  edge ({},{}) lies in all of them; subdividing it leaves {} separating triangles",
                e.0,
                e.1,
                separating_triangles(&h).len()
            );
        } else {
            println!("  no single edge lies in every separating triangle");
        }
    }
    Ok(())
}
