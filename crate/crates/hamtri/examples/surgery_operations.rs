//! Local operations that stay inside the class of triangulations.
//!
//! Stack a vertex into a face, flip a diagonal, subdivide an edge into a
//! 4-star, contract a reducible edge — each returns a new triangulation
//! or a precise error explaining why the operation is illegal there.
//!
//! Run with: cargo run --example surgery_operations

use hamtri::constructions::fixture;
use hamtri::structure::{is_reducible_edge, separating_triangles};
use hamtri::surgery::{contract_edge, diagonal_flip, stack_face, subdivide_edge};
use hamtri::{EdgePair, Result};

fn main() -> Result<()> {
    // Stacking into a face adds a degree-3 vertex and one separating
    // triangle (the face it was stacked into).
    let g = fixture("octahedron")?;
    let face = g.faces()[0];
    let stacked = stack_face(&g, face)?;
    println!(
        "stack into {face:?}: n {} -> {}, separating triangles {} -> {}",
        g.n(),
        stacked.n(),
        separating_triangles(&g).len(),
        separating_triangles(&stacked).len()
    );

    // Flipping replaces an edge by the opposite diagonal of its two faces.
    let e = g.edges()[0];
    let flipped = diagonal_flip(&g, e.0, e.1)?;
    println!(
        "flip ({},{}): edge count unchanged at {}, graph now has {} separating triangles",
        e.0,
        e.1,
        flipped.edges().len(),
        separating_triangles(&flipped).len()
    );
    // The flipped-away edge no longer exists in the result.
    assert!(diagonal_flip(&flipped, e.0, e.1).is_err());

    // Subdividing an edge replaces it by a degree-4 vertex joined to the
    // endpoints and both apexes.
    let sub = subdivide_edge(&g, e.0, e.1)?;
    println!("subdivide ({},{}): n {} -> {}", e.0, e.1, g.n(), sub.n());

    // Contraction merges the endpoints of an edge with exactly two common
    // neighbors; on a reducible edge it cannot create multi-edges.
    let g = fixture("stacked_4")?;
    let e = g
        .edges()
        .into_iter()
        .find(|&e| is_reducible_edge(&g, e))
        .expect("stacked graphs have reducible edges");
    let contracted = contract_edge(&g, e.0, e.1)?;
    println!(
        "contract reducible ({},{}) in stacked_4: n {} -> {}",
        e.0,
        e.1,
        g.n(),
        contracted.n()
    );

    // Illegal requests fail loudly rather than corrupting the embedding.
    let k4 = fixture("k4")?;
    let err = contract_edge(&k4, 0, 1).unwrap_err();
    println!("contracting inside K4: {err}");
    let err = stack_face(&stacked, face).unwrap_err();
    println!("stacking into what is no longer a face: {err}");
    let err = diagonal_flip(&k4, 0, 1).unwrap_err();
    println!("flipping a K4 edge: {err}");
    assert_eq!(EdgePair::new(5, 2), EdgePair::new(2, 5)); // endpoints normalize
    Ok(())
}
