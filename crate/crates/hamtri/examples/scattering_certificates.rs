//! Short refutations: scattering certificates.
//!
//! A vertex set X whose removal leaves at least |X| components proves in
//! one line that no hamiltonian path joins two vertices of X — so the
//! graph is not hamiltonian-connected, no search required. The certificate
//! finder tries closed neighborhoods, then unions of separating triangles,
//! then small subsets.
//!
//! Run with: cargo run --example scattering_certificates

use hamtri::checker::{check_hc, Mode, RuleConfig};
use hamtri::constructions::{counterexample_from_tree, fixture, Tree};
use hamtri::structure::scattering_certificate_not_hc;
use hamtri::Result;

fn main() -> Result<()> {
    // Hamiltonian-connected fixtures admit no certificate.
    for name in ["octahedron", "icosahedron", "b3", "stacked_4"] {
        let g = fixture(name)?;
        assert!(scattering_certificate_not_hc(&g, 6).is_none());
        println!("{name}: no certificate (and indeed hamiltonian-connected)");
    }

    // The 10-vertex counterexample: removing the bipyramid cut {0..4}
    // leaves 5 components.
    let g = fixture("ce10")?;
    let w = scattering_certificate_not_hc(&g, 6).expect("certificate exists");
    println!(
        "\nce10: removing X={:?} leaves {} components (bound {})",
        w.x.to_vec(),
        w.components,
        w.bound
    );
    let report = check_hc(&g, Mode::Naive, &RuleConfig::default());
    assert!(!report.hamiltonian_connected);
    let refuted_in_x = report
        .refuted
        .iter()
        .all(|&(a, b)| w.x.contains(a) && w.x.contains(b));
    println!(
        "naive search agrees: {} refuted pairs, all inside X = {refuted_in_x}",
        report.refuted.len()
    );

    // A bigger certified instance, built from a 6-node star.
    let ce = counterexample_from_tree(&Tree::star(5))?;
    let w = scattering_certificate_not_hc(&ce.graph, 0).expect("certificate exists");
    println!(
        "star(5) construction (n={}): |X|={} components={} bound={}",
        ce.graph.n(),
        w.x.len(),
        w.components,
        w.bound
    );
    Ok(())
}
