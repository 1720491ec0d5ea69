//! Deciding hamiltonian-connectedness three ways.
//!
//! The naive mode searches every vertex pair; the optimized mode seeds
//! from one hamiltonian cycle, propagates paths by endpoint rotation, and
//! applies per-pair skip rules before falling back to search; audit mode
//! runs the optimized pipeline and then re-verifies every claim against
//! direct search. The rule tally shows where the work went.
//!
//! Run with: cargo run --example hamiltonian_connectedness

use hamtri::checker::{check_hc, Mode, RuleConfig, RuleId};
use hamtri::constructions::fixtures;
use hamtri::Result;

fn main() -> Result<()> {
    let config = RuleConfig::default();
    for (name, g) in fixtures() {
        let report = check_hc(&g, Mode::Optimized, &config);
        print!(
            "{name}: n={} hamiltonian_connected={} pairs={}",
            report.n,
            report.hamiltonian_connected,
            report.pairs.len()
        );
        for rule in RuleId::ALL {
            if let Some(k) = report.rule_counts.get(&rule) {
                print!(" {}={k}", rule.name());
            }
        }
        if !report.refuted.is_empty() {
            print!(" refuted={:?}", report.refuted);
        }
        println!();

        // Audit mode cross-examines every covered pair.
        let audited = check_hc(&g, Mode::Audit, &config);
        assert!(audited.audit.is_empty(), "audit found discrepancies");
        assert_eq!(
            audited.hamiltonian_connected,
            report.hamiltonian_connected
        );
    }

    // A witness: the first pair's hamiltonian path on the icosahedron.
    let g = fixtures().remove(3).1;
    let report = check_hc(&g, Mode::Optimized, &config);
    if let Some(p) = report.pairs.iter().find_map(|p| match &p.status {
        hamtri::checker::PairStatus::Covered { witness: Some(w), .. } => Some(w.clone()),
        _ => None,
    }) {
        println!("\nicosahedron witness path: {p:?}");
    }
    Ok(())
}
