//! Exhaustive enumeration of triangulations by diagonal-flip search.
//!
//! Every triangulation of a given order can be reached from the stacked
//! sphere by diagonal flips, so a breadth-first walk of the flip graph,
//! deduplicated by canonical code, visits each isomorphism class exactly
//! once. The iterator is lazy: graph `k` is only materialized when asked
//! for, and the worklist stores codes, not graphs.

use std::collections::{BTreeSet, VecDeque};

use crate::canonical::canonical_code;
use crate::constructions::stacked;
use crate::error::{Error, Result};
use crate::planar_code::decode_payload;
use crate::surgery::diagonal_flip;
use crate::triangulation::Triangulation;

/// Largest order the enumerator accepts unless a caller raises the cap.
/// Chosen so a full run stays tractable (the class counts grow roughly
/// sevenfold per vertex).
pub const DEFAULT_CAP: usize = 14;

/// All triangulations on `n` vertices, one per isomorphism class, in
/// flip-breadth-first order from the stacked sphere.
pub fn enumerate_triangulations(n: usize) -> Result<Enumeration> {
    enumerate_triangulations_capped(n, DEFAULT_CAP)
}

/// Same, with an explicit size cap.
pub fn enumerate_triangulations_capped(n: usize, cap: usize) -> Result<Enumeration> {
    if n < 4 || n > cap {
        return Err(Error::EnumerationRange { n, cap });
    }
    let seed = canonical_code(&stacked(n - 4)?);
    let mut seen = BTreeSet::new();
    seen.insert(seed.clone());
    let mut queue = VecDeque::new();
    queue.push_back(seed);
    Ok(Enumeration { queue, seen })
}

pub struct Enumeration {
    queue: VecDeque<Vec<u8>>,
    seen: BTreeSet<Vec<u8>>,
}

impl Iterator for Enumeration {
    type Item = Triangulation;

    fn next(&mut self) -> Option<Triangulation> {
        let code = self.queue.pop_front()?;
        let g = decode_payload(&code).expect("canonical codes decode");
        for e in g.edges() {
            if let Ok(h) = diagonal_flip(&g, e.0, e.1) {
                let c = canonical_code(&h);
                if self.seen.insert(c.clone()) {
                    self.queue.push_back(c);
                }
            }
        }
        Some(g)
    }
}
