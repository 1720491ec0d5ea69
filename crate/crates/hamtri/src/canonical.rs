//! Canonical codes for plane triangulations.
//!
//! Two triangulations describe the same sphere embedding (allowing
//! relabeling and reflection) exactly when their canonical codes are equal,
//! so the code doubles as a deduplication key and, being itself a valid
//! `planar_code` record, as a canonical representative.
//!
//! The code is the lexicographic minimum, over a set of rooted oriented
//! starts, of a breadth-first relabeling code: vertices are labeled in
//! first-visit order; each visited vertex emits its rotation walked in the
//! chosen direction — the root starting at the chosen first neighbor, every
//! other vertex starting at the neighbor it was discovered from — as 1-based
//! labels with a 0 terminator, all appended after the vertex-count byte.
//!
//! Only minimum-degree roots need to be tried: the root's list is always
//! `2, 3, ..., deg+1, 0`, so a smaller-degree root puts the 0 earlier and
//! wins every comparison against larger-degree roots outright.

use crate::error::Result;
use crate::planar_code::decode_payload;
use crate::plane_graph::{position_of, Vertex};
use crate::triangulation::Triangulation;

/// The breadth-first code for one start. `first` must be a neighbor of
/// `root`; `reversed` walks every rotation backwards (the mirror image).
fn code_from(g: &Triangulation, root: Vertex, first: Vertex, reversed: bool) -> Vec<u8> {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut entry = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[root] = 0;
    order.push(root);
    let mut code = Vec::with_capacity(1 + n + 4 * g.edge_count());
    code.push(n as u8);
    let mut qi = 0;
    while qi < order.len() {
        let v = order[qi];
        qi += 1;
        let start = if v == root { first } else { entry[v] };
        let rot = g.rotation(v);
        let d = rot.len();
        let s = position_of(rot, start);
        for k in 0..d {
            let u = if reversed {
                rot[(s + d - k) % d]
            } else {
                rot[(s + k) % d]
            };
            if label[u] == usize::MAX {
                label[u] = order.len();
                entry[u] = v;
                order.push(u);
            }
            code.push((label[u] + 1) as u8);
        }
        code.push(0);
    }
    code
}

/// The canonical code of `g` (invariant under relabeling and reflection).
pub fn canonical_code(g: &Triangulation) -> Vec<u8> {
    let min_deg = (0..g.n()).map(|v| g.degree(v)).min().unwrap();
    let mut best: Option<Vec<u8>> = None;
    for root in 0..g.n() {
        if g.degree(root) != min_deg {
            continue;
        }
        for &first in g.rotation(root) {
            for reversed in [false, true] {
                let code = code_from(g, root, first, reversed);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.unwrap()
}

/// The canonical representative: the canonical code decoded back into a
/// triangulation. Isomorphic inputs yield structurally equal outputs.
pub fn canonical_form(g: &Triangulation) -> Result<Triangulation> {
    decode_payload(&canonical_code(g))
}

/// Equivalence of sphere embeddings up to relabeling and reflection.
pub fn are_isomorphic(a: &Triangulation, b: &Triangulation) -> bool {
    a.n() == b.n() && canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Triangulation {
        Triangulation::from_rotation(vec![
            vec![3, 1, 2],
            vec![3, 2, 0],
            vec![3, 0, 1],
            vec![2, 1, 0],
        ])
        .unwrap()
    }

    fn octahedron() -> Triangulation {
        Triangulation::from_rotation(vec![
            vec![4, 1, 5, 3],
            vec![4, 2, 5, 0],
            vec![4, 3, 5, 1],
            vec![4, 0, 5, 2],
            vec![3, 2, 1, 0],
            vec![0, 1, 2, 3],
        ])
        .unwrap()
    }

    #[test]
    fn k4_code_is_exact() {
        // K4 is arc-transitive, so every start yields the same code, which
        // coincides with its normalized record bytes.
        assert_eq!(
            canonical_code(&k4()),
            vec![4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0]
        );
    }

    #[test]
    fn code_is_relabeling_invariant() {
        let g = octahedron();
        let code = canonical_code(&g);
        for perm in [
            vec![5, 4, 3, 2, 1, 0],
            vec![2, 0, 5, 4, 1, 3],
            vec![1, 2, 3, 0, 5, 4],
        ] {
            let h = g.relabel(&perm).unwrap();
            assert_eq!(canonical_code(&h), code);
        }
    }

    #[test]
    fn code_is_reflection_invariant() {
        let g = octahedron();
        assert_eq!(canonical_code(&g.mirror_image()), canonical_code(&g));
        let k = k4();
        assert_eq!(canonical_code(&k.mirror_image()), canonical_code(&k));
    }

    #[test]
    fn canonical_form_is_a_fixed_point() {
        for g in [k4(), octahedron()] {
            let c = canonical_form(&g).unwrap();
            assert_eq!(canonical_code(&c), canonical_code(&g));
            assert_eq!(canonical_form(&c).unwrap(), c);
            assert!(are_isomorphic(&c, &g));
        }
    }

    #[test]
    fn distinct_graphs_get_distinct_codes() {
        assert!(!are_isomorphic(&k4(), &octahedron()));
    }
}
