//! Separating substructures and scattering-based obstructions.
//!
//! A triangle of a triangulation either bounds a face or separates the
//! vertex set into two nonempty sides; the separating ones are the central
//! structural measure used throughout this crate. This module enumerates
//! them, enumerates chordless separating quadrangles, classifies edges as
//! reducible, locates an edge shared by every separating triangle, and
//! searches for scattering witnesses: vertex sets X whose removal leaves
//! more components than a hamiltonian path could stitch together.

use crate::plane_graph::Vertex;
use crate::triangulation::{EdgePair, Triangulation, Triple};
use crate::vertex_set::VertexSet;

/// A non-facial triangle together with the two sides it separates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingTriangle {
    pub triple: Triple,
    /// The smaller side (ties broken toward the side containing the least
    /// vertex); always nonempty.
    pub inside: VertexSet,
    /// The complementary side; always nonempty.
    pub outside: VertexSet,
}

fn side_split(g: &Triangulation, t: Triple) -> (VertexSet, VertexSet) {
    let block = t.to_set();
    let mut remaining = VertexSet::all_below(g.n()).difference(&block);
    let mut sides: Vec<VertexSet> = Vec::new();
    while let Some(start) = remaining.first() {
        let side = g.reachable_avoiding(start, block);
        remaining = remaining.difference(&side);
        sides.push(side);
    }
    assert_eq!(
        sides.len(),
        2,
        "a separating triangle splits a triangulation into exactly two sides"
    );
    let (a, b) = (sides[0], sides[1]);
    // `a` contains the least vertex outside the triangle, so on a size tie
    // it is the canonical inside.
    if a.len() <= b.len() {
        (a, b)
    } else {
        (b, a)
    }
}

/// All separating triangles, sorted by their vertex triples.
pub fn separating_triangles(g: &Triangulation) -> Vec<SeparatingTriangle> {
    let mut out = Vec::new();
    for EdgePair(u, v) in g.edges() {
        for w in g.common_neighbors(u, v).iter() {
            if w > v {
                let t = Triple::new(u, v, w);
                if !g.is_face(t) {
                    let (inside, outside) = side_split(g, t);
                    out.push(SeparatingTriangle {
                        triple: t,
                        inside,
                        outside,
                    });
                }
            }
        }
    }
    out
}

/// A triangulation is 4-connected exactly when no triangle separates it.
pub fn is_4_connected(g: &Triangulation) -> bool {
    for EdgePair(u, v) in g.edges() {
        for w in g.common_neighbors(u, v).iter() {
            if w > v && !g.is_face(Triple::new(u, v, w)) {
                return false;
            }
        }
    }
    true
}

/// Chordless separating quadrangles, as 4-cycles `[a, b, c, d]` in cyclic
/// order, normalized to start at the least vertex with its smaller cycle
/// neighbor second. Both diagonals are non-edges and removing the four
/// vertices disconnects the graph.
pub fn chordless_separating_quadrangles(g: &Triangulation) -> Vec<[Vertex; 4]> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for a in 0..g.n() {
        for c in (a + 1)..g.n() {
            if g.has_edge(a, c) {
                continue;
            }
            let mids: Vec<Vertex> = g.common_neighbors(a, c).to_vec();
            for (i, &b) in mids.iter().enumerate() {
                for &d in &mids[i + 1..] {
                    if g.has_edge(b, d) {
                        continue;
                    }
                    let mut key = [a, b, c, d];
                    key.sort_unstable();
                    if !seen.insert(key) {
                        continue;
                    }
                    let mut block = VertexSet::new();
                    for &v in &key {
                        block.insert(v);
                    }
                    let rest = VertexSet::all_below(g.n()).difference(&block);
                    let start = rest.first().expect("n >= 5 when a 4-cycle is chordless");
                    if g.reachable_avoiding(start, block) != rest {
                        // Cycle a-b-c-d with both diagonals absent. The
                        // ascending outer loops reach the 4-set first via
                        // its least vertex, so starting at `a` with the
                        // smaller of its cycle neighbors second is a
                        // canonical form.
                        out.push([a, b.min(d), c, b.max(d)]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// An edge is reducible when it lies in no separating triangle and in no
/// chordless separating quadrangle (as a cycle edge).
pub fn is_reducible_edge(g: &Triangulation, e: EdgePair) -> bool {
    let EdgePair(u, v) = e;
    if !g.has_edge(u, v) {
        return false;
    }
    for w in g.common_neighbors(u, v).iter() {
        if !g.is_face(Triple::new(u, v, w)) {
            return false;
        }
    }
    for q in chordless_separating_quadrangles(g) {
        for i in 0..4 {
            if EdgePair::new(q[i], q[(i + 1) % 4]) == e {
                return false;
            }
        }
    }
    true
}

/// An edge lying in every separating triangle, if one exists. With no
/// separating triangles at all, any edge qualifies; the least one is
/// returned. Ties are broken toward the least qualifying edge.
pub fn find_common_separating_edge(g: &Triangulation) -> Option<EdgePair> {
    let triples: Vec<Triple> = separating_triangles(g).into_iter().map(|s| s.triple).collect();
    match triples.first() {
        None => {
            let v = g.rotation(0)[0];
            Some(EdgePair::new(0, v))
        }
        Some(first) => {
            let candidates = [
                EdgePair::new(first.0, first.1),
                EdgePair::new(first.0, first.2),
                EdgePair::new(first.1, first.2),
            ];
            candidates
                .into_iter()
                .find(|e| triples.iter().all(|t| t.contains(e.0) && t.contains(e.1)))
        }
    }
}

/// A set X whose removal leaves `components != 1` pieces. A hamiltonian
/// path visits the components of G − X as at most |X| + 1 segments, so
/// `bound = components − |X| >= 0` already rules out a hamiltonian cycle
/// through X's complement structure; `bound >= 0` with `components >= 2`
/// refutes hamiltonian-connectedness for every pair inside X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScatteringWitness {
    pub x: VertexSet,
    pub components: usize,
    /// `components − |X|`, possibly negative.
    pub bound: isize,
}

fn components_without(g: &Triangulation, x: &VertexSet) -> usize {
    let mut remaining = VertexSet::all_below(g.n()).difference(x);
    let mut count = 0;
    while let Some(start) = remaining.first() {
        remaining = remaining.difference(&g.reachable_avoiding(start, *x));
        count += 1;
    }
    count
}

/// Evaluate one candidate set: a witness whenever removal does not leave a
/// single connected piece (the bound may be negative).
pub fn scattering_lower_bound(g: &Triangulation, x: &VertexSet) -> Option<ScatteringWitness> {
    let components = components_without(g, x);
    if components == 1 {
        return None;
    }
    Some(ScatteringWitness {
        x: *x,
        components,
        bound: components as isize - x.len() as isize,
    })
}

fn certificate_from(g: &Triangulation, x: &VertexSet) -> Option<ScatteringWitness> {
    scattering_lower_bound(g, x).filter(|w| w.bound >= 0 && w.components >= 2)
}

/// Search for a witness with `bound >= 0`, which certifies the graph is not
/// hamiltonian-connected (no hamiltonian path joins two vertices of X).
///
/// Candidate order is deterministic: closed neighborhoods by vertex, then
/// unions of separating-triangle vertex sets (all unions when there are at
/// most 12 triangles, otherwise unions of up to three), then every subset
/// of size at most `max_subset` in (size, lexicographic) order.
pub fn scattering_certificate_not_hc(
    g: &Triangulation,
    max_subset: usize,
) -> Option<ScatteringWitness> {
    for v in 0..g.n() {
        if let Some(w) = certificate_from(g, &g.closed_neighborhood(v)) {
            return Some(w);
        }
    }
    let septri_sets: Vec<VertexSet> = separating_triangles(g)
        .into_iter()
        .map(|s| s.triple.to_set())
        .collect();
    let t = septri_sets.len();
    if t > 0 && t <= 12 {
        for mask in 1_u32..(1 << t) {
            let mut x = VertexSet::new();
            for (i, s) in septri_sets.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    x = x.union(s);
                }
            }
            if let Some(w) = certificate_from(g, &x) {
                return Some(w);
            }
        }
    } else if t > 12 {
        for i in 0..t {
            for j in i..t {
                for k in j..t {
                    let x = septri_sets[i]
                        .union(&septri_sets[j])
                        .union(&septri_sets[k]);
                    if let Some(w) = certificate_from(g, &x) {
                        return Some(w);
                    }
                }
            }
        }
    }
    let cap = max_subset.min(g.n());
    let mut chosen: Vec<Vertex> = Vec::new();
    for size in 1..=cap {
        if let Some(w) = subsets_of_size(g, size, 0, &mut chosen) {
            return Some(w);
        }
    }
    None
}

fn subsets_of_size(
    g: &Triangulation,
    size: usize,
    from: Vertex,
    chosen: &mut Vec<Vertex>,
) -> Option<ScatteringWitness> {
    if chosen.len() == size {
        let x: VertexSet = chosen.iter().copied().collect();
        return certificate_from(g, &x);
    }
    for v in from..g.n() {
        chosen.push(v);
        if let Some(w) = subsets_of_size(g, size, v + 1, chosen) {
            chosen.pop();
            return Some(w);
        }
        chosen.pop();
    }
    None
}
