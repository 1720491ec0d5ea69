//! Shared helpers for the integration suites: cached enumerations, random
//! instance generators, and a from-scratch isomorphism-class counter used
//! as an oracle against the library's generator.

#![allow(dead_code)]

use std::sync::OnceLock;

use hamtri::constructions::{self, Tree};
use hamtri::enumerate::enumerate_triangulations;
use hamtri::surgery;
use hamtri::Triangulation;
use rand::Rng;

const MAX_CACHED: usize = 12;

/// All triangulations on `n` vertices, computed once per process.
pub fn enumeration(n: usize) -> &'static [Triangulation] {
    static CACHE: [OnceLock<Vec<Triangulation>>; MAX_CACHED + 1] =
        [const { OnceLock::new() }; MAX_CACHED + 1];
    assert!((4..=MAX_CACHED).contains(&n));
    CACHE[n].get_or_init(|| enumerate_triangulations(n).unwrap().collect())
}

/// A pseudorandom triangulation reached by flipping random edges starting
/// from the stacked one — independent of the enumerator.
pub fn random_triangulation(rng: &mut impl Rng, n: usize) -> Triangulation {
    let mut g = constructions::stacked(n - 4).unwrap();
    for _ in 0..6 * n {
        let edges = g.edges();
        let e = edges[rng.gen_range(0..edges.len())];
        if let Ok(h) = surgery::diagonal_flip(&g, e.0, e.1) {
            g = h;
        }
    }
    g
}

/// A uniformly random labeled tree on `nodes` vertices (Prüfer sampling).
pub fn random_tree(rng: &mut impl Rng, nodes: usize) -> Tree {
    assert!(nodes >= 3);
    let seq: Vec<usize> = (0..nodes - 2).map(|_| rng.gen_range(0..nodes)).collect();
    Tree::from_prufer(&seq).unwrap()
}

// ---------------------------------------------------------------------
// Independent oracle: count isomorphism classes of maximal planar graphs
// by brute force over labeled graphs, with planarity decided through
// explicit Kuratowski subdivisions. Nothing here touches the library's
// graph types.
// ---------------------------------------------------------------------

/// Count isomorphism classes of n-vertex maximal planar graphs (n ≤ 7).
///
/// Every planar graph on n ≥ 3 vertices with 3n−6 edges is maximal planar,
/// so it suffices to scan all labeled graphs with that many edges and keep
/// the planar ones. With at most two vertices to spare beyond a K5 (one
/// beyond a K3,3), a Kuratowski subdivision can be searched for directly.
pub fn independent_isomorphism_class_count(n: usize) -> usize {
    assert!((4..=7).contains(&n), "oracle is sized for at most 2 spares");
    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let m = 3 * n - 6;
    let perms = permutations(n);
    let mut classes = std::collections::BTreeSet::new();
    let mut chosen: Vec<usize> = (0..m).collect();
    loop {
        let edges: Vec<(usize, usize)> = chosen.iter().map(|&i| all_pairs[i]).collect();
        let mut adj = vec![0u32; n];
        for &(u, v) in &edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        if !has_k5_subdivision(&adj) && !has_k33_subdivision(&adj) {
            classes.insert(canonical_edges(&edges, &adj, &perms));
        }
        if !next_combination(&mut chosen, all_pairs.len()) {
            break;
        }
    }
    classes.len()
}

fn next_combination(c: &mut [usize], limit: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < limit - (k - i) {
            c[i] += 1;
            for j in (i + 1)..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permute(&mut cur, n, &mut out);
    out
}

fn heap_permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(cur, k - 1, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}

/// Lexicographically least relabeled edge list over all permutations that
/// sort the degree sequence (a nonempty, isomorphism-closed set, so the
/// minimum is a class invariant).
fn canonical_edges(
    edges: &[(usize, usize)],
    adj: &[u32],
    perms: &[Vec<usize>],
) -> Vec<(usize, usize)> {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut pos = vec![0usize; n];
    for sigma in perms {
        // sigma[i] = old vertex assigned the new label i.
        if !(0..n - 1).all(|i| deg[sigma[i]] <= deg[sigma[i + 1]]) {
            continue;
        }
        for (i, &v) in sigma.iter().enumerate() {
            pos[v] = i;
        }
        let mut relabeled: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (pos[u], pos[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        relabeled.sort_unstable();
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
    }
    best.expect("the identity-on-sorted-degrees permutation always qualifies")
}

fn has_edge(adj: &[u32], u: usize, v: usize) -> bool {
    adj[u] & (1 << v) != 0
}

fn has_k5_subdivision(adj: &[u32]) -> bool {
    let n = adj.len();
    for branch in subsets(n, 5) {
        let spares: Vec<usize> = (0..n).filter(|v| !branch.contains(v)).collect();
        let mut missing = Vec::new();
        for i in 0..5 {
            for j in (i + 1)..5 {
                if !has_edge(adj, branch[i], branch[j]) {
                    missing.push((branch[i], branch[j]));
                }
            }
        }
        let ok = match missing[..] {
            [] => true,
            [(a, b)] => {
                spares
                    .iter()
                    .any(|&s| has_edge(adj, a, s) && has_edge(adj, s, b))
                    || (spares.len() == 2 && {
                        let (s, t) = (spares[0], spares[1]);
                        has_edge(adj, s, t)
                            && ((has_edge(adj, a, s) && has_edge(adj, t, b))
                                || (has_edge(adj, a, t) && has_edge(adj, s, b)))
                    })
            }
            [(a, b), (c, d)] => {
                spares.len() == 2 && {
                    let (s, t) = (spares[0], spares[1]);
                    (has_edge(adj, a, s)
                        && has_edge(adj, s, b)
                        && has_edge(adj, c, t)
                        && has_edge(adj, t, d))
                        || (has_edge(adj, a, t)
                            && has_edge(adj, t, b)
                            && has_edge(adj, c, s)
                            && has_edge(adj, s, d))
                }
            }
            _ => false,
        };
        if ok {
            return true;
        }
    }
    false
}

fn has_k33_subdivision(adj: &[u32]) -> bool {
    let n = adj.len();
    if n < 6 {
        return false;
    }
    for branch in subsets(n, 6) {
        let spares: Vec<usize> = (0..n).filter(|v| !branch.contains(v)).collect();
        // Splits of the six branch vertices into two sides; fixing vertex 0
        // on the first side halves the symmetry.
        for rest in subsets(5, 2) {
            let left = [branch[0], branch[rest[0] + 1], branch[rest[1] + 1]];
            let right: Vec<usize> = branch
                .iter()
                .copied()
                .filter(|v| !left.contains(v))
                .collect();
            let mut missing = Vec::new();
            for &a in &left {
                for &b in &right {
                    if !has_edge(adj, a, b) {
                        missing.push((a, b));
                    }
                }
            }
            let ok = match missing[..] {
                [] => true,
                [(a, b)] => spares
                    .iter()
                    .any(|&s| has_edge(adj, a, s) && has_edge(adj, s, b)),
                _ => false,
            };
            if ok {
                return true;
            }
        }
    }
    false
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        if !next_combination(&mut cur, n) {
            break;
        }
    }
    out
}
