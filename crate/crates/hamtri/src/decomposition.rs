//! Splitting at separating triangles and the decomposition tree.
//!
//! Splitting a triangulation at a separating triangle yields the two closed
//! sides, each a triangulation in which the shared triangle has become a
//! face. Splitting repeatedly until no separating triangle remains produces
//! the decomposition tree: pieces as nodes, shared triangles as edges. The
//! piece multiset and the tree shape are independent of the split order;
//! the default strategy (always the lexicographically least triangle in
//! original labels) makes the whole structure reproducible.

use crate::error::{Error, Result};
use crate::plane_graph::Vertex;
use crate::structure::separating_triangles;
use crate::triangulation::{Triangulation, Triple};
use crate::vertex_set::VertexSet;

/// One side of a split (eventually: one node of the decomposition tree),
/// with its vertices relabeled to `0..piece_n`.
#[derive(Clone, Debug)]
pub struct Piece {
    pub graph: Triangulation,
    /// `origin[local] = label in the graph that was split`.
    pub origin: Vec<Vertex>,
}

impl Piece {
    /// Map a triple of original labels into this piece, if all three
    /// vertices belong to it.
    fn localize(&self, t: Triple) -> Option<Triple> {
        let find = |v: Vertex| self.origin.binary_search(&v).ok();
        Some(Triple::new(find(t.0)?, find(t.1)?, find(t.2)?))
    }

    fn has_face_of_original(&self, t: Triple) -> bool {
        self.localize(t).is_some_and(|l| self.graph.is_face(l))
    }
}

/// Split at a separating triangle, returning the closed smaller side first
/// (ties broken toward the side containing the least vertex). Each side
/// keeps the triangle's three vertices, where it is now a face.
pub fn split_at(g: &Triangulation, t: Triple) -> Result<(Piece, Piece)> {
    let not_separating = || Error::NotSeparating {
        a: t.0,
        b: t.1,
        c: t.2,
    };
    if t.2 >= g.n()
        || !g.has_edge(t.0, t.1)
        || !g.has_edge(t.0, t.2)
        || !g.has_edge(t.1, t.2)
        || g.is_face(t)
    {
        return Err(not_separating());
    }
    let block = t.to_set();
    let mut remaining = VertexSet::all_below(g.n()).difference(&block);
    let mut sides: Vec<VertexSet> = Vec::new();
    while let Some(start) = remaining.first() {
        let side = g.reachable_avoiding(start, block);
        remaining = remaining.difference(&side);
        sides.push(side);
    }
    if sides.len() != 2 {
        return Err(not_separating());
    }
    let (small, large) = if sides[0].len() <= sides[1].len() {
        (sides[0], sides[1])
    } else {
        (sides[1], sides[0])
    };
    Ok((extract(g, &small.union(&block)), extract(g, &large.union(&block))))
}

fn extract(g: &Triangulation, keep: &VertexSet) -> Piece {
    let origin: Vec<Vertex> = keep.to_vec();
    let local_of = |v: Vertex| origin.binary_search(&v).unwrap();
    let rotation: Vec<Vec<Vertex>> = origin
        .iter()
        .map(|&v| {
            g.rotation(v)
                .iter()
                .copied()
                .filter(|w| keep.contains(*w))
                .map(local_of)
                .collect()
        })
        .collect();
    let graph = Triangulation::from_rotation(rotation)
        .expect("restricting to a closed side of a separating triangle yields a triangulation");
    Piece { graph, origin }
}

/// The result of exhaustively splitting at separating triangles.
#[derive(Clone, Debug)]
pub struct DecompositionTree {
    pub pieces: Vec<Piece>,
    /// `(piece, piece, shared triangle in original labels)`; the triangle
    /// is a face of both incident pieces.
    pub edges: Vec<(usize, usize, Triple)>,
}

/// Summary statistics of the tree's shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeShape {
    pub node_count: usize,
    pub max_degree: usize,
    pub is_path: bool,
}

/// Decompose, always splitting at the least separating triangle (by
/// original labels) of the current part.
pub fn decomposition_tree(g: &Triangulation) -> DecompositionTree {
    decomposition_tree_with_strategy(g, |triples| {
        triples
            .iter()
            .enumerate()
            .min_by_key(|(_, t)| **t)
            .map(|(i, _)| i)
            .unwrap()
    })
}

/// Decompose with a caller-chosen split order: `choose` picks an index into
/// the slice of candidate triangles (in original labels) of the part being
/// split. The piece multiset and tree shape do not depend on the choices.
pub fn decomposition_tree_with_strategy(
    g: &Triangulation,
    mut choose: impl FnMut(&[Triple]) -> usize,
) -> DecompositionTree {
    let mut parts: Vec<Option<Piece>> = vec![Some(Piece {
        graph: g.clone(),
        origin: (0..g.n()).collect(),
    })];
    let mut edges: Vec<(usize, usize, Triple)> = Vec::new();
    let mut work: Vec<usize> = vec![0];
    while let Some(idx) = work.pop() {
        let piece = parts[idx].as_ref().unwrap();
        let local_seps = separating_triangles(&piece.graph);
        if local_seps.is_empty() {
            continue;
        }
        let originals: Vec<Triple> = local_seps
            .iter()
            .map(|s| {
                Triple::new(
                    piece.origin[s.triple.0],
                    piece.origin[s.triple.1],
                    piece.origin[s.triple.2],
                )
            })
            .collect();
        let k = choose(&originals);
        let chosen_original = originals[k];
        let (a, b) = split_at(&piece.graph, local_seps[k].triple)
            .expect("enumerated separating triangles split cleanly");
        let relift = |p: Piece, parent: &Piece| Piece {
            graph: p.graph,
            origin: p.origin.iter().map(|&l| parent.origin[l]).collect(),
        };
        let a = relift(a, piece);
        let b = relift(b, piece);
        let ia = parts.len();
        parts.push(Some(a));
        let ib = parts.len();
        parts.push(Some(b));
        // Any recorded edge whose endpoint was the part just split moves to
        // whichever child kept its shared triangle as a face.
        for e in edges.iter_mut() {
            for end in [&mut e.0, &mut e.1] {
                if *end == idx {
                    let in_a = parts[ia].as_ref().unwrap().has_face_of_original(e.2);
                    let in_b = parts[ib].as_ref().unwrap().has_face_of_original(e.2);
                    assert!(
                        in_a != in_b,
                        "a shared triangle stays a face of exactly one side"
                    );
                    *end = if in_a { ia } else { ib };
                }
            }
        }
        edges.push((ia, ib, chosen_original));
        parts[idx] = None;
        work.push(ia);
        work.push(ib);
    }
    let mut final_ids = vec![usize::MAX; parts.len()];
    let mut pieces = Vec::new();
    for (i, slot) in parts.into_iter().enumerate() {
        if let Some(p) = slot {
            final_ids[i] = pieces.len();
            pieces.push(p);
        }
    }
    let edges = edges
        .into_iter()
        .map(|(a, b, t)| (final_ids[a], final_ids[b], t))
        .collect();
    DecompositionTree { pieces, edges }
}

impl DecompositionTree {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.pieces.len()];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    pub fn shape(&self) -> TreeShape {
        let adj = self.adjacency();
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        TreeShape {
            node_count: self.pieces.len(),
            max_degree,
            is_path: max_degree <= 2,
        }
    }

    /// Canonical encoding of the unlabeled tree shape; two decomposition
    /// trees are isomorphic as trees exactly when their signatures match.
    pub fn shape_signature(&self) -> String {
        ahu_signature(&self.adjacency())
    }
}

/// Canonical form of an unlabeled unrooted tree given as adjacency lists:
/// root at the tree center and encode with sorted nested parentheses.
pub fn ahu_signature(adj: &[Vec<usize>]) -> String {
    assert!(!adj.is_empty());
    let n = adj.len();
    if n == 1 {
        return "()".into();
    }
    // Peel leaves to find the 1- or 2-vertex center.
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            left -= 1;
            for &w in &adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    match centers[..] {
        [c] => ahu_rooted(adj, c, usize::MAX),
        [c1, c2] => {
            // The separator keeps bicentral trees distinct from any
            // rooted encoding (a two-node path is not a three-node star).
            let mut halves = [ahu_rooted(adj, c1, c2), ahu_rooted(adj, c2, c1)];
            halves.sort();
            format!("({}|{})", halves[0], halves[1])
        }
        _ => unreachable!("a tree has one or two center vertices"),
    }
}

fn ahu_rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu_rooted(adj, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}
