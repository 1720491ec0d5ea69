//! Plane triangulations: simple sphere embeddings in which every face is a
//! triangle.
//!
//! The all-triangles condition together with the edge count `3n - 6` pins the
//! embedding to the sphere, and such graphs are always 3-connected; both
//! facts are verified explicitly on construction rather than assumed, so
//! every `Triangulation` value in the crate is known-good.

use crate::error::{Error, Result};
use crate::plane_graph::{PlaneGraph, Vertex};
use crate::vertex_set::VertexSet;

/// An undirected edge, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgePair(pub Vertex, pub Vertex);

impl EdgePair {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            EdgePair(u, v)
        } else {
            EdgePair(v, u)
        }
    }
}

impl std::fmt::Debug for EdgePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// An unordered vertex triple, stored sorted. Used both for facial triangles
/// and for separating triangles; in a simple triangulation on at least four
/// vertices a triple bounds at most one face, so no orientation is kept.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple(pub Vertex, pub Vertex, pub Vertex);

impl Triple {
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        Triple(t[0], t[1], t[2])
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        [self.0, self.1, self.2]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v || self.2 == v
    }

    pub fn to_set(&self) -> VertexSet {
        let mut s = VertexSet::new();
        s.insert(self.0);
        s.insert(self.1);
        s.insert(self.2);
        s
    }
}

impl std::fmt::Debug for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{},{}}}", self.0, self.1, self.2)
    }
}

/// A validated plane triangulation.
#[derive(Clone, PartialEq, Eq)]
pub struct Triangulation {
    graph: PlaneGraph,
    nbrs: Vec<VertexSet>,
}

impl Triangulation {
    /// Validates and wraps a rotation system. Requirements: at least four
    /// vertices, simple and symmetric adjacency, connected, exactly `3n - 6`
    /// edges, every traced face a triangle, and 3-connected.
    pub fn from_rotation(rotation: Vec<Vec<Vertex>>) -> Result<Self> {
        let graph = PlaneGraph::from_rotation(rotation)?;
        let n = graph.n();
        if n < 4 {
            return Err(Error::InvalidTriangulation(format!(
                "need at least 4 vertices, got {n}"
            )));
        }
        let e = graph.edge_count();
        if e != 3 * n - 6 {
            return Err(Error::InvalidTriangulation(format!(
                "expected {} edges for {} vertices, got {e}",
                3 * n - 6,
                n
            )));
        }
        for face in graph.face_cycles() {
            if face.len() != 3 {
                return Err(Error::InvalidTriangulation(format!(
                    "face of length {} traced: {:?}",
                    face.len(),
                    face
                )));
            }
            if face[0] == face[1] || face[0] == face[2] || face[1] == face[2] {
                return Err(Error::InvalidTriangulation(format!(
                    "degenerate face traced: {:?}",
                    face
                )));
            }
        }
        let nbrs = (0..n)
            .map(|v| graph.rotation(v).iter().copied().collect())
            .collect();
        let t = Self { graph, nbrs };
        t.assert_three_connected()?;
        Ok(t)
    }

    /// Removing any two vertices must leave the rest connected. Plane
    /// triangulations always satisfy this, but it is cheap to confirm and
    /// catches construction bugs early.
    fn assert_three_connected(&self) -> Result<()> {
        let n = self.n();
        for x in 0..n {
            for y in (x + 1)..n {
                let mut removed = VertexSet::new();
                removed.insert(x);
                removed.insert(y);
                let start = (0..n).find(|v| !removed.contains(*v)).unwrap();
                if self.reachable_avoiding(start, removed).len() != n - 2 {
                    return Err(Error::InvalidTriangulation(format!(
                        "not 3-connected: removing {{{x},{y}}} disconnects the rest"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Vertices reachable from `start` without entering `avoid`.
    pub fn reachable_avoiding(&self, start: Vertex, avoid: VertexSet) -> VertexSet {
        let mut seen = VertexSet::new();
        if avoid.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in self.nbrs[v].difference(&avoid).iter() {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.graph.degree(v)
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// The cyclic neighbor order at `v`, starting at the smallest neighbor.
    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        self.graph.rotation(v)
    }

    pub fn rotation_lists(&self) -> &[Vec<Vertex>] {
        self.graph.rotation_lists()
    }

    pub fn neighbor_set(&self, v: Vertex) -> VertexSet {
        self.nbrs[v]
    }

    /// `v` together with its neighbors.
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut s = self.nbrs[v];
        s.insert(v);
        s
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.nbrs[u].contains(v)
    }

    pub fn next_after(&self, v: Vertex, u: Vertex) -> Vertex {
        self.graph.next_after(v, u)
    }

    pub fn prev_before(&self, v: Vertex, u: Vertex) -> Vertex {
        self.graph.prev_before(v, u)
    }

    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> VertexSet {
        self.nbrs[u].intersection(&self.nbrs[v])
    }

    /// The two apex vertices of the faces on either side of edge `uv`.
    /// Returned as `(next_after(v, u), next_after(u, v))`, i.e. the apex of
    /// the face traced from `(u, v)` first.
    pub fn face_apexes(&self, u: Vertex, v: Vertex) -> Result<(Vertex, Vertex)> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        Ok((self.next_after(v, u), self.next_after(u, v)))
    }

    /// All edges, sorted.
    pub fn edges(&self) -> Vec<EdgePair> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.nbrs[u].iter() {
                if u < v {
                    out.push(EdgePair(u, v));
                }
            }
        }
        out
    }

    /// All facial triangles as sorted triples, in sorted order.
    pub fn faces(&self) -> Vec<Triple> {
        let mut out: Vec<Triple> = self
            .graph
            .face_cycles()
            .into_iter()
            .map(|f| Triple::new(f[0], f[1], f[2]))
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether the triple bounds a face. Works directly from the rotation
    /// at one corner, avoiding a full trace.
    pub fn is_face(&self, t: Triple) -> bool {
        let [a, b, c] = t.vertices();
        if a == b
            || b == c
            || !(self.has_edge(a, b) && self.has_edge(b, c) && self.has_edge(a, c))
        {
            return false;
        }
        // {a,b,c} is a face iff at a, one of b,c immediately follows the
        // other in the rotation (either orientation).
        self.next_after(a, b) == c || self.next_after(a, c) == b
    }

    /// The same triangulation with the opposite orientation: every rotation
    /// list reversed.
    pub fn mirror_image(&self) -> Triangulation {
        let rotation = self
            .rotation_lists()
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        Triangulation::from_rotation(rotation).expect("mirror of a valid triangulation is valid")
    }

    /// Applies the vertex relabeling `perm` (new label of `v` is `perm[v]`),
    /// preserving the embedding.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Triangulation> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::InvalidPlaneGraph("permutation length mismatch".into()));
        }
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            rotation[perm[v]] = self.rotation(v).iter().map(|&u| perm[u]).collect();
        }
        Triangulation::from_rotation(rotation)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::all_below(self.n())
    }
}

impl std::fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Triangulation(n={})", self.n())?;
        for v in 0..self.n() {
            writeln!(f, "  {v}: {:?}", self.rotation(v))?;
        }
        Ok(())
    }
}
