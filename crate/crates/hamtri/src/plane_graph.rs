//! Plane graphs as rotation systems.
//!
//! A plane (sphere-embedded) graph is stored combinatorially: for every
//! vertex, the cyclic order of its neighbors. Faces are not stored; they are
//! recovered by tracing. The trace convention used throughout the crate is
//!
//! > the directed edge `(u, v)` is followed by `(v, w)` where `w` is the
//! > neighbor *after* `u` in the rotation at `v`,
//!
//! so each directed edge lies on exactly one face boundary and consecutive
//! neighbors in a rotation are consecutive on a common face.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub type Vertex = usize;

/// A simple connected graph embedded in the sphere, given by its rotation
/// system. No constraint is placed on face sizes; `Triangulation` adds the
/// all-triangles invariants on top of this type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<Vertex>>,
}

impl PlaneGraph {
    /// Builds a plane graph from rotation lists, validating that the result
    /// is simple, symmetric and connected. Each rotation list is normalized
    /// to start at the vertex's smallest neighbor (a cyclic rotation, so the
    /// embedding is unchanged); this makes structural equality agree with
    /// equality of embeddings in fixed labels.
    pub fn from_rotation(rotation: Vec<Vec<Vertex>>) -> Result<Self> {
        let n = rotation.len();
        if n == 0 {
            return Err(Error::InvalidPlaneGraph("no vertices".into()));
        }
        if n > VertexSet::CAPACITY {
            return Err(Error::UnsupportedSize { n });
        }
        let mut seen = vec![false; n];
        for (v, nbrs) in rotation.iter().enumerate() {
            seen.iter_mut().for_each(|s| *s = false);
            for &u in nbrs {
                if u >= n {
                    return Err(Error::VertexOutOfRange { v: u, n });
                }
                if u == v {
                    return Err(Error::InvalidPlaneGraph(format!("loop at vertex {v}")));
                }
                if seen[u] {
                    return Err(Error::InvalidPlaneGraph(format!(
                        "repeated neighbor {u} at vertex {v}"
                    )));
                }
                seen[u] = true;
            }
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            for &u in nbrs {
                if !rotation[u].contains(&v) {
                    return Err(Error::InvalidPlaneGraph(format!(
                        "asymmetric adjacency: {v} lists {u} but not conversely"
                    )));
                }
            }
        }
        let mut rotation = rotation;
        for nbrs in &mut rotation {
            normalize_cyclic(nbrs);
        }
        let g = Self { rotation };
        if !g.is_connected() {
            return Err(Error::InvalidPlaneGraph("graph is not connected".into()));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotation[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    pub fn rotation_lists(&self) -> &[Vec<Vertex>] {
        &self.rotation
    }

    pub fn into_rotation_lists(self) -> Vec<Vec<Vertex>> {
        self.rotation
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rotation[u].contains(&v)
    }

    /// Neighbor following `u` in the rotation at `v`.
    pub fn next_after(&self, v: Vertex, u: Vertex) -> Vertex {
        let nbrs = &self.rotation[v];
        let i = position_of(nbrs, u);
        nbrs[(i + 1) % nbrs.len()]
    }

    /// Neighbor preceding `u` in the rotation at `v`.
    pub fn prev_before(&self, v: Vertex, u: Vertex) -> Vertex {
        let nbrs = &self.rotation[v];
        let i = position_of(nbrs, u);
        nbrs[(i + nbrs.len() - 1) % nbrs.len()]
    }

    /// All face boundary cycles, each a closed walk listed once. Faces are
    /// reported in a deterministic order (by their smallest directed edge)
    /// and each cycle starts at its lexicographically minimal rotation.
    pub fn face_cycles(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        // done[v][i] marks the directed edge (v, rotation[v][i]) as traced.
        let mut done: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for v in 0..n {
            for i in 0..self.rotation[v].len() {
                if done[v][i] {
                    continue;
                }
                let mut cycle = Vec::new();
                let (mut a, mut b) = (v, self.rotation[v][i]);
                loop {
                    let idx = position_of(&self.rotation[a], b);
                    if done[a][idx] {
                        break;
                    }
                    done[a][idx] = true;
                    cycle.push(a);
                    let c = self.next_after(b, a);
                    a = b;
                    b = c;
                }
                normalize_cycle_start(&mut cycle);
                faces.push(cycle);
            }
        }
        faces
    }

    fn is_connected(&self) -> bool {
        let mut seen = VertexSet::new();
        let mut stack = vec![0usize];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for &u in &self.rotation[v] {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen.len() == self.n()
    }
}

pub(crate) fn position_of(nbrs: &[Vertex], u: Vertex) -> usize {
    nbrs.iter().position(|&x| x == u).expect("neighbor present")
}

/// Rotates a cyclic list so its smallest element comes first.
pub(crate) fn normalize_cyclic(list: &mut [Vertex]) {
    if list.is_empty() {
        return;
    }
    let min_pos = list
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap();
    list.rotate_left(min_pos);
}

/// Rotates a cycle so the smallest vertex comes first, keeping orientation.
pub(crate) fn normalize_cycle_start(cycle: &mut [Vertex]) {
    normalize_cyclic(cycle);
}
