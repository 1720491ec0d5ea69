//! Exhaustive hamiltonian path and cycle searches.
//!
//! The searcher is a bidirectional backtracker over bitset adjacency: it
//! grows the path from whichever endpoint currently has fewer unvisited
//! neighbors, and abandons a branch when some unvisited vertex has fewer
//! than two usable neighbors or the unvisited region falls apart. Neighbor
//! candidates are always tried in ascending order, so results are
//! deterministic. A failed search is a completed exhaustive proof that no
//! path exists, not a timeout.

use crate::error::{Error, Result};
use crate::plane_graph::Vertex;
use crate::structure::is_4_connected;
use crate::triangulation::{EdgePair, Triangulation};
use crate::vertex_set::VertexSet;

/// Plain adjacency view used by the searches: triangulations, plus the
/// temporary edge/vertex modifications the cycle reductions need.
#[derive(Clone)]
pub(crate) struct SearchGraph {
    nbrs: Vec<VertexSet>,
}

impl SearchGraph {
    pub fn of(g: &Triangulation) -> Self {
        Self {
            nbrs: (0..g.n()).map(|v| g.neighbor_set(v)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.nbrs.len()
    }

    pub fn add_vertex_adjacent_to(&mut self, targets: &[Vertex]) -> Vertex {
        let m = self.nbrs.len();
        let mut set = VertexSet::new();
        for &t in targets {
            set.insert(t);
            self.nbrs[t].insert(m);
        }
        self.nbrs.push(set);
        m
    }
}

struct Searcher<'a> {
    g: &'a SearchGraph,
    /// Vertices not yet on the path (excludes both current endpoints).
    active: VertexSet,
    front: Vec<Vertex>,
    back: Vec<Vertex>,
}

impl<'a> Searcher<'a> {
    /// Every vertex still to be placed needs two usable neighbors, and the
    /// unplaced region together with both endpoints must be connected.
    fn viable(&self, e1: Vertex, e2: Vertex) -> bool {
        let mut context = self.active;
        context.insert(e1);
        context.insert(e2);
        for w in self.active.iter() {
            if self.g.nbrs[w].intersection(&context).len() < 2 {
                return false;
            }
        }
        // Flood from e1 through unplaced vertices; e2 is enterable but the
        // search only needs every unplaced vertex and e2 to be reached.
        let mut seen = VertexSet::new();
        seen.insert(e1);
        let mut frontier = seen;
        loop {
            let mut next = VertexSet::new();
            for v in frontier.iter() {
                next = next.union(&self.g.nbrs[v].intersection(&context));
            }
            let next = next.difference(&seen);
            if next.is_empty() {
                break;
            }
            seen = seen.union(&next);
            frontier = next;
        }
        self.active.is_subset_of(&seen) && seen.contains(e2)
    }

    fn solve(&mut self) -> bool {
        let e1 = *self.front.last().unwrap();
        let e2 = *self.back.last().unwrap();
        if self.active.is_empty() {
            return self.g.nbrs[e1].contains(e2);
        }
        if !self.viable(e1, e2) {
            return false;
        }
        let c1 = self.g.nbrs[e1].intersection(&self.active);
        let c2 = self.g.nbrs[e2].intersection(&self.active);
        let from_front = c1.len() <= c2.len();
        let candidates = if from_front { c1 } else { c2 };
        for u in candidates.iter() {
            self.active.remove(u);
            if from_front {
                self.front.push(u);
            } else {
                self.back.push(u);
            }
            if self.solve() {
                return true;
            }
            if from_front {
                self.front.pop();
            } else {
                self.back.pop();
            }
            self.active.insert(u);
        }
        false
    }
}

/// Hamiltonian path search on the raw adjacency view, covering exactly the
/// vertices not in `excluded`. Endpoints must not be excluded.
pub(crate) fn ham_path_on(
    g: &SearchGraph,
    x: Vertex,
    y: Vertex,
    excluded: VertexSet,
) -> Option<Vec<Vertex>> {
    debug_assert!(x != y && !excluded.contains(x) && !excluded.contains(y));
    let mut active = VertexSet::all_below(g.n()).difference(&excluded);
    active.remove(x);
    active.remove(y);
    let mut s = Searcher {
        g,
        active,
        front: vec![x],
        back: vec![y],
    };
    if s.solve() {
        let mut path = s.front;
        path.extend(s.back.into_iter().rev());
        Some(path)
    } else {
        None
    }
}

/// A hamiltonian path from `x` to `y`, or `None` after exhausting the
/// search space.
pub fn ham_path(g: &Triangulation, x: Vertex, y: Vertex) -> Option<Vec<Vertex>> {
    ham_path_on(&SearchGraph::of(g), x, y, VertexSet::new())
}

/// Some hamiltonian cycle, reported as a vertex sequence whose closing edge
/// is implicit. Tries the edges at vertex 0 in ascending neighbor order.
pub fn ham_cycle(g: &Triangulation) -> Option<Vec<Vertex>> {
    let sg = SearchGraph::of(g);
    for w in g.neighbor_set(0).iter() {
        if let Some(path) = ham_path_on(&sg, 0, w, VertexSet::new()) {
            return Some(path);
        }
    }
    None
}

fn validate_required(g: &Triangulation, required: &[EdgePair]) -> Result<()> {
    if required.len() > 2 {
        return Err(Error::TooManyRequiredEdges {
            max: 2,
            got: required.len(),
        });
    }
    for e in required {
        if e.0 == e.1 {
            return Err(Error::NotPathSystem(format!(
                "degenerate required edge {:?}",
                e
            )));
        }
        for &v in &[e.0, e.1] {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { v, n: g.n() });
            }
        }
    }
    if required.len() == 2 && required[0] == required[1] {
        return Err(Error::NotPathSystem(
            "required edges share both endpoints".into(),
        ));
    }
    Ok(())
}

/// A hamiltonian cycle of `G ∪ required` through every required edge, or
/// `None`. Required edges need not be edges of `G` (they are added for the
/// search), but must form a path system: at most two edges sharing at most
/// one endpoint.
pub fn ham_cycle_through(
    g: &Triangulation,
    required: &[EdgePair],
) -> Result<Option<Vec<Vertex>>> {
    validate_required(g, required)?;
    let sg = SearchGraph::of(g);
    let cycle = match required {
        [] => ham_cycle(g),
        [e] => ham_path_on(&sg, e.0, e.1, VertexSet::new()),
        [e, f] => {
            let shared: Vec<Vertex> = [e.0, e.1]
                .into_iter()
                .filter(|v| *v == f.0 || *v == f.1)
                .collect();
            match shared[..] {
                // Edges ab, bc: the cycle must pass a-b-c, so search for a
                // hamiltonian path from a to c with b set aside, then put b
                // back between the ends.
                [b] => {
                    let a = if e.0 == b { e.1 } else { e.0 };
                    let c = if f.0 == b { f.1 } else { f.0 };
                    let mut excluded = VertexSet::new();
                    excluded.insert(b);
                    ham_path_on(&sg, a, c, excluded).map(|mut path| {
                        path.push(b);
                        path
                    })
                }
                // Disjoint edges ab, cd: force the cycle through cd by
                // inserting a degree-2 vertex between c and d, search for
                // the a-b path, then splice that vertex back out.
                [] => {
                    let mut aug = sg.clone();
                    let m = aug.add_vertex_adjacent_to(&[f.0, f.1]);
                    ham_path_on(&aug, e.0, e.1, VertexSet::new()).map(|path| {
                        path.into_iter().filter(|&v| v != m).collect()
                    })
                }
                _ => unreachable!("duplicate edges rejected above"),
            }
        }
        _ => unreachable!("length checked above"),
    };
    if let Some(c) = &cycle {
        debug_assert!(is_ham_cycle_through(g, c, required));
    }
    Ok(cycle)
}

/// Empirical probe of two-edge hamiltonian-connectedness: does `G ∪ X` have
/// a hamiltonian cycle through both edges of `X`? Only meaningful (and only
/// accepted) for 4-connected triangulations.
pub fn two_edge_hc_check(g: &Triangulation, x: [EdgePair; 2]) -> Result<bool> {
    if !is_4_connected(g) {
        return Err(Error::NotFourConnected);
    }
    Ok(ham_cycle_through(g, &x)?.is_some())
}

/// Independent validity check for a claimed hamiltonian path.
pub fn is_ham_path(g: &Triangulation, x: Vertex, y: Vertex, path: &[Vertex]) -> bool {
    if path.len() != g.n() || path.first() != Some(&x) || path.last() != Some(&y) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in path {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Independent validity check for a claimed hamiltonian cycle of
/// `G ∪ allowed` passing through every edge in `allowed`.
pub fn is_ham_cycle_through(g: &Triangulation, cycle: &[Vertex], allowed: &[EdgePair]) -> bool {
    if cycle.len() != g.n() {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if v >= g.n() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let mut used = vec![false; allowed.len()];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let pair = EdgePair::new(a, b);
        if let Some(k) = allowed.iter().position(|e| *e == pair) {
            used[k] = true;
        } else if !g.has_edge(a, b) {
            return false;
        }
    }
    used.iter().all(|&u| u)
}
