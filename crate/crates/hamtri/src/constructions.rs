//! Reference graphs and counterexample constructions.
//!
//! Provides the small named fixtures (K4, bipyramids, icosahedron, stacked
//! spheres), kleetopes, and the tree-driven construction that realizes any
//! tree with a degree-4 node as a triangulation that is provably not
//! hamiltonian-connected, certified by a scattering witness.

use crate::error::{Error, Result};
use crate::plane_graph::{PlaneGraph, Vertex};
use crate::surgery;
use crate::triangulation::{Triangulation, Triple};
use crate::vertex_set::VertexSet;

/// The complete graph on four vertices in its canonical rotation system.
pub fn k4() -> Triangulation {
    Triangulation::from_rotation(vec![
        vec![1, 2, 3],
        vec![0, 3, 2],
        vec![0, 1, 3],
        vec![0, 2, 1],
    ])
    .expect("K4 is a valid triangulation")
}

/// The wheel on an n-gon rim (vertices `0..n`) plus hub `n`. The rim face
/// stays open, so the result is a plane graph, not a triangulation, except
/// for n = 3.
pub fn wheel(n: usize) -> Result<PlaneGraph> {
    if n < 3 {
        return Err(Error::WheelTooSmall { n });
    }
    let mut rotation: Vec<Vec<Vertex>> = (0..n)
        .map(|i| vec![(i + 1) % n, n, (i + n - 1) % n])
        .collect();
    rotation.push((0..n).collect());
    PlaneGraph::from_rotation(rotation)
}

/// The n-gonal bipyramid: rim `0..n`, one apex at `n` (rotation descending)
/// and one at `n + 1` (ascending). `double_wheel(3)` is the 5-vertex
/// bipyramid with a single separating triangle; `double_wheel(4)` is the
/// octahedron; larger rims are 4-connected as well.
pub fn double_wheel(n: usize) -> Result<Triangulation> {
    if n < 3 {
        return Err(Error::WheelTooSmall { n });
    }
    let mut rotation: Vec<Vec<Vertex>> = (0..n)
        .map(|i| vec![n, (i + 1) % n, n + 1, (i + n - 1) % n])
        .collect();
    rotation.push((0..n).rev().collect());
    rotation.push((0..n).collect());
    Triangulation::from_rotation(rotation)
}

/// The icosahedron: top vertex 0, upper ring 1..6, lower ring 6..11,
/// bottom vertex 11.
pub fn icosahedron() -> Triangulation {
    let mut rotation: Vec<Vec<Vertex>> = Vec::with_capacity(12);
    rotation.push(vec![1, 5, 4, 3, 2]);
    for i in 0..5 {
        rotation.push(vec![
            0,
            1 + (i + 1) % 5,
            6 + i,
            6 + (i + 4) % 5,
            1 + (i + 4) % 5,
        ]);
    }
    for i in 0..5 {
        rotation.push(vec![
            11,
            6 + (i + 4) % 5,
            1 + i,
            1 + (i + 1) % 5,
            6 + (i + 1) % 5,
        ]);
    }
    rotation.push(vec![6, 7, 8, 9, 10]);
    Triangulation::from_rotation(rotation).expect("icosahedron rotation is valid")
}

/// A stacked sphere: K4 with `k` successive vertex stackings. Each stack
/// fills the face made of the previous fresh vertex and the least edge of
/// the face it was stacked into, so the separating triangles form a chain
/// and the decomposition tree is a path with `k + 1` nodes.
pub fn stacked(k: usize) -> Result<Triangulation> {
    let mut g = k4();
    let mut face = Triple::new(0, 1, 2);
    for _ in 0..k {
        let z = g.n();
        g = surgery::stack_face(&g, face)?;
        face = Triple::new(z, face.0, face.1);
    }
    Ok(g)
}

/// Stack a fresh vertex into every face of `g` (the kleetope). The kleetope
/// of K4 is the smallest triangulation whose scattering number reaches 0.
pub fn kleetope(g: &Triangulation) -> Result<Triangulation> {
    let faces = g.faces();
    let mut out = g.clone();
    for f in faces {
        out = surgery::stack_face(&out, f)?;
    }
    Ok(out)
}

/// An unrooted tree on nodes `0..n`, kept as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Build from an explicit edge list. Node count is one past the largest
    /// mentioned label; the edges must form a tree on exactly those nodes.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::BadTreeSpec("no edges given".into()));
        }
        let n = edges
            .iter()
            .map(|&(a, b)| a.max(b))
            .max()
            .unwrap()
            + 1;
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::BadTreeSpec(format!("self-loop at node {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::BadTreeSpec(format!("duplicate edge {a}-{b}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        if edges.len() != n - 1 {
            return Err(Error::BadTreeSpec(format!(
                "{} edges on {} nodes cannot be a tree",
                edges.len(),
                n
            )));
        }
        // n - 1 edges: connected iff acyclic; check by flood fill.
        let mut reached = vec![false; n];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !reached[w] {
                    reached[w] = true;
                    stack.push(w);
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Err(Error::BadTreeSpec("edge list is not connected".into()));
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Ok(Self { adj })
    }

    /// Parse a text edge list: one `a b` pair per line, 0-based labels;
    /// blank lines and lines starting with `#` are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize> {
                tok.ok_or_else(|| {
                    Error::BadTreeSpec(format!("line {}: expected two labels", lineno + 1))
                })?
                .parse()
                .map_err(|_| {
                    Error::BadTreeSpec(format!("line {}: labels must be integers", lineno + 1))
                })
            };
            let a = parse(it.next())?;
            let b = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::BadTreeSpec(format!(
                    "line {}: expected exactly two labels",
                    lineno + 1
                )));
            }
            edges.push((a, b));
        }
        Self::from_edges(&edges)
    }

    /// The star K_{1,k}: center 0, leaves 1..=k.
    pub fn star(k: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
        Self::from_edges(&edges).expect("a star is a tree")
    }

    /// Decode a Prüfer sequence into the tree it encodes (n = len + 2).
    pub fn from_prufer(seq: &[usize]) -> Result<Self> {
        let n = seq.len() + 2;
        if let Some(&bad) = seq.iter().find(|&&s| s >= n) {
            return Err(Error::BadTreeSpec(format!(
                "prufer entry {bad} out of range for {n} nodes"
            )));
        }
        let mut degree = vec![1usize; n];
        for &s in seq {
            degree[s] += 1;
        }
        let mut leaves: std::collections::BTreeSet<usize> = (0..n)
            .filter(|&v| degree[v] == 1)
            .collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &s in seq {
            let leaf = *leaves.iter().next().unwrap();
            leaves.remove(&leaf);
            edges.push((leaf, s));
            degree[s] -= 1;
            if degree[s] == 1 {
                leaves.insert(s);
            }
        }
        let mut it = leaves.iter();
        let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
        edges.push((a, b));
        Self::from_edges(&edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacency_lists(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n().saturating_sub(1));
        for (v, l) in self.adj.iter().enumerate() {
            for &w in l {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out
    }

    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }
}

/// A triangulation realizing a given tree as its decomposition tree, built
/// to admit a scattering certificate against hamiltonian-connectedness.
#[derive(Clone, Debug)]
pub struct TreeCounterexample {
    pub graph: Triangulation,
    /// The hub of the base bipyramid (vertex `d` when the chosen center has
    /// tree degree d).
    pub hub: Vertex,
    /// The cut X = rim + hub. Removing it leaves `|X|` components, so the
    /// scattering bound is 0 and no two vertices of X are joined by a
    /// hamiltonian path.
    pub cut: VertexSet,
    /// For each tree node, the graph vertices its piece contributed (for
    /// the center node: the entire base bipyramid).
    pub node_pieces: Vec<VertexSet>,
}

/// Realize `tree` as the decomposition tree of a triangulation that is not
/// hamiltonian-connected. Requires a node of degree at least 4; the least
/// such node becomes the center.
///
/// The center of degree d becomes a d-gonal bipyramid; each subtree hanging
/// off the center is glued into one hub face, leaf nodes as stacked
/// vertices and nodes of degree 5 or more as glued bipyramids with enough
/// faces for their children. Removing the rim and hub of the base then
/// leaves the closing apex plus one component per branch: d + 1 components
/// against |X| = d + 1 removed vertices.
pub fn counterexample_from_tree(tree: &Tree) -> Result<TreeCounterexample> {
    let center = (0..tree.n())
        .find(|&v| tree.degree(v) >= 4)
        .ok_or(Error::TreeDegreeTooSmall {
            max_degree: tree.max_degree(),
        })?;
    let d = tree.degree(center);
    let mut graph = double_wheel(d)?;
    let mut node_pieces = vec![VertexSet::new(); tree.n()];
    node_pieces[center] = (0..=d + 1).collect();
    let cut: VertexSet = (0..=d).collect();
    for (i, &branch) in tree.neighbors(center).iter().enumerate() {
        let site = Triple::new(d, i, (i + 1) % d);
        realize_subtree(&mut graph, tree, branch, center, site, &mut node_pieces)?;
    }
    Ok(TreeCounterexample {
        graph,
        hub: d,
        cut,
        node_pieces,
    })
}

fn realize_subtree(
    graph: &mut Triangulation,
    tree: &Tree,
    node: usize,
    parent: usize,
    site: Triple,
    node_pieces: &mut [VertexSet],
) -> Result<()> {
    let children: Vec<usize> = tree
        .neighbors(node)
        .iter()
        .copied()
        .filter(|&c| c != parent)
        .collect();
    let degree = tree.degree(node);
    let mut child_sites: Vec<Triple>;
    if degree <= 4 {
        // A single stacked vertex has exactly 3 surrounding faces: enough
        // for up to 3 children.
        let z = graph.n();
        *graph = surgery::stack_face(graph, site)?;
        node_pieces[node] = std::iter::once(z).collect();
        child_sites = vec![
            Triple::new(z, site.0, site.1),
            Triple::new(z, site.0, site.2),
            Triple::new(z, site.1, site.2),
        ];
    } else {
        // A bipyramid glued along one face keeps 2m - 1 free faces, so
        // m = ceil(degree / 2) (at least 4, keeping the piece free of
        // separating triangles) always fits the degree - 1 children.
        let m = degree.div_ceil(2).max(4);
        let guest = double_wheel(m)?;
        let glue_face = Triple::new(0, 1, m);
        let host_dir = surgery::directed_face(graph, site)?;
        let guest_dir = surgery::directed_face(&guest, glue_face)?;
        let glued = surgery::subdivide_face(graph, host_dir, &guest, guest_dir)?;
        let map = glued.guest_map;
        *graph = glued.graph;
        node_pieces[node] = (0..guest.n())
            .filter(|&v| v != 0 && v != 1 && v != m)
            .map(|v| map[v])
            .collect();
        child_sites = guest
            .faces()
            .into_iter()
            .filter(|&f| f != glue_face)
            .map(|f| Triple::new(map[f.0], map[f.1], map[f.2]))
            .collect();
    }
    child_sites.sort_unstable();
    assert!(
        child_sites.len() >= children.len(),
        "piece sizing guarantees a free face per child"
    );
    for (site, &child) in child_sites.iter().zip(children.iter()) {
        realize_subtree(graph, tree, child, node, *site, node_pieces)?;
    }
    Ok(())
}

/// Look up a named reference graph: `k4`, `b3`, `octahedron`,
/// `icosahedron`, `ce10` (the 10-vertex tree counterexample), or
/// `stacked_<k>`.
pub fn fixture(name: &str) -> Result<Triangulation> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "k4" => Ok(k4()),
        "b3" => double_wheel(3),
        "octahedron" => double_wheel(4),
        "icosahedron" => Ok(icosahedron()),
        "ce10" => Ok(counterexample_from_tree(&Tree::star(4))?.graph),
        _ => {
            if let Some(rest) = lower.strip_prefix("stacked_") {
                if let Ok(k) = rest.parse::<usize>() {
                    return stacked(k);
                }
            }
            Err(Error::UnknownFixture(name.into()))
        }
    }
}

/// The full named fixture set, in a fixed order.
pub fn fixtures() -> Vec<(&'static str, Triangulation)> {
    vec![
        ("k4", fixture("k4").unwrap()),
        ("b3", fixture("b3").unwrap()),
        ("octahedron", fixture("octahedron").unwrap()),
        ("icosahedron", fixture("icosahedron").unwrap()),
        ("ce10", fixture("ce10").unwrap()),
        ("stacked_4", fixture("stacked_4").unwrap()),
    ]
}
