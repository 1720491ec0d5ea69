//! Local rewrites on triangulations.
//!
//! Every operation rebuilds the result through `Triangulation::from_rotation`,
//! so a successful return is always a fully validated triangulation; the
//! rotation bookkeeping below is *derived* from the face-trace convention
//! (directed face `x -> y -> z` means `y` follows `x`'s position... more
//! precisely `next_after(y, x) == z`), and the validation backstops it.

use crate::error::{Error, Result};
use crate::plane_graph::{position_of, Vertex};
use crate::triangulation::{EdgePair, Triangulation, Triple};

/// Result of an edge contraction: the new graph plus the old-to-new vertex
/// map (both contracted endpoints map to the merged vertex).
pub struct Contraction {
    pub graph: Triangulation,
    pub map: Vec<Vertex>,
}

/// Contracts edge `uv` into a single vertex. Only edges whose endpoints
/// have exactly two common neighbors (the two face apexes) are contractible;
/// any further common neighbor would collapse to a double edge.
pub fn contract_edge(g: &Triangulation, u: Vertex, v: Vertex) -> Result<Triangulation> {
    contract_edge_mapped(g, u, v).map(|c| c.graph)
}

pub fn contract_edge_mapped(g: &Triangulation, u: Vertex, v: Vertex) -> Result<Contraction> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let common = g.common_neighbors(u, v);
    if common.len() != 2 {
        return Err(Error::ContractionMultiEdge {
            u,
            v,
            count: common.len(),
        });
    }
    // rot(u) = [v, a_1..a_p], rot(v) = [u, b_1..b_q]; the apexes satisfy
    // a_1 = b_q and a_p = b_1, each kept once in the merged rotation.
    let a = rotate_to_front(g.rotation(u), v);
    let b = rotate_to_front(g.rotation(v), u);
    let (p, q) = (a.len() - 1, b.len() - 1);
    debug_assert_eq!(a[1], b[q]);
    debug_assert_eq!(a[p], b[1]);
    let mut merged: Vec<Vertex> = a[1..].to_vec();
    merged.extend_from_slice(&b[2..q]);

    let n = g.n();
    let mut rotation: Vec<Vec<Vertex>> = Vec::with_capacity(n - 1);
    let map: Vec<Vertex> = (0..n)
        .map(|w| {
            let w = if w == v { u } else { w };
            if w < v {
                w
            } else {
                w - 1
            }
        })
        .collect();
    for w in 0..n {
        if w == v {
            continue;
        }
        let list: Vec<Vertex> = if w == u {
            merged.iter().map(|&x| map[x]).collect()
        } else if common.contains(w) {
            g.rotation(w)
                .iter()
                .filter(|&&x| x != v)
                .map(|&x| map[x])
                .collect()
        } else {
            g.rotation(w).iter().map(|&x| map[x]).collect()
        };
        rotation.push(list);
    }
    let graph = Triangulation::from_rotation(rotation)?;
    Ok(Contraction { graph, map })
}

/// Result of gluing a guest triangulation into a face of a host:
/// `guest_map[w]` is the vertex of `graph` that guest vertex `w` became.
/// Host vertices keep their labels.
pub struct Glued {
    pub graph: Triangulation,
    pub guest_map: Vec<Vertex>,
}

/// Orients a facial triangle: returns `[x, y, z]` (starting at the triple's
/// smallest vertex) such that the directed cycle `x -> y -> z` is the trace
/// orientation of that face.
pub fn directed_face(g: &Triangulation, t: Triple) -> Result<[Vertex; 3]> {
    let [a, b, c] = t.vertices();
    if !g.is_face(t) {
        return Err(Error::NotAFace { a, b, c });
    }
    if g.next_after(b, a) == c {
        Ok([a, b, c])
    } else {
        Ok([a, c, b])
    }
}

fn is_directed_face(g: &Triangulation, f: [Vertex; 3]) -> bool {
    let [x, y, z] = f;
    x != y
        && y != z
        && x != z
        && g.has_edge(x, y)
        && g.has_edge(y, z)
        && g.next_after(y, x) == z
}

/// Glues `guest` (minus the interior of its face `gface`) into face `hface`
/// of `host`. Both faces are given as *directed* triples in trace
/// orientation; writing them `(x, y, z)` and `(a, b, c)`, the boundary
/// identification is `x = a`, `y = c`, `z = b` — orientation-reversing, as
/// gluing two disks along their boundary requires. All interior vertices of
/// `guest` receive fresh labels `host.n()..`.
pub fn subdivide_face(
    host: &Triangulation,
    hface: [Vertex; 3],
    guest: &Triangulation,
    gface: [Vertex; 3],
) -> Result<Glued> {
    if !is_directed_face(host, hface) {
        return Err(Error::NotAFace {
            a: hface[0],
            b: hface[1],
            c: hface[2],
        });
    }
    if !is_directed_face(guest, gface) {
        return Err(Error::NotAFace {
            a: gface[0],
            b: gface[1],
            c: gface[2],
        });
    }
    let [x, y, z] = hface;
    let [a, b, c] = gface;

    // Guest labels -> merged labels.
    let mut guest_map = vec![usize::MAX; guest.n()];
    guest_map[a] = x;
    guest_map[b] = z;
    guest_map[c] = y;
    let mut next = host.n();
    for slot in &mut guest_map {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }

    let mut rotation: Vec<Vec<Vertex>> = host.rotation_lists().to_vec();
    rotation.resize(next, Vec::new());
    for w in 0..guest.n() {
        if w == a || w == b || w == c {
            continue;
        }
        rotation[guest_map[w]] = guest.rotation(w).iter().map(|&t| guest_map[t]).collect();
    }

    // At each shared vertex, open the host's face corner (between the
    // previous and next vertex of the directed host face) and insert the
    // guest's neighbor run between its own co-vertices. The identification
    // pairs x with a, y with c, and z with b; at a guest corner vertex g of
    // the directed face a -> b -> c, the surviving fan runs from the face
    // successor of g (exclusive) to its face predecessor (exclusive).
    let host_order = [x, y, z];
    let guest_order = [a, b, c];
    let guest_partner = [a, c, b];
    for i in 0..3 {
        let s = host_order[i];
        let prev = host_order[(i + 2) % 3];
        let nxt = host_order[(i + 1) % 3];
        let gs = guest_partner[i];
        let gi = position_of(&guest_order, gs);
        let gfrom = guest_order[(gi + 1) % 3];
        let gto = guest_order[(gi + 2) % 3];
        let run: Vec<Vertex> = cyclic_run_between(guest.rotation(gs), gfrom, gto)
            .iter()
            .map(|&t| guest_map[t])
            .collect();
        // Host corner: `nxt` follows `prev` in rot(s); insert the run there.
        let list = &mut rotation[s];
        let ip = position_of(list, prev);
        debug_assert_eq!(list[(ip + 1) % list.len()], nxt);
        let mut new_list = Vec::with_capacity(list.len() + run.len());
        new_list.extend_from_slice(&list[..=ip]);
        new_list.extend_from_slice(&run);
        new_list.extend_from_slice(&list[ip + 1..]);
        *list = new_list;
    }

    let graph = Triangulation::from_rotation(rotation)?;
    Ok(Glued { graph, guest_map })
}

/// Elements of `list` strictly between `from` and `to`, walking cyclically
/// forward from `from`.
fn cyclic_run_between(list: &[Vertex], from: Vertex, to: Vertex) -> Vec<Vertex> {
    let d = list.len();
    let s = position_of(list, from);
    let mut run = Vec::new();
    for k in 1..d {
        let v = list[(s + k) % d];
        if v == to {
            return run;
        }
        run.push(v);
    }
    unreachable!("`to` must appear in the rotation");
}

/// Places one new vertex inside face `t`, joined to all three corners
/// (gluing a tetrahedron). The new vertex is labeled `g.n()`.
pub fn stack_face(g: &Triangulation, t: Triple) -> Result<Triangulation> {
    let hface = directed_face(g, t)?;
    let k4 = Triangulation::from_rotation(vec![
        vec![3, 1, 2],
        vec![3, 2, 0],
        vec![3, 0, 1],
        vec![2, 1, 0],
    ])
    .expect("tetrahedron is valid");
    let gface = directed_face(&k4, Triple::new(0, 1, 2))?;
    Ok(subdivide_face(g, hface, &k4, gface)?.graph)
}

/// Replaces edge `uv` by a new vertex adjacent to `u`, `v` and both face
/// apexes of the edge. The new vertex is labeled `g.n()`.
pub fn subdivide_edge(g: &Triangulation, u: Vertex, v: Vertex) -> Result<Triangulation> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let n = g.n();
    let z = n;
    let w_prev = g.prev_before(u, v);
    let w_next = g.next_after(u, v);
    let mut rotation: Vec<Vec<Vertex>> = g.rotation_lists().to_vec();
    replace_entry(&mut rotation[u], v, z);
    replace_entry(&mut rotation[v], u, z);
    insert_between(&mut rotation[w_prev], u, v, z);
    insert_between(&mut rotation[w_next], u, v, z);
    rotation.push(vec![u, w_prev, v, w_next]);
    Triangulation::from_rotation(rotation)
}

/// Diagonal flip: removes edge `uv` and joins the two face apexes across
/// the resulting quadrilateral. Fails if the apexes are already adjacent
/// (the flip would create a double edge).
pub fn diagonal_flip(g: &Triangulation, u: Vertex, v: Vertex) -> Result<Triangulation> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let (w1, w2) = g.face_apexes(u, v)?;
    debug_assert_ne!(w1, w2, "the two faces at an edge are distinct for n >= 4");
    if g.has_edge(w1, w2) {
        return Err(Error::FlipChordPresent { u, v, w1, w2 });
    }
    let mut rotation: Vec<Vec<Vertex>> = g.rotation_lists().to_vec();
    rotation[u].retain(|&x| x != v);
    rotation[v].retain(|&x| x != u);
    insert_between(&mut rotation[w1], u, v, w2);
    insert_between(&mut rotation[w2], u, v, w1);
    Triangulation::from_rotation(rotation)
}

/// The fully checked flip interface: `remove` must be an edge whose two
/// face apexes are exactly the endpoints of `add`.
pub fn delete_edge_add_edge(
    g: &Triangulation,
    remove: EdgePair,
    add: EdgePair,
) -> Result<Triangulation> {
    let EdgePair(u, v) = remove;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let (w1, w2) = g.face_apexes(u, v)?;
    if EdgePair::new(w1, w2) != add {
        return Err(Error::FlipApexMismatch { u, v, w1, w2 });
    }
    diagonal_flip(g, u, v)
}

fn rotate_to_front(list: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let mut out = list.to_vec();
    let i = position_of(&out, v);
    out.rotate_left(i);
    out
}

fn replace_entry(list: &mut [Vertex], old: Vertex, new: Vertex) {
    let i = position_of(list, old);
    list[i] = new;
}

/// Inserts `z` between the (cyclically consecutive) entries `p` and `q`.
fn insert_between(list: &mut Vec<Vertex>, p: Vertex, q: Vertex, z: Vertex) {
    let ip = position_of(list, p);
    let iq = position_of(list, q);
    let d = list.len();
    if (ip + 1) % d == iq {
        list.insert(ip + 1, z);
    } else {
        debug_assert_eq!((iq + 1) % d, ip, "{p} and {q} must be consecutive");
        list.insert(iq + 1, z);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::are_isomorphic;

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

    /// Triangular bipyramid: rim 0,1,2 and apexes 3,4.
    fn bipyramid3() -> Triangulation {
        Triangulation::from_rotation(vec![
            vec![3, 1, 4, 2],
            vec![3, 2, 4, 0],
            vec![3, 0, 4, 1],
            vec![2, 1, 0],
            vec![0, 1, 2],
        ])
        .unwrap()
    }

    #[test]
    fn contracting_apex_rim_edge_of_bipyramid_gives_k4() {
        let g = bipyramid3();
        let c = contract_edge_mapped(&g, 3, 0).unwrap();
        assert_eq!(c.graph.n(), 4);
        assert!(are_isomorphic(&c.graph, &k4()));
        // 3 and 0 merge; labels above 3 shift down... here v=0 < u=3, so the
        // map collapses 0 into 3 and keeps smaller labels stable.
        assert_eq!(c.map[3], c.map[0]);
    }

    #[test]
    fn contracting_rim_edge_of_bipyramid_is_rejected() {
        // Rim endpoints share the third rim vertex and both apexes.
        let g = bipyramid3();
        assert!(matches!(
            contract_edge(&g, 0, 1),
            Err(Error::ContractionMultiEdge { count: 3, .. })
        ));
    }

    #[test]
    fn contract_requires_an_edge() {
        let g = octahedron();
        assert!(matches!(
            contract_edge(&g, 0, 2),
            Err(Error::NotAnEdge { u: 0, v: 2 })
        ));
    }

    #[test]
    fn contraction_undoes_edge_subdivision() {
        let g = octahedron();
        let h = subdivide_edge(&g, 0, 1).unwrap();
        assert_eq!(h.n(), 7);
        assert_eq!(h.edge_count(), 15);
        assert!(h.has_edge(0, 6) && h.has_edge(1, 6) && !h.has_edge(0, 1));
        let back = contract_edge(&h, 0, 6).unwrap();
        assert!(are_isomorphic(&back, &g));
    }

    #[test]
    fn subdividing_a_k4_edge_gives_the_bipyramid() {
        let h = subdivide_edge(&k4(), 0, 1).unwrap();
        assert_eq!(h.n(), 5);
        assert!(are_isomorphic(&h, &bipyramid3()));
    }

    #[test]
    fn stacking_a_face_adds_a_degree_three_vertex() {
        let g = octahedron();
        let h = stack_face(&g, Triple::new(0, 1, 4)).unwrap();
        assert_eq!(h.n(), 7);
        assert_eq!(h.degree(6), 3);
        assert!(h.has_edge(6, 0) && h.has_edge(6, 1) && h.has_edge(6, 4));
        assert!(!h.is_face(Triple::new(0, 1, 4)));
        assert!(stack_face(&g, Triple::new(0, 1, 2)).is_err());
    }

    #[test]
    fn gluing_keeps_host_labels_and_maps_guest_boundary() {
        let host = octahedron();
        let guest = bipyramid3();
        let hface = directed_face(&host, Triple::new(0, 1, 4)).unwrap();
        let gface = directed_face(&guest, Triple::new(0, 1, 3)).unwrap();
        let glued = subdivide_face(&host, hface, &guest, gface).unwrap();
        // Guest has 5 vertices, 3 shared: two interior vertices are added.
        assert_eq!(glued.graph.n(), 8);
        assert_eq!(glued.guest_map.len(), 5);
        assert_eq!(glued.guest_map[gface[0]], hface[0]);
        assert_eq!(glued.guest_map[gface[1]], hface[2]);
        assert_eq!(glued.guest_map[gface[2]], hface[1]);
        assert!(glued.guest_map.iter().filter(|&&m| m >= 6).count() == 2);
    }

    #[test]
    fn flip_is_involutive_on_the_octahedron() {
        let g = octahedron();
        let h = diagonal_flip(&g, 0, 1).unwrap();
        assert!(!h.has_edge(0, 1));
        assert!(h.has_edge(4, 5));
        assert!(!are_isomorphic(&h, &g));
        let back = diagonal_flip(&h, 4, 5).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn flip_rejects_chorded_quadrilaterals() {
        let g = k4();
        for e in g.edges() {
            assert!(matches!(
                diagonal_flip(&g, e.0, e.1),
                Err(Error::FlipChordPresent { .. })
            ));
        }
    }

    #[test]
    fn checked_flip_validates_the_added_edge() {
        let g = octahedron();
        let ok = delete_edge_add_edge(&g, EdgePair::new(0, 1), EdgePair::new(4, 5)).unwrap();
        assert!(ok.has_edge(4, 5));
        assert!(matches!(
            delete_edge_add_edge(&g, EdgePair::new(0, 1), EdgePair::new(4, 2)),
            Err(Error::FlipApexMismatch { .. })
        ));
    }
}
