//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library routine it is used to check.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

pub mod algebra_checks;
pub mod construct_checks;
pub mod toolkit_checks;

use cubartin::complex::{CubeComplex, EdgeUse};
use cubartin::graph::DefiningGraph;
use cubartin::toolkit::MedianComplex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cubartin::toolkit::seed_from_env() ^ salt)
}

// ---- graphs ----

pub const INF: u32 = 0;

/// Graph on `n` vertices named `g0 …` from a label list over pairs
/// `(0,1), (0,2), …, (1,2), …`; label 0 means no edge.
pub fn graph_from_labels(n: usize, labels: &[u32]) -> DefiningGraph {
    let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if labels[k] != INF {
                edges.push((names[i].clone(), names[j].clone(), labels[k]));
            }
            k += 1;
        }
    }
    DefiningGraph::new(&names, &edges).unwrap()
}

/// Graphs on `n` vertices whose interior edges are labeled 2 and whose leaf
/// labels come from `leaf`, one per isomorphism class.
pub fn condition_iii_graphs(n: usize, leaf: &[u32]) -> Vec<DefiningGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let mut deg = vec![0; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let leaves: Vec<usize> = (0..edges.len())
            .filter(|&k| deg[edges[k].0] == 1 || deg[edges[k].1] == 1)
            .collect();
        let combos = leaf.len().pow(leaves.len() as u32);
        for mut c in 0..combos {
            let mut labelled: Vec<(usize, usize, u32)> =
                edges.iter().map(|&(u, v)| (u, v, 2)).collect();
            for &k in &leaves {
                labelled[k].2 = leaf[c % leaf.len()];
                c /= leaf.len();
            }
            let key = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<(usize, usize, u32)> = labelled
                        .iter()
                        .map(|&(u, v, m)| (p[u].min(p[v]), p[u].max(p[v]), m))
                        .collect();
                    e.sort_unstable();
                    e
                })
                .min()
                .unwrap();
            if seen.insert(key) {
                let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
                let e: Vec<(String, String, u32)> = labelled
                    .iter()
                    .map(|&(u, v, m)| (names[u].clone(), names[v].clone(), m))
                    .collect();
                out.push(DefiningGraph::new(&names, &e).unwrap());
            }
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

// ---- links ----

/// Link of `v` as a multigraph on edge ends: `(edge, outgoing)`; one link
/// edge per square corner at `v`.
pub fn corner_graph(
    c: &CubeComplex,
    v: usize,
) -> (Vec<(usize, bool)>, Vec<((usize, bool), (usize, bool))>) {
    let mut ends = Vec::new();
    for (i, e) in c.edges().iter().enumerate() {
        if e.source == v {
            ends.push((i, true));
        }
        if e.target == v {
            ends.push((i, false));
        }
    }
    let arrival = |u: EdgeUse| (u.edge, !u.forward);
    let departure = |u: EdgeUse| (u.edge, u.forward);
    let at = |end: (usize, bool)| {
        let e = &c.edges()[end.0];
        if end.1 {
            e.source
        } else {
            e.target
        }
    };
    let mut corners = Vec::new();
    for sq in c.squares() {
        for i in 0..4 {
            let a = arrival(sq.boundary[i]);
            let d = departure(sq.boundary[(i + 1) % 4]);
            if at(a) == v {
                corners.push((a, d));
            }
        }
    }
    (ends, corners)
}

/// True when some link (of a square complex) has a loop, a 2-cycle from two
/// corners, or a triangle.
pub fn short_link_cycle(c: &CubeComplex) -> bool {
    for v in 0..c.vertex_count() {
        let (_, corners) = corner_graph(c, v);
        let mut count: HashMap<((usize, bool), (usize, bool)), usize> = HashMap::new();
        for &(a, b) in &corners {
            if a == b {
                return true;
            }
            let key = if a < b { (a, b) } else { (b, a) };
            *count.entry(key).or_default() += 1;
        }
        if count.values().any(|&k| k > 1) {
            return true;
        }
        let keys: Vec<_> = count.keys().copied().collect();
        let adj: BTreeSet<_> = keys.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
        for &(a, b) in &keys {
            for &(x, y) in &keys {
                let third = if x == a && y != b {
                    Some(y)
                } else if y == a && x != b {
                    Some(x)
                } else {
                    None
                };
                if let Some(t) = third {
                    if adj.contains(&(b, t)) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Whether a simple graph given by adjacency lists is complete bipartite
/// `K_{p,q}` with `{p, q} = {2, n}`.
pub fn is_k2n(adj: &[BTreeSet<usize>], n: usize) -> bool {
    let v = adj.len();
    if v != n + 2 {
        return false;
    }
    let mut colour = vec![usize::MAX; v];
    colour[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if y == x {
                return false;
            }
            if colour[y] == usize::MAX {
                colour[y] = 1 - colour[x];
                queue.push_back(y);
            } else if colour[y] == colour[x] {
                return false;
            }
        }
    }
    if colour.contains(&usize::MAX) {
        return false;
    }
    let p = colour.iter().filter(|&&c| c == 0).count();
    let q = v - p;
    let edges: usize = adj.iter().map(BTreeSet::len).sum::<usize>() / 2;
    let mut sides = [p, q];
    sides.sort();
    let mut want = [2, n];
    want.sort();
    sides == want && edges == p * q
}

// ---- random square complexes ----

/// A random square complex: 1 to 3 vertices, random edges (loops allowed),
/// squares along random closed 4-paths.
pub fn random_square_complex(rng: &mut impl Rng) -> CubeComplex {
    let mut c = CubeComplex::new();
    let nv = rng.gen_range(1..=3);
    for i in 0..nv {
        c.add_vertex(format!("v{i}")).unwrap();
    }
    let ne = rng.gen_range(1..=5);
    for i in 0..ne {
        let s = rng.gen_range(0..nv);
        let t = rng.gen_range(0..nv);
        c.add_edge(format!("e{i}"), s, t, Default::default())
            .unwrap();
    }
    let uses: Vec<EdgeUse> = (0..ne)
        .flat_map(|e| [EdgeUse::fwd(e), EdgeUse::bwd(e)])
        .collect();
    let nsq = rng.gen_range(0..=4);
    let mut attempts = 0;
    while c.square_count() < nsq && attempts < 200 {
        attempts += 1;
        let mut path = vec![uses[rng.gen_range(0..uses.len())]];
        for _ in 0..3 {
            let here = c.ends(*path.last().unwrap()).1;
            let options: Vec<EdgeUse> = uses
                .iter()
                .copied()
                .filter(|&u| c.ends(u).0 == here)
                .collect();
            path.push(options[rng.gen_range(0..options.len())]);
        }
        if c.ends(path[3]).1 == c.ends(path[0]).0 {
            let _ = c.add_square([path[0], path[1], path[2], path[3]]);
        }
    }
    c
}

// ---- median graphs ----

pub fn bfs_distances(m: &MedianComplex) -> Vec<Vec<usize>> {
    let n = m.vertex_count();
    (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in m.neighbours(x) {
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            d
        })
        .collect()
}

/// Geodesically closed sets: every vertex on a geodesic between two
/// members is a member.
pub fn geodesically_closed(d: &[Vec<usize>], s: &BTreeSet<usize>) -> bool {
    let n = d.len();
    s.iter().all(|&a| {
        s.iter()
            .all(|&b| (0..n).all(|w| d[a][w] + d[w][b] != d[a][b] || s.contains(&w)))
    })
}

/// Smallest geodesically closed set containing `s`.
pub fn brute_hull(d: &[Vec<usize>], s: &[usize]) -> BTreeSet<usize> {
    let n = d.len();
    let mut set: BTreeSet<usize> = s.iter().copied().collect();
    loop {
        let mut grew = false;
        let cur: Vec<usize> = set.iter().copied().collect();
        for &a in &cur {
            for &b in &cur {
                for w in 0..n {
                    if d[a][w] + d[w][b] == d[a][b] && set.insert(w) {
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

/// Edge classes under "opposite in a 4-cycle", from scratch.
pub fn brute_edge_classes(m: &MedianComplex) -> Vec<Vec<usize>> {
    let edges = m.edges();
    let index: HashMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let id = |a: usize, b: usize| index[&(a.min(b), a.max(b))];
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn root(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = root(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let n = m.vertex_count();
    for a in 0..n {
        for &b in m.neighbours(a) {
            for &d in m.neighbours(a) {
                if b >= d {
                    continue;
                }
                for &c in m.neighbours(b) {
                    if c != a && m.neighbours(d).contains(&c) {
                        for (x, y) in [(id(a, b), id(d, c)), (id(a, d), id(b, c))] {
                            let (rx, ry) = (root(&mut parent, x), root(&mut parent, y));
                            parent[rx] = ry;
                        }
                    }
                }
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in 0..edges.len() {
        let r = root(&mut parent, e);
        classes.entry(r).or_default().push(e);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort();
    out
}

/// Two edge classes cross when some 4-cycle uses edges from both.
pub fn brute_crossing(m: &MedianComplex, classes: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let mut class_of = vec![0; m.edges().len()];
    for (i, c) in classes.iter().enumerate() {
        for &e in c {
            class_of[e] = i;
        }
    }
    let k = classes.len();
    let mut cross = vec![vec![false; k]; k];
    let idx = |a: usize, b: usize| m.edge_index(a, b).unwrap();
    for q in m.four_cycles() {
        let [a, b, c, d] = q;
        // a is adjacent to exactly two of the others
        let (p1, p2) = if m.adjacent(a, b) && m.adjacent(a, c) {
            (b, c)
        } else if m.adjacent(a, b) {
            (b, d)
        } else {
            (c, d)
        };
        let (h, l) = (class_of[idx(a, p1)], class_of[idx(a, p2)]);
        cross[h][l] = true;
        cross[l][h] = true;
    }
    cross
}

/// Vertex sides of an edge class: components after deleting its edges.
pub fn brute_sides(m: &MedianComplex, class: &[usize]) -> Vec<usize> {
    let n = m.vertex_count();
    let cut: BTreeSet<(usize, usize)> = class.iter().map(|&e| m.edges()[e]).collect();
    let mut side = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = next;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for &y in m.neighbours(x) {
                if side[y] == usize::MAX && !cut.contains(&(x.min(y), x.max(y))) {
                    side[y] = next;
                    q.push_back(y);
                }
            }
        }
        next += 1;
    }
    side
}

// ---- wallspaces ----

/// Consistent orientations of a wallspace, by exhaustive search.
pub fn brute_orientations(points: usize, walls: &[u128]) -> usize {
    let full = if points == 128 {
        u128::MAX
    } else {
        (1u128 << points) - 1
    };
    let k = walls.len();
    (0u64..1 << k)
        .filter(|&o| {
            let side = |i: usize| {
                if o >> i & 1 == 1 {
                    walls[i]
                } else {
                    full ^ walls[i]
                }
            };
            (0..k).all(|i| (0..k).all(|j| side(i) & side(j) != 0))
        })
        .count()
}

// ---- positive-word oracle ----

/// Rewrite a word over `rank` generators (letters `(gen, inverse)`) as
/// `Δ^-k · P` with `P` positive, using only the spelling of `Δ` as an
/// alternating word (dihedral case).
pub fn dihedral_padded(n: usize, letters: &[(usize, bool)]) -> (usize, Vec<u8>) {
    let tau = |x: u8| if n % 2 == 1 { 1 - x } else { x };
    // Δ = W_x · x where W_x is the alternating word of length n-1 ending
    // before x
    let w_before = |x: u8| -> Vec<u8> {
        let first = if n % 2 == 1 { x } else { 1 - x };
        (0..n - 1)
            .map(|i| if i % 2 == 0 { first } else { 1 - first })
            .collect()
    };
    let mut k = 0;
    let mut p: Vec<u8> = Vec::new();
    for &(g, inv) in letters {
        let g = g as u8;
        if inv {
            // P · x⁻¹ = P Δ⁻¹ W_x = Δ⁻¹ τ(P) W_x
            p = p.into_iter().map(tau).collect();
            p.extend(w_before(g));
            k += 1;
        } else {
            p.push(g);
        }
    }
    (k, p)
}

/// Alternating word of length `n` starting with `a`.
pub fn delta_bytes(n: usize) -> Vec<u8> {
    (0..n).map(|i| (i % 2) as u8).collect()
}
