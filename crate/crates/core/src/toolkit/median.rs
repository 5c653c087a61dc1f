//! Certified median graphs, i.e. 1-skeleta of finite CAT(0) cube complexes,
//! with their hyperplanes. Cubes are implicit: every cube subgraph of the
//! 1-skeleton is filled.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::ToolkitError;
use crate::complex::{CubeComplex, EdgeRole, EdgeUse};

/// Largest vertex count accepted for certification.
pub const MAX_VERTICES: usize = 2000;

/// Fixed-width bit vector over hyperplane ids.
pub(crate) type Sig = Box<[u64]>;

pub(crate) fn bit(s: &[u64], i: usize) -> bool {
    s[i / 64] >> (i % 64) & 1 == 1
}

pub(crate) fn dist(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x ^ y).count_ones() as usize)
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyperplane {
    pub id: usize,
    /// Dual edges, as indices into [`MedianComplex::edges`].
    pub edges: Vec<usize>,
    /// The halfspace containing vertex 0.
    pub minus: Vec<usize>,
    pub plus: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct MedianComplex {
    names: Vec<String>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    edge_hyperplane: Vec<usize>,
    hyperplanes: Vec<Hyperplane>,
    sig: Vec<Sig>,
    sig_index: HashMap<Sig, usize>,
    crossing: Vec<Vec<bool>>,
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let next = p[y];
        p[y] = r;
        y = next;
    }
    r
}

impl MedianComplex {
    /// Certify a graph as a median graph and compute its hyperplanes.
    pub fn from_graph(
        names: Vec<String>,
        edge_list: &[(usize, usize)],
    ) -> Result<Self, ToolkitError> {
        let n = names.len();
        if n == 0 {
            return Err(ToolkitError::NotCat0("no vertices".into()));
        }
        if n > MAX_VERTICES {
            return Err(ToolkitError::TooLarge(n, MAX_VERTICES));
        }
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(ToolkitError::NotCat0(format!(
                    "edge ({u},{v}) out of range"
                )));
            }
            if u == v {
                return Err(ToolkitError::NotCat0(format!("loop at {}", names[u])));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(ToolkitError::NotCat0("multiple edges".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let edge_id = |u: usize, v: usize| edges.binary_search(&(u.min(v), u.max(v))).ok();

        // opposite edges of 4-cycles
        let mut parent: Vec<usize> = (0..edges.len()).collect();
        for u in 0..n {
            for (i, &v) in adj[u].iter().enumerate() {
                for &x in &adj[u][i + 1..] {
                    for &w in &adj[v] {
                        if w != u && adj[x].binary_search(&w).is_ok() {
                            let pairs = [
                                (edge_id(u, v).unwrap(), edge_id(x, w).unwrap()),
                                (edge_id(u, x).unwrap(), edge_id(v, w).unwrap()),
                            ];
                            for (a, b) in pairs {
                                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                                if ra != rb {
                                    parent[ra.max(rb)] = ra.min(rb);
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut class_of_root: HashMap<usize, usize> = HashMap::new();
        let mut edge_hyperplane = vec![0; edges.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for e in 0..edges.len() {
            let r = find(&mut parent, e);
            let id = *class_of_root.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(e);
            edge_hyperplane[e] = id;
        }

        // connectivity
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(ToolkitError::NotCat0(format!(
                "disconnected at {}",
                names[v]
            )));
        }

        let words = classes.len().div_ceil(64).max(1);
        let mut sig: Vec<Vec<u64>> = vec![vec![0; words]; n];
        let mut hyperplanes = Vec::new();
        for (h, class) in classes.iter().enumerate() {
            // split along the class
            let mut side = vec![usize::MAX; n];
            let mut parts = 0;
            for start in 0..n {
                if side[start] != usize::MAX {
                    continue;
                }
                side[start] = parts;
                let mut queue = VecDeque::from([start]);
                while let Some(x) = queue.pop_front() {
                    for &y in &adj[x] {
                        if side[y] == usize::MAX && edge_hyperplane[edge_id(x, y).unwrap()] != h {
                            side[y] = parts;
                            queue.push_back(y);
                        }
                    }
                }
                parts += 1;
            }
            if parts != 2 || class.iter().any(|&e| side[edges[e].0] == side[edges[e].1]) {
                return Err(ToolkitError::NotCat0(format!(
                    "hyperplane {h} does not split the vertices into two halfspaces"
                )));
            }
            let (mut minus, mut plus) = (Vec::new(), Vec::new());
            for v in 0..n {
                if side[v] == 0 {
                    minus.push(v);
                } else {
                    plus.push(v);
                    sig[v][h / 64] |= 1 << (h % 64);
                }
            }
            hyperplanes.push(Hyperplane {
                id: h,
                edges: class.clone(),
                minus,
                plus,
            });
        }
        let sig: Vec<Sig> = sig.into_iter().map(Vec::into_boxed_slice).collect();

        // isometric embedding into the cube
        for s in 0..n {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            for t in s + 1..n {
                if d[t] != dist(&sig[s], &sig[t]) {
                    return Err(ToolkitError::NotCat0(format!(
                        "distance {}–{} is {} but {} hyperplanes separate them",
                        names[s],
                        names[t],
                        d[t],
                        dist(&sig[s], &sig[t])
                    )));
                }
            }
        }

        let mut sig_index = HashMap::with_capacity(n);
        for (v, s) in sig.iter().enumerate() {
            sig_index.insert(s.clone(), v);
        }

        // majority vote of every triple is a vertex
        let mut buf = vec![0u64; words];
        for u in 0..n {
            for v in u + 1..n {
                for w in v + 1..n {
                    for k in 0..words {
                        let (a, b, c) = (sig[u][k], sig[v][k], sig[w][k]);
                        buf[k] = (a & b) | (b & c) | (a & c);
                    }
                    if !sig_index.contains_key(buf.as_slice()) {
                        return Err(ToolkitError::NotCat0(format!(
                            "{}, {}, {} have no median",
                            names[u], names[v], names[w]
                        )));
                    }
                }
            }
        }

        let hcount = hyperplanes.len();
        let mut quadrants = vec![vec![0u8; hcount]; hcount];
        for s in &sig {
            for h in 0..hcount {
                let bh = bit(s, h) as u8;
                for k in h + 1..hcount {
                    quadrants[h][k] |= 1 << (bh * 2 + bit(s, k) as u8);
                }
            }
        }
        let mut crossing = vec![vec![false; hcount]; hcount];
        for h in 0..hcount {
            for k in h + 1..hcount {
                let c = quadrants[h][k] == 0b1111;
                crossing[h][k] = c;
                crossing[k][h] = c;
            }
        }

        Ok(MedianComplex {
            names,
            adj,
            edges,
            edge_hyperplane,
            hyperplanes,
            sig,
            sig_index,
            crossing,
        })
    }

    /// Certify the 2-skeleton of a cube complex: simple 1-skeleton, squares
    /// exactly the 4-cycles, no higher cells, median 1-skeleton.
    pub fn from_cube_complex(c: &CubeComplex) -> Result<Self, ToolkitError> {
        if c.vertex_count() > MAX_VERTICES {
            return Err(ToolkitError::TooLarge(c.vertex_count(), MAX_VERTICES));
        }
        if !c.cubes().is_empty() || !c.prisms().is_empty() {
            return Err(ToolkitError::NotCat0(
                "Salvetti cubes and prisms need loops".into(),
            ));
        }
        let edges: Vec<(usize, usize)> = c.edges().iter().map(|e| (e.source, e.target)).collect();
        let m = MedianComplex::from_graph(c.vertices().to_vec(), &edges)?;
        let mut filled: HashMap<[usize; 4], usize> = HashMap::new();
        for sq in c.squares() {
            let mut verts: Vec<usize> = sq.boundary.iter().map(|&u| c.ends(u).0).collect();
            verts.sort_unstable();
            let key = [verts[0], verts[1], verts[2], verts[3]];
            if verts.windows(2).any(|w| w[0] == w[1]) {
                return Err(ToolkitError::NotCat0("square with repeated vertex".into()));
            }
            *filled.entry(key).or_default() += 1;
        }
        let cycles = m.four_cycles();
        if filled.values().any(|&k| k > 1)
            || filled.len() != cycles.len()
            || cycles.iter().any(|q| !filled.contains_key(q))
        {
            return Err(ToolkitError::NotCat0(
                "squares are not exactly the 4-cycles".into(),
            ));
        }
        Ok(m)
    }

    /// Vertex sets of all 4-cycles, sorted.
    pub fn four_cycles(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        let n = self.names.len();
        for u in 0..n {
            for (i, &v) in self.adj[u].iter().enumerate() {
                for &x in &self.adj[u][i + 1..] {
                    for &w in &self.adj[v] {
                        if w > u && self.adj[x].binary_search(&w).is_ok() && v > u && x > u {
                            let mut q = [u, v, w, x];
                            q.sort_unstable();
                            out.push(q);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The 2-skeleton as a cube complex: edges `e{i}` oriented from the
    /// smaller vertex id, one square per 4-cycle.
    pub fn to_square_complex(&self) -> CubeComplex {
        let mut c = CubeComplex::new();
        for name in &self.names {
            c.add_vertex(name.clone()).expect("distinct vertex names");
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            c.add_edge(format!("e{i}"), u, v, EdgeRole::Plain)
                .expect("fresh edge names");
        }
        let edge_use = |a: usize, b: usize| {
            let e = self.edge_index(a, b).expect("cycle edge");
            if self.edges[e].0 == a {
                EdgeUse::fwd(e)
            } else {
                EdgeUse::bwd(e)
            }
        };
        for q in self.four_cycles() {
            // q[0] is adjacent to two of the others; order the cycle
            let [a, b, c2, d] = q;
            let (p1, opp, p2) = if self.adjacent(a, b) && self.adjacent(a, c2) {
                (b, d, c2)
            } else if self.adjacent(a, b) {
                (b, c2, d)
            } else {
                (c2, b, d)
            };
            c.add_square([
                edge_use(a, p1),
                edge_use(p1, opp),
                edge_use(opp, p2),
                edge_use(p2, a),
            ])
            .expect("4-cycle closes");
        }
        c
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane_of_edge(&self, e: usize) -> usize {
        self.edge_hyperplane[e]
    }

    pub fn crosses(&self, h: usize, k: usize) -> bool {
        self.crossing[h][k]
    }

    /// Whether `v` lies in the plus halfspace of `h`.
    pub fn side(&self, v: usize, h: usize) -> bool {
        bit(&self.sig[v], h)
    }

    /// Combinatorial distance (number of separating hyperplanes).
    pub fn distance(&self, u: usize, v: usize) -> usize {
        dist(&self.sig[u], &self.sig[v])
    }

    /// The median of three vertices.
    pub fn median(&self, u: usize, v: usize, w: usize) -> usize {
        let s: Vec<u64> = (0..self.sig[u].len())
            .map(|k| {
                let (a, b, c) = (self.sig[u][k], self.sig[v][k], self.sig[w][k]);
                (a & b) | (b & c) | (a & c)
            })
            .collect();
        self.sig_index[s.as_slice()]
    }

    /// Cartesian product of two median graphs; vertex `(u, v)` is named
    /// `u*v` and has index `u * other.n + v`.
    pub fn cartesian_product(&self, other: &MedianComplex) -> Result<MedianComplex, ToolkitError> {
        let m = other.vertex_count();
        let mut names = Vec::new();
        for a in &self.names {
            for b in &other.names {
                names.push(format!("{a}*{b}"));
            }
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            for w in 0..m {
                edges.push((u * m + w, v * m + w));
            }
        }
        for &(u, v) in &other.edges {
            for w in 0..self.vertex_count() {
                edges.push((w * m + u, w * m + v));
            }
        }
        MedianComplex::from_graph(names, &edges)
    }
}

/// Whether the 1-skeleton of `c` is a median graph and its squares are
/// exactly its 4-cycles.
pub fn is_median(c: &CubeComplex) -> Result<bool, ToolkitError> {
    match MedianComplex::from_cube_complex(c) {
        Ok(_) => Ok(true),
        Err(ToolkitError::TooLarge(n, max)) => Err(ToolkitError::TooLarge(n, max)),
        Err(_) => Ok(false),
    }
}

/// Whether a simple graph is a median graph.
pub fn is_median_graph(n: usize, edges: &[(usize, usize)]) -> Result<bool, ToolkitError> {
    let names = (0..n).map(|i| i.to_string()).collect();
    match MedianComplex::from_graph(names, edges) {
        Ok(_) => Ok(true),
        Err(ToolkitError::TooLarge(n, max)) => Err(ToolkitError::TooLarge(n, max)),
        Err(_) => Ok(false),
    }
}
