//! Combinatorial cube complexes: vertices, directed edges, squares given by
//! closed boundary paths of four edge traversals, and two kinds of 3-cells
//! and higher: Salvetti cubes (cliques of commuting loops at one vertex) and
//! prisms (a square times a circle fibre).

mod io;
mod link;
mod presentation;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use io::{read_complex, write_complex, IoError};
pub use link::{
    check_local_convexity, check_npc, is_npc, vertex_link, End, LinkComplex, Violation,
    ViolationKind,
};
pub use presentation::{default_spanning_tree, extract_presentation, ExtractMode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("invalid name {0:?}")]
    InvalidName(String),
    #[error("square boundary does not close: {0}")]
    OpenBoundary(String),
    #[error("cube {0}: {1}")]
    BadCube(String, String),
    #[error("prism on square {0}: {1}")]
    BadPrism(usize, String),
    #[error("edge set is not a spanning tree: {0}")]
    NotSpanningTree(String),
    #[error("circle is not a closed path: {0}")]
    OpenCircle(String),
    #[error("complex has no vertices")]
    Empty,
}

/// Role an edge plays in presentation extraction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeRole {
    /// A generator.
    #[default]
    Plain,
    /// Preferred for the default spanning tree.
    Tree,
    /// Eliminated in composite-relator mode.
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub role: EdgeRole,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// An edge traversed forwards (source to target) or backwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeUse {
    pub edge: usize,
    pub forward: bool,
}

impl EdgeUse {
    pub fn fwd(edge: usize) -> Self {
        EdgeUse {
            edge,
            forward: true,
        }
    }

    pub fn bwd(edge: usize) -> Self {
        EdgeUse {
            edge,
            forward: false,
        }
    }

    pub fn reversed(self) -> Self {
        EdgeUse {
            edge: self.edge,
            forward: !self.forward,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Square {
    pub boundary: [EdgeUse; 4],
}

/// A `d`-cube (`d ≥ 3`) of a Salvetti complex, spanned by `d` pairwise
/// commuting loops at one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalvettiCube {
    /// Sorted loop edge ids.
    pub loops: Vec<usize>,
}

/// The 3-cell `square × fibre`. `fibers[i]` is the fibre loop at the start
/// vertex of boundary traversal `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Prism {
    pub square: usize,
    pub fibers: [usize; 4],
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CubeComplex {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    squares: Vec<Square>,
    cubes: Vec<SalvettiCube>,
    prisms: Vec<Prism>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && !s.starts_with('-') && !s.chars().any(|c| c.is_whitespace() || c.is_control())
}

impl CubeComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize, ComplexError> {
        let name = name.into();
        if !valid_name(&name) {
            return Err(ComplexError::InvalidName(name));
        }
        if self.vertex_index.contains_key(&name) {
            return Err(ComplexError::DuplicateVertex(name));
        }
        let id = self.vertices.len();
        self.vertex_index.insert(name.clone(), id);
        self.vertices.push(name);
        Ok(id)
    }

    pub fn add_edge(
        &mut self,
        name: impl Into<String>,
        source: usize,
        target: usize,
        role: EdgeRole,
    ) -> Result<usize, ComplexError> {
        let name = name.into();
        if !valid_name(&name) {
            return Err(ComplexError::InvalidName(name));
        }
        if self.edge_index.contains_key(&name) {
            return Err(ComplexError::DuplicateEdge(name));
        }
        for v in [source, target] {
            if v >= self.vertices.len() {
                return Err(ComplexError::UnknownVertex(format!("#{v}")));
            }
        }
        let id = self.edges.len();
        self.edge_index.insert(name.clone(), id);
        self.edges.push(Edge {
            name,
            source,
            target,
            role,
        });
        Ok(id)
    }

    /// Start and end vertex of a traversal.
    pub fn ends(&self, u: EdgeUse) -> (usize, usize) {
        let e = &self.edges[u.edge];
        if u.forward {
            (e.source, e.target)
        } else {
            (e.target, e.source)
        }
    }

    /// Check that a sequence of traversals is a closed path.
    pub fn check_closed(&self, path: &[EdgeUse]) -> Result<(), String> {
        if path.is_empty() {
            return Err("empty path".into());
        }
        for u in path {
            if u.edge >= self.edges.len() {
                return Err(format!("unknown edge #{}", u.edge));
            }
        }
        for i in 0..path.len() {
            let (_, end) = self.ends(path[i]);
            let (start, _) = self.ends(path[(i + 1) % path.len()]);
            if end != start {
                return Err(format!(
                    "{} ends at {} but {} starts at {}",
                    self.format_use(path[i]),
                    self.vertices[end],
                    self.format_use(path[(i + 1) % path.len()]),
                    self.vertices[start]
                ));
            }
        }
        Ok(())
    }

    pub fn add_square(&mut self, boundary: [EdgeUse; 4]) -> Result<usize, ComplexError> {
        self.check_closed(&boundary)
            .map_err(ComplexError::OpenBoundary)?;
        self.squares.push(Square { boundary });
        Ok(self.squares.len() - 1)
    }

    /// Whether some square is a commutator of the loops `a` and `b`, i.e.
    /// uses each of them twice, once in each direction.
    pub fn has_commutator_square(&self, a: usize, b: usize) -> bool {
        self.squares.iter().any(|s| is_commutator(s, a, b))
    }

    pub fn add_cube(&mut self, loops: &[usize]) -> Result<usize, ComplexError> {
        let mut sorted = loops.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let label = || {
            sorted
                .iter()
                .map(|&e| self.edges.get(e).map_or("?", |x| x.name.as_str()))
                .collect::<Vec<_>>()
                .join(",")
        };
        if sorted.len() != loops.len() || sorted.len() < 3 {
            return Err(ComplexError::BadCube(
                label(),
                "needs at least 3 distinct loops".into(),
            ));
        }
        let Some(first) = sorted.first().and_then(|&e| self.edges.get(e)) else {
            return Err(ComplexError::BadCube(label(), "unknown edge".into()));
        };
        let base = first.source;
        for &e in &sorted {
            match self.edges.get(e) {
                Some(x) if x.is_loop() && x.source == base => {}
                _ => {
                    return Err(ComplexError::BadCube(
                        label(),
                        "edges must be loops at one vertex".into(),
                    ))
                }
            }
        }
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                if !self.has_commutator_square(sorted[i], sorted[j]) {
                    return Err(ComplexError::BadCube(
                        label(),
                        format!(
                            "missing square face {}/{}",
                            self.edges[sorted[i]].name, self.edges[sorted[j]].name
                        ),
                    ));
                }
            }
        }
        if sorted.len() > 3 {
            for skip in 0..sorted.len() {
                let face: Vec<usize> = sorted
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &e)| e)
                    .collect();
                if !self.cubes.iter().any(|c| c.loops == face) {
                    return Err(ComplexError::BadCube(
                        label(),
                        "missing codimension-one face".into(),
                    ));
                }
            }
        }
        if self.cubes.iter().any(|c| c.loops == sorted) {
            return Err(ComplexError::BadCube(label(), "duplicate cube".into()));
        }
        self.cubes.push(SalvettiCube { loops: sorted });
        Ok(self.cubes.len() - 1)
    }

    pub fn add_prism(&mut self, square: usize, fibers: [usize; 4]) -> Result<usize, ComplexError> {
        let bad = |m: String| ComplexError::BadPrism(square, m);
        let sq = *self
            .squares
            .get(square)
            .ok_or_else(|| bad("unknown square".into()))?;
        for i in 0..4 {
            let (start, _) = self.ends(sq.boundary[i]);
            let f = self
                .edges
                .get(fibers[i])
                .ok_or_else(|| bad("unknown fibre edge".into()))?;
            if !(f.is_loop() && f.source == start) {
                return Err(bad(format!("fibre {} is not a loop at the corner", f.name)));
            }
        }
        // every side must carry its side-times-fibre square
        for i in 0..4 {
            let u = sq.boundary[i];
            let e = &self.edges[u.edge];
            let (zs, zt) = if u.forward {
                (fibers[i], fibers[(i + 1) % 4])
            } else {
                (fibers[(i + 1) % 4], fibers[i])
            };
            let want = [
                EdgeUse::fwd(u.edge),
                EdgeUse::fwd(zt),
                EdgeUse::bwd(u.edge),
                EdgeUse::bwd(zs),
            ];
            if !self.squares.iter().any(|s| s.boundary == want) {
                return Err(bad(format!("missing side square for edge {}", e.name)));
            }
        }
        self.prisms.push(Prism { square, fibers });
        Ok(self.prisms.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn square_count(&self) -> usize {
        self.squares.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn cubes(&self) -> &[SalvettiCube] {
        &self.cubes
    }

    pub fn prisms(&self) -> &[Prism] {
        &self.prisms
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_id(&self, name: &str) -> Option<usize> {
        self.edge_index.get(name).copied()
    }

    pub fn set_role(&mut self, edge: usize, role: EdgeRole) {
        self.edges[edge].role = role;
    }

    /// Largest cell dimension.
    pub fn dimension(&self) -> usize {
        let cube = self.cubes.iter().map(|c| c.loops.len()).max().unwrap_or(0);
        let prism = if self.prisms.is_empty() { 0 } else { 3 };
        let base = if !self.squares.is_empty() {
            2
        } else if !self.edges.is_empty() {
            1
        } else {
            0
        };
        base.max(cube).max(prism)
    }

    /// `V − E + F − (3-cells) + ⋯`.
    pub fn euler_characteristic(&self) -> i64 {
        let mut chi =
            self.vertices.len() as i64 - self.edges.len() as i64 + self.squares.len() as i64;
        for c in &self.cubes {
            chi += if c.loops.len() % 2 == 0 { 1 } else { -1 };
        }
        chi - self.prisms.len() as i64
    }

    /// Cell counts by dimension.
    pub fn cell_counts(&self) -> Vec<usize> {
        let mut counts = vec![self.vertices.len(), self.edges.len(), self.squares.len()];
        for c in &self.cubes {
            let d = c.loops.len();
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        if !self.prisms.is_empty() {
            if counts.len() <= 3 {
                counts.resize(4, 0);
            }
            counts[3] += self.prisms.len();
        }
        counts
    }

    pub fn format_use(&self, u: EdgeUse) -> String {
        let name = &self.edges[u.edge].name;
        if u.forward {
            name.clone()
        } else {
            format!("-{name}")
        }
    }

    /// Parse `name` or `-name`.
    pub fn parse_use(&self, token: &str) -> Result<EdgeUse, ComplexError> {
        let (forward, name) = match token.strip_prefix('-') {
            Some(rest) => (false, rest),
            None => (true, token),
        };
        let edge = self
            .edge_id(name)
            .ok_or_else(|| ComplexError::UnknownEdge(name.to_string()))?;
        Ok(EdgeUse { edge, forward })
    }

    /// Edge ids of the connected 1-skeleton components, as vertex sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
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
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.source), find(&mut parent, e.target));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// One vertex, and every square a commutator of two distinct loops.
    pub fn is_salvetti_form(&self) -> bool {
        self.vertices.len() == 1
            && self.prisms.is_empty()
            && self.squares.iter().all(|s| {
                let edges: BTreeSet<usize> = s.boundary.iter().map(|u| u.edge).collect();
                let v: Vec<usize> = edges.into_iter().collect();
                v.len() == 2 && is_commutator(s, v[0], v[1])
            })
    }

    /// Loop pairs spanning commutator squares (for Salvetti-form complexes).
    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = BTreeSet::new();
        for s in &self.squares {
            let edges: BTreeSet<usize> = s.boundary.iter().map(|u| u.edge).collect();
            if edges.len() == 2 {
                let v: Vec<usize> = edges.into_iter().collect();
                if is_commutator(s, v[0], v[1]) {
                    out.insert((v[0], v[1]));
                }
            }
        }
        out.into_iter().collect()
    }
}

fn is_commutator(s: &Square, a: usize, b: usize) -> bool {
    if a == b {
        return false;
    }
    let count = |e: usize, fwd: bool| {
        s.boundary
            .iter()
            .filter(|u| u.edge == e && u.forward == fwd)
            .count()
    };
    count(a, true) == 1
        && count(a, false) == 1
        && count(b, true) == 1
        && count(b, false) == 1
        && (0..4).all(|i| s.boundary[i].edge != s.boundary[(i + 1) % 4].edge)
}

impl fmt::Display for CubeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts: Vec<String> = self.cell_counts().iter().map(|c| c.to_string()).collect();
        write!(f, "cube complex with cells [{}]", counts.join(", "))
    }
}

/// Small complexes used in examples and tests.
pub mod samples {
    use super::*;

    /// One vertex, one loop `a`.
    pub fn circle() -> CubeComplex {
        let mut c = CubeComplex::new();
        let v = c.add_vertex("v").unwrap();
        c.add_edge("a", v, v, EdgeRole::Plain).unwrap();
        c
    }

    /// One vertex, loops `a`, `b`, square `a b ā b̄`.
    pub fn torus() -> CubeComplex {
        let mut c = CubeComplex::new();
        let v = c.add_vertex("v").unwrap();
        let a = c.add_edge("a", v, v, EdgeRole::Plain).unwrap();
        let b = c.add_edge("b", v, v, EdgeRole::Plain).unwrap();
        c.add_square([
            EdgeUse::fwd(a),
            EdgeUse::fwd(b),
            EdgeUse::bwd(a),
            EdgeUse::bwd(b),
        ])
        .unwrap();
        c
    }

    /// A single square on four distinct vertices.
    pub fn disc() -> CubeComplex {
        let mut c = CubeComplex::new();
        let v: Vec<usize> = (0..4)
            .map(|i| c.add_vertex(format!("p{i}")).unwrap())
            .collect();
        let e: Vec<usize> = (0..4)
            .map(|i| {
                c.add_edge(format!("e{i}"), v[i], v[(i + 1) % 4], EdgeRole::Plain)
                    .unwrap()
            })
            .collect();
        c.add_square([
            EdgeUse::fwd(e[0]),
            EdgeUse::fwd(e[1]),
            EdgeUse::fwd(e[2]),
            EdgeUse::fwd(e[3]),
        ])
        .unwrap();
        c
    }

    /// One vertex with loops named by the letters of `word`'s alphabet and a
    /// single square spelled by `word` (lowercase forward, uppercase
    /// backward), e.g. `"aaAA"` or `"aaxX"`.
    pub fn one_square(word: &str) -> CubeComplex {
        let mut c = CubeComplex::new();
        let v = c.add_vertex("v").unwrap();
        let mut ids = std::collections::BTreeMap::new();
        for ch in word.chars() {
            let lower = ch.to_ascii_lowercase();
            ids.entry(lower).or_insert_with(|| lower);
        }
        for &ch in ids.keys() {
            c.add_edge(ch.to_string(), v, v, EdgeRole::Plain).unwrap();
        }
        let uses: Vec<EdgeUse> = word
            .chars()
            .map(|ch| {
                let e = c.edge_id(&ch.to_ascii_lowercase().to_string()).unwrap();
                EdgeUse {
                    edge: e,
                    forward: ch.is_ascii_lowercase(),
                }
            })
            .collect();
        c.add_square([uses[0], uses[1], uses[2], uses[3]]).unwrap();
        c
    }
}
