//! Vertex links and the Gromov link condition.
//!
//! The link of a vertex `v` has one vertex per edge-end at `v`: `e+` for the
//! source end of `e`, `e-` for the target end (a loop contributes both).
//! A square contributes one link edge per corner at `v`, joining the end by
//! which its boundary arrives to the end by which it leaves. Salvetti cubes
//! and prisms contribute higher simplices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::{ComplexError, CubeComplex, EdgeUse};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End {
    pub edge: usize,
    /// `true` for the source end.
    pub outgoing: bool,
}

impl End {
    fn arrival(u: EdgeUse) -> End {
        End {
            edge: u.edge,
            outgoing: !u.forward,
        }
    }

    fn departure(u: EdgeUse) -> End {
        End {
            edge: u.edge,
            outgoing: u.forward,
        }
    }

    pub fn name(self, c: &CubeComplex) -> String {
        format!(
            "{}{}",
            c.edges()[self.edge].name,
            if self.outgoing { '+' } else { '-' }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "cell", content = "index", rename_all = "snake_case")]
pub enum CellRef {
    Square(usize),
    Cube(usize),
    Prism(usize),
}

#[derive(Clone, Debug)]
pub struct LinkComplex {
    pub vertex: usize,
    pub ends: Vec<End>,
    /// Corners of squares, as index pairs into `ends`.
    pub edges: Vec<(usize, usize, CellRef)>,
    /// Corners of 3-cells and higher, as sorted index sets into `ends`.
    pub simplices: Vec<(Vec<usize>, CellRef)>,
}

impl LinkComplex {
    /// Adjacency as sets of neighbours (loops and repeats collapsed).
    pub fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.ends.len()];
        for &(a, b, _) in &self.edges {
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj
    }

    pub fn is_adjacent(&self, a: End, b: End) -> bool {
        let (Some(i), Some(j)) = (self.position(a), self.position(b)) else {
            return false;
        };
        self.edges
            .iter()
            .any(|&(x, y, _)| (x, y) == (i, j) || (x, y) == (j, i))
    }

    pub fn position(&self, e: End) -> Option<usize> {
        self.ends.binary_search(&e).ok()
    }

    /// `Some((p, q))` with `p ≤ q` if the link graph is simple and isomorphic
    /// to the complete bipartite graph `K_{p,q}`.
    pub fn complete_bipartite(&self) -> Option<(usize, usize)> {
        let n = self.ends.len();
        let pairs: BTreeSet<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b, _)| (a.min(b), a.max(b)))
            .collect();
        if pairs.len() != self.edges.len() || pairs.iter().any(|&(a, b)| a == b) || n == 0 {
            return None;
        }
        let adj = self.adjacency();
        let mut side = vec![None; n];
        side[0] = Some(false);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                match side[y] {
                    None => {
                        side[y] = Some(!side[x].unwrap());
                        stack.push(y);
                    }
                    Some(s) if s == side[x].unwrap() => return None,
                    _ => {}
                }
            }
        }
        if side.iter().any(Option::is_none) {
            return None;
        }
        let p = side.iter().filter(|s| **s == Some(false)).count();
        let q = n - p;
        (p * q == pairs.len()).then_some((p.min(q), p.max(q)))
    }
}

pub fn vertex_link(c: &CubeComplex, v: usize) -> Result<LinkComplex, ComplexError> {
    if v >= c.vertex_count() {
        return Err(ComplexError::UnknownVertex(format!("#{v}")));
    }
    let mut ends = Vec::new();
    for (i, e) in c.edges().iter().enumerate() {
        if e.source == v {
            ends.push(End {
                edge: i,
                outgoing: true,
            });
        }
        if e.target == v {
            ends.push(End {
                edge: i,
                outgoing: false,
            });
        }
    }
    ends.sort();
    let idx = |e: End| ends.binary_search(&e).expect("end at this vertex");

    let mut edges = Vec::new();
    for (si, sq) in c.squares().iter().enumerate() {
        for i in 0..4 {
            let (a, b) = (sq.boundary[i], sq.boundary[(i + 1) % 4]);
            let (_, at) = c.ends(a);
            if at == v {
                edges.push((
                    idx(End::arrival(a)),
                    idx(End::departure(b)),
                    CellRef::Square(si),
                ));
            }
        }
    }

    let mut simplices = Vec::new();
    for (ci, cube) in c.cubes().iter().enumerate() {
        if c.edges()[cube.loops[0]].source != v {
            continue;
        }
        let d = cube.loops.len();
        for signs in 0u32..(1 << d) {
            let mut s: Vec<usize> = cube
                .loops
                .iter()
                .enumerate()
                .map(|(k, &e)| {
                    idx(End {
                        edge: e,
                        outgoing: signs >> k & 1 == 1,
                    })
                })
                .collect();
            s.sort_unstable();
            simplices.push((s, CellRef::Cube(ci)));
        }
    }
    for (pi, prism) in c.prisms().iter().enumerate() {
        let sq = c.squares()[prism.square];
        for i in 0..4 {
            let (a, b) = (sq.boundary[i], sq.boundary[(i + 1) % 4]);
            let (_, at) = c.ends(a);
            if at != v {
                continue;
            }
            let z = prism.fibers[(i + 1) % 4];
            for outgoing in [true, false] {
                let mut s = vec![
                    idx(End::arrival(a)),
                    idx(End::departure(b)),
                    idx(End { edge: z, outgoing }),
                ];
                s.sort_unstable();
                simplices.push((s, CellRef::Prism(pi)));
            }
        }
    }
    Ok(LinkComplex {
        vertex: v,
        ends,
        edges,
        simplices,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// A corner joining an edge-end to itself.
    Loop,
    /// Two corners joining the same pair of edge-ends.
    Bigon,
    /// Two higher cells with the same corner simplex.
    RepeatedSimplex,
    /// Pairwise adjacent edge-ends spanning no simplex.
    MissingSimplex,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub vertex: String,
    pub kind: ViolationKind,
    /// Link vertices of the offending cycle or clique.
    pub cycle: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::Loop => "loop",
            ViolationKind::Bigon => "bigon",
            ViolationKind::RepeatedSimplex => "repeated simplex",
            ViolationKind::MissingSimplex => "empty simplex",
        };
        write!(f, "{}: {kind} ({})", self.vertex, self.cycle.join(" "))
    }
}

/// Link-condition check at every vertex. An empty list means the complex is
/// nonpositively curved.
pub fn check_npc(c: &CubeComplex) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in 0..c.vertex_count() {
        let link = vertex_link(c, v).expect("vertex in range");
        link_violations(c, &link, &mut out);
    }
    out
}

pub fn is_npc(c: &CubeComplex) -> bool {
    check_npc(c).is_empty()
}

fn link_violations(c: &CubeComplex, link: &LinkComplex, out: &mut Vec<Violation>) {
    let vname = c.vertices()[link.vertex].clone();
    let names =
        |ids: &[usize]| -> Vec<String> { ids.iter().map(|&i| link.ends[i].name(c)).collect() };

    let mut pair_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(a, b, _) in &link.edges {
        if a == b {
            out.push(Violation {
                vertex: vname.clone(),
                kind: ViolationKind::Loop,
                cycle: names(&[a]),
            });
        } else {
            *pair_count.entry((a.min(b), a.max(b))).or_default() += 1;
        }
    }
    for (&(a, b), &k) in &pair_count {
        if k > 1 {
            out.push(Violation {
                vertex: vname.clone(),
                kind: ViolationKind::Bigon,
                cycle: names(&[a, b]),
            });
        }
    }

    let mut seen = BTreeSet::new();
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (s, _) in &link.simplices {
        if !seen.insert(s.clone()) {
            out.push(Violation {
                vertex: vname.clone(),
                kind: ViolationKind::RepeatedSimplex,
                cycle: names(s),
            });
        }
        // all faces of dimension ≥ 2
        let k = s.len();
        for mask in 1u32..(1 << k) {
            if mask.count_ones() >= 3 {
                faces.insert(
                    (0..k)
                        .filter(|&i| mask >> i & 1 == 1)
                        .map(|i| s[i])
                        .collect(),
                );
            }
        }
    }

    // flag condition: every clique spans a simplex; report minimal failures
    let adj = link.adjacency();
    let n = link.ends.len();
    let mut stack: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for &b in adj[a].range(a + 1..) {
            stack.push(vec![a, b]);
        }
    }
    while let Some(clique) = stack.pop() {
        let last = *clique.last().unwrap();
        for &x in adj[last].range(last + 1..) {
            if clique.iter().all(|&y| adj[y].contains(&x)) {
                let mut bigger = clique.clone();
                bigger.push(x);
                if faces.contains(&bigger) {
                    stack.push(bigger);
                } else {
                    out.push(Violation {
                        vertex: vname.clone(),
                        kind: ViolationKind::MissingSimplex,
                        cycle: names(&bigger),
                    });
                }
            }
        }
    }
}

/// Whether the closed path `circle` is locally convex: at each vertex it
/// passes through, the arrival and departure ends are not joined in the
/// link.
pub fn check_local_convexity(c: &CubeComplex, circle: &[EdgeUse]) -> Result<bool, ComplexError> {
    c.check_closed(circle).map_err(ComplexError::OpenCircle)?;
    let distinct: BTreeSet<usize> = circle.iter().map(|u| u.edge).collect();
    if distinct.len() != circle.len() {
        return Err(ComplexError::OpenCircle("an edge is visited twice".into()));
    }
    let mut links: BTreeMap<usize, LinkComplex> = BTreeMap::new();
    for i in 0..circle.len() {
        let (a, b) = (circle[i], circle[(i + 1) % circle.len()]);
        let (_, v) = c.ends(a);
        let link = match links.entry(v) {
            std::collections::btree_map::Entry::Occupied(o) => o.into_mut(),
            std::collections::btree_map::Entry::Vacant(e) => e.insert(vertex_link(c, v)?),
        };
        if link.is_adjacent(End::arrival(a), End::departure(b)) {
            return Ok(false);
        }
    }
    Ok(true)
}
