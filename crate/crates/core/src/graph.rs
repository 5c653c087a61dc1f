//! Labeled defining graphs of Artin groups and the cubulation verdict.
//!
//! Vertices are generators; an edge `{s, t}` with label `m ≥ 2` stands for
//! the relation `sts⋯ = tst⋯` (`m` letters each side). A missing edge means
//! `m = ∞`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::word::Presentation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: edge label {label} is below 2")]
    LabelBelowTwo { line: usize, label: u64 },
    #[error("line {line}: loop edge at {vertex:?}")]
    LoopEdge { line: usize, vertex: String },
    #[error("line {line}: unknown vertex {vertex:?}")]
    UnknownVertex { line: usize, vertex: String },
    #[error("line {line}: duplicate edge {u:?} {v:?}")]
    DuplicateEdge { line: usize, u: String, v: String },
    #[error("line {line}: duplicate vertex {vertex:?}")]
    DuplicateVertex { line: usize, vertex: String },
    #[error("invalid graph: {0}")]
    Invalid(String),
}

impl GraphError {
    /// Line number of a parse error, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            GraphError::Syntax { line, .. }
            | GraphError::LabelBelowTwo { line, .. }
            | GraphError::LoopEdge { line, .. }
            | GraphError::UnknownVertex { line, .. }
            | GraphError::DuplicateEdge { line, .. }
            | GraphError::DuplicateVertex { line, .. } => Some(*line),
            GraphError::Invalid(_) => None,
        }
    }
}

/// A simple labeled graph. Vertices are kept in lexicographic order and
/// edges as index pairs `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefiningGraph {
    vertices: Vec<String>,
    edges: BTreeMap<(usize, usize), u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeKind {
    Leaf,
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifiedEdge {
    pub u: String,
    pub v: String,
    pub label: u32,
    pub kind: EdgeKind,
}

impl fmt::Display for ClassifiedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            EdgeKind::Leaf => "leaf",
            EdgeKind::Interior => "interior edge",
        };
        write!(f, "{kind} {}-{} labeled {}", self.u, self.v, self.label)
    }
}

impl DefiningGraph {
    /// Build a graph from names and labeled edges given by name.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, u32)]) -> Result<Self, GraphError> {
        let mut names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::Invalid(format!("duplicate vertex {:?}", w[0])));
        }
        if let Some(bad) = names.iter().find(|n| !valid_name(n)) {
            return Err(GraphError::Invalid(format!("invalid vertex name {bad:?}")));
        }
        let mut g = DefiningGraph {
            vertices: names,
            edges: BTreeMap::new(),
        };
        for (u, v, m) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            if *m < 2 {
                return Err(GraphError::Invalid(format!(
                    "edge {u}-{v} has label {m} < 2"
                )));
            }
            let iu = g
                .index(u)
                .ok_or_else(|| GraphError::Invalid(format!("unknown vertex {u:?}")))?;
            let iv = g
                .index(v)
                .ok_or_else(|| GraphError::Invalid(format!("unknown vertex {v:?}")))?;
            if iu == iv {
                return Err(GraphError::Invalid(format!("loop edge at {u:?}")));
            }
            if g.edges.insert(ordered(iu, iv), *m).is_some() {
                return Err(GraphError::Invalid(format!("duplicate edge {u}-{v}")));
            }
        }
        Ok(g)
    }

    /// Parse the line-oriented text format. `;` separates statements on a
    /// line; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut names: Vec<String> = Vec::new();
        let mut declared = BTreeSet::new();
        let mut raw_edges: Vec<(usize, String, String, u32)> = Vec::new();
        let mut seen_pairs = BTreeSet::new();
        for (i, full) in text.lines().enumerate() {
            let line = i + 1;
            let content = full.split('#').next().unwrap_or("");
            for stmt in content.split(';') {
                let tokens: Vec<&str> = stmt.split_whitespace().collect();
                match tokens.as_slice() {
                    [] => {}
                    ["vertex", name] => {
                        if !valid_name(name) {
                            return Err(GraphError::Syntax {
                                line,
                                message: format!("invalid vertex name {name:?}"),
                            });
                        }
                        if !declared.insert(name.to_string()) {
                            return Err(GraphError::DuplicateVertex {
                                line,
                                vertex: name.to_string(),
                            });
                        }
                        names.push(name.to_string());
                    }
                    ["edge", u, v, label] => {
                        let label: u64 = label.parse().map_err(|_| GraphError::Syntax {
                            line,
                            message: format!("edge label {label:?} is not a decimal integer"),
                        })?;
                        if label < 2 {
                            return Err(GraphError::LabelBelowTwo { line, label });
                        }
                        let label = u32::try_from(label).map_err(|_| GraphError::Syntax {
                            line,
                            message: format!("edge label {label} is too large"),
                        })?;
                        if u == v {
                            return Err(GraphError::LoopEdge {
                                line,
                                vertex: u.to_string(),
                            });
                        }
                        for x in [u, v] {
                            if !declared.contains(*x) {
                                return Err(GraphError::UnknownVertex {
                                    line,
                                    vertex: x.to_string(),
                                });
                            }
                        }
                        let key = if u < v { (*u, *v) } else { (*v, *u) };
                        if !seen_pairs.insert((key.0.to_string(), key.1.to_string())) {
                            return Err(GraphError::DuplicateEdge {
                                line,
                                u: u.to_string(),
                                v: v.to_string(),
                            });
                        }
                        raw_edges.push((line, u.to_string(), v.to_string(), label));
                    }
                    [keyword, ..] if *keyword == "vertex" || *keyword == "edge" => {
                        return Err(GraphError::Syntax {
                            line,
                            message: format!("malformed {keyword} statement {:?}", stmt.trim()),
                        });
                    }
                    [other, ..] => {
                        return Err(GraphError::Syntax {
                            line,
                            message: format!("unknown statement {other:?}"),
                        });
                    }
                }
            }
        }
        let edges: Vec<(String, String, u32)> = raw_edges
            .into_iter()
            .map(|(_, u, v, m)| (u, v, m))
            .collect();
        DefiningGraph::new(&names, &edges)
    }

    /// Canonical text form; parsing it gives back the same graph.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("vertex {v}\n"));
        }
        for (u, v, m) in self.edges() {
            out.push_str(&format!(
                "edge {} {} {m}\n",
                self.vertices[u], self.vertices[v]
            ));
        }
        out
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(name))
            .ok()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    /// Edges `(u, v, label)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// `None` means the pair spans no edge (label ∞).
    pub fn label(&self, u: usize, v: usize) -> Option<u32> {
        self.edges.get(&ordered(u, v)).copied()
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .keys()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(x) = stack.pop() {
                members.push(x);
                for y in self.neighbours(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Induced subgraph on `keep`, which must be sorted.
    pub fn induced(&self, keep: &[usize]) -> DefiningGraph {
        let names: Vec<&str> = keep.iter().map(|&v| self.name(v)).collect();
        let edges: Vec<(&str, &str, u32)> = self
            .edges()
            .filter(|(u, v, _)| keep.contains(u) && keep.contains(v))
            .map(|(u, v, m)| (self.name(u), self.name(v), m))
            .collect();
        DefiningGraph::new(&names, &edges).expect("induced subgraph of a valid graph")
    }

    /// The same graph with every vertex renamed through `f`.
    pub fn renamed(&self, f: impl Fn(&str) -> String) -> Result<DefiningGraph, GraphError> {
        let names: Vec<String> = self.vertices.iter().map(|v| f(v)).collect();
        let edges: Vec<(String, String, u32)> = self
            .edges()
            .map(|(u, v, m)| (names[u].clone(), names[v].clone(), m))
            .collect();
        DefiningGraph::new(&names, &edges)
    }

    /// Disjoint union with an extra isolated vertex.
    pub fn with_isolated_vertex(&self, name: &str) -> Result<DefiningGraph, GraphError> {
        let mut names = self.vertices.clone();
        names.push(name.to_string());
        let edges: Vec<(String, String, u32)> = self
            .edges()
            .map(|(u, v, m)| (self.vertices[u].clone(), self.vertices[v].clone(), m))
            .collect();
        DefiningGraph::new(&names, &edges)
    }

    /// The Artin presentation, generators in vertex order.
    pub fn presentation(&self) -> Presentation {
        let edges: Vec<(usize, usize, u32)> = self.edges().collect();
        Presentation::artin(self.vertices.clone(), &edges)
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl fmt::Display for DefiningGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn classify_edges(g: &DefiningGraph) -> Vec<ClassifiedEdge> {
    g.edges()
        .map(|(u, v, m)| ClassifiedEdge {
            u: g.name(u).to_string(),
            v: g.name(v).to_string(),
            label: m,
            kind: if g.degree(u) == 1 || g.degree(v) == 1 {
                EdgeKind::Leaf
            } else {
                EdgeKind::Interior
            },
        })
        .collect()
}

/// Every component is a vertex, an edge, or has interior edges labeled 2
/// and leaves labeled even. On failure the first offending edge is returned.
pub fn satisfies_condition_iii(g: &DefiningGraph) -> Result<(), ClassifiedEdge> {
    let classified = classify_edges(g);
    for comp in g.components() {
        if comp.len() <= 2 {
            continue;
        }
        for e in &classified {
            let u = g.index(&e.u).expect("edge endpoint");
            if !comp.contains(&u) {
                continue;
            }
            let ok = match e.kind {
                EdgeKind::Interior => e.label == 2,
                EdgeKind::Leaf => e.label % 2 == 0,
            };
            if !ok {
                return Err(e.clone());
            }
        }
    }
    Ok(())
}

/// No spherical triangle and at least one edge.
pub fn is_two_dimensional(g: &DefiningGraph) -> bool {
    g.edge_count() > 0 && spherical_triangle(g).is_none()
}

/// A triangle `{a, b, c}` with `1/m_ab + 1/m_bc + 1/m_ac > 1`.
pub fn spherical_triangle(g: &DefiningGraph) -> Option<[(usize, usize, u32); 3]> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            let Some(p) = g.label(a, b) else { continue };
            for c in b + 1..n {
                let (Some(q), Some(r)) = (g.label(b, c), g.label(a, c)) else {
                    continue;
                };
                // 1/p + 1/q + 1/r > 1  <=>  qr + pr + pq > pqr
                let (p64, q64, r64) = (p as u64, q as u64, r as u64);
                if q64 * r64 + p64 * r64 + p64 * q64 > p64 * q64 * r64 {
                    return Some([(a, b, p), (b, c, q), (a, c, r)]);
                }
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafPiece {
    /// Endpoint in the interior subgraph.
    pub s: String,
    /// Degree-one endpoint.
    pub t: String,
    pub n: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentPlan {
    Circle {
        vertex: String,
    },
    OddEdge {
        a: String,
        b: String,
        n: u32,
    },
    EvenEdge {
        a: String,
        b: String,
        n: u32,
        generator: String,
    },
    Amalgam {
        /// Vertices with at least two neighbours.
        interior: Vec<String>,
        /// Edges among them, all labeled 2.
        interior_edges: Vec<(String, String)>,
        leaves: Vec<LeafPiece>,
    },
}

impl ComponentPlan {
    /// The wedge basepoint generator: least vertex of the component.
    pub fn basepoint(&self) -> &str {
        match self {
            ComponentPlan::Circle { vertex } => vertex,
            ComponentPlan::OddEdge { a, .. } | ComponentPlan::EvenEdge { a, .. } => a,
            ComponentPlan::Amalgam {
                interior, leaves, ..
            } => {
                let mut best = interior[0].as_str();
                for l in leaves {
                    if l.t.as_str() < best {
                        best = &l.t;
                    }
                }
                best
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionPlan {
    /// One entry per component, in wedge order.
    pub components: Vec<ComponentPlan>,
    /// Generator of the extra circle factor, if any.
    pub times_circle: Option<String>,
    /// Circles wedged on after the circle product, one per isolated vertex.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub wedge_after: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    CocompactlyCubulated {
        plan: ConstructionPlan,
        justification: String,
    },
    NotVirtuallyCocompactlyCubulated {
        /// An edge violating the interior/leaf label condition.
        witness: ClassifiedEdge,
        justification: String,
    },
    OutsideClassification {
        justification: String,
    },
}

impl Verdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, Verdict::CocompactlyCubulated { .. })
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Verdict::NotVirtuallyCocompactlyCubulated { .. })
    }

    pub fn plan(&self) -> Option<&ConstructionPlan> {
        match self {
            Verdict::CocompactlyCubulated { plan, .. } => Some(plan),
            _ => None,
        }
    }

    pub fn justification(&self) -> &str {
        match self {
            Verdict::CocompactlyCubulated { justification, .. }
            | Verdict::NotVirtuallyCocompactlyCubulated { justification, .. }
            | Verdict::OutsideClassification { justification } => justification,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::CocompactlyCubulated { .. } => "cocompactly cubulated",
            Verdict::NotVirtuallyCocompactlyCubulated { .. } => {
                "not virtually cocompactly cubulated"
            }
            Verdict::OutsideClassification { .. } => "outside classification",
        }
    }

    /// Names of the results the verdict rests on.
    pub fn citations(&self) -> Vec<&'static str> {
        match self {
            Verdict::CocompactlyCubulated { plan, .. } => {
                if plan.times_circle.is_some() {
                    vec!["three-generator classification", "product with a circle"]
                } else {
                    vec!["two-dimensional classification", "constructive cubulation"]
                }
            }
            Verdict::NotVirtuallyCocompactlyCubulated { justification, .. } => {
                if justification.contains("three generators") {
                    vec!["three-generator classification"]
                } else {
                    vec!["two-dimensional classification"]
                }
            }
            Verdict::OutsideClassification { .. } => vec![],
        }
    }
}

pub fn amalgam_plan(g: &DefiningGraph) -> Result<ConstructionPlan, ClassifiedEdge> {
    satisfies_condition_iii(g)?;
    let mut components = Vec::new();
    for comp in g.components() {
        components.push(component_plan(g, &comp));
    }
    Ok(ConstructionPlan {
        components,
        times_circle: None,
        wedge_after: Vec::new(),
    })
}

fn component_plan(g: &DefiningGraph, comp: &[usize]) -> ComponentPlan {
    match comp {
        [v] => ComponentPlan::Circle {
            vertex: g.name(*v).to_string(),
        },
        [u, v] => {
            let n = g.label(*u, *v).expect("two-vertex component is an edge");
            edge_plan(g.name(*u), g.name(*v), n)
        }
        _ => {
            let interior: Vec<usize> = comp.iter().copied().filter(|&v| g.degree(v) >= 2).collect();
            let mut interior_edges = Vec::new();
            let mut leaves = Vec::new();
            for (u, v, m) in g.edges() {
                if !comp.contains(&u) {
                    continue;
                }
                match (g.degree(u) >= 2, g.degree(v) >= 2) {
                    (true, true) => {
                        interior_edges.push((g.name(u).to_string(), g.name(v).to_string()))
                    }
                    (true, false) => leaves.push(LeafPiece {
                        s: g.name(u).to_string(),
                        t: g.name(v).to_string(),
                        n: m,
                    }),
                    (false, true) => leaves.push(LeafPiece {
                        s: g.name(v).to_string(),
                        t: g.name(u).to_string(),
                        n: m,
                    }),
                    (false, false) => unreachable!(
                        "components with three or more vertices have no isolated edges"
                    ),
                }
            }
            ComponentPlan::Amalgam {
                interior: interior.iter().map(|&v| g.name(v).to_string()).collect(),
                interior_edges,
                leaves,
            }
        }
    }
}

fn edge_plan(a: &str, b: &str, n: u32) -> ComponentPlan {
    if n % 2 == 1 {
        ComponentPlan::OddEdge {
            a: a.to_string(),
            b: b.to_string(),
            n,
        }
    } else {
        ComponentPlan::EvenEdge {
            a: a.to_string(),
            b: b.to_string(),
            n,
            generator: a.to_string(),
        }
    }
}

/// Three vertices where two edges labeled 2 meet at `c` and the remaining
/// pair carries a finite label: `A = A_ab × ⟨c⟩`. Isolated vertices only add
/// free factors and are wedged on as circles.
fn times_circle_plan(g: &DefiningGraph) -> Option<ConstructionPlan> {
    let (core, isolated): (Vec<usize>, Vec<usize>) =
        (0..g.vertex_count()).partition(|&v| g.degree(v) > 0);
    let [x, y, z] = core[..] else {
        return None;
    };
    for (c, a, b) in [(x, y, z), (y, x, z), (z, x, y)] {
        if g.label(a, c) == Some(2) && g.label(b, c) == Some(2) {
            let m = g.label(a, b)?;
            return Some(ConstructionPlan {
                components: vec![edge_plan(g.name(a), g.name(b), m)],
                times_circle: Some(g.name(c).to_string()),
                wedge_after: isolated.iter().map(|&v| g.name(v).to_string()).collect(),
            });
        }
    }
    None
}

pub fn verdict(g: &DefiningGraph) -> Verdict {
    let failure = match amalgam_plan(g) {
        Ok(plan) => {
            return Verdict::CocompactlyCubulated {
                plan,
                justification: "every component is a vertex, an edge, or has all interior edges labeled 2 and all leaves labeled even".into(),
            }
        }
        Err(edge) => edge,
    };
    if let Some(plan) = times_circle_plan(g) {
        let c = plan.times_circle.clone().unwrap_or_default();
        let free = if plan.wedge_after.is_empty() {
            String::new()
        } else {
            format!(
                ", free product with Z for each of {}",
                plan.wedge_after.join(", ")
            )
        };
        return Verdict::CocompactlyCubulated {
            plan,
            justification: format!(
                "three generators with two edges labeled 2 meeting at {c}; the group splits as a dihedral Artin group times Z{free}"
            ),
        };
    }
    let reason = match failure.kind {
        EdgeKind::Interior => format!(
            "interior edge {}-{} is labeled {} (not 2)",
            failure.u, failure.v, failure.label
        ),
        EdgeKind::Leaf => format!(
            "leaf {}-{} has odd label {}",
            failure.u, failure.v, failure.label
        ),
    };
    if is_two_dimensional(g) {
        Verdict::NotVirtuallyCocompactlyCubulated {
            witness: failure,
            justification: format!("two-dimensional and {reason}"),
        }
    } else if g.vertex_count() <= 3 {
        Verdict::NotVirtuallyCocompactlyCubulated {
            witness: failure,
            justification: format!(
                "three generators, fewer than two edges labeled 2, and {reason}"
            ),
        }
    } else {
        Verdict::OutsideClassification {
            justification: format!(
                "{} generators, not two-dimensional, and {reason}",
                g.vertex_count()
            ),
        }
    }
}
