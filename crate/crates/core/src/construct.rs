//! Nonpositively curved cube complexes whose fundamental groups are Artin
//! groups: the strip complexes `K_n` (odd `n`), the square chains
//! `K_{n,g}` (even `n`), Salvetti complexes, their amalgams along circles,
//! and products with a circle.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::DihedralContext;
use crate::complex::{
    check_npc, default_spanning_tree, extract_presentation, ComplexError, CubeComplex, EdgeRole,
    EdgeUse, ExtractMode, Violation,
};
use crate::graph::{amalgam_plan, ClassifiedEdge, ComponentPlan, ConstructionPlan, DefiningGraph};
use crate::word::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("K_n needs odd n >= 3, got {0}")]
    NotOdd(u32),
    #[error("K_(n,g) needs even n >= 2, got {0}")]
    NotEven(u32),
    #[error("Salvetti complex needs every label to be 2; edge {0}-{1} has {2}")]
    LabelNotTwo(String, String, u32),
    #[error("graph fails the interior/leaf label condition at {0}")]
    ConditionFails(ClassifiedEdge),
    #[error("input complex is not nonpositively curved ({} violations)", .0.len())]
    NotNpc(Vec<Violation>),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Name of the wedge vertex.
pub const BASE: &str = "o";

fn odd_vertex(a: &str, b: &str) -> String {
    format!("v[{a},{b}]")
}
fn odd_t(a: &str, b: &str) -> String {
    format!("t[{a},{b}]")
}
fn odd_e(a: &str, b: &str, i: u32) -> String {
    format!("e[{a},{b},{i}]")
}
fn even_x(s: &str, t: &str) -> String {
    format!("x[{s},{t}]")
}
fn even_y(s: &str, t: &str, j: u32) -> String {
    format!("y[{s},{t},{j}]")
}
fn fibre(z: &str, vertex: &str) -> String {
    format!("{z}[{vertex}]")
}

struct OddNames {
    v1: String,
    a: String,
    b: String,
    t: String,
    e: Box<dyn Fn(u32) -> String>,
}

/// Strip of `n` squares. Top path `T_0 … T_n` spells `aba⋯a`, bottom path
/// `B_0 … B_n` spells `bab⋯b`, with `T_i = v_{i mod 2}` and
/// `B_i = v_{(i+1) mod 2}`. Vertical `i` joins `T_i` and `B_i`; the two
/// sides are both `t`, the inner ones are the internal edges `e_i`. Every
/// vertical is oriented `v_0 → v_1`.
fn add_k_odd(c: &mut CubeComplex, v0: usize, n: u32, names: OddNames) -> Result<(), ComplexError> {
    let v1 = c.add_vertex(names.v1)?;
    let a = c.add_edge(names.a, v0, v1, EdgeRole::Plain)?;
    let b = c.add_edge(names.b, v1, v0, EdgeRole::Plain)?;
    let t = c.add_edge(names.t, v0, v1, EdgeRole::Tree)?;
    let mut vertical = vec![t];
    for i in 1..n {
        vertical.push(c.add_edge((names.e)(i), v0, v1, EdgeRole::Internal)?);
    }
    vertical.push(t);
    // traversal of vertical i from top to bottom
    let down = |i: usize| {
        if i.is_multiple_of(2) {
            EdgeUse::fwd(vertical[i])
        } else {
            EdgeUse::bwd(vertical[i])
        }
    };
    for i in 1..=n as usize {
        let (top, bottom) = if i % 2 == 1 { (a, b) } else { (b, a) };
        c.add_square([
            EdgeUse::fwd(top),
            down(i),
            EdgeUse::bwd(bottom),
            down(i - 1).reversed(),
        ])?;
    }
    Ok(())
}

/// Chain of `n/2` squares `y_{i-1} x ȳ_i x̄` with `y_0 = y_{n/2} = g`.
fn add_k_even(
    c: &mut CubeComplex,
    v: usize,
    n: u32,
    g: usize,
    x_name: String,
    y_name: impl Fn(u32) -> String,
) -> Result<(), ComplexError> {
    let k = n / 2;
    let x = c.add_edge(x_name, v, v, EdgeRole::Plain)?;
    let mut y = vec![g];
    for j in 1..k {
        y.push(c.add_edge(y_name(j), v, v, EdgeRole::Internal)?);
    }
    y.push(g);
    for i in 1..=k as usize {
        c.add_square([
            EdgeUse::fwd(y[i - 1]),
            EdgeUse::fwd(x),
            EdgeUse::bwd(y[i]),
            EdgeUse::bwd(x),
        ])?;
    }
    Ok(())
}

/// Loops for `vertices`, commutator squares for `edges`, and a cube for
/// every clique of size at least three.
fn add_salvetti(
    c: &mut CubeComplex,
    v: usize,
    vertices: &[String],
    edges: &[(String, String)],
) -> Result<BTreeMap<String, usize>, ComplexError> {
    let mut loops = BTreeMap::new();
    for name in vertices {
        loops.insert(
            name.clone(),
            c.add_edge(name.clone(), v, v, EdgeRole::Plain)?,
        );
    }
    let adjacent: BTreeSet<(usize, usize)> = edges
        .iter()
        .map(|(a, b)| {
            let (x, y) = (loops[a], loops[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    for &(x, y) in &adjacent {
        c.add_square([
            EdgeUse::fwd(x),
            EdgeUse::fwd(y),
            EdgeUse::bwd(x),
            EdgeUse::bwd(y),
        ])?;
    }
    let ids: Vec<usize> = loops.values().copied().collect();
    let mut layer: Vec<Vec<usize>> = adjacent.iter().map(|&(x, y)| vec![x, y]).collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for clique in &layer {
            let last = *clique.last().unwrap();
            for &z in ids.iter().filter(|&&z| z > last) {
                if clique.iter().all(|&w| adjacent.contains(&(w, z))) {
                    let mut bigger = clique.clone();
                    bigger.push(z);
                    c.add_cube(&bigger)?;
                    next.push(bigger);
                }
            }
        }
        layer = next;
    }
    Ok(loops)
}

pub fn build_k_odd(n: u32) -> Result<CubeComplex, ConstructError> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(ConstructError::NotOdd(n));
    }
    let mut c = CubeComplex::new();
    let v0 = c.add_vertex("v0")?;
    add_k_odd(
        &mut c,
        v0,
        n,
        OddNames {
            v1: "v1".into(),
            a: "a".into(),
            b: "b".into(),
            t: "t".into(),
            e: Box::new(|i| format!("e{i}")),
        },
    )?;
    Ok(c)
}

/// `K_{n,g}` with generator loop named `g`, the loop `x` and internal loops
/// `y1 … y{n/2-1}`.
pub fn build_k_even(n: u32, g: &str) -> Result<CubeComplex, ConstructError> {
    if n % 2 == 1 || n < 2 {
        return Err(ConstructError::NotEven(n));
    }
    let mut c = CubeComplex::new();
    let v = c.add_vertex("v")?;
    let gl = c.add_edge(g, v, v, EdgeRole::Plain)?;
    add_k_even(&mut c, v, n, gl, "x".into(), |j| format!("y{j}"))?;
    Ok(c)
}

pub fn build_salvetti(g: &DefiningGraph) -> Result<CubeComplex, ConstructError> {
    if let Some((u, v, m)) = g.edges().find(|&(_, _, m)| m != 2) {
        return Err(ConstructError::LabelNotTwo(
            g.name(u).into(),
            g.name(v).into(),
            m,
        ));
    }
    let mut c = CubeComplex::new();
    let v = c.add_vertex(BASE)?;
    let edges: Vec<(String, String)> = g
        .edges()
        .map(|(a, b, _)| (g.name(a).to_string(), g.name(b).to_string()))
        .collect();
    add_salvetti(&mut c, v, g.vertices(), &edges)?;
    Ok(c)
}

pub fn build_for_graph(g: &DefiningGraph) -> Result<CubeComplex, ConstructError> {
    let plan = amalgam_plan(g).map_err(ConstructError::ConditionFails)?;
    build_from_plan(&plan)
}

/// Wedge of the component pieces at the vertex [`BASE`], then the product
/// with a circle if the plan asks for one, then the trailing circles.
pub fn build_from_plan(plan: &ConstructionPlan) -> Result<CubeComplex, ConstructError> {
    let mut c = CubeComplex::new();
    let o = c.add_vertex(BASE)?;
    for piece in &plan.components {
        match piece {
            ComponentPlan::Circle { vertex } => {
                c.add_edge(vertex.clone(), o, o, EdgeRole::Plain)?;
            }
            ComponentPlan::OddEdge { a, b, n } => {
                let (a2, b2) = (a.clone(), b.clone());
                add_k_odd(
                    &mut c,
                    o,
                    *n,
                    OddNames {
                        v1: odd_vertex(a, b),
                        a: a.clone(),
                        b: b.clone(),
                        t: odd_t(a, b),
                        e: Box::new(move |i| odd_e(&a2, &b2, i)),
                    },
                )?;
            }
            ComponentPlan::EvenEdge { a, b, n, generator } => {
                let other = if generator == a { b } else { a };
                let gl = c.add_edge(generator.clone(), o, o, EdgeRole::Plain)?;
                add_k_even(&mut c, o, *n, gl, even_x(generator, other), |j| {
                    even_y(generator, other, j)
                })?;
            }
            ComponentPlan::Amalgam {
                interior,
                interior_edges,
                leaves,
            } => {
                let loops = add_salvetti(&mut c, o, interior, interior_edges)?;
                for leaf in leaves {
                    add_k_even(
                        &mut c,
                        o,
                        leaf.n,
                        loops[&leaf.s],
                        even_x(&leaf.s, &leaf.t),
                        |j| even_y(&leaf.s, &leaf.t, j),
                    )?;
                }
            }
        }
    }
    if let Some(z) = &plan.times_circle {
        c = build_product_with_circle(&c, z)?;
    }
    for v in &plan.wedge_after {
        c.add_edge(v.clone(), o, o, EdgeRole::Plain)?;
    }
    Ok(c)
}

/// `k × S¹`. The fibre loop at vertex 0 is named `z`; at any other vertex
/// `w` it is the internal loop `z[w]`. Each edge gets its side square; each
/// square becomes a Salvetti cube with the fibre when it is a commutator of
/// two loops, and a prism otherwise; each Salvetti cube `C` gets `C ∪ {z}`.
pub fn build_product_with_circle(k: &CubeComplex, z: &str) -> Result<CubeComplex, ConstructError> {
    let violations = check_npc(k);
    if !violations.is_empty() {
        return Err(ConstructError::NotNpc(violations));
    }
    if k.vertex_count() == 0 {
        return Err(ComplexError::Empty.into());
    }
    let mut c = k.clone();
    let fibres: Vec<usize> = (0..k.vertex_count())
        .map(|v| {
            let (name, role) = if v == 0 {
                (z.to_string(), EdgeRole::Plain)
            } else {
                (fibre(z, &k.vertices()[v]), EdgeRole::Internal)
            };
            c.add_edge(name, v, v, role)
        })
        .collect::<Result<_, _>>()?;
    for (i, e) in k.edges().iter().enumerate() {
        c.add_square([
            EdgeUse::fwd(i),
            EdgeUse::fwd(fibres[e.target]),
            EdgeUse::bwd(i),
            EdgeUse::bwd(fibres[e.source]),
        ])?;
    }
    for (si, sq) in k.squares().iter().enumerate() {
        let pair: BTreeSet<usize> = sq.boundary.iter().map(|u| u.edge).collect();
        let pair: Vec<usize> = pair.into_iter().collect();
        let commutator = pair.len() == 2
            && k.edges()[pair[0]].is_loop()
            && k.edges()[pair[1]].is_loop()
            && is_commutator_square(sq.boundary, pair[0], pair[1]);
        if commutator {
            let v = k.edges()[pair[0]].source;
            c.add_cube(&[pair[0], pair[1], fibres[v]])?;
        } else {
            let mut f = [0; 4];
            for (i, u) in sq.boundary.iter().enumerate() {
                f[i] = fibres[k.ends(*u).0];
            }
            c.add_prism(si, f)?;
        }
    }
    let mut cubes: Vec<&Vec<usize>> = k.cubes().iter().map(|cube| &cube.loops).collect();
    cubes.sort_by_key(|l| l.len());
    for loops in cubes {
        let v = k.edges()[loops[0]].source;
        let mut bigger = loops.clone();
        bigger.push(fibres[v]);
        c.add_cube(&bigger)?;
    }
    Ok(c)
}

fn is_commutator_square(b: [EdgeUse; 4], x: usize, y: usize) -> bool {
    let uses: BTreeSet<EdgeUse> = b.iter().copied().collect();
    uses.len() == 4
        && [
            EdgeUse::fwd(x),
            EdgeUse::bwd(x),
            EdgeUse::fwd(y),
            EdgeUse::bwd(y),
        ]
        .iter()
        .all(|u| uses.contains(u))
        && (0..4).all(|i| b[i].edge != b[(i + 1) % 4].edge)
}

/// Image of each generator of an extracted presentation, as a word in the
/// Artin generators (vertex names).
pub fn generator_images(plan: &ConstructionPlan) -> BTreeMap<String, Vec<String>> {
    let mut out = BTreeMap::new();
    let single = |s: &str| vec![s.to_string()];
    for piece in &plan.components {
        match piece {
            ComponentPlan::Circle { vertex } => {
                out.insert(vertex.clone(), single(vertex));
            }
            ComponentPlan::OddEdge { a, b, .. } => {
                out.insert(a.clone(), single(a));
                out.insert(b.clone(), single(b));
            }
            ComponentPlan::EvenEdge {
                a, b, generator, ..
            } => {
                let other = if generator == a { b } else { a };
                out.insert(generator.clone(), single(generator));
                out.insert(
                    even_x(generator, other),
                    vec![generator.clone(), other.clone()],
                );
            }
            ComponentPlan::Amalgam {
                interior, leaves, ..
            } => {
                for v in interior {
                    out.insert(v.clone(), single(v));
                }
                for l in leaves {
                    out.insert(even_x(&l.s, &l.t), vec![l.s.clone(), l.t.clone()]);
                }
            }
        }
    }
    if let Some(z) = &plan.times_circle {
        out.insert(z.clone(), single(z));
    }
    for v in &plan.wedge_after {
        out.insert(v.clone(), single(v));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationCheck {
    pub generators: usize,
    pub artin_generators: usize,
    pub relators: usize,
    pub abelianization: String,
    pub artin_abelianization: String,
    pub abelianization_match: bool,
    /// Relators whose image was shown trivial in the Artin group.
    pub relators_verified: usize,
    pub unverified: Vec<String>,
}

impl PresentationCheck {
    pub fn ok(&self) -> bool {
        self.abelianization_match
            && self.generators == self.artin_generators
            && self.relators_verified == self.relators
    }
}

/// Compare the composite presentation of `c` with the Artin presentation of
/// `g`: equal abelianizations, equal generator counts, and every relator
/// mapped into the Artin group is trivial there. Triviality is decided by
/// dihedral normal forms on the two generators a relator involves, after
/// deleting a central circle generator with zero exponent sum.
pub fn compare_presentations(
    g: &DefiningGraph,
    plan: &ConstructionPlan,
    c: &CubeComplex,
) -> Result<PresentationCheck, ConstructError> {
    let tree = default_spanning_tree(c);
    let p = extract_presentation(c, &tree, ExtractMode::Composite)?;
    let artin = g.presentation();
    let images = generator_images(plan);
    let central = plan.times_circle.as_deref().and_then(|z| g.index(z));
    let mut contexts: BTreeMap<u32, DihedralContext> = BTreeMap::new();
    let mut verified = 0;
    let mut unverified = Vec::new();
    for rel in p.relators() {
        let mut letters = Vec::new();
        let mut mapped = true;
        for l in rel.letters() {
            let Some(image) = images.get(&p.generators()[l.gen]) else {
                mapped = false;
                break;
            };
            let mut w: Vec<Letter> = image
                .iter()
                .map(|s| Letter::pos(g.index(s).expect("image generators are vertices")))
                .collect();
            if l.inverse {
                w.reverse();
                for x in &mut w {
                    *x = x.inv();
                }
            }
            letters.extend(w);
        }
        let ok = mapped && trivial_in_artin(g, Word::from_letters(letters), central, &mut contexts);
        if ok {
            verified += 1;
        } else {
            unverified.push(rel.display_with(p.generators()).to_string());
        }
    }
    let ab = p.abelianization();
    let artin_ab = artin.abelianization();
    Ok(PresentationCheck {
        generators: p.generators().len(),
        artin_generators: artin.generators().len(),
        relators: p.relators().len(),
        abelianization: ab.to_string(),
        artin_abelianization: artin_ab.to_string(),
        abelianization_match: ab == artin_ab,
        relators_verified: verified,
        unverified,
    })
}

fn trivial_in_artin(
    g: &DefiningGraph,
    w: Word,
    central: Option<usize>,
    contexts: &mut BTreeMap<u32, DihedralContext>,
) -> bool {
    let w = match central {
        Some(z) => {
            if w.exponent_sum(z) != 0 {
                return false;
            }
            Word::from_letters(w.letters().iter().copied().filter(|l| l.gen != z).collect())
        }
        None => w,
    };
    let w = w.free_reduce();
    let support: BTreeSet<usize> = w.letters().iter().map(|l| l.gen).collect();
    let support: Vec<usize> = support.into_iter().collect();
    match support.as_slice() {
        [] => true,
        [_] => false,
        [s, t] => match g.label(*s, *t) {
            None => false,
            Some(m) => {
                let ctx = contexts
                    .entry(m)
                    .or_insert_with(|| DihedralContext::new(m).expect("labels are at least 2"));
                let local = w.map_generators(|x| Some(usize::from(x == *t)));
                ctx.equal(&local, &Word::new())
            }
        },
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{is_npc, vertex_link};

    #[test]
    fn k_odd_counts_and_links() {
        let k3 = build_k_odd(3).unwrap();
        assert_eq!(k3.cell_counts(), vec![2, 5, 3]);
        for v in 0..2 {
            assert_eq!(
                vertex_link(&k3, v).unwrap().complete_bipartite(),
                Some((2, 3))
            );
        }
        assert!(is_npc(&k3));
        assert_eq!(build_k_odd(5).unwrap().edge_count(), 7);
        assert!(build_k_odd(4).is_err());
    }

    #[test]
    fn k_odd_three_relator() {
        let k3 = build_k_odd(3).unwrap();
        let t = k3.edge_id("t").unwrap();
        let p = extract_presentation(&k3, &[t], ExtractMode::Composite).unwrap();
        assert_eq!(p.generators(), ["a", "b"]);
        let expect = Word::parse_ascii("abaBAB", &['a', 'b']).unwrap();
        assert_eq!(p.relators().len(), 1);
        assert!(p.relators()[0].cyclically_equivalent(&expect, true), "{p}");
    }

    #[test]
    fn k_even_examples() {
        let k6 = build_k_even(6, "a").unwrap();
        let names: Vec<&str> = k6.edges().iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, ["a", "x", "y1", "y2"]);
        assert_eq!(k6.square_count(), 3);
        assert_eq!(
            vertex_link(&k6, 0).unwrap().complete_bipartite(),
            Some((2, 6))
        );
        let p = extract_presentation(&k6, &[], ExtractMode::Composite).unwrap();
        let expect = p.parse_word("a x^3 a^-1 x^-3").unwrap();
        assert!(p.relators()[0].cyclically_equivalent(&expect, true), "{p}");
        let k2 = build_k_even(2, "a").unwrap();
        assert!(k2.is_salvetti_form());
        assert!(build_k_even(3, "a").is_err());
    }

    #[test]
    fn salvetti_triangle() {
        let g = DefiningGraph::parse(
            "vertex a; vertex b; vertex c; edge a b 2; edge b c 2; edge a c 2",
        )
        .unwrap();
        let s = build_salvetti(&g).unwrap();
        assert_eq!(s.cell_counts(), vec![1, 3, 3, 1]);
        assert!(is_npc(&s));
        let bad = DefiningGraph::parse("vertex a; vertex b; edge a b 3").unwrap();
        assert!(build_salvetti(&bad).is_err());
    }

    #[test]
    fn path_four_six() {
        let g =
            DefiningGraph::parse("vertex a; vertex b; vertex c; edge a b 4; edge b c 6").unwrap();
        let c = build_for_graph(&g).unwrap();
        assert_eq!(c.cell_counts(), vec![1, 6, 5]);
        assert_eq!(c.euler_characteristic(), 0);
        assert!(is_npc(&c));
        let plan = amalgam_plan(&g).unwrap();
        assert!(compare_presentations(&g, &plan, &c).unwrap().ok());
    }

    #[test]
    fn product_then_wedge() {
        let g = DefiningGraph::parse(
            "vertex a; vertex b; vertex c; vertex d; edge a b 3; edge b c 2; edge a c 2",
        )
        .unwrap();
        let v = crate::graph::verdict(&g);
        let plan = v.plan().expect("positive");
        assert_eq!(plan.times_circle.as_deref(), Some("c"));
        assert_eq!(plan.wedge_after, ["d"]);
        let c = build_from_plan(plan).unwrap();
        assert!(is_npc(&c));
        let check = compare_presentations(&g, plan, &c).unwrap();
        assert!(check.ok(), "{check:?}");
    }

    #[test]
    fn product_with_circle() {
        let circle = crate::complex::samples::circle();
        let t = build_product_with_circle(&circle, "z").unwrap();
        assert_eq!(t.cell_counts(), vec![1, 2, 1]);
        let k3 = build_product_with_circle(&build_k_odd(3).unwrap(), "z").unwrap();
        assert!(is_npc(&k3), "{:?}", check_npc(&k3));
        let bad = crate::complex::samples::one_square("aaAA");
        assert!(matches!(
            build_product_with_circle(&bad, "z"),
            Err(ConstructError::NotNpc(_))
        ));
    }
}
