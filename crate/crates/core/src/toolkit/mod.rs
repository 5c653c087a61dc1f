//! Combinatorial geometry of finite CAT(0) cube complexes: hyperplanes,
//! convex hulls, gates, parallel sets, product decompositions, facing
//! triples and cubulation of wallspaces.
//!
//! Every operation works on a [`MedianComplex`], which certifies its input
//! once and keeps the hyperplane data. Vertex sets are sorted index lists.

mod generators;
mod median;
mod wallspace;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

pub use generators::{
    cube, grid, path, random_tree, random_wallspace, seed_from_env, tree_from_parents, tripod,
    DEFAULT_SEED,
};
pub use median::{is_median, is_median_graph, Hyperplane, MedianComplex, MAX_VERTICES};
pub use wallspace::{sageev_dual, Wallspace, DEFAULT_WALL_BOUND};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ToolkitError {
    #[error("not a CAT(0) cube complex: {0}")]
    NotCat0(String),
    #[error("{0} vertices exceed the bound of {1}")]
    TooLarge(usize, usize),
    #[error("empty vertex set")]
    EmptySet,
    #[error("vertex #{0} out of range")]
    VertexOutOfRange(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("vertex set {0} is not convex")]
    NotConvex(String),
    #[error("{walls} walls exceed the bound of {bound}")]
    WallBound { walls: usize, bound: usize },
    #[error("line {line}: {message}")]
    Wallspace { line: usize, message: String },
}

fn normalize(c: &MedianComplex, s: &[usize]) -> Result<Vec<usize>, ToolkitError> {
    if s.is_empty() {
        return Err(ToolkitError::EmptySet);
    }
    if let Some(&v) = s.iter().find(|&&v| v >= c.vertex_count()) {
        return Err(ToolkitError::VertexOutOfRange(v));
    }
    let set: BTreeSet<usize> = s.iter().copied().collect();
    Ok(set.into_iter().collect())
}

/// Resolve vertex names.
pub fn vertex_set(c: &MedianComplex, names: &[&str]) -> Result<Vec<usize>, ToolkitError> {
    let mut out = names
        .iter()
        .map(|n| {
            c.vertex_id(n)
                .ok_or_else(|| ToolkitError::UnknownVertex(n.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Hyperplanes with a vertex of `s` on each side.
pub fn crossing_hyperplanes(c: &MedianComplex, s: &[usize]) -> Vec<usize> {
    (0..c.hyperplanes().len())
        .filter(|&h| {
            let first = c.side(s[0], h);
            s.iter().any(|&v| c.side(v, h) != first)
        })
        .collect()
}

/// Intersection of all halfspaces containing `s`.
pub fn convex_hull(c: &MedianComplex, s: &[usize]) -> Result<Vec<usize>, ToolkitError> {
    let s = normalize(c, s)?;
    let free = crossing_hyperplanes(c, &s);
    let fixed: Vec<usize> = (0..c.hyperplanes().len())
        .filter(|h| !free.contains(h))
        .collect();
    Ok((0..c.vertex_count())
        .filter(|&v| fixed.iter().all(|&h| c.side(v, h) == c.side(s[0], h)))
        .collect())
}

pub fn is_convex(c: &MedianComplex, s: &[usize]) -> Result<bool, ToolkitError> {
    let s = normalize(c, s)?;
    Ok(convex_hull(c, &s)? == s)
}

/// Hyperplanes with `a` on one side and `b` on the other.
pub fn separating_hyperplanes(c: &MedianComplex, a: &[usize], b: &[usize]) -> Vec<usize> {
    (0..c.hyperplanes().len())
        .filter(|&h| {
            let sa = c.side(a[0], h);
            a.iter().all(|&v| c.side(v, h) == sa) && b.iter().all(|&v| c.side(v, h) != sa)
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GateChecks {
    pub v1_convex: bool,
    pub v2_convex: bool,
    pub matching_bijective: bool,
    pub matching_isometric: bool,
    /// Matched pairs are exactly `separation` apart.
    pub geodesics_cross_separating: bool,
    /// hull(V₁ ∪ V₂) is V₁ × I with I the interval between a matched pair:
    /// |V₁|·|I| vertices, hyperplanes those of V₁ plus the separating ones,
    /// each of V₁'s crossing each separating one. I is a path of length Δ
    /// exactly when the separating hyperplanes are pairwise disjoint.
    pub hull_is_product: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GatePair {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub separation: usize,
    /// Nearest-point matching V₁ → V₂.
    pub matching: Vec<(usize, usize)>,
    pub hull: Vec<usize>,
    pub checks: GateChecks,
}

impl GatePair {
    pub fn verified(&self) -> bool {
        let c = &self.checks;
        c.v1_convex
            && c.v2_convex
            && c.matching_bijective
            && c.matching_isometric
            && c.geodesics_cross_separating
            && c.hull_is_product
    }
}

fn set_distance(c: &MedianComplex, v: usize, s: &[usize]) -> usize {
    s.iter()
        .map(|&w| c.distance(v, w))
        .min()
        .expect("nonempty set")
}

pub fn gates(c: &MedianComplex, y1: &[usize], y2: &[usize]) -> Result<GatePair, ToolkitError> {
    let y1 = normalize(c, y1)?;
    let y2 = normalize(c, y2)?;
    if !is_convex(c, &y1)? {
        return Err(ToolkitError::NotConvex("Y1".into()));
    }
    if !is_convex(c, &y2)? {
        return Err(ToolkitError::NotConvex("Y2".into()));
    }
    let closest = |from: &[usize], to: &[usize]| {
        let d: Vec<usize> = from.iter().map(|&v| set_distance(c, v, to)).collect();
        let min = *d.iter().min().unwrap();
        let set: Vec<usize> = from
            .iter()
            .zip(&d)
            .filter(|(_, &x)| x == min)
            .map(|(&v, _)| v)
            .collect();
        (set, min)
    };
    let (v1, delta) = closest(&y1, &y2);
    let (v2, _) = closest(&y2, &y1);
    let separation = separating_hyperplanes(c, &y1, &y2).len();

    let mut checks = GateChecks {
        v1_convex: is_convex(c, &v1)?,
        v2_convex: is_convex(c, &v2)?,
        ..GateChecks::default()
    };
    let mut matching = Vec::new();
    let mut unique = true;
    for &v in &v1 {
        let near: Vec<usize> = v2
            .iter()
            .copied()
            .filter(|&w| c.distance(v, w) == delta)
            .collect();
        unique &= near.len() == 1;
        matching.push((v, near[0]));
    }
    let images: BTreeSet<usize> = matching.iter().map(|&(_, w)| w).collect();
    checks.matching_bijective = unique && images.len() == v2.len() && v1.len() == v2.len();
    checks.matching_isometric = matching.iter().all(|&(a, b)| {
        matching
            .iter()
            .all(|&(x, y)| c.distance(a, x) == c.distance(b, y))
    });
    checks.geodesics_cross_separating = delta == separation;
    let both: Vec<usize> = v1.iter().chain(&v2).copied().collect();
    let hull = convex_hull(c, &both)?;
    let own = crossing_hyperplanes(c, &v1);
    let sep = separating_hyperplanes(c, &y1, &y2);
    let mut expected: BTreeSet<usize> = own.iter().copied().collect();
    expected.extend(&sep);
    let actual: BTreeSet<usize> = crossing_hyperplanes(c, &hull).into_iter().collect();
    let interval = convex_hull(c, &[matching[0].0, matching[0].1])?.len();
    checks.hull_is_product = hull.len() == v1.len() * interval
        && expected == actual
        && own.iter().all(|&h| sep.iter().all(|&k| c.crosses(h, k)));
    Ok(GatePair {
        v1,
        v2,
        separation,
        matching,
        hull,
        checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub holds: bool,
    /// An edge of V₁ whose hyperplane misses V₂.
    pub witness: Option<(usize, usize)>,
    pub edges_checked: usize,
}

/// For every edge of V₁, its dual hyperplane meets V₂.
pub fn check_gate_edge_duality(c: &MedianComplex, gp: &GatePair) -> DualityReport {
    let in_v1: BTreeSet<usize> = gp.v1.iter().copied().collect();
    let mut checked = 0;
    for (e, &(u, v)) in c.edges().iter().enumerate() {
        if !(in_v1.contains(&u) && in_v1.contains(&v)) {
            continue;
        }
        checked += 1;
        let h = c.hyperplane_of_edge(e);
        let first = c.side(gp.v2[0], h);
        if gp.v2.iter().all(|&w| c.side(w, h) == first) {
            return DualityReport {
                holds: false,
                witness: Some((u, v)),
                edges_checked: checked,
            };
        }
    }
    DualityReport {
        holds: true,
        witness: None,
        edges_checked: checked,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParallelDecomposition {
    pub base: Vec<usize>,
    /// The copy of Y⊥ through the first vertex of Y.
    pub orthogonal: Vec<usize>,
    /// Parallel copies of Y, Y itself included, ordered by first vertex.
    pub copies: Vec<Vec<usize>>,
    pub parallel_set: Vec<usize>,
    /// Hyperplanes meeting Y.
    pub base_hyperplanes: Vec<usize>,
    /// Hyperplanes separating parallel copies.
    pub orthogonal_hyperplanes: Vec<usize>,
    /// P_Y is convex and the map P_Y → Y × Y⊥ is a bijection.
    pub product_ok: bool,
    /// The two hyperplane families pairwise cross.
    pub families_cross: bool,
}

/// Two convex subcomplexes are parallel when they meet the same
/// hyperplanes; the copies of Y are the fibres of the projection that
/// forgets those hyperplanes and have as many vertices as Y.
pub fn parallel_set(c: &MedianComplex, y: &[usize]) -> Result<ParallelDecomposition, ToolkitError> {
    let y = normalize(c, y)?;
    if !is_convex(c, &y)? {
        return Err(ToolkitError::NotConvex("Y".into()));
    }
    let hy = crossing_hyperplanes(c, &y);
    let hset: BTreeSet<usize> = hy.iter().copied().collect();
    let hcount = c.hyperplanes().len();
    let outside_key = |v: usize| -> Vec<bool> {
        (0..hcount)
            .filter(|h| !hset.contains(h))
            .map(|h| c.side(v, h))
            .collect()
    };
    let inside_key = |v: usize| -> Vec<bool> { hy.iter().map(|&h| c.side(v, h)).collect() };
    let mut fibres: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
    for v in 0..c.vertex_count() {
        fibres.entry(outside_key(v)).or_default().push(v);
    }
    let y_inside: BTreeSet<Vec<bool>> = y.iter().map(|&v| inside_key(v)).collect();
    let mut copies: Vec<Vec<usize>> = fibres
        .into_values()
        .filter(|f| f.len() == y.len() && f.iter().all(|&v| y_inside.contains(&inside_key(v))))
        .collect();
    copies.sort();
    let mut parallel: Vec<usize> = copies.iter().flatten().copied().collect();
    parallel.sort_unstable();
    let base_key = inside_key(y[0]);
    let orthogonal: Vec<usize> = parallel
        .iter()
        .copied()
        .filter(|&v| inside_key(v) == base_key)
        .collect();
    let orthogonal_hyperplanes = crossing_hyperplanes(c, &orthogonal);
    let product_ok = convex_hull(c, &parallel)? == parallel
        && parallel.len() == y.len() * orthogonal.len()
        && copies.len() == orthogonal.len();
    let families_cross = hy
        .iter()
        .all(|&h| orthogonal_hyperplanes.iter().all(|&k| c.crosses(h, k)));
    Ok(ParallelDecomposition {
        base: y,
        orthogonal,
        copies,
        parallel_set: parallel,
        base_hyperplanes: hy,
        orthogonal_hyperplanes,
        product_ok,
        families_cross,
    })
}

#[derive(Clone, Debug)]
pub struct ProductPartition {
    /// Classes of hyperplane ids, ordered by smallest id.
    pub classes: Vec<Vec<usize>>,
    /// One factor per class; factor vertices are the distinct restrictions
    /// of vertices to the class.
    pub factors: Vec<MedianComplex>,
    /// The product of the factor vertex counts equals the vertex count.
    pub product_ok: bool,
}

/// Finest partition of the hyperplanes with distinct classes pairwise
/// crossing: components of the non-crossing graph.
pub fn product_decompose(c: &MedianComplex) -> ProductPartition {
    let hcount = c.hyperplanes().len();
    let mut class = vec![usize::MAX; hcount];
    let mut classes = Vec::new();
    for start in 0..hcount {
        if class[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![start];
        class[start] = id;
        let mut i = 0;
        while i < members.len() {
            let h = members[i];
            for k in 0..hcount {
                if k != h && class[k] == usize::MAX && !c.crosses(h, k) {
                    class[k] = id;
                    members.push(k);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        classes.push(members);
    }
    let mut factors = Vec::new();
    for members in &classes {
        let mut restrictions: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
        for v in 0..c.vertex_count() {
            let key: Vec<bool> = members.iter().map(|&h| c.side(v, h)).collect();
            let next = restrictions.len();
            restrictions.entry(key).or_insert(next);
        }
        let keys: Vec<Vec<bool>> = {
            let mut k: Vec<(usize, Vec<bool>)> =
                restrictions.iter().map(|(k, &i)| (i, k.clone())).collect();
            k.sort();
            k.into_iter().map(|(_, k)| k).collect()
        };
        let names: Vec<String> = keys
            .iter()
            .map(|k| k.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect();
        let mut edges = Vec::new();
        for i in 0..keys.len() {
            for j in i + 1..keys.len() {
                if keys[i].iter().zip(&keys[j]).filter(|(a, b)| a != b).count() == 1 {
                    edges.push((i, j));
                }
            }
        }
        factors.push(
            MedianComplex::from_graph(names, &edges).expect("factors of median graphs are median"),
        );
    }
    let product: usize = factors.iter().map(|f| f.vertex_count()).product();
    ProductPartition {
        product_ok: product == c.vertex_count(),
        classes,
        factors,
    }
}

/// Side of `h` containing the hyperplane `k` (which must not cross `h`).
fn side_of(c: &MedianComplex, h: usize, k: usize) -> bool {
    let (u, _) = c.edges()[c.hyperplanes()[k].edges[0]];
    c.side(u, h)
}

/// Three pairwise disjoint hyperplanes, none separating the other two;
/// the lexicographically first such triple.
pub fn has_facing_triple(c: &MedianComplex) -> Option<[usize; 3]> {
    let hcount = c.hyperplanes().len();
    for a in 0..hcount {
        for b in a + 1..hcount {
            if c.crosses(a, b) {
                continue;
            }
            for d in b + 1..hcount {
                if c.crosses(a, d) || c.crosses(b, d) {
                    continue;
                }
                let separates = |h: usize, x: usize, y: usize| side_of(c, h, x) != side_of(c, h, y);
                if !separates(a, b, d) && !separates(b, a, d) && !separates(d, a, b) {
                    return Some([a, b, d]);
                }
            }
        }
    }
    None
}

/// Vertex names of a set, for reports.
pub fn names_of(c: &MedianComplex, s: &[usize]) -> Vec<String> {
    s.iter().map(|&v| c.names()[v].clone()).collect()
}
