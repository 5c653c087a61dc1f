//! Fundamental-group presentations of cube complexes.

use std::collections::BTreeSet;

use super::{ComplexError, CubeComplex, EdgeRole};
use crate::word::{Letter, Presentation, Word};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ExtractMode {
    /// One relator per square.
    #[default]
    Plain,
    /// Additionally eliminate every internal edge, in edge order, through
    /// the shortest relator containing it once. Chains of squares glued
    /// along internal edges merge into one composite relator.
    Composite,
}

/// Spanning tree of the 1-skeleton, preferring `Tree` edges, then plain
/// ones, then internal ones (each group in edge order).
pub fn default_spanning_tree(c: &CubeComplex) -> Vec<usize> {
    let mut order: Vec<usize> = (0..c.edge_count()).collect();
    order.sort_by_key(|&e| {
        let rank = match c.edges()[e].role {
            EdgeRole::Tree => 0,
            EdgeRole::Plain => 1,
            EdgeRole::Internal => 2,
        };
        (rank, e)
    });
    let mut parent: Vec<usize> = (0..c.vertex_count()).collect();
    let mut tree = Vec::new();
    for e in order {
        let edge = &c.edges()[e];
        let (a, b) = (
            find(&mut parent, edge.source),
            find(&mut parent, edge.target),
        );
        if a != b {
            parent[a.max(b)] = a.min(b);
            tree.push(e);
        }
    }
    tree.sort_unstable();
    tree
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

fn check_spanning_tree(c: &CubeComplex, tree: &[usize]) -> Result<BTreeSet<usize>, ComplexError> {
    let bad = |m: String| ComplexError::NotSpanningTree(m);
    if c.vertex_count() == 0 {
        return Err(ComplexError::Empty);
    }
    let set: BTreeSet<usize> = tree.iter().copied().collect();
    if set.len() != tree.len() {
        return Err(bad("repeated edge".into()));
    }
    let mut parent: Vec<usize> = (0..c.vertex_count()).collect();
    for &e in &set {
        let edge = c
            .edges()
            .get(e)
            .ok_or_else(|| bad(format!("unknown edge #{e}")))?;
        let (a, b) = (
            find(&mut parent, edge.source),
            find(&mut parent, edge.target),
        );
        if a == b {
            return Err(bad(format!("edge {} closes a cycle", edge.name)));
        }
        parent[a.max(b)] = a.min(b);
    }
    if set.len() + 1 != c.vertex_count() {
        return Err(bad(format!(
            "{} edges cannot span {} vertices",
            set.len(),
            c.vertex_count()
        )));
    }
    Ok(set)
}

pub fn extract_presentation(
    c: &CubeComplex,
    tree: &[usize],
    mode: ExtractMode,
) -> Result<Presentation, ComplexError> {
    let tree = check_spanning_tree(c, tree)?;
    let mut generator_of = vec![None; c.edge_count()];
    let mut names = Vec::new();
    let mut internal = Vec::new();
    for (i, e) in c.edges().iter().enumerate() {
        if !tree.contains(&i) {
            generator_of[i] = Some(names.len());
            names.push(e.name.clone());
            internal.push(e.role == EdgeRole::Internal);
        }
    }
    let relators: Vec<Word> = c
        .squares()
        .iter()
        .map(|sq| {
            sq.boundary
                .iter()
                .filter_map(|u| {
                    generator_of[u.edge].map(|g| Letter {
                        gen: g,
                        inverse: !u.forward,
                    })
                })
                .collect::<Word>()
        })
        .collect();
    let mut p = Presentation::new(names, relators).expect("generators cover all non-tree edges");
    if mode == ExtractMode::Composite {
        let internal_names: Vec<String> = p
            .generators()
            .iter()
            .zip(&internal)
            .filter(|(_, &i)| i)
            .map(|(n, _)| n.clone())
            .collect();
        // a generator may only become eliminable after others are gone
        loop {
            let mut progress = false;
            for name in &internal_names {
                if let Some(g) = p.generator_index(name) {
                    progress |= p.eliminate_generator(g);
                }
            }
            if !progress {
                break;
            }
        }
    }
    Ok(p)
}
