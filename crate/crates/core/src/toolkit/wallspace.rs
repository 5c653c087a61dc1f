//! Wallspaces and their dual cube complexes.
//!
//! Text format, one statement per line, `#` comments:
//!
//! ```text
//! points 4
//! wall 0b0011
//! wall 0x5
//! ```
//!
//! A wall is the bipartition {mask, complement}; bit `i` stands for point `i`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use super::{MedianComplex, ToolkitError};

/// Default cap on the number of walls fed to [`sageev_dual`].
pub const DEFAULT_WALL_BOUND: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wallspace {
    points: usize,
    walls: Vec<u128>,
}

fn full(points: usize) -> u128 {
    if points == 128 {
        u128::MAX
    } else {
        (1u128 << points) - 1
    }
}

fn check_wall(points: usize, walls: &[u128], m: u128) -> Result<(), String> {
    let f = full(points);
    if m & !f != 0 {
        return Err(format!("wall {m:#b} mentions points beyond {points}"));
    }
    if m == 0 || m == f {
        return Err("wall has an empty side".into());
    }
    if walls.iter().any(|&x| x == m || x == f ^ m) {
        return Err(format!("wall {m:#b} repeats an earlier wall"));
    }
    Ok(())
}

fn parse_mask(token: &str) -> Option<u128> {
    let t = token.replace('_', "");
    if let Some(h) = t.strip_prefix("0x") {
        u128::from_str_radix(h, 16).ok()
    } else if let Some(b) = t.strip_prefix("0b") {
        u128::from_str_radix(b, 2).ok()
    } else {
        t.parse().ok()
    }
}

impl Wallspace {
    pub fn new(points: usize, walls: Vec<u128>) -> Result<Self, ToolkitError> {
        let err = |message: String| ToolkitError::Wallspace { line: 0, message };
        if !(1..=128).contains(&points) {
            return Err(err(format!("point count {points} outside 1..=128")));
        }
        let mut seen = Vec::new();
        for m in walls {
            check_wall(points, &seen, m).map_err(err)?;
            seen.push(m);
        }
        Ok(Wallspace {
            points,
            walls: seen,
        })
    }

    pub fn parse(text: &str) -> Result<Self, ToolkitError> {
        let mut points: Option<usize> = None;
        let mut walls = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| ToolkitError::Wallspace { line, message };
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let words: Vec<&str> = content.split_whitespace().collect();
            match words.as_slice() {
                ["points", n] => {
                    if points.is_some() {
                        return Err(err("points declared twice".into()));
                    }
                    let n: usize = n
                        .parse()
                        .map_err(|_| err(format!("bad point count {n:?}")))?;
                    if !(1..=128).contains(&n) {
                        return Err(err(format!("point count {n} outside 1..=128")));
                    }
                    points = Some(n);
                }
                ["wall", m] => {
                    let n = points.ok_or_else(|| err("wall before points".into()))?;
                    let m = parse_mask(m).ok_or_else(|| err(format!("bad mask {m:?}")))?;
                    check_wall(n, &walls, m).map_err(err)?;
                    walls.push(m);
                }
                _ => {
                    return Err(err(format!(
                        "expected `points n` or `wall <mask>`, got {content:?}"
                    )))
                }
            }
        }
        let points = points.ok_or(ToolkitError::Wallspace {
            line: 0,
            message: "missing points declaration".into(),
        })?;
        Ok(Wallspace { points, walls })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn walls(&self) -> &[u128] {
        &self.walls
    }

    /// The side of wall `i` selected by `choose_mask`.
    pub fn halfspace(&self, i: usize, choose_mask: bool) -> u128 {
        if choose_mask {
            self.walls[i]
        } else {
            full(self.points) ^ self.walls[i]
        }
    }

    /// Whether walls `i` and `j` cross (all four quadrants nonempty).
    pub fn crosses(&self, i: usize, j: usize) -> bool {
        [true, false].iter().all(|&a| {
            [true, false]
                .iter()
                .all(|&b| self.halfspace(i, a) & self.halfspace(j, b) != 0)
        })
    }
}

impl fmt::Display for Wallspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "points {}", self.points)?;
        for m in &self.walls {
            writeln!(f, "wall {m:#b}")?;
        }
        Ok(())
    }
}

fn consistent(w: &Wallspace, o: u64) -> bool {
    let k = w.walls.len();
    (0..k).all(|i| {
        let hi = w.halfspace(i, o >> i & 1 == 1);
        (i + 1..k).all(|j| hi & w.halfspace(j, o >> j & 1 == 1) != 0)
    })
}

/// Cube complex dual to a wallspace. Vertices are the consistent
/// orientations (pairwise intersecting choices of sides) reached from the
/// principal orientations by single-wall flips, explored breadth first in
/// wall order; edges are single flips. Vertex names list the chosen sides,
/// `1` for the mask side of each wall.
pub fn sageev_dual(w: &Wallspace, bound: usize) -> Result<MedianComplex, ToolkitError> {
    let k = w.walls.len();
    if k > bound || k > 64 {
        return Err(ToolkitError::WallBound {
            walls: k,
            bound: bound.min(64),
        });
    }
    let mut order: Vec<u64> = Vec::new();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut queue = VecDeque::new();
    for p in 0..w.points {
        let o = (0..k).fold(0u64, |acc, i| acc | ((w.walls[i] >> p & 1) as u64) << i);
        if seen.insert(o) {
            order.push(o);
            queue.push_back(o);
        }
    }
    while let Some(o) = queue.pop_front() {
        for i in 0..k {
            let f = o ^ 1 << i;
            if !seen.contains(&f) && consistent(w, f) {
                seen.insert(f);
                order.push(f);
                queue.push_back(f);
            }
        }
    }
    let index: std::collections::HashMap<u64, usize> =
        order.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let mut edges = Vec::new();
    for (a, &o) in order.iter().enumerate() {
        for i in 0..k {
            if let Some(&b) = index.get(&(o ^ 1 << i)) {
                if a < b {
                    edges.push((a, b));
                }
            }
        }
    }
    let names = order
        .iter()
        .map(|&o| {
            if k == 0 {
                "o".to_string()
            } else {
                (0..k)
                    .map(|i| if o >> i & 1 == 1 { '1' } else { '0' })
                    .collect()
            }
        })
        .collect();
    MedianComplex::from_graph(names, &edges)
}
