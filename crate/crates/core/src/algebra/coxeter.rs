//! Finite Coxeter groups as explicit multiplication-by-generator tables.
//!
//! Two sources feed the same table builder: the combinatorial model of the
//! dihedral group `I2(n)` (elements are alternating words), and the
//! geometric reflection representation of the rank-3 groups with labels
//! `(m_ab, m_bc, m_ac) = (3, 2, m)`, `m ∈ {3, 4, 5}`, computed exactly in
//! `Z[θ]` where `θ = 2cos(π/m)`.

use std::collections::HashMap;
use std::hash::Hash;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("dihedral label must be at least 2, got {0}")]
    DihedralLabel(u32),
    #[error("rank-3 label m_ac must be 3, 4 or 5, got {0}")]
    SphericalLabel(u32),
}

/// Element of `Z[θ]` with `θ² = p + qθ`, stored as `a + bθ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub a: i64,
    pub b: i64,
}

/// The ring `Z[θ]`, `θ² = p + qθ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadRing {
    pub p: i64,
    pub q: i64,
}

impl QuadRing {
    /// Ring containing `2cos(π/m)` for `m ∈ {2, 3, 4, 5}`.
    pub fn for_label(m: u32) -> Self {
        match m {
            4 => QuadRing { p: 2, q: 0 }, // √2
            5 => QuadRing { p: 1, q: 1 }, // golden ratio
            _ => QuadRing { p: 0, q: 0 },
        }
    }

    pub fn zero(self) -> QuadInt {
        QuadInt { a: 0, b: 0 }
    }

    pub fn int(self, a: i64) -> QuadInt {
        QuadInt { a, b: 0 }
    }

    pub fn add(self, x: QuadInt, y: QuadInt) -> QuadInt {
        QuadInt {
            a: x.a + y.a,
            b: x.b + y.b,
        }
    }

    pub fn mul(self, x: QuadInt, y: QuadInt) -> QuadInt {
        let bd = x.b * y.b;
        QuadInt {
            a: x.a * y.a + bd * self.p,
            b: x.a * y.b + x.b * y.a + bd * self.q,
        }
    }

    /// `2cos(π/m)` in this ring.
    pub fn two_cos(self, m: u32) -> QuadInt {
        match m {
            2 => self.int(0),
            3 => self.int(1),
            4 | 5 => QuadInt { a: 0, b: 1 },
            _ => panic!("2cos(pi/{m}) is not represented"),
        }
    }
}

type Matrix3 = [[QuadInt; 3]; 3];

/// Tables for a finite Coxeter group. Element 0 is the identity; elements
/// are numbered in shortlex order of their least reduced words.
#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    rank: usize,
    labels: Vec<Vec<u32>>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    length: Vec<usize>,
    inverse: Vec<usize>,
    words: Vec<Vec<usize>>,
    longest: usize,
}

impl CoxeterGroup {
    /// Breadth-first enumeration from a faithful right action: `act(x, s)`
    /// must return the canonical state of `x·s`.
    fn from_action<S, F>(labels: Vec<Vec<u32>>, identity: S, act: F) -> Self
    where
        S: Clone + Eq + Hash,
        F: Fn(&S, usize) -> S,
    {
        let rank = labels.len();
        let mut index: HashMap<S, usize> = HashMap::new();
        let mut states = vec![identity.clone()];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        index.insert(identity, 0);
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < states.len() {
            let mut row = Vec::with_capacity(rank);
            for s in 0..rank {
                let next = act(&states[head], s);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = states.len();
                        let mut w = words[head].clone();
                        w.push(s);
                        words.push(w);
                        states.push(next.clone());
                        index.insert(next, id);
                        id
                    }
                };
                row.push(id);
            }
            right.push(row);
            head += 1;
        }
        let n = states.len();
        let length: Vec<usize> = words.iter().map(Vec::len).collect();
        let inverse: Vec<usize> = (0..n)
            .map(|x| words[x].iter().rev().fold(0, |acc, &s| right[acc][s]))
            .collect();
        let left: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..rank).map(|s| inverse[right[inverse[x]][s]]).collect())
            .collect();
        let longest = (0..n).max_by_key(|&x| length[x]).unwrap_or(0);
        CoxeterGroup {
            rank,
            labels,
            right,
            left,
            length,
            inverse,
            words,
            longest,
        }
    }

    /// The dihedral group of order `2n` on generators `0, 1`.
    pub fn dihedral(n: u32) -> Result<Self, CoxeterError> {
        if n < 2 {
            return Err(CoxeterError::DihedralLabel(n));
        }
        // (first letter, length); identity = (0, 0), longest = (0, n)
        let act = move |&(first, len): &(usize, u32), s: usize| -> (usize, u32) {
            let canon = |first: usize, len: u32| {
                if len == 0 || len == n {
                    (0, len)
                } else {
                    (first, len)
                }
            };
            if len == 0 {
                return (s, 1);
            }
            if len == n {
                // longest element written to end in s, then drop it
                let first = if n % 2 == 1 { s } else { 1 - s };
                return canon(first, n - 1);
            }
            let last = if len % 2 == 1 { first } else { 1 - first };
            if last == s {
                canon(first, len - 1)
            } else {
                canon(first, len + 1)
            }
        };
        let labels = vec![vec![1, n], vec![n, 1]];
        Ok(Self::from_action(labels, (0usize, 0u32), act))
    }

    /// Rank-3 group with `m_ab = 3`, `m_bc = 2`, `m_ac = m`.
    pub fn rank3(m: u32) -> Result<Self, CoxeterError> {
        if !(3..=5).contains(&m) {
            return Err(CoxeterError::SphericalLabel(m));
        }
        let labels = vec![vec![1, 3, m], vec![3, 1, 2], vec![m, 2, 1]];
        let ring = QuadRing::for_label(m);
        let gens: Vec<Matrix3> = (0..3)
            .map(|i| reflection_matrix(ring, &labels, i))
            .collect();
        let mut identity = [[ring.zero(); 3]; 3];
        for (i, row) in identity.iter_mut().enumerate() {
            row[i] = ring.int(1);
        }
        let act = |x: &Matrix3, s: usize| mat_mul(ring, x, &gens[s]);
        Ok(Self::from_action(labels, identity, act))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.right.len()
    }

    pub fn label(&self, s: usize, t: usize) -> u32 {
        self.labels[s][t]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generator(&self, s: usize) -> usize {
        self.right[0][s]
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn length(&self, x: usize) -> usize {
        self.length[x]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    /// `x·s`
    pub fn right_mul(&self, x: usize, s: usize) -> usize {
        self.right[x][s]
    }

    /// `s·x`
    pub fn left_mul(&self, s: usize, x: usize) -> usize {
        self.left[x][s]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.words[y].iter().fold(x, |acc, &s| self.right[acc][s])
    }

    /// Shortlex-least reduced word.
    pub fn reduced_word(&self, x: usize) -> &[usize] {
        &self.words[x]
    }

    pub fn element_of_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &s| self.right[acc][s])
    }

    /// Bitmask of `s` with `ℓ(s·x) < ℓ(x)`.
    pub fn left_descents(&self, x: usize) -> u32 {
        (0..self.rank)
            .filter(|&s| self.length[self.left[x][s]] < self.length[x])
            .fold(0, |m, s| m | (1 << s))
    }

    /// Bitmask of `s` with `ℓ(x·s) < ℓ(x)`.
    pub fn right_descents(&self, x: usize) -> u32 {
        (0..self.rank)
            .filter(|&s| self.length[self.right[x][s]] < self.length[x])
            .fold(0, |m, s| m | (1 << s))
    }
}

fn reflection_matrix(ring: QuadRing, labels: &[Vec<u32>], i: usize) -> Matrix3 {
    // s_i(α_j) = α_j + 2cos(π/m_ij) α_i, s_i(α_i) = -α_i; columns are images.
    let mut m = [[ring.zero(); 3]; 3];
    for (j, row) in m.iter_mut().enumerate() {
        row[j] = ring.int(1);
    }
    for j in 0..3 {
        m[i][j] = if i == j {
            ring.int(-1)
        } else {
            ring.two_cos(labels[i][j])
        };
    }
    m
}

fn mat_mul(ring: QuadRing, x: &Matrix3, y: &Matrix3) -> Matrix3 {
    let mut out = [[ring.zero(); 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).fold(ring.zero(), |acc, k| {
                ring.add(acc, ring.mul(x[i][k], y[k][j]))
            });
        }
    }
    out
}
