//! Equality of positive words in an Artin monoid by exhaustive rewriting.
//!
//! The defining relations are homogeneous, so every rewriting class of a
//! positive word is finite and consists of words of the same length. This
//! is independent of the Garside machinery and serves as its cross-check.

use std::collections::{HashSet, VecDeque};

use super::coxeter::CoxeterGroup;
use super::AlgebraError;
use crate::word::Word;

/// Default cap on the size of an explored rewriting class.
pub const DEFAULT_CLASS_CAP: usize = 1 << 20;

#[derive(Clone, Debug)]
pub struct PositiveRewriter {
    relations: Vec<(Vec<u8>, Vec<u8>)>,
    cap: usize,
}

impl PositiveRewriter {
    /// Braid relations `s t s ⋯ = t s t ⋯` for every pair with a finite label.
    pub fn from_labels(labels: &[Vec<u32>]) -> Self {
        let mut relations = Vec::new();
        for s in 0..labels.len() {
            for t in s + 1..labels.len() {
                let m = labels[s][t] as usize;
                if m == 0 {
                    continue;
                }
                let alt = |x: usize, y: usize| -> Vec<u8> {
                    (0..m)
                        .map(|i| if i % 2 == 0 { x as u8 } else { y as u8 })
                        .collect()
                };
                relations.push((alt(s, t), alt(t, s)));
            }
        }
        PositiveRewriter {
            relations,
            cap: DEFAULT_CLASS_CAP,
        }
    }

    pub fn for_group(group: &CoxeterGroup) -> Self {
        let labels: Vec<Vec<u32>> = (0..group.rank())
            .map(|s| (0..group.rank()).map(|t| group.label(s, t)).collect())
            .collect();
        Self::from_labels(&labels)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    fn neighbours(&self, w: &[u8], mut visit: impl FnMut(Vec<u8>)) {
        for (lhs, rhs) in &self.relations {
            for (from, to) in [(lhs, rhs), (rhs, lhs)] {
                let k = from.len();
                if k > w.len() {
                    continue;
                }
                for i in 0..=w.len() - k {
                    if &w[i..i + k] == from.as_slice() {
                        let mut next = w.to_vec();
                        next[i..i + k].copy_from_slice(to);
                        visit(next);
                    }
                }
            }
        }
    }

    /// All positive words equal to `w` in the monoid.
    pub fn class_of(&self, w: &[u8]) -> Result<HashSet<Vec<u8>>, AlgebraError> {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        while let Some(cur) = queue.pop_front() {
            let mut fresh = Vec::new();
            self.neighbours(&cur, |n| {
                if !seen.contains(&n) {
                    fresh.push(n);
                }
            });
            for n in fresh {
                if seen.insert(n.clone()) {
                    if seen.len() > self.cap {
                        return Err(AlgebraError::ClassCap(self.cap));
                    }
                    queue.push_back(n);
                }
            }
        }
        Ok(seen)
    }

    pub fn equal(&self, u: &[u8], v: &[u8]) -> Result<bool, AlgebraError> {
        if u.len() != v.len() {
            return Ok(false);
        }
        if u == v {
            return Ok(true);
        }
        Ok(self.class_of(u)?.contains(v))
    }

    /// Lexicographically least word of the class; a canonical key.
    pub fn class_key(&self, w: &[u8]) -> Result<Vec<u8>, AlgebraError> {
        Ok(self
            .class_of(w)?
            .into_iter()
            .min()
            .expect("class contains w"))
    }
}

pub fn to_bytes(w: &Word) -> Result<Vec<u8>, AlgebraError> {
    if !w.is_positive() {
        return Err(AlgebraError::NotPositive);
    }
    Ok(w.letters().iter().map(|l| l.gen as u8).collect())
}
