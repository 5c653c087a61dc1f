//! Left-greedy Garside normal forms for spherical Artin groups.
//!
//! Simple elements are the elements of the associated finite Coxeter group
//! `W`, lifted along reduced words. An element of the Artin group is stored
//! as `Δ^inf · x_1 ⋯ x_r` where each `x_i` is a simple element other than
//! `1` and `Δ`, and each pair `(x_i, x_{i+1})` is left-weighted: every left
//! descent of `x_{i+1}` is a right descent of `x_i`.

use std::fmt;

use serde::Serialize;

use super::coxeter::CoxeterGroup;
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GarsideElement {
    pub inf: i64,
    pub factors: Vec<usize>,
}

impl GarsideElement {
    pub fn identity() -> Self {
        GarsideElement {
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(k: i64) -> Self {
        GarsideElement {
            inf: k,
            factors: Vec::new(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Canonical length (number of non-Δ factors).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }
}

/// An Artin group of spherical type, with its Garside structure.
#[derive(Clone, Debug)]
pub struct ArtinContext {
    name: String,
    group: CoxeterGroup,
    alphabet: Vec<char>,
    tau: Vec<usize>,
    complement: Vec<usize>,
}

impl ArtinContext {
    /// `alphabet[s]` names generator `s`; it must not contain `d`, which is
    /// reserved for `Δ` in ASCII words.
    pub fn new(name: impl Into<String>, group: CoxeterGroup, alphabet: Vec<char>) -> Self {
        assert_eq!(group.rank(), alphabet.len(), "one letter per generator");
        assert!(
            !alphabet.contains(&'d'),
            "'d' is reserved for the Garside element"
        );
        let w0 = group.longest();
        let n = group.order();
        let tau = (0..n).map(|x| group.mul(group.mul(w0, x), w0)).collect();
        let complement = (0..n).map(|x| group.mul(group.inverse(x), w0)).collect();
        ArtinContext {
            name: name.into(),
            group,
            alphabet,
            tau,
            complement,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// The Garside element `Δ` as a simple element of `W`.
    pub fn delta(&self) -> usize {
        self.group.longest()
    }

    /// Positive word for `Δ` (shortlex-least reduced word of the longest
    /// element).
    pub fn delta_word(&self) -> Word {
        self.simple_word(self.delta())
    }

    pub fn simple_word(&self, x: usize) -> Word {
        self.group
            .reduced_word(x)
            .iter()
            .map(|&s| Letter::pos(s))
            .collect()
    }

    /// `Δ⁻¹ x Δ` on simple elements.
    pub fn tau(&self, x: usize) -> usize {
        self.tau[x]
    }

    /// `x⁻¹ Δ`, so that `x · ∂(x) = Δ`.
    pub fn complement(&self, x: usize) -> usize {
        self.complement[x]
    }

    /// Parse an ASCII word over the context alphabet; `d` stands for `Δ`
    /// and `D` for `Δ⁻¹`.
    pub fn parse(&self, text: &str) -> Result<Word, crate::word::WordError> {
        let mut alphabet = self.alphabet.clone();
        alphabet.push('d');
        let raw = Word::parse_ascii(text, &alphabet)?;
        let delta = self.delta_word();
        let delta_gen = self.alphabet.len();
        let mut images: Vec<Word> = (0..delta_gen).map(|g| Word::power_of(g, 1)).collect();
        images.push(delta);
        Ok(raw.substitute(&images))
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.to_ascii(&self.alphabet)
    }

    pub fn is_left_weighted(&self, a: usize, b: usize) -> bool {
        let g = &self.group;
        g.left_descents(b) & !g.right_descents(a) == 0
    }

    /// Rewrite `(a, b)` as `(a·c, c⁻¹·b)` with `c` the largest prefix of `b`
    /// keeping `a·c` simple. The result is left-weighted.
    fn normalize_pair(&self, mut a: usize, mut b: usize) -> (usize, usize) {
        let g = &self.group;
        loop {
            let movable = g.left_descents(b) & !g.right_descents(a);
            if movable == 0 {
                return (a, b);
            }
            let s = movable.trailing_zeros() as usize;
            a = g.right_mul(a, s);
            b = g.left_mul(s, b);
        }
    }

    /// In-place right multiplication by the simple element `y`.
    pub fn mul_simple(&self, e: &mut GarsideElement, y: usize) {
        if y == 0 {
            return;
        }
        if y == self.delta() {
            self.mul_delta_power(e, 1);
            return;
        }
        e.factors.push(y);
        let mut j = e.factors.len() - 1;
        while j > 0 {
            let (a, b) = (e.factors[j - 1], e.factors[j]);
            let (a2, b2) = self.normalize_pair(a, b);
            e.factors[j - 1] = a2;
            e.factors[j] = b2;
            if a2 == a {
                break;
            }
            j -= 1;
        }
        self.tidy(e);
    }

    /// Absorb leading `Δ` factors and drop trailing identities.
    fn tidy(&self, e: &mut GarsideElement) {
        let delta = self.delta();
        let lead = e.factors.iter().take_while(|&&x| x == delta).count();
        if lead > 0 {
            e.factors.drain(..lead);
            e.inf += lead as i64;
        }
        while e.factors.last() == Some(&0) {
            e.factors.pop();
        }
    }

    /// `X Δ^k = Δ^k τ^k(X)`.
    pub fn mul_delta_power(&self, e: &mut GarsideElement, k: i64) {
        e.inf += k;
        if k % 2 != 0 {
            for x in &mut e.factors {
                *x = self.tau[*x];
            }
        }
    }

    pub fn mul_letter(&self, e: &mut GarsideElement, l: Letter) {
        let s = self.group.generator(l.gen);
        if l.inverse {
            // s⁻¹ = ∂(s) Δ⁻¹
            self.mul_simple(e, self.complement(s));
            self.mul_delta_power(e, -1);
        } else {
            self.mul_simple(e, s);
        }
    }

    pub fn normal_form(&self, w: &Word) -> GarsideElement {
        let mut e = GarsideElement::identity();
        for &l in w.letters() {
            self.mul_letter(&mut e, l);
        }
        e
    }

    pub fn mul(&self, x: &GarsideElement, y: &GarsideElement) -> GarsideElement {
        let mut e = x.clone();
        self.mul_delta_power(&mut e, y.inf);
        for &f in &y.factors {
            self.mul_simple(&mut e, f);
        }
        e
    }

    pub fn inverse(&self, x: &GarsideElement) -> GarsideElement {
        let mut e = GarsideElement::identity();
        for &f in x.factors.iter().rev() {
            self.mul_simple(&mut e, self.complement(f));
            self.mul_delta_power(&mut e, -1);
        }
        self.mul_delta_power(&mut e, -x.inf);
        e
    }

    pub fn pow(&self, x: &GarsideElement, k: i64) -> GarsideElement {
        let base = if k < 0 { self.inverse(x) } else { x.clone() };
        (0..k.unsigned_abs()).fold(GarsideElement::identity(), |acc, _| self.mul(&acc, &base))
    }

    pub fn equal(&self, u: &Word, v: &Word) -> bool {
        self.normal_form(u) == self.normal_form(v)
    }

    pub fn commute(&self, x: &GarsideElement, y: &GarsideElement) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// Whether `e` satisfies the normal-form invariants.
    pub fn is_normal(&self, e: &GarsideElement) -> bool {
        let delta = self.delta();
        e.factors.iter().all(|&x| x != 0 && x != delta)
            && e.factors
                .windows(2)
                .all(|p| self.is_left_weighted(p[0], p[1]))
    }

    /// A word representing `e`: `Δ^inf` followed by the factors.
    pub fn to_word(&self, e: &GarsideElement) -> Word {
        let mut w = self.delta_word().pow(e.inf);
        for &f in &e.factors {
            w = w.concat(&self.simple_word(f));
        }
        w
    }

    pub fn display<'a>(&'a self, e: &'a GarsideElement) -> impl fmt::Display + 'a {
        NormalFormDisplay { ctx: self, e }
    }
}

struct NormalFormDisplay<'a> {
    ctx: &'a ArtinContext,
    e: &'a GarsideElement,
}

impl fmt::Display for NormalFormDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .e
            .factors
            .iter()
            .map(|&x| self.ctx.format_word(&self.ctx.simple_word(x)))
            .collect();
        write!(f, "D^{} [{}]", self.e.inf, factors.join(" | "))
    }
}
