//! Free-group words and finite presentations.
//!
//! A [`Word`] is a sequence of letters over an indexed alphabet; generator
//! names live in whatever owns the alphabet (a [`Presentation`], an Artin
//! context, ...). Single-character alphabets use the ASCII convention where
//! an uppercase letter is the inverse of its lowercase generator.

use std::fmt;

use thiserror::Error;

use crate::algebra::snf::{Abelianization, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown letter {0:?} (alphabet is {1:?})")]
    UnknownLetter(char, String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator index {0} out of range for {1} generators")]
    GeneratorOutOfRange(usize, usize),
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub const fn pos(gen: usize) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    pub const fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub const fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// `gen^exp` as a word of length `|exp|`.
    pub fn power_of(gen: usize, exp: i64) -> Self {
        let letter = if exp < 0 {
            Letter::neg(gen)
        } else {
            Letter::pos(gen)
        };
        Word(vec![letter; exp.unsigned_abs() as usize])
    }

    /// Alternating positive word `x y x y ...` of the given length.
    pub fn alternating(x: usize, y: usize, len: usize) -> Self {
        Word(
            (0..len)
                .map(|i| Letter::pos(if i % 2 == 0 { x } else { y }))
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.inverse)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut out = Vec::with_capacity(base.len() * exp.unsigned_abs() as usize);
        for _ in 0..exp.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        Word(out)
    }

    /// `c̄ w c`.
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.inverse().concat(self).concat(c)
    }

    /// Sum of the exponents of `gen`.
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| l.exponent())
            .sum()
    }

    pub fn occurrences(&self, gen: usize) -> usize {
        self.0.iter().filter(|l| l.gen == gen).count()
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Free reduction followed by removal of inverse pairs wrapping around
    /// the ends.
    pub fn cyclic_reduce(&self) -> Word {
        let w = self.free_reduce().0;
        let (mut lo, mut hi) = (0, w.len());
        while hi - lo >= 2 && w[lo] == w[hi - 1].inv() {
            lo += 1;
            hi -= 1;
        }
        Word(w[lo..hi].to_vec())
    }

    pub fn rotate_left(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = self.0.clone();
        v.rotate_left(k % self.0.len());
        Word(v)
    }

    /// Whether two cyclic words agree up to rotation, optionally also up to
    /// inversion.
    pub fn cyclically_equivalent(&self, other: &Word, allow_inverse: bool) -> bool {
        let a = self.cyclic_reduce();
        let b = other.cyclic_reduce();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let rotations = |w: &Word| (0..w.len()).any(|k| w.rotate_left(k) == a);
        rotations(&b) || (allow_inverse && rotations(&b.inverse()))
    }

    /// Replace each generator `g` by `images[g]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for l in &self.0 {
            let img = &images[l.gen];
            if l.inverse {
                out.extend(img.0.iter().rev().map(|x| x.inv()));
            } else {
                out.extend_from_slice(&img.0);
            }
        }
        Word(out)
    }

    /// Rename generators via `map`; `None` deletes the letter.
    pub fn map_generators(&self, map: impl Fn(usize) -> Option<usize>) -> Word {
        Word(
            self.0
                .iter()
                .filter_map(|l| {
                    map(l.gen).map(|g| Letter {
                        gen: g,
                        inverse: l.inverse,
                    })
                })
                .collect(),
        )
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    /// Parse an ASCII word: `alphabet[i]` is generator `i`, its uppercase
    /// form the inverse. Whitespace, `.` and `*` are ignored; `1` or an
    /// empty string is the identity.
    pub fn parse_ascii(text: &str, alphabet: &[char]) -> Result<Word, WordError> {
        let mut out = Vec::new();
        for ch in text.chars() {
            if ch.is_whitespace() || ch == '.' || ch == '*' || ch == '1' {
                continue;
            }
            if let Some(i) = alphabet.iter().position(|&c| c == ch) {
                out.push(Letter::pos(i));
            } else if let Some(i) = alphabet
                .iter()
                .position(|&c| c.to_ascii_uppercase() == ch && c != ch)
            {
                out.push(Letter::neg(i));
            } else {
                return Err(WordError::UnknownLetter(ch, alphabet.iter().collect()));
            }
        }
        Ok(Word(out))
    }

    pub fn to_ascii(&self, alphabet: &[char]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|l| {
                let c = alphabet[l.gen];
                if l.inverse {
                    c.to_ascii_uppercase()
                } else {
                    c
                }
            })
            .collect()
    }

    /// Syllable rendering with multi-character names: `a x^3 a^-1 x^-3`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            let exp = (j - i) as i64 * letters[i].exponent();
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = &self.names[letters[i].gen];
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i = j;
        }
        Ok(())
    }
}

/// A finitely presented group. Relators are kept freely and cyclically
/// reduced; trivial relators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, WordError> {
        let g = generators.len();
        for r in &relators {
            if let Some(m) = r.max_generator() {
                if m >= g {
                    return Err(WordError::GeneratorOutOfRange(m, g));
                }
            }
        }
        let relators = relators
            .iter()
            .map(Word::cyclic_reduce)
            .filter(|r| !r.is_empty())
            .collect();
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// The Artin presentation on a labeled edge list; `labels[(i, j)] = m`.
    pub fn artin(generators: Vec<String>, edges: &[(usize, usize, u32)]) -> Self {
        let relators = edges
            .iter()
            .map(|&(i, j, m)| {
                let m = m as usize;
                Word::alternating(i, j, m).concat(&Word::alternating(j, i, m).inverse())
            })
            .collect();
        Presentation::new(generators, relators).expect("edge endpoints index the generators")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parse a whitespace-separated syllable word (`a x^3 a^-1`) over the
    /// generator names.
    pub fn parse_word(&self, text: &str) -> Result<Word, WordError> {
        let mut out = Word::new();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<i64>()
                        .map_err(|_| WordError::UnknownGenerator(token.to_string()))?,
                ),
                None => (token, 1),
            };
            let g = self
                .generator_index(name)
                .ok_or_else(|| WordError::UnknownGenerator(name.to_string()))?;
            out = out.concat(&Word::power_of(g, exp));
        }
        Ok(out)
    }

    pub fn check_word(&self, w: &Word) -> Result<(), WordError> {
        match w.max_generator() {
            Some(m) if m >= self.generators.len() => {
                Err(WordError::GeneratorOutOfRange(m, self.generators.len()))
            }
            _ => Ok(()),
        }
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let g = self.generators.len();
        let mut m = IntMatrix::zeros(self.relators.len(), g);
        for (i, r) in self.relators.iter().enumerate() {
            for l in r.letters() {
                m[(i, l.gen)] += l.exponent();
            }
        }
        m
    }

    pub fn abelianization(&self) -> Abelianization {
        Abelianization::of_relations(&self.relation_matrix())
    }

    /// Exponent-sum vector of a word over this presentation's generators.
    pub fn exponent_vector(&self, w: &Word) -> Vec<i64> {
        (0..self.generators.len())
            .map(|g| w.exponent_sum(g))
            .collect()
    }

    /// Remove generator `gen` using the shortest relator in which it occurs
    /// exactly once (earliest on ties). Returns `false`, leaving the
    /// presentation unchanged, when no relator qualifies.
    pub fn eliminate_generator(&mut self, gen: usize) -> bool {
        let Some(pivot) = self
            .relators
            .iter()
            .enumerate()
            .filter(|(_, r)| r.occurrences(gen) == 1)
            .min_by_key(|&(i, r)| (r.len(), i))
            .map(|(i, _)| i)
        else {
            return false;
        };
        let r = self.relators.remove(pivot);
        let at = r
            .letters()
            .iter()
            .position(|l| l.gen == gen)
            .expect("occurs once");
        let rotated = r.rotate_left(at);
        // rotated = g^e w  =>  g = w^-1 (e = 1) or g = w (e = -1)
        let rest = Word::from_letters(rotated.letters()[1..].to_vec());
        let image = if rotated.letters()[0].inverse {
            rest
        } else {
            rest.inverse()
        };
        let mut images: Vec<Word> = (0..self.generators.len())
            .map(|g| Word::power_of(g, 1))
            .collect();
        images[gen] = image;
        let relators: Vec<Word> = self
            .relators
            .iter()
            .map(|w| w.substitute(&images))
            .map(|w| w.map_generators(|g| Some(if g > gen { g - 1 } else { g })))
            .collect();
        self.generators.remove(gen);
        *self = Presentation::new(std::mem::take(&mut self.generators), relators)
            .expect("reindexed generators stay in range");
        true
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", r.display_with(&self.generators))?;
        }
        write!(f, " >")
    }
}
