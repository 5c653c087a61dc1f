//! Two-generator Artin groups `A_n = ⟨a, b | aba⋯ = bab⋯⟩` and the index-2
//! subgroup `A′_n` of even-length words.
//!
//! `A′_n` is generated by `r = ab`, `s = ab̄`, `t = āb`; the fourth derived
//! letter `q = ba` equals `s̄ r t̄`. Words over the derived letters use the
//! ASCII alphabet `r s t q` (uppercase = inverse).

use super::coxeter::CoxeterGroup;
use super::garside::{ArtinContext, GarsideElement};
use super::schreier::subgroup_presentation;
use super::AlgebraError;
use crate::word::{Letter, Presentation, Word};

pub const AB: [char; 2] = ['a', 'b'];
pub const RSTQ: [char; 4] = ['r', 's', 't', 'q'];

const A: usize = 0;
const B: usize = 1;
pub const R: usize = 0;
pub const S: usize = 1;
pub const T: usize = 2;
pub const Q: usize = 3;

#[derive(Clone, Debug)]
pub struct DihedralContext {
    n: u32,
    artin: ArtinContext,
}

impl DihedralContext {
    pub fn new(n: u32) -> Result<Self, AlgebraError> {
        let group = CoxeterGroup::dihedral(n)?;
        Ok(DihedralContext {
            n,
            artin: ArtinContext::new(format!("A_{n}"), group, AB.to_vec()),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn artin(&self) -> &ArtinContext {
        &self.artin
    }

    pub fn is_odd(&self) -> bool {
        self.n % 2 == 1
    }

    /// `Δ = aba⋯` of length `n`.
    pub fn delta_word(&self) -> Word {
        Word::alternating(A, B, self.n as usize)
    }

    /// The central generator: `Δ²` for odd `n`, `Δ` for even `n`.
    pub fn z_word(&self) -> Word {
        self.delta_word().pow(if self.is_odd() { 2 } else { 1 })
    }

    pub fn parse(&self, text: &str) -> Result<Word, AlgebraError> {
        Ok(self.artin.parse(text)?)
    }

    pub fn normal_form(&self, w: &Word) -> GarsideElement {
        self.artin.normal_form(w)
    }

    pub fn equal(&self, u: &Word, v: &Word) -> bool {
        self.artin.equal(u, v)
    }

    /// The Artin presentation on `a, b`.
    pub fn presentation(&self) -> Presentation {
        Presentation::artin(vec!["a".to_string(), "b".to_string()], &[(A, B, self.n)])
    }

    /// Presentation of `A′_n` on the generators `r, s, t`.
    ///
    /// Reidemeister–Schreier with transversal `{1, a}` yields generators
    /// `γ(1,b) = bā`, `γ(a,a) = aa`, `γ(a,b) = ab`, which are the free basis
    /// `s̄`, `r t̄`, `r` of the same free group; the relators are rewritten
    /// through that change of basis.
    pub fn a_prime_presentation(&self) -> Presentation {
        let schreier = subgroup_presentation(&self.presentation(), &[true, true])
            .expect("both generators have odd sign");
        debug_assert_eq!(schreier.generators(), ["1.b", "a.a", "a.b"]);
        let images = [
            Word::from_letters(vec![Letter::neg(S)]),
            Word::from_letters(vec![Letter::pos(R), Letter::neg(T)]),
            Word::from_letters(vec![Letter::pos(R)]),
        ];
        let relators = schreier
            .relators()
            .iter()
            .map(|w| w.substitute(&images))
            .collect();
        Presentation::new(vec!["r".into(), "s".into(), "t".into()], relators)
            .expect("relators use r, s, t only")
    }
}

/// Expand a word over `r, s, t, q` into `a, b`.
pub fn expand_rstq(w: &Word) -> Word {
    let images = [
        Word::from_letters(vec![Letter::pos(A), Letter::pos(B)]),
        Word::from_letters(vec![Letter::pos(A), Letter::neg(B)]),
        Word::from_letters(vec![Letter::neg(A), Letter::pos(B)]),
        Word::from_letters(vec![Letter::pos(B), Letter::pos(A)]),
    ];
    w.substitute(&images)
}

/// Replace every `q` by `s̄ r t̄`.
pub fn eliminate_q(w: &Word) -> Word {
    let images = [
        Word::from_letters(vec![Letter::pos(R)]),
        Word::from_letters(vec![Letter::pos(S)]),
        Word::from_letters(vec![Letter::pos(T)]),
        Word::from_letters(vec![Letter::neg(S), Letter::pos(R), Letter::neg(T)]),
    ];
    w.substitute(&images)
}

/// Conjugation by `Δ` (`x ↦ Δ̄ x Δ`) on words over `r, s, t, q`.
///
/// For odd `n` this is `s ↦ s̄`, `t ↦ t̄`, `r ↦ q`, `q ↦ r`; for even `n`,
/// `Δ` is central and the word is returned unchanged.
pub fn delta_conjugation(ctx: &DihedralContext, w: &Word) -> Word {
    if !ctx.is_odd() {
        return w.clone();
    }
    let images = [
        Word::from_letters(vec![Letter::pos(Q)]),
        Word::from_letters(vec![Letter::neg(S)]),
        Word::from_letters(vec![Letter::neg(T)]),
        Word::from_letters(vec![Letter::pos(R)]),
    ];
    w.substitute(&images)
}

/// `φ(s, t, r) = s̄ ∏_{i=(n-3)/2}^{0} r̄^i t̄ r^i` over the `r s t q` alphabet,
/// for odd `n ≥ 3`.
pub fn build_phi(n: u32) -> Result<Word, AlgebraError> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(AlgebraError::PhiNeedsOdd(n));
    }
    let mut w = Word::from_letters(vec![Letter::neg(S)]);
    for i in (0..=((n - 3) / 2) as i64).rev() {
        let t_bar = Word::from_letters(vec![Letter::neg(T)]);
        w = w.concat(&t_bar.conjugate_by(&Word::power_of(R, i)));
    }
    Ok(w.free_reduce())
}

/// `φ(s̄, t̄, q)`: substitute `s ↦ s̄`, `t ↦ t̄`, `r ↦ q` in `φ`.
pub fn phi_bar(phi: &Word) -> Word {
    let images = [
        Word::from_letters(vec![Letter::pos(Q)]),
        Word::from_letters(vec![Letter::neg(S)]),
        Word::from_letters(vec![Letter::neg(T)]),
        Word::from_letters(vec![Letter::pos(Q)]),
    ];
    phi.substitute(&images)
}

/// `ψ = φ(s,t,r) · φ(s̄,t̄,q)`, which equals `b^{2n} z̄`.
pub fn build_psi(n: u32) -> Result<Word, AlgebraError> {
    let phi = build_phi(n)?;
    Ok(phi.concat(&phi_bar(&phi)))
}

/// Rewrite an even-length word over `a, b` as a word over `r, s, t`
/// (two letters at a time; `q` is already expanded to `s̄ r t̄`).
pub fn even_rewrite(w: &Word) -> Result<Word, AlgebraError> {
    if !w.len().is_multiple_of(2) {
        return Err(AlgebraError::OddLength(w.len()));
    }
    let (r, s, t) = (Letter::pos(R), Letter::pos(S), Letter::pos(T));
    let mut out = Vec::new();
    for pair in w.letters().chunks(2) {
        let (x, y) = (pair[0], pair[1]);
        if x == y.inv() {
            continue;
        }
        let piece: Vec<Letter> = match ((x.gen, x.inverse), (y.gen, y.inverse)) {
            ((A, false), (B, false)) => vec![r],
            ((A, false), (B, true)) => vec![s],
            ((A, true), (B, false)) => vec![t],
            ((A, true), (B, true)) => vec![t, r.inv(), s],
            ((B, false), (A, false)) => vec![s.inv(), r, t.inv()],
            ((B, false), (A, true)) => vec![s.inv()],
            ((B, true), (A, false)) => vec![t.inv()],
            ((B, true), (A, true)) => vec![r.inv()],
            ((A, false), (A, false)) => vec![r, t.inv()],
            ((A, true), (A, true)) => vec![t, r.inv()],
            ((B, false), (B, false)) => vec![s.inv(), r],
            ((B, true), (B, true)) => vec![r.inv(), s],
            _ => unreachable!("only the letters a, b occur"),
        };
        out.extend(piece);
    }
    Ok(Word::from_letters(out))
}
