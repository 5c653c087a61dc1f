//! Reidemeister–Schreier for index-2 subgroups, and membership of words in
//! the commutator subgroup through the abelianization.

use super::snf::in_row_lattice;
use super::AlgebraError;
use crate::word::{Letter, Presentation, Word};

/// Presentation of the kernel of the map to `Z/2` sending generator `g` to
/// `sign[g]`.
///
/// The Schreier transversal is `{1, x}` with `x` the first generator of odd
/// sign. Schreier generators `γ(u, g) = u·g·rep(u·g)⁻¹` are named `"1.g"` and
/// `"x.g"`; `γ(1, x)` is trivial and omitted, leaving `2n - 1` generators.
/// Each relator `R` contributes the rewrites of `R` and `x R x⁻¹`.
pub fn subgroup_presentation(
    p: &Presentation,
    sign: &[bool],
) -> Result<Presentation, AlgebraError> {
    let n = p.generators().len();
    if sign.len() != n {
        return Err(AlgebraError::SignLength(sign.len(), n));
    }
    let Some(x) = sign.iter().position(|&s| s) else {
        return Err(AlgebraError::TrivialSign);
    };
    for r in p.relators() {
        let parity = r.letters().iter().filter(|l| sign[l.gen]).count() % 2;
        if parity != 0 {
            return Err(AlgebraError::SignNotHomomorphism);
        }
    }

    // index of γ(coset, g); coset 0 = 1, coset 1 = x
    let mut names = Vec::new();
    let mut index = vec![[None::<usize>; 2]; n];
    for coset in 0..2 {
        for g in 0..n {
            if coset == 0 && g == x {
                continue;
            }
            let rep = if coset == 0 {
                "1"
            } else {
                p.generators()[x].as_str()
            };
            index[g][coset] = Some(names.len());
            names.push(format!("{rep}.{}", p.generators()[g]));
        }
    }

    let rewrite = |w: &Word, start: usize| -> Word {
        let mut coset = start;
        let mut out = Word::new();
        for l in w.letters() {
            let flip = usize::from(sign[l.gen]);
            if l.inverse {
                // arriving at `coset` via g⁻¹ means γ(coset', g)⁻¹ with coset' = coset ^ flip
                let from = coset ^ flip;
                if let Some(i) = index[l.gen][from] {
                    out.push(Letter::neg(i));
                }
                coset = from;
            } else {
                if let Some(i) = index[l.gen][coset] {
                    out.push(Letter::pos(i));
                }
                coset ^= flip;
            }
        }
        debug_assert_eq!(coset, start, "relator must close up in the subgroup");
        out
    };

    let mut relators = Vec::new();
    for r in p.relators() {
        relators.push(rewrite(r, 0));
        relators.push(rewrite(r, 1));
    }
    Ok(Presentation::new(names, relators)?)
}

/// Whether `w` maps to zero in the abelianization of `p`, i.e. lies in the
/// commutator subgroup.
pub fn commutator_membership(p: &Presentation, w: &Word) -> Result<bool, AlgebraError> {
    p.check_word(w)?;
    Ok(in_row_lattice(&p.relation_matrix(), &p.exponent_vector(w)))
}
