//! Word-algebra identities and the positive-word partition check, shared with
//! the acceptance suite.

use std::collections::HashMap;

use cubartin::algebra::dihedral::{
    build_phi, build_psi, delta_conjugation, eliminate_q, expand_rstq, R,
};
use cubartin::algebra::positive::PositiveRewriter;
use cubartin::algebra::schreier::commutator_membership;
use cubartin::algebra::{ArtinContext, DihedralContext};
use cubartin::word::{Letter, Word};

pub fn delta_conjugation_is_an_involution() {
    for n in (3..=11).step_by(2) {
        let ctx = DihedralContext::new(n).unwrap();
        let d = ctx.delta_word();
        for g in 0..4 {
            let w = Word::power_of(g, 1);
            let once = delta_conjugation(&ctx, &w);
            let twice = delta_conjugation(&ctx, &once);
            assert!(ctx.equal(&expand_rstq(&twice), &expand_rstq(&w)));
            let conj = d.inverse().concat(&expand_rstq(&w)).concat(&d);
            assert!(ctx.equal(&expand_rstq(&once), &conj), "n = {n}, gen {g}");
        }
    }
    let even = DihedralContext::new(4).unwrap();
    let a = Word::power_of(0, 1);
    let d = even.delta_word();
    assert!(even.equal(&d.inverse().concat(&a).concat(&d), &a));
}

pub fn phi_and_psi_identities() {
    for n in (3..=15).step_by(2) {
        let ctx = DihedralContext::new(n).unwrap();
        let phi = build_phi(n).unwrap();
        assert_eq!(phi.exponent_sum(R), 0);
        let lhs = expand_rstq(&phi).concat(&ctx.delta_word());
        assert!(ctx.equal(&lhs, &Word::power_of(1, n as i64)), "n = {n}");
    }
    for n in [3, 5, 7] {
        let ctx = DihedralContext::new(n).unwrap();
        let psi = build_psi(n).unwrap();
        let lhs = expand_rstq(&psi).concat(&ctx.z_word());
        assert!(ctx.equal(&lhs, &Word::power_of(1, 2 * n as i64)));
        let p = ctx.a_prime_presentation();
        let psi = eliminate_q(&psi);
        assert!(commutator_membership(&p, &psi).unwrap());
        assert!(!commutator_membership(&p, &Word::power_of(R, 1)).unwrap());
    }
}

/// All positive words of length at most `max_len` over the context's
/// generators are compared pairwise: normal-form equality must agree with
/// membership in the same class of the positive-word rewriting closure.
/// Returns the number of pairs compared.
pub fn positive_pairs_agree(ctx: &ArtinContext, max_len: usize) -> usize {
    let rw = PositiveRewriter::for_group(ctx.group());
    let rank = ctx.rank() as u8;
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut layer = words.clone();
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| (0..rank).map(move |x| [w.as_slice(), &[x]].concat()))
            .collect();
        words.extend(layer.iter().cloned());
    }
    let mut key_ids: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut nf_ids: HashMap<String, usize> = HashMap::new();
    let mut ids = Vec::with_capacity(words.len());
    for w in &words {
        let word = Word::from_letters(w.iter().map(|&g| Letter::pos(g as usize)).collect());
        let k = key_ids.len();
        let key = *key_ids.entry(rw.class_key(w).unwrap()).or_insert(k);
        let k = nf_ids.len();
        let nf = *nf_ids
            .entry(ctx.display(&ctx.normal_form(&word)).to_string())
            .or_insert(k);
        ids.push((key, nf));
    }
    let mut pairs = 0;
    for (i, x) in ids.iter().enumerate() {
        for (j, y) in ids.iter().enumerate() {
            assert_eq!(
                x.0 == y.0,
                x.1 == y.1,
                "{}: {:?} vs {:?}",
                ctx.name(),
                words[i],
                words[j]
            );
            pairs += 1;
        }
    }
    pairs
}
