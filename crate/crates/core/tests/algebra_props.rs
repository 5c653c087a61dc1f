mod common;

use std::collections::HashMap;

use common::{algebra_checks, delta_bytes, dihedral_padded, rng};
use cubartin::algebra::positive::PositiveRewriter;
use cubartin::algebra::{
    smith_normal_form, ArtinContext, DihedralContext, IntMatrix, SphericalContext,
};
use cubartin::word::{Letter, Word};
use proptest::prelude::*;
use rand::Rng;

fn random_word(rng: &mut impl Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters(
        (0..len)
            .map(|_| Letter {
                gen: rng.gen_range(0..rank),
                inverse: rng.gen_bool(0.5),
            })
            .collect(),
    )
}

/// Rewrite `w` by random moves that preserve its value in A_n.
fn scramble(rng: &mut impl Rng, n: usize, w: &Word) -> Word {
    let mut letters: Vec<Letter> = w.letters().to_vec();
    for _ in 0..3 {
        let i = rng.gen_range(0..=letters.len());
        match rng.gen_range(0..3) {
            0 => {
                let x = Letter {
                    gen: rng.gen_range(0..2),
                    inverse: rng.gen_bool(0.5),
                };
                letters.splice(i..i, [x, x.inv()]);
            }
            1 => {
                let rel = Word::alternating(0, 1, n).concat(&Word::alternating(1, 0, n).inverse());
                let rel = if rng.gen_bool(0.5) {
                    rel.inverse()
                } else {
                    rel
                };
                letters.splice(i..i, rel.letters().iter().copied());
            }
            _ => {}
        }
    }
    Word::from_letters(letters)
}

const CAP: usize = 20_000;

fn oracle_equal(n: usize, u: &Word, v: &Word) -> Option<bool> {
    // u = v iff x u' y = x v' y; cancel shared ends first
    let (mut u, mut v) = (
        u.free_reduce().letters().to_vec(),
        v.free_reduce().letters().to_vec(),
    );
    while !u.is_empty() && !v.is_empty() && u[0] == v[0] {
        u.remove(0);
        v.remove(0);
    }
    while !u.is_empty() && !v.is_empty() && u.last() == v.last() {
        u.pop();
        v.pop();
    }
    let to_pairs = |w: &[Letter]| w.iter().map(|l| (l.gen, l.inverse)).collect::<Vec<_>>();
    let (ku, pu) = dihedral_padded(n, &to_pairs(&u));
    let (kv, pv) = dihedral_padded(n, &to_pairs(&v));
    let k = ku.max(kv);
    let pad = |extra: usize, p: Vec<u8>| {
        let mut out: Vec<u8> = (0..extra).flat_map(|_| delta_bytes(n)).collect();
        out.extend(p);
        out
    };
    let (a, b) = (pad(k - ku, pu), pad(k - kv, pv));
    let labels = vec![vec![1, n as u32], vec![n as u32, 1]];
    PositiveRewriter::from_labels(&labels)
        .with_cap(CAP)
        .equal(&a, &b)
        .ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn snf_matches_minors(rows in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 4), 4)) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert_eq!(det(&s.u).abs(), 1);
        prop_assert_eq!(det(&s.v).abs(), 1);
        let d: Vec<i64> = (0..4).map(|i| s.d[(i, i)]).collect();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    prop_assert_eq!(s.d[(i, j)], 0);
                }
            }
        }
        for i in 0..3 {
            if d[i + 1] != 0 {
                prop_assert!(d[i] != 0 && d[i + 1] % d[i] == 0);
            }
        }
        for k in 1..=4 {
            let prod: i64 = d[..k].iter().product();
            prop_assert_eq!(prod.abs(), minor_gcd(&rows, k));
        }
    }
}

fn det(m: &IntMatrix) -> i64 {
    let n = m.rows();
    let rows: Vec<Vec<i64>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let all: Vec<usize> = (0..n).collect();
    minor(&rows, &all, &all)
}

fn minor(rows: &[Vec<i64>], r: &[usize], c: &[usize]) -> i64 {
    if r.is_empty() {
        return 1;
    }
    let mut total = 0;
    for (k, &col) in c.iter().enumerate() {
        let rest: Vec<usize> = c.iter().copied().filter(|&x| x != col).collect();
        let sign = if k % 2 == 0 { 1 } else { -1 };
        total += sign * rows[r[0]][col] * minor(rows, &r[1..], &rest);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn minor_gcd(rows: &[Vec<i64>], k: usize) -> i64 {
    let mut g = 0;
    for r in subsets(4, k) {
        for c in subsets(4, k) {
            g = gcd(g, minor(rows, &r, &c));
        }
    }
    g
}

fn contexts() -> Vec<ArtinContext> {
    let mut out: Vec<ArtinContext> = (2..=6)
        .map(|n| DihedralContext::new(n).unwrap().artin().clone())
        .collect();
    out.extend((3..=5).map(|m| SphericalContext::new(m).unwrap().artin().clone()));
    out
}

#[test]
fn normal_forms_are_multiplicative() {
    let mut r = rng(3);
    for ctx in contexts() {
        for _ in 0..10_000 {
            let u = random_word(&mut r, ctx.rank(), 6);
            let v = random_word(&mut r, ctx.rank(), 6);
            let (nu, nv) = (ctx.normal_form(&u), ctx.normal_form(&v));
            let whole = ctx.normal_form(&u.concat(&v));
            assert_eq!(whole, ctx.mul(&nu, &nv), "{}", ctx.name());
            assert_eq!(
                whole,
                ctx.normal_form(&ctx.to_word(&nu).concat(&ctx.to_word(&nv)))
            );
            assert!(ctx.is_normal(&whole));
        }
    }
}

#[test]
fn positive_classes_match_normal_forms_in_b3() {
    let ctx = SphericalContext::new(4).unwrap();
    let art = ctx.artin();
    let rw = PositiveRewriter::for_group(art.group());
    let mut by_key: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut by_nf: HashMap<String, usize> = HashMap::new();
    let mut words = vec![Vec::new()];
    for _ in 0..8 {
        let last: Vec<Vec<u8>> = words
            .iter()
            .filter(|w| w.len() == words.last().unwrap().len())
            .cloned()
            .collect();
        for w in last {
            for x in 0..3u8 {
                let mut w2 = w.clone();
                w2.push(x);
                words.push(w2);
            }
        }
    }
    assert_eq!(words.len(), (3usize.pow(9) - 1) / 2);
    let mut pairs = Vec::new();
    for (i, w) in words.iter().enumerate() {
        let word = Word::from_letters(w.iter().map(|&g| Letter::pos(g as usize)).collect());
        let key = rw.class_key(w).unwrap();
        let nf = art.display(&art.normal_form(&word)).to_string();
        let a = *by_key.entry(key).or_insert(i);
        let b = *by_nf.entry(nf).or_insert(i);
        pairs.push((a, b));
    }
    // the two partitions coincide: representatives agree both ways
    for (i, &(a, b)) in pairs.iter().enumerate() {
        assert_eq!(pairs[a].1, b, "word #{i}");
        assert_eq!(pairs[b].0, a, "word #{i}");
    }
}

#[test]
fn delta_conjugation_is_an_involution() {
    algebra_checks::delta_conjugation_is_an_involution();
}

#[test]
fn phi_and_psi_identities() {
    algebra_checks::phi_and_psi_identities();
}

#[test]
fn dihedral_equality_matches_oracle() {
    let mut r = rng(5);
    let (mut checked, mut skipped) = (0, 0);
    for case in 0..1000 {
        let n = 2 + case % 5;
        let u = random_word(&mut r, 2, 8);
        let same = case % 2 == 0;
        let v = if same {
            scramble(&mut r, n, &u)
        } else {
            random_word(&mut r, 2, 8)
        };
        let ctx = DihedralContext::new(n as u32).unwrap();
        if same {
            assert!(ctx.equal(&u, &v));
        }
        match oracle_equal(n, &u, &v) {
            Some(expected) => {
                assert_eq!(ctx.equal(&u, &v), expected, "n = {n}: {u:?} vs {v:?}");
                checked += 1;
            }
            None => skipped += 1,
        }
    }
    eprintln!("oracle checked {checked} pairs, skipped {skipped} over the class cap");
    assert!(checked >= 800, "only {checked} pairs within the oracle cap");
}
