//! Checks on the K pieces and amalgams, shared with the acceptance suite.

use cubartin::algebra::DihedralContext;
use cubartin::complex::{
    check_npc, default_spanning_tree, extract_presentation, vertex_link, CubeComplex, ExtractMode,
};
use cubartin::construct::{build_for_graph, build_k_even, build_k_odd};
use cubartin::graph::verdict;
use cubartin::word::{Letter, Word};

use super::{condition_iii_graphs, is_k2n};

/// The single composite relator of a K piece, mapped to a word in a, b.
fn composite_image(c: &CubeComplex, images: &[(&str, &[Letter])]) -> Word {
    let p = extract_presentation(c, &default_spanning_tree(c), ExtractMode::Composite).unwrap();
    assert_eq!(p.generators().len(), 2, "{:?}", p.generators());
    assert_eq!(p.relators().len(), 1);
    let subst: Vec<Word> = p
        .generators()
        .iter()
        .map(|g| {
            let (_, w) = images.iter().find(|(n, _)| n == g).unwrap();
            Word::from_letters(w.to_vec())
        })
        .collect();
    p.relators()[0].substitute(&subst)
}

fn artin_relator(n: usize) -> Word {
    Word::alternating(0, 1, n).concat(&Word::alternating(1, 0, n).inverse())
}

pub fn odd_pieces(max: u32) {
    let (a, b) = (Letter::pos(0), Letter::pos(1));
    for n in (3..=max).step_by(2) {
        let c = build_k_odd(n).unwrap();
        assert!(check_npc(&c).is_empty());
        assert_eq!(c.euler_characteristic(), 0);
        for v in 0..c.vertex_count() {
            assert!(is_k2n(&vertex_link(&c, v).unwrap().adjacency(), n as usize));
        }
        let rel = composite_image(&c, &[("a", &[a]), ("b", &[b])]);
        let ctx = DihedralContext::new(n).unwrap();
        assert!(ctx.equal(&rel, &Word::new()));
        assert!(
            rel.cyclically_equivalent(&artin_relator(n as usize), true),
            "n = {n}"
        );
    }
}

pub fn even_pieces(max: u32) {
    let (a, b) = (Letter::pos(0), Letter::pos(1));
    for n in (2..=max).step_by(2) {
        let c = build_k_even(n, "a").unwrap();
        assert!(check_npc(&c).is_empty());
        assert_eq!(c.euler_characteristic(), 0);
        assert!(is_k2n(&vertex_link(&c, 0).unwrap().adjacency(), n as usize));
        let rel = composite_image(&c, &[("a", &[a]), ("x", &[a, b])]);
        let ctx = DihedralContext::new(n).unwrap();
        assert!(ctx.equal(&rel, &Word::new()), "n = {n}");
        // a x^k = x^k a with x = ab
        let k = (n / 2) as i64;
        let x = Word::from_letters(vec![a, b]);
        let expected = Word::from_letters(vec![a])
            .concat(&x.pow(k))
            .concat(&Word::from_letters(vec![a.inv()]))
            .concat(&x.pow(-k));
        assert!(
            rel.cyclically_equivalent(&expected.free_reduce(), true),
            "n = {n}"
        );
    }
}

/// Every graph up to `max_n` vertices with interior labels 2 and leaf labels
/// from `leaf` builds a nonpositively curved complex whose fundamental group
/// has the Artin abelianization.
/// Returns the number of graphs checked.
pub fn amalgam_abelianizations(max_n: usize, leaf: &[u32]) -> usize {
    let mut count = 0;
    for n in 1..=max_n {
        for g in condition_iii_graphs(n, leaf) {
            assert!(verdict(&g).is_positive(), "{}", g.to_text());
            let c = build_for_graph(&g).unwrap();
            assert!(check_npc(&c).is_empty(), "{}", g.to_text());
            let p =
                extract_presentation(&c, &default_spanning_tree(&c), ExtractMode::Plain).unwrap();
            assert_eq!(
                p.abelianization(),
                g.presentation().abelianization(),
                "{}",
                g.to_text()
            );
            count += 1;
        }
    }
    count
}
