//! Whole-property checks shared by the property tests and the acceptance
//! suite. Each panics on the first failure.

use std::collections::BTreeSet;

use cubartin::toolkit::{
    check_gate_edge_duality, convex_hull, cube, gates, grid, has_facing_triple, is_median,
    parallel_set, product_decompose, random_tree, random_wallspace, sageev_dual, tree_from_parents,
    MedianComplex, Wallspace,
};
use rand::Rng;

use super::{
    bfs_distances, brute_crossing, brute_edge_classes, brute_hull, brute_orientations, brute_sides,
    geodesically_closed, rng,
};

fn corpus(r: &mut impl Rng) -> Vec<MedianComplex> {
    let mut out = vec![
        cube(3),
        grid(3, 2),
        grid(2, 2),
        tree_from_parents(&[0, 0, 0, 1, 1, 2]),
    ];
    for _ in 0..6 {
        out.push(grid(r.gen_range(1..=4), r.gen_range(1..=4)));
        out.push(random_tree(r.gen_range(1..=12), r));
    }
    out.push(
        grid(2, 2)
            .cartesian_product(&tree_from_parents(&[0, 0]))
            .unwrap(),
    );
    out
}

fn random_convex(m: &MedianComplex, r: &mut impl Rng) -> Vec<usize> {
    let k = r.gen_range(1..=3);
    let seed: Vec<usize> = (0..k).map(|_| r.gen_range(0..m.vertex_count())).collect();
    convex_hull(m, &seed).unwrap()
}

pub fn hyperplanes_match_brute_force(seed: u64) {
    let mut r = rng(seed);
    for m in corpus(&mut r) {
        let classes = brute_edge_classes(&m);
        let mut lib: Vec<Vec<usize>> = m.hyperplanes().iter().map(|h| h.edges.clone()).collect();
        lib.sort();
        assert_eq!(lib, classes);
        let cross = brute_crossing(&m, &classes);
        for (i, h) in m.hyperplanes().iter().enumerate() {
            let sides = brute_sides(&m, &h.edges);
            assert_eq!(sides.iter().collect::<BTreeSet<_>>().len(), 2);
            for &v in &h.plus {
                assert_ne!(sides[v], sides[h.minus[0]]);
            }
            let bi = classes.iter().position(|c| *c == h.edges).unwrap();
            for (j, k) in m.hyperplanes().iter().enumerate() {
                let bj = classes.iter().position(|c| *c == k.edges).unwrap();
                if i != j {
                    assert_eq!(m.crosses(i, j), cross[bi][bj]);
                }
            }
        }
    }
}

pub fn hulls_match_geodesic_closure(seed: u64) {
    let mut r = rng(seed);
    for m in corpus(&mut r) {
        let d = bfs_distances(&m);
        for _ in 0..10 {
            let k = r.gen_range(1..=3);
            let s: Vec<usize> = (0..k).map(|_| r.gen_range(0..m.vertex_count())).collect();
            let h = convex_hull(&m, &s).unwrap();
            let hs: BTreeSet<usize> = h.iter().copied().collect();
            assert_eq!(hs, brute_hull(&d, &s));
            assert_eq!(convex_hull(&m, &h).unwrap(), h);
            let mut bigger = s.clone();
            bigger.push(r.gen_range(0..m.vertex_count()));
            let hb: BTreeSet<usize> = convex_hull(&m, &bigger).unwrap().into_iter().collect();
            assert!(hs.is_subset(&hb));
        }
    }
}

pub fn gates_and_edge_duality_on_random_pairs(seed: u64, count: usize) {
    let mut r = rng(seed);
    let mut cases = 0;
    while cases < count {
        let m = if r.gen_bool(0.5) {
            grid(r.gen_range(1..=4), r.gen_range(1..=4))
        } else {
            random_tree(r.gen_range(2..=12), &mut r)
        };
        let d = bfs_distances(&m);
        let (y1, y2) = (random_convex(&m, &mut r), random_convex(&m, &mut r));
        let gp = gates(&m, &y1, &y2).unwrap();
        assert!(gp.verified(), "{gp:?}");
        assert!(check_gate_edge_duality(&m, &gp).holds);
        // gate = points of Y1 nearest Y2, by graph distance
        let dist = |v: usize, s: &[usize]| s.iter().map(|&w| d[v][w]).min().unwrap();
        let best = y1.iter().map(|&v| dist(v, &y2)).min().unwrap();
        let v1: Vec<usize> = y1
            .iter()
            .copied()
            .filter(|&v| dist(v, &y2) == best)
            .collect();
        assert_eq!(gp.v1, v1);
        assert!(geodesically_closed(&d, &gp.v1.iter().copied().collect()));
        cases += 1;
    }
}

pub fn parallel_sets_match_distance_search(seed: u64) {
    let mut r = rng(seed);
    for m in corpus(&mut r) {
        let d = bfs_distances(&m);
        for _ in 0..5 {
            let y = random_convex(&m, &mut r);
            let pd = parallel_set(&m, &y).unwrap();
            assert!(pd.product_ok && pd.families_cross);
            // a parallel copy through v: the vertices at the same distance
            // from Y whose nearest points in Y are matched isometrically
            let near = |w: usize| {
                let best = y.iter().map(|&x| d[w][x]).min().unwrap();
                let at: Vec<usize> = y.iter().copied().filter(|&x| d[w][x] == best).collect();
                (best, at)
            };
            let mut expected = BTreeSet::new();
            for v in 0..m.vertex_count() {
                let (dv, pv) = near(v);
                let copy: BTreeSet<usize> = (0..m.vertex_count())
                    .filter(|&w| {
                        let (dw, pw) = near(w);
                        dw == dv && pw.len() == 1 && pv.len() == 1 && d[v][w] == d[pv[0]][pw[0]]
                    })
                    .collect();
                let images: BTreeSet<usize> = copy.iter().map(|&w| near(w).1[0]).collect();
                if copy.len() == y.len()
                    && images.len() == y.len()
                    && geodesically_closed(&d, &copy)
                {
                    expected.extend(copy);
                }
            }
            let got: BTreeSet<usize> = pd.parallel_set.iter().copied().collect();
            assert_eq!(got, expected, "Y = {y:?}");
        }
    }
}

pub fn products_match_crossing_components(seed: u64) {
    let mut r = rng(seed);
    for m in corpus(&mut r) {
        let p = product_decompose(&m);
        assert!(p.product_ok);
        let classes = brute_edge_classes(&m);
        let cross = brute_crossing(&m, &classes);
        // hyperplanes in different classes cross; within a class they are
        // linked by non-crossing chains
        let class_of = |h: usize| p.classes.iter().position(|c| c.contains(&h)).unwrap();
        let bid = |h: usize| {
            classes
                .iter()
                .position(|c| *c == m.hyperplanes()[h].edges)
                .unwrap()
        };
        let k = m.hyperplanes().len();
        for a in 0..k {
            for b in 0..k {
                if a != b && class_of(a) != class_of(b) {
                    assert!(cross[bid(a)][bid(b)]);
                }
            }
        }
        for c in &p.classes {
            let mut reach = BTreeSet::from([c[0]]);
            loop {
                let next: Vec<usize> = (0..k)
                    .filter(|&x| {
                        !reach.contains(&x) && reach.iter().any(|&y| !cross[bid(x)][bid(y)])
                    })
                    .collect();
                if next.is_empty() {
                    break;
                }
                reach.extend(next);
            }
            assert_eq!(reach, c.iter().copied().collect());
        }
        // multiply the factors back together
        if let Some((first, rest)) = p.factors.split_first() {
            let mut prod = first.clone();
            for f in rest {
                prod = prod.cartesian_product(f).unwrap();
            }
            assert_eq!(prod.vertex_count(), m.vertex_count());
            assert_eq!(prod.hyperplanes().len(), k);
            let crossings = |x: &MedianComplex| {
                let n = x.hyperplanes().len();
                (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| x.crosses(a, b))
                    .count()
            };
            assert_eq!(crossings(&prod), crossings(&m));
        }
    }
}

pub fn facing_triples_match_exhaustive_search(seed: u64) {
    let mut r = rng(seed);
    for m in corpus(&mut r) {
        let classes = brute_edge_classes(&m);
        let cross = brute_crossing(&m, &classes);
        let sides: Vec<Vec<usize>> = classes.iter().map(|c| brute_sides(&m, c)).collect();
        let side_of = |h: usize, k: usize| sides[h][m.edges()[classes[k][0]].0];
        let k = classes.len();
        let mut found = false;
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if a == b || b == c || a == c || cross[a][b] || cross[b][c] || cross[a][c] {
                        continue;
                    }
                    if side_of(a, b) == side_of(a, c)
                        && side_of(b, a) == side_of(b, c)
                        && side_of(c, a) == side_of(c, b)
                    {
                        found = true;
                    }
                }
            }
        }
        assert_eq!(has_facing_triple(&m).is_some(), found);
    }
}

pub fn duals_are_median_and_complete(seed: u64, count: usize) {
    let mut r = rng(seed);
    for i in 0..count {
        let walls = r.gen_range(0..=10);
        let points = r.gen_range(2..=12);
        let w = random_wallspace(points, walls, &mut r);
        let d = sageev_dual(&w, 16).unwrap();
        assert!(is_median(&d.to_square_complex()).unwrap(), "case {i}");
        if w.walls().len() <= 8 {
            assert_eq!(
                d.vertex_count(),
                brute_orientations(points, w.walls()),
                "case {i}"
            );
        }
        assert_eq!(d.hyperplanes().len(), w.walls().len());
    }
    let nested = Wallspace::parse("points 4\nwall 1\nwall 3\nwall 7\n").unwrap();
    assert_eq!(has_facing_triple(&sageev_dual(&nested, 16).unwrap()), None);
}
