//! Standard median graphs and seeded random inputs.

use rand::Rng;

use super::{MedianComplex, Wallspace};

/// Seed used when `CUBARTIN_SEED` is unset or unparsable.
pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

/// Seed for randomized corpora, from `CUBARTIN_SEED`.
pub fn seed_from_env() -> u64 {
    std::env::var("CUBARTIN_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

fn build(names: Vec<String>, edges: &[(usize, usize)]) -> MedianComplex {
    MedianComplex::from_graph(names, edges).expect("generator output is median")
}

/// Path with `k` edges on vertices `p0 … pk`.
pub fn path(k: usize) -> MedianComplex {
    let names = (0..=k).map(|i| format!("p{i}")).collect();
    let edges: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
    build(names, &edges)
}

/// Grid of `w × h` squares; vertex `x:y` for `0 ≤ x ≤ w`, `0 ≤ y ≤ h`.
pub fn grid(w: usize, h: usize) -> MedianComplex {
    let id = |x: usize, y: usize| y * (w + 1) + x;
    let mut names = Vec::new();
    let mut edges = Vec::new();
    for y in 0..=h {
        for x in 0..=w {
            names.push(format!("{x}:{y}"));
            if x < w {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y < h {
                edges.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    build(names, &edges)
}

/// The `d`-cube; vertices are bit strings (`o` for the point).
pub fn cube(d: usize) -> MedianComplex {
    let names = (0..1usize << d)
        .map(|i| {
            if d == 0 {
                "o".to_string()
            } else {
                (0..d)
                    .map(|j| if i >> (d - 1 - j) & 1 == 1 { '1' } else { '0' })
                    .collect()
            }
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..1usize << d {
        for j in 0..d {
            if i & (1 << j) == 0 {
                edges.push((i, i | 1 << j));
            }
        }
    }
    build(names, &edges)
}

/// Star with centre `c` and leaves `l1`, `l2`, `l3`.
pub fn tripod() -> MedianComplex {
    let names = ["c", "l1", "l2", "l3"].map(String::from).to_vec();
    build(names, &[(0, 1), (0, 2), (0, 3)])
}

/// Tree on `t0 … tn` where `t{i+1}` hangs off `t{parents[i]}`.
pub fn tree_from_parents(parents: &[usize]) -> MedianComplex {
    let names = (0..=parents.len()).map(|i| format!("t{i}")).collect();
    let edges: Vec<_> = parents
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            assert!(p <= i, "parent of t{} must precede it", i + 1);
            (p, i + 1)
        })
        .collect();
    build(names, &edges)
}

/// Uniform random recursive tree with `edges` edges.
pub fn random_tree(edges: usize, rng: &mut impl Rng) -> MedianComplex {
    let parents: Vec<usize> = (0..edges).map(|i| rng.gen_range(0..=i)).collect();
    tree_from_parents(&parents)
}

/// Random wallspace; every wall has two nonempty sides and walls are
/// distinct, so fewer than `walls` may come back for tiny point sets.
pub fn random_wallspace(points: usize, walls: usize, rng: &mut impl Rng) -> Wallspace {
    assert!((2..=128).contains(&points), "need 2 to 128 points");
    let full = if points == 128 {
        u128::MAX
    } else {
        (1u128 << points) - 1
    };
    let mut masks: Vec<u128> = Vec::new();
    let mut attempts = 0;
    while masks.len() < walls && attempts < walls * 50 {
        attempts += 1;
        let m = rng.gen::<u128>() & full;
        if m == 0 || m == full || masks.iter().any(|&x| x == m || x == full ^ m) {
            continue;
        }
        masks.push(m);
    }
    Wallspace::new(points, masks).expect("masks are valid walls")
}
