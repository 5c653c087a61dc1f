//! The rank-3 spherical Artin groups with `m_ab = 3`, `m_bc = 2` and
//! `m_ac ∈ {3, 4, 5}` (types A3, B3, H3), their centres, and bounded
//! instance checks of the subgroup/centre intersection statements.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use super::coxeter::CoxeterGroup;
use super::garside::{ArtinContext, GarsideElement};
use super::AlgebraError;
use crate::word::Letter;

pub const ABC: [char; 3] = ['a', 'b', 'c'];

/// Largest ball radius accepted by [`bounded_lemma_checks`]. The ball of
/// radius `L` in a two-generator subgroup has at most `4·3^(L-1)` elements,
/// each costing one normal-form multiplication.
pub const MAX_BALL_RADIUS: usize = 10;
pub const MAX_POWER: i64 = 16;

#[derive(Clone, Debug)]
pub struct SphericalContext {
    m: u32,
    artin: ArtinContext,
}

impl SphericalContext {
    pub fn new(m: u32) -> Result<Self, AlgebraError> {
        let group = CoxeterGroup::rank3(m)?;
        let name = match m {
            3 => "A3",
            4 => "B3",
            _ => "H3",
        };
        Ok(SphericalContext {
            m,
            artin: ArtinContext::new(name, group, ABC.to_vec()),
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn artin(&self) -> &ArtinContext {
        &self.artin
    }

    /// `2` when the centre is generated by `Δ²`, `1` when by `Δ`.
    pub fn central_exponent(&self) -> i64 {
        if self.m == 3 {
            2
        } else {
            1
        }
    }

    pub fn central_element(&self) -> GarsideElement {
        GarsideElement::delta_power(self.central_exponent())
    }

    fn generator(&self, s: usize) -> GarsideElement {
        let mut e = GarsideElement::identity();
        self.artin.mul_letter(&mut e, Letter::pos(s));
        e
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CenterReport {
    pub m: u32,
    pub central_exponent: i64,
    /// Whether `Δ` commutes with `a`, `b`, `c`.
    pub delta_commutes: [bool; 3],
    /// Whether the designated central element commutes with `a`, `b`, `c`.
    pub central_commutes: [bool; 3],
    /// `nf(g z g⁻¹) = nf(z)` for each generator `g`.
    pub conjugation_invariant: bool,
    /// The designated generator's normal form is a pure `Δ` power.
    pub pure_delta_power: bool,
    pub ok: bool,
}

pub fn center_check(ctx: &SphericalContext) -> CenterReport {
    let a = &ctx.artin;
    let z = ctx.central_element();
    let delta = GarsideElement::delta_power(1);
    let gens: Vec<GarsideElement> = (0..3).map(|s| ctx.generator(s)).collect();
    let delta_commutes = [0, 1, 2].map(|s| a.commute(&delta, &gens[s]));
    let central_commutes = [0, 1, 2].map(|s| a.commute(&z, &gens[s]));
    let conjugation_invariant = gens.iter().all(|g| {
        let conj = a.mul(&a.mul(g, &z), &a.inverse(g));
        conj == z
    });
    let pure_delta_power = z.factors.is_empty();
    let delta_expected = ctx.central_exponent() == 1;
    let ok = central_commutes.iter().all(|&c| c)
        && conjugation_invariant
        && pure_delta_power
        && delta_commutes.iter().all(|&c| c) == delta_expected;
    CenterReport {
        m: ctx.m,
        central_exponent: ctx.central_exponent(),
        delta_commutes,
        central_commutes,
        conjugation_invariant,
        pure_delta_power,
        ok,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Word length bound `L` in the two-generator subgroups.
    pub length: usize,
    /// Bound `K` on the exponent of the central generator.
    pub z_power: i64,
    /// Bound `M` on the exponent of `c`.
    pub c_power: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundedReport {
    pub label: &'static str,
    pub m: u32,
    pub bounds: Bounds,
    pub ball_ab: usize,
    pub ball_bc: usize,
    /// `A_ab ∩ Z` and `A_bc ∩ Z` contain no `z^k`, `0 < |k| ≤ K`, within the
    /// length bound.
    pub intersections_trivial: bool,
    /// No `c^m`, `0 < |m| ≤ M`, equals `g z^k` with `g ∈ A_ab` of length
    /// `≤ L` and `|k| ≤ K`.
    pub c_powers_outside: bool,
    pub witnesses: Vec<String>,
}

impl BoundedReport {
    pub fn verified(&self) -> bool {
        self.intersections_trivial && self.c_powers_outside
    }
}

/// Normal forms of all elements of length `≤ radius` in the subgroup
/// generated by `gens`.
fn ball(ctx: &ArtinContext, gens: &[usize], radius: usize) -> HashSet<GarsideElement> {
    let mut seen = HashSet::new();
    let mut frontier = VecDeque::new();
    seen.insert(GarsideElement::identity());
    frontier.push_back((GarsideElement::identity(), 0usize));
    while let Some((e, d)) = frontier.pop_front() {
        if d == radius {
            continue;
        }
        for &g in gens {
            for inverse in [false, true] {
                let mut next = e.clone();
                ctx.mul_letter(&mut next, Letter { gen: g, inverse });
                if seen.insert(next.clone()) {
                    frontier.push_back((next, d + 1));
                }
            }
        }
    }
    seen
}

/// Exhaustive check of the intersection statements up to the given bounds.
/// A passing report is a bounded verification, not a proof.
pub fn bounded_lemma_checks(
    ctx: &SphericalContext,
    bounds: Bounds,
) -> Result<BoundedReport, AlgebraError> {
    if bounds.length > MAX_BALL_RADIUS
        || bounds.z_power > MAX_POWER
        || bounds.c_power > MAX_POWER
        || bounds.z_power < 0
        || bounds.c_power < 0
    {
        return Err(AlgebraError::BoundOverflow {
            length: bounds.length,
            power: bounds.z_power.max(bounds.c_power),
        });
    }
    let a = &ctx.artin;
    let z = ctx.central_element();
    let ab = ball(a, &[0, 1], bounds.length);
    let bc = ball(a, &[1, 2], bounds.length);
    let mut witnesses = BTreeSet::new();

    let mut intersections_trivial = true;
    for k in (-bounds.z_power..=bounds.z_power).filter(|&k| k != 0) {
        let zk = a.pow(&z, k);
        for (name, set) in [("A_ab", &ab), ("A_bc", &bc)] {
            if set.contains(&zk) {
                intersections_trivial = false;
                witnesses.insert(format!("z^{k} lies in {name}"));
            }
        }
    }

    let mut c_powers_outside = true;
    let c = ctx.generator(2);
    for m in (-bounds.c_power..=bounds.c_power).filter(|&m| m != 0) {
        let cm = a.pow(&c, m);
        for k in -bounds.z_power..=bounds.z_power {
            // c^m = g z^k  <=>  g = c^m z^-k
            let g = a.mul(&cm, &a.pow(&z, -k));
            if ab.contains(&g) {
                c_powers_outside = false;
                witnesses.insert(format!("c^{m} = g z^{k} with g in A_ab"));
            }
        }
    }

    Ok(BoundedReport {
        label: "bounded verification",
        m: ctx.m,
        bounds,
        ball_ab: ab.len(),
        ball_bc: bc.len(),
        intersections_trivial,
        c_powers_outside,
        witnesses: witnesses.into_iter().collect(),
    })
}
