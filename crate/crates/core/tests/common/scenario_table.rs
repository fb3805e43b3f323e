//! Conclusions of the exceptional surgery theorem worked out by hand for
//! fixed flag sets, and a literal evaluation of the surgery inequality.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sutcomb::harness::{check_surgery_inequality, scenario_report, Flag, Flags, Scenario, ScenarioKind};

use Flag::*;
use ScenarioKind::*;

pub struct Row {
    pub kind: ScenarioKind,
    pub delta: u64,
    pub chi: i64,
    pub alpha: u64,
    pub flags: Flags,
    pub expected: &'static str,
}

fn only(set: &[Flag]) -> Flags {
    let mut f = Flags::default();
    for &flag in set {
        f.set(flag, true);
    }
    f
}

fn all_but(unset: &[Flag]) -> Flags {
    unset.iter().fold(Flags::all(), |f, &flag| f.without(flag))
}

const BASE: [Flag; 5] = [NIrreducible, NBoundaryIrreducible, H2Nonzero, MIrreducible, ExceptionalClass];

const BDRY: &str = "M' is boundary-irreducible (no essential disc meets alpha)";
const LENS: &str = "lens space proper summand";
const ONE: &str = "delta = 1";
const TORUS: &str = "genus-2 submanifold branch (delta != 1)";
const ANNULUS: &str = "single torus boundary, Heegaard genus 2 branch (delta != 1)";

pub fn golden() -> Vec<Row> {
    let row = |kind, delta, chi, alpha, flags, expected| Row { kind, delta, chi, alpha, flags, expected };
    let mut torus_min = BASE.to_vec();
    torus_min.push(MPrimeIrreducible);
    vec![
        row(Sphere, 3, 2, 2, Flags::all(), LENS),
        row(Sphere, 1, 2, 1, Flags::all(), LENS),
        row(Sphere, 2, 2, 4, only(&BASE), LENS),
        row(Sphere, 3, 2, 2, all_but(&[NIrreducible]), "theorem not applicable: N_irreducible unset"),
        row(Sphere, 3, 2, 2, all_but(&[ExceptionalClass]), "theorem not applicable: exceptional_class unset"),
        row(Disc, 2, 1, 1, Flags::all(), BDRY),
        row(Disc, 5, 1, 3, only(&BASE), BDRY),
        row(Disc, 2, 1, 1, all_but(&[NBoundaryIrreducible]), "theorem not applicable: N_boundary_irreducible unset"),
        row(Disc, 2, 1, 1, all_but(&[MIrreducible, H2Nonzero]), "theorem not applicable: H2_nonzero unset"),
        row(Torus, 1, 0, 2, Flags::all(), ONE),
        row(Torus, 2, 0, 2, Flags::all(), TORUS),
        row(Torus, 4, 0, 1, only(&torus_min), TORUS),
        row(Torus, 2, 0, 2, all_but(&[MPrimeIrreducible]), "theorem not applicable: M_prime_irreducible unset"),
        row(Torus, 1, 0, 3, all_but(&[MPrimeAtoroidal]), ONE),
        row(Annulus, 1, 0, 2, Flags::all(), ONE),
        row(Annulus, 3, 0, 2, Flags::all(), ANNULUS),
        row(Annulus, 2, 0, 2, all_but(&[MPrimeAtoroidal]), "theorem not applicable: M_prime_atoroidal unset"),
        row(Annulus, 2, 0, 2, all_but(&[BoundaryComponentBoundOk]), "theorem not applicable: boundary_component_bound_ok unset"),
        row(Annulus, 2, 0, 2, all_but(&[MPrimeIrreducible, MPrimeAtoroidal]), "theorem not applicable: M_prime_irreducible unset"),
        row(Annulus, 1, 0, 2, Flags::default(), "theorem not applicable: N_irreducible unset"),
        row(GenusG, 3, -2, 1, only(&[AssumptionsAToD, ExceptionalClass]), "inequality holds (2 <= 2)"),
        row(GenusG, 2, -2, 3, Flags::all(), "inequality violated (3 > 2): no such surface exists"),
        row(GenusG, 2, -4, 3, all_but(&[AssumptionsAToD]), "theorem not applicable: assumptions_A_to_D unset"),
        row(GenusG, 1, -4, 100, only(&[AssumptionsAToD, ExceptionalClass]), "inequality holds (0 <= 4)"),
    ]
}

/// Rows whose report differs from the hand-derived text.
pub fn golden_mismatches() -> Vec<String> {
    golden()
        .into_iter()
        .filter_map(|r| {
            let s = Scenario::new(r.kind, r.delta, r.chi, r.alpha).with_flags(r.flags);
            let got = match scenario_report(&s) {
                Ok(c) => c.to_string(),
                Err(e) => e.to_string(),
            };
            (got != r.expected).then(|| format!("{:?} delta {}: {got:?}, expected {:?}", r.kind, r.delta, r.expected))
        })
        .collect()
}

/// Random `(Δ, |Q̄ ∩ α|, χ)` with `χ` matched to a surface kind; returns the
/// number of disagreements with `(Δ - 1) |Q̄ ∩ α| <= -χ` evaluated in
/// big integers.
pub fn literal_mismatches(count: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for k in 0..count {
        // Small values exercise the boundary of the inequality, large ones
        // exercise overflow.
        let big = k % 4 == 3;
        let delta: u64 = if big { rng.gen_range(1..=u64::MAX / 2) } else { rng.gen_range(1..=6) };
        let alpha: u64 = if big { rng.gen_range(0..=u64::MAX / 2) } else { rng.gen_range(0..=8) };
        let (kind, chi) = match rng.gen_range(0..4) {
            0 => (Sphere, 2),
            1 => (Disc, 1),
            2 => (if rng.gen() { Torus } else { Annulus }, 0),
            _ => (GenusG, -2 * rng.gen_range(1..=if big { i64::MAX / 4 } else { 6 })),
        };
        let s = Scenario::new(kind, delta, chi, alpha);
        let literal = (BigInt::from(delta) - 1) * BigInt::from(alpha) <= -BigInt::from(chi);
        match check_surgery_inequality(&s) {
            Ok(i) if i.holds == literal => {}
            _ => bad += 1,
        }
    }
    bad
}
