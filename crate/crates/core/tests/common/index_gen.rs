//! Scenario generators for the two closed-form index identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sutcomb::surfaces::{SurfaceComponent, SurfaceSpec};
use sutcomb::sutured::{BoundaryWord, Letter, ParamSurface, Piece};

/// `Q = Q̄ ∩ N` for a surface `Q̄` in a Dehn surgery on a link: each point
/// of `Q̄ ∩ α` becomes a boundary circle on the torus around a β loop, and
/// boundary circles of `Q̄` on `∂M` miss γ (there is none) and β.
pub struct DehnCase {
    pub q: ParamSurface,
    pub qbar: SurfaceSpec,
    pub alpha_intersections: u64,
}

pub fn dehn_cases(count: usize, seed: u64) -> Vec<DehnCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let comps = rng.gen_range(1..=3);
            let mut pieces = Vec::new();
            let mut qbar = Vec::new();
            let mut total = 0;
            for _ in 0..comps {
                let g = rng.gen_range(0..=4);
                let b = rng.gen_range(0..=2);
                // Planar pieces of Q need χ ≤ 0 to have nonnegative index.
                let min_n = if g == 0 { 2u32.saturating_sub(b) } else { 0 };
                let n: u32 = rng.gen_range(min_n..=6);
                let loops = rng.gen_range(0..=2u32);
                let mut words: Vec<BoundaryWord> = (0..b).map(|_| BoundaryWord::new(Vec::new())).collect();
                words.extend((0..n).map(|_| BoundaryWord::new(vec![Letter::Loop(rng.gen_range(0..=loops))])));
                pieces.push(Piece::new(g, words));
                qbar.push(SurfaceComponent::new(g, b, 0));
                total += u64::from(n);
            }
            DehnCase { q: ParamSurface::new(pieces), qbar: SurfaceSpec::new(qbar).unwrap(), alpha_intersections: total }
        })
        .collect()
}

/// `Q ⊂ N` with every boundary component parallel to a curve `a` meeting
/// the suture `b` in Δ points, seen in `(N, γ, ∅)` (words of suture
/// crossings) and in `(M, γ - b, β)` after the 2-handle (words of spanning
/// arcs of the cocore). Δ is even: `a` is closed and crosses only `b`.
pub struct TwoHandleCase {
    pub in_n: ParamSurface,
    pub in_m: ParamSurface,
    pub qbar: SurfaceSpec,
    pub boundary_curves: u64,
    pub delta: u64,
}

pub fn two_handle_cases(count: usize, seed: u64) -> Vec<TwoHandleCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let g = rng.gen_range(0..=4);
            let k = rng.gen_range(1..=5u32);
            let delta = 2 * rng.gen_range(1..=4u64);
            let word = |letter: Letter| BoundaryWord::new(vec![letter; delta as usize]);
            let in_n = ParamSurface::new(vec![Piece::new(g, (0..k).map(|_| word(Letter::Suture(0))).collect())]);
            let in_m = ParamSurface::new(vec![Piece::new(g, (0..k).map(|_| word(Letter::Arc(0))).collect())]);
            TwoHandleCase {
                in_n,
                in_m,
                qbar: SurfaceSpec::connected(SurfaceComponent::closed(g)).unwrap(),
                boundary_curves: u64::from(k),
                delta,
            }
        })
        .collect()
}
