//! Tube-compression homology against the determinantal-divisor oracle.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sutcomb::cobordism::{cobordism_homology, SurfaceKind, TubeCompressionData};

use super::invariant_factors_by_minors;

#[derive(Default)]
pub struct Sweep {
    pub cases: u64,
    pub failures: Vec<String>,
}

impl Sweep {
    fn check(&mut self, g: u32, kind: SurfaceKind, q: u64, a: &[i64]) {
        self.cases += 1;
        let alpha = 2 + (self.cases % 5);
        let mut d = TubeCompressionData::new(g, kind, q, alpha);
        d.a = a.to_vec();
        let rep = match cobordism_homology(&d) {
            Ok(r) => r,
            Err(e) => return self.failures.push(format!("g={g} q={q} a={a:?}: {e}")),
        };
        let mut row: Vec<i64> = a.to_vec();
        row.push(q as i64);
        let factors = invariant_factors_by_minors(&[row]);
        let free = 2 * g as usize + 1 - factors.len();
        let torsion: Vec<BigInt> = factors.into_iter().filter(|f| *f != BigInt::from(1)).collect();
        let got: Vec<BigInt> = rep.h1_integral.torsion.iter().map(|&t| BigInt::from(t)).collect();
        let lens_expected = matches!(kind, SurfaceKind::Sphere | SurfaceKind::Disc) && q >= 2;
        let r = &rep.r_surface.components()[0];
        let ok = rep.h1_integral.free_rank == free
            && got == torsion
            && rep.h1_rational_rank == 2 * g as usize
            && rep.is_product == (q == 1)
            && rep.is_rational_cobordism
            && rep.lens_summand == lens_expected.then_some(q)
            && r.genus == g
            && u64::from(r.punctures) == alpha - 2;
        if !ok {
            self.failures.push(format!("g={g} {kind:?} q={q} a={a:?}: got {}", rep.h1_integral));
        }
    }
}

fn tuples(len: usize, lo: i64, hi: i64, visit: &mut dyn FnMut(&[i64])) {
    fn go(cur: &mut Vec<i64>, len: usize, lo: i64, hi: i64, visit: &mut dyn FnMut(&[i64])) {
        if cur.len() == len {
            visit(cur);
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            go(cur, len, lo, hi, visit);
            cur.pop();
        }
    }
    go(&mut Vec::with_capacity(len), len, lo, hi, visit);
}

/// g ≤ 2 over every `|a_i| ≤ 6`, `1 ≤ q ≤ 12`; g = 3 over sorted
/// nonnegative coefficient tuples (the group depends on the tuple only up
/// to signed permutation) plus `sample` random full tuples.
pub fn sweep(sample: usize) -> Sweep {
    let mut s = Sweep::default();
    for q in 1..=12 {
        s.check(0, SurfaceKind::Sphere, q, &[]);
        s.check(0, SurfaceKind::Disc, q, &[]);
        for g in 1..=2u32 {
            let kind = if g == 1 { SurfaceKind::Bounded } else { SurfaceKind::ClosedGenusG };
            tuples(2 * g as usize, -6, 6, &mut |a| s.check(g, kind, q, a));
        }
        tuples(6, 0, 6, &mut |a| {
            if a.windows(2).all(|w| w[0] <= w[1]) {
                s.check(3, SurfaceKind::ClosedGenusG, q, a);
            }
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..sample {
        let a: Vec<i64> = (0..6).map(|_| rng.gen_range(-6..=6)).collect();
        s.check(3, SurfaceKind::ClosedGenusG, rng.gen_range(1..=12), &a);
    }
    s
}
