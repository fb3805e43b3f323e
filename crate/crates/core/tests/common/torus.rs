//! Straight-line model of multicurves on R²/Z². Crossings are found by
//! solving the line equations exactly, resolved by hand, and the resulting
//! components traced. Nothing here calls the library's gcd formulas.

use num_integer::Integer;
use num_rational::Ratio;
use sutcomb::slopes::{double_curve_sum, Orientation};
use sutcomb::{OrientedMulticurve, Slope};

type Q = Ratio<i64>;

fn det(a: (Q, Q), b: (Q, Q)) -> Q {
    a.0 * b.1 - a.1 * b.0
}

fn frac(x: Q) -> Q {
    x - x.floor()
}

fn qv(v: (i64, i64)) -> (Q, Q) {
    (Q::from(v.0), Q::from(v.1))
}

/// Integer vector `e` with `det(d, e) = 1`, for primitive `d`.
fn dual(d: (i64, i64)) -> (i64, i64) {
    let g = d.0.extended_gcd(&d.1);
    assert_eq!(g.gcd, 1);
    // x d0 + y d1 = 1, so det((d0, d1), (-y, x)) = d0 x + d1 y = 1.
    (-g.y, g.x)
}

/// `m` parallel copies of the primitive direction `d`, spaced along the
/// dual vector and shifted by `offset`.
fn lines(d: (i64, i64), m: u32, offset: (Q, Q)) -> Vec<(Q, Q)> {
    let e = qv(dual(d));
    (0..m)
        .map(|k| {
            let c = Q::new(k as i64, m as i64);
            (offset.0 + c * e.0, offset.1 + c * e.1)
        })
        .collect()
}

/// Brute-force count of crossings of two closed straight curves, by
/// scanning lattice translates.
pub fn crossings_by_scan(d1: (i64, i64), d2: (i64, i64)) -> i64 {
    let (a, b) = (qv(d1), qv(d2));
    let dd = det(a, b);
    if dd == Q::from(0) {
        return 0;
    }
    let shift = (Q::new(1, 7), Q::new(2, 11));
    let bound = d1.0.abs() + d1.1.abs() + d2.0.abs() + d2.1.abs() + 1;
    let mut count = 0;
    for nx in -bound..=bound {
        for ny in -bound..=bound {
            // t a - s b = shift + n
            let w = (shift.0 + Q::from(nx), shift.1 + Q::from(ny));
            let t = det(w, b) / dd;
            let s = -det(a, w) / dd;
            let unit = |x: Q| x >= Q::from(0) && x < Q::from(1);
            if unit(t) && unit(s) {
                count += 1;
            }
        }
    }
    count
}

/// Components of the oriented resolution of two transverse families,
/// each given as its class in H_1.
pub fn resolve(d1: (i64, i64), m1: u32, d2: (i64, i64), m2: u32) -> Vec<(i64, i64)> {
    let (a, b) = (qv(d1), qv(d2));
    let dd = det(a, b);
    let n = dd.to_integer().abs();
    let la = lines(d1, m1, (Q::new(1, 101), Q::new(3, 103)));
    let lb = lines(d2, m2, (Q::new(2, 107), Q::new(5, 109)));
    let fb = qv(dual(d2));
    // Crossing c sits at parameter t on its A line and s on its B line.
    let mut on_a: Vec<Vec<(Q, usize)>> = vec![Vec::new(); la.len()];
    let mut on_b: Vec<Vec<(Q, usize)>> = vec![Vec::new(); lb.len()];
    let mut count = 0;
    for (i, p) in la.iter().enumerate() {
        for (j, q) in lb.iter().enumerate() {
            let w = (q.0 - p.0, q.1 - p.1);
            let t0 = det(w, b) / dd;
            for k in 0..n {
                let t = frac(t0 + Q::new(k, n));
                let x = (p.0 + t * a.0 - q.0, p.1 + t * a.1 - q.1);
                // x = s b mod Z², and det(b, fb) = 1 picks out s.
                let s = frac(det(x, fb));
                on_a[i].push((t, count));
                on_b[j].push((s, count));
                count += 1;
            }
        }
    }
    // Segments start at a crossing; the successor of a segment is the
    // segment of the other family leaving its end crossing.
    let segments = |lines: &mut Vec<Vec<(Q, usize)>>, dir: (Q, Q)| {
        let mut disp = vec![(Q::from(0), Q::from(0)); count];
        let mut end = vec![0usize; count];
        for l in lines.iter_mut() {
            l.sort();
            for (k, &(t, c)) in l.iter().enumerate() {
                let (t2, c2) = l[(k + 1) % l.len()];
                let mut len = t2 - t;
                if len <= Q::from(0) {
                    len += Q::from(1);
                }
                disp[c] = (len * dir.0, len * dir.1);
                end[c] = c2;
            }
        }
        (disp, end)
    };
    let (seg_a, end_a) = segments(&mut on_a, a);
    let (seg_b, end_b) = segments(&mut on_b, b);
    // States: (family, starting crossing). A segment ending at c continues
    // on the other family's segment starting at c.
    let mut seen = vec![[false; 2]; count];
    let mut out = Vec::new();
    for c0 in 0..count {
        for f0 in 0..2 {
            if seen[c0][f0] {
                continue;
            }
            let (mut c, mut f) = (c0, f0);
            let mut class = (Q::from(0), Q::from(0));
            while !seen[c][f] {
                seen[c][f] = true;
                let (disp, next) = if f == 0 { (seg_a[c], end_a[c]) } else { (seg_b[c], end_b[c]) };
                class = (class.0 + disp.0, class.1 + disp.1);
                c = next;
                f = 1 - f;
            }
            assert!(class.0.is_integer() && class.1.is_integer());
            out.push((class.0.to_integer(), class.1.to_integer()));
        }
    }
    out
}

pub fn slopes_up_to(n: i64) -> Vec<Slope> {
    let mut v = Vec::new();
    for p in -n..=n {
        for q in 0..=n {
            if p.gcd(&q) == 1 && (q > 0 || p == 1) {
                v.push(Slope::new(p, q).unwrap());
            }
        }
    }
    v
}

pub fn vec_of(s: &Slope, o: Orientation) -> (i64, i64) {
    s.vector(o)
}


/// Library double curve sums against [`resolve`] over all slope pairs with
/// coordinates at most `n` and multiplicities at most `m`. Returns the case
/// count and the mismatches.
pub fn double_curve_sum_grid(n: i64, m: u32) -> (usize, Vec<String>) {
    let all = slopes_up_to(n);
    let mut cases = 0;
    let mut bad = Vec::new();
    for (ia, a) in all.iter().enumerate() {
        for b in &all[ia + 1..] {
            for m1 in 1..=m {
                for m2 in 1..=m {
                    for o2 in [Orientation::Positive, Orientation::Negative] {
                        let o1 = Orientation::Positive;
                        cases += 1;
                        let comps = resolve(vec_of(a, o1), m1, vec_of(b, o2), m2);
                        let c1 = OrientedMulticurve::single(a.clone(), m1, o1).unwrap();
                        let c2 = OrientedMulticurve::single(b.clone(), m2, o2).unwrap();
                        let sum = match double_curve_sum(&c1, &c2) {
                            Ok(s) => s,
                            Err(e) => {
                                bad.push(format!("{a}x{m1} {b}x{m2}: {e}"));
                                continue;
                            }
                        };
                        let total = comps.iter().fold((0, 0), |s, c| (s.0 + c.0, s.1 + c.1));
                        let t = &sum.terms()[0];
                        let v = t.slope.vector(t.orientation);
                        if sum.class() != total
                            || sum.component_count() != comps.len() as u64
                            || comps.iter().any(|&c| c != v)
                        {
                            bad.push(format!("{a}x{m1} {b}x{m2}: got {:?}, resolved {comps:?}", sum.class()));
                        }
                    }
                }
            }
        }
    }
    (cases, bad)
}
