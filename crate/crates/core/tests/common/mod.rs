#![allow(dead_code)]

pub mod cobordism_sweep;
pub mod index_gen;
pub mod mutation;
pub mod scenario_table;
pub mod torus;
pub mod words;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for (p, even) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // Inserting at `pos` moves the new element past len - pos others.
            let flips = p.len() - pos;
            out.push((q, even == (flips % 2 == 0)));
        }
    }
    out
}

/// Leibniz expansion.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut total = BigInt::zero();
    for (p, even) in permutations(n) {
        let mut term = BigInt::from(1);
        for (i, &j) in p.iter().enumerate() {
            term *= &m[i][j];
        }
        if even {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Invariant factors as ratios of determinantal divisors: `d_k` is the gcd
/// of all `k × k` minors and the k-th factor is `d_k / d_(k-1)`.
pub fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = BigInt::from(1);
    for k in 1..=rows.min(cols) {
        let mut d = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<BigInt>> =
                    rs.iter().map(|&i| cs.iter().map(|&j| BigInt::from(m[i][j])).collect()).collect();
                d = d.gcd(&det(&minor));
            }
        }
        if d.is_zero() {
            break;
        }
        out.push((&d / &prev).abs());
        prev = d;
    }
    out
}
