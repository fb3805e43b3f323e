//! Smith normal form over the integers and finitely generated abelian groups.

use std::fmt;

use serde::Serialize;

use crate::scalar::IntScalar;

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix, all
/// positive. Rows and columns are both arbitrary; the matrix may be empty.
pub fn invariant_factors<T: IntScalar>(matrix: &[Vec<T>]) -> Vec<T> {
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: entry of least nonzero absolute value in the remaining block.
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                let f = a[i][t].div_floor(&p);
                if !f.is_zero() {
                    for j in t..cols {
                        let v = a[t][j].clone() * f.clone();
                        a[i][j] = a[i][j].clone() - v;
                    }
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                let f = a[t][j].div_floor(&p);
                if !f.is_zero() {
                    for i in t..rows {
                        let v = a[i][t].clone() * f.clone();
                        a[i][j] = a[i][j].clone() - v;
                    }
                }
                dirty |= !a[t][j].is_zero();
            }
            if !dirty {
                // Divisibility of the rest of the block by the pivot.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].mod_floor(&p).is_zero());
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = a[i][j].clone();
                            a[t][j] = a[t][j].clone() + v;
                        }
                        continue;
                    }
                }
            }
            // Move the least remaining entry of row/column t into the pivot.
            let (mut bi, mut bj) = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[bi][bj].abs() {
                    (bi, bj) = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[bi][bj].abs() {
                    (bi, bj) = (t, j);
                }
            }
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        factors.push(a[t][t].abs());
        t += 1;
    }
    factors
}

/// `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `t_1 | ... | t_k`, each `t_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: IntScalar + Serialize"))]
pub struct AbelianGroup<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
}

impl<T: IntScalar> AbelianGroup<T> {
    /// Group presented by `generators` generators and one relation per row.
    pub fn from_presentation(generators: usize, relations: &[Vec<T>]) -> Self {
        let factors = invariant_factors(relations);
        let free_rank = generators - factors.len();
        let torsion = factors.into_iter().filter(|d| !d.is_one()).collect();
        Self { free_rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn rational_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_order(&self) -> T {
        self.torsion.iter().fold(T::one(), |acc, t| acc * t.clone())
    }
}

impl<T: IntScalar> fmt::Display for AbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices() {
        assert_eq!(invariant_factors(&[vec![2i64, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(invariant_factors(&[vec![0i64, 0]]), Vec::<i64>::new());
        assert_eq!(invariant_factors::<i64>(&[]), Vec::<i64>::new());
        assert_eq!(invariant_factors(&[vec![4i64], vec![6]]), vec![2]);
        assert_eq!(invariant_factors(&[vec![2i64, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn groups() {
        let g = AbelianGroup::from_presentation(3, &[vec![0i64, 0, 5]]);
        assert_eq!(g.to_string(), "Z^2 + Z/5");
        let h = AbelianGroup::from_presentation(1, &[vec![1i64]]);
        assert!(h.is_trivial());
        assert_eq!(h.to_string(), "0");
    }
}
