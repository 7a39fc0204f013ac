//! Exact rational feasibility of standard-form systems.
//!
//! One primitive: does `Σ λ_j·col_j = target` admit a solution with every
//! `λ_j ≥ 0`?  Phase-1 simplex over `BigRational` with Bland's rule, which
//! cannot cycle.  Row implication for cones reduces to this by the
//! homogeneous Farkas lemma, which keeps the tableau height at the cone's
//! dimension no matter how many rows Fourier–Motzkin has piled up.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// True iff `target` is a nonnegative combination of `columns` (each a
/// vector of the same dimension).
pub(crate) fn nonneg_combination_exists(
    columns: &[Vec<BigRational>],
    target: &[BigRational],
) -> bool {
    let m = target.len();
    if m == 0 {
        return true;
    }
    debug_assert!(columns.iter().all(|c| c.len() == m));
    let n = columns.len();

    // Tableau rows: Σ λ_j col_j + artificials = target, rows flipped so the
    // right-hand side is nonnegative; artificials form the initial basis.
    let cols = n + m;
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = target[i].is_negative();
        let mut row = vec![BigRational::zero(); cols];
        for (j, col) in columns.iter().enumerate() {
            row[j] = if flip { -col[i].clone() } else { col[i].clone() };
        }
        row[n + i] = BigRational::one();
        tableau.push(row);
        rhs.push(if flip { -target[i].clone() } else { target[i].clone() });
    }
    let mut basis: Vec<usize> = (0..m).map(|i| n + i).collect();

    // Phase 1: minimize the artificial sum.  With unit costs on artificials
    // the reduced cost of column j is c_j − Σ_{i: basis(i) artificial} t[i][j].
    loop {
        let mut enter = None;
        for j in 0..cols {
            let mut reduced = if j >= n { BigRational::one() } else { BigRational::zero() };
            for (i, &bj) in basis.iter().enumerate() {
                if bj >= n {
                    reduced -= &tableau[i][j];
                }
            }
            if reduced.is_negative() {
                enter = Some(j); // Bland: first improving column
                break;
            }
        }
        let Some(enter) = enter else { break };

        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..m {
            if tableau[i][enter].is_positive() {
                let ratio = &rhs[i] / &tableau[i][enter];
                let better = match (&best, leave) {
                    (None, _) => true,
                    (Some(b), Some(l)) => ratio < *b || (ratio == *b && basis[i] < basis[l]),
                    (Some(_), None) => unreachable!(),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(pivot_row) = leave else {
            // A negative reduced cost with no positive entry would mean the
            // phase-1 objective is unbounded below, impossible at ≥ 0.
            break;
        };

        let pivot = tableau[pivot_row][enter].clone();
        for c in tableau[pivot_row].iter_mut() {
            *c /= &pivot;
        }
        rhs[pivot_row] /= &pivot;
        for i in 0..m {
            if i == pivot_row || tableau[i][enter].is_zero() {
                continue;
            }
            let factor = tableau[i][enter].clone();
            let (pivot_ref, row) = if i < pivot_row {
                let (a, b) = tableau.split_at_mut(pivot_row);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = tableau.split_at_mut(i);
                (&a[pivot_row], &mut b[0])
            };
            for (x, p) in row.iter_mut().zip(pivot_ref.iter()) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
            let sub = &factor * &rhs[pivot_row];
            rhs[i] -= sub;
        }
        basis[pivot_row] = enter;
    }

    basis
        .iter()
        .enumerate()
        .all(|(i, &bj)| bj < n || rhs[i].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    fn col(vals: &[i64]) -> Vec<BigRational> {
        vals.iter().map(|&v| r(v)).collect()
    }

    #[test]
    fn empty_target_dimension() {
        assert!(nonneg_combination_exists(&[], &[]));
    }

    #[test]
    fn exact_generator_match() {
        let cols = vec![col(&[1, 0]), col(&[0, 1])];
        assert!(nonneg_combination_exists(&cols, &col(&[3, 5])));
        assert!(!nonneg_combination_exists(&cols, &col(&[-1, 5])));
    }

    #[test]
    fn needs_a_mix() {
        // (1,1) and (1,-1) generate the right half-plane's cone.
        let cols = vec![col(&[1, 1]), col(&[1, -1])];
        assert!(nonneg_combination_exists(&cols, &col(&[2, 0])));
        assert!(nonneg_combination_exists(&cols, &col(&[3, 1])));
        assert!(!nonneg_combination_exists(&cols, &col(&[0, 1])));
        assert!(!nonneg_combination_exists(&cols, &col(&[-1, 0])));
    }

    #[test]
    fn zero_target_is_always_reachable() {
        let cols = vec![col(&[2, 3]), col(&[-1, 4])];
        assert!(nonneg_combination_exists(&cols, &col(&[0, 0])));
    }

    #[test]
    fn rational_scaling() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let cols = vec![vec![half.clone(), half]];
        assert!(nonneg_combination_exists(&cols, &col(&[7, 7])));
        assert!(!nonneg_combination_exists(&cols, &col(&[7, 8])));
    }
}
