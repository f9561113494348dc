//! Exact rational simplex with Bland's rule.
//!
//! Solves `min c·x` subject to `G x >= h`, `x >= 0` with `c >= 0` by running
//! the primal simplex on the dual `max h·λ`, `Gᵀ λ <= c`, `λ >= 0`, whose
//! slack basis is feasible from the start. The primal optimum is read off
//! the objective row at the slack columns.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Optimal {
        x: Vec<Rational>,
        value: Rational,
        pivots: usize,
    },
    /// The dual is unbounded.
    Infeasible,
}

/// `rows[i]` holds `(G_i, h_i)`; `cost` must be non-negative.
pub fn minimize(cost: &[Rational], rows: &[(Vec<Rational>, Rational)]) -> Outcome {
    assert!(
        cost.iter().all(|c| !c.is_negative()),
        "cost must be non-negative"
    );
    let nv = cost.len();
    let m = rows.len();
    let width = m + nv;

    // one tableau row per primal variable: sum_i G_ij λ_i + t_j = c_j
    let mut tab: Vec<Vec<Rational>> = (0..nv)
        .map(|j| {
            let mut row: Vec<Rational> = rows.iter().map(|(g, _)| g[j].clone()).collect();
            row.extend((0..nv).map(|k| {
                if k == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    let mut rhs: Vec<Rational> = cost.to_vec();
    let mut basis: Vec<usize> = (m..width).collect();
    // reduced objective row (z_j - p_j) for maximizing p = (h, 0)
    let mut obj: Vec<Rational> = rows.iter().map(|(_, h)| -h.clone()).collect();
    obj.extend(std::iter::repeat_n(Rational::zero(), nv));
    let mut value = Rational::zero();
    let mut pivots = 0;

    while let Some(enter) = (0..width).find(|&j| obj[j].is_negative()) {
        // ratio test, ties to the lowest basic index
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..nv {
            if !tab[r][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[r] / &tab[r][enter];
            leave = match leave {
                Some((best, ref q)) if *q < ratio || (*q == ratio && basis[best] < basis[r]) => {
                    Some((best, q.clone()))
                }
                _ => Some((r, ratio)),
            };
        }
        let Some((row, _)) = leave else {
            return Outcome::Infeasible;
        };
        pivot(&mut tab, &mut rhs, &mut obj, &mut value, row, enter);
        basis[row] = enter;
        pivots += 1;
    }

    let x = obj[m..].to_vec();
    Outcome::Optimal { x, value, pivots }
}

fn pivot(
    tab: &mut [Vec<Rational>],
    rhs: &mut [Rational],
    obj: &mut [Rational],
    value: &mut Rational,
    row: usize,
    col: usize,
) {
    let inv = Rational::one() / &tab[row][col];
    for v in tab[row].iter_mut() {
        if !v.is_zero() {
            *v *= &inv;
        }
    }
    rhs[row] *= &inv;
    let pivot_row = tab[row].clone();
    let pivot_rhs = rhs[row].clone();
    let nonzero: Vec<usize> = (0..pivot_row.len())
        .filter(|&j| !pivot_row[j].is_zero())
        .collect();

    let eliminate = |target: &mut [Rational], target_rhs: &mut Rational| {
        let factor = target[col].clone();
        if factor.is_zero() {
            return;
        }
        for &j in &nonzero {
            target[j] -= &factor * &pivot_row[j];
        }
        *target_rhs -= &factor * &pivot_rhs;
    };
    for (r, (t, h)) in tab.iter_mut().zip(rhs.iter_mut()).enumerate() {
        if r != row {
            eliminate(t, h);
        }
    }
    // the objective value tracks z = p_B B^{-1} c, so it moves opposite to rhs
    let factor = obj[col].clone();
    if !factor.is_zero() {
        for &j in &nonzero {
            obj[j] -= &factor * &pivot_row[j];
        }
        *value -= &factor * &pivot_rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn r(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&k| int(k)).collect()
    }

    #[test]
    fn small_lp() {
        // min x + y  s.t. x + 2y >= 4, 3x + y >= 6
        let rows = vec![(r(&[1, 2]), int(4)), (r(&[3, 1]), int(6))];
        match minimize(&r(&[1, 1]), &rows) {
            Outcome::Optimal { x, value, .. } => {
                assert_eq!(x, vec![frac(8, 5), frac(6, 5)]);
                assert_eq!(value, frac(14, 5));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_cost_direction() {
        // min x  s.t. x - y >= -2, y >= 3  => x = 1
        let rows = vec![(r(&[1, -1]), int(-2)), (r(&[0, 1]), int(3))];
        match minimize(&r(&[1, 0]), &rows) {
            Outcome::Optimal { x, value, .. } => {
                assert_eq!(value, int(1));
                assert_eq!(x[0], int(1));
                assert!(x[1] >= int(3));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn detects_infeasible() {
        // x >= 2 and -x >= -1
        let rows = vec![(r(&[1]), int(2)), (r(&[-1]), int(-1))];
        assert_eq!(minimize(&r(&[1]), &rows), Outcome::Infeasible);
    }

    #[test]
    fn degenerate_cycle_example() {
        // Beale-style degenerate system; Bland's rule must terminate
        let rows = vec![
            (vec![frac(-1, 4), int(8), int(1), int(-9)], int(0)),
            (vec![frac(-1, 2), int(12), frac(1, 2), int(-3)], int(0)),
            (r(&[0, 0, -1, 0]), int(-1)),
        ];
        let cost = vec![frac(3, 4), int(0), frac(1, 2), int(0)];
        assert!(matches!(minimize(&cost, &rows), Outcome::Optimal { .. }));
    }
}
