//! A small exact two-phase simplex method over the rationals.
//!
//! Only used for feasibility questions on desk-sized inputs (pointedness,
//! redundant generators, extreme vertices), so it is a plain dense tableau
//! with Bland's anti-cycling rule.

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<Scalar>, value: Scalar },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// `m` constraint rows, each `ncols + 1` wide (last entry is the rhs).
    rows: Vec<Vec<Scalar>>,
    /// Reduced-cost row, same width; last entry is minus the objective value.
    cost: Vec<Scalar>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip().expect("pivot on zero");
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (x, p) in self.cost.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        self.basis[r] = c;
    }

    /// Runs simplex iterations over columns `< allowed`. Returns false if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.cost[j].signum() < 0) else {
                return true;
            };
            let rhs = self.ncols;
            let mut leave: Option<(usize, Scalar)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[enter].signum() <= 0 {
                    continue;
                }
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return false,
                Some((r, _)) => self.pivot(r, enter),
            }
        }
    }
}

/// Minimizes `c·x` subject to `A x = b`, `x ≥ 0`.
pub fn minimize(a: &[Vec<Scalar>], b: &[Scalar], c: &[Scalar]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    assert_eq!(b.len(), m);
    assert!(a.iter().all(|r| r.len() == n));

    let ncols = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (ai, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.signum() < 0;
        let mut row: Vec<Scalar> = ai.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        row.extend((0..m).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }));
        row.push(if flip { -bi } else { bi.clone() });
        rows.push(row);
    }
    // Phase one: minimize the sum of artificials.
    let mut cost = vec![Scalar::zero(); ncols + 1];
    for row in &rows {
        for (j, x) in row.iter().enumerate() {
            if j < n || j == ncols {
                cost[j] -= x;
            }
        }
    }
    let mut t = Tableau {
        rows,
        cost,
        basis: (n..n + m).collect(),
        ncols,
    };
    t.optimize(ncols);
    if !t.cost[ncols].is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive remaining artificials out of the basis; drop redundant rows.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            match (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.rows.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // Phase two with the true objective.
    let mut cost = vec![Scalar::zero(); ncols + 1];
    cost[..n].clone_from_slice(c);
    for (row, &bj) in t.rows.iter().zip(&t.basis) {
        let f = cost[bj].clone();
        if f.is_zero() {
            continue;
        }
        for (x, p) in cost.iter_mut().zip(row) {
            *x -= &f * p;
        }
    }
    t.cost = cost;
    if !t.optimize(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Scalar::zero(); n];
    for (row, &bj) in t.rows.iter().zip(&t.basis) {
        x[bj] = row[ncols].clone();
    }
    let value = -&t.cost[ncols];
    LpOutcome::Optimal { x, value }
}

/// A point of `{x ≥ 0 : A x = b}`, if one exists.
pub fn feasible_point(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = a.first().map_or(0, Vec::len);
    match minimize(a, b, &vec![Scalar::zero(); n]) {
        LpOutcome::Optimal { x, .. } => Some(x),
        _ => None,
    }
}
