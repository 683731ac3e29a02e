//! Numerator of a conic Fourier transform by interpolation at diagonal duals.
//!
//! Every diagonal `D` prescribes the value of `p_K` at its dual vector `D*`:
//! for an extremal diagonal `p_K(D*) = ε ∏_{j∉D} det(D, w_j)` with `ε` the
//! common sign of those determinants, and for an interior one `p_K(D*) = 0`.
//! Writing `p_K` in the monomial basis turns these values into the
//! overdetermined linear system `A_K c = b_K` whose rows are `ν_{n-d}(D*)`.

use serde::{Deserialize, Serialize};

use crate::cone::{Cone, Diagonal, DiagonalClass};
use crate::error::{Error, Result};
use crate::monomial::{basis_len, veronese};
use crate::polynomial::HomogeneousPolynomial;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemRow {
    pub diagonal: Vec<usize>,
    pub row: Vec<Scalar>,
    pub rhs: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterpolationSystem {
    pub dimension: usize,
    pub degree: u32,
    pub rows: Vec<SystemRow>,
    /// Degenerate diagonals, which prescribe no value.
    pub skipped: Vec<Vec<usize>>,
}

impl InterpolationSystem {
    pub fn unknowns(&self) -> usize {
        basis_len(self.dimension, self.degree as usize)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub polynomial: HomogeneousPolynomial,
    /// Positions (into `rows`) of the rows selected as pivots.
    pub pivot_rows: Vec<usize>,
}

pub fn rhs_value(cone: &Cone, diagonal: &Diagonal) -> Result<Scalar> {
    match cone.classify(diagonal) {
        DiagonalClass::Interior => Ok(Scalar::zero()),
        DiagonalClass::Extremal(sign) => {
            let prod: Scalar = (0..cone.len())
                .filter(|&j| !diagonal.contains(j))
                .map(|j| diagonal.det_with(cone.generator(j)))
                .product();
            Ok(if sign < 0 { -prod } else { prod })
        }
        DiagonalClass::Degenerate => Err(Error::DegenerateDiagonal {
            indices: diagonal.indices().to_vec(),
        }),
    }
}

pub fn build_system(cone: &Cone) -> InterpolationSystem {
    let degree = cone.numerator_degree();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for diagonal in cone.diagonals() {
        match rhs_value(cone, &diagonal) {
            Ok(rhs) => rows.push(SystemRow {
                diagonal: diagonal.indices().to_vec(),
                row: veronese(diagonal.dual(), degree),
                rhs,
            }),
            Err(_) => skipped.push(diagonal.indices().to_vec()),
        }
    }
    InterpolationSystem {
        dimension: cone.dimension(),
        degree,
        rows,
        skipped,
    }
}

pub fn solve_exact(system: &InterpolationSystem) -> Result<HomogeneousPolynomial> {
    solve_exact_detailed(system).map(|s| s.polynomial)
}

/// Row-by-row reduced echelon elimination in row order, followed by an exact
/// residual check of every row against the solution.
pub fn solve_exact_detailed(system: &InterpolationSystem) -> Result<Solution> {
    let unknowns = system.unknowns();
    if let Some(bad) = system.rows.iter().find(|r| r.row.len() != unknowns) {
        return Err(Error::Dimension {
            what: "interpolation row",
            expected: unknowns,
            found: bad.row.len(),
        });
    }

    // Basis rows in reduced echelon form, each augmented with its rhs.
    let mut basis: Vec<(usize, Vec<Scalar>)> = Vec::with_capacity(unknowns);
    let mut pivot_rows = Vec::with_capacity(unknowns);
    for (index, sys_row) in system.rows.iter().enumerate() {
        if basis.len() == unknowns {
            break;
        }
        let mut r: Vec<Scalar> = sys_row.row.clone();
        r.push(sys_row.rhs.clone());
        for (col, b) in &basis {
            if r[*col].is_zero() {
                continue;
            }
            let f = r[*col].clone();
            for (x, y) in r.iter_mut().zip(b) {
                *x -= &f * y;
            }
        }
        let Some(col) = r[..unknowns].iter().position(|x| !x.is_zero()) else {
            if !r[unknowns].is_zero() {
                return Err(Error::Inconsistent {
                    row: sys_row.diagonal.clone(),
                    residual: -&r[unknowns],
                });
            }
            continue;
        };
        let inv = r[col].recip().expect("nonzero pivot");
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for (_, b) in basis.iter_mut() {
            if b[col].is_zero() {
                continue;
            }
            let f = b[col].clone();
            for (x, y) in b.iter_mut().zip(&r) {
                *x -= &f * y;
            }
        }
        basis.push((col, r));
        pivot_rows.push(index);
    }
    if basis.len() < unknowns {
        return Err(Error::RankDeficient {
            rank: basis.len(),
            unknowns,
            skipped: system.skipped.clone(),
        });
    }

    let mut coefficients = vec![Scalar::zero(); unknowns];
    for (col, b) in basis {
        coefficients[col] = b[unknowns].clone();
    }
    for sys_row in &system.rows {
        let lhs: Scalar = sys_row.row.iter().zip(&coefficients).map(|(a, c)| a * c).sum();
        if lhs != sys_row.rhs {
            return Err(Error::Inconsistent {
                row: sys_row.diagonal.clone(),
                residual: lhs - &sys_row.rhs,
            });
        }
    }
    Ok(Solution {
        polynomial: HomogeneousPolynomial::from_coefficients(system.dimension, system.degree, coefficients)?,
        pivot_rows,
    })
}

pub fn pk_via_interpolation(cone: &Cone) -> Result<HomogeneousPolynomial> {
    cone.pointedness_witness()?;
    solve_exact(&build_system(cone))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan() -> Cone {
        Cone::from_int_generators(&[&[1, 0], &[1, 1], &[0, 1]]).unwrap()
    }

    fn square() -> Cone {
        Cone::from_int_generators(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]]).unwrap()
    }

    fn ints(c: &[i64]) -> Vec<Scalar> {
        c.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn rhs_examples() {
        let fan = fan();
        assert_eq!(rhs_value(&fan, &fan.diagonal(vec![0])).unwrap(), Scalar::one());
        assert_eq!(rhs_value(&fan, &fan.diagonal(vec![2])).unwrap(), Scalar::from_int(-1));
        let sq = square();
        assert_eq!(rhs_value(&sq, &sq.diagonal(vec![0, 1])).unwrap(), Scalar::from_int(4));
        assert_eq!(rhs_value(&sq, &sq.diagonal(vec![1, 3])).unwrap(), Scalar::zero());
    }

    #[test]
    fn rhs_rejects_degenerate() {
        let c = Cone::from_int_generators(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2], &[0, 0, 1]]).unwrap();
        assert_eq!(
            rhs_value(&c, &c.diagonal(vec![0, 1])).unwrap_err(),
            Error::DegenerateDiagonal { indices: vec![0, 1] }
        );
    }

    #[test]
    fn fan_system() {
        let sys = build_system(&fan());
        let rows: Vec<(Vec<Scalar>, Scalar)> = sys.rows.iter().map(|r| (r.row.clone(), r.rhs.clone())).collect();
        assert_eq!(
            rows,
            vec![
                (ints(&[0, 1]), Scalar::one()),
                (ints(&[-1, 1]), Scalar::zero()),
                (ints(&[-1, 0]), Scalar::from_int(-1)),
            ]
        );
        assert!(sys.skipped.is_empty());
        assert_eq!(solve_exact(&sys).unwrap().coefficients(), ints(&[1, 1]).as_slice());
    }

    #[test]
    fn square_system() {
        let sys = build_system(&square());
        assert_eq!(sys.rows.len(), 6);
        let rhs: Vec<Scalar> = sys.rows.iter().map(|r| r.rhs.clone()).collect();
        // The {0,3} diagonal lists w0 before w3, which orients its dual
        // against the cyclic order and flips the sign of its value.
        assert_eq!(rhs, ints(&[4, 0, -4, 4, 0, 4]));
        assert_eq!(pk_via_interpolation(&square()).unwrap().coefficients(), ints(&[0, 0, 4]).as_slice());
    }

    #[test]
    fn simplicial_system() {
        let c = Cone::from_int_generators(&[&[2, 1, 0], &[0, 1, 0], &[1, 1, 5]]).unwrap();
        let sys = build_system(&c);
        assert_eq!(sys.rows.len(), 3);
        assert_eq!(sys.unknowns(), 1);
        let p = solve_exact(&sys).unwrap();
        assert_eq!(p.coefficients(), &[c.subset_determinant(&[0, 1, 2]).abs()]);
    }

    #[test]
    fn contradictory_rows_are_inconsistent() {
        let sys = InterpolationSystem {
            dimension: 2,
            degree: 1,
            rows: vec![
                SystemRow { diagonal: vec![0], row: ints(&[1, 0]), rhs: Scalar::one() },
                SystemRow { diagonal: vec![1], row: ints(&[1, 0]), rhs: Scalar::from_int(2) },
            ],
            skipped: vec![],
        };
        assert!(matches!(solve_exact(&sys), Err(Error::Inconsistent { row, .. }) if row == vec![1]));
    }

    #[test]
    fn late_contradiction_caught_by_residual_check() {
        let sys = InterpolationSystem {
            dimension: 2,
            degree: 1,
            rows: vec![
                SystemRow { diagonal: vec![0], row: ints(&[1, 0]), rhs: Scalar::one() },
                SystemRow { diagonal: vec![1], row: ints(&[0, 1]), rhs: Scalar::one() },
                SystemRow { diagonal: vec![2], row: ints(&[1, 1]), rhs: Scalar::from_int(3) },
            ],
            skipped: vec![],
        };
        assert_eq!(
            solve_exact(&sys).unwrap_err(),
            Error::Inconsistent { row: vec![2], residual: Scalar::from_int(-1) }
        );
    }

    #[test]
    fn rank_deficiency_reports_skipped() {
        let sys = InterpolationSystem {
            dimension: 2,
            degree: 1,
            rows: vec![
                SystemRow { diagonal: vec![0], row: ints(&[1, 1]), rhs: Scalar::one() },
                SystemRow { diagonal: vec![1], row: ints(&[2, 2]), rhs: Scalar::from_int(2) },
            ],
            skipped: vec![vec![2]],
        };
        assert_eq!(
            solve_exact(&sys).unwrap_err(),
            Error::RankDeficient { rank: 1, unknowns: 2, skipped: vec![vec![2]] }
        );
    }

    #[test]
    fn degenerate_rows_are_skipped() {
        let c = Cone::from_int_generators(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2], &[0, 0, 1]]).unwrap();
        let sys = build_system(&c);
        assert_eq!(sys.rows.len() + sys.skipped.len(), 6);
        assert!(sys.skipped.contains(&vec![0, 1]));
    }

    #[test]
    fn pivots_are_in_row_order() {
        let sol = solve_exact_detailed(&build_system(&fan())).unwrap();
        assert_eq!(sol.pivot_rows, vec![0, 1]);
    }
}
