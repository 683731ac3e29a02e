//! Maximal minors of the interpolation matrix and their combinatorics.
//!
//! A maximal minor of `A_K` picks `C(n-1, d-1)` diagonals, a *family*. For a
//! `d`-subset `E` of generators (a simplex), the multiplicity of the family at
//! `E` counts the members contained in `E`; the family *fills* when every
//! simplex has multiplicity at least one. The conjectured identity checked
//! here is: a non-filling family has minor zero, and a filling family has
//! `|minor| = ∏_E |det E|^{mult(E) - 1}`.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{is_sorted_subset, k_subsets};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::monomial::{basis_len, monomial_basis, veronese};
use crate::scalar::Scalar;

/// `C(n-1, d-1)` distinct diagonals of one cone, kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiagonalFamily {
    diagonals: Vec<Vec<usize>>,
}

impl DiagonalFamily {
    /// Validates and sorts a family for a cone with `n` generators in dimension `d`.
    pub fn new(mut diagonals: Vec<Vec<usize>>, n: usize, d: usize) -> Result<Self> {
        let invalid = |reason: String| Err(Error::InvalidFamily { reason });
        if d == 0 || n < d {
            return invalid(format!("no families for {n} generators in dimension {d}"));
        }
        let expected = basis_len(d, n - d);
        if diagonals.len() != expected {
            return invalid(format!("expected {expected} diagonals, got {}", diagonals.len()));
        }
        for diag in diagonals.iter_mut() {
            diag.sort_unstable();
            if diag.len() + 1 != d {
                return invalid(format!("diagonal {diag:?} does not have {} elements", d - 1));
            }
            if diag.windows(2).any(|w| w[0] == w[1]) || diag.iter().any(|&i| i >= n) {
                return invalid(format!("diagonal {diag:?} is not a subset of 0..{n}"));
            }
        }
        diagonals.sort();
        if diagonals.windows(2).any(|w| w[0] == w[1]) {
            return invalid("family repeats a diagonal".into());
        }
        Ok(DiagonalFamily { diagonals })
    }

    pub fn for_cone(diagonals: Vec<Vec<usize>>, cone: &Cone) -> Result<Self> {
        DiagonalFamily::new(diagonals, cone.len(), cone.dimension())
    }

    pub fn diagonals(&self) -> &[Vec<usize>] {
        &self.diagonals
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }
}

/// A `d`-subset of generator indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimplexIndex(Vec<usize>);

impl SimplexIndex {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        SimplexIndex(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

pub fn multiplicity(family: &DiagonalFamily, simplex: &SimplexIndex) -> usize {
    family
        .diagonals
        .iter()
        .filter(|d| is_sorted_subset(d, &simplex.0))
        .count()
}

/// Whether every `d`-subset of `0..n` contains a member of the family.
pub fn fills(family: &DiagonalFamily, n: usize) -> bool {
    let d = family.diagonals.first().map_or(1, |f| f.len() + 1);
    k_subsets(n, d)
        .into_iter()
        .all(|e| multiplicity(family, &SimplexIndex(e)) >= 1)
}

pub fn minor_matrix(cone: &Cone, family: &DiagonalFamily) -> Matrix {
    let s = cone.numerator_degree();
    let rows = family
        .diagonals
        .iter()
        .map(|d| Vector::new(veronese(cone.diagonal(d.clone()).dual(), s)))
        .collect();
    Matrix::from_rows(rows).expect("Veronese rows have equal length")
}

pub fn minor(cone: &Cone, family: &DiagonalFamily) -> Scalar {
    minor_matrix(cone, family)
        .determinant()
        .expect("family has C(n-1,d-1) rows of that length")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityEntry {
    pub simplex: SimplexIndex,
    pub multiplicity: usize,
    pub determinant: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VervanRecord {
    pub family: DiagonalFamily,
    pub fills: bool,
    pub minor: Scalar,
    /// Zero for non-filling families, else `∏ |det E|^{mult(E)-1}`.
    pub predicted: Scalar,
    /// Observed `minor / predicted` sign; 0 when the prediction is zero.
    pub sign: i32,
    pub multiplicities: Vec<MultiplicityEntry>,
    pub pass: bool,
}

pub fn vervan_record(cone: &Cone, family: &DiagonalFamily) -> Result<VervanRecord> {
    cone.require_general_position()?;
    let n = cone.len();
    let multiplicities: Vec<MultiplicityEntry> = k_subsets(n, cone.dimension())
        .into_iter()
        .map(|e| {
            let simplex = SimplexIndex(e);
            MultiplicityEntry {
                multiplicity: multiplicity(family, &simplex),
                determinant: cone.subset_determinant(&simplex.0),
                simplex,
            }
        })
        .collect();
    let fills = multiplicities.iter().all(|m| m.multiplicity >= 1);
    let minor = minor(cone, family);
    let predicted = if fills {
        multiplicities
            .iter()
            .map(|m| m.determinant.abs().pow(m.multiplicity as u32 - 1))
            .product()
    } else {
        Scalar::zero()
    };
    let pass = minor.abs() == predicted;
    let sign = if predicted.is_zero() {
        0
    } else {
        minor.signum()
    };
    Ok(VervanRecord {
        family: family.clone(),
        fills,
        minor,
        predicted,
        sign,
        multiplicities,
        pass,
    })
}

/// Checks the family against the identity, returning the record on success
/// and [`Error::VerificationFailure`] carrying it otherwise.
pub fn verify_vervan(cone: &Cone, family: &DiagonalFamily) -> Result<VervanRecord> {
    let record = vervan_record(cone, family)?;
    if record.pass {
        Ok(record)
    } else {
        Err(Error::VerificationFailure {
            record: Box::new(record),
        })
    }
}

/// Every family of `C(n-1, d-1)` diagonals, in lexicographic order.
pub fn all_families(cone: &Cone) -> Vec<DiagonalFamily> {
    let diagonals = k_subsets(cone.len(), cone.dimension() - 1);
    let size = basis_len(cone.dimension(), cone.len() - cone.dimension());
    k_subsets(diagonals.len(), size)
        .into_iter()
        .map(|pick| DiagonalFamily {
            diagonals: pick.into_iter().map(|i| diagonals[i].clone()).collect(),
        })
        .collect()
}

/// The vector `F⁺` indexed by `monomial_basis(d, n-d)`:
/// `F⁺_x = Σ_{k ∈ {1..d}^{n-d}, σ(k) = x} ∏_i (v_i)_{k_i}`, where `σ(k)`
/// counts how often each coordinate index occurs in `k`. This is the
/// coefficient vector of `ξ ↦ ∏_{v∈F} ⟨v, ξ⟩`.
pub fn fplus(f: &[Vector], d: usize, n: usize) -> Result<Vec<Scalar>> {
    if f.len() + d != n {
        return Err(Error::Dimension {
            what: "F (needs n-d vectors)",
            expected: n.saturating_sub(d),
            found: f.len(),
        });
    }
    if let Some(bad) = f.iter().find(|v| v.dim() != d) {
        return Err(Error::Dimension {
            what: "F vector",
            expected: d,
            found: bad.dim(),
        });
    }
    let basis = monomial_basis(d, f.len() as u32);
    let mut out = vec![Scalar::zero(); basis.len()];
    let mut counts = vec![0u32; d];
    let mut k = vec![0usize; f.len()];
    loop {
        counts.iter_mut().for_each(|c| *c = 0);
        for &ki in &k {
            counts[ki] += 1;
        }
        let term: Scalar = f.iter().zip(&k).map(|(v, &ki)| v[ki].clone()).product();
        if !term.is_zero() {
            let pos = basis
                .iter()
                .position(|e| e.exponents() == counts.as_slice())
                .expect("σ(k) is a monomial of degree n-d");
            out[pos] += term;
        }
        // next tuple in {0..d}^{n-d}
        let Some(i) = (0..k.len()).rev().find(|&i| k[i] + 1 < d) else {
            return Ok(out);
        };
        k[i] += 1;
        k[i + 1..].iter_mut().for_each(|x| *x = 0);
    }
}

/// `⟨F⁺, ν_{n-d}(D*)⟩`.
pub fn null_pairing(f: &[Vector], dual: &Vector) -> Result<Scalar> {
    let d = dual.dim();
    let plus = fplus(f, d, f.len() + d)?;
    Ok(plus
        .iter()
        .zip(veronese(dual, f.len() as u32))
        .map(|(a, b)| a * b)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Cone {
        Cone::from_int_generators(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]]).unwrap()
    }

    fn fan() -> Cone {
        Cone::from_int_generators(&[&[1, 0], &[1, 1], &[0, 1]]).unwrap()
    }

    fn fam(c: &Cone, d: &[&[usize]]) -> DiagonalFamily {
        DiagonalFamily::for_cone(d.iter().map(|x| x.to_vec()).collect(), c).unwrap()
    }

    fn ints(c: &[i64]) -> Vec<Scalar> {
        c.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn multiplicity_examples() {
        let sq = square();
        let chain = fam(&sq, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(multiplicity(&chain, &SimplexIndex::new(vec![0, 1, 2])), 2);
        assert_eq!(multiplicity(&chain, &SimplexIndex::new(vec![0, 1, 3])), 1);
        let star = fam(&sq, &[&[0, 1], &[0, 2], &[0, 3]]);
        assert_eq!(multiplicity(&star, &SimplexIndex::new(vec![1, 2, 3])), 0);
    }

    #[test]
    fn filling_examples() {
        let sq = square();
        assert!(fills(&fam(&sq, &[&[0, 1], &[1, 2], &[2, 3]]), 4));
        assert!(!fills(&fam(&sq, &[&[0, 1], &[0, 2], &[0, 3]]), 4));
        assert!(fills(&fam(&fan(), &[&[0], &[1]]), 3));
    }

    #[test]
    fn minor_examples() {
        let sq = square();
        assert_eq!(minor(&sq, &fam(&sq, &[&[0, 1], &[0, 2], &[0, 3]])), Scalar::zero());
        assert_eq!(minor(&sq, &fam(&sq, &[&[0, 1], &[1, 2], &[2, 3]])).abs(), Scalar::from_int(4));
    }

    #[test]
    fn verification_examples() {
        let sq = square();
        let r = verify_vervan(&sq, &fam(&sq, &[&[0, 1], &[0, 2], &[0, 3]])).unwrap();
        assert!(!r.fills && r.minor.is_zero() && r.predicted.is_zero());
        let r = verify_vervan(&sq, &fam(&sq, &[&[0, 1], &[1, 2], &[2, 3]])).unwrap();
        assert!(r.fills);
        assert_eq!(r.predicted, Scalar::from_int(4));
        let mults: Vec<usize> = r.multiplicities.iter().map(|m| m.multiplicity).collect();
        assert_eq!(mults, vec![2, 1, 1, 2]);

        let fan = fan();
        let r = verify_vervan(&fan, &fam(&fan, &[&[0], &[2]])).unwrap();
        assert!(r.fills);
        assert_eq!(r.minor, Scalar::one());
        assert_eq!(r.predicted, Scalar::one());
    }

    #[test]
    fn family_validation() {
        let sq = square();
        let bad = |d: Vec<Vec<usize>>| DiagonalFamily::for_cone(d, &sq).unwrap_err();
        assert!(matches!(bad(vec![vec![0, 1], vec![1, 2]]), Error::InvalidFamily { .. }));
        assert!(matches!(bad(vec![vec![0, 1], vec![1, 0], vec![2, 3]]), Error::InvalidFamily { .. }));
        assert!(matches!(bad(vec![vec![0, 1], vec![1, 2], vec![2, 4]]), Error::InvalidFamily { .. }));
        let ok = DiagonalFamily::for_cone(vec![vec![3, 2], vec![1, 0], vec![2, 1]], &sq).unwrap();
        assert_eq!(ok.diagonals(), &[vec![0, 1], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn square_cone_has_twenty_families() {
        assert_eq!(all_families(&square()).len(), 20);
    }

    #[test]
    fn fplus_examples() {
        assert_eq!(fplus(&[Vector::from_ints(&[0, 1])], 2, 3).unwrap(), ints(&[0, 1]));
        let v = Vector::from_ints(&[1, 1]);
        assert_eq!(fplus(&[v.clone(), v], 2, 4).unwrap(), ints(&[1, 2, 1]));
        let z = fplus(&[Vector::zeros(3), Vector::from_ints(&[1, 2, 3])], 3, 5).unwrap();
        assert!(z.iter().all(Scalar::is_zero));
        assert!(fplus(&[Vector::from_ints(&[1, 1])], 2, 4).is_err());
    }

    #[test]
    fn null_pairing_examples() {
        let fan = fan();
        let d3 = fan.diagonal(vec![2]);
        assert_eq!(null_pairing(&[fan.generator(2).clone()], d3.dual()).unwrap(), Scalar::zero());
        let d1 = fan.diagonal(vec![0]);
        assert_eq!(null_pairing(&[fan.generator(1).clone()], d1.dual()).unwrap(), Scalar::one());
        let sq = square();
        let d = sq.diagonal(vec![0, 3]);
        assert_eq!(null_pairing(&[sq.generator(3).clone()], d.dual()).unwrap(), Scalar::zero());
    }
}
