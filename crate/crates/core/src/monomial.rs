//! Exponent vectors, the ordered monomial basis and the Veronese map.
//!
//! Monomials of a fixed total degree are always listed in lexicographically
//! descending order of their exponent vectors, so that in three variables of
//! degree two the order is `x1², x1x2, x1x3, x2², x2x3, x3²`. Polynomial
//! coefficient vectors and Veronese images share this order.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::linalg::Vector;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `x^E = ∏ x_i^{e_i}`.
    pub fn eval(&self, x: &Vector) -> Scalar {
        self.0
            .iter()
            .zip(x.iter())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, xi)| xi.pow(e))
            .product()
    }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of monomials of total degree `s` in `d` variables.
pub fn basis_len(d: usize, s: usize) -> usize {
    if d == 0 {
        return usize::from(s == 0);
    }
    binomial(d + s - 1, d - 1)
}

pub fn monomial_basis(d: usize, s: u32) -> Vec<ExponentVector> {
    let mut out = Vec::with_capacity(basis_len(d, s as usize));
    let mut current = vec![0u32; d];
    fill_basis(0, s, &mut current, &mut out);
    out
}

fn fill_basis(pos: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
    let d = current.len();
    if d == 0 {
        if remaining == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return;
    }
    if pos == d - 1 {
        current[pos] = remaining;
        out.push(ExponentVector(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_basis(pos + 1, remaining - e, current, out);
    }
    current[pos] = 0;
}

/// Position lookup for a monomial basis.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    basis: Vec<ExponentVector>,
    position: HashMap<ExponentVector, usize>,
}

impl MonomialIndex {
    pub fn new(d: usize, s: u32) -> Self {
        let basis = monomial_basis(d, s);
        let position = basis
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        MonomialIndex { basis, position }
    }

    pub fn basis(&self) -> &[ExponentVector] {
        &self.basis
    }

    pub fn position(&self, e: &ExponentVector) -> Option<usize> {
        self.position.get(e).copied()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
}

/// The degree-`s` Veronese image of `v`: every monomial of
/// [`monomial_basis`]`(dim v, s)` evaluated at `v`.
pub fn veronese(v: &Vector, s: u32) -> Vec<Scalar> {
    monomial_basis(v.dim(), s).iter().map(|e| e.eval(v)).collect()
}
