//! Seeded generators of random test data. All sampling goes through a
//! [`ChaCha8Rng`], so equal seeds give identical data on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::k_subsets;
use crate::cone::Cone;
use crate::linalg::{Matrix, Vector};
use crate::monomial::basis_len;
use crate::scalar::Scalar;
use crate::vervan::DiagonalFamily;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `|p| ≤ bound` and `1 ≤ q ≤ max_den`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, bound: i64, max_den: i64) -> Scalar {
    Scalar::ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=max_den))
}

pub fn positive_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64, max_den: i64) -> Scalar {
    Scalar::ratio(rng.gen_range(1..=bound), rng.gen_range(1..=max_den))
}

fn random_invertible<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Matrix {
    loop {
        let rows = (0..d)
            .map(|_| Vector::new((0..d).map(|_| Scalar::from_int(rng.gen_range(-2..=2))).collect()))
            .collect();
        let m = Matrix::from_rows(rows).expect("square");
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// A pointed cone in general position with `n` rational generators in
/// dimension `d`, apex at the origin. Generators are drawn above the
/// hyperplane `x_d = 0` and then mixed by a random invertible integer matrix.
pub fn generic_cone<R: Rng + ?Sized>(rng: &mut R, d: usize, n: usize) -> Cone {
    assert!(n >= d && d >= 1);
    loop {
        let mix = random_invertible(rng, d);
        let generators: Vec<Vector> = (0..n)
            .map(|_| {
                let mut c: Vec<Scalar> = (0..d - 1).map(|_| rational(rng, 5, 3)).collect();
                c.push(positive_rational(rng, 4, 2));
                mix.mul_vec(&Vector::new(c))
            })
            .collect();
        if let Ok(cone) = Cone::at_origin(generators) {
            if cone.is_general_position() {
                return cone;
            }
        }
    }
}

/// Like [`generic_cone`] but with a random rational apex.
pub fn generic_cone_with_apex<R: Rng + ?Sized>(rng: &mut R, d: usize, n: usize) -> Cone {
    let cone = generic_cone(rng, d, n);
    let apex = Vector::new((0..d).map(|_| rational(rng, 3, 4)).collect());
    cone.with_apex(apex).expect("same generators")
}

/// A generic cone with integer generators `(p, R)`, where `p` is a lattice
/// point in the spherical shell `R - 1 < |p| ≤ R` of `R^{d-1}`, so the
/// generators are close to convex position.
///
/// Panics if no generic sample is found, which happens when the shell holds
/// too few lattice points for `n`.
pub fn sphere_shell_cone<R: Rng + ?Sized>(rng: &mut R, d: usize, n: usize, radius: i64) -> Cone {
    assert!(d >= 2 && n >= d);
    let r2 = radius * radius;
    let inner = (radius - 1) * (radius - 1);
    for _ in 0..10_000 {
        let mut generators = Vec::with_capacity(n);
        while generators.len() < n {
            let p: Vec<i64> = (0..d - 1).map(|_| rng.gen_range(-radius..=radius)).collect();
            let norm2: i64 = p.iter().map(|x| x * x).sum();
            if norm2 <= inner || norm2 > r2 {
                continue;
            }
            let mut c = p;
            c.push(radius);
            generators.push(Vector::from_ints(&c));
        }
        if let Ok(cone) = Cone::at_origin(generators) {
            if cone.is_general_position() {
                return cone;
            }
        }
    }
    panic!("no generic cone with {n} generators on the shell of radius {radius} in dimension {d}");
}

/// A uniformly random family of `C(n-1, d-1)` diagonals.
pub fn random_family<R: Rng + ?Sized>(rng: &mut R, cone: &Cone) -> DiagonalFamily {
    let diagonals = k_subsets(cone.len(), cone.dimension() - 1);
    let size = basis_len(cone.dimension(), cone.len() - cone.dimension());
    let picked: Vec<Vec<usize>> = diagonals.choose_multiple(rng, size).cloned().collect();
    DiagonalFamily::for_cone(picked, cone).expect("distinct diagonals of the right size")
}
