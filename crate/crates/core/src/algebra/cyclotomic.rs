//! Exact arithmetic at roots of unity.
//!
//! An expression in the primitive n-th root ω is held as an integer
//! polynomial in t reduced modulo the cyclotomic polynomial Φ_n. Because Φ_n
//! is the minimal polynomial of ω, the reduced form is the all-zero vector
//! exactly when the complex value is zero, so zero tests are exact with no
//! floating point anywhere.

use num_bigint::BigInt;
use num_traits::Zero;

use super::bipoly::BivariateIntPoly;
use super::unipoly::UniIntPoly;

/// The n-th cyclotomic polynomial Φ_n, computed as
/// `(t^n − 1) / Π_{d|n, d<n} Φ_d` by exact division.
pub fn cyclotomic_polynomial(n: usize) -> UniIntPoly {
    assert!(n >= 1, "cyclotomic polynomials start at Φ_1");
    let mut divisor = UniIntPoly::one();
    for d in 1..n {
        if n % d == 0 {
            divisor = divisor.mul(&cyclotomic_polynomial(d));
        }
    }
    UniIntPoly::t_pow_minus_one(n)
        .exact_div(&divisor)
        .expect("t^n − 1 is divisible by the product of proper cyclotomic factors")
}

/// An element of ℤ[ω], ω a primitive `order`-th root of unity, stored as a
/// coefficient vector of length deg Φ_order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicInt {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    /// Reduce an integer polynomial in t modulo Φ_order.
    pub fn from_unipoly(order: usize, p: &UniIntPoly) -> Self {
        assert!(order >= 1);
        let phi = cyclotomic_polynomial(order);
        let deg = phi.degree().expect("Φ is nonzero");
        let rem = p.rem_monic(&phi);
        let mut coeffs = rem.coeffs().to_vec();
        coeffs.resize(deg, BigInt::zero());
        CyclotomicInt { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        CyclotomicInt::from_unipoly(order, &UniIntPoly::zero())
    }

    /// `ω^k`.
    pub fn root_power(order: usize, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k % order + 1];
        *coeffs.last_mut().expect("nonempty") = BigInt::from(1);
        CyclotomicInt::from_unipoly(order, &UniIntPoly::from_coeffs(coeffs))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficients on the power basis `1, ω, …, ω^{deg Φ − 1}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact zero test: the represented complex number is zero iff the
    /// reduced coefficient vector is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicInt {
            order: self.order,
            coeffs,
        }
    }

    pub fn sub(&self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CyclotomicInt {
            order: self.order,
            coeffs,
        }
    }

    pub fn mul(&self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        let product = UniIntPoly::from_coeffs(self.coeffs.clone())
            .mul(&UniIntPoly::from_coeffs(rhs.coeffs.clone()));
        CyclotomicInt::from_unipoly(self.order, &product)
    }
}

/// Evaluate `p(ω^a, ω^b)` exactly, ω the primitive n-th root of unity:
/// each monomial `x^i y^j` contributes to `t^{(a·i + b·j) mod n}` and the
/// accumulated polynomial is reduced modulo Φ_n.
pub fn eval_at_roots(p: &BivariateIntPoly, a: usize, b: usize, n: usize) -> CyclotomicInt {
    assert!(n >= 2, "need a nontrivial root of unity");
    assert!(a < n && b < n, "exponents are taken modulo n");
    let mut acc = vec![BigInt::zero(); n];
    for ((i, j), c) in p.terms() {
        acc[(a * i + b * j) % n] += c;
    }
    CyclotomicInt::from_unipoly(n, &UniIntPoly::from_coeffs(acc))
}

/// The first pair `(a, b)` with `1 + ω^a + ω^b = 0`, scanning
/// `1 ≤ a, b ≤ n−1` in ascending order, or `None` if no such pair exists.
///
/// A degenerate pair exists exactly when 3 divides n, in which case the scan
/// finds `(n/3, 2n/3)`: the two primitive cube roots of unity summing with 1
/// to zero. Its absence is what lets the root-counting argument go through.
pub fn find_degenerate_pair(n: usize) -> Option<(usize, usize)> {
    let tromino = BivariateIntPoly::one_plus_x_plus_y();
    for a in 1..n {
        for b in 1..n {
            if eval_at_roots(&tromino, a, b, n).is_zero() {
                return Some((a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), UniIntPoly::from_coeffs([-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), UniIntPoly::from_coeffs([1, 1]));
        assert_eq!(cyclotomic_polynomial(3), UniIntPoly::from_coeffs([1, 1, 1]));
        // (t⁴ − 1) / ((t − 1)(t + 1)) = t² + 1
        assert_eq!(cyclotomic_polynomial(4), UniIntPoly::from_coeffs([1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), UniIntPoly::from_coeffs([1, -1, 1]));
    }

    #[test]
    fn phi_product_reconstructs_t_pow_minus_one() {
        for n in 1..=12 {
            let mut product = UniIntPoly::one();
            for d in 1..=n {
                if n % d == 0 {
                    product = product.mul(&cyclotomic_polynomial(d));
                }
            }
            assert_eq!(product, UniIntPoly::t_pow_minus_one(n), "n = {n}");
        }
    }

    #[test]
    fn geometric_factor_vanishes_at_nontrivial_roots() {
        // 1 + y + y² + y³ at y = ω^b, ω = i, is zero for b = 1, 2, 3.
        let g = BivariateIntPoly::from_terms([((0, 0), 1), ((0, 1), 1), ((0, 2), 1), ((0, 3), 1)]);
        for b in 1..4 {
            assert!(eval_at_roots(&g, 1, b, 4).is_zero(), "b = {b}");
        }
        assert!(!eval_at_roots(&g, 1, 0, 4).is_zero());
    }

    #[test]
    fn tromino_pattern_degenerates_only_at_cube_roots() {
        let tromino = BivariateIntPoly::one_plus_x_plus_y();
        // ω² and ω⁴ for n = 6 are the primitive cube roots: 1 + t² + t⁴ ≡ 0
        // modulo t² − t + 1.
        assert!(eval_at_roots(&tromino, 2, 4, 6).is_zero());
        // On the fourth roots nothing cancels: 1 + i + i³ = 1.
        assert!(!eval_at_roots(&tromino, 1, 3, 4).is_zero());
    }

    #[test]
    fn degenerate_pairs_exist_exactly_for_multiples_of_3() {
        assert_eq!(find_degenerate_pair(3), Some((1, 2)));
        assert_eq!(find_degenerate_pair(6), Some((2, 4)));
        assert_eq!(find_degenerate_pair(9), Some((3, 6)));
        for n in [2, 4, 5, 7, 8, 10, 11] {
            assert_eq!(find_degenerate_pair(n), None, "n = {n}");
        }
    }

    #[test]
    fn root_powers_are_pairwise_distinct() {
        for n in [4usize, 5, 6, 7] {
            for a in 1..n {
                for b in (a + 1)..n {
                    let diff = CyclotomicInt::root_power(n, a).sub(&CyclotomicInt::root_power(n, b));
                    assert!(!diff.is_zero(), "ω^{a} = ω^{b} for n = {n}");
                }
            }
        }
    }

    #[test]
    fn multiplication_matches_root_power_arithmetic() {
        for n in [4usize, 6, 7] {
            let a = CyclotomicInt::root_power(n, 3 % n);
            let b = CyclotomicInt::root_power(n, (n - 1) % n);
            assert_eq!(a.mul(&b), CyclotomicInt::root_power(n, (3 + n - 1) % n));
        }
    }
}
