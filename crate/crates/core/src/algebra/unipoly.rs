//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, just enough for cyclotomic polynomials and remainders
//! modulo a monic divisor.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A univariate integer polynomial, coefficients ascending by exponent with
/// no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniIntPoly {
    coeffs: Vec<BigInt>,
}

impl UniIntPoly {
    pub fn zero() -> Self {
        UniIntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniIntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniIntPoly { coeffs }
    }

    /// `t^n − 1`.
    pub fn t_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        UniIntPoly { coeffs }
    }

    /// `1 + t + … + t^{n−1}`.
    pub fn geometric_sum(n: usize) -> Self {
        UniIntPoly {
            coeffs: vec![BigInt::one(); n],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &UniIntPoly) -> UniIntPoly {
        if self.is_zero() || other.is_zero() {
            return UniIntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniIntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniIntPoly) -> UniIntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - other.coeff(k));
        UniIntPoly::from_coeffs(coeffs)
    }

    /// Quotient of an exact division over ℤ, or `None` if the division
    /// leaves a remainder or a coefficient fails to divide.
    pub fn exact_div(&self, divisor: &UniIntPoly) -> Option<UniIntPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(UniIntPoly::zero());
        }
        let (deg_n, deg_d) = (self.degree()?, divisor.degree()?);
        if deg_n < deg_d {
            return None;
        }
        let lead = divisor.coeffs.last().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); deg_n - deg_d + 1];
        for k in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[k + deg_d]);
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return None;
            }
            let q = &top / lead;
            for (off, d) in divisor.coeffs.iter().enumerate().take(deg_d) {
                rem[k + off] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(UniIntPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, modulus: &UniIntPoly) -> UniIntPoly {
        let deg_m = modulus.degree().expect("nonzero modulus");
        assert!(
            modulus.coeffs.last().is_some_and(One::is_one),
            "modulus must be monic"
        );
        let mut rem = self.coeffs.clone();
        while rem.len() > deg_m {
            let top = rem.pop().expect("rem nonempty");
            if top.is_zero() {
                continue;
            }
            let k = rem.len() - deg_m;
            for (off, d) in modulus.coeffs.iter().enumerate().take(deg_m) {
                rem[k + off] -= &top * d;
            }
        }
        UniIntPoly::from_coeffs(rem)
    }
}
