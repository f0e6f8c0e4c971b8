//! Sparse bivariate polynomials with arbitrary-precision integer
//! coefficients. These carry the move-count bookkeeping polynomials T, C, R
//! and their balance T − C − R.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// An integer polynomial in x and y, keyed by `(x exponent, y exponent)`.
/// Zero coefficients are never stored, so iteration order and equality are
/// canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariateIntPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivariateIntPoly {
    pub fn zero() -> Self {
        BivariateIntPoly::default()
    }

    /// `1 + x + y`, the cell pattern of a single tromino.
    pub fn one_plus_x_plus_y() -> Self {
        BivariateIntPoly::from_terms([((0, 0), 1), ((1, 0), 1), ((0, 1), 1)])
    }

    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), T)>,
        T: Into<BigInt>,
    {
        let mut poly = BivariateIntPoly::zero();
        for ((i, j), c) in terms {
            poly.add_term(i, j, c.into());
        }
        poly
    }

    /// Add `c · x^i y^j`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in `(i, j)`-ascending order.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest x exponent, `None` for the zero polynomial.
    pub fn deg_x(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Largest y exponent, `None` for the zero polynomial.
    pub fn deg_y(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, j)| j).max()
    }
}

impl Add for &BivariateIntPoly {
    type Output = BivariateIntPoly;

    fn add(self, rhs: &BivariateIntPoly) -> BivariateIntPoly {
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariateIntPoly {
    type Output = BivariateIntPoly;

    fn sub(self, rhs: &BivariateIntPoly) -> BivariateIntPoly {
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms() {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BivariateIntPoly {
    type Output = BivariateIntPoly;

    fn mul(self, rhs: &BivariateIntPoly) -> BivariateIntPoly {
        let mut out = BivariateIntPoly::zero();
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_entries() {
        let mut p = BivariateIntPoly::from_terms([((1, 2), 5)]);
        p.add_term(1, 2, BigInt::from(-5));
        assert!(p.is_zero());
        assert_eq!(p.coeff(1, 2), BigInt::zero());
    }

    #[test]
    fn product_expands_tromino_pattern() {
        // x y² · (1 + x + y) = x y² + x² y² + x y³
        let shift = BivariateIntPoly::from_terms([((1, 2), 1)]);
        let p = &shift * &BivariateIntPoly::one_plus_x_plus_y();
        assert_eq!(
            p,
            BivariateIntPoly::from_terms([((1, 2), 1), ((2, 2), 1), ((1, 3), 1)])
        );
        assert_eq!(p.deg_x(), Some(2));
        assert_eq!(p.deg_y(), Some(3));
    }

    #[test]
    fn sub_is_inverse_of_add() {
        let a = BivariateIntPoly::from_terms([((0, 0), 3), ((2, 1), -4)]);
        let b = BivariateIntPoly::from_terms([((2, 1), 7), ((5, 5), 1)]);
        let sum = &a + &b;
        assert_eq!(&sum - &b, a);
    }
}
