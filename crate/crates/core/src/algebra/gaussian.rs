//! Exact Gaussian integer arithmetic, the evaluation carrier for the
//! side-4 argument where the node set is D = {−1, i, −i}.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::bipoly::BivariateIntPoly;

/// A Gaussian integer `re + im·i` with arbitrary-precision parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    re: BigInt,
    im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInt::new(1, 0)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    /// `i^k`.
    pub fn i_pow(k: usize) -> Self {
        match k % 4 {
            0 => GaussianInt::new(1, 0),
            1 => GaussianInt::new(0, 1),
            2 => GaussianInt::new(-1, 0),
            _ => GaussianInt::new(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn re(&self) -> &BigInt {
        &self.re
    }

    pub fn im(&self) -> &BigInt {
        &self.im
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;

    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;

    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;

    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;

    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

/// Exact evaluation of `p(x, y)` at Gaussian integers.
pub fn eval_gaussian(p: &BivariateIntPoly, x: &GaussianInt, y: &GaussianInt) -> GaussianInt {
    let mut x_pows = vec![GaussianInt::one()];
    for _ in 0..p.deg_x().unwrap_or(0) {
        x_pows.push(x_pows.last().expect("nonempty") * x);
    }
    let mut y_pows = vec![GaussianInt::one()];
    for _ in 0..p.deg_y().unwrap_or(0) {
        y_pows.push(y_pows.last().expect("nonempty") * y);
    }

    let mut acc = GaussianInt::zero();
    for ((i, j), c) in p.terms() {
        let monomial = &x_pows[i] * &y_pows[j];
        let scaled = GaussianInt {
            re: monomial.re() * c,
            im: monomial.im() * c,
        };
        acc = &acc + &scaled;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_i_cycle() {
        assert_eq!(GaussianInt::i_pow(0), GaussianInt::one());
        assert_eq!(GaussianInt::i_pow(1), GaussianInt::i());
        assert_eq!(GaussianInt::i_pow(2), GaussianInt::new(-1, 0));
        assert_eq!(GaussianInt::i_pow(3), GaussianInt::new(0, -1));
        assert_eq!(GaussianInt::i_pow(7), GaussianInt::new(0, -1));
        let i = GaussianInt::i();
        assert_eq!(&(&i * &i) * &(&i * &i), GaussianInt::one());
    }

    #[test]
    fn tromino_pattern_at_i_and_minus_i() {
        // 1 + i + (−i) = 1
        let p = BivariateIntPoly::one_plus_x_plus_y();
        let v = eval_gaussian(&p, &GaussianInt::i(), &GaussianInt::new(0, -1));
        assert_eq!(v, GaussianInt::one());
    }

    #[test]
    fn monomial_at_minus_one() {
        // x²y at (−1, −1) = −1
        let p = BivariateIntPoly::from_terms([((2, 1), 1)]);
        let minus_one = GaussianInt::new(-1, 0);
        assert_eq!(eval_gaussian(&p, &minus_one, &minus_one), GaussianInt::new(-1, 0));
    }

    #[test]
    fn geometric_sum_in_y_vanishes_on_node_set() {
        // 1 + y + y² + y³ is zero at y ∈ {−1, i, −i}.
        let p = BivariateIntPoly::from_terms([((0, 0), 1), ((0, 1), 1), ((0, 2), 1), ((0, 3), 1)]);
        for y in [
            GaussianInt::new(-1, 0),
            GaussianInt::i(),
            GaussianInt::new(0, -1),
        ] {
            assert!(eval_gaussian(&p, &GaussianInt::one(), &y).is_zero());
        }
    }
}
