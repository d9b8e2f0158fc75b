//! Formal power series in `u`, truncated at a fixed order, with polynomial
//! (in `t`) coefficients.  All arithmetic is exact and closed under the
//! truncation.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::poly::{Poly, Rat};

/// `terms[k]` is the coefficient of `u^k`; the vector always has length
/// `order + 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    order: usize,
    terms: Vec<Poly>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series { order, terms: vec![Poly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.terms[0] = Poly::one();
        s
    }

    pub fn from_terms(order: usize, mut terms: Vec<Poly>) -> Self {
        terms.resize(order + 1, Poly::zero());
        Series { order, terms }
    }

    /// The monomial `c * u^k`; contributes nothing when `k > order`.
    pub fn monomial(order: usize, c: Poly, k: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.terms[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &Poly {
        &self.terms[k]
    }

    pub fn terms(&self) -> &[Poly] {
        &self.terms
    }

    /// Substitute a rational value for `t` in every coefficient.
    pub fn eval_coeffs(&self, t: &Rat) -> Vec<Rat> {
        self.terms.iter().map(|p| p.eval(t)).collect()
    }

    /// Multiplicative inverse, requiring constant term 1.
    pub fn inverse(&self) -> Series {
        assert_eq!(self.terms[0], Poly::one(), "series inverse needs unit constant term");
        let mut inv = vec![Poly::zero(); self.order + 1];
        inv[0] = Poly::one();
        for k in 1..=self.order {
            let mut acc = Poly::zero();
            for j in 1..=k {
                acc = &acc + &(&self.terms[j] * &inv[k - j]);
            }
            inv[k] = -&acc;
        }
        Series { order: self.order, terms: inv }
    }
}

/// Geometric expansion of `1 / (1 - q * r(t) * u)` up to order `n`: term `k`
/// is `(q * r)^k`.
pub fn inverse_linear(q: &Rat, r: &Poly, order: usize) -> Series {
    let step = r.scale(q);
    let mut terms = Vec::with_capacity(order + 1);
    let mut cur = Poly::one();
    for _ in 0..=order {
        terms.push(cur.clone());
        cur = &cur * &step;
    }
    Series { order, terms }
}

/// `1 / (1 - c(t) * u)` for a polynomial coefficient `c`.
pub fn inverse_linear_poly(c: &Poly, order: usize) -> Series {
    let mut terms = Vec::with_capacity(order + 1);
    let mut cur = Poly::one();
    for _ in 0..=order {
        terms.push(cur.clone());
        cur = &cur * c;
    }
    Series { order, terms }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        assert_eq!(self.order, rhs.order);
        let terms = self
            .terms
            .iter()
            .zip(&rhs.terms)
            .map(|(a, b)| a + b)
            .collect();
        Series { order: self.order, terms }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        assert_eq!(self.order, rhs.order);
        let terms = self
            .terms
            .iter()
            .zip(&rhs.terms)
            .map(|(a, b)| a - b)
            .collect();
        Series { order: self.order, terms }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        assert_eq!(self.order, rhs.order);
        let mut terms = vec![Poly::zero(); self.order + 1];
        for i in 0..=self.order {
            if self.terms[i].is_zero() {
                continue;
            }
            for j in 0..=self.order - i {
                if rhs.terms[j].is_zero() {
                    continue;
                }
                terms[i + j] = &terms[i + j] + &(&self.terms[i] * &rhs.terms[j]);
            }
        }
        Series { order: self.order, terms }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .enumerate()
            .map(|(k, p)| format!("({p}) u^{k}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn geometric_expansion_of_linear_inverse() {
        // 1/(1 - (t-1)u) = 1 + (t-1)u + (t-1)^2 u^2
        let s = inverse_linear(&rat(1), &Poly::t_plus(-1), 2);
        assert_eq!(s.coeff(0), &Poly::one());
        assert_eq!(s.coeff(1), &Poly::t_plus(-1));
        assert_eq!(s.coeff(2), &Poly::from_int_coeffs(&[1, -2, 1]));
    }

    #[test]
    fn zero_ratio_gives_constant_one() {
        let s = inverse_linear(&rat(0), &Poly::t_plus(-1), 3);
        assert_eq!(s, Series::one(3));
    }

    #[test]
    fn scaled_linear_inverse() {
        // 1/(1 - 2(t-2)u) = 1 + (2t-4)u + ...
        let s = inverse_linear(&rat(2), &Poly::t_plus(-2), 1);
        assert_eq!(s.coeff(0), &Poly::one());
        assert_eq!(s.coeff(1), &Poly::from_int_coeffs(&[-4, 2]));
    }

    #[test]
    fn inverse_times_original_is_one() {
        let lin = &Series::one(4) - &Series::monomial(4, Poly::from_int_coeffs(&[-2, 3]), 1);
        let inv = lin.inverse();
        assert_eq!(&lin * &inv, Series::one(4));
    }
}
