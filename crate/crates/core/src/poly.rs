//! Exact univariate polynomials in `t` with arbitrary-precision rational
//! coefficients, stored densely (degrees stay small throughout the library).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

/// Dense polynomial; `coeffs[k]` is the coefficient of `t^k`, trailing zeros
/// trimmed.  The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    /// `t + c` for integer `c`.
    pub fn t_plus(c: i64) -> Self {
        Poly::new(vec![rat(c), rat(1)])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// True when every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The coefficients as integers, failing when any denominator is not 1.
    pub fn integer_coeffs(&self) -> Result<Vec<Int>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::IntegralityFailure(format!("coefficient {c}")))
                }
            })
            .collect()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&rat(x))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division; errors unless `self = q * div` exactly.
    pub fn div_exact(&self, div: &Poly) -> Result<Poly> {
        if div.is_zero() {
            return Err(Error::Invalid("division by zero polynomial".into()));
        }
        let mut rem = self.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(div.coeffs.len()) + 1];
        let dlead = div.leading_coeff();
        let ddeg = div.degree().unwrap();
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let c = rem.leading_coeff() / &dlead;
            let k = rdeg - ddeg;
            q[k] = c.clone();
            rem = &rem - &div.scale(&c).shift(k);
        }
        if !rem.is_zero() {
            return Err(Error::Invalid(format!(
                "polynomial division left remainder {rem}"
            )));
        }
        Ok(Poly::new(q))
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs)
    }

    /// Substitute `x` for `t`, where `x` is itself a polynomial.
    pub fn compose(&self, x: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Poly::constant(c.clone());
        }
        acc
    }
}

/// Falling factorial `a (a-1) (a-2) ... (a-n+1)` of a polynomial argument.
pub fn falling_factorial(a: &Poly, n: usize) -> Poly {
    let mut acc = Poly::one();
    for k in 0..n {
        acc = &acc * &(a - &Poly::constant(rat(k as i64)));
    }
    acc
}

/// Rising factorial `a (a+1) (a+2) ... (a+n-1)` of a polynomial argument.
pub fn rising_factorial(a: &Poly, n: usize) -> Poly {
    let mut acc = Poly::one();
    for k in 0..n {
        acc = &acc * &(a + &Poly::constant(rat(k as i64)));
    }
    acc
}

/// Rising factorial of a rational argument.
pub fn rising_factorial_rat(a: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    for k in 0..n {
        acc *= a + rat(k as i64);
    }
    acc
}

/// Falling factorial of a rational argument.
pub fn falling_factorial_rat(a: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    for k in 0..n {
        acc *= a - rat(k as i64);
    }
    acc
}

pub fn factorial(n: usize) -> Int {
    (1..=n as i64).map(int).product()
}

/// Binomial coefficient polynomial `C(a, m) = a (a-1) ... (a-m+1) / m!`.
pub fn binomial_poly(a: &Poly, m: usize) -> Poly {
    falling_factorial(a, m).scale(&Rat::new(Int::one(), factorial(m)))
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn fmt_rat(c: &Rat) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Renders like `t^3 - 3t^2 + 3t - 1`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff_str = fmt_rat(&mag);
            match k {
                0 => write!(f, "{coeff_str}")?,
                1 if mag.is_one() => write!(f, "t")?,
                1 => write!(f, "{coeff_str}t")?,
                _ if mag.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{coeff_str}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// JSON form `{"coeffs":[c0,c1,...]}`, ascending in `t`; integers are emitted
/// as JSON numbers, non-integer rationals as `"p/q"` strings.
impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Value> = self.coeffs.iter().map(rat_to_json).collect();
        let mut map = s.serialize_map(Some(1))?;
        map.serialize_entry("coeffs", &coeffs)?;
        map.end()
    }
}

pub fn rat_to_json(c: &Rat) -> serde_json::Value {
    if c.is_integer() {
        let v = c.to_integer();
        if let Ok(i) = i64::try_from(v.clone()) {
            serde_json::Value::from(i)
        } else {
            serde_json::Value::from(v.to_string())
        }
    } else {
        serde_json::Value::from(format!("{}/{}", c.numer(), c.denom()))
    }
}

fn rat_from_json(v: &serde_json::Value) -> Result<Rat> {
    match v {
        serde_json::Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Invalid(format!("non-integer number {n}")))?;
            Ok(rat(i))
        }
        serde_json::Value::String(s) => {
            let parse_int = |x: &str| {
                x.parse::<Int>()
                    .map_err(|_| Error::Invalid(format!("bad integer {x}")))
            };
            match s.split_once('/') {
                Some((p, q)) => Ok(Rat::new(parse_int(p)?, parse_int(q)?)),
                None => Ok(Rat::from_integer(parse_int(s)?)),
            }
        }
        other => Err(Error::Invalid(format!("bad coefficient {other}"))),
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<serde_json::Value>,
        }
        let raw = Raw::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(rat_from_json)
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorial_empty_product_is_one() {
        let a = Poly::t_plus(-1);
        assert_eq!(falling_factorial(&a, 0), Poly::one());
    }

    #[test]
    fn falling_factorial_expands() {
        // (t-1)(t-2) = t^2 - 3t + 2
        let a = Poly::t_plus(-1);
        assert_eq!(falling_factorial(&a, 2), Poly::from_int_coeffs(&[2, -3, 1]));
    }

    #[test]
    fn rising_factorial_expands() {
        // (t+1)(t+2) = t^2 + 3t + 2
        let a = Poly::t_plus(1);
        assert_eq!(rising_factorial(&a, 2), Poly::from_int_coeffs(&[2, 3, 1]));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_int_coeffs(&[0, 0]).degree(), None);
    }

    #[test]
    fn division_is_exact_or_errors() {
        let num = Poly::from_int_coeffs(&[-3, 12, -19, 15, -6, 1]); // table row n=3
        let den = falling_factorial(&Poly::t_plus(0), 1); // t
        assert!(num.div_exact(&den).is_err());
        let cube = Poly::t_plus(-1).pow(3);
        let quot = num.div_exact(&cube).unwrap();
        assert_eq!(quot, Poly::from_int_coeffs(&[3, -3, 1]));
    }

    #[test]
    fn eval_matches_horner() {
        let p = Poly::from_int_coeffs(&[-1, 3, -3, 1]);
        assert_eq!(p.eval_int(-1), rat(-8));
        assert_eq!(p.eval_int(0), rat(-1));
        assert_eq!(p.eval_int(1), rat(0));
    }

    #[test]
    fn json_round_trip_with_rationals() {
        let p = Poly::new(vec![ratio(1, 2), rat(-3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":["1/2",-3]}"#);
        let q: Poly = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn display_formats_like_a_char_poly() {
        let p = Poly::from_int_coeffs(&[-1, 3, -3, 1]);
        assert_eq!(p.to_string(), "t^3 - 3t^2 + 3t - 1");
    }
}
