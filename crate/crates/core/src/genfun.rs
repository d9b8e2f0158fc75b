//! Genocchi-number oracles (enumeration and series extraction, kept in
//! agreement) and exact verification of the generating-function identities:
//! the four factored series for the two Genocchi families, the two
//! characteristic-polynomial series, the six-variable staircase identity at
//! sampled points, and the closing median-Genocchi formula.

use num::{One, Zero};

use crate::bond;
use crate::dperm::{self, DClass};
use crate::error::{Error, Result};
use crate::perm::for_each_arrangement;
use crate::poly::{
    factorial, falling_factorial, int, rat, rising_factorial_rat, Int, Poly, Rat,
};
use crate::series::{inverse_linear, inverse_linear_poly, Series};
use crate::staircase;

const SERIES_CAP: usize = 12;

fn check_series_cap(n: usize) -> Result<()> {
    if n > SERIES_CAP {
        return Err(Error::SizeLimit { what: "series order", cap: SERIES_CAP, got: n });
    }
    Ok(())
}

/// The four factored generating functions; the variants name what the
/// coefficients count.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactoredSeries {
    /// coefficient of `z^n` (n >= 1) is the Genocchi number `g_n`
    Genocchi,
    /// coefficient of `z^n` (n >= 0) is the median Genocchi number `h_n`
    MedianGenocchi,
    /// coefficient of `z^n` (n >= 0) is `g_{n+1}`
    GenocchiShifted,
    /// coefficient of `z^n` (n >= 1) is `h_{n-1}`
    MedianGenocchiShifted,
}

impl FactoredSeries {
    pub fn from_equation_index(ix: u32) -> Option<Self> {
        match ix {
            10 => Some(FactoredSeries::Genocchi),
            11 => Some(FactoredSeries::MedianGenocchi),
            12 => Some(FactoredSeries::GenocchiShifted),
            13 => Some(FactoredSeries::MedianGenocchiShifted),
            _ => None,
        }
    }

    /// First index at which the coefficient is meaningful.
    pub fn first_index(self) -> usize {
        match self {
            FactoredSeries::Genocchi | FactoredSeries::MedianGenocchiShifted => 1,
            _ => 0,
        }
    }
}

/// Build one of the factored series to the given truncation order.  Every
/// coefficient is asserted integral after the rational arithmetic.
pub fn bd_series(which: FactoredSeries, order: usize) -> Result<Series> {
    check_series_cap(order)?;
    let numerator = |n: usize| -> Rat {
        let val = match which {
            FactoredSeries::Genocchi => factorial(n - 1) * factorial(n),
            FactoredSeries::MedianGenocchi => factorial(n) * factorial(n + 1),
            FactoredSeries::GenocchiShifted | FactoredSeries::MedianGenocchiShifted => {
                factorial(n) * factorial(n)
            }
        };
        Rat::from_integer(val)
    };
    let denom_coeff = |k: i64| -> i64 {
        match which {
            FactoredSeries::Genocchi | FactoredSeries::GenocchiShifted => k * k,
            _ => k * (k + 1),
        }
    };
    let mut acc = Series::zero(order);
    for n in which.first_index()..=order {
        let mut term = Series::monomial(order, Poly::constant(numerator(n)), n);
        for k in 1..=n as i64 {
            term = &term * &inverse_linear(&rat(-denom_coeff(k)), &Poly::one(), order);
        }
        acc = &acc + &term;
    }
    for (k, p) in acc.terms().iter().enumerate() {
        if !p.is_integral() {
            return Err(Error::IntegralityFailure(format!("coefficient of z^{k} is {p}")));
        }
    }
    Ok(acc)
}

fn series_coefficient_int(s: &Series, k: usize) -> Int {
    let p = s.coeff(k);
    debug_assert!(p.degree().unwrap_or(0) == 0);
    let c = p.coeff(0);
    debug_assert!(c.is_integer());
    c.to_integer()
}

/// Genocchi number `g_n`: the count of strict-even parity-constrained
/// permutations on `[2n-2]`, cross-checked against the factored series on
/// the enumerable range.
pub fn genocchi_g(n: usize) -> Result<Int> {
    if n == 0 {
        return Err(Error::Invalid("Genocchi numbers start at n = 1".into()));
    }
    check_series_cap(n)?;
    let from_series = series_coefficient_int(&bd_series(FactoredSeries::Genocchi, n)?, n);
    if 2 * n - 2 <= 12 {
        let ground: Vec<u32> = (1..=2 * (n as u32 - 1)).collect();
        let enumerated = dperm::count(&ground, DClass::Dumont)?;
        if int(enumerated as i64) != from_series {
            return Err(Error::Invalid(format!(
                "Genocchi routes disagree at n = {n}: enumeration {enumerated}, series {from_series}"
            )));
        }
    }
    Ok(from_series)
}

/// Median Genocchi number `h_n`: the count of doubly-strict
/// parity-constrained derangements on `[2n+2]`, cross-checked against the
/// factored series on the default enumerable range (`n <= 5`).
pub fn genocchi_h(n: usize) -> Result<Int> {
    check_series_cap(n)?;
    let from_series = series_coefficient_int(&bd_series(FactoredSeries::MedianGenocchi, n.max(1))?, n);
    if n <= 5 {
        let enumerated = genocchi_h_enumerated(n)?;
        if enumerated != from_series {
            return Err(Error::Invalid(format!(
                "median Genocchi routes disagree at n = {n}: enumeration {enumerated}, series {from_series}"
            )));
        }
    }
    Ok(from_series)
}

/// Enumeration route for `h_n` on `[2n+2]`; reaches `n = 6` (ground set of
/// 14) behind the caller's explicit opt-in.
pub fn genocchi_h_enumerated(n: usize) -> Result<Int> {
    let ground: Vec<u32> = (1..=2 * n as u32 + 2).collect();
    Ok(int(dperm::count(&ground, DClass::DumontDerangement)? as i64))
}

/// Genocchi numbers through the descent model: permutations of `[2n-1]`
/// whose descents happen exactly after even letters.
pub fn genocchi_g_via_descents(n: usize) -> Result<Int> {
    if n == 0 || 2 * n - 1 > 9 {
        return Err(Error::SizeLimit { what: "descent-model sweep", cap: 5, got: n });
    }
    let items: Vec<u32> = (1..=2 * n as u32 - 1).collect();
    let mut count = 0i64;
    for_each_arrangement(&items, &mut |word| {
        let ok = word
            .windows(2)
            .all(|w| (w[0] > w[1]) == (w[0] % 2 == 0));
        if ok {
            count += 1;
        }
    });
    Ok(int(count))
}

/// Exact Taylor coefficients of `tan`, via `tan' = 1 + tan^2`.
fn tangent_coefficients(order: usize) -> Vec<Rat> {
    let mut t = vec![Rat::zero(); order + 1];
    for k in 0..order {
        // (k+1) T_{k+1} = [y^k] (1 + tan^2)
        let mut conv = if k == 0 { Rat::one() } else { Rat::zero() };
        for i in 0..=k {
            conv += &t[i] * &t[k - i];
        }
        t[k + 1] = conv / rat(k as i64 + 1);
    }
    t
}

/// Checks `(2n)! [x^{2n}] (x tan(x/2)) = g_n` for `n = 1..=max_n`, exactly.
pub fn tangent_egf_check(max_n: usize) -> Result<()> {
    check_series_cap(max_n)?;
    let t = tangent_coefficients(2 * max_n);
    for n in 1..=max_n {
        // [x^{2n}] x tan(x/2) = T_{2n-1} / 2^{2n-1}
        let half_pow = Rat::new(Int::one(), Int::from(1u64 << (2 * n - 1)));
        let coeff = &t[2 * n - 1] * half_pow;
        let scaled = coeff * Rat::from_integer(factorial(2 * n));
        if !scaled.is_integer() {
            return Err(Error::IntegralityFailure(format!("EGF coefficient at n = {n}")));
        }
        let expected = genocchi_g(n)?;
        if scaled.to_integer() != expected {
            return Err(Error::Invalid(format!(
                "tangent EGF gives {scaled} at n = {n}, expected {expected}"
            )));
        }
    }
    Ok(())
}

/// Right-hand side of the characteristic-polynomial series: the coefficient
/// of `u^n` is the polynomial for the lattice on `[2n]`.
pub fn char_poly_series(order: usize) -> Result<Series> {
    check_series_cap(order)?;
    let t_minus_1 = Poly::t_plus(-1);
    let mut acc = Series::zero(order);
    for n in 1..=order {
        let numerator = &falling_factorial(&t_minus_1, n) * &falling_factorial(&t_minus_1, n - 1);
        let mut term = Series::monomial(order, numerator, n);
        for k in 1..=n as i64 {
            // 1 / (1 - k(t-k) u)
            let c = Poly::new(vec![rat(-k * k), rat(k)]);
            term = &term * &inverse_linear_poly(&c, order);
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Right-hand sides of the two squared-factorial series: the first has
/// `u^n` coefficient equal to the characteristic polynomial on `[2n+2]`,
/// the second to the reduced semilattice polynomial on `[2n+2]`.
pub fn char_poly_series_squared(order: usize) -> Result<(Series, Series)> {
    check_series_cap(order)?;
    let t_minus_1 = Poly::t_plus(-1);
    let t_minus_2 = Poly::t_plus(-2);
    let mut full = Series::zero(order);
    let mut reduced = Series::zero(order);
    for n in 1..=order {
        let mut denom = Series::one(order);
        for k in 1..=n as i64 {
            let c = Poly::new(vec![rat(-k * k), rat(k)]);
            denom = &denom * &inverse_linear_poly(&c, order);
        }
        let fnum = falling_factorial(&t_minus_1, n);
        let full_term = Series::monomial(order, &fnum * &fnum, n);
        full = &full + &(&full_term * &denom);
        let rnum = falling_factorial(&t_minus_2, n - 1);
        let reduced_term = Series::monomial(order, &rnum * &rnum, n);
        reduced = &reduced + &(&reduced_term * &denom);
    }
    let scaled: Vec<Poly> = full
        .terms()
        .iter()
        .map(|p| p * &Poly::t_plus(-1))
        .collect();
    Ok((Series::from_terms(order, scaled), reduced))
}

/// One sampled six-tuple comparison for the staircase series identity.
#[derive(Debug, Clone)]
pub struct SampleMismatch {
    pub sample: [Rat; 6],
    pub index: usize,
    pub lhs: Rat,
    pub rhs: Rat,
}

/// Verifies the six-variable staircase identity coefficientwise in `u` up
/// to `order`, at each sampled argument tuple: the staircase enumeration on
/// `[2n]` against the rising-factorial series.
pub fn staircase_series_pointcheck(
    order: usize,
    samples: &[[Rat; 6]],
) -> Result<std::result::Result<usize, SampleMismatch>> {
    check_series_cap(order)?;
    for sample in samples {
        let [x, y, z, xb, yb, zb] = sample.clone();
        // expansion of u^m / prod_{k=0}^{m-1} (1 - c_k u), reused term by term
        let denominator_expansion = |m: usize| -> Vec<Rat> {
            let mut series = vec![Rat::zero(); order + 1];
            series[0] = Rat::one();
            for k in 0..m {
                let kk = rat(k as i64);
                let c = (&x + &kk) * (&yb - &y) - (&xb + &kk) * (&zb - &z)
                    - (&x + &kk) * (&xb + &kk);
                let mut next = vec![Rat::zero(); order + 1];
                for (i, v) in series.iter().enumerate() {
                    let mut cur = v.clone();
                    for slot in next.iter_mut().skip(i) {
                        *slot += &cur;
                        cur *= &c;
                    }
                }
                series = next;
            }
            series
        };
        for n in 1..=order {
            let lhs = staircase::lambda_at(2 * n as u32, sample)?;
            let mut rhs = Rat::zero();
            for m in 1..=n {
                let num_m = rising_factorial_rat(&(&x + &zb), m - 1)
                    * rising_factorial_rat(&(&y + &xb), m - 1);
                rhs += num_m * &denominator_expansion(m)[n - m];
            }
            if lhs != rhs {
                return Ok(Err(SampleMismatch { sample: sample.clone(), index: n, lhs, rhs }));
            }
        }
    }
    Ok(Ok(samples.len()))
}

/// The closing formula for the median Genocchi numbers:
/// `1 + 2 sum (n!)^2 u^n / prod_{k=1}^{n-1} (1 + k(k+1) u)` has `u^n`
/// coefficient `h_n`.
pub fn median_genocchi_formula_check(order: usize) -> Result<()> {
    check_series_cap(order)?;
    let mut acc = Series::one(order);
    for n in 1..=order {
        let scalar = Rat::from_integer(factorial(n) * factorial(n) * int(2));
        let mut term = Series::monomial(order, Poly::constant(scalar), n);
        for k in 1..n as i64 {
            term = &term * &inverse_linear(&rat(-k * (k + 1)), &Poly::one(), order);
        }
        acc = &acc + &term;
    }
    for n in 0..=order {
        let got = acc.coeff(n);
        if !got.is_integral() {
            return Err(Error::IntegralityFailure(format!("coefficient of u^{n} is {got}")));
        }
        let expected = genocchi_h(n)?;
        if got.coeff(0).to_integer() != expected {
            return Err(Error::Invalid(format!(
                "closing formula gives {got} at u^{n}, expected {expected}"
            )));
        }
    }
    Ok(())
}

/// Specialization checks of the characteristic-polynomial series: at
/// `t = 0` the coefficients are `-g_n`, at `t = -1` they are `-h_n`.
pub fn char_poly_series_specializations(order: usize) -> Result<()> {
    let s = char_poly_series(order)?;
    for n in 1..=order {
        let at0 = s.coeff(n).eval_int(0);
        let g = genocchi_g(n)?;
        if at0 != -Rat::from_integer(g.clone()) {
            return Err(Error::Invalid(format!(
                "series coefficient u^{n} at t=0 is {at0}, expected -{g}"
            )));
        }
        let at_minus1 = s.coeff(n).eval_int(-1);
        let h = genocchi_h(n)?;
        if at_minus1 != -Rat::from_integer(h.clone()) {
            return Err(Error::Invalid(format!(
                "series coefficient u^{n} at t=-1 is {at_minus1}, expected -{h}"
            )));
        }
    }
    Ok(())
}

/// Zaslavsky consistency: the alternating evaluation of the `u^n` series
/// coefficient counts regions.
pub fn series_region_check(order: usize) -> Result<()> {
    let s = char_poly_series(order)?;
    for n in 1..=order {
        let regions = bond::zaslavsky_regions(s.coeff(n), 2 * n - 1)?;
        let h = genocchi_h(n)?;
        if regions != h {
            return Err(Error::Invalid(format!(
                "series region count {regions} at n = {n}, expected {h}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genocchi_values_match_the_frozen_table() {
        let g: Vec<Int> = (1..=6).map(|n| genocchi_g(n).unwrap()).collect();
        assert_eq!(g, vec![int(1), int(1), int(3), int(17), int(155), int(2073)]);
        let h: Vec<Int> = (0..=5).map(|n| genocchi_h(n).unwrap()).collect();
        assert_eq!(
            h,
            vec![int(1), int(2), int(8), int(56), int(608), int(9440)]
        );
    }

    #[test]
    fn factored_series_coefficients() {
        let s11 = bd_series(FactoredSeries::MedianGenocchi, 3).unwrap();
        assert_eq!(series_coefficient_int(&s11, 3), int(56));
        let s10 = bd_series(FactoredSeries::Genocchi, 2).unwrap();
        assert_eq!(series_coefficient_int(&s10, 1), int(1));
        let s12 = bd_series(FactoredSeries::GenocchiShifted, 3).unwrap();
        assert_eq!(series_coefficient_int(&s12, 2), int(3));
        let s13 = bd_series(FactoredSeries::MedianGenocchiShifted, 3).unwrap();
        assert_eq!(series_coefficient_int(&s13, 3), int(8));
    }

    #[test]
    fn descent_model_gives_genocchi_numbers() {
        assert_eq!(genocchi_g_via_descents(1).unwrap(), int(1));
        assert_eq!(genocchi_g_via_descents(2).unwrap(), int(1));
        assert_eq!(genocchi_g_via_descents(3).unwrap(), int(3));
        assert_eq!(genocchi_g_via_descents(4).unwrap(), int(17));
    }

    #[test]
    fn tangent_egf_reproduces_genocchi_numbers() {
        tangent_egf_check(6).unwrap();
    }

    #[test]
    fn char_poly_series_low_coefficients() {
        let s = char_poly_series(2).unwrap();
        assert_eq!(s.coeff(1), &Poly::from_int_coeffs(&[-1, 1]));
        assert_eq!(s.coeff(2), &Poly::from_int_coeffs(&[-1, 3, -3, 1]));
    }

    #[test]
    fn char_poly_series_specializations_hold() {
        char_poly_series_specializations(4).unwrap();
    }

    #[test]
    fn squared_series_give_full_and_reduced_polynomials() {
        let (full, reduced) = char_poly_series_squared(2).unwrap();
        // u^1: lattice on [4] and its reduced polynomial 1
        assert_eq!(full.coeff(1), &Poly::from_int_coeffs(&[-1, 3, -3, 1]));
        assert_eq!(reduced.coeff(1), &Poly::one());
        // u^2: lattice on [6]
        assert_eq!(full.coeff(2), &Poly::from_int_coeffs(&[-3, 12, -19, 15, -6, 1]));
        assert_eq!(reduced.coeff(2), &Poly::from_int_coeffs(&[3, -3, 1]));
    }

    #[test]
    fn reduced_series_at_zero_gives_shifted_genocchi() {
        let (_, reduced) = char_poly_series_squared(3).unwrap();
        for n in 1..=3usize {
            assert_eq!(
                reduced.coeff(n).eval_int(0),
                Rat::from_integer(genocchi_g(n + 1).unwrap())
            );
        }
    }

    #[test]
    fn staircase_identity_at_fixed_samples() {
        let ones = [(); 6].map(|_| rat(1));
        let res = staircase_series_pointcheck(3, &[ones]).unwrap();
        assert!(res.is_ok(), "{res:?}");
        // the all-ones column is the staircase count sequence 1, 3, 17
        let zeros = [(); 6].map(|_| rat(0));
        let res = staircase_series_pointcheck(3, &[zeros]).unwrap();
        assert!(res.is_ok(), "{res:?}");
        let cyc = [rat(2), rat(2), rat(1), rat(0), rat(2), rat(1)];
        let res = staircase_series_pointcheck(3, &[cyc]).unwrap();
        assert!(res.is_ok(), "{res:?}");
    }

    #[test]
    fn closing_formula_matches_median_genocchi() {
        median_genocchi_formula_check(5).unwrap();
    }

    #[test]
    fn series_regions_match() {
        series_region_check(3).unwrap();
    }
}
