//! Excedent functions and surjective staircases: maps `f` on `[m]` with
//! `f(j) >= j`, the staircases whose image is exactly the even values, the
//! six fixed-point/surfixed-point/maximum statistics, the six-variable
//! generating polynomial over staircases, and the column-sliding bijection
//! that grows a staircase by one even row.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::dperm::{self, DClass};
use crate::error::{Error, Result};
use crate::poly::{Poly, Rat};

const STAIRCASE_CAP: usize = 12;

/// `values[j-1] = f(j)`, with `j <= f(j) <= m` for every `j`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ExcedentFn {
    #[serde(rename = "m")]
    m: u32,
    #[serde(rename = "f")]
    values: Vec<u32>,
}

impl ExcedentFn {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let m = values.len() as u32;
        for (idx, &v) in values.iter().enumerate() {
            let j = idx as u32 + 1;
            if v < j || v > m {
                return Err(Error::Invalid(format!(
                    "f({j}) = {v} is outside [{j}, {m}]"
                )));
            }
        }
        Ok(ExcedentFn { m, values })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn get(&self, j: u32) -> u32 {
        self.values[(j - 1) as usize]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn image(&self) -> BTreeSet<u32> {
        self.values.iter().copied().collect()
    }

    pub fn preimage_size(&self, v: u32) -> usize {
        self.values.iter().filter(|&&x| x == v).count()
    }

    /// Fixed point over the full domain `[m]`.
    pub fn is_fixed_point(&self, j: u32) -> bool {
        self.get(j) == j
    }

    pub fn is_isolated_fixed_point(&self, j: u32) -> bool {
        self.is_fixed_point(j) && self.preimage_size(j) == 1
    }

    /// Image is exactly the even values `{2, 4, ..., m}`.
    pub fn is_staircase(&self) -> bool {
        let evens: BTreeSet<u32> = (1..=self.m / 2).map(|k| 2 * k).collect();
        self.image() == evens
    }

    /// Maxima: positions `j` in `[m-2]` at which `f` reaches its top value.
    pub fn maxima(&self) -> Vec<u32> {
        (1..=self.m.saturating_sub(2))
            .filter(|&j| self.get(j) == self.m)
            .collect()
    }
}

impl std::fmt::Debug for ExcedentFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "f{:?}", self.values)
    }
}

/// Statistics over the restricted domain `[m-2]`, in the order of the
/// generating polynomial's variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SixStats {
    /// odd maxima
    pub mo: u32,
    /// doubled fixed points
    pub fd: u32,
    /// isolated surfixed points
    pub si: u32,
    /// even maxima
    pub me: u32,
    /// isolated fixed points
    pub fi: u32,
    /// doubled surfixed points
    pub sd: u32,
}

/// The six statistics; fixed points, surfixed points, and maxima all live
/// in `[m-2]` (the last two positions never count).
pub fn six_statistics(f: &ExcedentFn) -> SixStats {
    let mut s = SixStats { mo: 0, fd: 0, si: 0, me: 0, fi: 0, sd: 0 };
    let bound = f.m().saturating_sub(2);
    for j in 1..=bound {
        let v = f.get(j);
        if v == f.m() {
            if j % 2 == 1 {
                s.mo += 1;
            } else {
                s.me += 1;
            }
        }
        if v == j {
            if f.preimage_size(j) == 1 {
                s.fi += 1;
            } else {
                s.fd += 1;
            }
        }
        if v == j + 1 {
            if f.preimage_size(j + 1) == 1 {
                s.si += 1;
            } else {
                s.sd += 1;
            }
        }
    }
    s
}

/// All surjective staircases on `[two_n]`, optionally restricted to those
/// with no even maxima.
pub fn enumerate_staircases(two_n: u32, no_even_maxima: bool) -> Result<Vec<ExcedentFn>> {
    if two_n as usize > STAIRCASE_CAP {
        return Err(Error::SizeLimit {
            what: "staircase enumeration",
            cap: STAIRCASE_CAP,
            got: two_n as usize,
        });
    }
    if two_n % 2 != 0 || two_n == 0 {
        return Err(Error::Invalid("staircases live on even-sized domains".into()));
    }
    let mut out = Vec::new();
    let mut values: Vec<u32> = Vec::new();
    fn rec(two_n: u32, values: &mut Vec<u32>, out: &mut Vec<ExcedentFn>) {
        let j = values.len() as u32 + 1;
        if j > two_n {
            let f = ExcedentFn::new(values.clone()).expect("enumeration keeps excedence");
            debug_assert!(f.is_staircase());
            out.push(f);
            return;
        }
        // any even value not covered by now must still have a position
        // at or below it available; positions only map upward
        let uncovered_expired = (1..=two_n / 2)
            .map(|k| 2 * k)
            .any(|v| v < j && !values.contains(&v));
        if uncovered_expired {
            return;
        }
        let mut v = j + (j % 2); // smallest even value >= j
        while v <= two_n {
            values.push(v);
            rec(two_n, values, out);
            values.pop();
            v += 2;
        }
    }
    rec(two_n, &mut values, &mut out);
    if no_even_maxima {
        out.retain(|f| six_statistics(f).me == 0);
    }
    Ok(out)
}

/// The six-variable generating polynomial over staircases on `[two_n]`,
/// with each variable specialized to a polynomial in `t`.  Argument order:
/// odd-maximum, doubled-fixed, isolated-surfixed, even-maximum,
/// isolated-fixed, doubled-surfixed.
pub fn lambda_specialized(two_n: u32, args: &[Poly; 6]) -> Result<Poly> {
    let mut acc = Poly::zero();
    for f in enumerate_staircases(two_n, false)? {
        let s = six_statistics(&f);
        let term = [
            (s.mo, &args[0]),
            (s.fd, &args[1]),
            (s.si, &args[2]),
            (s.me, &args[3]),
            (s.fi, &args[4]),
            (s.sd, &args[5]),
        ]
        .into_iter()
        .fold(Poly::one(), |acc, (e, p)| &acc * &p.pow(e));
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Rational-point evaluation of the generating polynomial.
pub fn lambda_at(two_n: u32, args: &[Rat; 6]) -> Result<Rat> {
    use num::{One, Zero};
    let mut acc = Rat::zero();
    for f in enumerate_staircases(two_n, false)? {
        let s = six_statistics(&f);
        let mut term = Rat::one();
        for (e, x) in [
            (s.mo, &args[0]),
            (s.fd, &args[1]),
            (s.si, &args[2]),
            (s.me, &args[3]),
            (s.fi, &args[4]),
            (s.sd, &args[5]),
        ] {
            for _ in 0..e {
                term *= x;
            }
        }
        acc += term;
    }
    Ok(acc)
}

/// Membership in the slide domain: an excedent function on `[2n]` whose
/// image contains every even value and whose odd values occur exactly at
/// odd isolated fixed points.
pub fn is_in_gset(g: &ExcedentFn) -> bool {
    if g.m() % 2 != 0 {
        return false;
    }
    let image = g.image();
    if !(1..=g.m() / 2).all(|k| image.contains(&(2 * k))) {
        return false;
    }
    (1..=g.m()).all(|j| {
        let odd_value = g.get(j) % 2 == 1;
        let odd_isolated_fp = j % 2 == 1 && g.is_isolated_fixed_point(j);
        odd_value == odd_isolated_fp
    })
}

/// All members of the slide domain on `[two_n]`.
pub fn gset_members(two_n: u32) -> Result<Vec<ExcedentFn>> {
    if two_n as usize > STAIRCASE_CAP {
        return Err(Error::SizeLimit {
            what: "G-set enumeration",
            cap: STAIRCASE_CAP,
            got: two_n as usize,
        });
    }
    let mut out = Vec::new();
    let mut values: Vec<u32> = Vec::new();
    // odd values may only appear as g(j) = j at odd j; isolation is then
    // automatic because no other position can take an odd value
    fn rec(two_n: u32, values: &mut Vec<u32>, out: &mut Vec<ExcedentFn>) {
        let j = values.len() as u32 + 1;
        if j > two_n {
            let g = ExcedentFn::new(values.clone()).expect("enumeration keeps excedence");
            if is_in_gset(&g) {
                out.push(g);
            }
            return;
        }
        if j % 2 == 1 {
            values.push(j);
            rec(two_n, values, out);
            values.pop();
        }
        let mut v = j + (j % 2);
        while v <= two_n {
            values.push(v);
            rec(two_n, values, out);
            values.pop();
            v += 2;
        }
    }
    rec(two_n, &mut values, &mut out);
    Ok(out)
}

/// Slide a domain member up to a staircase on two more values: even values
/// are kept, odd values (isolated fixed points) slide to the new top row,
/// and the two new positions map to the top.
pub fn gamma_slide(g: &ExcedentFn) -> Result<ExcedentFn> {
    if !is_in_gset(g) {
        return Err(Error::NotInGSet(format!("{g:?}")));
    }
    let two_n = g.m();
    let top = two_n + 2;
    let mut values: Vec<u32> = (1..=two_n)
        .map(|j| {
            let v = g.get(j);
            if v % 2 == 0 {
                v
            } else {
                top
            }
        })
        .collect();
    values.push(top);
    values.push(top);
    let f = ExcedentFn::new(values)?;
    debug_assert!(f.is_staircase());
    debug_assert_eq!(six_statistics(&f).me, 0, "slide images have no even maxima");
    Ok(f)
}

/// Inverse of the slide: the top-row marks in the first `2n` columns drop
/// back to the diagonal.
pub fn gamma_unslide(f: &ExcedentFn) -> Result<ExcedentFn> {
    let top = f.m();
    if top < 2 || top % 2 != 0 || !f.is_staircase() {
        return Err(Error::Invalid("unslide needs a surjective staircase".into()));
    }
    if six_statistics(f).me != 0 {
        return Err(Error::Invalid("unslide needs a staircase with no even maxima".into()));
    }
    let two_n = top - 2;
    let values: Vec<u32> = (1..=two_n)
        .map(|j| {
            let v = f.get(j);
            if v == top {
                j
            } else {
                v
            }
        })
        .collect();
    let g = ExcedentFn::new(values)?;
    if !is_in_gset(&g) {
        return Err(Error::NotInGSet(format!("unslide produced {g:?}")));
    }
    Ok(g)
}

/// Cycle-count identity: the cycle enumerator of D-permutations on `[2n]`
/// equals the staircase polynomial on `[2n+2]` at
/// `(t, t, 1, 0, t, 1)`.  Returns both sides on failure.
pub fn lemma_cycle_identity(n: usize) -> Result<std::result::Result<Poly, (Poly, Poly)>> {
    let ground: Vec<u32> = (1..=2 * n as u32).collect();
    let by_cycles = dperm::count_by_cycles(&ground, DClass::DPerm)?;
    let mut lhs = Poly::zero();
    for (k, c) in by_cycles {
        lhs = &lhs + &Poly::monomial(Rat::from_integer((c as i64).into()), k);
    }
    let t = Poly::t();
    let one = Poly::one();
    let zero = Poly::zero();
    let rhs = lambda_specialized(
        2 * n as u32 + 2,
        &[t.clone(), t.clone(), one.clone(), zero, t, one],
    )?;
    Ok(if lhs == rhs { Ok(lhs) } else { Err((lhs, rhs)) })
}

/// ASCII rendering of the even-rows tableau of a staircase: rows labeled
/// `m, m-2, ..., 2` top to bottom, row `i` spanning columns `1..=i`, with
/// an `X` in column `j` of row `f(j)`.
pub fn render_tableau(f: &ExcedentFn) -> String {
    let m = f.m();
    let mut out = String::new();
    let width = m.to_string().len();
    let mut row = m;
    loop {
        out.push_str(&format!("{row:>width$} |"));
        for j in 1..=row {
            if f.get(j) == row {
                out.push_str(" X");
            } else {
                out.push_str(" .");
            }
        }
        out.push('\n');
        if row < 4 {
            break;
        }
        row -= 2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn f(values: &[u32]) -> ExcedentFn {
        ExcedentFn::new(values.to_vec()).unwrap()
    }

    /// The 10-cell running example.
    fn example_staircase() -> ExcedentFn {
        f(&[2, 8, 4, 4, 10, 6, 10, 8, 10, 10])
    }

    #[test]
    fn excedence_is_enforced() {
        assert!(ExcedentFn::new(vec![1, 2]).is_ok());
        assert!(ExcedentFn::new(vec![2, 1]).is_err());
        assert!(ExcedentFn::new(vec![3, 2]).is_err());
    }

    #[test]
    fn example_staircase_is_accepted_with_odd_maxima() {
        let ex = example_staircase();
        assert!(ex.is_staircase());
        assert_eq!(ex.maxima(), vec![5, 7]);
        let s = six_statistics(&ex);
        assert_eq!((s.mo, s.me), (2, 0));
    }

    #[test]
    fn staircase_counts_at_small_sizes() {
        assert_eq!(enumerate_staircases(2, false).unwrap().len(), 1);
        assert_eq!(enumerate_staircases(4, false).unwrap().len(), 3);
        // counts continue 17, 155 (the Genocchi sequence shifted)
        assert_eq!(enumerate_staircases(6, false).unwrap().len(), 17);
        assert_eq!(enumerate_staircases(8, false).unwrap().len(), 155);
    }

    #[test]
    fn no_even_maxima_counts_match_d_permutation_totals() {
        // 2, 8, 56 on [4], [6], [8]
        assert_eq!(enumerate_staircases(4, true).unwrap().len(), 2);
        assert_eq!(enumerate_staircases(6, true).unwrap().len(), 8);
        assert_eq!(enumerate_staircases(8, true).unwrap().len(), 56);
    }

    #[test]
    fn top_valued_function_statistics() {
        // f identically 4 on [4]: maxima at 1 (odd) and 2 (even)
        let g = f(&[4, 4, 4, 4]);
        let s = six_statistics(&g);
        assert_eq!(s, SixStats { mo: 1, fd: 0, si: 0, me: 1, fi: 0, sd: 0 });
    }

    #[test]
    fn smallest_staircase_has_all_statistics_zero() {
        let g = f(&[2, 2]);
        assert_eq!(
            six_statistics(&g),
            SixStats { mo: 0, fd: 0, si: 0, me: 0, fi: 0, sd: 0 }
        );
    }

    #[test]
    fn lambda_on_two_is_one_everywhere() {
        let args = [
            Poly::t(),
            Poly::t(),
            Poly::one(),
            Poly::zero(),
            Poly::t(),
            Poly::one(),
        ];
        assert_eq!(lambda_specialized(2, &args).unwrap(), Poly::one());
    }

    #[test]
    fn lambda_four_at_the_cycle_specialization() {
        let t = Poly::t();
        let args = [t.clone(), t.clone(), Poly::one(), Poly::zero(), t, Poly::one()];
        assert_eq!(
            lambda_specialized(4, &args).unwrap(),
            Poly::from_int_coeffs(&[0, 1, 1])
        );
    }

    #[test]
    fn lambda_at_all_ones_counts_staircases() {
        let ones = [(); 6].map(|_| rat(1));
        assert_eq!(lambda_at(4, &ones).unwrap(), rat(3));
        assert_eq!(lambda_at(6, &ones).unwrap(), rat(17));
    }

    #[test]
    fn slide_matches_the_figure_pair() {
        let g = f(&[2, 8, 4, 4, 5, 6, 7, 8]);
        assert!(is_in_gset(&g));
        assert_eq!(gamma_slide(&g).unwrap(), example_staircase());
        assert_eq!(gamma_unslide(&example_staircase()).unwrap(), g);
    }

    #[test]
    fn slide_on_the_smallest_domain() {
        let g = f(&[2, 2]);
        assert_eq!(gamma_slide(&g).unwrap(), f(&[2, 2, 4, 4]));
        let g2 = f(&[1, 2]);
        assert!(is_in_gset(&g2));
        assert_eq!(gamma_slide(&g2).unwrap(), f(&[4, 2, 4, 4]));
    }

    #[test]
    fn slide_round_trips_exhaustively_on_small_domains() {
        for two_n in [2u32, 4, 6, 8] {
            let members = gset_members(two_n).unwrap();
            for g in &members {
                let f = gamma_slide(g).unwrap();
                assert_eq!(&gamma_unslide(&f).unwrap(), g);
            }
            // slide is a bijection onto the no-even-maxima staircases
            let mut images: Vec<ExcedentFn> =
                members.iter().map(|g| gamma_slide(g).unwrap()).collect();
            images.sort();
            images.dedup();
            let targets = enumerate_staircases(two_n + 2, true).unwrap();
            assert_eq!(images.len(), targets.len());
            for t in &targets {
                assert!(images.binary_search(t).is_ok());
            }
        }
    }

    #[test]
    fn slide_properties_match_membership_invariants() {
        for g in gset_members(6).unwrap() {
            let fimg = gamma_slide(&g).unwrap();
            for j in 1..=6u32 {
                // even fixed points of g are fixed points of the image
                let even_fp = j % 2 == 0 && g.is_fixed_point(j);
                let img_fp = fimg.get(j) == j;
                assert_eq!(even_fp, img_fp);
                // odd isolated fixed points become maxima
                let odd_iso = j % 2 == 1 && g.is_isolated_fixed_point(j);
                let img_max = fimg.get(j) == fimg.m();
                assert_eq!(odd_iso, img_max);
                // even isolated fixed points stay isolated
                let even_iso = j % 2 == 0 && g.is_isolated_fixed_point(j);
                let img_iso = fimg.get(j) == j && fimg.preimage_size(j) == 1;
                assert_eq!(even_iso, img_iso);
            }
        }
    }

    #[test]
    fn cycle_identity_at_small_sizes() {
        for n in [1usize, 2, 3] {
            let res = lemma_cycle_identity(n).unwrap();
            assert!(res.is_ok(), "cycle identity failed at n = {n}: {res:?}");
        }
        assert_eq!(
            lemma_cycle_identity(1).unwrap().unwrap(),
            Poly::from_int_coeffs(&[0, 1, 1])
        );
    }

    #[test]
    fn tableau_rendering_marks_the_example() {
        let s = render_tableau(&example_staircase());
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].starts_with("10 |"));
        assert_eq!(lines[0].matches('X').count(), 4);
        assert_eq!(lines[4], " 2 | X .");
    }

    #[test]
    fn size_cap_is_enforced() {
        assert!(matches!(
            enumerate_staircases(14, false),
            Err(Error::SizeLimit { .. })
        ));
    }
}
