//! D-permutations (odd positions never drop, even positions never rise),
//! their Dumont subclasses, and the characteristic-polynomial formulas they
//! carry.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{Poly, Rat};

/// Permutation classes with the parity constraints, ordered by containment:
/// every D-cycle is a Dumont derangement, every Dumont derangement is a
/// Dumont permutation, every Dumont permutation is a D-permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DClass {
    DPerm,
    DCycle,
    Dumont,
    DumontDerangement,
}

impl DClass {
    pub fn name(self) -> &'static str {
        match self {
            DClass::DPerm => "dperm",
            DClass::DCycle => "dcycle",
            DClass::Dumont => "dumont",
            DClass::DumontDerangement => "dumont-derangement",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "dperm" => Some(DClass::DPerm),
            "dcycle" => Some(DClass::DCycle),
            "dumont" => Some(DClass::Dumont),
            "dumont-derangement" => Some(DClass::DumontDerangement),
            _ => None,
        }
    }
}

fn pair_ok(class: DClass, i: u32, v: u32) -> bool {
    let odd = i % 2 == 1;
    match class {
        DClass::DPerm | DClass::DCycle => {
            if odd {
                i <= v
            } else {
                i >= v
            }
        }
        DClass::Dumont => {
            if odd {
                i <= v
            } else {
                i > v
            }
        }
        DClass::DumontDerangement => {
            if odd {
                i < v
            } else {
                i > v
            }
        }
    }
}

pub fn is_d_perm(p: &Permutation) -> bool {
    p.pairs().all(|(i, v)| pair_ok(DClass::DPerm, i, v))
}

pub fn is_dumont(p: &Permutation) -> bool {
    p.pairs().all(|(i, v)| pair_ok(DClass::Dumont, i, v))
}

pub fn is_dumont_derangement(p: &Permutation) -> bool {
    p.pairs().all(|(i, v)| pair_ok(DClass::DumontDerangement, i, v))
}

pub fn is_d_cycle(p: &Permutation) -> bool {
    is_d_perm(p) && p.is_cycle()
}

pub fn is_in_class(p: &Permutation, class: DClass) -> bool {
    match class {
        DClass::DPerm => is_d_perm(p),
        DClass::DCycle => is_d_cycle(p),
        DClass::Dumont => is_dumont(p),
        DClass::DumontDerangement => is_dumont_derangement(p),
    }
}

const ENUM_CAP: usize = 14;

fn check_cap(ground: &[u32]) -> Result<()> {
    if ground.len() > ENUM_CAP {
        return Err(Error::SizeLimit {
            what: "D-permutation enumeration",
            cap: ENUM_CAP,
            got: ground.len(),
        });
    }
    Ok(())
}

/// Visit the image sequence (in ground order) of every permutation of
/// `ground` in `class`, by constraint-propagating backtracking: position i
/// only ever tries the unused values its parity allows.
pub fn for_each_in_class(
    ground: &[u32],
    class: DClass,
    visit: &mut dyn FnMut(&[u32]),
) -> Result<()> {
    check_cap(ground)?;
    if class == DClass::DCycle {
        return for_each_d_cycle(ground, visit);
    }
    let n = ground.len();
    let mut image = vec![0u32; n];
    let mut used = vec![false; n];
    fn rec(
        ground: &[u32],
        class: DClass,
        pos: usize,
        image: &mut Vec<u32>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if pos == ground.len() {
            visit(image);
            return;
        }
        let i = ground[pos];
        for (vi, &v) in ground.iter().enumerate() {
            if used[vi] || !pair_ok(class, i, v) {
                continue;
            }
            used[vi] = true;
            image[pos] = v;
            rec(ground, class, pos + 1, image, used, visit);
            used[vi] = false;
        }
    }
    rec(ground, class, 0, &mut image, &mut used, visit);
    Ok(())
}

/// Single cycles are enumerated directly as cycle sequences starting at the
/// minimum, rather than by filtering all D-permutations.
fn for_each_d_cycle(ground: &[u32], visit: &mut dyn FnMut(&[u32])) -> Result<()> {
    let n = ground.len();
    if n == 0 {
        return Ok(());
    }
    if n == 1 {
        // a fixed point is a 1-cycle
        visit(&[ground[0]]);
        return Ok(());
    }
    let mut cyc = vec![ground[0]];
    let mut used = vec![false; n];
    used[0] = true;
    fn rec(
        ground: &[u32],
        cyc: &mut Vec<u32>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        let last = *cyc.last().unwrap();
        if cyc.len() == ground.len() {
            // closing step maps last back to the minimum
            if pair_ok(DClass::DPerm, last, ground[0]) {
                let mut image = vec![0u32; ground.len()];
                for (i, &x) in cyc.iter().enumerate() {
                    let next = cyc[(i + 1) % cyc.len()];
                    let idx = ground.binary_search(&x).unwrap();
                    image[idx] = next;
                }
                visit(&image);
            }
            return;
        }
        for (vi, &v) in ground.iter().enumerate() {
            if used[vi] || !pair_ok(DClass::DPerm, last, v) {
                continue;
            }
            used[vi] = true;
            cyc.push(v);
            rec(ground, cyc, used, visit);
            cyc.pop();
            used[vi] = false;
        }
    }
    rec(ground, &mut cyc, &mut used, visit);
    Ok(())
}

/// Exhaustive, duplicate-free list of the permutations of `ground` in
/// `class`.
pub fn enumerate(ground: &[u32], class: DClass) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for_each_in_class(ground, class, &mut |image| {
        out.push(
            Permutation::new(ground.to_vec(), image.to_vec()).expect("enumeration emits bijections"),
        );
    })?;
    Ok(out)
}

pub fn count(ground: &[u32], class: DClass) -> Result<u64> {
    let mut n = 0;
    for_each_in_class(ground, class, &mut |_| n += 1)?;
    Ok(n)
}

fn cycle_count_of_image(ground: &[u32], image: &[u32]) -> usize {
    let mut seen = vec![false; ground.len()];
    let mut cycles = 0;
    for start in 0..ground.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut idx = start;
        while !seen[idx] {
            seen[idx] = true;
            idx = ground.binary_search(&image[idx]).unwrap();
        }
    }
    cycles
}

/// Counts of class members grouped by number of cycles.
pub fn count_by_cycles(ground: &[u32], class: DClass) -> Result<BTreeMap<usize, u64>> {
    let mut map = BTreeMap::new();
    for_each_in_class(ground, class, &mut |image| {
        *map.entry(cycle_count_of_image(ground, image)).or_insert(0) += 1;
    })?;
    Ok(map)
}

/// Signed cycle-count table: entry `k` is `(-1)^k` times the number of
/// D-permutations on `[2n]` with exactly `k` cycles.
pub fn s_d_table(n: usize) -> Result<BTreeMap<usize, i64>> {
    let ground: Vec<u32> = (1..=2 * n as u32).collect();
    let by_cycles = count_by_cycles(&ground, DClass::DPerm)?;
    Ok(by_cycles
        .into_iter()
        .map(|(k, c)| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (k, sign * c as i64)
        })
        .collect())
}

/// Characteristic polynomial from the signed cycle-count table:
/// `sum_k s_D(2n,k) t^(k-1)`.
pub fn char_poly_from_counts(n: usize) -> Result<Poly> {
    let table = s_d_table(n)?;
    let mut acc = Poly::zero();
    for (k, s) in table {
        acc = &acc + &Poly::monomial(Rat::from_integer(s.into()), k - 1);
    }
    Ok(acc)
}

fn even_fixed_points(ground: &[u32], image: &[u32]) -> usize {
    ground
        .iter()
        .zip(image)
        .filter(|&(&i, &v)| i == v && i % 2 == 0)
        .count()
}

fn fixed_points(ground: &[u32], image: &[u32]) -> usize {
    ground.iter().zip(image).filter(|&(&i, &v)| i == v).count()
}

/// Characteristic polynomial as
/// `(t-1) * sum over D-permutations of [2n-2] of
///  (-t)^(even fixed points) (1-t)^(other cycles)`;
/// the empty ground set contributes the single empty permutation.
pub fn char_poly_even_fp(n: usize) -> Result<Poly> {
    assert!(n >= 1);
    let ground: Vec<u32> = (1..=2 * (n as u32 - 1)).collect();
    let minus_t = Poly::from_int_coeffs(&[0, -1]);
    let one_minus_t = Poly::from_int_coeffs(&[1, -1]);
    let mut sum = Poly::zero();
    for_each_in_class(&ground, DClass::DPerm, &mut |image| {
        let efp = even_fixed_points(&ground, image);
        let other = cycle_count_of_image(&ground, image) - efp;
        sum = &sum + &(&minus_t.pow(efp as u32) * &one_minus_t.pow(other as u32));
    })?;
    Ok(&Poly::t_plus(-1) * &sum)
}

/// Characteristic polynomial as
/// `(t-1)^3 * sum over D-permutations of [2n-4] of
///  (1-t)^(fixed points) (2-t)^(other cycles)`.
pub fn char_poly_reduced_form(n: usize) -> Result<Poly> {
    assert!(n >= 2);
    let ground: Vec<u32> = (1..=2 * (n as u32 - 2)).collect();
    let one_minus_t = Poly::from_int_coeffs(&[1, -1]);
    let two_minus_t = Poly::from_int_coeffs(&[2, -1]);
    let mut sum = Poly::zero();
    for_each_in_class(&ground, DClass::DPerm, &mut |image| {
        let fp = fixed_points(&ground, image);
        let other = cycle_count_of_image(&ground, image) - fp;
        sum = &sum + &(&one_minus_t.pow(fp as u32) * &two_minus_t.pow(other as u32));
    })?;
    Ok(&Poly::t_plus(-1).pow(3) * &sum)
}

/// Power-of-two decompositions obtained by classifying D-permutations on
/// `[2n-2]`: the `j`-th entries count members with exactly `j` cycles that
/// are not even fixed points (resp. not fixed points).
#[derive(Debug, Clone)]
pub struct PowerOfTwoDecomposition {
    /// `j -> count`; `sum_j count * 2^(j+1)` reproduces the Dumont
    /// derangement total on `[2n+2]`.
    pub h_terms: BTreeMap<usize, u64>,
    /// `j -> count`; `sum_j count * 2^j` reproduces the Dumont permutation
    /// total on `[2n]`.
    pub g_terms: BTreeMap<usize, u64>,
    pub h_value: u64,
    pub g_value: u64,
}

pub fn power_of_two_decompositions(n: usize) -> Result<PowerOfTwoDecomposition> {
    assert!(n >= 2);
    if n > 6 {
        return Err(Error::SizeLimit { what: "power-of-two decomposition", cap: 6, got: n });
    }
    let ground: Vec<u32> = (1..=2 * (n as u32 - 1)).collect();
    let mut h_terms: BTreeMap<usize, u64> = BTreeMap::new();
    let mut g_terms: BTreeMap<usize, u64> = BTreeMap::new();
    for_each_in_class(&ground, DClass::DPerm, &mut |image| {
        let cycles = cycle_count_of_image(&ground, image);
        let not_even_fp = cycles - even_fixed_points(&ground, image);
        let not_fp = cycles - fixed_points(&ground, image);
        *h_terms.entry(not_even_fp).or_insert(0) += 1;
        *g_terms.entry(not_fp).or_insert(0) += 1;
    })?;
    let h_value = h_terms.iter().map(|(&j, &c)| c * (1u64 << (j + 1))).sum();
    let g_value = g_terms.iter().map(|(&j, &c)| c * (1u64 << j)).sum();
    Ok(PowerOfTwoDecomposition { h_terms, g_terms, h_value, g_value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(m: u32) -> Vec<u32> {
        (1..=m).collect()
    }

    #[test]
    fn the_eight_d_permutations_on_four() {
        let perms = enumerate(&ground(4), DClass::DPerm).unwrap();
        let mut names: Vec<String> = perms.iter().map(|p| p.to_string()).collect();
        names.sort();
        let mut expected: Vec<String> = [
            "(1)(2)(3)(4)",
            "(1,2)(3)(4)",
            "(1,4)(2)(3)",
            "(1)(2)(3,4)",
            "(1,4,2)(3)",
            "(1,3,4)(2)",
            "(1,2)(3,4)",
            "(1,3,4,2)",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        expected.sort();
        assert_eq!(names, expected);
    }

    #[test]
    fn the_three_d_cycles_on_six() {
        let perms = enumerate(&ground(6), DClass::DCycle).unwrap();
        let mut names: Vec<String> = perms.iter().map(|p| p.to_string()).collect();
        names.sort();
        assert_eq!(names, vec!["(1,3,5,6,4,2)", "(1,4,3,5,6,2)", "(1,5,6,3,4,2)"]);
    }

    #[test]
    fn the_eight_dumont_derangements_on_six() {
        let perms = enumerate(&ground(6), DClass::DumontDerangement).unwrap();
        assert_eq!(perms.len(), 8);
        let mut names: Vec<String> = perms.iter().map(|p| p.to_string()).collect();
        names.sort();
        let mut expected: Vec<String> = [
            "(1,3,5,6,4,2)",
            "(1,3,4,2)(5,6)",
            "(1,2)(3,4)(5,6)",
            "(1,2)(3,5,6,4)",
            "(1,4,3,5,6,2)",
            "(1,5,6,3,4,2)",
            "(1,5,6,2)(3,4)",
            "(1,4,2)(3,5,6)",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        expected.sort();
        assert_eq!(names, expected);
    }

    #[test]
    fn dumont_permutations_on_four() {
        let perms = enumerate(&ground(4), DClass::Dumont).unwrap();
        let mut names: Vec<String> = perms.iter().map(|p| p.to_string()).collect();
        names.sort();
        assert_eq!(names, vec!["(1,2)(3,4)", "(1,3,4,2)", "(1,4,2)(3)"]);
    }

    #[test]
    fn containment_chain_holds_on_six() {
        use crate::perm::for_each_arrangement;
        let g = ground(6);
        for_each_arrangement(&g, &mut |image| {
            let p = Permutation::new(g.clone(), image.to_vec()).unwrap();
            if is_d_cycle(&p) && p.size() > 1 && !p.fixed_points().is_empty() {
                // non-singleton D-cycles are derangements
                panic!("D-cycle with a fixed point: {p}");
            }
            if is_d_cycle(&p) {
                assert!(is_dumont_derangement(&p), "{p}");
            }
            if is_dumont_derangement(&p) {
                assert!(is_dumont(&p), "{p}");
            }
            if is_dumont(&p) {
                assert!(is_d_perm(&p), "{p}");
            }
        });
    }

    #[test]
    fn signed_cycle_table_for_small_n() {
        let t1 = s_d_table(1).unwrap();
        assert_eq!(t1, BTreeMap::from([(1, -1), (2, 1)]));
        let t2 = s_d_table(2).unwrap();
        assert_eq!(t2, BTreeMap::from([(1, -1), (2, 3), (3, -3), (4, 1)]));
    }

    #[test]
    fn char_poly_from_counts_matches_frozen_table() {
        assert_eq!(char_poly_from_counts(1).unwrap(), Poly::from_int_coeffs(&[-1, 1]));
        assert_eq!(
            char_poly_from_counts(2).unwrap(),
            Poly::from_int_coeffs(&[-1, 3, -3, 1])
        );
        assert_eq!(
            char_poly_from_counts(4).unwrap(),
            Poly::from_int_coeffs(&[-17, 81, -162, 177, -115, 45, -10, 1])
        );
    }

    #[test]
    fn even_fixed_point_formula_matches_table() {
        assert_eq!(char_poly_even_fp(1).unwrap(), Poly::from_int_coeffs(&[-1, 1]));
        assert_eq!(char_poly_even_fp(2).unwrap(), Poly::from_int_coeffs(&[-1, 3, -3, 1]));
        assert_eq!(
            char_poly_even_fp(3).unwrap(),
            Poly::from_int_coeffs(&[-3, 12, -19, 15, -6, 1])
        );
    }

    #[test]
    fn reduced_formula_matches_table() {
        assert_eq!(char_poly_reduced_form(2).unwrap(), Poly::t_plus(-1).pow(3));
        assert_eq!(
            char_poly_reduced_form(3).unwrap(),
            Poly::from_int_coeffs(&[-3, 12, -19, 15, -6, 1])
        );
        let n4 = char_poly_reduced_form(4).unwrap();
        assert_eq!(n4.eval_int(0), crate::poly::rat(-17));
        assert_eq!(n4, Poly::from_int_coeffs(&[-17, 81, -162, 177, -115, 45, -10, 1]));
    }

    #[test]
    fn class_sizes_match_genocchi_tables() {
        // |D_{2n}| = 2, 8, 56, 608 and |DC_{2n}| = 1, 1, 3, 17
        let h = [2u64, 8, 56, 608];
        let g = [1u64, 1, 3, 17];
        for n in 1..=4usize {
            let gr = ground(2 * n as u32);
            assert_eq!(count(&gr, DClass::DPerm).unwrap(), h[n - 1]);
            assert_eq!(count(&gr, DClass::DCycle).unwrap(), g[n - 1]);
        }
    }

    #[test]
    fn decompositions_at_n2() {
        let d = power_of_two_decompositions(2).unwrap();
        assert_eq!(d.h_terms, BTreeMap::from([(1, 2)]));
        assert_eq!(d.h_value, 8);
        assert_eq!(d.g_terms, BTreeMap::from([(0, 1), (1, 1)]));
        assert_eq!(d.g_value, 3);
    }

    #[test]
    fn decompositions_at_n4() {
        let d = power_of_two_decompositions(4).unwrap();
        assert_eq!(d.h_value, 608);
        assert_eq!(d.g_value, 155);
    }

    #[test]
    fn d_cycles_on_arbitrary_ground_sets() {
        // {1,2}: only (1,2)
        assert_eq!(count(&[1, 2], DClass::DCycle).unwrap(), 1);
        // singleton: the fixed point counts as a 1-cycle
        assert_eq!(count(&[3], DClass::DCycle).unwrap(), 1);
        assert_eq!(count(&[2], DClass::DCycle).unwrap(), 1);
    }

    #[test]
    fn enumeration_cap() {
        let big: Vec<u32> = (1..=16).collect();
        assert!(matches!(
            count(&big, DClass::DPerm),
            Err(Error::SizeLimit { .. })
        ));
    }
}
