//! Drop-statistic permutation models: the count table of permutations by
//! non-even-odd drops, the parity poset whose incomparability graph is the
//! Ferrers graph, the incomparability-expansion of the characteristic
//! polynomial, and machine verification of the two open cycle-count
//! conjectures (falsification is a first-class outcome, not an error).

use std::collections::BTreeMap;

use serde::Serialize;

use num::Zero;

use crate::bond::BondLattice;
use crate::dperm::{self, DClass};
use crate::error::{Error, Result};
use crate::ferrers::{chromatic_of_edges, FerrersGraph};
use crate::genfun;
use crate::perm::for_each_arrangement;
use crate::poly::{binomial_poly, factorial, falling_factorial, int, rising_factorial, Int, Poly, Rat};
use crate::setpart::SetPartition;

/// Explicit finite poset on integer labels.
#[derive(Clone)]
pub struct FinitePoset {
    elems: Vec<u32>,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    pub fn new(elems: Vec<u32>, leq_fn: &dyn Fn(u32, u32) -> bool) -> Result<Self> {
        let n = elems.len();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                leq[i][j] = leq_fn(elems[i], elems[j]);
            }
        }
        let poset = FinitePoset { elems, leq };
        poset.check_axioms()?;
        Ok(poset)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.elems.len();
        for i in 0..n {
            if !self.leq[i][i] {
                return Err(Error::Invalid("relation is not reflexive".into()));
            }
            for j in 0..n {
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    return Err(Error::Invalid("relation is not antisymmetric".into()));
                }
                for k in 0..n {
                    if self.leq[i][j] && self.leq[j][k] && !self.leq[i][k] {
                        return Err(Error::Invalid("relation is not transitive".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn lt(&self, x: u32, y: u32) -> bool {
        let i = self.elems.iter().position(|&e| e == x).unwrap();
        let j = self.elems.iter().position(|&e| e == y).unwrap();
        i != j && self.leq[i][j]
    }

    /// Edges between incomparable pairs.
    pub fn incomparability_edges(&self) -> Vec<(u32, u32)> {
        let n = self.elems.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.leq[i][j] && !self.leq[j][i] {
                    out.push((self.elems[i], self.elems[j]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Counts of permutations of the elements by number of poset drops
    /// (positions moved strictly down in the order).
    pub fn drop_table(&self) -> Result<Vec<u64>> {
        if self.elems.len() > 8 {
            return Err(Error::SizeLimit {
                what: "poset drop table sweep",
                cap: 8,
                got: self.elems.len(),
            });
        }
        let n = self.elems.len();
        let mut table = vec![0u64; n.max(1)];
        let idx: BTreeMap<u32, usize> =
            self.elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        for_each_arrangement(&self.elems.clone(), &mut |image| {
            let drops = self
                .elems
                .iter()
                .zip(image)
                .filter(|&(&x, &y)| {
                    let (i, j) = (idx[&x], idx[&y]);
                    i != j && self.leq[j][i]
                })
                .count();
            table[drops] += 1;
        });
        Ok(table)
    }

    /// Chromatic polynomial of the incomparability graph.
    pub fn incomparability_chromatic(&self) -> Poly {
        let idx: BTreeMap<u32, usize> =
            self.elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let edges: Vec<(usize, usize)> = self
            .incomparability_edges()
            .into_iter()
            .map(|(u, v)| (idx[&u], idx[&v]))
            .collect();
        chromatic_of_edges(self.elems.len(), &edges)
    }
}

/// The poset on `[2n]` with `x <= y` when they share parity and `x <= y`,
/// or `x` is even, `y` odd, and `x < y`.
pub fn parity_poset(two_n: u32) -> Result<FinitePoset> {
    FinitePoset::new((1..=two_n).collect(), &|x, y| {
        (x % 2 == y % 2 && x <= y) || (x % 2 == 0 && y % 2 == 1 && x < y)
    })
}

const SWEEP_CAP: usize = 10;
const SWEEP_CAP_OPT_IN: usize = 12;

/// `d(m, k)`: permutations of `[m]` with exactly `k` drops that are not
/// even-odd.  The full `m!` sweep is capped at 10 by default; 12 behind the
/// opt-in flag.
pub fn d_table(m: usize, allow_large: bool) -> Result<Vec<u64>> {
    let cap = if allow_large { SWEEP_CAP_OPT_IN } else { SWEEP_CAP };
    if m > cap {
        return Err(Error::SizeLimit { what: "drop table sweep", cap, got: m });
    }
    let items: Vec<u32> = (1..=m as u32).collect();
    let mut table = vec![0u64; m.max(1)];
    for_each_arrangement(&items, &mut |image| {
        let bad_drops = items
            .iter()
            .zip(image)
            .filter(|&(&i, &v)| i > v && !(i % 2 == 0 && v % 2 == 1))
            .count();
        table[bad_drops] += 1;
    });
    Ok(table)
}

/// Characteristic polynomial from the drop table:
/// `(1/(2n)!) sum_k d(2n,k) (t+1)^(k) (t-1)_(2n-1-k)` with rising and
/// falling factorials; the division must be exact.
pub fn drop_expansion_char_poly(n: usize, allow_large: bool) -> Result<Poly> {
    let m = 2 * n;
    let d = d_table(m, allow_large)?;
    let t_plus_1 = Poly::t_plus(1);
    let t_minus_1 = Poly::t_plus(-1);
    let mut acc = Poly::zero();
    for (k, &count) in d.iter().enumerate().take(m) {
        if count == 0 {
            continue;
        }
        let term = &rising_factorial(&t_plus_1, k) * &falling_factorial(&t_minus_1, m - 1 - k);
        acc = &acc + &term.scale(&Rat::from_integer(int(count as i64)));
    }
    let result = acc.scale(&Rat::new(int(1), factorial(m)));
    if !result.is_integral() {
        return Err(Error::IntegralityFailure(format!(
            "drop expansion left non-integer coefficients: {result}"
        )));
    }
    Ok(result)
}

/// Alternating drop-table formula for the Genocchi number:
/// `(1/(2n)!) sum_k (-1)^k d(2n,k) k! (2n-1-k)!`.
pub fn genocchi_from_drop_table(n: usize) -> Result<Int> {
    let m = 2 * n;
    let d = d_table(m, false)?;
    let mut acc = Rat::zero();
    for (k, &count) in d.iter().enumerate().take(m) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        acc += Rat::from_integer(
            int(sign) * int(count as i64) * factorial(k) * factorial(m - 1 - k),
        );
    }
    let val = acc / Rat::from_integer(factorial(m));
    if !val.is_integer() {
        return Err(Error::IntegralityFailure(format!("Genocchi drop formula gave {val}")));
    }
    Ok(val.to_integer())
}

/// Verifies the incomparability-graph expansion
/// `ch_inc(P)(t) = sum_k d(P,k) C(t+k, |P|)` exactly for one poset.
pub fn chung_graham_check(poset: &FinitePoset) -> Result<std::result::Result<Poly, (Poly, Poly)>> {
    let lhs = poset.incomparability_chromatic();
    let d = poset.drop_table()?;
    let m = poset.elems().len();
    let mut rhs = Poly::zero();
    for (k, &count) in d.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let binom = binomial_poly(&Poly::t_plus(k as i64), m);
        rhs = &rhs + &binom.scale(&Rat::from_integer(int(count as i64)));
    }
    Ok(if lhs == rhs { Ok(lhs) } else { Err((lhs, rhs)) })
}

fn eo_pair_ok(i: u32, v: u32) -> bool {
    v >= i || (i % 2 == 0 && v % 2 == 1)
}

/// Visit every permutation of `ground` all of whose drops are even-odd.
pub fn for_each_eo_drop_perm(ground: &[u32], visit: &mut dyn FnMut(&[u32])) -> Result<()> {
    if ground.len() > SWEEP_CAP_OPT_IN {
        return Err(Error::SizeLimit {
            what: "even-odd-drop enumeration",
            cap: SWEEP_CAP_OPT_IN,
            got: ground.len(),
        });
    }
    let n = ground.len();
    let mut image = vec![0u32; n];
    let mut used = vec![false; n];
    fn rec(
        ground: &[u32],
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
            if used[vi] || !eo_pair_ok(i, v) {
                continue;
            }
            used[vi] = true;
            image[pos] = v;
            rec(ground, pos + 1, image, used, visit);
            used[vi] = false;
        }
    }
    rec(ground, 0, &mut image, &mut used, visit);
    Ok(())
}

/// Count of permutations (or single cycles) of `ground` with only even-odd
/// drops, via pruned backtracking.
pub fn eo_drop_count(ground: &[u32], cycles_only: bool) -> Result<u64> {
    if cycles_only {
        return eo_drop_cycle_count(ground);
    }
    let mut count = 0;
    for_each_eo_drop_perm(ground, &mut |_| count += 1)?;
    Ok(count)
}

fn eo_drop_cycle_count(ground: &[u32]) -> Result<u64> {
    if ground.len() > SWEEP_CAP_OPT_IN {
        return Err(Error::SizeLimit {
            what: "even-odd-drop cycle enumeration",
            cap: SWEEP_CAP_OPT_IN,
            got: ground.len(),
        });
    }
    let n = ground.len();
    if n == 0 {
        return Ok(0);
    }
    if n == 1 {
        return Ok(1); // a fixed point is a 1-cycle
    }
    let mut used = vec![false; n];
    used[0] = true;
    fn rec(ground: &[u32], last: u32, depth: usize, used: &mut Vec<bool>) -> u64 {
        if depth == ground.len() {
            return u64::from(eo_pair_ok(last, ground[0]));
        }
        let mut total = 0;
        for (vi, &v) in ground.iter().enumerate() {
            if used[vi] || !eo_pair_ok(last, v) {
                continue;
            }
            used[vi] = true;
            total += rec(ground, v, depth + 1, used);
            used[vi] = false;
        }
        total
    }
    Ok(rec(ground, ground[0], 1, &mut used))
}

/// Counts by cycle count of the only-even-odd-drop permutations.
pub fn eo_drop_count_by_cycles(ground: &[u32]) -> Result<BTreeMap<usize, u64>> {
    let mut map = BTreeMap::new();
    for_each_eo_drop_perm(ground, &mut |image| {
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
        *map.entry(cycles).or_insert(0) += 1;
    })?;
    Ok(map)
}

/// Permutations of `[m]` all of whose descents step from an even letter to
/// a smaller odd letter (the descent form of the drop statistic).
pub fn eo_descent_count(m: usize) -> Result<u64> {
    if m > SWEEP_CAP {
        return Err(Error::SizeLimit { what: "even-odd-descent sweep", cap: SWEEP_CAP, got: m });
    }
    let items: Vec<u32> = (1..=m as u32).collect();
    let mut count = 0;
    for_each_arrangement(&items, &mut |word| {
        let ok = word.windows(2).all(|w| {
            w[0] <= w[1] || (w[0] % 2 == 0 && w[1] % 2 == 1)
        });
        if ok {
            count += 1;
        }
    });
    Ok(count)
}

/// One verdict line of a conjecture check.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureInstance {
    pub id: String,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
    pub verdict: &'static str,
}

impl ConjectureInstance {
    fn compare<T: PartialEq + Serialize>(id: String, lhs: T, rhs: T) -> Self {
        let verdict = if lhs == rhs { "verified" } else { "FALSIFIED" };
        ConjectureInstance {
            id,
            lhs: serde_json::to_value(&lhs).unwrap(),
            rhs: serde_json::to_value(&rhs).unwrap(),
            verdict,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == "verified"
    }
}

/// Machine verification of the two cycle-count conjectures.  Every
/// instance carries exact counts; a falsification would be reported with
/// its witness values, not raised as an error.
///
/// A 1-element ground set counts as one cycle on both sides.
pub fn conjecture_checks(max_n: usize, cycles: bool, full: bool) -> Result<Vec<ConjectureInstance>> {
    if max_n > 6 {
        return Err(Error::SizeLimit { what: "conjecture checks", cap: 6, got: max_n });
    }
    let mut out = Vec::new();
    if cycles {
        // cycles on [2n] with only even-odd drops against the Genocchi value
        for n in 1..=max_n {
            let ground: Vec<u32> = (1..=2 * n as u32).collect();
            let lhs = eo_drop_count(&ground, true)?;
            let rhs: u64 = genfun::genocchi_g(n)?.try_into().unwrap();
            out.push(ConjectureInstance::compare(
                format!("eo-cycles[{}]-vs-genocchi", 2 * n),
                lhs,
                rhs,
            ));
        }
        // arbitrary ground sets: eo-drop cycles against D-cycles
        for mask in 1u32..(1 << 8) {
            let ground: Vec<u32> = (1..=8).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
            let lhs = eo_drop_count(&ground, true)?;
            let rhs = dperm::count(&ground, DClass::DCycle)?;
            out.push(ConjectureInstance::compare(
                format!("eo-cycles-vs-d-cycles{ground:?}"),
                lhs,
                rhs,
            ));
        }
    }
    if full {
        // joint cycle-count distributions on [2n]
        for n in 1..=max_n.min(5) {
            let ground: Vec<u32> = (1..=2 * n as u32).collect();
            let lhs = eo_drop_count_by_cycles(&ground)?;
            let rhs = dperm::count_by_cycles(&ground, DClass::DPerm)?;
            out.push(ConjectureInstance::compare(
                format!("eo-perm-cycle-distribution[{}]", 2 * n),
                lhs.into_iter().collect::<Vec<_>>(),
                rhs.into_iter().collect::<Vec<_>>(),
            ));
        }
        // Möbius refinement: |mu(0,pi)| counts eo-drop permutations with
        // cycle support pi
        for n in 1..=max_n.min(3) {
            let ground: Vec<u32> = (1..=2 * n as u32).collect();
            let lattice = BondLattice::on_2n(n)?;
            let mut by_support: BTreeMap<SetPartition, u64> = BTreeMap::new();
            for_each_eo_drop_perm(&ground, &mut |image| {
                let p = crate::perm::Permutation::new(ground.clone(), image.to_vec()).unwrap();
                *by_support.entry(p.cycle_support()).or_insert(0) += 1;
            })?;
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for pi in lattice.elements() {
                let mu = lattice.mobius(pi)?;
                let mu_abs: u64 = num::Signed::abs(&mu).try_into().unwrap();
                lhs.push((pi.to_string(), mu_abs));
                rhs.push((pi.to_string(), by_support.get(pi).copied().unwrap_or(0)));
            }
            out.push(ConjectureInstance::compare(
                format!("mobius-vs-eo-support[{}]", 2 * n),
                lhs,
                rhs,
            ));
        }
    }
    Ok(out)
}

/// Incomparability graph of the parity poset is the Ferrers graph,
/// edge for edge.
pub fn incomparability_is_ferrers(n: usize) -> Result<bool> {
    let poset = parity_poset(2 * n as u32)?;
    let graph = FerrersGraph::on_2n(n);
    let mut expected: Vec<(u32, u32)> = graph.edges().to_vec();
    expected.sort_unstable();
    Ok(poset.incomparability_edges() == expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_poset_axioms_and_incomparability() {
        for n in 1..=5usize {
            assert!(incomparability_is_ferrers(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn drop_table_on_three() {
        assert_eq!(d_table(3, false).unwrap(), vec![2, 4, 0]);
    }

    #[test]
    fn drop_table_on_two() {
        assert_eq!(d_table(2, false).unwrap(), vec![2, 0]);
    }

    #[test]
    fn drop_table_row_sum_is_a_factorial() {
        let total: u64 = d_table(8, false).unwrap().iter().sum();
        assert_eq!(total, 40320);
    }

    #[test]
    fn drop_expansion_reproduces_the_frozen_table() {
        assert_eq!(
            drop_expansion_char_poly(1, false).unwrap(),
            Poly::from_int_coeffs(&[-1, 1])
        );
        assert_eq!(
            drop_expansion_char_poly(2, false).unwrap(),
            Poly::from_int_coeffs(&[-1, 3, -3, 1])
        );
        assert_eq!(
            drop_expansion_char_poly(3, false).unwrap(),
            Poly::from_int_coeffs(&[-3, 12, -19, 15, -6, 1])
        );
    }

    #[test]
    fn genocchi_from_drops() {
        assert_eq!(genocchi_from_drop_table(2).unwrap(), int(1));
        assert_eq!(genocchi_from_drop_table(3).unwrap(), int(3));
        assert_eq!(genocchi_from_drop_table(4).unwrap(), int(17));
    }

    #[test]
    fn chung_graham_on_antichain_and_chain() {
        // antichain on two elements: complete incomparability graph
        let antichain = FinitePoset::new(vec![1, 2], &|x, y| x == y).unwrap();
        let res = chung_graham_check(&antichain).unwrap().unwrap();
        assert_eq!(res, Poly::from_int_coeffs(&[0, -1, 1]));
        // chain: edgeless incomparability graph
        let chain = FinitePoset::new(vec![1, 2], &|x, y| x <= y).unwrap();
        let res = chung_graham_check(&chain).unwrap().unwrap();
        assert_eq!(res, Poly::from_int_coeffs(&[0, 0, 1]));
    }

    #[test]
    fn chung_graham_on_the_parity_poset() {
        let poset = parity_poset(4).unwrap();
        let res = chung_graham_check(&poset).unwrap().unwrap();
        // path chromatic polynomial t (t-1)^3
        assert_eq!(res, &Poly::t() * &Poly::t_plus(-1).pow(3));
    }

    #[test]
    fn eo_drop_counts_follow_the_tables() {
        assert_eq!(eo_drop_count(&[1, 2], false).unwrap(), 2);
        assert_eq!(eo_drop_count(&[1, 2, 3, 4], true).unwrap(), 1);
        let ground: Vec<u32> = (1..=8).collect();
        assert_eq!(eo_drop_count(&ground, false).unwrap(), 608);
    }

    #[test]
    fn eo_descents_match_eo_drops() {
        for m in [2usize, 4, 6, 8] {
            let ground: Vec<u32> = (1..=m as u32).collect();
            assert_eq!(
                eo_descent_count(m).unwrap(),
                eo_drop_count(&ground, false).unwrap(),
                "m = {m}"
            );
        }
    }

    #[test]
    fn conjecture_instances_verify_at_small_sizes() {
        let instances = conjecture_checks(3, true, true).unwrap();
        assert!(!instances.is_empty());
        for inst in &instances {
            assert!(inst.holds(), "{inst:?}");
        }
    }

    #[test]
    fn eo_cycle_distribution_matches_d_permutations_on_four() {
        let counts = eo_drop_count_by_cycles(&[1, 2, 3, 4]).unwrap();
        assert_eq!(counts, BTreeMap::from([(1, 1), (2, 3), (3, 3), (4, 1)]));
    }

    #[test]
    fn singleton_ground_set_convention() {
        assert_eq!(eo_drop_count(&[1], true).unwrap(), 1);
        assert_eq!(eo_drop_count(&[2], true).unwrap(), 1);
    }

    #[test]
    fn sweep_caps() {
        assert!(matches!(d_table(11, false), Err(Error::SizeLimit { .. })));
        assert!(matches!(d_table(12, false), Err(Error::SizeLimit { .. })));
        assert!(d_table(10, false).is_ok());
    }
}
