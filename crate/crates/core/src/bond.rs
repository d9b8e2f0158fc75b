//! The bond lattice of a Ferrers graph as an explicit poset: partitions
//! whose nonsingleton blocks induce connected subgraphs (equivalently, have
//! an odd minimum and an even maximum), ordered by refinement.  Includes
//! the reduced semilattice obtained by separating the extreme vertices.

use std::cell::RefCell;
use std::collections::HashMap;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ferrers::FerrersGraph;
use crate::poly::{Int, Poly, Rat};
use crate::setpart::{enumerate_partitions, SetPartition};

const LATTICE_CAP: usize = 10;

fn admissible_block(b: &[u32]) -> bool {
    b.len() == 1 || (b[0] % 2 == 1 && b.last().unwrap() % 2 == 0)
}

fn admissible_prefix(b: &[u32]) -> bool {
    b.len() == 1 || b[0] % 2 == 1
}

/// Partitions of `block` all of whose blocks are admissible.
fn refinements_of_block(block: &[u32]) -> Vec<SetPartition> {
    enumerate_partitions(block, &admissible_prefix, &admissible_block)
}

/// Connectivity test for a block within the Ferrers graph; used as a
/// cross-check of the min/max membership criterion.
pub fn block_induces_connected(b: &[u32]) -> bool {
    if b.len() == 1 {
        return true;
    }
    let mut reached = vec![false; b.len()];
    reached[0] = true;
    let mut frontier = vec![b[0]];
    while let Some(u) = frontier.pop() {
        for (i, &v) in b.iter().enumerate() {
            if reached[i] {
                continue;
            }
            let (lo, hi) = (u.min(v), u.max(v));
            if lo % 2 == 1 && hi % 2 == 0 {
                reached[i] = true;
                frontier.push(v);
            }
        }
    }
    reached.iter().all(|&r| r)
}

/// Fully materialized bond lattice of the Ferrers graph on a vertex set.
pub struct BondLattice {
    vertices: Vec<u32>,
    elements: Vec<SetPartition>,
    length: usize,
    mobius_cache: RefCell<HashMap<SetPartition, Int>>,
}

impl BondLattice {
    pub fn build(vertices: &[u32]) -> Result<Self> {
        if vertices.len() > LATTICE_CAP {
            return Err(Error::SizeLimit {
                what: "bond lattice materialization",
                cap: LATTICE_CAP,
                got: vertices.len(),
            });
        }
        let elements = enumerate_partitions(vertices, &admissible_prefix, &admissible_block);
        debug_assert!(elements
            .iter()
            .all(|p| p.blocks().iter().all(|b| block_induces_connected(b))));
        let length = elements.iter().map(SetPartition::rank).max().unwrap_or(0);
        Ok(BondLattice {
            vertices: vertices.to_vec(),
            elements,
            length,
            mobius_cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn on_2n(n: usize) -> Result<Self> {
        let v: Vec<u32> = (1..=2 * n as u32).collect();
        BondLattice::build(&v)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn elements(&self) -> &[SetPartition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Length of the poset (rank of a maximal element).
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn contains(&self, pi: &SetPartition) -> bool {
        self.elements.binary_search(pi).is_ok()
    }

    pub fn bottom(&self) -> SetPartition {
        SetPartition::discrete(self.vertices.clone())
    }

    /// All lattice elements below `pi`, via per-block refinement (the lower
    /// interval of a partition is the product of its blocks' bond lattices).
    pub fn lower_interval(&self, pi: &SetPartition) -> Vec<SetPartition> {
        let per_block: Vec<Vec<SetPartition>> =
            pi.blocks().iter().map(|b| refinements_of_block(b)).collect();
        let mut combos: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
        for options in &per_block {
            let mut next = Vec::with_capacity(combos.len() * options.len());
            for c in &combos {
                for opt in options {
                    let mut c = c.clone();
                    c.extend(opt.blocks().iter().cloned());
                    next.push(c);
                }
            }
            combos = next;
        }
        combos
            .into_iter()
            .map(|blocks| {
                SetPartition::new(pi.ground().to_vec(), blocks)
                    .expect("block refinements partition the ground set")
            })
            .collect()
    }

    /// Möbius value `mu(bottom, pi)` by the recursive defining sum,
    /// memoized: `mu(0,0) = 1` and the sum of `mu` over each lower interval
    /// vanishes.
    pub fn mobius(&self, pi: &SetPartition) -> Result<Int> {
        if !self.contains(pi) {
            return Err(Error::ElementNotInLattice(pi.to_string()));
        }
        Ok(self.mobius_unchecked(pi))
    }

    fn mobius_unchecked(&self, pi: &SetPartition) -> Int {
        if let Some(v) = self.mobius_cache.borrow().get(pi) {
            return v.clone();
        }
        let value = if pi.rank() == 0 {
            Int::one()
        } else {
            let mut acc = Int::zero();
            for rho in self.lower_interval(pi) {
                if &rho != pi {
                    acc += self.mobius_unchecked(&rho);
                }
            }
            -acc
        };
        self.mobius_cache.borrow_mut().insert(pi.clone(), value.clone());
        value
    }

    /// Characteristic polynomial: `sum over elements of mu(0,pi) t^(length - rank(pi))`.
    pub fn characteristic_polynomial(&self) -> Poly {
        let mut acc = Poly::zero();
        for pi in &self.elements {
            let mu = self.mobius_unchecked(pi);
            let k = self.length - pi.rank();
            acc = &acc + &Poly::monomial(Rat::from_integer(mu), k);
        }
        acc
    }

    /// Signed Möbius sum over the elements of rank `k` (times `(-1)^k`),
    /// which counts the ID forests with `|V| - k` trees.
    pub fn signed_rank_sum(&self, k: usize) -> Int {
        let sign = if k % 2 == 0 { Int::one() } else { -Int::one() };
        let mut acc = Int::zero();
        for pi in self.elements.iter().filter(|p| p.rank() == k) {
            acc += self.mobius_unchecked(pi);
        }
        acc * sign
    }

    /// Number of connected components of the Ferrers graph on the vertex
    /// set (blocks of the maximal element).
    pub fn component_count(&self) -> usize {
        self.vertices.len() - self.length
    }

    /// Element/Möbius dump for machine consumption.
    pub fn dump(&self) -> Vec<(SetPartition, Int)> {
        self.elements
            .iter()
            .map(|pi| (pi.clone(), self.mobius_unchecked(pi)))
            .collect()
    }
}

/// Checks that the lattice element set equals the connectivity-defined
/// bond lattice of the Ferrers graph (both membership criteria).
pub fn membership_criteria_agree(vertices: &[u32]) -> Result<bool> {
    let by_minmax = enumerate_partitions(vertices, &admissible_prefix, &admissible_block);
    let all = crate::setpart::all_partitions(vertices);
    let by_connectivity: Vec<SetPartition> = all
        .into_iter()
        .filter(|p| p.blocks().iter().all(|b| block_induces_connected(b)))
        .collect();
    let _ = FerrersGraph::new(vertices.to_vec())?;
    Ok(by_minmax == by_connectivity)
}

/// The semilattice obtained from the bond lattice on `[2n] \ {2, 2n-1}` by
/// keeping only partitions separating 1 from 2n.
pub struct ReducedSemilattice {
    n: usize,
    elements: Vec<SetPartition>,
    length: usize,
    mobius_cache: RefCell<HashMap<SetPartition, Int>>,
}

impl ReducedSemilattice {
    pub fn build(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid("reduced semilattice needs n >= 2".into()));
        }
        if 2 * n > LATTICE_CAP + 2 {
            return Err(Error::SizeLimit {
                what: "reduced semilattice materialization",
                cap: (LATTICE_CAP + 2) / 2,
                got: n,
            });
        }
        let two_n = 2 * n as u32;
        let vertices: Vec<u32> = (1..=two_n).filter(|&v| v != 2 && v != two_n - 1).collect();
        let elements: Vec<SetPartition> =
            enumerate_partitions(&vertices, &admissible_prefix, &admissible_block)
                .into_iter()
                .filter(|p| !p.same_block(1, two_n))
                .collect();
        let length = elements.iter().map(SetPartition::rank).max().unwrap_or(0);
        Ok(ReducedSemilattice {
            n,
            elements,
            length,
            mobius_cache: RefCell::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[SetPartition] {
        &self.elements
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn contains(&self, pi: &SetPartition) -> bool {
        self.elements.binary_search(pi).is_ok()
    }

    fn mobius_unchecked(&self, pi: &SetPartition) -> Int {
        if let Some(v) = self.mobius_cache.borrow().get(pi) {
            return v.clone();
        }
        let value = if pi.rank() == 0 {
            Int::one()
        } else {
            // lower intervals of the semilattice agree with those of the
            // ambient bond lattice: anything below a separating partition
            // separates
            let per_block: Vec<Vec<SetPartition>> =
                pi.blocks().iter().map(|b| refinements_of_block(b)).collect();
            let mut acc = Int::zero();
            let mut combos: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
            for options in &per_block {
                let mut next = Vec::new();
                for c in &combos {
                    for opt in options {
                        let mut c = c.clone();
                        c.extend(opt.blocks().iter().cloned());
                        next.push(c);
                    }
                }
                combos = next;
            }
            for blocks in combos {
                let rho = SetPartition::new(pi.ground().to_vec(), blocks).unwrap();
                if &rho != pi {
                    acc += self.mobius_unchecked(&rho);
                }
            }
            -acc
        };
        self.mobius_cache.borrow_mut().insert(pi.clone(), value.clone());
        value
    }

    pub fn mobius(&self, pi: &SetPartition) -> Result<Int> {
        if !self.contains(pi) {
            return Err(Error::ElementNotInLattice(pi.to_string()));
        }
        Ok(self.mobius_unchecked(pi))
    }

    pub fn characteristic_polynomial(&self) -> Poly {
        let mut acc = Poly::zero();
        for pi in &self.elements {
            let mu = self.mobius_unchecked(pi);
            let k = self.length - pi.rank();
            acc = &acc + &Poly::monomial(Rat::from_integer(mu), k);
        }
        acc
    }
}

/// Builds the reduced semilattice and its characteristic polynomial,
/// verifying the division identity
/// `chi_reduced * (t-1)^3 = chi of the full lattice on [2n]` exactly.
pub fn build_reduced(n: usize) -> Result<(ReducedSemilattice, Poly)> {
    let semi = ReducedSemilattice::build(n)?;
    let chi = semi.characteristic_polynomial();
    if 2 * n <= LATTICE_CAP {
        let full = BondLattice::on_2n(n)?.characteristic_polynomial();
        let product = &chi * &Poly::t_plus(-1).pow(3);
        if product != full {
            return Err(Error::Invalid(format!(
                "reduced characteristic polynomial {chi} fails the (t-1)^3 division identity"
            )));
        }
    }
    Ok((semi, chi))
}

/// Region count `(-1)^length * chi(-1)` of a real arrangement with the
/// given characteristic polynomial.
pub fn zaslavsky_regions(chi: &Poly, length: usize) -> Result<Int> {
    let v = chi.eval_int(-1);
    let signed = if length % 2 == 0 { v.clone() } else { -v.clone() };
    if !signed.is_integer() {
        return Err(Error::IntegralityFailure(format!("chi(-1) = {v}")));
    }
    if signed.is_negative() {
        return Err(Error::NegativeResult(format!(
            "region count {signed} from chi(-1) = {v}"
        )));
    }
    Ok(signed.to_integer())
}

/// Bounded-region count `|chi(1)|` of an affine arrangement.
pub fn zaslavsky_bounded(chi: &Poly) -> Int {
    let v = chi.eval_int(1).abs();
    debug_assert!(v.is_integer(), "chi(1) = {v}");
    v.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    #[test]
    fn lattice_on_two_has_two_elements() {
        let l = BondLattice::on_2n(1).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.characteristic_polynomial(), Poly::from_int_coeffs(&[-1, 1]));
    }

    #[test]
    fn lattice_on_four_has_the_expected_rank_sizes() {
        let l = BondLattice::on_2n(2).unwrap();
        let sizes: Vec<usize> = (0..=3)
            .map(|r| l.elements().iter().filter(|p| p.rank() == r).count())
            .collect();
        assert_eq!(sizes, vec![1, 3, 3, 1]);
        assert_eq!(
            l.characteristic_polynomial(),
            Poly::from_int_coeffs(&[-1, 3, -3, 1])
        );
    }

    #[test]
    fn lattice_on_six_matches_the_frozen_polynomial() {
        let l = BondLattice::on_2n(3).unwrap();
        let chi = l.characteristic_polynomial();
        assert_eq!(chi.degree(), Some(5));
        assert_eq!(chi, Poly::from_int_coeffs(&[-3, 12, -19, 15, -6, 1]));
    }

    #[test]
    fn lattice_on_eight_matches_the_frozen_polynomial() {
        let l = BondLattice::on_2n(4).unwrap();
        assert_eq!(
            l.characteristic_polynomial(),
            Poly::from_int_coeffs(&[-17, 81, -162, 177, -115, 45, -10, 1])
        );
    }

    #[test]
    fn mobius_at_bottom_and_top() {
        let l = BondLattice::on_2n(2).unwrap();
        assert_eq!(l.mobius(&l.bottom()).unwrap(), int(1));
        let top = SetPartition::full(vec![1, 2, 3, 4]);
        assert_eq!(l.mobius(&top).unwrap(), int(-1));
        let l6 = BondLattice::on_2n(3).unwrap();
        let top6 = SetPartition::full((1..=6).collect());
        assert_eq!(l6.mobius(&top6).unwrap(), int(-3));
    }

    #[test]
    fn mobius_sums_vanish_over_lower_intervals() {
        let l = BondLattice::on_2n(3).unwrap();
        for pi in l.elements().iter().filter(|p| p.rank() > 0) {
            let total: Int = l.lower_interval(pi).iter().map(|rho| l.mobius(rho).unwrap()).sum();
            assert!(total.is_zero(), "sum over [0,{pi}] = {total}");
        }
    }

    #[test]
    fn rejects_partitions_outside_the_lattice() {
        let l = BondLattice::on_2n(2).unwrap();
        let bad = SetPartition::new(vec![1, 2, 3, 4], vec![vec![2, 3], vec![1], vec![4]]).unwrap();
        assert!(matches!(l.mobius(&bad), Err(Error::ElementNotInLattice(_))));
    }

    #[test]
    fn membership_criteria_coincide_up_to_eight() {
        for verts in [
            vec![1, 2],
            vec![1, 2, 3, 4],
            vec![2, 3, 4, 5],
            vec![1, 2, 3, 4, 5, 6],
            vec![1, 3, 4, 6],
        ] {
            assert!(membership_criteria_agree(&verts).unwrap(), "{verts:?}");
        }
    }

    #[test]
    fn reduced_semilattice_for_n3() {
        let (semi, chi) = build_reduced(3).unwrap();
        assert_eq!(semi.elements().len(), 7);
        assert_eq!(chi, Poly::from_int_coeffs(&[3, -3, 1]));
        assert_eq!(chi.eval_int(0), rat(3)); // Genocchi value
        assert_eq!(chi.eval_int(1), rat(1)); // median Genocchi value
    }

    #[test]
    fn reduced_semilattice_for_n2_is_trivial() {
        let (semi, chi) = build_reduced(2).unwrap();
        assert_eq!(semi.elements().len(), 1);
        assert_eq!(chi, Poly::one());
    }

    #[test]
    fn zaslavsky_counts_from_the_frozen_table() {
        assert_eq!(zaslavsky_regions(&Poly::from_int_coeffs(&[-1, 1]), 1).unwrap(), int(2));
        assert_eq!(
            zaslavsky_regions(&Poly::from_int_coeffs(&[-1, 3, -3, 1]), 3).unwrap(),
            int(8)
        );
        assert_eq!(
            zaslavsky_regions(
                &Poly::from_int_coeffs(&[-17, 81, -162, 177, -115, 45, -10, 1]),
                7
            )
            .unwrap(),
            int(608)
        );
        assert_eq!(zaslavsky_bounded(&Poly::from_int_coeffs(&[3, -3, 1])), int(1));
    }

    #[test]
    fn signed_rank_sums_count_id_forests() {
        let l = BondLattice::on_2n(2).unwrap();
        // rank k elements carry (-1)^k mu sums equal to forest counts with
        // 4-k trees: 1, 3, 3, 1
        let sums: Vec<Int> = (0..=3).map(|k| l.signed_rank_sum(k)).collect();
        assert_eq!(sums, vec![int(1), int(3), int(3), int(1)]);
    }

    #[test]
    fn size_cap_is_enforced() {
        let v: Vec<u32> = (1..=12).collect();
        assert!(matches!(BondLattice::build(&v), Err(Error::SizeLimit { .. })));
    }
}
