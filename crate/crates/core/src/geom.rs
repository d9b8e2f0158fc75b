//! Exact rational models of the hyperplane arrangements: the homogenized
//! arrangement `H` (normals `e_i - e_{n+1+i} - e_{j+1}`), the graphic
//! arrangement `K` of the Ferrers graph (normals `e_{2i-1} - e_{2j}`), the
//! explicit linear isomorphism between their flat posets, and the deconed
//! affine arrangement whose semilattice is the reduced one.

use std::collections::HashMap;

use num::{One, Signed, Zero};

use crate::bond::{BondLattice, ReducedSemilattice};
use crate::error::{Error, Result};
use crate::poly::{Int, Poly, Rat};
use crate::setpart::SetPartition;

const HYPERPLANE_CAP: usize = 15;

/// Affine subspace in canonical reduced row-echelon form.  Each row is
/// `[a_1, ..., a_d | b]` for the equation `a . x = b`; rows are fully
/// reduced with unit pivots, so equal flats have identical rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Flat {
    dim_ambient: usize,
    rows: Vec<Vec<Rat>>,
}

/// Canonical reduced row echelon form; `None` when the system is
/// inconsistent (an all-zero coefficient row with nonzero right side).
fn rref(mut rows: Vec<Vec<Rat>>, width: usize) -> Option<Vec<Vec<Rat>>> {
    let mut pivot_row = 0;
    for col in 0..width - 1 {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].clone();
        for x in rows[pivot_row].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..width {
                    let delta = &factor * &rows[pivot_row][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    let mut reduced = Vec::new();
    for row in rows {
        if row[..width - 1].iter().all(Zero::is_zero) {
            if !row[width - 1].is_zero() {
                return None;
            }
        } else {
            reduced.push(row);
        }
    }
    reduced.sort_by_key(|row| row.iter().position(|x| !x.is_zero()));
    Some(reduced)
}

impl Flat {
    /// Whole ambient space.
    pub fn ambient(dim_ambient: usize) -> Self {
        Flat { dim_ambient, rows: Vec::new() }
    }

    /// Flat cut out by the given equations; `None` when empty.
    pub fn from_equations(dim_ambient: usize, equations: Vec<Vec<Rat>>) -> Option<Self> {
        debug_assert!(equations.iter().all(|r| r.len() == dim_ambient + 1));
        let rows = rref(equations, dim_ambient + 1)?;
        Some(Flat { dim_ambient, rows })
    }

    pub fn codim(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim_ambient - self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Intersection; `None` when empty.
    pub fn intersect(&self, other: &Flat) -> Option<Flat> {
        debug_assert_eq!(self.dim_ambient, other.dim_ambient);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Flat::from_equations(self.dim_ambient, rows)
    }

    /// Reduce an equation modulo this flat's system; the result is zero
    /// exactly when the equation holds everywhere on the flat.
    fn reduces_to_zero(&self, equation: &[Rat]) -> bool {
        let width = self.dim_ambient + 1;
        let mut eq = equation.to_vec();
        for row in &self.rows {
            let pivot = row.iter().position(|x| !x.is_zero()).unwrap();
            if !eq[pivot].is_zero() {
                let factor = eq[pivot].clone();
                for c in 0..width {
                    let delta = &factor * &row[c];
                    eq[c] = &eq[c] - &delta;
                }
            }
        }
        eq.iter().all(Zero::is_zero)
    }

    /// Set containment: does this flat contain `other`?
    pub fn contains(&self, other: &Flat) -> bool {
        self.rows.iter().all(|eq| other.reduces_to_zero(eq))
    }

    /// Canonical form is idempotent under re-reduction.
    pub fn canonical_key(&self) -> String {
        let parts: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| format!("{}/{}", x.numer(), x.denom()))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        parts.join(";")
    }

    /// Apply a linear change of coordinates `x = M y` (matrix given by
    /// rows): each equation row `a` becomes `a M` on the new coordinates.
    pub fn transform_by_substitution(&self, m: &Matrix) -> Flat {
        let width = self.dim_ambient + 1;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = vec![Rat::zero(); width];
                for (j, slot) in out.iter_mut().enumerate().take(self.dim_ambient) {
                    for i in 0..self.dim_ambient {
                        *slot += &row[i] * &m.entries[i][j];
                    }
                }
                out[self.dim_ambient] = row[self.dim_ambient].clone();
                out
            })
            .collect();
        Flat {
            dim_ambient: self.dim_ambient,
            rows: rref(rows, width).expect("invertible substitution keeps consistency"),
        }
    }
}

impl std::fmt::Debug for Flat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Flat[{}]", self.canonical_key())
    }
}

/// Dense rational matrix (row major).
#[derive(Clone, Debug)]
pub struct Matrix {
    pub entries: Vec<Vec<Rat>>,
}

impl Matrix {
    pub fn from_columns(d: usize, columns: Vec<Vec<Rat>>) -> Self {
        let mut entries = vec![vec![Rat::zero(); d]; d];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                entries[i][j] = v.clone();
            }
        }
        Matrix { entries }
    }

    pub fn transpose(&self) -> Matrix {
        let d = self.entries.len();
        let mut out = vec![vec![Rat::zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                out[j][i] = self.entries[i][j].clone();
            }
        }
        Matrix { entries: out }
    }

    /// Exact determinant by fraction-free-ish Gaussian elimination.
    pub fn determinant(&self) -> Rat {
        let mut m = self.entries.clone();
        let n = m.len();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(found) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Rat::zero();
            };
            if found != col {
                m.swap(found, col);
                det = -det;
            }
            det *= &m[col][col];
            let inv = m[col][col].clone();
            for c in col..n {
                m[col][c] = &m[col][c] / &inv;
            }
            for r in col + 1..n {
                if !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in col..n {
                        let delta = &factor * &m[col][c];
                        m[r][c] = &m[r][c] - &delta;
                    }
                }
            }
        }
        det
    }
}

/// Affine hyperplane `normal . x = offset`, normalized to a primitive
/// integer normal whose first nonzero entry is positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hyperplane {
    pub normal: Vec<Int>,
    pub offset: Rat,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rat>, offset: Rat) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::Invalid("hyperplane needs a nonzero normal".into()));
        }
        // clear denominators, divide by gcd, fix sign
        let mut denom_lcm = Int::one();
        for x in &normal {
            denom_lcm = num::integer::lcm(denom_lcm, x.denom().clone());
        }
        let mut ints: Vec<Int> = normal
            .iter()
            .map(|x| (x * Rat::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let mut g = Int::zero();
        for x in &ints {
            g = num::integer::gcd(g, x.clone());
        }
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
        let mut offset = offset * Rat::from_integer(denom_lcm) / Rat::from_integer(g);
        if ints.iter().find(|x| !x.is_zero()).unwrap().is_negative() {
            for x in ints.iter_mut() {
                *x = -x.clone();
            }
            offset = -offset;
        }
        Ok(Hyperplane { normal: ints, offset })
    }

    pub fn equation_row(&self, dim_ambient: usize) -> Vec<Rat> {
        debug_assert_eq!(self.normal.len(), dim_ambient);
        let mut row: Vec<Rat> = self
            .normal
            .iter()
            .map(|x| Rat::from_integer(x.clone()))
            .collect();
        row.push(self.offset.clone());
        row
    }
}

/// A finite arrangement, optionally restricted to an ambient affine flat
/// (for deconed arrangements).
#[derive(Clone)]
pub struct Arrangement {
    pub dim: usize,
    pub hyperplanes: Vec<Hyperplane>,
    pub ambient: Flat,
}

impl Arrangement {
    pub fn central(dim: usize, hyperplanes: Vec<Hyperplane>) -> Self {
        Arrangement { dim, hyperplanes, ambient: Flat::ambient(dim) }
    }
}

/// Poset of nonempty intersection flats, ordered by reverse inclusion,
/// ranked by codimension above the ambient flat.
pub struct FlatPoset {
    pub flats: Vec<Flat>,
    pub ranks: Vec<usize>,
    pub length: usize,
}

impl FlatPoset {
    /// `2^m` subset sweep with canonical-form dedup.
    pub fn build(arr: &Arrangement) -> Result<Self> {
        let m = arr.hyperplanes.len();
        if m > HYPERPLANE_CAP {
            return Err(Error::SizeLimit {
                what: "intersection poset subset sweep",
                cap: HYPERPLANE_CAP,
                got: m,
            });
        }
        let base_codim = arr.ambient.codim();
        let mut seen: HashMap<String, Flat> = HashMap::new();
        seen.insert(arr.ambient.canonical_key(), arr.ambient.clone());
        for mask in 1u32..(1 << m) {
            let mut rows = arr.ambient.rows().to_vec();
            for (i, h) in arr.hyperplanes.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    rows.push(h.equation_row(arr.dim));
                }
            }
            if let Some(flat) = Flat::from_equations(arr.dim, rows) {
                seen.entry(flat.canonical_key()).or_insert(flat);
            }
        }
        let mut flats: Vec<Flat> = seen.into_values().collect();
        flats.sort_by_key(|f| (f.codim(), f.canonical_key()));
        let ranks: Vec<usize> = flats.iter().map(|f| f.codim() - base_codim).collect();
        let length = ranks.iter().copied().max().unwrap_or(0);
        Ok(FlatPoset { flats, ranks, length })
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Möbius values from the recursive defining sum (the ambient flat is
    /// the minimum; `x <= y` when `x` contains `y`).
    pub fn mobius_values(&self) -> Vec<Int> {
        let n = self.flats.len();
        let mut mu: Vec<Option<Int>> = vec![None; n];
        // flats are sorted by rank, so every strict predecessor of i
        // appears before it
        for i in 0..n {
            if self.ranks[i] == 0 {
                mu[i] = Some(Int::one());
                continue;
            }
            let mut acc = Int::zero();
            for j in 0..n {
                if j != i && self.flats[j].contains(&self.flats[i]) {
                    acc += mu[j].as_ref().expect("predecessors computed first").clone();
                }
            }
            mu[i] = Some(-acc);
        }
        mu.into_iter().map(Option::unwrap).collect()
    }

    pub fn characteristic_polynomial(&self) -> Poly {
        let mu = self.mobius_values();
        let mut acc = Poly::zero();
        for (i, m) in mu.iter().enumerate() {
            acc = &acc
                + &Poly::monomial(Rat::from_integer(m.clone()), self.length - self.ranks[i]);
        }
        acc
    }

    /// Partition of `labels` (coordinate indices) by equality forced on
    /// each flat; `coords[i]` is the ambient coordinate of `labels[i]`.
    pub fn equality_partition(&self, flat: &Flat, labels: &[u32], coords: &[usize]) -> SetPartition {
        let d = flat.dim_ambient;
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        let mut assigned = vec![false; labels.len()];
        for i in 0..labels.len() {
            if assigned[i] {
                continue;
            }
            let mut block = vec![labels[i]];
            assigned[i] = true;
            for j in i + 1..labels.len() {
                if assigned[j] {
                    continue;
                }
                let mut eq = vec![Rat::zero(); d + 1];
                eq[coords[i]] = Rat::one();
                eq[coords[j]] = -Rat::one();
                if flat.reduces_to_zero(&eq) {
                    block.push(labels[j]);
                    assigned[j] = true;
                }
            }
            blocks.push(block);
        }
        SetPartition::new(labels.to_vec(), blocks).expect("equality classes partition the labels")
    }
}

/// The homogenized arrangement: hyperplanes with normals
/// `e_i - e_{n+1+i} - e_{j+1}` for `1 <= i <= j <= n`, in dimension `2n+1`.
pub fn build_h_arrangement(n: usize) -> Arrangement {
    let d = 2 * n + 1;
    let mut hyperplanes = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let mut normal = vec![Rat::zero(); d];
            normal[i - 1] += Rat::one();
            normal[n + i] -= Rat::one();
            normal[j] -= Rat::one();
            hyperplanes.push(Hyperplane::new(normal, Rat::zero()).unwrap());
        }
    }
    Arrangement::central(d, hyperplanes)
}

/// The graphic arrangement of the Ferrers graph on `[2n]` (with a spare
/// coordinate `2n+1`): normals `e_{2i-1} - e_{2j}` for `1 <= i <= j <= n`.
pub fn build_k_arrangement(n: usize) -> Arrangement {
    let d = 2 * n + 1;
    let mut hyperplanes = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let mut normal = vec![Rat::zero(); d];
            normal[2 * i - 2] += Rat::one();
            normal[2 * j - 1] -= Rat::one();
            hyperplanes.push(Hyperplane::new(normal, Rat::zero()).unwrap());
        }
    }
    Arrangement::central(d, hyperplanes)
}

/// The basis-change matrix: columns `2i-1 -> e_i - e_{n+1+i}` and
/// `2i -> e_{i+1}` carry the graphic normals onto the homogenized ones.
/// The spare column `2n+1` must complete these to a basis; `e_{n+2}` is the
/// one direction the others cannot reach (it agrees with `e_{2n+1}` when
/// `n = 1`), and it makes the matrix unimodular.
pub fn change_of_basis(n: usize) -> Matrix {
    let d = 2 * n + 1;
    let mut columns = vec![vec![Rat::zero(); d]; d];
    for i in 1..=n {
        columns[2 * i - 2][i - 1] += Rat::one();
        columns[2 * i - 2][n + i] -= Rat::one();
        columns[2 * i - 1][i] += Rat::one();
    }
    columns[d - 1][n + 1] = Rat::one();
    Matrix::from_columns(d, columns)
}

/// Witness report for the flat-poset isomorphism check.
#[derive(Debug)]
pub struct IsoReport {
    pub n: usize,
    pub det_abs_is_one: bool,
    pub flats_matched: usize,
    pub poset_lengths: (usize, usize),
    pub order_preserved: bool,
    pub bond_lattice_matched: bool,
    pub failure: Option<String>,
}

impl IsoReport {
    pub fn ok(&self) -> bool {
        self.det_abs_is_one
            && self.order_preserved
            && self.bond_lattice_matched
            && self.failure.is_none()
    }
}

/// Checks that the substitution by the transpose basis-change matrix maps
/// the graphic arrangement's flats bijectively and order-preservingly onto
/// the homogenized arrangement's flats, and that the graphic flats realize
/// the bond lattice through coordinate equalities.
pub fn verify_flat_isomorphism(n: usize) -> Result<IsoReport> {
    if n > 4 {
        return Err(Error::SizeLimit { what: "flat isomorphism check", cap: 4, got: n });
    }
    let h = build_h_arrangement(n);
    let k = build_k_arrangement(n);
    let a = change_of_basis(n);
    let det = a.determinant();
    let det_abs_is_one = det.abs() == Rat::one();

    let h_poset = FlatPoset::build(&h)?;
    let k_poset = FlatPoset::build(&k)?;
    let mut failure = None;

    // x = A^T y carries each graphic equation a.x = 0 to (a A^T).y = 0
    let a_t = a.transpose();
    let mapped: Vec<Flat> = k_poset
        .flats
        .iter()
        .map(|f| f.transform_by_substitution(&a_t))
        .collect();
    let mut mapped_keys: Vec<String> = mapped.iter().map(Flat::canonical_key).collect();
    mapped_keys.sort();
    mapped_keys.dedup();
    let mut h_keys: Vec<String> = h_poset.flats.iter().map(Flat::canonical_key).collect();
    h_keys.sort();
    if mapped_keys != h_keys {
        let missing = h_keys.iter().find(|k| mapped_keys.binary_search(k).is_err());
        failure = Some(format!("flat sets differ, first unmatched: {missing:?}"));
    }

    // order preservation both ways
    let mut order_preserved = true;
    'outer: for i in 0..k_poset.flats.len() {
        for j in 0..k_poset.flats.len() {
            let before = k_poset.flats[i].contains(&k_poset.flats[j]);
            let after = mapped[i].contains(&mapped[j]);
            if before != after {
                order_preserved = false;
                failure = Some(format!(
                    "containment flips under the map: flats {i} and {j}"
                ));
                break 'outer;
            }
        }
    }

    // graphic flats carry the bond lattice through coordinate equalities
    let labels: Vec<u32> = (1..=2 * n as u32).collect();
    let coords: Vec<usize> = (0..2 * n).collect();
    let mut partitions: Vec<SetPartition> = k_poset
        .flats
        .iter()
        .map(|f| k_poset.equality_partition(f, &labels, &coords))
        .collect();
    partitions.sort();
    partitions.dedup();
    let lattice = BondLattice::on_2n(n)?;
    let bond_lattice_matched = partitions.len() == k_poset.flats.len()
        && partitions == lattice.elements().to_vec();
    if !bond_lattice_matched && failure.is_none() {
        failure = Some("graphic flats do not realize the bond lattice".into());
    }

    Ok(IsoReport {
        n,
        det_abs_is_one,
        flats_matched: mapped_keys.len(),
        poset_lengths: (k_poset.length, h_poset.length),
        order_preserved,
        bond_lattice_matched,
        failure,
    })
}

/// The deconed affine arrangement: the graphic arrangement of the Ferrers
/// graph on `[2n] \ {2, 2n-1}` minus the `{1, 2n}` hyperplane, restricted
/// to the affine flat `x_1 = x_{2n} + 1`.
pub fn build_p_arrangement(n: usize) -> Result<Arrangement> {
    if !(3..=5).contains(&n) {
        return Err(Error::SizeLimit { what: "deconed arrangement", cap: 5, got: n });
    }
    let two_n = 2 * n as u32;
    let vertices: Vec<u32> = (1..=two_n).filter(|&v| v != 2 && v != two_n - 1).collect();
    let d = vertices.len();
    let coord = |v: u32| vertices.binary_search(&v).unwrap();
    let mut base = vec![Rat::zero(); d + 1];
    base[coord(1)] = Rat::one();
    base[coord(two_n)] = -Rat::one();
    base[d] = Rat::one();
    let ambient = Flat::from_equations(d, vec![base]).expect("affine base flat is nonempty");
    let graph = crate::ferrers::FerrersGraph::new(vertices.clone())?;
    let mut hyperplanes = Vec::new();
    for &(u, v) in graph.edges() {
        if (u, v) == (1, two_n) {
            continue; // the deconing direction
        }
        let mut normal = vec![Rat::zero(); d];
        normal[coord(u)] = Rat::one();
        normal[coord(v)] = -Rat::one();
        hyperplanes.push(Hyperplane::new(normal, Rat::zero())?);
    }
    Ok(Arrangement { dim: d, hyperplanes, ambient })
}

/// Report for the deconed arrangement: its semilattice against the reduced
/// one, the characteristic polynomial, and the bounded-region count.
#[derive(Debug)]
pub struct DeconedReport {
    pub n: usize,
    pub semilattice_matched: bool,
    pub chi: Poly,
    pub bounded_regions: Int,
}

pub fn deconed_regions(n: usize) -> Result<DeconedReport> {
    let arr = build_p_arrangement(n)?;
    let poset = FlatPoset::build(&arr)?;
    let chi = poset.characteristic_polynomial();

    let two_n = 2 * n as u32;
    let labels: Vec<u32> = (1..=two_n).filter(|&v| v != 2 && v != two_n - 1).collect();
    let coords: Vec<usize> = (0..labels.len()).collect();
    let mut partitions: Vec<SetPartition> = poset
        .flats
        .iter()
        .map(|f| poset.equality_partition(f, &labels, &coords))
        .collect();
    partitions.sort();
    partitions.dedup();
    let semi = ReducedSemilattice::build(n)?;
    let semilattice_matched = partitions.len() == poset.len()
        && partitions == semi.elements().to_vec()
        && chi == semi.characteristic_polynomial();

    let bounded_regions = crate::bond::zaslavsky_bounded(&chi);
    Ok(DeconedReport { n, semilattice_matched, chi, bounded_regions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    #[test]
    fn h_arrangement_sizes() {
        assert_eq!(build_h_arrangement(1).hyperplanes.len(), 1);
        assert_eq!(build_h_arrangement(1).dim, 3);
        assert_eq!(build_h_arrangement(2).hyperplanes.len(), 3);
        assert_eq!(build_h_arrangement(2).dim, 5);
        assert_eq!(build_h_arrangement(4).hyperplanes.len(), 10);
        assert_eq!(build_h_arrangement(4).dim, 9);
    }

    #[test]
    fn rref_is_canonical_and_idempotent() {
        let rows = vec![
            vec![rat(2), rat(4), rat(2), rat(0)],
            vec![rat(1), rat(2), rat(3), rat(0)],
        ];
        let f = Flat::from_equations(3, rows).unwrap();
        let again = Flat::from_equations(3, f.rows().to_vec()).unwrap();
        assert_eq!(f, again);
        assert_eq!(f.codim(), 2);
    }

    #[test]
    fn inconsistent_systems_are_empty() {
        let rows = vec![
            vec![rat(1), rat(-1), rat(0)],
            vec![rat(1), rat(-1), rat(1)],
        ];
        assert!(Flat::from_equations(2, rows).is_none());
    }

    #[test]
    fn flat_poset_of_h1_is_a_chain() {
        let poset = FlatPoset::build(&build_h_arrangement(1)).unwrap();
        assert_eq!(poset.len(), 2);
        assert_eq!(poset.length, 1);
        assert_eq!(poset.characteristic_polynomial(), Poly::from_int_coeffs(&[-1, 1]));
    }

    #[test]
    fn flat_poset_of_h2_matches_the_frozen_polynomial() {
        let poset = FlatPoset::build(&build_h_arrangement(2)).unwrap();
        assert_eq!(
            poset.characteristic_polynomial(),
            Poly::from_int_coeffs(&[-1, 3, -3, 1])
        );
        assert_eq!(poset.length, 3);
    }

    #[test]
    fn flat_poset_of_h3_matches_the_frozen_polynomial() {
        let poset = FlatPoset::build(&build_h_arrangement(3)).unwrap();
        assert_eq!(
            poset.characteristic_polynomial(),
            Poly::from_int_coeffs(&[-3, 12, -19, 15, -6, 1])
        );
        assert_eq!(poset.length, 5);
    }

    #[test]
    fn basis_change_is_unimodular() {
        for n in 1..=4 {
            assert_eq!(change_of_basis(n).determinant().abs(), Rat::one(), "n = {n}");
        }
    }

    #[test]
    fn flat_isomorphism_holds_up_to_three() {
        for n in 1..=3 {
            let report = verify_flat_isomorphism(n).unwrap();
            assert!(report.ok(), "n = {n}: {report:?}");
        }
    }

    #[test]
    fn deconed_bounded_regions_follow_the_median_genocchi_tail() {
        let expected = [(3usize, 1i64), (4, 2), (5, 8)];
        for (n, want) in expected {
            let report = deconed_regions(n).unwrap();
            assert!(report.semilattice_matched, "n = {n}");
            assert_eq!(report.bounded_regions, int(want), "n = {n}");
        }
    }

    #[test]
    fn k_flats_count_matches_bond_lattice() {
        let poset = FlatPoset::build(&build_k_arrangement(2)).unwrap();
        assert_eq!(poset.len(), BondLattice::on_2n(2).unwrap().len());
    }
}
