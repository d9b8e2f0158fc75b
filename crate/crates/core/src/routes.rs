//! The independent routes to the characteristic polynomial of the bond
//! lattice on `[2n]`, kept behind one enum so callers can demand agreement.

use crate::bond::BondLattice;
use crate::dperm;
use crate::drops;
use crate::error::{Error, Result};
use crate::ferrers::FerrersGraph;
use crate::idtree;
use crate::poly::{Poly, Rat};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CharPolyMethod {
    /// Möbius recursion over the materialized lattice.
    Lattice,
    /// Signed cycle-count table of the parity-constrained permutations.
    DPerm,
    /// Alternating count of ID forests by tree count.
    IdForest,
    /// Chromatic polynomial of the Ferrers graph divided by `t`.
    Chromatic,
    /// Even-fixed-point weighted sum over the class on `[2n-2]`.
    EvenFp,
    /// `(t-1)^3` times the weighted sum over the class on `[2n-4]`.
    Reduced,
    /// Incomparability expansion from the non-even-odd drop table.
    DropExpansion,
}

pub const ALL_METHODS: [CharPolyMethod; 7] = [
    CharPolyMethod::Lattice,
    CharPolyMethod::DPerm,
    CharPolyMethod::IdForest,
    CharPolyMethod::Chromatic,
    CharPolyMethod::EvenFp,
    CharPolyMethod::Reduced,
    CharPolyMethod::DropExpansion,
];

impl CharPolyMethod {
    pub fn name(self) -> &'static str {
        match self {
            CharPolyMethod::Lattice => "lattice",
            CharPolyMethod::DPerm => "dperm",
            CharPolyMethod::IdForest => "idforest",
            CharPolyMethod::Chromatic => "chromatic",
            CharPolyMethod::EvenFp => "evenfp",
            CharPolyMethod::Reduced => "reduced",
            CharPolyMethod::DropExpansion => "thm61",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lattice" => Some(CharPolyMethod::Lattice),
            "dperm" => Some(CharPolyMethod::DPerm),
            "idforest" => Some(CharPolyMethod::IdForest),
            "chromatic" => Some(CharPolyMethod::Chromatic),
            "evenfp" => Some(CharPolyMethod::EvenFp),
            "reduced" => Some(CharPolyMethod::Reduced),
            "thm61" => Some(CharPolyMethod::DropExpansion),
            _ => None,
        }
    }
}

/// Characteristic polynomial of the lattice on `[2n]` by one route.
pub fn char_poly(method: CharPolyMethod, n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    match method {
        CharPolyMethod::Lattice => Ok(BondLattice::on_2n(n)?.characteristic_polynomial()),
        CharPolyMethod::DPerm => dperm::char_poly_from_counts(n),
        CharPolyMethod::IdForest => {
            let vertices: Vec<u32> = (1..=2 * n as u32).collect();
            let mut acc = Poly::zero();
            for forest in idtree::enumerate_id_forests(&vertices, None)? {
                let k = forest.tree_count();
                let sign = if k % 2 == 0 { 1 } else { -1 };
                acc = &acc + &Poly::monomial(Rat::from_integer(sign.into()), k - 1);
            }
            Ok(acc)
        }
        CharPolyMethod::Chromatic => {
            let g = FerrersGraph::on_2n(n);
            g.chromatic_polynomial().div_exact(&Poly::t())
        }
        CharPolyMethod::EvenFp => dperm::char_poly_even_fp(n),
        CharPolyMethod::Reduced => {
            if n < 2 {
                return Err(Error::SizeLimit { what: "reduced-form route needs n >= 2", cap: 6, got: n });
            }
            dperm::char_poly_reduced_form(n)
        }
        CharPolyMethod::DropExpansion => drops::drop_expansion_char_poly(n, false),
    }
}

/// Every route that applies at this size, with its result.
pub fn all_routes(n: usize) -> Vec<(CharPolyMethod, Result<Poly>)> {
    ALL_METHODS.iter().map(|&m| (m, char_poly(m, n))).collect()
}

/// All applicable routes must agree; returns the polynomial and the names
/// of the routes that produced it.
pub fn char_poly_agreed(n: usize) -> Result<(Poly, Vec<&'static str>)> {
    let mut agreed: Option<Poly> = None;
    let mut names = Vec::new();
    for (method, res) in all_routes(n) {
        match res {
            Ok(p) => {
                if let Some(prev) = &agreed {
                    if prev != &p {
                        return Err(Error::Invalid(format!(
                            "route {} gives {p}, earlier routes gave {prev}",
                            method.name()
                        )));
                    }
                } else {
                    agreed = Some(p);
                }
                names.push(method.name());
            }
            Err(Error::SizeLimit { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    let poly = agreed.ok_or_else(|| Error::Invalid("no route applied".into()))?;
    Ok((poly, names))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_routes_agree_for_small_n() {
        for n in 1..=3usize {
            let (poly, names) = char_poly_agreed(n).unwrap();
            assert!(names.len() >= 5, "n = {n}: only {names:?}");
            assert_eq!(poly.degree(), Some(2 * n - 1));
        }
    }

    #[test]
    fn frozen_table_through_the_agreed_route() {
        let rows: [&[i64]; 4] = [
            &[-1, 1],
            &[-1, 3, -3, 1],
            &[-3, 12, -19, 15, -6, 1],
            &[-17, 81, -162, 177, -115, 45, -10, 1],
        ];
        for (n, row) in (1..=4).zip(rows) {
            let (poly, _) = char_poly_agreed(n).unwrap();
            assert_eq!(poly, Poly::from_int_coeffs(row), "n = {n}");
        }
    }
}
