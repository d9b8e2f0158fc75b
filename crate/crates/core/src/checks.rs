//! The verification suites behind `verify`: each suite is a list of named
//! checks run concurrently, producing one report line per check.  A
//! `SizeLimit` from a kernel marks the check skipped, any other error or an
//! explicit mismatch marks it failed with a witness.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bond::{self, BondLattice};
use crate::dperm::{self, DClass};
use crate::drops;
use crate::error::{Error, Result};
use crate::ferrers::FerrersGraph;
use crate::genfun;
use crate::geom;
use crate::idtree;
use crate::perm::Permutation;
use crate::poly::{rat, Poly, Rat};
use crate::report::{CheckResult, CheckStatus, VerificationReport};
use crate::routes;
use crate::staircase;

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    /// Instance-size knob: suites test up to `[2 * max_n]`.
    pub max_n: usize,
    /// Truncation order for the series identities.
    pub order: usize,
    /// Seed for the sampled six-tuple checks.
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_n: 3, order: 5, seed: 42 }
    }
}

pub enum Outcome {
    Pass,
    Fail(Value),
}

/// Compare and produce an outcome with an expected/got witness.
fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, expected: T) -> Outcome {
    if got == expected {
        Outcome::Pass
    } else {
        Outcome::Fail(json!({
            "expected": format!("{expected:?}"),
            "got": format!("{got:?}"),
        }))
    }
}

fn expect(cond: bool, witness: impl FnOnce() -> Value) -> Outcome {
    if cond {
        Outcome::Pass
    } else {
        Outcome::Fail(witness())
    }
}

struct Check {
    id: String,
    detail: String,
    run: Box<dyn FnOnce() -> Result<Outcome> + Send>,
}

fn check(
    id: impl Into<String>,
    detail: impl Into<String>,
    run: impl FnOnce() -> Result<Outcome> + Send + 'static,
) -> Check {
    Check { id: id.into(), detail: detail.into(), run: Box::new(run) }
}

/// Run every check of a suite on its own thread; results are ordered by id.
fn execute(suite: &str, checks: Vec<Check>) -> VerificationReport {
    let results: Vec<CheckResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .into_iter()
            .map(|c| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let (status, witness) = match (c.run)() {
                        Ok(Outcome::Pass) => (CheckStatus::Pass, None),
                        Ok(Outcome::Fail(w)) => (CheckStatus::Fail, Some(w)),
                        Err(e @ Error::SizeLimit { .. }) => {
                            (CheckStatus::Skipped { reason: e.to_string() }, None)
                        }
                        Err(e) => (
                            CheckStatus::Fail,
                            Some(json!({ "error": e.to_string() })),
                        ),
                    };
                    CheckResult {
                        id: c.id,
                        detail: c.detail,
                        status,
                        witness,
                        elapsed: start.elapsed(),
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread")).collect()
    });
    VerificationReport::new(suite, results)
}

fn subsets_of(max: u32) -> impl Iterator<Item = Vec<u32>> {
    (1u32..(1 << max)).map(move |mask| {
        (1..=max).filter(|&v| mask >> (v - 1) & 1 == 1).collect()
    })
}

// ---------------------------------------------------------------- suites

pub fn suite_bijections(cfg: SuiteConfig) -> VerificationReport {
    let size = (2 * cfg.max_n).min(8) as u32;
    let mut checks = Vec::new();

    checks.push(check(
        format!("psi-bijection-upto-{size}"),
        format!("forest map is a support-preserving bijection onto the D-permutations, every ground set within [{size}]"),
        move || {
            for ground in subsets_of(size) {
                let forests = idtree::enumerate_id_forests(&ground, None)?;
                let mut images: Vec<Permutation> = Vec::with_capacity(forests.len());
                for f in &forests {
                    let p = idtree::psi_forest(f)?;
                    if p.cycle_support() != f.support() {
                        return Ok(Outcome::Fail(json!({
                            "ground": ground, "forest": format!("{f:?}"),
                            "reason": "cycle support differs from forest support"
                        })));
                    }
                    images.push(p);
                }
                images.sort();
                images.dedup();
                if images.len() != forests.len() {
                    return Ok(Outcome::Fail(json!({"ground": ground, "reason": "map not injective"})));
                }
                let mut dperms = dperm::enumerate(&ground, DClass::DPerm)?;
                dperms.sort();
                if images != dperms {
                    return Ok(Outcome::Fail(json!({"ground": ground, "reason": "image set differs"})));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        format!("word-round-trips-upto-{size}"),
        format!("postorder and its inverse are mutually inverse on both plane forms, every ID tree within [{size}]"),
        move || {
            for ground in subsets_of(size) {
                for tree in idtree::id_trees_on(&ground)? {
                    for form in [idtree::hat_form(&tree)?, idtree::tilde_form(&tree)?] {
                        let w = idtree::postorder_word(&form)?;
                        if idtree::gamma(&w) != form {
                            return Ok(Outcome::Fail(json!({
                                "ground": ground, "word": w.letters(),
                            })));
                        }
                    }
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    for n in 1..=cfg.max_n.min(4) {
        let two_n = 2 * n as u32;
        checks.push(check(
            format!("slide-round-trip-{two_n}"),
            format!("column slide is a bijection onto no-even-maxima staircases on [{}]", two_n + 2),
            move || {
                let members = staircase::gset_members(two_n)?;
                let mut images = Vec::with_capacity(members.len());
                for g in &members {
                    let f = staircase::gamma_slide(g)?;
                    if &staircase::gamma_unslide(&f)? != g {
                        return Ok(Outcome::Fail(json!({"g": format!("{g:?}")})));
                    }
                    images.push(f);
                }
                images.sort();
                images.dedup();
                let targets = staircase::enumerate_staircases(two_n + 2, true)?;
                Ok(expect_eq(images, targets))
            },
        ));

        checks.push(check(
            format!("slide-distribution-{two_n}"),
            format!("joint statistics of D-permutations on [{two_n}] match no-even-maxima staircases on [{}]", two_n + 2),
            move || {
                let ground: Vec<u32> = (1..=two_n).collect();
                let mut lhs: Vec<(usize, usize, usize)> = dperm::enumerate(&ground, DClass::DPerm)?
                    .iter()
                    .map(|p| {
                        let even_cycle_maxima = p
                            .cycles()
                            .iter()
                            .filter(|c| c.iter().max().unwrap() % 2 == 0)
                            .count();
                        let even_fp = p.fixed_points().iter().filter(|x| *x % 2 == 0).count();
                        let odd_fp = p.fixed_points().iter().filter(|x| *x % 2 == 1).count();
                        (even_cycle_maxima, even_fp, odd_fp)
                    })
                    .collect();
                let mut rhs: Vec<(usize, usize, usize)> =
                    staircase::enumerate_staircases(two_n + 2, true)?
                        .iter()
                        .map(|f| {
                            let s = staircase::six_statistics(f);
                            (
                                (s.fd + s.fi) as usize,
                                s.fi as usize,
                                s.mo as usize,
                            )
                        })
                        .collect();
                lhs.sort_unstable();
                rhs.sort_unstable();
                Ok(expect_eq(lhs, rhs))
            },
        ));
    }

    checks.push(check(
        "nbc-equals-id-forests",
        "the two forest generators (broken-circuit-free sets, filtered spanning trees) agree on every ground set within [6]",
        move || {
            for ground in subsets_of(6) {
                let report = idtree::nbc_equals_id(&ground)?;
                if !report.matches {
                    return Ok(Outcome::Fail(json!({
                        "ground": ground,
                        "only_nbc": format!("{:?}", report.only_nbc),
                        "only_spanning": format!("{:?}", report.only_spanning),
                    })));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    execute("bijections", checks)
}

pub fn suite_charpoly_cross(cfg: SuiteConfig) -> VerificationReport {
    let mut checks = Vec::new();
    let frozen: [&[i64]; 4] = [
        &[-1, 1],
        &[-1, 3, -3, 1],
        &[-3, 12, -19, 15, -6, 1],
        &[-17, 81, -162, 177, -115, 45, -10, 1],
    ];

    for n in 1..=cfg.max_n {
        checks.push(check(
            format!("routes-agree-n{n}"),
            format!("every applicable characteristic-polynomial route agrees at n = {n}"),
            move || {
                let (_, names) = routes::char_poly_agreed(n)?;
                Ok(expect(names.len() >= 4, || json!({"routes": names})))
            },
        ));
        if n <= 4 {
            let row = frozen[n - 1].to_vec();
            checks.push(check(
                format!("frozen-table-n{n}"),
                format!("characteristic polynomial and its evaluations match the fixed table at n = {n}"),
                move || {
                    let (poly, _) = routes::char_poly_agreed(n)?;
                    Ok(expect_eq(poly, Poly::from_int_coeffs(&row)))
                },
            ));
        }
        if n >= 2 {
            checks.push(check(
                format!("cube-divides-n{n}"),
                format!("(t-1)^3 divides the characteristic polynomial at n = {n}"),
                move || {
                    let (poly, _) = routes::char_poly_agreed(n)?;
                    Ok(expect(
                        poly.div_exact(&Poly::t_plus(-1).pow(3)).is_ok(),
                        || json!({"poly": poly.to_string()}),
                    ))
                },
            ));
            checks.push(check(
                format!("reduced-identity-n{n}"),
                format!("reduced semilattice polynomial satisfies the division identity and its endpoint values at n = {n}"),
                move || {
                    let (semi, chi) = bond::build_reduced(n)?;
                    let _ = semi;
                    let g = genfun::genocchi_g(n)?;
                    if chi.eval_int(0) != Rat::from_integer(g.clone()) {
                        return Ok(Outcome::Fail(json!({
                            "chi(0)": chi.eval_int(0).to_string(), "expected": g.to_string()
                        })));
                    }
                    if n >= 3 {
                        let h = genfun::genocchi_h(n - 3)?;
                        if chi.eval_int(1) != Rat::from_integer(h.clone()) {
                            return Ok(Outcome::Fail(json!({
                                "chi(1)": chi.eval_int(1).to_string(), "expected": h.to_string()
                            })));
                        }
                    }
                    Ok(Outcome::Pass)
                },
            ));
            checks.push(check(
                format!("decompositions-n{n}"),
                format!("power-of-two decompositions reassemble the class totals at n = {n}"),
                move || {
                    let d = dperm::power_of_two_decompositions(n)?;
                    let h: u64 = genfun::genocchi_h(n)?.try_into().unwrap();
                    let g: u64 = genfun::genocchi_g(n + 1)?.try_into().unwrap();
                    if d.h_value != h {
                        return Ok(Outcome::Fail(json!({"h_sum": d.h_value, "expected": h})));
                    }
                    Ok(expect_eq(d.g_value, g))
                },
            ));
        }
        checks.push(check(
            format!("zaslavsky-n{n}"),
            format!("alternating evaluation counts regions and the top Möbius value is the Genocchi number at n = {n}"),
            move || {
                let (poly, _) = routes::char_poly_agreed(n)?;
                let regions = bond::zaslavsky_regions(&poly, 2 * n - 1)?;
                let h = genfun::genocchi_h(n)?;
                if regions != h {
                    return Ok(Outcome::Fail(json!({"regions": regions.to_string(), "expected": h.to_string()})));
                }
                let g = genfun::genocchi_g(n)?;
                Ok(expect_eq(poly.eval_int(0), -Rat::from_integer(g)))
            },
        ));
        if 2 * n <= 10 {
            checks.push(check(
                format!("rank-sums-n{n}"),
                format!("signed rank sums of the lattice count ID forests by tree count at n = {n}"),
                move || {
                    let lattice = BondLattice::on_2n(n)?;
                    let vertices: Vec<u32> = (1..=2 * n as u32).collect();
                    for k in 0..=lattice.length() {
                        let forests =
                            idtree::enumerate_id_forests(&vertices, Some(2 * n - k))?.len();
                        let sum = lattice.signed_rank_sum(k);
                        if sum != crate::poly::int(forests as i64) {
                            return Ok(Outcome::Fail(json!({
                                "rank": k, "signed_sum": sum.to_string(), "forests": forests
                            })));
                        }
                    }
                    Ok(Outcome::Pass)
                },
            ));
        }
    }

    checks.push(check(
        "whitney-vs-chromatic",
        "alternating sum over broken-circuit-free sets equals the chromatic polynomial, every ground set within [6]",
        move || {
            for ground in subsets_of(6) {
                let g = FerrersGraph::new(ground.clone())?;
                if g.whitney_nbc_polynomial() != g.chromatic_polynomial() {
                    return Ok(Outcome::Fail(json!({"ground": ground})));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        "chromatic-vs-lattice",
        "chromatic polynomial equals t^components times the lattice polynomial, every ground set within [7]",
        move || {
            for ground in subsets_of(7) {
                let g = FerrersGraph::new(ground.clone())?;
                let lattice = BondLattice::build(&ground)?;
                let chi = lattice.characteristic_polynomial();
                let expected = &Poly::t().pow(lattice.component_count() as u32) * &chi;
                if g.chromatic_polynomial() != expected {
                    return Ok(Outcome::Fail(json!({
                        "ground": ground,
                        "chromatic": g.chromatic_polynomial().to_string(),
                        "lattice": expected.to_string(),
                    })));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        "membership-criteria",
        "connectivity membership equals the min/max membership, every ground set within [7]",
        move || {
            for ground in subsets_of(7) {
                if !bond::membership_criteria_agree(&ground)? {
                    return Ok(Outcome::Fail(json!({"ground": ground})));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    execute("charpoly-cross", checks)
}

pub fn suite_genfun(cfg: SuiteConfig) -> VerificationReport {
    let order = cfg.order.min(8);
    let mut checks = Vec::new();

    checks.push(check(
        "genocchi-tables",
        "enumeration and series extraction agree on both Genocchi families",
        move || {
            let g: Vec<String> = (1..=6)
                .map(|n| genfun::genocchi_g(n).map(|v| v.to_string()))
                .collect::<Result<_>>()?;
            if g != ["1", "1", "3", "17", "155", "2073"] {
                return Ok(Outcome::Fail(json!({"g": g})));
            }
            let h: Vec<String> = (0..=5)
                .map(|n| genfun::genocchi_h(n).map(|v| v.to_string()))
                .collect::<Result<_>>()?;
            Ok(expect(
                h == ["1", "2", "8", "56", "608", "9440"],
                || json!({"h": h}),
            ))
        },
    ));

    for ix in [10u32, 11, 12, 13] {
        checks.push(check(
            format!("factored-series-{ix}"),
            format!("factored series {ix} reproduces its Genocchi family on the overlap"),
            move || {
                let which = genfun::FactoredSeries::from_equation_index(ix).unwrap();
                let s = genfun::bd_series(which, 6)?;
                for k in which.first_index()..=6usize {
                    let got = s.coeff(k).coeff(0);
                    let expected = match which {
                        genfun::FactoredSeries::Genocchi => genfun::genocchi_g(k)?,
                        genfun::FactoredSeries::MedianGenocchi => genfun::genocchi_h(k)?,
                        genfun::FactoredSeries::GenocchiShifted => genfun::genocchi_g(k + 1)?,
                        genfun::FactoredSeries::MedianGenocchiShifted => genfun::genocchi_h(k - 1)?,
                    };
                    if got != Rat::from_integer(expected.clone()) {
                        return Ok(Outcome::Fail(json!({
                            "k": k, "got": got.to_string(), "expected": expected.to_string()
                        })));
                    }
                }
                Ok(Outcome::Pass)
            },
        ));
    }

    checks.push(check(
        format!("char-series-order{order}"),
        format!("falling-factorial series matches the characteristic polynomials up to order {order}"),
        move || {
            let s = genfun::char_poly_series(order)?;
            for n in 1..=order {
                let direct = dperm::char_poly_even_fp(n)?;
                if s.coeff(n) != &direct {
                    return Ok(Outcome::Fail(json!({
                        "n": n, "series": s.coeff(n).to_string(), "direct": direct.to_string()
                    })));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        format!("squared-series-order{order}"),
        format!("squared-factorial series match the shifted and reduced polynomials up to order {order}"),
        move || {
            let (full, reduced) = genfun::char_poly_series_squared(order)?;
            for n in 1..=order {
                let direct = dperm::char_poly_even_fp(n + 1)?;
                if full.coeff(n) != &direct {
                    return Ok(Outcome::Fail(json!({"n": n, "side": "full"})));
                }
                let quotient = direct.div_exact(&Poly::t_plus(-1).pow(3))?;
                if reduced.coeff(n) != &quotient {
                    return Ok(Outcome::Fail(json!({"n": n, "side": "reduced"})));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        "series-specializations",
        "characteristic-polynomial series specializes to the two Genocchi families at t = 0 and t = -1",
        move || {
            genfun::char_poly_series_specializations(4)?;
            Ok(Outcome::Pass)
        },
    ));

    let (seed, sample_order) = (cfg.seed, cfg.order.min(4));
    checks.push(check(
        "staircase-identity-sampled",
        format!("six-variable staircase identity at 20 seeded samples plus 3 fixed tuples, order {sample_order}"),
        move || {
            let mut samples = vec![
                [(); 6].map(|_| rat(1)),
                [(); 6].map(|_| rat(0)),
                [rat(2), rat(2), rat(1), rat(0), rat(2), rat(1)],
            ];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            while samples.len() < 23 {
                samples.push([(); 6].map(|_| rat(rng.gen_range(-2..=3))));
            }
            match genfun::staircase_series_pointcheck(sample_order, &samples)? {
                Ok(_) => Ok(Outcome::Pass),
                Err(m) => Ok(Outcome::Fail(json!({
                    "sample": m.sample.map(|x| x.to_string()),
                    "order": m.index,
                    "lhs": m.lhs.to_string(),
                    "rhs": m.rhs.to_string(),
                }))),
            }
        },
    ));

    checks.push(check(
        format!("closing-h-formula-order{order}"),
        format!("closing median formula reproduces the table up to order {order}"),
        move || {
            genfun::median_genocchi_formula_check(order)?;
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        "tangent-egf",
        "scaled tangent coefficients give the Genocchi numbers up to n = 6",
        move || {
            genfun::tangent_egf_check(6)?;
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        "descent-model",
        "descents-after-evens model counts Genocchi numbers up to n = 4",
        move || {
            for n in 1..=4usize {
                if genfun::genocchi_g_via_descents(n)? != genfun::genocchi_g(n)? {
                    return Ok(Outcome::Fail(json!({"n": n})));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        "cycle-enumerator-identity",
        "cycle enumerator of the parity-constrained class equals the staircase specialization, n <= 3",
        move || {
            for n in 1..=3usize {
                if let Err((lhs, rhs)) = staircase::lemma_cycle_identity(n)? {
                    return Ok(Outcome::Fail(json!({
                        "n": n, "lhs": lhs.to_string(), "rhs": rhs.to_string()
                    })));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    execute("genfun", checks)
}

pub fn suite_geometry(cfg: SuiteConfig) -> VerificationReport {
    let mut checks = Vec::new();
    let frozen: [&[i64]; 3] = [&[-1, 1], &[-1, 3, -3, 1], &[-3, 12, -19, 15, -6, 1]];

    for n in 1..=cfg.max_n.min(3) {
        checks.push(check(
            format!("flat-iso-n{n}"),
            format!("basis change maps the graphic flats onto the homogenized flats order-preservingly at n = {n}"),
            move || {
                let report = geom::verify_flat_isomorphism(n)?;
                Ok(expect(report.ok(), || json!({
                    "det_ok": report.det_abs_is_one,
                    "order_ok": report.order_preserved,
                    "bond_ok": report.bond_lattice_matched,
                    "failure": report.failure,
                })))
            },
        ));
        let row = frozen[n - 1].to_vec();
        checks.push(check(
            format!("h-charpoly-n{n}"),
            format!("flat poset of the homogenized arrangement gives the fixed polynomial at n = {n}"),
            move || {
                let poset = geom::FlatPoset::build(&geom::build_h_arrangement(n))?;
                let chi = poset.characteristic_polynomial();
                if poset.length != 2 * n - 1 {
                    return Ok(Outcome::Fail(json!({"length": poset.length, "expected": 2 * n - 1})));
                }
                Ok(expect_eq(chi, Poly::from_int_coeffs(&row)))
            },
        ));
        checks.push(check(
            format!("geometry-regions-n{n}"),
            format!("region counts from the flat poset match the lattice route at n = {n}"),
            move || {
                let poset = geom::FlatPoset::build(&geom::build_h_arrangement(n))?;
                let geo = bond::zaslavsky_regions(&poset.characteristic_polynomial(), poset.length)?;
                let (poly, _) = routes::char_poly_agreed(n)?;
                let lat = bond::zaslavsky_regions(&poly, 2 * n - 1)?;
                Ok(expect_eq(geo, lat))
            },
        ));
    }

    for n in 3..=5usize {
        checks.push(check(
            format!("deconed-regions-n{n}"),
            format!("deconed arrangement realizes the reduced semilattice and its bounded-region count at n = {n}"),
            move || {
                let report = geom::deconed_regions(n)?;
                if !report.semilattice_matched {
                    return Ok(Outcome::Fail(json!({"n": n, "reason": "semilattice mismatch"})));
                }
                let expected = genfun::genocchi_h(n - 3)?;
                Ok(expect_eq(report.bounded_regions, expected))
            },
        ));
    }

    execute("geometry", checks)
}

pub fn suite_chung_graham(cfg: SuiteConfig) -> VerificationReport {
    let mut checks = Vec::new();

    checks.push(check(
        "incomparability-graphs",
        "incomparability graph of the parity poset is the Ferrers graph, n <= 5",
        move || {
            for n in 1..=5usize {
                if !drops::incomparability_is_ferrers(n)? {
                    return Ok(Outcome::Fail(json!({"n": n})));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        "cg-identity-elementary-posets",
        "incomparability expansion holds on the antichain and the chain",
        move || {
            let antichain = drops::FinitePoset::new(vec![1, 2], &|x, y| x == y)?;
            if drops::chung_graham_check(&antichain)?.is_err() {
                return Ok(Outcome::Fail(json!({"poset": "antichain"})));
            }
            let chain = drops::FinitePoset::new(vec![1, 2], &|x, y| x <= y)?;
            Ok(expect(
                drops::chung_graham_check(&chain)?.is_ok(),
                || json!({"poset": "chain"}),
            ))
        },
    ));

    for n in 1..=cfg.max_n.min(4) {
        checks.push(check(
            format!("cg-identity-parity-n{n}"),
            format!("incomparability expansion holds on the parity poset of [{}]", 2 * n),
            move || {
                let poset = drops::parity_poset(2 * n as u32)?;
                match drops::chung_graham_check(&poset)? {
                    Ok(_) => Ok(Outcome::Pass),
                    Err((lhs, rhs)) => Ok(Outcome::Fail(json!({
                        "chromatic": lhs.to_string(), "expansion": rhs.to_string()
                    }))),
                }
            },
        ));
    }

    for n in 1..=cfg.max_n.min(5) {
        checks.push(check(
            format!("drop-expansion-n{n}"),
            format!("drop-table expansion equals the characteristic polynomial at n = {n}"),
            move || {
                let expansion = drops::drop_expansion_char_poly(n, false)?;
                let direct = dperm::char_poly_even_fp(n)?;
                Ok(expect_eq(expansion, direct))
            },
        ));
    }

    checks.push(check(
        "drop-table-row-sums",
        "drop tables sum to the factorial, sizes 2 through 8",
        move || {
            for m in 2..=8usize {
                let total: u64 = drops::d_table(m, false)?.iter().sum();
                let expected: u64 = (1..=m as u64).product();
                if total != expected {
                    return Ok(Outcome::Fail(json!({"m": m, "total": total})));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        "genocchi-drop-formula",
        "alternating drop formula gives the Genocchi numbers, n <= 4",
        move || {
            for n in 1..=4usize {
                if drops::genocchi_from_drop_table(n)? != genfun::genocchi_g(n)? {
                    return Ok(Outcome::Fail(json!({"n": n})));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    let max_m = (2 * cfg.max_n).min(10);
    checks.push(check(
        format!("descents-equal-drops-upto-{max_m}"),
        format!("even-odd descent counts equal even-odd drop counts, sizes up to {max_m}"),
        move || {
            for m in (2..=max_m).step_by(2) {
                let ground: Vec<u32> = (1..=m as u32).collect();
                let by_drops = drops::eo_drop_count(&ground, false)?;
                let by_descents = drops::eo_descent_count(m)?;
                if by_drops != by_descents {
                    return Ok(Outcome::Fail(json!({
                        "m": m, "drops": by_drops, "descents": by_descents
                    })));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    execute("chung-graham", checks)
}

pub fn suite_conjectures(cfg: SuiteConfig) -> VerificationReport {
    let max_n = cfg.max_n.min(6);
    let mut checks = Vec::new();

    checks.push(check(
        format!("eo-cycles-vs-genocchi-upto-{max_n}"),
        format!("cycles with only even-odd drops are counted by the Genocchi numbers, n <= {max_n}"),
        move || {
            let instances = drops::conjecture_checks(max_n, true, false)?;
            for inst in instances.iter().filter(|i| i.id.starts_with("eo-cycles[")) {
                if !inst.holds() {
                    return Ok(Outcome::Fail(serde_json::to_value(inst).unwrap()));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        "eo-cycles-vs-d-cycles-subsets",
        "cycles with only even-odd drops match the D-cycles on every ground set within [8]",
        move || {
            let instances = drops::conjecture_checks(1, true, false)?;
            for inst in instances.iter().filter(|i| i.id.starts_with("eo-cycles-vs")) {
                if !inst.holds() {
                    return Ok(Outcome::Fail(serde_json::to_value(inst).unwrap()));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    checks.push(check(
        format!("eo-distributions-upto-{max_n}"),
        format!("cycle-count distributions match the D-permutations, n <= {}", max_n.min(5)),
        move || {
            let instances = drops::conjecture_checks(max_n, false, true)?;
            for inst in &instances {
                if !inst.holds() {
                    return Ok(Outcome::Fail(serde_json::to_value(inst).unwrap()));
                }
            }
            Ok(Outcome::Pass)
        },
    ));

    execute("conjectures", checks)
}

/// Every suite, merged into one ordered report.
pub fn suite_all(cfg: SuiteConfig) -> VerificationReport {
    let reports = std::thread::scope(|scope| {
        let handles = vec![
            scope.spawn(move || suite_bijections(cfg)),
            scope.spawn(move || suite_charpoly_cross(cfg)),
            scope.spawn(move || suite_genfun(cfg)),
            scope.spawn(move || suite_geometry(cfg)),
            scope.spawn(move || suite_chung_graham(cfg)),
            scope.spawn(move || suite_conjectures(cfg)),
        ];
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread"))
            .collect::<Vec<_>>()
    });
    VerificationReport::merge(reports)
}

pub fn run_suite(name: &str, cfg: SuiteConfig) -> Result<VerificationReport> {
    match name {
        "bijections" => Ok(suite_bijections(cfg)),
        "charpoly-cross" => Ok(suite_charpoly_cross(cfg)),
        "genfun" => Ok(suite_genfun(cfg)),
        "geometry" => Ok(suite_geometry(cfg)),
        "chung-graham" => Ok(suite_chung_graham(cfg)),
        "conjectures" => Ok(suite_conjectures(cfg)),
        "all" => Ok(suite_all(cfg)),
        other => Err(Error::Invalid(format!("unknown suite {other}"))),
    }
}

/// Map used by the distribution check: cycle-count histogram of a class.
pub fn d_perm_distribution(two_n: u32) -> Result<BTreeMap<usize, u64>> {
    let ground: Vec<u32> = (1..=two_n).collect();
    dperm::count_by_cycles(&ground, DClass::DPerm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_the_default_size() {
        let cfg = SuiteConfig { max_n: 2, order: 3, seed: 7 };
        for name in [
            "bijections",
            "charpoly-cross",
            "genfun",
            "geometry",
            "chung-graham",
            "conjectures",
        ] {
            let report = run_suite(name, cfg).unwrap();
            assert!(report.passed(), "suite {name}:\n{}", report.render_text());
        }
    }

    #[test]
    fn merged_report_keeps_every_check() {
        let cfg = SuiteConfig { max_n: 1, order: 2, seed: 7 };
        let all = suite_all(cfg);
        assert!(all.passed(), "{}", all.render_text());
        let singles: usize = [
            suite_bijections(cfg).checks.len(),
            suite_charpoly_cross(cfg).checks.len(),
            suite_genfun(cfg).checks.len(),
            suite_geometry(cfg).checks.len(),
            suite_chung_graham(cfg).checks.len(),
            suite_conjectures(cfg).checks.len(),
        ]
        .iter()
        .sum();
        assert_eq!(all.checks.len(), singles);
    }
}
