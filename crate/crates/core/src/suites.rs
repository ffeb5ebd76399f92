//! The property-check harness: executable forms of the structural invariants,
//! grouped into named suites with machine-readable pass/fail results and
//! counterexample payloads. The CLI `check` command and the acceptance tests
//! both run through here.

use crate::cm::{self, HypotheticalCheck};
use crate::corpus::{self, CorpusSpec};
use crate::depth;
use crate::error::Result;
use crate::homology::{stanley_reisner_complex, FieldSpec, SimplicialComplex};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::newton::{self, MembershipOracle, ResourceCaps};
use crate::stability;
use crate::varset::VarSet;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Number of instances exercised.
    pub instances: usize,
    /// First counterexample (or error) encountered, when failing.
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub corpus: CorpusSpec,
    /// Exhaustive square-free sweep rank (at most 4).
    pub exhaustive_rank: usize,
    /// Sample size for the rank-5 square-free sweep.
    pub rank5_sample: usize,
    pub field: FieldSpec,
    pub caps: ResourceCaps,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            corpus: CorpusSpec::default(),
            exhaustive_rank: 4,
            rank5_sample: 200,
            field: FieldSpec::RATIONALS,
            caps: ResourceCaps::default(),
        }
    }
}

pub const SUITE_NAMES: [&str; 6] = ["newton", "homology", "depth", "stability", "cm", "all"];

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    match name {
        "newton" => Ok(vec![newton_suite(config)]),
        "homology" => Ok(vec![homology_suite(config)]),
        "depth" => Ok(vec![depth_suite(config)]),
        "stability" => Ok(vec![stability_suite(config)]),
        "cm" => Ok(vec![cm_suite(config)]),
        "all" => Ok(vec![
            newton_suite(config),
            homology_suite(config),
            depth_suite(config),
            stability_suite(config),
            cm_suite(config),
        ]),
        other => Err(crate::error::Error::InvalidArgument(format!(
            "unknown suite {other:?}; expected one of {SUITE_NAMES:?}"
        ))),
    }
}

/// Run `f` over the instances in parallel; the reported counterexample is the
/// first failing instance in input order, so results are deterministic.
fn run_check<T, F>(name: &str, instances: &[T], f: F) -> CheckResult
where
    T: Sync,
    F: Fn(&T) -> Result<Option<String>> + Sync,
{
    let outcomes: Vec<Option<String>> = instances
        .par_iter()
        .map(|t| match f(t) {
            Ok(v) => v,
            Err(e) => Some(format!("error: {e}")),
        })
        .collect();
    let counterexample = outcomes.into_iter().flatten().next();
    CheckResult {
        name: name.to_string(),
        passed: counterexample.is_none(),
        instances: instances.len(),
        counterexample,
    }
}

fn passed_check(name: &str, instances: usize) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed: true,
        instances,
        counterexample: None,
    }
}

fn failed_check(name: &str, instances: usize, detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed: false,
        instances,
        counterexample: Some(detail),
    }
}

fn closure_box_bound(ideal: &MonomialIdeal, n: u32) -> i64 {
    let d = ideal
        .generators()
        .iter()
        .flat_map(|g| g.coords().iter().copied())
        .max()
        .unwrap_or(0);
    d * n as i64
}

fn box_points(rank: usize, side: i64) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut cursor = vec![0i64; rank];
    loop {
        out.push(ExponentVector(cursor.clone()));
        let mut i = 0;
        loop {
            if i == rank {
                return out;
            }
            if cursor[i] < side {
                cursor[i] += 1;
                break;
            }
            cursor[i] = 0;
            i += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// newton

pub fn newton_suite(config: &SuiteConfig) -> SuiteReport {
    let ideals = corpus::random_ideals(&config.corpus);
    let mut checks = Vec::new();

    checks.push(run_check("facet_membership_matches_oracle", &ideals, |ideal| {
        let np = newton::compute_newton_polyhedron(ideal)?;
        for n in 1..=3u32 {
            let oracle = MembershipOracle::new(ideal, n);
            let side = closure_box_bound(ideal, n);
            for alpha in box_points(ideal.rank(), side) {
                let facet_route = np.contains(&alpha, n)?;
                let oracle_route = oracle.decide(&alpha);
                if facet_route != oracle_route {
                    return Ok(Some(format!(
                        "{ideal:?} n={n} alpha={alpha:?}: facets say {facet_route}, oracle says {oracle_route}"
                    )));
                }
            }
        }
        Ok(None)
    }));

    checks.push(run_check("facet_coefficient_bound", &ideals, |ideal| {
        let np = newton::compute_newton_polyhedron(ideal)?;
        let d = BigInt::from(ideal.max_gen_degree());
        for h in np.facets() {
            let s = h.support_size() as u32;
            let bound = BigInt::from(s) * d.pow(s.saturating_sub(1));
            if h.normal().iter().any(|a| *a > bound) {
                return Ok(Some(format!("{ideal:?}: facet {h:?} exceeds the bound {bound}")));
            }
        }
        Ok(None)
    }));

    checks.push(run_check(
        "facet_supports_enough_independent_points",
        &ideals,
        |ideal| {
            let np = newton::compute_newton_polyhedron(ideal)?;
            for h in np.facets() {
                let active: Vec<&ExponentVector> = ideal
                    .generators()
                    .iter()
                    .filter(|g| h.eval(g) == *h.offset())
                    .collect();
                if active.is_empty() {
                    return Ok(Some(format!("{ideal:?}: facet {h:?} touches no generator")));
                }
                let rows: Vec<Vec<i64>> = active[1..]
                    .iter()
                    .map(|g| {
                        g.coords()
                            .iter()
                            .zip(active[0].coords())
                            .map(|(a, b)| a - b)
                            .collect()
                    })
                    .collect();
                let independent = crate::linalg::rank_i64(&rows) + 1;
                if independent < h.support_size() {
                    return Ok(Some(format!(
                        "{ideal:?}: facet {h:?} has only {independent} affinely independent generators"
                    )));
                }
            }
            Ok(None)
        },
    ));

    checks.push(run_check("closure_contains_power_same_radical", &ideals, |ideal| {
        for n in 1..=3u32 {
            let closure = newton::closure_power_with(ideal, None, n, ResourceCaps::default())?;
            if !ideal.pow(n).is_subideal_of(&closure) {
                return Ok(Some(format!("{ideal:?} n={n}: power not inside its closure")));
            }
            if closure.radical() != ideal.radical() {
                return Ok(Some(format!("{ideal:?} n={n}: closure changed the radical")));
            }
        }
        Ok(None)
    }));

    checks.push(run_check("closure_power_composition", &ideals, |ideal| {
        for (m, n) in [(1u32, 2u32), (2, 2), (1, 3), (3, 1), (2, 1)] {
            let inner = newton::closure_power_with(ideal, None, m, ResourceCaps::default())?;
            let outer = newton::closure_power_with(ideal, None, m * n, ResourceCaps::default())?;
            if !inner.pow(n).is_subideal_of(&outer) {
                return Ok(Some(format!(
                    "{ideal:?}: power {n} of the closure of I^{m} escapes the closure of I^{}",
                    m * n
                )));
            }
        }
        Ok(None)
    }));

    SuiteReport {
        suite: "newton".into(),
        checks,
    }
}

// ---------------------------------------------------------------------------
// homology

pub fn homology_suite(config: &SuiteConfig) -> SuiteReport {
    let mut checks = Vec::new();
    let field = config.field;

    // conventions for the degenerate complexes
    let empty_dims = SimplicialComplex::empty(3).reduced_homology_dims(field);
    let void_dims = SimplicialComplex::void(3).reduced_homology_dims(field);
    if empty_dims == std::collections::BTreeMap::from([(-1, 1)]) && void_dims.is_empty() {
        checks.push(passed_check("degenerate_complex_conventions", 2));
    } else {
        checks.push(failed_check(
            "degenerate_complex_conventions",
            2,
            format!("empty -> {empty_dims:?}, void -> {void_dims:?}"),
        ));
    }

    let spheres: Vec<usize> = (1..=5).collect();
    checks.push(run_check("simplex_boundary_spheres", &spheres, |&k| {
        let ground = k + 1;
        let facets: Vec<VarSet> = (0..ground)
            .map(|i| {
                let mut f = VarSet::full(ground);
                f.remove(i);
                f
            })
            .collect();
        let sphere = SimplicialComplex::generated_by(ground, facets)?;
        for (i, d) in sphere.reduced_homology_dims(field) {
            let expect = if i == k as i64 - 1 { 1 } else { 0 };
            if d != expect {
                return Ok(Some(format!("sphere k={k}: index {i} has dimension {d}")));
            }
        }
        Ok(None)
    }));

    let ideals = corpus::random_ideals(&config.corpus);
    checks.push(run_check("euler_characteristic", &ideals, |ideal| {
        let complex = stanley_reisner_complex(ideal)?;
        let dims = complex.reduced_homology_dims(field);
        let euler_hom: i64 = dims
            .iter()
            .map(|(&i, &d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum();
        let euler_faces: i64 = complex
            .f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| {
                if (k as i64 - 1).rem_euclid(2) == 0 {
                    f as i64
                } else {
                    -(f as i64)
                }
            })
            .sum();
        if euler_hom != euler_faces {
            return Ok(Some(format!(
                "{ideal:?}: homology Euler sum {euler_hom} vs face Euler sum {euler_faces}"
            )));
        }
        Ok(None)
    }));

    checks.push(run_check("permutation_invariance", &ideals, |ideal| {
        let complex = stanley_reisner_complex(ideal)?;
        let r = complex.ground_size();
        // rotate labels by one
        let rotated = SimplicialComplex::generated_by(
            r,
            complex
                .facets()
                .iter()
                .map(|f| VarSet::from_indices(f.iter().map(|i| (i + 1) % r))),
        )?;
        if complex.reduced_homology_dims(field) != rotated.reduced_homology_dims(field) {
            return Ok(Some(format!("{ideal:?}: homology changed under rotation")));
        }
        Ok(None)
    }));

    // two independent Cohen-Macaulay routes: the Reisner criterion on the
    // complex versus depth = dim on the quotient ring
    let squarefree = corpus::all_squarefree_ideals(3);
    checks.push(run_check("reisner_matches_depth_route", &squarefree, |ideal| {
        let complex = stanley_reisner_complex(ideal)?;
        let by_complex = complex.is_cohen_macaulay(field)?;
        let by_depth = cm::is_cm(ideal, field)?;
        if by_complex != by_depth {
            return Ok(Some(format!(
                "{ideal:?}: Reisner says {by_complex}, depth route says {by_depth}"
            )));
        }
        Ok(None)
    }));

    SuiteReport {
        suite: "homology".into(),
        checks,
    }
}

// ---------------------------------------------------------------------------
// depth

/// Corpus for the dual-method criterion: rank-3 and rank-4 ideals, half each.
fn depth_corpus(config: &SuiteConfig) -> Vec<MonomialIdeal> {
    let rank3 = CorpusSpec {
        count: config.corpus.count.div_ceil(2).max(30),
        rank: 3,
        ..config.corpus
    };
    let rank4 = CorpusSpec {
        count: (config.corpus.count / 2).max(20),
        rank: 4,
        max_exponent: config.corpus.max_exponent.min(2),
        seed: config.corpus.seed.wrapping_add(1),
        ..config.corpus
    };
    let mut out = corpus::random_ideals(&rank3);
    out.extend(corpus::random_ideals(&rank4));
    out
}

pub fn depth_suite(config: &SuiteConfig) -> SuiteReport {
    let field = config.field;
    let caps = config.caps;
    let mut checks = Vec::new();

    let dual_corpus = depth_corpus(config);
    checks.push(run_check("takayama_equals_betti", &dual_corpus, |ideal| {
        // depth_takayama cross-checks against the Betti oracle internally
        // and fails loudly on disagreement
        let np = newton::compute_newton_polyhedron(ideal)?;
        depth::depth_takayama(ideal, field, None)?;
        for n in 1..=3u32 {
            let closure = newton::closure_power_with(ideal, Some(&np), n, caps)?;
            let takayama = depth::depth_takayama(&closure, field, None)?;
            let betti = depth::depth_betti(&closure, field)?;
            if takayama.depth != betti.depth {
                return Ok(Some(format!(
                    "{ideal:?} closure n={n}: takayama {} vs betti {}",
                    takayama.depth, betti.depth
                )));
            }
        }
        Ok(None)
    }));

    let small = corpus::random_ideals(&CorpusSpec {
        count: config.corpus.count.min(20),
        ..config.corpus
    });
    checks.push(run_check("degree_complex_facet_description", &small, |ideal| {
        let np = newton::compute_newton_polyhedron(ideal)?;
        for n in 1..=2u32 {
            let closure = newton::closure_power_with(ideal, Some(&np), n, caps)?;
            let side = closure_box_bound(ideal, n) + 1;
            for alpha in box_points(ideal.rank(), side) {
                let from_facets = depth::degree_complex_closure_power(&np, n, &alpha)?;
                let direct = depth::degree_complex(&closure, &alpha)?;
                if from_facets != direct {
                    return Ok(Some(format!(
                        "{ideal:?} n={n} alpha={alpha:?}: {from_facets:?} vs {direct:?}"
                    )));
                }
            }
        }
        Ok(None)
    }));

    checks.push(run_check("degree_complex_scaling", &small, |ideal| {
        let np = newton::compute_newton_polyhedron(ideal)?;
        let closure1 = newton::closure_power_with(ideal, Some(&np), 1, caps)?;
        let side = closure_box_bound(ideal, 1) + 1;
        for n in 2..=3u32 {
            let closure_n = newton::closure_power_with(ideal, Some(&np), n, caps)?;
            for alpha in box_points(ideal.rank(), side) {
                let scaled = alpha.scale(n as i64);
                if depth::degree_complex(&closure1, &alpha)?
                    != depth::degree_complex(&closure_n, &scaled)?
                {
                    return Ok(Some(format!("{ideal:?} n={n} alpha={alpha:?}")));
                }
            }
        }
        Ok(None)
    }));

    checks.push(run_check("depth_quasi_decreasing", &dual_corpus, |ideal| {
        let scan = depth::depth_function_scan(ideal, 6, field, caps)?;
        let depths: Vec<usize> = scan.iter().map(|(_, r)| r.depth).collect();
        if !stability::quasi_decreasing_consistent(&depths) {
            return Ok(Some(format!("{ideal:?}: depths {depths:?}")));
        }
        Ok(None)
    }));

    checks.push(run_check("depth_within_dimension", &dual_corpus, |ideal| {
        let report = depth::depth_betti(ideal, field)?;
        let (_, dim) = ideal.height_and_dim()?;
        if report.depth > dim {
            return Ok(Some(format!("{ideal:?}: depth {} > dim {dim}", report.depth)));
        }
        Ok(None)
    }));

    SuiteReport {
        suite: "depth".into(),
        checks,
    }
}

// ---------------------------------------------------------------------------
// stability

pub fn stability_suite(config: &SuiteConfig) -> SuiteReport {
    let caps = config.caps;
    let field = config.field;
    let mut checks = Vec::new();

    let ideals = corpus::random_ideals(&config.corpus);
    checks.push(run_check("ass_monotone", &ideals, |ideal| {
        if !stability::check_ass_monotone(ideal, 4, caps)? {
            return Ok(Some(format!("{ideal:?}")));
        }
        Ok(None)
    }));

    // restriction commutation instances: ideal x dropped variable x power
    let restriction_instances: Vec<(MonomialIdeal, usize, u32)> = ideals
        .iter()
        .take(15)
        .flat_map(|ideal| {
            (0..ideal.rank()).flat_map(move |v| [(ideal.clone(), v, 1u32), (ideal.clone(), v, 2u32)])
        })
        .collect();
    checks.push(run_check(
        "restriction_commutes_with_closure",
        &restriction_instances,
        |(ideal, var, n)| {
            if !stability::check_restriction_commutes(ideal, VarSet::singleton(*var), *n, caps)? {
                return Ok(Some(format!("{ideal:?} dropping {var} at n={n}")));
            }
            Ok(None)
        },
    ));

    let extension_instances: Vec<(MonomialIdeal, u32)> = ideals
        .iter()
        .take(12)
        .flat_map(|ideal| [1u32, 2, 3].map(|n| (ideal.clone(), n)))
        .collect();
    checks.push(run_check(
        "extension_formula",
        &extension_instances,
        |(ideal, n)| {
            if !stability::check_extension_formula(ideal, *n, caps)? {
                return Ok(Some(format!("{ideal:?} at n={n}")));
            }
            Ok(None)
        },
    ));

    let degree_pairs: Vec<(usize, i64)> = (3..=5)
        .flat_map(|r| (1..6).map(move |d| (r, d)))
        .collect();
    checks.push(run_check("bounds_monotone_in_degree", &degree_pairs, |&(r, d)| {
        if stability::n0_from_invariants(r, d) > stability::n0_from_invariants(r, d + 1)
            || stability::n1_from_invariants(r, d) > stability::n1_from_invariants(r, d + 1)
        {
            return Ok(Some(format!("rank {r}, degree {d}")));
        }
        Ok(None)
    }));

    let tail_sample: Vec<MonomialIdeal> = ideals.iter().take(10).cloned().collect();
    checks.push(run_check("stable_tail_matches_limit", &tail_sample, |ideal| {
        let scan = depth::depth_function_scan(ideal, 4, field, caps)?;
        let depths: Vec<usize> = scan.iter().map(|(_, r)| r.depth).collect();
        let limit = depth::limit_depth(ideal)?;
        let tail = depths[depths.len() - 1];
        let tail_start = depths.iter().rposition(|&d| d != tail).map_or(0, |p| p + 1);
        // a constant tail sitting at dim R - l(I) must be the limit value
        if tail_start + 1 < depths.len() && tail == limit && depths[tail_start..].iter().any(|&d| d != limit)
        {
            return Ok(Some(format!("{ideal:?}: depths {depths:?} limit {limit}")));
        }
        Ok(None)
    }));

    SuiteReport {
        suite: "stability".into(),
        checks,
    }
}

// ---------------------------------------------------------------------------
// cm

pub fn cm_suite(config: &SuiteConfig) -> SuiteReport {
    let field = config.field;
    let caps = config.caps;
    let mut checks = Vec::new();

    // equimultiple ideals have CM closure powers at every n; for the others
    // a non-CM power must show up inside a window just past d(I)
    let sample: Vec<MonomialIdeal> = corpus::random_ideals(&config.corpus)
        .into_iter()
        .take(30)
        .collect();
    checks.push(run_check("equimultiple_iff_cm_window", &sample, |ideal| {
        let equimultiple = cm::is_equimultiple(ideal)?;
        let window = if equimultiple {
            4
        } else {
            (ideal.max_gen_degree() as u32 + 2).clamp(4, 9)
        };
        let np = newton::compute_newton_polyhedron(ideal)?;
        let mut all_cm = true;
        for n in 1..=window {
            let closure = newton::closure_power_with(ideal, Some(&np), n, caps)?;
            let is_cm = cm::is_cm(&closure, field)?;
            if equimultiple && !is_cm {
                return Ok(Some(format!("equimultiple {ideal:?} not CM at n={n}")));
            }
            all_cm &= is_cm;
            if !equimultiple && !is_cm {
                break;
            }
        }
        if !equimultiple && all_cm {
            return Ok(Some(format!(
                "{ideal:?} is not equimultiple yet every closure power up to {window} is CM"
            )));
        }
        Ok(None)
    }));

    let mut sweep: Vec<MonomialIdeal> = Vec::new();
    for r in 1..=config.exhaustive_rank.min(4) {
        sweep.extend(corpus::all_squarefree_ideals(r));
    }
    checks.push(run_check("squarefree_equivalences_exhaustive", &sweep, |ideal| {
        squarefree_equivalences(ideal, field, caps)
    }));

    let rank5 = corpus::random_squarefree_ideals(5, config.rank5_sample, config.corpus.seed);
    checks.push(run_check("squarefree_equivalences_rank5_sample", &rank5, |ideal| {
        squarefree_equivalences(ideal, field, caps)
    }));

    // vertex links inherit Cohen-Macaulayness of closure powers
    let link_instances: Vec<(MonomialIdeal, u32)> = sweep
        .iter()
        .filter(|i| i.rank() == config.exhaustive_rank.min(4))
        .flat_map(|i| [1u32, 2, 3].map(|n| (i.clone(), n)))
        .collect();
    checks.push(run_check("links_inherit_cm", &link_instances, |(ideal, n)| {
        match cm::check_link_cm(ideal, *n, field, caps)? {
            HypotheticalCheck::Holds | HypotheticalCheck::HypothesesNotSatisfied(_) => Ok(None),
            HypotheticalCheck::Fails(detail) => {
                Ok(Some(format!("{ideal:?} at n={n}: {detail}")))
            }
        }
    }));

    // closure of a power of an unmixed ideal decomposes along its primary
    // decomposition whenever the closure stays unmixed
    let mut prim_dec_instances: Vec<(MonomialIdeal, u32)> = Vec::new();
    for ideal in corpus::all_squarefree_ideals(3).iter().chain(sweep.iter().take(40)) {
        for n in 1..=3u32 {
            prim_dec_instances.push((ideal.clone(), n));
        }
    }
    let applicable = std::sync::atomic::AtomicUsize::new(0);
    let prim_dec = run_check("closure_of_primary_decomposition", &prim_dec_instances, |(ideal, n)| {
        match cm::check_prim_dec_closure(ideal, *n, caps)? {
            HypotheticalCheck::Holds => {
                applicable.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                Ok(None)
            }
            HypotheticalCheck::HypothesesNotSatisfied(_) => Ok(None),
            HypotheticalCheck::Fails(witness) => Ok(Some(format!("{ideal:?} n={n}: {witness}"))),
        }
    });
    let applicable = applicable.load(std::sync::atomic::Ordering::Relaxed);
    checks.push(CheckResult {
        instances: applicable,
        ..prim_dec
    });
    if applicable < 30 {
        checks.push(failed_check(
            "closure_of_primary_decomposition_coverage",
            applicable,
            format!("only {applicable} instances satisfied the hypotheses; need at least 30"),
        ));
    } else {
        checks.push(passed_check("closure_of_primary_decomposition_coverage", applicable));
    }

    // low-dimensional classification shapes
    let low_dim: Vec<(MonomialIdeal, u32)> = sweep
        .iter()
        .filter_map(|ideal| {
            let complex = stanley_reisner_complex(ideal).ok()?;
            match complex.dim()? {
                0 => Some((ideal.clone(), 2u32)),
                1 => Some((ideal.clone(), 3u32)),
                _ => None,
            }
        })
        .collect();
    checks.push(run_check("low_dimension_shapes", &low_dim, |(ideal, n)| {
        let complex = stanley_reisner_complex(ideal)?;
        let verdict = cm::low_dim_classification(&complex, *n, field, caps)?;
        if !verdict.consistent {
            return Ok(Some(format!("{ideal:?} at n={n}: {verdict:?}")));
        }
        Ok(None)
    }));

    checks.push(run_check("symbolic_power_contains_power", &sweep, |ideal| {
        let ci = ideal.is_complete_intersection_squarefree()?;
        for n in 1..=3u32 {
            let symbolic = cm::symbolic_power_squarefree(ideal, n)?;
            let ordinary = ideal.pow(n);
            if !ordinary.is_subideal_of(&symbolic) {
                return Ok(Some(format!("{ideal:?} n={n}: ordinary power escapes")));
            }
            if ci && symbolic != ordinary {
                return Ok(Some(format!(
                    "{ideal:?} n={n}: complete intersection with strict symbolic power"
                )));
            }
        }
        Ok(None)
    }));

    SuiteReport {
        suite: "cm".into(),
        checks,
    }
}

/// The square-free equivalences: Cohen-Macaulayness of the closure cube,
/// complete intersection, equimultiplicity, and Cohen-Macaulayness of every
/// closure power up to 4 all coincide.
fn squarefree_equivalences(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    caps: ResourceCaps,
) -> Result<Option<String>> {
    let ci = ideal.is_complete_intersection_squarefree()?;
    let equimultiple = cm::is_equimultiple(ideal)?;
    let np = newton::compute_newton_polyhedron(ideal)?;
    let mut cm_by_n = Vec::with_capacity(4);
    for n in 1..=4u32 {
        let closure = newton::closure_power_with(ideal, Some(&np), n, caps)?;
        cm_by_n.push(cm::is_cm(&closure, field)?);
    }
    let cm_cube = cm_by_n[2];
    let cm_all = cm_by_n.iter().all(|&b| b);
    if ci != equimultiple || ci != cm_cube || ci != cm_all {
        return Ok(Some(format!(
            "{ideal:?}: ci={ci} equimultiple={equimultiple} cm_cube={cm_cube} cm_by_n={cm_by_n:?}"
        )));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A miniature configuration so the suite plumbing itself stays quick to
    /// test; the full-size runs live in the acceptance suite.
    fn small_config() -> SuiteConfig {
        SuiteConfig {
            corpus: CorpusSpec {
                count: 6,
                rank: 2,
                max_exponent: 3,
                max_gens: 3,
                seed: 5,
            },
            exhaustive_rank: 3,
            rank5_sample: 5,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn newton_suite_passes_on_small_corpus() {
        let report = newton_suite(&small_config());
        assert!(report.passed(), "{:#?}", report.checks);
    }

    #[test]
    fn homology_suite_passes_on_small_corpus() {
        let report = homology_suite(&small_config());
        assert!(report.passed(), "{:#?}", report.checks);
    }

    #[test]
    fn depth_suite_passes_on_small_corpus() {
        let mut config = small_config();
        config.corpus.count = 4;
        let report = depth_suite(&config);
        assert!(report.passed(), "{:#?}", report.checks);
    }

    #[test]
    fn stability_suite_passes_on_small_corpus() {
        let report = stability_suite(&small_config());
        assert!(report.passed(), "{:#?}", report.checks);
    }

    #[test]
    fn cm_suite_passes_on_small_corpus() {
        let report = cm_suite(&small_config());
        assert!(report.passed(), "{:#?}", report.checks);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("bogus", &small_config()).is_err());
    }
}
