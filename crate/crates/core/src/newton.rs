//! Exact Newton-polyhedron geometry: facet enumeration with integer normals,
//! membership tests, integral closures of powers, and analytic spread via
//! compact faces.
//!
//! All arithmetic is arbitrary-precision integer; no floating point is used.

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::linalg::{cross_normal, normalize_by_gcd, rank_bigint};
use crate::varset::VarSet;
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};

/// Caps on enumeration work; exceeding one fails loudly with the amount that
/// would have been required.
#[derive(Clone, Copy, Debug)]
pub struct ResourceCaps {
    /// Largest lattice-point box a closure computation may scan.
    pub max_lattice_points: u128,
    /// Largest number of facet subsets a face enumeration may visit.
    pub max_face_subsets: u128,
}

impl Default for ResourceCaps {
    fn default() -> Self {
        ResourceCaps {
            max_lattice_points: 8_000_000,
            max_face_subsets: 4_000_000,
        }
    }
}

/// A closed halfspace `<a, x> >= b` with integer data, `a >= 0` componentwise
/// and `gcd(a, b) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Halfspace {
    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    /// Indices with a nonzero normal coordinate; `s_j` is its cardinality.
    pub fn support(&self) -> VarSet {
        VarSet::from_indices(
            self.normal
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, _)| i),
        )
    }

    pub fn support_size(&self) -> usize {
        self.normal.iter().filter(|a| !a.is_zero()).count()
    }

    pub fn eval(&self, point: &ExponentVector) -> BigInt {
        self.normal
            .iter()
            .zip(point.coords())
            .map(|(a, &x)| a * x)
            .sum()
    }

    /// `<a, point> >= n * b`.
    pub fn satisfied_at(&self, point: &ExponentVector, n: u32) -> bool {
        self.eval(point) >= &self.offset * BigInt::from(n)
    }

    fn active_at(&self, point: &ExponentVector) -> bool {
        self.eval(point) == self.offset
    }
}

/// Serialized form of a halfspace; coefficients are bounded well inside `i64`
/// at the scales this library targets, and conversion fails loudly otherwise.
#[derive(Serialize, Deserialize)]
struct HalfspaceRepr {
    a: Vec<i64>,
    b: i64,
}

impl Serialize for Halfspace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let a = self
            .normal
            .iter()
            .map(|x| i64::try_from(x).map_err(|_| serde::ser::Error::custom("facet coefficient exceeds i64")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let b = i64::try_from(&self.offset)
            .map_err(|_| serde::ser::Error::custom("facet offset exceeds i64"))?;
        HalfspaceRepr { a, b }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Halfspace {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = HalfspaceRepr::deserialize(deserializer)?;
        Ok(Halfspace {
            normal: repr.a.into_iter().map(BigInt::from).collect(),
            offset: BigInt::from(repr.b),
        })
    }
}

/// The Newton polyhedron of a monomial ideal: the irredundant facet system
/// plus the vertex list (always a subset of the generator exponents).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolyhedron {
    rank: usize,
    facets: Vec<Halfspace>,
    vertices: Vec<ExponentVector>,
}

impl NewtonPolyhedron {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    /// Membership of `point` in `n * NP` (the Newton polyhedron of the n-th
    /// power): every facet inequality holds with offset scaled by `n`.
    pub fn contains(&self, point: &ExponentVector, n: u32) -> Result<bool> {
        if point.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: point.len(),
            });
        }
        Ok(self.facets.iter().all(|h| h.satisfied_at(point, n)))
    }
}

/// Facet enumeration: for every way of choosing `s` generator points and
/// `r - s` coordinate directions, build the integer normal of the spanned
/// hyperplane from cofactors, sign-fix it to be nonnegative, normalize by the
/// gcd, and keep the candidates that support the generator set and cut a face
/// of dimension `r - 1`. Every facet of the polyhedron arises this way, so the
/// result is exactly the irredundant facet system.
pub fn compute_newton_polyhedron(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let r = ideal.rank();
    let gens = ideal.generators();
    let points: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|g| g.coords().iter().map(|&c| BigInt::from(c)).collect())
        .collect();

    let mut seen: HashSet<(Vec<BigInt>, BigInt)> = HashSet::new();
    let mut facets: Vec<Halfspace> = Vec::new();

    for s in 1..=r.min(points.len()) {
        for subset in (0..points.len()).combinations(s) {
            for axes in (0..r).combinations(r - s) {
                let base = &points[subset[0]];
                let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(r - 1);
                for &p in &subset[1..] {
                    rows.push(
                        points[p]
                            .iter()
                            .zip(base)
                            .map(|(a, b)| a - b)
                            .collect(),
                    );
                }
                for &i in &axes {
                    let mut e = vec![BigInt::zero(); r];
                    e[i] = BigInt::from(1);
                    rows.push(e);
                }
                let mut normal = cross_normal(&rows, r);
                if normal.iter().all(|a| a.is_zero()) {
                    continue;
                }
                if normal.iter().all(|a| !a.is_positive()) {
                    for a in normal.iter_mut() {
                        *a = -std::mem::take(a);
                    }
                }
                if normal.iter().any(|a| a.is_negative()) {
                    continue;
                }
                let mut offset: BigInt = normal.iter().zip(base).map(|(a, x)| a * x).sum();
                normalize_by_gcd(&mut normal, &mut offset);
                let candidate = Halfspace { normal, offset };
                if !seen.insert((candidate.normal.clone(), candidate.offset.clone())) {
                    continue;
                }
                if is_supporting(&candidate, gens) && is_facet(&candidate, gens, r) {
                    facets.push(candidate);
                }
            }
        }
    }
    facets.sort_unstable();

    let vertices = gens
        .iter()
        .filter(|g| {
            let active: Vec<Vec<BigInt>> = facets
                .iter()
                .filter(|h| h.active_at(g))
                .map(|h| h.normal.clone())
                .collect();
            rank_bigint(active) == r
        })
        .cloned()
        .collect();

    Ok(NewtonPolyhedron {
        rank: r,
        facets,
        vertices,
    })
}

fn is_supporting(h: &Halfspace, gens: &[ExponentVector]) -> bool {
    gens.iter().all(|g| h.eval(g) >= h.offset)
}

/// The face cut by a supporting hyperplane is `conv(active generators) +
/// cone(e_i : a_i = 0)`; it is a facet iff that set has affine dimension r-1.
fn is_facet(h: &Halfspace, gens: &[ExponentVector], r: usize) -> bool {
    let active: Vec<&ExponentVector> = gens.iter().filter(|g| h.active_at(g)).collect();
    if active.is_empty() {
        return false;
    }
    let base = active[0];
    let mut rows: Vec<Vec<BigInt>> = active[1..]
        .iter()
        .map(|g| {
            g.coords()
                .iter()
                .zip(base.coords())
                .map(|(a, b)| BigInt::from(a - b))
                .collect()
        })
        .collect();
    for (i, a) in h.normal.iter().enumerate() {
        if a.is_zero() {
            let mut e = vec![BigInt::zero(); r];
            e[i] = BigInt::from(1);
            rows.push(e);
        }
    }
    rank_bigint(rows) == r - 1
}

/// One solved basis of the convex-combination feasibility system, kept with
/// its adjugate so many right-hand sides can be tested cheaply.
struct Basis {
    gen_indices: Vec<usize>,
    tight_rows: Vec<usize>,
    with_sum_row: bool,
    det: BigInt, // > 0 after normalization
    adjugate: Vec<Vec<BigInt>>,
}

/// Decides membership in `NP(I^n)` directly from the generators, as exact
/// feasibility of `alpha >= sum(lambda_j * beta_j)` with `lambda >= 0`,
/// `sum(lambda_j) = n`, by exhaustive enumeration of basic solutions over
/// generator subsets. Entirely independent of the facet computation.
pub struct MembershipOracle {
    rank: usize,
    n: u32,
    scaled_gens: Vec<Vec<i64>>,
    gens: Vec<Vec<BigInt>>,
    bases: Vec<Basis>,
    unit_ideal: bool,
}

impl MembershipOracle {
    pub fn new(ideal: &MonomialIdeal, n: u32) -> Self {
        let r = ideal.rank();
        let gens: Vec<Vec<BigInt>> = ideal
            .generators()
            .iter()
            .map(|g| g.coords().iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        let scaled_gens = ideal
            .generators()
            .iter()
            .map(|g| g.coords().iter().map(|&c| c * n as i64).collect())
            .collect();
        let mut bases = Vec::new();
        let m = gens.len();
        // Any feasible system has a basic solution supported on at most r+1
        // generators, with the tight constraints drawn from the sum row and
        // the coordinate rows.
        for s in 1..=m.min(r + 1) {
            for sel in (0..m).combinations(s) {
                for with_sum_row in [true, false] {
                    let t = if with_sum_row { s - 1 } else { s };
                    if t > r {
                        continue;
                    }
                    for rows in (0..r).combinations(t) {
                        let mut matrix: Vec<Vec<BigInt>> = Vec::with_capacity(s);
                        if with_sum_row {
                            matrix.push(vec![BigInt::from(1); s]);
                        }
                        for &i in &rows {
                            matrix.push(sel.iter().map(|&j| gens[j][i].clone()).collect());
                        }
                        let (mut det, mut adjugate) = crate::linalg::det_and_adjugate(&matrix);
                        if det.is_zero() {
                            continue;
                        }
                        if det.is_negative() {
                            det = -det;
                            for row in adjugate.iter_mut() {
                                for x in row.iter_mut() {
                                    *x = -std::mem::take(x);
                                }
                            }
                        }
                        bases.push(Basis {
                            gen_indices: sel.clone(),
                            tight_rows: rows,
                            with_sum_row,
                            det,
                            adjugate,
                        });
                    }
                }
            }
        }
        MembershipOracle {
            rank: r,
            n,
            scaled_gens,
            gens,
            bases,
            unit_ideal: ideal.is_unit(),
        }
    }

    pub fn decide(&self, alpha: &ExponentVector) -> bool {
        debug_assert_eq!(alpha.len(), self.rank);
        if self.unit_ideal {
            return alpha.is_nonnegative();
        }
        if !alpha.is_nonnegative() {
            return false;
        }
        // fast path: alpha dominates n * beta_j for a single generator
        for g in &self.scaled_gens {
            if g.iter().zip(alpha.coords()).all(|(b, a)| b <= a) {
                return true;
            }
        }
        let alpha_big: Vec<BigInt> = alpha.coords().iter().map(|&c| BigInt::from(c)).collect();
        let n_big = BigInt::from(self.n);
        'basis: for basis in &self.bases {
            let s = basis.gen_indices.len();
            let mut rhs: Vec<&BigInt> = Vec::with_capacity(s);
            if basis.with_sum_row {
                rhs.push(&n_big);
            }
            for &i in &basis.tight_rows {
                rhs.push(&alpha_big[i]);
            }
            // lambda_j = num[j] / det with det > 0
            let mut num = vec![BigInt::zero(); s];
            for (j, nj) in num.iter_mut().enumerate() {
                for (k, r) in rhs.iter().enumerate() {
                    *nj += &basis.adjugate[j][k] * *r;
                }
                if nj.is_negative() {
                    continue 'basis;
                }
            }
            if !basis.with_sum_row {
                let total: BigInt = num.iter().sum();
                if total != &basis.det * &n_big {
                    continue;
                }
            }
            // verify alpha >= sum(lambda_j beta_j) on every coordinate
            for i in 0..self.rank {
                let mut lhs = BigInt::zero();
                for (j, &g) in basis.gen_indices.iter().enumerate() {
                    lhs += &num[j] * &self.gens[g][i];
                }
                if lhs > &basis.det * &alpha_big[i] {
                    continue 'basis;
                }
            }
            return true;
        }
        false
    }
}

/// One-shot convex-combination membership test for `alpha in NP(I^n)`.
pub fn membership_oracle(ideal: &MonomialIdeal, alpha: &ExponentVector, n: u32) -> Result<bool> {
    if alpha.len() != ideal.rank() {
        return Err(Error::DimensionMismatch {
            expected: ideal.rank(),
            got: alpha.len(),
        });
    }
    Ok(MembershipOracle::new(ideal, n).decide(alpha))
}

/// Side of the scan box for minimal generators of the closure of `I^n`.
///
/// Implementation lemma: with `D` the largest single-coordinate exponent over
/// the generators, every componentwise-minimal lattice point of `NP(I^n)`
/// lies in `[0, nD]^r`. Indeed if `alpha` is a lattice point of `NP(I^n)`
/// with `alpha_i > nD`, write `alpha >= sum(lambda_j beta_j)` with
/// `sum(lambda_j) = n`; the right side has `i`-coordinate at most `nD`, so
/// `alpha - e_i` still dominates it and stays in `NP(I^n)`, hence `alpha` is
/// not minimal.
fn closure_box_side(ideal: &MonomialIdeal, n: u32) -> i64 {
    let d = ideal
        .generators()
        .iter()
        .flat_map(|g| g.coords().iter().copied())
        .max()
        .unwrap_or(0);
    d * n as i64
}

/// Minimal monomial generators of the integral closure of `I^n`: the
/// componentwise-minimal lattice points of `n * NP(I)`.
pub fn closure_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    closure_power_with(ideal, None, n, ResourceCaps::default())
}

/// As [`closure_power`], reusing a precomputed polyhedron and explicit caps.
pub fn closure_power_with(
    ideal: &MonomialIdeal,
    np: Option<&NewtonPolyhedron>,
    n: u32,
    caps: ResourceCaps,
) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Ok(MonomialIdeal::zero(ideal.rank()));
    }
    if ideal.is_unit() || n == 0 {
        return Ok(MonomialIdeal::unit(ideal.rank()));
    }
    let r = ideal.rank();
    let computed;
    let np = match np {
        Some(np) => np,
        None => {
            computed = compute_newton_polyhedron(ideal)?;
            &computed
        }
    };
    let side = closure_box_side(ideal, n);
    let points = (side as u128 + 1).pow(r as u32);
    if points > caps.max_lattice_points {
        return Err(Error::ResourceCap {
            what: "closure lattice scan",
            required: points,
            cap: caps.max_lattice_points,
        });
    }
    // graded scan: any proper divisor of a box point has smaller total
    // degree, so testing against previously kept generators is enough
    let mut by_degree: Vec<Vec<ExponentVector>> = vec![Vec::new(); (side * r as i64 + 1) as usize];
    let mut cursor = vec![0i64; r];
    loop {
        let v = ExponentVector(cursor.clone());
        by_degree[v.total_degree() as usize].push(v);
        let mut i = 0;
        loop {
            if i == r {
                break;
            }
            if cursor[i] < side {
                cursor[i] += 1;
                break;
            }
            cursor[i] = 0;
            i += 1;
        }
        if i == r {
            break;
        }
    }
    let mut minimal: Vec<ExponentVector> = Vec::new();
    for bucket in by_degree {
        for alpha in bucket {
            if minimal.iter().any(|g| g.divides(&alpha)) {
                continue;
            }
            if np.contains(&alpha, n)? {
                minimal.push(alpha);
            }
        }
    }
    MonomialIdeal::minimalize(r, minimal)
}

/// Analytic spread: 1 + the largest dimension of a compact face of `NP(I)`.
///
/// Faces are intersections of facet subsets; such a face is compact iff the
/// chosen supports jointly cover every coordinate (trivial recession cone),
/// and it is then the convex hull of the generators active on all chosen
/// facets. Minimal covering subsets have at most `r` elements, so subsets of
/// size up to `r` suffice for the maximum.
pub fn analytic_spread(ideal: &MonomialIdeal) -> Result<usize> {
    let np = compute_newton_polyhedron(ideal)?;
    analytic_spread_with(ideal, &np, ResourceCaps::default())
}

pub fn analytic_spread_with(
    ideal: &MonomialIdeal,
    np: &NewtonPolyhedron,
    caps: ResourceCaps,
) -> Result<usize> {
    let r = ideal.rank();
    let gens = ideal.generators();
    let q = np.facets().len();
    let mut subsets: u128 = 0;
    for s in 1..=r.min(q) {
        subsets += binomial(q as u128, s as u128);
    }
    if subsets > caps.max_face_subsets {
        return Err(Error::ResourceCap {
            what: "compact face enumeration",
            required: subsets,
            cap: caps.max_face_subsets,
        });
    }
    let supports: Vec<VarSet> = np.facets().iter().map(|h| h.support()).collect();
    let active_sets: Vec<Vec<usize>> = np
        .facets()
        .iter()
        .map(|h| {
            gens.iter()
                .enumerate()
                .filter(|(_, g)| h.active_at(g))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let full = VarSet::full(r);
    let mut best: Option<usize> = None;
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    for s in 1..=r.min(q) {
        for subset in (0..q).combinations(s) {
            let covered = subset
                .iter()
                .fold(VarSet::EMPTY, |acc, &j| acc.union(supports[j]));
            if covered != full {
                continue;
            }
            let mut active = active_sets[subset[0]].clone();
            for &j in &subset[1..] {
                active = intersect_sorted(&active, &active_sets[j]);
                if active.is_empty() {
                    break;
                }
            }
            if active.is_empty() || seen.insert(active.clone(), ()).is_some() {
                continue;
            }
            let base = &gens[active[0]];
            let rows: Vec<Vec<BigInt>> = active[1..]
                .iter()
                .map(|&g| {
                    gens[g]
                        .coords()
                        .iter()
                        .zip(base.coords())
                        .map(|(a, b)| BigInt::from(a - b))
                        .collect()
                })
                .collect();
            let dim = rank_bigint(rows);
            best = Some(best.map_or(dim + 1, |b: usize| b.max(dim + 1)));
        }
    }
    best.ok_or_else(|| {
        Error::InternalConsistency("no compact face found for a proper nonzero ideal".into())
    })
}

/// Size of a largest affinely independent subset of the given points.
pub fn affinely_independent_count(points: &[&ExponentVector]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let rows: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(base.coords())
                .map(|(a, b)| BigInt::from(a - b))
                .collect()
        })
        .collect();
    rank_bigint(rows) + 1
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
