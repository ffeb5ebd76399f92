//! Stability of associated primes and depth along closures of powers:
//! per-n scans, empirical stability indices with certification flags, the
//! certified index bounds, and the structural identities as executable
//! checks.

use crate::depth::DepthReport;
use crate::error::{Error, Result};
use crate::homology::FieldSpec;
use crate::ideal::{ExponentVector, MonomialIdeal, PrimeSupport};
use crate::newton::{self, ResourceCaps};
use crate::varset::VarSet;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

/// An empirical stability index from a finite scan window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "status", content = "value")]
pub enum EmpiricalIndex {
    /// Least start of a constant tail, with enough evidence to report.
    Known(u32),
    /// The window shows no stabilization evidence.
    Unknown,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PerN {
    pub n: u32,
    pub ass: Vec<PrimeSupport>,
    pub depth: usize,
}

/// Scan results with empirical indices and the certified bounds.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StabilityReport {
    pub per_n: Vec<PerN>,
    pub empirical_astab: EmpiricalIndex,
    pub empirical_astab_certified: bool,
    pub empirical_dstab: EmpiricalIndex,
    pub empirical_dstab_certified: bool,
    #[serde(with = "crate::io::bigint_string")]
    pub bound_n0: BigInt,
    #[serde(with = "crate::io::bigint_string")]
    pub bound_n1: BigInt,
    pub analytic_spread: usize,
    pub limit_depth: usize,
}

/// `Ass(R / closure(I^n))` for `n = 1..=n_max`.
pub fn ass_scan(
    ideal: &MonomialIdeal,
    n_max: u32,
    caps: ResourceCaps,
) -> Result<Vec<(u32, Vec<PrimeSupport>)>> {
    if ideal.is_unit() || ideal.is_zero() {
        return Err(Error::InvalidArgument(
            "associated-prime scan needs a proper nonzero ideal".into(),
        ));
    }
    let np = newton::compute_newton_polyhedron(ideal)?;
    (1..=n_max)
        .map(|n| {
            let closure = newton::closure_power_with(ideal, Some(&np), n, caps)?;
            Ok((n, closure.associated_primes()?))
        })
        .collect()
}

/// The certified bound past which `Ass` of the closure powers is constant:
/// `1` when the analytic spread is at most 2, otherwise
/// `l(l-1) d(I)^(l-2)` with `l` the analytic spread.
pub fn n0_bound(ideal: &MonomialIdeal) -> Result<BigInt> {
    let spread = newton::analytic_spread(ideal)?;
    Ok(n0_from_invariants(spread, ideal.max_gen_degree()))
}

pub fn n0_from_invariants(spread: usize, max_degree: i64) -> BigInt {
    if spread <= 2 {
        return BigInt::one();
    }
    BigInt::from(spread) * BigInt::from(spread - 1) * BigInt::from(max_degree).pow(spread as u32 - 2)
}

/// The certified bound past which the depth of the closure powers is
/// constant: `1` for at most two variables, otherwise
/// `ceil( r (r^2-1) r^(r/2) (r-1)^r d(I)^((r-2)(r+1)) )`.
///
/// For odd `r` the value `r^(r/2)` is irrational; the ceiling is computed
/// exactly as `ceil(sqrt(A^2 * r^r))` with a big-integer square root, where
/// `A` collects the integer factors.
pub fn n1_bound(ideal: &MonomialIdeal) -> Result<BigInt> {
    if ideal.is_unit() || ideal.is_zero() {
        return Err(Error::InvalidArgument(
            "the depth stability bound needs a proper nonzero ideal".into(),
        ));
    }
    Ok(n1_from_invariants(ideal.rank(), ideal.max_gen_degree()))
}

pub fn n1_from_invariants(rank: usize, max_degree: i64) -> BigInt {
    if rank <= 2 {
        return BigInt::one();
    }
    let r = rank as u32;
    let integer_part = BigInt::from(rank) * BigInt::from(rank * rank - 1)
        * BigInt::from(rank - 1).pow(r)
        * BigInt::from(max_degree).pow((r - 2) * (r + 1));
    if r % 2 == 0 {
        integer_part * BigInt::from(rank).pow(r / 2)
    } else {
        ceil_sqrt(&(&integer_part * &integer_part * BigInt::from(rank).pow(r)))
    }
}

fn ceil_sqrt(n: &BigInt) -> BigInt {
    let floor = n.sqrt();
    if &(&floor * &floor) == n {
        floor
    } else {
        floor + 1
    }
}

fn stable_tail_start<T: PartialEq>(values: &[T]) -> usize {
    let mut start = values.len() - 1;
    while start > 0 && values[start - 1] == values[start] {
        start -= 1;
    }
    start
}

/// Least `m` with `Ass` constant on `[m, n_max]`, plus a certification flag:
/// certified only when the window reaches the `n0` bound (constancy beyond
/// the window is then a theorem). Reports `Unknown` when the window shows no
/// repeated tail and no certification applies.
pub fn empirical_astab(
    ideal: &MonomialIdeal,
    n_max: u32,
    caps: ResourceCaps,
) -> Result<(EmpiricalIndex, bool, Vec<(u32, Vec<PrimeSupport>)>)> {
    let scan = ass_scan(ideal, n_max, caps)?;
    let sets: Vec<&Vec<PrimeSupport>> = scan.iter().map(|(_, s)| s).collect();
    let start = stable_tail_start(&sets);
    let m = scan[start].0;
    let certified = BigInt::from(n_max) >= n0_bound(ideal)?;
    let index = if certified || start + 1 < scan.len() {
        EmpiricalIndex::Known(m)
    } else {
        EmpiricalIndex::Unknown
    };
    Ok((index, certified, scan))
}

/// Least `m` with depth constant on `[m, n_max]` plus a certification flag:
/// certified when the window reaches the `n1` bound, or when the constant
/// already equals `dim R - l(I)` and the scanned depths are consistent with
/// the quasi-decreasing property.
pub fn empirical_dstab(
    ideal: &MonomialIdeal,
    n_max: u32,
    field: FieldSpec,
    caps: ResourceCaps,
) -> Result<(EmpiricalIndex, bool, Vec<(u32, DepthReport)>)> {
    let scan = crate::depth::depth_function_scan(ideal, n_max, field, caps)?;
    let depths: Vec<usize> = scan.iter().map(|(_, r)| r.depth).collect();
    let start = stable_tail_start(&depths);
    let m = scan[start].0;
    let limit = crate::depth::limit_depth(ideal)?;
    let quasi_ok = quasi_decreasing_consistent(&depths);
    let certified = BigInt::from(n_max) >= n1_bound(ideal)?
        || (depths[start] == limit && quasi_ok);
    let index = if certified || start + 1 < scan.len() {
        EmpiricalIndex::Known(m)
    } else {
        EmpiricalIndex::Unknown
    };
    Ok((index, certified, scan))
}

/// `depth(m) >= depth(m*n)` for every pair inside the window.
pub fn quasi_decreasing_consistent(depths: &[usize]) -> bool {
    let len = depths.len();
    for m in 1..=len {
        for n in 1..=len {
            if m * n <= len && depths[m - 1] < depths[m * n - 1] {
                return false;
            }
        }
    }
    true
}

/// Full stability report over the window `1..=n_max`.
pub fn stability_report(
    ideal: &MonomialIdeal,
    n_max: u32,
    field: FieldSpec,
    caps: ResourceCaps,
) -> Result<StabilityReport> {
    let (astab, astab_cert, ass) = empirical_astab(ideal, n_max, caps)?;
    let (dstab, dstab_cert, depths) = empirical_dstab(ideal, n_max, field, caps)?;
    let per_n = ass
        .into_iter()
        .zip(depths)
        .map(|((n, ass), (_, depth))| PerN {
            n,
            ass,
            depth: depth.depth,
        })
        .collect();
    let spread = newton::analytic_spread(ideal)?;
    Ok(StabilityReport {
        per_n,
        empirical_astab: astab,
        empirical_astab_certified: astab_cert,
        empirical_dstab: dstab,
        empirical_dstab_certified: dstab_cert,
        bound_n0: n0_bound(ideal)?,
        bound_n1: n1_bound(ideal)?,
        analytic_spread: spread,
        limit_depth: ideal.rank() - spread,
    })
}

/// `Ass` of the closure powers is nondecreasing across the scanned window.
pub fn check_ass_monotone(ideal: &MonomialIdeal, n_max: u32, caps: ResourceCaps) -> Result<bool> {
    let scan = ass_scan(ideal, n_max, caps)?;
    for window in scan.windows(2) {
        let (ref small, ref large) = (&window[0].1, &window[1].1);
        if !small.iter().all(|p| large.contains(p)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Restriction commutes with closure powers:
/// `closure(I^n)[F] = closure(I[F]^n)`.
pub fn check_restriction_commutes(
    ideal: &MonomialIdeal,
    dropped: VarSet,
    n: u32,
    caps: ResourceCaps,
) -> Result<bool> {
    let restricted = ideal.restrict(dropped);
    let lhs = newton::closure_power_with(ideal, None, n, caps)?.restrict(dropped);
    let rhs = if restricted.is_unit() {
        MonomialIdeal::unit(restricted.rank())
    } else {
        newton::closure_power_with(&restricted, None, n, caps)?
    };
    Ok(lhs == rhs)
}

/// Closure powers of `(I, y)` decompose by powers of the new variable:
/// `closure((I,y)^n) = sum over i of y^i * closure(I^(n-i))`.
pub fn check_extension_formula(ideal: &MonomialIdeal, n: u32, caps: ResourceCaps) -> Result<bool> {
    let extended = ideal.extend_with_variable();
    let lhs = newton::closure_power_with(&extended, None, n, caps)?;
    let r = ideal.rank();
    let np = newton::compute_newton_polyhedron(ideal)?;
    let mut gens: Vec<ExponentVector> = Vec::new();
    for i in 0..=n {
        let closure = newton::closure_power_with(ideal, Some(&np), n - i, caps)?;
        for g in closure.generators() {
            let mut v = g.0.clone();
            v.push(i as i64);
            gens.push(ExponentVector(v));
        }
    }
    let rhs = MonomialIdeal::minimalize(r + 1, gens)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(rank: usize, gens: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            rank,
            gens.iter().map(|g| ExponentVector(g.to_vec())).collect(),
        )
        .unwrap()
    }

    fn paper_ideal(d: i64) -> MonomialIdeal {
        ideal(3, &[&[d, 0, 0], &[1, d - 2, 1], &[0, d - 1, 1]])
    }

    fn caps() -> ResourceCaps {
        ResourceCaps::default()
    }

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn ass_scan_paper_family() {
        // (x,y,z) joins Ass exactly from n = d on
        let scan = ass_scan(&paper_ideal(3), 5, caps()).unwrap();
        for (n, ass) in scan {
            let has_max = ass.iter().any(|p| p.is_maximal(3));
            assert_eq!(has_max, n >= 3, "n={n}");
        }
    }

    #[test]
    fn ass_scan_stable_examples() {
        let scan = ass_scan(&ideal(2, &[&[1, 0], &[0, 1]]), 3, caps()).unwrap();
        assert!(scan
            .iter()
            .all(|(_, a)| a == &[PrimeSupport::new(VarSet::full(2))]));
        let scan = ass_scan(&ideal(2, &[&[1, 1]]), 3, caps()).unwrap();
        assert!(scan.iter().all(|(_, a)| a.len() == 2));
    }

    #[test]
    fn n0_examples() {
        // spread 3, degree 3
        assert_eq!(n0_bound(&paper_ideal(3)).unwrap(), BigInt::from(18));
        // spread <= 2
        assert_eq!(n0_bound(&ideal(2, &[&[1, 1]])).unwrap(), BigInt::one());
        // spread 3, degree 5
        assert_eq!(n0_bound(&paper_ideal(5)).unwrap(), BigInt::from(30));
    }

    #[test]
    fn n1_examples() {
        assert_eq!(n1_from_invariants(2, 7), BigInt::one());
        assert_eq!(n1_from_invariants(3, 3), BigInt::from(80811));
        // even rank: exact integer 4*15*16*81
        assert_eq!(n1_from_invariants(4, 1), BigInt::from(77760));
    }

    #[test]
    fn n1_ceiling_is_tight() {
        // value^2 >= A^2 r^r > (value-1)^2 for odd rank
        for (rank, degree) in [(3usize, 3i64), (3, 5), (5, 2)] {
            let value = n1_from_invariants(rank, degree);
            let r = rank as u32;
            let a = BigInt::from(rank)
                * BigInt::from(rank * rank - 1)
                * BigInt::from(rank - 1).pow(r)
                * BigInt::from(degree).pow((r - 2) * (r + 1));
            let target = &a * &a * BigInt::from(rank).pow(r);
            assert!(&value * &value >= target);
            let below = &value - BigInt::one();
            assert!(&below * &below < target);
        }
    }

    #[test]
    fn bounds_monotone_in_degree() {
        for d in 1..6i64 {
            assert!(n0_from_invariants(4, d) <= n0_from_invariants(4, d + 1));
            assert!(n1_from_invariants(4, d) <= n1_from_invariants(4, d + 1));
            assert!(n1_from_invariants(5, d) <= n1_from_invariants(5, d + 1));
        }
    }

    #[test]
    fn empirical_astab_examples() {
        // paper family: transition at 3, heuristic because n0 = 18 > 6
        let (idx, certified, _) = empirical_astab(&paper_ideal(3), 6, caps()).unwrap();
        assert_eq!(idx, EmpiricalIndex::Known(3));
        assert!(!certified);
        // (xy): spread 1 so n0 = 1; certified already at n_max = 2
        let (idx, certified, _) = empirical_astab(&ideal(2, &[&[1, 1]]), 2, caps()).unwrap();
        assert_eq!(idx, EmpiricalIndex::Known(1));
        assert!(certified);
        // (x, y) at n_max = 1: certified (n0 = 1)
        let (idx, certified, _) =
            empirical_astab(&ideal(2, &[&[1, 0], &[0, 1]]), 1, caps()).unwrap();
        assert_eq!(idx, EmpiricalIndex::Known(1));
        assert!(certified);
    }

    #[test]
    fn empirical_dstab_examples() {
        // paper family: depth settles at n = 3 on the limit value 0 = r - l
        let (idx, certified, _) = empirical_dstab(&paper_ideal(3), 5, q(), caps()).unwrap();
        assert_eq!(idx, EmpiricalIndex::Known(3));
        assert!(certified);
        // (xy): constant depth 1 = limit
        let (idx, certified, _) = empirical_dstab(&ideal(2, &[&[1, 1]]), 3, q(), caps()).unwrap();
        assert_eq!(idx, EmpiricalIndex::Known(1));
        assert!(certified);
        // (x,y,z): constant depth 0 = limit
        let (idx, certified, _) = empirical_dstab(
            &ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            2,
            q(),
            caps(),
        )
        .unwrap();
        assert_eq!(idx, EmpiricalIndex::Known(1));
        assert!(certified);
    }

    #[test]
    fn ass_monotone_examples() {
        assert!(check_ass_monotone(&paper_ideal(3), 5, caps()).unwrap());
        assert!(check_ass_monotone(&ideal(2, &[&[1, 1]]), 4, caps()).unwrap());
        assert!(check_ass_monotone(&ideal(3, &[&[2, 1, 0], &[0, 1, 2], &[1, 0, 1]]), 4, caps())
            .unwrap());
    }

    #[test]
    fn restriction_commutes_examples() {
        let i = ideal(3, &[&[3, 0, 0], &[1, 1, 1]]);
        assert!(check_restriction_commutes(&i, VarSet::EMPTY, 2, caps()).unwrap());
        assert!(check_restriction_commutes(&i, VarSet::from_indices([2]), 2, caps()).unwrap());
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(check_restriction_commutes(&i, VarSet::from_indices([0]), 2, caps()).unwrap());
    }

    #[test]
    fn extension_formula_examples() {
        assert!(check_extension_formula(&ideal(2, &[&[2, 0], &[0, 3]]), 1, caps()).unwrap());
        assert!(check_extension_formula(&ideal(2, &[&[2, 0], &[0, 3]]), 2, caps()).unwrap());
        assert!(check_extension_formula(&ideal(2, &[&[1, 0], &[0, 1]]), 3, caps()).unwrap());
    }

    #[test]
    fn quasi_decreasing_detector() {
        assert!(quasi_decreasing_consistent(&[2, 1, 1, 0, 1, 0]));
        // depth(2) > depth(1) is fine, but depth(4) > depth(2) is not
        assert!(!quasi_decreasing_consistent(&[1, 0, 2, 1]));
    }

    #[test]
    fn stability_report_assembles() {
        let report = stability_report(&paper_ideal(3), 4, q(), caps()).unwrap();
        assert_eq!(report.per_n.len(), 4);
        assert_eq!(report.analytic_spread, 3);
        assert_eq!(report.limit_depth, 0);
        assert_eq!(report.bound_n0, BigInt::from(18));
        assert_eq!(report.bound_n1, BigInt::from(80811));
        assert_eq!(report.per_n[2].depth, 0);
        assert!(report.per_n[2].ass.iter().any(|p| p.is_maximal(3)));
    }
}
