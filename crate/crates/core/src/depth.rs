//! Depth and local cohomology of `R/J` for a monomial ideal `J` through
//! degree complexes, together with an independent multigraded Betti-number
//! oracle. The two depth routes are always cross-checked; a disagreement is
//! surfaced as an internal-consistency error, never resolved silently.

use crate::error::{Error, Result};
use crate::homology::{FieldSpec, SimplicialComplex};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::newton::{self, NewtonPolyhedron, ResourceCaps};
use crate::varset::VarSet;
use serde::{Deserialize, Serialize};

/// How a depth value was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DepthMethod {
    Takayama,
    Betti,
}

/// A depth value together with its witness.
///
/// For the Takayama route the witness is a degree with nonvanishing local
/// cohomology in the reported homological index. For the Betti route it is a
/// multidegree carrying the top nonzero Betti number of `J`, whose index the
/// Auslander-Buchsbaum identity turns into the depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthReport {
    pub depth: usize,
    pub witness_degree: ExponentVector,
    pub witness_index: usize,
    pub method: DepthMethod,
}

/// The degree complex of `J` at a multidegree `alpha`: faces `F` disjoint
/// from the co-support such that the monomial escapes `J` localized at
/// `F` together with the co-support.
pub fn degree_complex(ideal: &MonomialIdeal, alpha: &ExponentVector) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let r = ideal.rank();
    if alpha.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            got: alpha.len(),
        });
    }
    let co_support = alpha.co_support();
    let allowed = co_support.complement(r);
    let mut faces = Vec::new();
    for face in allowed.subsets() {
        if !monomial_in_localization(ideal, alpha, face.union(co_support)) {
            faces.push(face);
        }
    }
    SimplicialComplex::generated_by(r, faces)
}

/// `x^alpha in J R_G`: some generator divides `x^alpha` on the coordinates
/// outside `G` (the inverted variables are unconstrained).
fn monomial_in_localization(ideal: &MonomialIdeal, alpha: &ExponentVector, inverted: VarSet) -> bool {
    ideal.generators().iter().any(|g| {
        g.coords()
            .iter()
            .zip(alpha.coords())
            .enumerate()
            .all(|(i, (&gi, &ai))| inverted.contains(i) || gi <= ai)
    })
}

/// The degree complex of the closure of `I^n` at a nonnegative degree, read
/// off the facet system: it is generated by the complements of the supports
/// of the facets whose (n-scaled) inequality fails at `alpha`.
pub fn degree_complex_closure_power(
    np: &NewtonPolyhedron,
    n: u32,
    alpha: &ExponentVector,
) -> Result<SimplicialComplex> {
    let r = np.rank();
    if alpha.len() != r {
        return Err(Error::DimensionMismatch {
            expected: r,
            got: alpha.len(),
        });
    }
    if !alpha.is_nonnegative() {
        return Err(Error::InvalidArgument(
            "the facet description of the degree complex needs a nonnegative degree".into(),
        ));
    }
    let faces: Vec<VarSet> = np
        .facets()
        .iter()
        .filter(|h| !h.satisfied_at(alpha, n))
        .map(|h| h.support().complement(r))
        .collect();
    SimplicialComplex::generated_by(r, faces)
}

/// `dim_k` of the `alpha`-graded piece of the i-th local cohomology of `R/J`,
/// via the degree complex: the dimension of its reduced homology in index
/// `i - |co-support| - 1`.
pub fn local_cohomology_dim(
    ideal: &MonomialIdeal,
    i: i64,
    alpha: &ExponentVector,
    field: FieldSpec,
) -> Result<usize> {
    let complex = degree_complex(ideal, alpha)?;
    let index = i - alpha.co_support().len() as i64 - 1;
    Ok(complex
        .reduced_homology_dims(field)
        .get(&index)
        .copied()
        .unwrap_or(0))
}

/// Largest exponent of each variable over the minimal generators.
fn exponent_profile(ideal: &MonomialIdeal) -> Vec<i64> {
    ideal.exponent_bound().0
}

/// Certified depth of `R/J` from multigraded Betti numbers of `J`.
///
/// The Betti number of `J` in homological index `i` and multidegree `alpha`
/// is the reduced homology in index `i-1` of the upper Koszul complex
/// `{F : alpha - chi_F >= 0 and x^(alpha - chi_F) in J}`; all nonzero Betti
/// degrees divide the lcm of the generators, so the divisor lattice is a
/// complete search space. Auslander-Buchsbaum then gives
/// `depth R/J = r - (max nonzero index + 1)`.
pub fn depth_betti(ideal: &MonomialIdeal, field: FieldSpec) -> Result<DepthReport> {
    if ideal.is_unit() || ideal.is_zero() {
        return Err(Error::InvalidArgument(
            "depth of R/J needs a proper nonzero ideal".into(),
        ));
    }
    let r = ideal.rank();
    let profile = exponent_profile(ideal);
    let mut best: Option<(usize, ExponentVector)> = None;
    let mut cursor = vec![0i64; r];
    loop {
        let alpha = ExponentVector(cursor.clone());
        let support = alpha.support();
        let mut faces = Vec::new();
        for face in support.subsets() {
            let shifted = ExponentVector(
                alpha
                    .coords()
                    .iter()
                    .enumerate()
                    .map(|(i, &a)| if face.contains(i) { a - 1 } else { a })
                    .collect(),
            );
            if ideal.contains_monomial(&shifted) {
                faces.push(face);
            }
        }
        if !faces.is_empty() {
            let koszul = SimplicialComplex::generated_by(r, faces)?;
            for (index, dim) in koszul.reduced_homology_dims(field) {
                if dim == 0 {
                    continue;
                }
                let betti_index = (index + 1) as usize;
                let better = match &best {
                    None => true,
                    Some((bi, ba)) => {
                        betti_index > *bi || (betti_index == *bi && alpha < *ba)
                    }
                };
                if better {
                    best = Some((betti_index, alpha.clone()));
                }
            }
        }
        if !advance(&mut cursor, &profile) {
            break;
        }
    }
    let (top_index, witness) = best.ok_or_else(|| {
        Error::InternalConsistency("a proper nonzero ideal has a nonzero Betti number".into())
    })?;
    Ok(DepthReport {
        depth: r - (top_index + 1),
        witness_degree: witness,
        witness_index: top_index,
        method: DepthMethod::Betti,
    })
}

fn advance(cursor: &mut [i64], bound: &[i64]) -> bool {
    for i in 0..cursor.len() {
        if cursor[i] < bound[i] {
            cursor[i] += 1;
            return true;
        }
        cursor[i] = 0;
    }
    false
}

/// Depth of `R/J` by scanning Takayama degrees.
///
/// For each co-support `G` the scan pins the negative coordinates at -1 and
/// runs the nonnegative coordinates over `[0, rho_i - 1]`, where `rho_i` is
/// the largest exponent of `x_i` among the generators: local cohomology
/// vanishes in degrees with a coordinate at or above `rho_i` outside the
/// co-support, and the degree complex only depends on the co-support and
/// the nonnegative part, so the region is exhaustive. The result is
/// cross-checked against the Betti oracle.
pub fn depth_takayama(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    search_box: Option<&[i64]>,
) -> Result<DepthReport> {
    if ideal.is_unit() || ideal.is_zero() {
        return Err(Error::InvalidArgument(
            "depth of R/J needs a proper nonzero ideal".into(),
        ));
    }
    let r = ideal.rank();
    let caps: Vec<i64> = match search_box {
        Some(caps) => {
            if caps.len() != r {
                return Err(Error::DimensionMismatch {
                    expected: r,
                    got: caps.len(),
                });
            }
            caps.to_vec()
        }
        None => exponent_profile(ideal).iter().map(|&rho| rho - 1).collect(),
    };
    let mut best: Option<(usize, ExponentVector)> = None;
    for co_support in VarSet::full(r).subsets() {
        if caps
            .iter()
            .enumerate()
            .any(|(i, &c)| !co_support.contains(i) && c < 0)
        {
            // a coordinate with an empty nonnegative range forces membership
            // in the co-support
            continue;
        }
        let mut cursor: Vec<i64> = (0..r)
            .map(|i| if co_support.contains(i) { -1 } else { 0 })
            .collect();
        loop {
            let alpha = ExponentVector(cursor.clone());
            let complex = degree_complex(ideal, &alpha)?;
            let shift = co_support.len() as i64 + 1;
            for (index, dim) in complex.reduced_homology_dims(field) {
                if dim == 0 {
                    continue;
                }
                let i = index + shift;
                debug_assert!(i >= 0);
                let i = i as usize;
                let better = match &best {
                    None => true,
                    Some((bi, ba)) => i < *bi || (i == *bi && alpha < *ba),
                };
                if better {
                    best = Some((i, alpha.clone()));
                }
            }
            // advance only the non-co-support coordinates
            let mut advanced = false;
            for i in 0..r {
                if co_support.contains(i) {
                    continue;
                }
                if cursor[i] < caps[i] {
                    cursor[i] += 1;
                    advanced = true;
                    break;
                }
                cursor[i] = 0;
            }
            if !advanced {
                break;
            }
        }
    }
    let (depth, witness) = best.ok_or_else(|| {
        Error::InternalConsistency(
            "no Takayama witness found inside the search region".into(),
        )
    })?;
    let report = DepthReport {
        depth,
        witness_degree: witness,
        witness_index: depth,
        method: DepthMethod::Takayama,
    };
    let oracle = depth_betti(ideal, field)?;
    if oracle.depth != report.depth {
        return Err(Error::InternalConsistency(format!(
            "depth methods disagree on {ideal:?}: takayama={} (witness {:?}), betti={} (witness {:?})",
            report.depth, report.witness_degree, oracle.depth, oracle.witness_degree
        )));
    }
    Ok(report)
}

/// Depth of the closures of the powers `I^n` for `n = 1..=n_max`.
pub fn depth_function_scan(
    ideal: &MonomialIdeal,
    n_max: u32,
    field: FieldSpec,
    caps: ResourceCaps,
) -> Result<Vec<(u32, DepthReport)>> {
    if ideal.is_unit() || ideal.is_zero() {
        return Err(Error::InvalidArgument(
            "depth scan needs a proper nonzero ideal".into(),
        ));
    }
    let np = newton::compute_newton_polyhedron(ideal)?;
    (1..=n_max)
        .map(|n| {
            let closure = newton::closure_power_with(ideal, Some(&np), n, caps)?;
            Ok((n, depth_takayama(&closure, field, None)?))
        })
        .collect()
}

/// The limit value of the depth of the closure powers: `dim R - l(I)`.
pub fn limit_depth(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.rank() - newton::analytic_spread(ideal)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::{closure_power, compute_newton_polyhedron};
    use std::collections::BTreeMap;

    fn ev(coords: &[i64]) -> ExponentVector {
        ExponentVector(coords.to_vec())
    }

    fn ideal(rank: usize, gens: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(rank, gens.iter().map(|g| ev(g)).collect()).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn degree_complex_examples() {
        // J = (xy), alpha = (-1, 0): only the empty face survives
        let c = degree_complex(&ideal(2, &[&[1, 1]]), &ev(&[-1, 0])).unwrap();
        assert!(c.is_empty_complex());
        // full co-support: localizing at every variable puts the monomial in
        // any nonzero ideal, so no face survives at all
        let c = degree_complex(&ideal(2, &[&[1, 1]]), &ev(&[-1, -2])).unwrap();
        assert!(c.is_void());
        // closure of (x^2, y^3) at (1,1): empty complex
        let j = closure_power(&ideal(2, &[&[2, 0], &[0, 3]]), 1).unwrap();
        let c = degree_complex(&j, &ev(&[1, 1])).unwrap();
        assert!(c.is_empty_complex());
    }

    #[test]
    fn degree_complex_from_facets_matches_direct() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let np = compute_newton_polyhedron(&i).unwrap();
        for n in 1..=3u32 {
            let closure = closure_power(&i, n).unwrap();
            for x in 0..=(3 * n as i64) {
                for y in 0..=(3 * n as i64) {
                    let alpha = ev(&[x, y]);
                    let from_facets = degree_complex_closure_power(&np, n, &alpha).unwrap();
                    let direct = degree_complex(&closure, &alpha).unwrap();
                    assert_eq!(from_facets, direct, "n={n} alpha={alpha:?}");
                }
            }
        }
    }

    #[test]
    fn degree_complex_closure_power_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let np = compute_newton_polyhedron(&i).unwrap();
        // deep inside: void
        let c = degree_complex_closure_power(&np, 1, &ev(&[5, 5])).unwrap();
        assert!(c.is_void());
        // (1,1) fails only the full-support facet: empty complex
        let c = degree_complex_closure_power(&np, 1, &ev(&[1, 1])).unwrap();
        assert!(c.is_empty_complex());
        // maximal ideal, alpha = (n-1, 0): the sum facet fails, empty complex
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        let np = compute_newton_polyhedron(&m).unwrap();
        let c = degree_complex_closure_power(&np, 3, &ev(&[2, 0])).unwrap();
        assert!(c.is_empty_complex());
    }

    #[test]
    fn local_cohomology_examples() {
        let j = ideal(2, &[&[1, 1]]);
        assert_eq!(local_cohomology_dim(&j, 1, &ev(&[-1, 0]), q()).unwrap(), 1);
        assert_eq!(local_cohomology_dim(&j, 0, &ev(&[0, 0]), q()).unwrap(), 0);
        assert_eq!(local_cohomology_dim(&j, 0, &ev(&[-1, 0]), q()).unwrap(), 0);
        assert_eq!(local_cohomology_dim(&j, 5, &ev(&[-1, 0]), q()).unwrap(), 0);
    }

    #[test]
    fn betti_depth_examples() {
        // hypersurface
        assert_eq!(depth_betti(&ideal(2, &[&[1, 1]]), q()).unwrap().depth, 1);
        // maximal ideal
        assert_eq!(
            depth_betti(&ideal(2, &[&[1, 0], &[0, 1]]), q()).unwrap().depth,
            0
        );
        // closure of (x^2, y^3): depth 0, witnessed at xy
        let j = closure_power(&ideal(2, &[&[2, 0], &[0, 3]]), 1).unwrap();
        let report = depth_betti(&j, q()).unwrap();
        assert_eq!(report.depth, 0);
        assert_eq!(report.witness_index, 1);
    }

    #[test]
    fn takayama_depth_examples() {
        // maximal ideal in three variables: depth 0
        let report = depth_takayama(&ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), q(), None)
            .unwrap();
        assert_eq!(report.depth, 0);
        assert_eq!(report.witness_degree, ev(&[0, 0, 0]));
        // hypersurface (xy): depth 1 with witness (-1, 0)
        let report = depth_takayama(&ideal(2, &[&[1, 1]]), q(), None).unwrap();
        assert_eq!(report.depth, 1);
        assert_eq!(report.witness_degree, ev(&[-1, 0]));
        // principal ideal in a ring with an unused variable
        let report = depth_takayama(&ideal(2, &[&[1, 0]]), q(), None).unwrap();
        assert_eq!(report.depth, 1);
    }

    #[test]
    fn quotient_by_variable_power_has_full_depth() {
        // R/(x^2) in three variables: depth 2
        let report = depth_takayama(&ideal(3, &[&[2, 0, 0]]), q(), None).unwrap();
        assert_eq!(report.depth, 2);
        assert_eq!(
            depth_betti(&ideal(3, &[&[2, 0, 0]]), q()).unwrap().depth,
            2
        );
    }

    #[test]
    fn depth_scan_of_paper_family_d3() {
        // depths of the closures of (x^3, xyz, y^2 z)^n: 1, 1, 0, 0
        let i = ideal(3, &[&[3, 0, 0], &[1, 1, 1], &[0, 2, 1]]);
        let scan = depth_function_scan(&i, 4, q(), ResourceCaps::default()).unwrap();
        let depths: Vec<usize> = scan.iter().map(|(_, r)| r.depth).collect();
        assert_eq!(depths, vec![1, 1, 0, 0]);
    }

    #[test]
    fn depth_scan_maximal_ideal() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        let scan = depth_function_scan(&i, 3, q(), ResourceCaps::default()).unwrap();
        assert!(scan.iter().all(|(_, r)| r.depth == 0));
    }

    #[test]
    fn limit_depth_examples() {
        assert_eq!(
            limit_depth(&ideal(3, &[&[3, 0, 0], &[1, 1, 1], &[0, 2, 1]])).unwrap(),
            0
        );
        assert_eq!(limit_depth(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap(), 0);
        assert_eq!(limit_depth(&ideal(2, &[&[1, 1]])).unwrap(), 1);
    }

    #[test]
    fn scaling_invariance_of_degree_complexes() {
        // the degree complex of the closure at alpha equals that of the
        // closure of the n-th power at n*alpha, for nonnegative alpha
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        let c1 = closure_power(&i, 1).unwrap();
        for n in 2..=3u32 {
            let cn = closure_power(&i, n).unwrap();
            for x in 0..=4i64 {
                for y in 0..=4i64 {
                    let alpha = ev(&[x, y]);
                    let scaled = alpha.scale(n as i64);
                    assert_eq!(
                        degree_complex(&c1, &alpha).unwrap(),
                        degree_complex(&cn, &scaled).unwrap(),
                        "n={n} alpha={alpha:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn depth_report_bounds() {
        for i in [
            ideal(2, &[&[1, 1]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]),
            ideal(3, &[&[3, 0, 0], &[1, 1, 1], &[0, 2, 1]]),
        ] {
            let report = depth_takayama(&i, q(), None).unwrap();
            let (_, dim) = i.height_and_dim().unwrap();
            assert!(report.depth <= dim, "depth exceeds dim for {i:?}");
        }
    }

    #[test]
    fn homology_map_shape() {
        let j = ideal(2, &[&[1, 1]]);
        let c = degree_complex(&j, &ev(&[-1, 0])).unwrap();
        assert_eq!(
            c.reduced_homology_dims(q()),
            BTreeMap::from([(-1, 1)])
        );
    }
}
