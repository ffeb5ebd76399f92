//! Cohen-Macaulay and equimultiplicity classification of integral closures
//! of powers, with the square-free complete-intersection criterion and the
//! supporting structural checks.

use crate::depth::{depth_betti, DepthReport};
use crate::error::{Error, Result};
use crate::homology::{stanley_reisner_complex, stanley_reisner_ideal, FieldSpec, SimplicialComplex};
use crate::ideal::{intersect_all, IrreducibleComponent, MonomialIdeal};
use crate::io::{default_variables, format_monomial};
use crate::newton::{self, ResourceCaps};
use crate::varset::VarSet;
use serde::{Deserialize, Serialize};

/// `R/J` is Cohen-Macaulay: certified Betti-based depth equals dimension.
pub fn is_cm(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(true);
    }
    let (_, dim) = ideal.height_and_dim()?;
    Ok(depth_betti(ideal, field)?.depth == dim)
}

/// Equimultiplicity: the analytic spread equals the height.
pub fn is_equimultiple(ideal: &MonomialIdeal) -> Result<bool> {
    let (height, _) = ideal.height_and_dim()?;
    Ok(newton::analytic_spread(ideal)? == height)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CmPerN {
    pub n: u32,
    pub depth: usize,
    pub dim: usize,
    pub is_cm: bool,
    pub witness_degree: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub outcome: CheckOutcome,
}

/// Full classification of an ideal over a scan window.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CMClassification {
    pub ideal: String,
    pub rank: usize,
    pub height: usize,
    pub dim: usize,
    pub analytic_spread: usize,
    pub equimultiple: bool,
    pub squarefree: bool,
    /// Present exactly when the ideal is square-free.
    pub complete_intersection: Option<bool>,
    pub per_n: Vec<CmPerN>,
    pub theorem_consistency: Vec<NamedCheck>,
}

/// Classify `I`: per-n Cohen-Macaulay verdicts for the closures of the powers
/// over `1..=n_window`, equimultiplicity, and (for square-free input) the
/// complete-intersection equivalences. Any verdict combination that
/// contradicts the classification theorems is raised as an
/// internal-consistency error rather than reported.
pub fn classify(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    n_window: u32,
    caps: ResourceCaps,
) -> Result<CMClassification> {
    if ideal.is_unit() || ideal.is_zero() {
        return Err(Error::InvalidArgument(
            "classification needs a proper nonzero ideal".into(),
        ));
    }
    let (height, dim) = ideal.height_and_dim()?;
    let np = newton::compute_newton_polyhedron(ideal)?;
    let spread = newton::analytic_spread_with(ideal, &np, caps)?;
    let equimultiple = spread == height;
    let squarefree = ideal.is_squarefree();
    let complete_intersection = if squarefree {
        Some(ideal.is_complete_intersection_squarefree()?)
    } else {
        None
    };

    let mut per_n = Vec::new();
    for n in 1..=n_window {
        let closure = newton::closure_power_with(ideal, Some(&np), n, caps)?;
        let report: DepthReport = depth_betti(&closure, field)?;
        let (_, closure_dim) = closure.height_and_dim()?;
        per_n.push(CmPerN {
            n,
            depth: report.depth,
            dim: closure_dim,
            is_cm: report.depth == closure_dim,
            witness_degree: report.witness_degree.coords().to_vec(),
        });
    }

    let mut checks = Vec::new();
    // equimultiple ideals have Cohen-Macaulay closure powers at every n
    if equimultiple {
        if let Some(bad) = per_n.iter().find(|p| !p.is_cm) {
            return Err(Error::InternalConsistency(format!(
                "equimultiple ideal {ideal:?} has a non-CM closure power at n = {}",
                bad.n
            )));
        }
        checks.push(NamedCheck {
            name: "equimultiple_implies_cm_every_n".into(),
            outcome: CheckOutcome::Pass,
        });
    } else {
        checks.push(NamedCheck {
            name: "equimultiple_implies_cm_every_n".into(),
            outcome: CheckOutcome::NotApplicable,
        });
    }
    if squarefree {
        let ci = complete_intersection.expect("computed for square-free input");
        if ci != equimultiple {
            return Err(Error::InternalConsistency(format!(
                "square-free ideal {ideal:?}: complete intersection = {ci} but equimultiple = {equimultiple}"
            )));
        }
        checks.push(NamedCheck {
            name: "squarefree_ci_iff_equimultiple".into(),
            outcome: CheckOutcome::Pass,
        });
        // Cohen-Macaulayness of the closure cube characterizes complete
        // intersections; from n = 3 on the verdict is constant
        let mut cm3_applicable = false;
        for p in per_n.iter().filter(|p| p.n >= 3) {
            cm3_applicable = true;
            if p.is_cm != ci {
                return Err(Error::InternalConsistency(format!(
                    "square-free ideal {ideal:?}: closure power n = {} is_cm = {} but complete intersection = {ci}",
                    p.n, p.is_cm
                )));
            }
        }
        checks.push(NamedCheck {
            name: "squarefree_cm_from_3_iff_ci".into(),
            outcome: if cm3_applicable {
                CheckOutcome::Pass
            } else {
                CheckOutcome::NotApplicable
            },
        });
    }

    Ok(CMClassification {
        ideal: ideal
            .generators()
            .iter()
            .map(|g| format_monomial(g, &default_variables(ideal.rank())))
            .collect::<Vec<_>>()
            .join(", "),
        rank: ideal.rank(),
        height,
        dim,
        analytic_spread: spread,
        equimultiple,
        squarefree,
        complete_intersection,
        per_n,
        theorem_consistency: checks,
    })
}

/// The n-th symbolic power of a square-free ideal: the intersection of the
/// n-th powers of its minimal primes.
pub fn symbolic_power_squarefree(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    if ideal.is_unit() || ideal.is_zero() {
        return Err(Error::InvalidArgument(
            "symbolic powers need a proper nonzero ideal".into(),
        ));
    }
    let primes = ideal.minimal_primes()?;
    let powers: Vec<MonomialIdeal> = primes
        .iter()
        .map(|p| p.to_ideal(ideal.rank()).pow(n))
        .collect();
    Ok(intersect_all(ideal.rank(), &powers))
}

/// Outcome of a hypothesis-carrying structural check: failing the hypotheses
/// is reported distinctly from the statement being false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "detail")]
pub enum HypotheticalCheck {
    Holds,
    Fails(String),
    HypothesesNotSatisfied(String),
}

/// The closure of a power of an unmixed ideal decomposes along any
/// irredundant primary decomposition, provided the closure stays unmixed:
/// `closure(I^n) = intersection of closure(Q_j^n)`.
pub fn check_prim_dec_closure(
    ideal: &MonomialIdeal,
    n: u32,
    caps: ResourceCaps,
) -> Result<HypotheticalCheck> {
    if ideal.is_unit() || ideal.is_zero() {
        return Err(Error::InvalidArgument(
            "the decomposition check needs a proper nonzero ideal".into(),
        ));
    }
    if !ideal.is_unmixed()? {
        return Ok(HypotheticalCheck::HypothesesNotSatisfied(
            "the ideal is not unmixed".into(),
        ));
    }
    let closure = newton::closure_power_with(ideal, None, n, caps)?;
    if !closure.is_unmixed()? {
        return Ok(HypotheticalCheck::HypothesesNotSatisfied(format!(
            "the closure of the power n = {n} is not unmixed"
        )));
    }
    let primaries = primary_decomposition(ideal)?;
    let closures: Vec<MonomialIdeal> = primaries
        .iter()
        .map(|q| newton::closure_power_with(q, None, n, caps))
        .collect::<Result<_>>()?;
    let intersection = intersect_all(ideal.rank(), &closures);
    if intersection == closure {
        Ok(HypotheticalCheck::Holds)
    } else {
        let witness = closure
            .generators()
            .iter()
            .find(|g| !intersection.contains_monomial(g))
            .or_else(|| {
                intersection
                    .generators()
                    .iter()
                    .find(|g| !closure.contains_monomial(g))
            })
            .expect("unequal ideals differ on a generator");
        Ok(HypotheticalCheck::Fails(format!(
            "witness monomial exponent {:?}",
            witness.coords()
        )))
    }
}

/// Irredundant primary decomposition: irreducible components grouped and
/// intersected by their radical.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    let comps: Vec<IrreducibleComponent> = ideal.irreducible_decomposition()?;
    let mut by_radical: Vec<(VarSet, Vec<MonomialIdeal>)> = Vec::new();
    for c in comps {
        let support = c.support();
        let piece = c.to_ideal(ideal.rank());
        match by_radical.iter_mut().find(|(s, _)| *s == support) {
            Some((_, pieces)) => pieces.push(piece),
            None => by_radical.push((support, vec![piece])),
        }
    }
    Ok(by_radical
        .into_iter()
        .map(|(_, pieces)| intersect_all(ideal.rank(), &pieces))
        .collect())
}

/// If the closure of the n-th power of a square-free ideal is CM, the same
/// holds for the ideal of every vertex link (in its smaller ring); verifies
/// that vertex by vertex.
pub fn check_link_cm(
    ideal: &MonomialIdeal,
    n: u32,
    field: FieldSpec,
    caps: ResourceCaps,
) -> Result<HypotheticalCheck> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !ideal.is_zero() {
        let closure = newton::closure_power_with(ideal, None, n, caps)?;
        if !is_cm(&closure, field)? {
            return Ok(HypotheticalCheck::HypothesesNotSatisfied(format!(
                "the closure of the power n = {n} is not Cohen-Macaulay"
            )));
        }
    }
    let complex = stanley_reisner_complex(ideal)?;
    for vertex in complex.vertices() {
        let link = complex
            .link(VarSet::singleton(vertex))
            .expect("vertices are faces");
        let link_ideal = stanley_reisner_ideal(&link);
        if link_ideal.is_zero() || link_ideal.rank() == 0 {
            continue;
        }
        let link_closure = newton::closure_power_with(&link_ideal, None, n, caps)?;
        if !is_cm(&link_closure, field)? {
            return Ok(HypotheticalCheck::Fails(format!(
                "link at vertex {vertex} has a non-CM closure power"
            )));
        }
    }
    Ok(HypotheticalCheck::Holds)
}

/// Shapes a low-dimensional complex can take when its closure powers stay CM.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowDimShape {
    OneVertex,
    TwoVertices,
    Edge,
    PathOfLengthTwo,
    Triangle,
    FourCycle,
    Other,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LowDimVerdict {
    pub closure_is_cm: bool,
    pub shape: LowDimShape,
    pub complete_intersection: bool,
    /// True when the verdict is consistent with the low-dimension lemmas:
    /// a CM closure power forces one of the listed shapes, all of which are
    /// complete intersections.
    pub consistent: bool,
}

/// For a complex of dimension 0 (with n >= 2) or 1 (with n >= 3): computes
/// whether the closure of the n-th power of the Stanley-Reisner ideal is CM
/// and matches the shape against the classification: at most two vertices in
/// dimension 0; an edge, a path of length two, a triangle or a four-cycle in
/// dimension 1.
pub fn low_dim_classification(
    complex: &SimplicialComplex,
    n: u32,
    field: FieldSpec,
    caps: ResourceCaps,
) -> Result<LowDimVerdict> {
    let dim = complex
        .dim()
        .ok_or_else(|| Error::InvalidArgument("the void complex has no dimension".into()))?;
    match dim {
        0 if n >= 2 => {}
        1 if n >= 3 => {}
        0 | 1 => {
            return Err(Error::InvalidArgument(format!(
                "n = {n} is below the classification threshold for dimension {dim}"
            )))
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "classification applies to dimensions 0 and 1, not {dim}"
            )))
        }
    }
    let ideal = stanley_reisner_ideal(complex);
    let closure = newton::closure_power_with(&ideal, None, n, caps)?;
    let closure_is_cm = is_cm(&closure, field)?;
    let shape = classify_shape(complex, dim);
    let complete_intersection = ideal.is_complete_intersection_squarefree()?;
    let shape_allowed = !matches!(shape, LowDimShape::Other);
    let consistent = !closure_is_cm || (shape_allowed && complete_intersection);
    Ok(LowDimVerdict {
        closure_is_cm,
        shape,
        complete_intersection,
        consistent,
    })
}

fn classify_shape(complex: &SimplicialComplex, dim: i64) -> LowDimShape {
    let vertices = complex.vertices();
    if dim == 0 {
        return match vertices.len() {
            1 => LowDimShape::OneVertex,
            2 => LowDimShape::TwoVertices,
            _ => LowDimShape::Other,
        };
    }
    // dimension 1: a graph; isolated vertices (mixed facet sizes) fall out
    if complex.facets().iter().any(|f| f.len() != 2) {
        return LowDimShape::Other;
    }
    let edges = complex.facets();
    let degree_of = |v: usize| edges.iter().filter(|e| e.contains(v)).count();
    let degrees: Vec<usize> = vertices.iter().map(|&v| degree_of(v)).collect();
    if !is_connected(&vertices, edges) {
        return LowDimShape::Other;
    }
    match (vertices.len(), edges.len()) {
        (2, 1) => LowDimShape::Edge,
        (3, 2) if degrees.iter().filter(|&&d| d == 1).count() == 2 => LowDimShape::PathOfLengthTwo,
        (3, 3) => LowDimShape::Triangle,
        (4, 4) if degrees.iter().all(|&d| d == 2) => LowDimShape::FourCycle,
        _ => LowDimShape::Other,
    }
}

fn is_connected(vertices: &[usize], edges: &[VarSet]) -> bool {
    let Some(&start) = vertices.first() else {
        return true;
    };
    let mut reached = VarSet::singleton(start);
    loop {
        let mut grew = false;
        for e in edges {
            if e.intersects(reached) && !e.is_subset_of(reached) {
                reached = reached.union(*e);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    vertices.iter().all(|&v| reached.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ExponentVector;

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

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn caps() -> ResourceCaps {
        ResourceCaps::default()
    }

    #[test]
    fn is_cm_examples() {
        assert!(is_cm(&ideal(2, &[&[1, 0], &[0, 1]]), q()).unwrap());
        let c2 = newton::closure_power(&paper_ideal(3), 2).unwrap();
        assert!(is_cm(&c2, q()).unwrap());
        let c3 = newton::closure_power(&paper_ideal(3), 3).unwrap();
        assert!(!is_cm(&c3, q()).unwrap());
    }

    #[test]
    fn equimultiple_examples() {
        assert!(is_equimultiple(&ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap());
        assert!(!is_equimultiple(&paper_ideal(3)).unwrap());
        assert!(is_equimultiple(&ideal(2, &[&[1, 1]])).unwrap());
    }

    #[test]
    fn classify_square_free_ci() {
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let report = classify(&i, q(), 4, caps()).unwrap();
        assert!(report.equimultiple);
        assert_eq!(report.complete_intersection, Some(true));
        assert!(report.per_n.iter().all(|p| p.is_cm));
    }

    #[test]
    fn classify_square_free_non_ci() {
        // (xy, yz): the path; closure powers from 3 on are not CM
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let report = classify(&i, q(), 4, caps()).unwrap();
        assert_eq!(report.complete_intersection, Some(false));
        assert!(!report.equimultiple);
        assert!(report.per_n.iter().filter(|p| p.n >= 3).all(|p| !p.is_cm));
    }

    #[test]
    fn classify_paper_family() {
        for d in [3i64, 4] {
            let report = classify(&paper_ideal(d), q(), d as u32 + 1, caps()).unwrap();
            assert_eq!(report.height, 2);
            assert_eq!(report.analytic_spread, 3);
            assert!(!report.equimultiple);
            for p in &report.per_n {
                assert_eq!(p.is_cm, (p.n as i64) < d, "d={d} n={}", p.n);
            }
        }
    }

    #[test]
    fn symbolic_powers() {
        // triangle edge ideal: xyz joins the second symbolic power
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let sym2 = symbolic_power_squarefree(&i, 2).unwrap();
        let xyz = ExponentVector(vec![1, 1, 1]);
        assert!(sym2.contains_monomial(&xyz));
        assert!(!i.pow(2).contains_monomial(&xyz));
        // first symbolic power is the ideal
        assert_eq!(symbolic_power_squarefree(&i, 1).unwrap(), i);
        // principal square-free: (xy)^(3) = (x^3) ∩ (y^3) = (x^3 y^3)
        let p = ideal(2, &[&[1, 1]]);
        assert_eq!(
            symbolic_power_squarefree(&p, 3).unwrap(),
            ideal(2, &[&[3, 3]])
        );
        assert!(symbolic_power_squarefree(&ideal(1, &[&[2]]), 2).is_err());
    }

    #[test]
    fn symbolic_contains_ordinary() {
        for i in [
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]),
        ] {
            for n in 1..=3 {
                let sym = symbolic_power_squarefree(&i, n).unwrap();
                assert!(i.pow(n).is_subideal_of(&sym));
            }
        }
        // equality for a complete intersection
        let ci = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        for n in 1..=3 {
            assert_eq!(symbolic_power_squarefree(&ci, n).unwrap(), ci.pow(n));
        }
    }

    #[test]
    fn prim_dec_closure_examples() {
        // square-free complete intersection, n = 2
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(
            check_prim_dec_closure(&i, 2, caps()).unwrap(),
            HypotheticalCheck::Holds
        );
        // primary ideal: single component
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            check_prim_dec_closure(&i, 3, caps()).unwrap(),
            HypotheticalCheck::Holds
        );
        // triangle edge ideal: unmixed itself, but the closure of the square
        // picks up the maximal ideal (witness xyz), so the hypotheses fail
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert!(matches!(
            check_prim_dec_closure(&i, 2, caps()).unwrap(),
            HypotheticalCheck::HypothesesNotSatisfied(_)
        ));
        // a principal square-free ideal stays unmixed at every power
        let i = ideal(2, &[&[1, 1]]);
        assert_eq!(
            check_prim_dec_closure(&i, 3, caps()).unwrap(),
            HypotheticalCheck::Holds
        );
        // mixed ideal: hypotheses fail
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(matches!(
            check_prim_dec_closure(&i, 2, caps()).unwrap(),
            HypotheticalCheck::HypothesesNotSatisfied(_)
        ));
    }

    #[test]
    fn link_cm_examples() {
        // complete intersection: all links stay CM
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(
            check_link_cm(&i, 3, q(), caps()).unwrap(),
            HypotheticalCheck::Holds
        );
        // principal (xyz): closures CM, links CM
        let i = ideal(3, &[&[1, 1, 1]]);
        assert_eq!(
            check_link_cm(&i, 2, q(), caps()).unwrap(),
            HypotheticalCheck::Holds
        );
        // hypothesis failure when the closure power is not CM
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(matches!(
            check_link_cm(&i, 3, q(), caps()).unwrap(),
            HypotheticalCheck::HypothesesNotSatisfied(_)
        ));
    }

    #[test]
    fn low_dim_zero_dimensional() {
        // three isolated vertices: the closure square is not CM
        let complex = SimplicialComplex::generated_by(
            3,
            [0, 1, 2].map(VarSet::singleton),
        )
        .unwrap();
        let verdict = low_dim_classification(&complex, 2, q(), caps()).unwrap();
        assert!(!verdict.closure_is_cm);
        assert_eq!(verdict.shape, LowDimShape::Other);
        assert!(verdict.consistent);
        // two vertices: complete intersection, CM
        let complex =
            SimplicialComplex::generated_by(2, [0, 1].map(VarSet::singleton)).unwrap();
        let verdict = low_dim_classification(&complex, 2, q(), caps()).unwrap();
        assert!(verdict.closure_is_cm);
        assert_eq!(verdict.shape, LowDimShape::TwoVertices);
        assert!(verdict.complete_intersection);
    }

    #[test]
    fn low_dim_one_dimensional() {
        // path of length two inside a 4-variable ring
        let complex = SimplicialComplex::generated_by(
            4,
            [VarSet::from_indices([0, 1]), VarSet::from_indices([1, 2])],
        )
        .unwrap();
        let verdict = low_dim_classification(&complex, 3, q(), caps()).unwrap();
        assert!(verdict.closure_is_cm);
        assert_eq!(verdict.shape, LowDimShape::PathOfLengthTwo);
        assert!(verdict.complete_intersection);
        assert!(verdict.consistent);
        // four-cycle
        let complex = SimplicialComplex::generated_by(
            4,
            [
                VarSet::from_indices([0, 1]),
                VarSet::from_indices([1, 2]),
                VarSet::from_indices([2, 3]),
                VarSet::from_indices([0, 3]),
            ],
        )
        .unwrap();
        let verdict = low_dim_classification(&complex, 3, q(), caps()).unwrap();
        assert!(verdict.closure_is_cm);
        assert_eq!(verdict.shape, LowDimShape::FourCycle);
        assert!(verdict.complete_intersection);
        // the four-cycle ideal is (x1 x3, x2 x4) up to the ambient variables
        let ideal4 = stanley_reisner_ideal(&complex);
        assert_eq!(ideal4, ideal(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]));
    }

    #[test]
    fn low_dim_rejects_small_n() {
        let complex =
            SimplicialComplex::generated_by(2, [0, 1].map(VarSet::singleton)).unwrap();
        assert!(low_dim_classification(&complex, 1, q(), caps()).is_err());
    }

    #[test]
    fn primary_decomposition_groups_by_radical() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let primaries = primary_decomposition(&i).unwrap();
        assert_eq!(primaries.len(), 2);
        assert_eq!(intersect_all(2, &primaries), i);
    }
}
