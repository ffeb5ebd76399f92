//! Property tests for the ideal arithmetic layer, with independent oracles
//! for the decomposition and membership routes.

use closurelab::ideal::{
    associated_primes_by_witness, intersect_all, ExponentVector, MonomialIdeal,
};
use closurelab::newton;
use proptest::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3)
        .prop_flat_map(|rank| {
            proptest::collection::vec(
                proptest::collection::vec(0i64..=4, rank).prop_filter("nonzero", |v| {
                    v.iter().any(|&c| c > 0)
                }),
                1..=4,
            )
        })
        .prop_map(|gens| {
            let rank = gens[0].len();
            MonomialIdeal::minimalize(rank, gens.into_iter().map(ExponentVector).collect())
                .expect("valid generators")
        })
}

/// Equality of monomial ideals by sampling every lattice point of the joint
/// divisor box (one past the lcm of all generators in each coordinate).
fn equal_on_box(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    let bound = a.exponent_bound().join(&b.exponent_bound());
    let r = a.rank();
    let mut cursor = vec![0i64; r];
    loop {
        let m = ExponentVector(cursor.clone());
        if a.contains_monomial(&m) != b.contains_monomial(&m) {
            return false;
        }
        let mut i = 0;
        loop {
            if i == r {
                return true;
            }
            if cursor[i] <= bound.coords()[i] {
                cursor[i] += 1;
                break;
            }
            cursor[i] = 0;
            i += 1;
        }
    }
}

/// Independent irreducible-decomposition oracle: enumerate all candidate
/// components with exponents inside the generator profile, keep those
/// containing the ideal, and take the minimal ones under ideal containment.
fn corner_decomposition(ideal: &MonomialIdeal) -> BTreeSet<BTreeMap<usize, i64>> {
    let r = ideal.rank();
    let profile = ideal.exponent_bound();
    let contains_ideal = |c: &[i64]| -> bool {
        ideal.generators().iter().all(|g| {
            g.coords()
                .iter()
                .enumerate()
                .any(|(i, &gi)| c[i] >= 1 && gi >= c[i])
        })
    };
    let mut survivors: Vec<Vec<i64>> = Vec::new();
    let mut cursor = vec![0i64; r];
    loop {
        if cursor.iter().any(|&c| c > 0) && contains_ideal(&cursor) {
            survivors.push(cursor.clone());
        }
        let mut i = 0;
        loop {
            if i == r {
                break;
            }
            if cursor[i] < profile.coords()[i] {
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
    // minimal under: M_c ⊆ M_d iff for every i with c_i >= 1, 1 <= d_i <= c_i
    let below = |c: &[i64], d: &[i64]| -> bool {
        (0..r).all(|i| c[i] == 0 || (d[i] >= 1 && d[i] <= c[i]))
    };
    survivors
        .iter()
        .filter(|c| {
            // minimal: no other surviving component sits strictly inside
            !survivors
                .iter()
                .any(|d| d != *c && below(d, c))
        })
        .map(|c| {
            c.iter()
                .enumerate()
                .filter(|(_, &e)| e >= 1)
                .map(|(i, &e)| (i, e))
                .collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_is_idempotent(ideal in arb_ideal()) {
        let again = MonomialIdeal::minimalize(ideal.rank(), ideal.generators().to_vec()).unwrap();
        prop_assert_eq!(&again, &ideal);
    }

    #[test]
    fn radical_of_power_is_radical(ideal in arb_ideal(), n in 1u32..=4) {
        prop_assert_eq!(ideal.pow(n).radical(), ideal.radical());
    }

    #[test]
    fn decomposition_intersects_back(ideal in arb_ideal()) {
        let comps = ideal.irreducible_decomposition().unwrap();
        let pieces: Vec<MonomialIdeal> =
            comps.iter().map(|c| c.to_ideal(ideal.rank())).collect();
        let intersection = intersect_all(ideal.rank(), &pieces);
        prop_assert!(equal_on_box(&ideal, &intersection));
        // irredundancy: dropping any component changes the intersection
        for k in 0..pieces.len() {
            let rest: Vec<MonomialIdeal> = pieces
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, p)| p.clone())
                .collect();
            if rest.is_empty() {
                continue;
            }
            prop_assert!(!equal_on_box(&ideal, &intersect_all(ideal.rank(), &rest)));
        }
    }

    #[test]
    fn decomposition_matches_corner_oracle(ideal in arb_ideal()) {
        let by_splitting: BTreeSet<BTreeMap<usize, i64>> = ideal
            .irreducible_decomposition()
            .unwrap()
            .into_iter()
            .map(|c| c.exps)
            .collect();
        prop_assert_eq!(by_splitting, corner_decomposition(&ideal));
    }

    #[test]
    fn associated_primes_contain_minimal_primes(ideal in arb_ideal()) {
        let ass = ideal.associated_primes().unwrap();
        for p in ideal.radical().minimal_primes().unwrap() {
            prop_assert!(ass.contains(&p), "missing minimal prime {:?}", p);
        }
    }

    #[test]
    fn witness_route_matches_decomposition_route(ideal in arb_ideal()) {
        prop_assert_eq!(
            ideal.associated_primes().unwrap(),
            associated_primes_by_witness(&ideal).unwrap()
        );
    }

    #[test]
    fn restriction_composes(ideal in arb_ideal(), first in 0usize..3) {
        let r = ideal.rank();
        let first = first % r;
        let once = ideal.restrict(closurelab::VarSet::singleton(first));
        if once.rank() == 0 {
            return Ok(());
        }
        // drop the (relabeled) first remaining coordinate afterwards
        let twice = once.restrict(closurelab::VarSet::singleton(0));
        let both = ideal.restrict(closurelab::VarSet::from_indices([
            first,
            if first == 0 { 1 } else { 0 },
        ]));
        prop_assert_eq!(twice, both);
    }

    #[test]
    fn closure_is_integrally_closed(ideal in arb_ideal()) {
        let closure = newton::closure_power(&ideal, 1).unwrap();
        prop_assert_eq!(newton::closure_power(&closure, 1).unwrap(), closure);
    }

    #[test]
    fn closure_contains_power(ideal in arb_ideal(), n in 1u32..=3) {
        let closure = newton::closure_power(&ideal, n).unwrap();
        prop_assert!(ideal.pow(n).is_subideal_of(&closure));
    }
}
