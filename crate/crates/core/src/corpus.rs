//! Seeded corpora of monomial ideals for the property suites. A corpus is a
//! pure function of its parameters, so runs are reproducible byte for byte.

use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::varset::VarSet;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub count: usize,
    pub rank: usize,
    pub max_exponent: i64,
    pub max_gens: usize,
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            count: 100,
            rank: 3,
            max_exponent: 4,
            max_gens: 4,
            seed: 7,
        }
    }
}

/// Deterministic corpus of proper nonzero ideals.
pub fn random_ideals(spec: &CorpusSpec) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| random_proper_ideal(&mut rng, spec.rank, spec.max_exponent, spec.max_gens))
        .collect()
}

pub fn random_proper_ideal(
    rng: &mut ChaCha8Rng,
    rank: usize,
    max_exponent: i64,
    max_gens: usize,
) -> MonomialIdeal {
    let count = rng.random_range(1..=max_gens);
    let mut gens = Vec::with_capacity(count);
    for _ in 0..count {
        gens.push(random_monomial(rng, rank, max_exponent));
    }
    MonomialIdeal::minimalize(rank, gens).expect("generated exponents are valid")
}

fn random_monomial(rng: &mut ChaCha8Rng, rank: usize, max_exponent: i64) -> ExponentVector {
    loop {
        let v: Vec<i64> = (0..rank).map(|_| rng.random_range(0..=max_exponent)).collect();
        if v.iter().any(|&c| c > 0) {
            return ExponentVector(v);
        }
    }
}

/// Every proper nonzero square-free ideal on `rank` variables: the nonempty
/// antichains of nonempty subsets of the variable set.
pub fn all_squarefree_ideals(rank: usize) -> Vec<MonomialIdeal> {
    assert!(rank <= 4, "exhaustive square-free enumeration is desk-scale");
    let subsets: Vec<VarSet> = VarSet::full(rank)
        .subsets()
        .filter(|s| !s.is_empty())
        .collect();
    let mut out = Vec::new();
    for family in 0u32..(1 << subsets.len()) {
        let chosen: Vec<VarSet> = subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| family >> i & 1 == 1)
            .map(|(_, s)| *s)
            .collect();
        if chosen.is_empty() {
            continue;
        }
        let antichain = chosen.iter().enumerate().all(|(i, a)| {
            chosen
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.is_subset_of(*b))
        });
        if !antichain {
            continue;
        }
        let gens = chosen
            .iter()
            .map(|s| {
                ExponentVector(
                    (0..rank)
                        .map(|i| if s.contains(i) { 1 } else { 0 })
                        .collect(),
                )
            })
            .collect();
        out.push(MonomialIdeal::minimalize(rank, gens).expect("square-free generators"));
    }
    out
}

/// A seeded sample of distinct proper nonzero square-free ideals.
pub fn random_squarefree_ideals(rank: usize, count: usize, seed: u64) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<Vec<ExponentVector>> = HashSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let gens = rng.random_range(1..=rank + 2);
        let mut supports = Vec::with_capacity(gens);
        for _ in 0..gens {
            loop {
                let s: u64 = rng.random_range(1..(1u64 << rank));
                if s != 0 {
                    supports.push(VarSet::from_bits(s));
                    break;
                }
            }
        }
        let ideal = MonomialIdeal::minimalize(
            rank,
            supports
                .iter()
                .map(|s| {
                    ExponentVector(
                        (0..rank)
                            .map(|i| if s.contains(i) { 1 } else { 0 })
                            .collect(),
                    )
                })
                .collect(),
        )
        .expect("square-free generators");
        if seen.insert(ideal.generators().to_vec()) {
            out.push(ideal);
        }
    }
    out
}
