//! Exact arithmetic for monomial ideals: minimal generating sets, powers,
//! radicals, colons, irreducible decomposition, associated primes,
//! restriction and extension.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads.

use crate::error::{Error, Result};
use crate::varset::VarSet;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

/// A multidegree in `Z^r`. Nonnegative when it represents a monomial.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(r: usize) -> Self {
        ExponentVector(vec![0; r])
    }

    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = vec![0; r];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&c| c == 0 || c == 1)
    }

    /// Indices with a strictly positive coordinate.
    pub fn support(&self) -> VarSet {
        VarSet::from_indices(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, _)| i),
        )
    }

    /// Indices with a strictly negative coordinate (the co-support of a multidegree).
    pub fn co_support(&self) -> VarSet {
        VarSet::from_indices(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &c)| c < 0)
                .map(|(i, _)| i),
        )
    }

    /// Componentwise `self <= other`; divisibility of the corresponding monomials.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `max(self - other, 0)`: the quotient monomial for colons.
    pub fn sub_clamped(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a - b).max(0))
                .collect(),
        )
    }

    /// Componentwise maximum (the lcm of the monomials).
    pub fn join(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn scale(&self, n: i64) -> ExponentVector {
        ExponentVector(self.0.iter().map(|c| c * n).collect())
    }

    /// Drop the coordinates in `dropped`, keeping the remaining ones in order.
    pub fn drop_coords(&self, dropped: VarSet) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| !dropped.contains(*i))
                .map(|(_, &c)| c)
                .collect(),
        )
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A monomial prime `(x_i : i in vars)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeSupport {
    pub vars: VarSet,
}

impl PrimeSupport {
    pub fn new(vars: VarSet) -> Self {
        PrimeSupport { vars }
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    /// The prime as a monomial ideal in `r` variables.
    pub fn to_ideal(&self, rank: usize) -> MonomialIdeal {
        let gens = self
            .vars
            .iter()
            .map(|i| ExponentVector::unit(rank, i))
            .collect();
        MonomialIdeal::minimalize(rank, gens).expect("unit vectors are valid generators")
    }

    pub fn is_maximal(&self, rank: usize) -> bool {
        self.vars == VarSet::full(rank)
    }
}

impl fmt::Debug for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:?}", self.vars)
    }
}

/// An irreducible monomial ideal `(x_i^{e_i} : i in dom)`, every `e_i >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct IrreducibleComponent {
    pub exps: BTreeMap<usize, i64>,
}

impl IrreducibleComponent {
    pub fn new(exps: BTreeMap<usize, i64>) -> Result<Self> {
        if exps.values().any(|&e| e < 1) {
            return Err(Error::InvalidArgument(
                "irreducible component exponents must be >= 1".into(),
            ));
        }
        Ok(IrreducibleComponent { exps })
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_indices(self.exps.keys().copied())
    }

    pub fn to_ideal(&self, rank: usize) -> MonomialIdeal {
        let gens = self
            .exps
            .iter()
            .map(|(&i, &e)| {
                let mut v = vec![0; rank];
                v[i] = e;
                ExponentVector(v)
            })
            .collect();
        MonomialIdeal::minimalize(rank, gens).expect("pure powers are valid generators")
    }

    /// Containment as ideals: `self ⊆ other` iff for every variable of `self`,
    /// `other` uses the same variable with exponent at most `self`'s.
    pub fn contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.exps
            .iter()
            .all(|(i, &e)| matches!(other.exps.get(i), Some(&f) if f <= e))
    }
}

/// A monomial ideal given by its minimal monomial generating set.
///
/// Three shapes are possible: the zero ideal (no generators), the unit ideal
/// (the single generator `1`), and proper nonzero ideals (a nonempty antichain
/// of nonzero exponent vectors under componentwise divisibility).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    rank: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Build from arbitrary nonnegative generators; reduces to the minimal
    /// generating set. Any generator equal to `1` collapses the result to the
    /// unit ideal. No generators gives the zero ideal.
    pub fn minimalize(rank: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        for g in &gens {
            if g.len() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    got: g.len(),
                });
            }
            if !g.is_nonnegative() {
                return Err(Error::NegativeExponent(g.0.clone()));
            }
        }
        Ok(Self::minimalize_unchecked(rank, gens))
    }

    pub(crate) fn minimalize_unchecked(rank: usize, mut gens: Vec<ExponentVector>) -> Self {
        if gens.iter().any(|g| g.is_zero()) {
            return MonomialIdeal {
                rank,
                gens: vec![ExponentVector::zero(rank)],
            };
        }
        gens.sort_unstable();
        gens.dedup();
        let mut minimal: Vec<ExponentVector> = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let redundant = gens
                .iter()
                .enumerate()
                .any(|(j, h)| j != i && h.divides(g));
            if !redundant {
                minimal.push(g.clone());
            }
        }
        MonomialIdeal {
            rank,
            gens: minimal,
        }
    }

    pub fn zero(rank: usize) -> Self {
        MonomialIdeal { rank, gens: vec![] }
    }

    pub fn unit(rank: usize) -> Self {
        MonomialIdeal {
            rank,
            gens: vec![ExponentVector::zero(rank)],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The minimal generating set, sorted.
    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(())
    }

    fn require_proper_nonzero(&self) -> Result<()> {
        self.require_proper()?;
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(())
    }

    /// Membership of the monomial `x^m`: some generator divides it.
    pub fn contains_monomial(&self, m: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains_monomial(g))
    }

    /// Maximal total degree among the minimal generators, `d(I)`.
    pub fn max_gen_degree(&self) -> i64 {
        self.gens.iter().map(|g| g.total_degree()).max().unwrap_or(0)
    }

    /// Componentwise maximum over the generators (exponent vector of their lcm).
    pub fn exponent_bound(&self) -> ExponentVector {
        let mut acc = ExponentVector::zero(self.rank);
        for g in &self.gens {
            acc = acc.join(g);
        }
        acc
    }

    /// Product of two ideals in the same ring.
    pub fn multiply(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.rank, other.rank, "rank mismatch in ideal product");
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.rank);
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.add(h)))
            .collect();
        MonomialIdeal::minimalize_unchecked(self.rank, gens)
    }

    /// `I^n` with `I^0` the unit ideal.
    pub fn pow(&self, n: u32) -> MonomialIdeal {
        if n == 0 {
            return MonomialIdeal::unit(self.rank);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.multiply(self);
        }
        acc
    }

    /// The radical: generated by the supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                ExponentVector(g.0.iter().map(|&c| if c > 0 { 1 } else { 0 }).collect())
            })
            .collect();
        MonomialIdeal::minimalize_unchecked(self.rank, gens)
    }

    /// The colon ideal `(I : x^m)` for a nonnegative multidegree `m`.
    pub fn colon(&self, m: &ExponentVector) -> Result<MonomialIdeal> {
        if m.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: m.len(),
            });
        }
        if !m.is_nonnegative() {
            return Err(Error::NegativeExponent(m.0.clone()));
        }
        let gens = self.gens.iter().map(|g| g.sub_clamped(m)).collect();
        Ok(MonomialIdeal::minimalize_unchecked(self.rank, gens))
    }

    /// Intersection of two monomial ideals (componentwise lcms of generator pairs).
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.rank, other.rank, "rank mismatch in ideal intersection");
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.rank);
        }
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.join(h)))
            .collect();
        MonomialIdeal::minimalize_unchecked(self.rank, gens)
    }

    /// `I[F]`: set `x_i = 1` for `i in dropped` and move to the polynomial ring
    /// on the remaining variables (kept in their original relative order).
    pub fn restrict(&self, dropped: VarSet) -> MonomialIdeal {
        let new_rank = self.rank - dropped.intersect(VarSet::full(self.rank)).len();
        let gens = self.gens.iter().map(|g| g.drop_coords(dropped)).collect();
        MonomialIdeal::minimalize_unchecked(new_rank, gens)
    }

    /// `(I, y)` in the ring with one fresh variable appended last.
    pub fn extend_with_variable(&self) -> MonomialIdeal {
        if self.is_unit() {
            return MonomialIdeal::unit(self.rank + 1);
        }
        let mut gens: Vec<ExponentVector> = self
            .gens
            .iter()
            .map(|g| {
                let mut v = g.0.clone();
                v.push(0);
                ExponentVector(v)
            })
            .collect();
        gens.push(ExponentVector::unit(self.rank + 1, self.rank));
        MonomialIdeal::minimalize_unchecked(self.rank + 1, gens)
    }

    /// For a square-free ideal: true iff the generator supports are pairwise
    /// disjoint (the Stanley-Reisner complete-intersection criterion).
    pub fn is_complete_intersection_squarefree(&self) -> Result<bool> {
        if !self.is_squarefree() {
            return Err(Error::NotSquareFree);
        }
        let supports: Vec<VarSet> = self.gens.iter().map(|g| g.support()).collect();
        for (i, a) in supports.iter().enumerate() {
            for b in &supports[i + 1..] {
                if a.intersects(*b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Minimal primes, as the minimal covers of the generator supports.
    pub fn minimal_primes(&self) -> Result<Vec<PrimeSupport>> {
        self.require_proper_nonzero()?;
        let supports: Vec<VarSet> = self.gens.iter().map(|g| g.support()).collect();
        let mut covers: Vec<VarSet> = Vec::new();
        minimal_covers(&supports, VarSet::EMPTY, 0, &mut covers);
        // prune non-minimal covers produced by different branch orders
        let mut minimal: Vec<VarSet> = Vec::new();
        covers.sort_by_key(|c| c.len());
        for c in covers {
            if !minimal.iter().any(|m| m.is_subset_of(c)) {
                minimal.push(c);
            }
        }
        minimal.sort();
        Ok(minimal.into_iter().map(PrimeSupport::new).collect())
    }

    /// `(height I, dim R/I)`.
    pub fn height_and_dim(&self) -> Result<(usize, usize)> {
        let primes = self.minimal_primes()?;
        let height = primes.iter().map(|p| p.height()).min().unwrap_or(0);
        Ok((height, self.rank - height))
    }

    /// The irredundant irreducible decomposition, by recursive generator
    /// splitting `(B, uv) = (B, u) ∩ (B, v)` with memoization on the
    /// canonical generator set, followed by extraction of the minimal
    /// components (which is exactly the irredundant decomposition).
    pub fn irreducible_decomposition(&self) -> Result<Vec<IrreducibleComponent>> {
        self.require_proper_nonzero()?;
        let mut memo: HashMap<Vec<ExponentVector>, Vec<IrreducibleComponent>> = HashMap::new();
        let mut components = split_components(self, &mut memo);
        components.sort_unstable();
        components.dedup();
        Ok(prune_to_minimal_components(components))
    }

    /// `Ass(R/I)`: the radicals of the irredundant irreducible decomposition.
    pub fn associated_primes(&self) -> Result<Vec<PrimeSupport>> {
        let comps = self.irreducible_decomposition()?;
        let mut supports: Vec<PrimeSupport> = comps
            .iter()
            .map(|c| PrimeSupport::new(c.support()))
            .collect();
        supports.sort_unstable();
        supports.dedup();
        Ok(supports)
    }

    /// All associated primes have the same height.
    pub fn is_unmixed(&self) -> Result<bool> {
        let ass = self.associated_primes()?;
        let mut heights = ass.iter().map(|p| p.height());
        let first = heights.next();
        Ok(heights.all(|h| Some(h) == first))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        if self.is_unit() {
            return write!(f, "(1)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g:?}")?;
        }
        write!(f, ")")
    }
}

/// Depth-first enumeration of covers of the generator supports: always cover
/// the first uncovered support by adding one of its variables.
fn minimal_covers(supports: &[VarSet], chosen: VarSet, from: usize, out: &mut Vec<VarSet>) {
    match supports[from..].iter().find(|s| !s.intersects(chosen)) {
        None => out.push(chosen),
        Some(&s) => {
            for i in s.iter() {
                let mut next = chosen;
                next.insert(i);
                minimal_covers(supports, next, from, out);
            }
        }
    }
}

fn split_components(
    ideal: &MonomialIdeal,
    memo: &mut HashMap<Vec<ExponentVector>, Vec<IrreducibleComponent>>,
) -> Vec<IrreducibleComponent> {
    if let Some(hit) = memo.get(ideal.generators()) {
        return hit.clone();
    }
    let result = match ideal
        .generators()
        .iter()
        .find(|g| g.support().len() >= 2)
        .cloned()
    {
        None => {
            // every generator is a pure power: the ideal is irreducible
            let exps = ideal
                .generators()
                .iter()
                .map(|g| {
                    let i = g.support().iter().next().expect("nonzero generator");
                    (i, g.0[i])
                })
                .collect();
            vec![IrreducibleComponent { exps }]
        }
        Some(g) => {
            let i = g.support().iter().next().expect("mixed generator");
            let mut u = ExponentVector::zero(ideal.rank());
            u.0[i] = g.0[i];
            let mut v = g.clone();
            v.0[i] = 0;
            let rest: Vec<ExponentVector> = ideal
                .generators()
                .iter()
                .filter(|h| **h != g)
                .cloned()
                .collect();
            let mut with_u = rest.clone();
            with_u.push(u);
            let mut with_v = rest;
            with_v.push(v);
            let left = MonomialIdeal::minimalize_unchecked(ideal.rank(), with_u);
            let right = MonomialIdeal::minimalize_unchecked(ideal.rank(), with_v);
            let mut comps = split_components(&left, memo);
            comps.extend(split_components(&right, memo));
            comps.sort_unstable();
            comps.dedup();
            comps
        }
    };
    memo.insert(ideal.generators().to_vec(), result.clone());
    result
}

/// Keep only the minimal components under ideal containment. For irreducible
/// monomial ideals containment is componentwise on the exponent profile
/// (absent variables acting as +infinity), so this is an antichain extraction;
/// the minimal components form the unique irredundant decomposition.
fn prune_to_minimal_components(comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    let mut minimal: Vec<IrreducibleComponent> = Vec::new();
    for c in &comps {
        let dominated = comps
            .iter()
            .any(|d| d != c && d.contained_in(c));
        if !dominated {
            minimal.push(c.clone());
        }
    }
    minimal
}

/// Intersection of a family of ideals; the unit ideal for an empty family.
pub fn intersect_all(rank: usize, ideals: &[MonomialIdeal]) -> MonomialIdeal {
    let mut acc = MonomialIdeal::unit(rank);
    for ideal in ideals {
        acc = acc.intersect(ideal);
    }
    acc
}

/// Search for witness monomials `x^m` with `(I : x^m)` a monomial prime, over
/// the divisor box of the generator lcm. This is the secondary, independent
/// characterization of `Ass(R/I)`.
pub fn associated_primes_by_witness(ideal: &MonomialIdeal) -> Result<Vec<PrimeSupport>> {
    ideal.require_proper_nonzero()?;
    let bound = ideal.exponent_bound();
    let mut found: HashSet<PrimeSupport> = HashSet::new();
    let mut cursor = vec![0i64; ideal.rank()];
    loop {
        let m = ExponentVector(cursor.clone());
        if !ideal.contains_monomial(&m) {
            let colon = ideal.colon(&m)?;
            if let Some(p) = as_prime(&colon) {
                found.insert(p);
            }
        }
        // advance odometer over the box [0, bound]
        let mut i = 0;
        loop {
            if i == cursor.len() {
                let mut out: Vec<PrimeSupport> = found.into_iter().collect();
                out.sort_unstable();
                return Ok(out);
            }
            if cursor[i] < bound.0[i] {
                cursor[i] += 1;
                break;
            }
            cursor[i] = 0;
            i += 1;
        }
    }
}

fn as_prime(ideal: &MonomialIdeal) -> Option<PrimeSupport> {
    if ideal.is_zero() || ideal.is_unit() {
        return None;
    }
    let mut vars = VarSet::EMPTY;
    for g in ideal.generators() {
        let supp = g.support();
        if supp.len() != 1 || g.total_degree() != 1 {
            return None;
        }
        vars = vars.union(supp);
    }
    Some(PrimeSupport::new(vars))
}
