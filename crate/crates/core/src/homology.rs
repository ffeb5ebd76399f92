//! Simplicial complexes and exact reduced homology over a configurable field,
//! Stanley-Reisner complexes and links, and the Reisner criterion for
//! Cohen-Macaulayness of a complex.

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::linalg::{rank_i64, rank_mod_p};
use crate::varset::{VarSet, MAX_GROUND};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Coefficient field: the rationals (characteristic 0) or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub characteristic: u64,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn rationals() -> Self {
        Self::RATIONALS
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p > (1 << 31) {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(FieldSpec { characteristic: p })
    }

    fn rank(&self, matrix: &[Vec<i64>]) -> usize {
        if self.characteristic == 0 {
            rank_i64(matrix)
        } else {
            rank_mod_p(matrix, self.characteristic)
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "q")
        } else {
            write!(f, "fp:{}", self.characteristic)
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A simplicial complex on the ground set `[r]`, stored as its facet
/// antichain. Two degenerate states are distinguished: the void complex (no
/// faces at all) and the empty complex (the single face `{}`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ground: usize,
    /// Sorted antichain; empty for VOID, `[{}]` for EMPTY.
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    pub fn void(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![],
        }
    }

    pub fn empty(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![VarSet::EMPTY],
        }
    }

    pub fn full_simplex(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![VarSet::full(ground)],
        }
    }

    /// Complex generated by the given faces (reduced to the facet antichain).
    pub fn generated_by(ground: usize, faces: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(Error::InvalidArgument(format!(
                "ground set size {ground} exceeds the supported maximum {MAX_GROUND}"
            )));
        }
        let mut faces: Vec<VarSet> = faces.into_iter().collect();
        for f in &faces {
            if !f.is_subset_of(VarSet::full(ground)) {
                return Err(Error::InvalidArgument(format!(
                    "face {f:?} not contained in the ground set [{ground}]"
                )));
            }
        }
        faces.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: Vec<VarSet> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| f.is_subset_of(*g)) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        Ok(SimplicialComplex { ground, facets })
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [VarSet::EMPTY]
    }

    /// Dimension; -1 for the empty complex, None for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// Vertices present in the complex.
    pub fn vertices(&self) -> Vec<usize> {
        let mut all = VarSet::EMPTY;
        for f in &self.facets {
            all = all.union(*f);
        }
        all.indices()
    }

    /// All faces grouped by dimension starting at -1 (the empty face).
    /// VOID yields no groups at all.
    pub fn faces_by_dim(&self) -> Vec<Vec<VarSet>> {
        if self.is_void() {
            return vec![];
        }
        let mut seen: BTreeSet<VarSet> = BTreeSet::new();
        for f in &self.facets {
            for sub in f.subsets() {
                seen.insert(sub);
            }
        }
        let top = self.dim().expect("non-void");
        let mut groups: Vec<Vec<VarSet>> = vec![Vec::new(); (top + 2) as usize];
        for face in seen {
            groups[face.len()].push(face);
        }
        // BTreeSet iterates in bitmask order, so each per-dimension list has
        // a fixed ordering and the boundary matrices are reproducible
        groups
    }

    /// Number of faces in each dimension, starting at -1.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(|g| g.len()).collect()
    }

    /// `link(F)` on the ground set with `F` dropped (remaining indices are
    /// relabeled in order). Returns None when `F` is not a face.
    pub fn link(&self, face: VarSet) -> Option<SimplicialComplex> {
        if !self.contains_face(face) {
            return None;
        }
        if face.is_empty() {
            return Some(self.clone());
        }
        let new_ground = self.ground - face.len();
        let relabel = |s: VarSet| -> VarSet {
            VarSet::from_indices(s.iter().map(|i| i - face.iter().filter(|&j| j < i).count()))
        };
        let faces = self
            .facets
            .iter()
            .filter(|f| face.is_subset_of(**f))
            .map(|f| relabel(f.difference(face)));
        Some(
            SimplicialComplex::generated_by(new_ground, faces)
                .expect("link faces stay within the reduced ground set"),
        )
    }

    /// All reduced homology dimensions for indices in `[-1, dim]`.
    ///
    /// Conventions: the void complex has no homology at all (empty map); the
    /// empty complex has a single k in index -1.
    pub fn reduced_homology_dims(&self, field: FieldSpec) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        if self.is_void() {
            return out;
        }
        let groups = self.faces_by_dim();
        let top = groups.len() as i64 - 2;
        // boundary_rank[d+1] = rank of the map from d-chains to (d-1)-chains,
        // with the augmentation at d = 0 (the empty face is the (-1)-chain)
        let mut boundary_rank: Vec<usize> = vec![0; (top + 3) as usize];
        for d in 0..=top {
            let cols = &groups[(d + 1) as usize];
            let rows = &groups[d as usize];
            let row_index: BTreeMap<VarSet, usize> =
                rows.iter().enumerate().map(|(i, f)| (*f, i)).collect();
            let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
            for (j, face) in cols.iter().enumerate() {
                for (pos, v) in face.iter().enumerate() {
                    let mut sub = *face;
                    sub.remove(v);
                    let i = row_index[&sub];
                    matrix[i][j] = if pos % 2 == 0 { 1 } else { -1 };
                }
            }
            boundary_rank[(d + 1) as usize] = field.rank(&matrix);
        }
        for i in -1..=top {
            let f_i = groups[(i + 1) as usize].len();
            let rank_in = boundary_rank[(i + 1) as usize];
            let rank_out = boundary_rank[(i + 2) as usize];
            out.insert(i, f_i - rank_in - rank_out);
        }
        out
    }

    /// Reisner criterion: for every face (including the empty one) the link
    /// has vanishing reduced homology below its dimension.
    pub fn is_cohen_macaulay(&self, field: FieldSpec) -> Result<bool> {
        if self.is_void() {
            return Err(Error::InvalidArgument(
                "the void complex has no Cohen-Macaulay notion here".into(),
            ));
        }
        for group in self.faces_by_dim() {
            for face in group {
                let link = self.link(face).expect("enumerated face");
                let link_dim = link.dim().expect("link of a face is non-void");
                let dims = link.reduced_homology_dims(field);
                for (i, d) in dims {
                    if i < link_dim && d != 0 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "VOID[{}]", self.ground);
        }
        write!(f, "<")?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet:?}")?;
        }
        write!(f, ">[{}]", self.ground)
    }
}

/// The Stanley-Reisner complex of `I`: square-free monomials outside the
/// radical. The facets are the complements of the minimal primes.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let r = ideal.rank();
    if ideal.is_zero() {
        return Ok(SimplicialComplex::full_simplex(r));
    }
    let primes = ideal.minimal_primes()?;
    SimplicialComplex::generated_by(r, primes.iter().map(|p| p.vars.complement(r)))
}

/// The Stanley-Reisner ideal of a complex: generated by the minimal
/// non-faces. Inverse to [`stanley_reisner_complex`] on square-free ideals.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    let r = complex.ground_size();
    if complex.is_void() {
        // no faces at all, not even the empty monomial: unit ideal
        return MonomialIdeal::unit(r);
    }
    let mut nonfaces: Vec<VarSet> = Vec::new();
    for mask in VarSet::full(r).subsets() {
        if !complex.contains_face(mask) && !nonfaces.iter().any(|n| n.is_subset_of(mask)) {
            nonfaces.push(mask);
        }
    }
    let gens = nonfaces
        .iter()
        .map(|n| {
            ExponentVector((0..r).map(|i| if n.contains(i) { 1 } else { 0 }).collect())
        })
        .collect();
    MonomialIdeal::minimalize(r, gens).expect("square-free generators are valid")
}
