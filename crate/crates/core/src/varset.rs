//! Small subsets of the variable index set `[r] = {0, .., r-1}`, stored as bitmasks.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A subset of `[r]` for `r <= MAX_GROUND`. Serialized as a sorted index list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VarSet(u64);

/// Largest supported ground-set size.
pub const MAX_GROUND: usize = 63;

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn empty() -> Self {
        VarSet(0)
    }

    pub fn full(r: usize) -> Self {
        debug_assert!(r <= MAX_GROUND);
        if r == 0 {
            VarSet(0)
        } else {
            VarSet((1u64 << r) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        VarSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = 0u64;
        for i in iter {
            debug_assert!(i < MAX_GROUND);
            s |= 1 << i;
        }
        VarSet(s)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn complement(self, r: usize) -> VarSet {
        VarSet(!self.0 & Self::full(r).0)
    }

    pub fn is_subset_of(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bitmask order (so `EMPTY` first, `self` last).
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut cur = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = VarSet(cur);
            if cur == full {
                done = true;
            } else {
                // next subset of `full` after `cur`
                cur = (cur.wrapping_sub(full)) & full;
            }
            Some(out)
        })
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VarSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.indices().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VarSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let idx = Vec::<usize>::deserialize(deserializer)?;
        for &i in &idx {
            if i >= MAX_GROUND {
                return Err(serde::de::Error::custom(format!(
                    "variable index {i} exceeds the supported maximum {MAX_GROUND}"
                )));
            }
        }
        Ok(VarSet::from_indices(idx))
    }
}
