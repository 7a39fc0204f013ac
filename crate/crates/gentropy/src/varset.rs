//! Subsets of the variable index set `{1..n}` as bitmasks.
//!
//! Entropy vectors, functionals, and cone coordinates are all keyed by
//! nonempty subsets of `{1..n}`.  A subset is written as the concatenation
//! of its members in ascending order ("12" for {1,2}), which is unambiguous
//! because the crate caps n at 9 variables.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest number of variables a [`VarSet`] can address.
pub const MAX_VARS: usize = 9;

/// A subset of the variables `{1..n}`, stored as a bitmask (bit `i-1` is
/// variable `i`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VarSet(pub u32);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VarSetError {
    #[error("variable index {0} out of range 1..={MAX_VARS}")]
    IndexOutOfRange(usize),
    #[error("bad subset label {0:?}: expected digits 1..{MAX_VARS}")]
    BadLabel(String),
}

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    /// The full set `{1..n}`.
    pub fn full(n: usize) -> VarSet {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables supported");
        VarSet((1u32 << n) - 1)
    }

    /// The singleton `{i}` (1-based).
    pub fn singleton(i: usize) -> VarSet {
        assert!((1..=MAX_VARS).contains(&i));
        VarSet(1 << (i - 1))
    }

    /// Builds a set from 1-based variable indices.
    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Result<VarSet, VarSetError> {
        let mut mask = 0u32;
        for i in vars {
            if !(1..=MAX_VARS).contains(&i) {
                return Err(VarSetError::IndexOutOfRange(i));
            }
            mask |= 1 << (i - 1);
        }
        Ok(VarSet(mask))
    }

    /// Parses a concatenated-digit label such as "12" or "134".
    pub fn parse_label(s: &str) -> Result<VarSet, VarSetError> {
        let mut mask = 0u32;
        if s.is_empty() {
            return Err(VarSetError::BadLabel(s.to_string()));
        }
        for c in s.chars() {
            match c.to_digit(10) {
                Some(d) if (1..=MAX_VARS as u32).contains(&d) => mask |= 1 << (d - 1),
                _ => return Err(VarSetError::BadLabel(s.to_string())),
            }
        }
        Ok(VarSet(mask))
    }

    /// Ascending 1-based member indices.
    pub fn vars(self) -> impl Iterator<Item = usize> {
        (1..=MAX_VARS).filter(move |i| self.0 & (1 << (i - 1)) != 0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && i <= MAX_VARS && self.0 & (1 << (i - 1)) != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn inter(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn minus(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Shifts every member up by `by` (used to mirror `{1..n}` into `{n+1..2n}`).
    pub fn shift_up(self, by: usize) -> VarSet {
        let mask = self.0 << by;
        assert!(mask < (1 << MAX_VARS), "shifted set exceeds {MAX_VARS} variables");
        VarSet(mask)
    }

    /// The concatenated-digit label, e.g. `{1,2} -> "12"`.
    pub fn label(self) -> String {
        self.vars().map(|i| i.to_string()).collect()
    }

    /// All nonempty subsets of `{1..n}` in ascending bitmask order.
    ///
    /// This is the canonical coordinate order used for entropy-vector and
    /// cone serialization: 1, 2, 12, 3, 13, 23, 123, ...
    pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = VarSet> {
        assert!(n <= MAX_VARS);
        (1u32..(1 << n)).map(VarSet)
    }

    /// All nonempty subsets of `self` in ascending bitmask order.
    pub fn nonempty_subsets_of(self) -> impl Iterator<Item = VarSet> {
        let mask = self.0;
        (1u32..=mask).filter(move |s| s & !mask == 0).map(VarSet)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet({{{}}})", self.label())
    }
}

impl TryFrom<String> for VarSet {
    type Error = VarSetError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        VarSet::parse_label(&s)
    }
}

impl From<VarSet> for String {
    fn from(v: VarSet) -> String {
        v.label()
    }
}
