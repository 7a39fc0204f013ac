//! Linear characterizations: subspaces of `F_p^m` as subgroups.
//!
//! A subspace tuple `(W_1, ..., W_n)` of `F_p^m` characterizes entropies
//! `g(α) = (m − dim ⋂_{i∈α} W_i)·log p`, and dually
//! `g(α) = dim(Σ_{i∈α} W_i^⊥)·log p`; both are computed here and must agree
//! entrywise.  Subspaces are kept in reduced row-echelon form so equality
//! is plain comparison.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::entropy::EntropyVector;
use crate::group::{is_prime, FiniteGroup, GroupCharacterization};
use crate::varset::VarSet;

/// Largest supported field characteristic.
pub const MAX_PRIME: u64 = 17;

#[derive(Debug, Error)]
pub enum LinearError {
    #[error("field characteristic {0} is not a prime ≤ {MAX_PRIME}")]
    BadPrime(u64),
    #[error("field or ambient dimension mismatch: F_{p1}^{m1} vs F_{p2}^{m2}")]
    Mismatch { p1: u64, m1: usize, p2: u64, m2: usize },
    #[error("vector has {got} coordinates, ambient dimension is {expected}")]
    BadVector { got: usize, expected: usize },
    #[error("subset {0} is not a nonempty subset of 1..={1}")]
    BadSubset(String, usize),
    #[error("characterization needs at least one subspace")]
    Empty,
}

/// A subspace of `F_p^m` in canonical reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "wire::SubspaceWire", into = "wire::SubspaceWire")]
pub struct Subspace {
    p: u64,
    m: usize,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    /// Canonicalizes arbitrary spanning rows into RREF.
    pub fn new(p: u64, m: usize, rows: Vec<Vec<u32>>) -> Result<Subspace, LinearError> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(LinearError::BadPrime(p));
        }
        let mut reduced = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != m {
                return Err(LinearError::BadVector { got: row.len(), expected: m });
            }
            reduced.push(row.iter().map(|&x| (x as u64 % p) as u32).collect());
        }
        rref(p, m, &mut reduced);
        Ok(Subspace { p, m, basis: reduced })
    }

    pub fn zero(p: u64, m: usize) -> Result<Subspace, LinearError> {
        Subspace::new(p, m, Vec::new())
    }

    pub fn full(p: u64, m: usize) -> Result<Subspace, LinearError> {
        let rows = (0..m)
            .map(|i| (0..m).map(|j| u32::from(i == j)).collect())
            .collect();
        Subspace::new(p, m, rows)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        if v.len() != self.m {
            return false;
        }
        let mut v: Vec<u32> = v.iter().map(|&x| (x as u64 % self.p) as u32).collect();
        for row in &self.basis {
            let pivot = row.iter().position(|&x| x != 0).expect("no zero rows in RREF");
            if v[pivot] != 0 {
                let c = v[pivot] as u64;
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = ((*x as u64 + (self.p - c % self.p) * r as u64) % self.p) as u32;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    fn check_compat(&self, other: &Subspace) -> Result<(), LinearError> {
        if self.p != other.p || self.m != other.m {
            return Err(LinearError::Mismatch {
                p1: self.p,
                m1: self.m,
                p2: other.p,
                m2: other.m,
            });
        }
        Ok(())
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinearError> {
        self.check_compat(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::new(self.p, self.m, rows)
    }

    /// Intersection via the Zassenhaus block matrix `[A|A; B|0]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinearError> {
        self.check_compat(other)?;
        let m = self.m;
        let mut block: Vec<Vec<u32>> = Vec::new();
        for a in &self.basis {
            let mut row = a.clone();
            row.extend_from_slice(a);
            block.push(row);
        }
        for b in &other.basis {
            let mut row = b.clone();
            row.extend(std::iter::repeat(0).take(m));
            block.push(row);
        }
        rref(self.p, 2 * m, &mut block);
        let meet_rows: Vec<Vec<u32>> = block
            .iter()
            .filter(|row| row[..m].iter().all(|&x| x == 0))
            .map(|row| row[m..].to_vec())
            .collect();
        Subspace::new(self.p, m, meet_rows)
    }

    /// `W^⊥ = {x : Σ x_i y_i = 0 for all y ∈ W}`, the kernel of the basis
    /// matrix.
    pub fn orthogonal_complement(&self) -> Subspace {
        let m = self.m;
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|row| row.iter().position(|&x| x != 0).expect("RREF row"))
            .collect();
        let mut kernel = Vec::with_capacity(m - self.basis.len());
        for free in 0..m {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0u32; m];
            v[free] = 1;
            for (row, &pc) in self.basis.iter().zip(&pivots) {
                // pivot coefficient is 1 in RREF, so x[pc] = −row[free].
                v[pc] = ((self.p - row[free] as u64 % self.p) % self.p) as u32;
            }
            kernel.push(v);
        }
        Subspace::new(self.p, m, kernel).expect("kernel rows are valid")
    }
}

/// An ordered tuple of subspaces of a common `F_p^m`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LinearCharacterization {
    p: u64,
    m: usize,
    subspaces: Vec<Subspace>,
}

impl LinearCharacterization {
    pub fn new(p: u64, m: usize, subspaces: Vec<Subspace>) -> Result<Self, LinearError> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(LinearError::BadPrime(p));
        }
        if subspaces.is_empty() {
            return Err(LinearError::Empty);
        }
        for s in &subspaces {
            if s.p != p || s.m != m {
                return Err(LinearError::Mismatch { p1: p, m1: m, p2: s.p, m2: s.m });
            }
        }
        Ok(LinearCharacterization { p, m, subspaces })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.subspaces.len()
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    /// `⋂_{i∈vars} W_i`; the empty set gives the whole space.
    pub fn meet(&self, vars: VarSet) -> Subspace {
        let mut acc = Subspace::full(self.p, self.m).expect("valid");
        for i in vars.vars() {
            acc = acc.intersection(&self.subspaces[i - 1]).expect("same field");
        }
        acc
    }

    /// `Σ_{i∈vars} W_i^⊥`; the empty set gives the zero subspace.
    pub fn complement_sum(&self, vars: VarSet) -> Subspace {
        let mut acc = Subspace::zero(self.p, self.m).expect("valid");
        for i in vars.vars() {
            acc = acc.sum(&self.subspaces[i - 1].orthogonal_complement()).expect("same field");
        }
        acc
    }
}

/// Entropy vector via intersections: `k_α = p^(m − dim ⋂_{i∈α} W_i)`.
pub fn entropy_from_linear(c: &LinearCharacterization) -> EntropyVector {
    let n = c.n();
    let mut meets: Vec<Option<Subspace>> = vec![None; 1 << n];
    let mut indices = vec![BigUint::one(); 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let meet = if rest == 0 {
            c.subspaces()[low].clone()
        } else {
            meets[rest]
                .as_ref()
                .expect("filled in mask order")
                .intersection(&c.subspaces()[low])
                .expect("same field")
        };
        indices[mask] = BigUint::from(c.p()).pow((c.m() - meet.dim()) as u32);
        meets[mask] = Some(meet);
    }
    EntropyVector::from_raw(n, indices)
}

/// Entropy vector via the dual rank function:
/// `k_α = p^(dim Σ_{i∈α} W_i^⊥)`.  Equals [`entropy_from_linear`] entrywise.
pub fn dual_rank_entropy(c: &LinearCharacterization) -> EntropyVector {
    let n = c.n();
    let complements: Vec<Subspace> =
        c.subspaces().iter().map(|w| w.orthogonal_complement()).collect();
    let mut sums: Vec<Option<Subspace>> = vec![None; 1 << n];
    let mut indices = vec![BigUint::one(); 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let sum = if rest == 0 {
            complements[low].clone()
        } else {
            sums[rest].as_ref().expect("filled in mask order").sum(&complements[low]).expect("same field")
        };
        indices[mask] = BigUint::from(c.p()).pow(sum.dim() as u32);
        sums[mask] = Some(sum);
    }
    EntropyVector::from_raw(n, indices)
}

/// Slepian–Wolf extension: appends `W_{n+1} = W_left + U` where `U` is the
/// span of the standard basis vectors whose pivot columns are missing from
/// the echelon form of `W_left + W_right`.
///
/// The construction guarantees `W_{n+1} ∩ W_right = W_left ∩ W_right` and
/// `W_{n+1} + W_right = F^m`, which yield the extension's three entropy
/// conditions; both subspace identities are asserted.
pub fn sw_extension_linear(
    c: &LinearCharacterization,
    left: VarSet,
    right: VarSet,
) -> Result<LinearCharacterization, LinearError> {
    let full_vars = VarSet::full(c.n());
    for s in [left, right] {
        if s.is_empty() || !s.is_subset_of(full_vars) {
            return Err(LinearError::BadSubset(s.label(), c.n()));
        }
    }
    let w_left = c.meet(left);
    let w_right = c.meet(right);
    let span = w_left.sum(&w_right)?;
    let pivots: Vec<usize> = span
        .basis()
        .iter()
        .map(|row| row.iter().position(|&x| x != 0).expect("RREF row"))
        .collect();
    let missing: Vec<Vec<u32>> = (0..c.m())
        .filter(|col| !pivots.contains(col))
        .map(|col| (0..c.m()).map(|j| u32::from(j == col)).collect())
        .collect();
    let complement = Subspace::new(c.p(), c.m(), missing)?;
    let extended = w_left.sum(&complement)?;

    assert_eq!(
        extended.intersection(&w_right)?,
        w_left.intersection(&w_right)?,
        "extension must meet the right block exactly where the left block does"
    );
    assert_eq!(
        extended.sum(&w_right)?,
        Subspace::full(c.p(), c.m())?,
        "extension plus the right block must cover the ambient space"
    );

    let mut subspaces = c.subspaces().to_vec();
    subspaces.push(extended);
    LinearCharacterization::new(c.p(), c.m(), subspaces)
}

/// Encodes the characterization on the additive group of `F_p^m`
/// (elementary abelian), with each subspace as the subgroup of its member
/// vectors.  Element indices read tuples in base p, first coordinate most
/// significant, matching [`FiniteGroup::elementary_abelian`].
pub fn to_group_characterization(
    c: &LinearCharacterization,
) -> Result<GroupCharacterization, crate::group::GroupError> {
    let g = FiniteGroup::elementary_abelian(c.p(), c.m())?;
    let pu = c.p() as usize;
    let order = g.order();
    let mut subgroups = Vec::with_capacity(c.n());
    for w in c.subspaces() {
        let mut members = Vec::new();
        for idx in 0..order {
            let mut digits = vec![0u32; c.m()];
            let mut rem = idx;
            for d in (0..c.m()).rev() {
                digits[d] = (rem % pu) as u32;
                rem /= pu;
            }
            if w.contains(&digits) {
                members.push(idx as u16);
            }
        }
        subgroups.push(g.subgroup_from_elements(&members)?);
    }
    GroupCharacterization::new(g, subgroups)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn mod_inv(x: u64, p: u64) -> u64 {
    mod_pow(x, p - 2, p)
}

/// In-place reduced row echelon form over `F_p`; zero rows are dropped.
fn rref(p: u64, width: usize, rows: &mut Vec<Vec<u32>>) {
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = mod_inv(rows[pivot_row][col] as u64, p);
        for x in rows[pivot_row].iter_mut() {
            *x = (*x as u64 * inv % p) as u32;
        }
        for r2 in 0..rows.len() {
            if r2 != pivot_row && rows[r2][col] != 0 {
                let c = rows[r2][col] as u64;
                for j in 0..width {
                    let sub = c * rows[pivot_row][j] as u64 % p;
                    rows[r2][j] = ((rows[r2][j] as u64 + p - sub) % p) as u32;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|&x| x != 0));
    // RREF rows are already in pivot order; retain preserves it.
}

mod wire {
    use super::*;

    #[derive(Serialize, Deserialize)]
    pub struct SubspaceWire {
        pub p: u64,
        pub m: usize,
        pub basis: Vec<Vec<u32>>,
    }

    impl TryFrom<SubspaceWire> for Subspace {
        type Error = LinearError;
        fn try_from(w: SubspaceWire) -> Result<Subspace, LinearError> {
            Subspace::new(w.p, w.m, w.basis)
        }
    }

    impl From<Subspace> for SubspaceWire {
        fn from(s: Subspace) -> SubspaceWire {
            SubspaceWire { p: s.p, m: s.m, basis: s.basis }
        }
    }
}
