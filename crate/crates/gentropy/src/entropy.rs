//! Exact entropy vectors of group-induced random variables.
//!
//! For a characterization `(G, G_1, ..., G_n)` the entropy of the variable
//! block `α` is `log |G| / |⋂_{i∈α} G_i|`, so the whole entropy function is
//! determined by one positive integer per subset: the coset index
//! `k_α = |G| / |G_α|`.  Storing the index instead of a float means any
//! rational-coefficient linear inequality over the vector can be decided by
//! comparing two big-integer products, with no tolerances.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupCharacterization, GroupError, Subgroup};
use crate::varset::VarSet;

#[derive(Debug, Error)]
pub enum EntropyError {
    #[error("variable counts differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("subset {0} is not a nonempty subset of 1..={1}")]
    BadSubset(String, usize),
    #[error("operation requires an abelian group")]
    NonAbelian,
    #[error("expected {expected} subset entries, got {got}")]
    BadEntryCount { expected: usize, got: usize },
    #[error("index for subset {0} must be a positive integer")]
    BadIndex(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Entropy function stored as exact coset indices: `g(α) = log k_α`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EntropyVector {
    n: usize,
    /// Indexed by subset bitmask; entry 0 (the empty set) is fixed at 1.
    indices: Vec<BigUint>,
}

impl EntropyVector {
    pub fn from_indices(n: usize, by_subset: &BTreeMap<VarSet, BigUint>) -> Result<Self, EntropyError> {
        let expected = (1usize << n) - 1;
        if by_subset.len() != expected {
            return Err(EntropyError::BadEntryCount { expected, got: by_subset.len() });
        }
        let mut indices = vec![BigUint::one(); 1 << n];
        for (&vs, k) in by_subset {
            if vs.is_empty() || !vs.is_subset_of(VarSet::full(n)) {
                return Err(EntropyError::BadSubset(vs.label(), n));
            }
            if k.is_zero() {
                return Err(EntropyError::BadIndex(vs.label()));
            }
            indices[vs.0 as usize] = k.clone();
        }
        Ok(EntropyVector { n, indices })
    }

    pub(crate) fn from_raw(n: usize, indices: Vec<BigUint>) -> Self {
        debug_assert_eq!(indices.len(), 1 << n);
        debug_assert!(indices[0].is_one());
        EntropyVector { n, indices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The coset index `k_α`; the empty set gives 1.
    pub fn index(&self, alpha: VarSet) -> &BigUint {
        &self.indices[alpha.0 as usize]
    }

    /// `g(α)` in bits.
    pub fn bits(&self, alpha: VarSet) -> f64 {
        log2_biguint(self.index(alpha))
    }

    pub fn to_real(&self) -> RealEntropyVector {
        RealEntropyVector {
            n: self.n,
            values: self.indices.iter().map(log2_biguint).collect(),
        }
    }

    /// Divisibility monotonicity: `k_α | k_β` whenever `α ⊆ β`.  Holds for
    /// every group-derived vector; false signals a hand-made input.
    pub fn is_group_monotone(&self) -> bool {
        for beta in VarSet::nonempty_subsets(self.n) {
            let kb = self.index(beta);
            for alpha in beta.nonempty_subsets_of() {
                if (kb % self.index(alpha)) != BigUint::zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Submodularity with `g(∅) = 0`: `k_{α∪β}·k_{α∩β} ≤ k_α·k_β`.
    pub fn is_submodular(&self) -> bool {
        let full = VarSet::full(self.n);
        for a in full.nonempty_subsets_of() {
            for b in full.nonempty_subsets_of() {
                let lhs = self.index(a.union(b)) * self.index(a.inter(b));
                let rhs = self.index(a) * self.index(b);
                if lhs > rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Conditional vector `ĝ(α) = g(α∪given) − g(given)`, i.e. index
    /// `k_{α∪given} / k_given`.  Quotients that are not integers (possible
    /// only for inputs that are not group-derived) switch the result to
    /// exact rational form.
    pub fn condition(&self, given: VarSet) -> Result<Conditioned, EntropyError> {
        self.check_subset(given)?;
        let kb = self.index(given);
        let mut out = Vec::with_capacity(self.indices.len());
        let mut all_integer = true;
        for alpha in 0..self.indices.len() {
            let joint = &self.indices[alpha | given.0 as usize];
            if (joint % kb) != BigUint::zero() {
                all_integer = false;
            }
            out.push(BigRational::new(to_bigint(joint), to_bigint(kb)));
        }
        if all_integer {
            let ints = out
                .iter()
                .map(|r| r.to_integer().to_biguint().expect("nonnegative"))
                .collect();
            Ok(Conditioned::Exact(EntropyVector::from_raw(self.n, ints)))
        } else {
            Ok(Conditioned::Rational(RationalEntropyVector { n: self.n, indices: out }))
        }
    }

    /// Strips the private parts of the variables in `within`:
    /// `Δ(g, β)(α) = g(α) − Σ_{j∈β∩α} (g(N) − g(N∖{j}))`.
    ///
    /// Exact multiplicative form: the index at `α` is divided by
    /// `∏_{j∈β∩α} k_N / k_{N∖j}`.
    pub fn delta_reduction(&self, within: VarSet) -> Result<RationalEntropyVector, EntropyError> {
        self.check_subset(within)?;
        let full = VarSet::full(self.n);
        let k_full = self.index(full);
        let mut out = Vec::with_capacity(self.indices.len());
        for mask in 0..self.indices.len() {
            let alpha = VarSet(mask as u32);
            let scaled = within.inter(alpha);
            if scaled.is_empty() {
                out.push(BigRational::from(to_bigint(&self.indices[mask])));
                continue;
            }
            // k_α / ∏_j (k_N / k_{N∖j}) assembled as one fraction so the
            // rational reduces exactly once per coordinate.
            let mut numer = self.indices[mask].clone();
            for j in scaled.vars() {
                numer *= self.index(full.minus(VarSet::singleton(j)));
            }
            let denom = k_full.pow(scaled.len() as u32);
            out.push(BigRational::new(to_bigint(&numer), to_bigint(&denom)));
        }
        Ok(RationalEntropyVector { n: self.n, indices: out })
    }

    fn check_subset(&self, s: VarSet) -> Result<(), EntropyError> {
        if s.is_empty() || !s.is_subset_of(VarSet::full(self.n)) {
            return Err(EntropyError::BadSubset(s.label(), self.n));
        }
        Ok(())
    }
}

/// Result of [`EntropyVector::condition`].
#[derive(Clone, Debug)]
pub enum Conditioned {
    Exact(EntropyVector),
    Rational(RationalEntropyVector),
}

impl Conditioned {
    /// The exact integer vector, panicking if conditioning left rationals.
    pub fn expect_exact(self) -> EntropyVector {
        match self {
            Conditioned::Exact(v) => v,
            Conditioned::Rational(_) => panic!("conditioning produced non-integer indices"),
        }
    }

    pub fn to_rational(&self) -> RationalEntropyVector {
        match self {
            Conditioned::Exact(v) => RationalEntropyVector {
                n: v.n,
                indices: v.indices.iter().map(|k| BigRational::from(to_bigint(k))).collect(),
            },
            Conditioned::Rational(v) => v.clone(),
        }
    }
}

/// Entropy function with exact rational multiplicative indices
/// (`g(α) = log index_α`); carries conditioning and Δ-reduction results
/// that leave the integer lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalEntropyVector {
    n: usize,
    indices: Vec<BigRational>,
}

impl RationalEntropyVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self, alpha: VarSet) -> &BigRational {
        &self.indices[alpha.0 as usize]
    }

    pub fn bits(&self, alpha: VarSet) -> f64 {
        log2_ratio(self.index(alpha))
    }

    pub fn to_real(&self) -> RealEntropyVector {
        RealEntropyVector { n: self.n, values: self.indices.iter().map(log2_ratio).collect() }
    }
}

/// Entropy function as plain floats in bits; the oracle's output type and
/// the carrier for limit points with irrational coordinates.
#[derive(Clone, PartialEq, Debug)]
pub struct RealEntropyVector {
    n: usize,
    /// Indexed by subset bitmask; entry 0 is 0.
    values: Vec<f64>,
}

impl RealEntropyVector {
    pub fn new(n: usize, by_subset: &BTreeMap<VarSet, f64>) -> Result<Self, EntropyError> {
        let expected = (1usize << n) - 1;
        if by_subset.len() != expected {
            return Err(EntropyError::BadEntryCount { expected, got: by_subset.len() });
        }
        let mut values = vec![0.0; 1 << n];
        for (&vs, &v) in by_subset {
            if vs.is_empty() || !vs.is_subset_of(VarSet::full(n)) {
                return Err(EntropyError::BadSubset(vs.label(), n));
            }
            values[vs.0 as usize] = v;
        }
        Ok(RealEntropyVector { n, values })
    }

    pub(crate) fn from_raw(n: usize, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), 1 << n);
        RealEntropyVector { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self, alpha: VarSet) -> f64 {
        self.values[alpha.0 as usize]
    }
}

/// Entropy vector of a characterization: `k_α = |G| / |⋂_{i∈α} G_i|`.
pub fn entropy_from_characterization(c: &GroupCharacterization) -> EntropyVector {
    let n = c.n();
    let order = c.group().order();
    let mut meets: Vec<usize> = vec![order; 1 << n];
    let mut sets: Vec<Option<Subgroup>> = vec![None; 1 << n];
    let mut indices = vec![BigUint::one(); 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let meet = if rest == 0 {
            c.subgroups()[low].clone()
        } else {
            let mut set = sets[rest].as_ref().expect("filled in mask order").member_set().clone();
            set.intersect_with(c.subgroups()[low].member_set());
            Subgroup::from_closed_set(set)
        };
        meets[mask] = meet.order();
        debug_assert_eq!(order % meets[mask], 0, "Lagrange violated");
        indices[mask] = BigUint::from(order / meets[mask]);
        sets[mask] = Some(meet);
    }
    EntropyVector::from_raw(n, indices)
}

/// Sum of two characterizations, realized on the direct product with
/// subgroups `G_i × G'_i`; the entropy vectors add (indices multiply).
pub fn sum_characterizations(
    a: &GroupCharacterization,
    b: &GroupCharacterization,
) -> Result<GroupCharacterization, EntropyError> {
    if a.n() != b.n() {
        return Err(EntropyError::DimensionMismatch(a.n(), b.n()));
    }
    let product = FiniteGroup::direct_product(a.group(), b.group())?;
    let n2 = b.group().order();
    let mut subgroups = Vec::with_capacity(a.n());
    for (ha, hb) in a.subgroups().iter().zip(b.subgroups()) {
        let mut elems = Vec::with_capacity(ha.order() * hb.order());
        for x in ha.elements() {
            for y in hb.elements() {
                elems.push((x as usize * n2 + y as usize) as u16);
            }
        }
        subgroups.push(product.subgroup_from_elements(&elems)?);
    }
    Ok(GroupCharacterization::new(product, subgroups)?)
}

/// Characterization of the conditional entropy function `g(· | given)`:
/// ambient group `G_given = ⋂_{j∈given} G_j` with subgroups `G_i ∩ G_given`.
pub fn condition_characterization(
    c: &GroupCharacterization,
    given: VarSet,
) -> Result<GroupCharacterization, EntropyError> {
    if given.is_empty() || !given.is_subset_of(VarSet::full(c.n())) {
        return Err(EntropyError::BadSubset(given.label(), c.n()));
    }
    let ambient_sub = c.subgroup_meet(given);
    let (ambient, elems) = c.group().subgroup_as_group(&ambient_sub);
    let mut to_new = vec![u16::MAX; c.group().order()];
    for (i, &x) in elems.iter().enumerate() {
        to_new[x as usize] = i as u16;
    }
    let mut subgroups = Vec::with_capacity(c.n());
    for g_i in c.subgroups() {
        let members: Vec<u16> = elems
            .iter()
            .filter(|&&x| g_i.contains(x))
            .map(|&x| to_new[x as usize])
            .collect();
        subgroups.push(ambient.subgroup_from_elements(&members)?);
    }
    Ok(GroupCharacterization::new(ambient, subgroups)?)
}

/// `H(X_target | X_sources) = 0` iff `⋂_{j∈sources} G_j ⊆ G_target`.
pub fn check_functional_dependency(
    c: &GroupCharacterization,
    target: usize,
    sources: VarSet,
) -> Result<bool, EntropyError> {
    if target < 1 || target > c.n() {
        return Err(EntropyError::BadSubset(target.to_string(), c.n()));
    }
    if sources.is_empty() || !sources.is_subset_of(VarSet::full(c.n())) {
        return Err(EntropyError::BadSubset(sources.label(), c.n()));
    }
    let meet = c.subgroup_meet(sources);
    Ok(meet.member_set().is_subset_of(c.subgroups()[target - 1].member_set()))
}

/// Joint independence of all n variables: `∏|G_i| = |G|^{n−1}·|⋂ G_j|`.
///
/// For n = 2 the equivalent product-set criterion `G = G_1 ∘ G_2` is
/// cross-checked.
pub fn check_independence(c: &GroupCharacterization) -> Result<bool, EntropyError> {
    let n = c.n();
    if n < 2 {
        return Err(EntropyError::BadSubset("independence needs n ≥ 2".into(), n));
    }
    let order = BigUint::from(c.group().order());
    let mut lhs = BigUint::one();
    for s in c.subgroups() {
        lhs *= BigUint::from(s.order());
    }
    let meet = c.subgroup_meet(VarSet::full(n));
    let rhs = order.pow(n as u32 - 1) * BigUint::from(meet.order());
    let independent = lhs == rhs;
    if n == 2 {
        let prod = c.group().product_set(&c.subgroups()[0], &c.subgroups()[1]);
        let covers = prod.count() == c.group().order();
        assert_eq!(independent, covers, "product formula and product set disagree");
    }
    Ok(independent)
}

/// Appends the subgroup sum `G_left + G_right` (the common-information
/// variable of the two blocks) to an abelian characterization.
pub fn join_characterization(
    c: &GroupCharacterization,
    left: VarSet,
    right: VarSet,
) -> Result<GroupCharacterization, EntropyError> {
    if !c.group().is_abelian() {
        return Err(EntropyError::NonAbelian);
    }
    let full = VarSet::full(c.n());
    for s in [left, right] {
        if s.is_empty() || !s.is_subset_of(full) {
            return Err(EntropyError::BadSubset(s.label(), c.n()));
        }
    }
    let a = c.subgroup_meet(left);
    let b = c.subgroup_meet(right);
    // In an abelian group the product set of two subgroups is their join.
    let sum_set = c.group().product_set(&a, &b);
    let elems: Vec<u16> = sum_set.iter().collect();
    let joined = c.group().subgroup_from_elements(&elems)?;
    let mut subgroups = c.subgroups().to_vec();
    subgroups.push(joined);
    Ok(GroupCharacterization::new(c.group().clone(), subgroups)?)
}

pub(crate) fn to_bigint(k: &BigUint) -> BigInt {
    BigInt::from(k.clone())
}

/// Base-2 log of a positive big integer, exact to f64 precision.
pub(crate) fn log2_biguint(k: &BigUint) -> f64 {
    let bits = k.bits();
    if bits <= 53 {
        (k.to_u64().expect("fits") as f64).log2()
    } else {
        let shift = bits - 53;
        let top = (k >> shift).to_u64().expect("53 bits fit");
        (top as f64).log2() + shift as f64
    }
}

/// Base-2 log of a positive rational.
pub(crate) fn log2_ratio(r: &BigRational) -> f64 {
    let numer = r.numer().abs().to_biguint().expect("abs");
    let denom = r.denom().abs().to_biguint().expect("abs");
    log2_biguint(&numer) - log2_biguint(&denom)
}

// --- serde: {"n": 2, "indices": {"1": 3, "2": 3, "12": 6}} ------------------

struct IndexMapSer<'a>(&'a EntropyVector);

impl Serialize for IndexMapSer<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some((1 << self.0.n) - 1))?;
        for vs in VarSet::nonempty_subsets(self.0.n) {
            let k = self.0.index(vs);
            match k.to_u64() {
                Some(small) => map.serialize_entry(&vs.label(), &small)?,
                None => map.serialize_entry(&vs.label(), &k.to_string())?,
            }
        }
        map.end()
    }
}

impl Serialize for EntropyVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EntropyVector", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("indices", &IndexMapSer(self))?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntOrString {
    Int(u64),
    Str(String),
}

impl<'de> Deserialize<'de> for EntropyVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            n: usize,
            indices: BTreeMap<String, IntOrString>,
        }
        let w = Wire::deserialize(d)?;
        if w.n == 0 || w.n > crate::varset::MAX_VARS {
            return Err(D::Error::custom(format!("n = {} out of range", w.n)));
        }
        let mut by_subset = BTreeMap::new();
        for (label, v) in &w.indices {
            let vs = VarSet::parse_label(label).map_err(D::Error::custom)?;
            let k = match v {
                IntOrString::Int(i) => BigUint::from(*i),
                IntOrString::Str(s) => s
                    .parse::<BigUint>()
                    .map_err(|_| D::Error::custom(format!("bad index {s:?}")))?,
            };
            by_subset.insert(vs, k);
        }
        EntropyVector::from_indices(w.n, &by_subset).map_err(D::Error::custom)
    }
}

impl Serialize for RealEntropyVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct ValuesSer<'a>(&'a RealEntropyVector);
        impl Serialize for ValuesSer<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some((1 << self.0.n) - 1))?;
                for vs in VarSet::nonempty_subsets(self.0.n) {
                    map.serialize_entry(&vs.label(), &self.0.bits(vs))?;
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("RealEntropyVector", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("values_bits", &ValuesSer(self))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for RealEntropyVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            n: usize,
            values_bits: BTreeMap<String, f64>,
        }
        let w = Wire::deserialize(d)?;
        if w.n == 0 || w.n > crate::varset::MAX_VARS {
            return Err(D::Error::custom(format!("n = {} out of range", w.n)));
        }
        let mut by_subset = BTreeMap::new();
        for (label, v) in &w.values_bits {
            let vs = VarSet::parse_label(label).map_err(D::Error::custom)?;
            by_subset.insert(vs, *v);
        }
        RealEntropyVector::new(w.n, &by_subset).map_err(D::Error::custom)
    }
}
