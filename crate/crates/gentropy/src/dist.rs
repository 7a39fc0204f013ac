//! Joint distributions with exact rational probabilities.
//!
//! The induced distribution of a characterization is uniform over the
//! group, pushed through the coset-index maps; every probability is a
//! multiple of `1/|G|`.  Keeping probabilities rational makes conditional
//! independence an equation between products, not a tolerance question,
//! which the common-information and pseudo-abelian machinery relies on.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::entropy::log2_ratio;
use crate::group::GroupCharacterization;
use crate::varset::VarSet;

#[derive(Debug, Error)]
pub enum DistError {
    #[error("support is empty")]
    EmptySupport,
    #[error("outcome tuple has {got} coordinates, expected {expected}")]
    BadTuple { got: usize, expected: usize },
    #[error("probabilities must be positive")]
    NonPositiveProbability,
    #[error("probabilities sum to {0}, not 1")]
    BadTotal(String),
    #[error("block {0} is not a nonempty subset of 1..={1}")]
    BadBlock(String, usize),
    #[error("pseudo-abelian sweep supports at most {max} variables, got {got}")]
    TooManyVariables { got: usize, max: usize },
    #[error("bad distribution csv at line {line}: {msg}")]
    Csv { line: usize, msg: String },
}

/// A finitely supported joint distribution over n discrete variables.
#[derive(Clone, PartialEq, Debug)]
pub struct JointDistribution {
    n: usize,
    /// Sorted by outcome tuple; probabilities positive and summing to 1.
    support: Vec<(Vec<u32>, BigRational)>,
}

impl JointDistribution {
    pub fn new(n: usize, outcomes: Vec<(Vec<u32>, BigRational)>) -> Result<Self, DistError> {
        if outcomes.is_empty() {
            return Err(DistError::EmptySupport);
        }
        let mut merged: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (tuple, p) in outcomes {
            if tuple.len() != n {
                return Err(DistError::BadTuple { got: tuple.len(), expected: n });
            }
            if !p.is_positive() {
                return Err(DistError::NonPositiveProbability);
            }
            *merged.entry(tuple).or_insert_with(BigRational::zero) += p;
        }
        let total: BigRational = merged.values().sum();
        if !total.is_one() {
            return Err(DistError::BadTotal(total.to_string()));
        }
        Ok(JointDistribution { n, support: merged.into_iter().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Support points in sorted outcome order.
    pub fn support(&self) -> &[(Vec<u32>, BigRational)] {
        &self.support
    }

    /// Shannon entropy of the block `vars`, in bits, summed in sorted
    /// marginal-outcome order.
    pub fn shannon_entropy(&self, vars: VarSet) -> Result<f64, DistError> {
        self.check_block(vars)?;
        let mut marginal: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (tuple, p) in &self.support {
            let key: Vec<u32> = vars.vars().map(|i| tuple[i - 1]).collect();
            *marginal.entry(key).or_insert_with(BigRational::zero) += p;
        }
        let mut h = 0.0;
        for p in marginal.values() {
            if !p.is_one() {
                h -= ratio_to_f64(p) * log2_ratio(p);
            }
        }
        Ok(h)
    }

    /// Full real entropy vector from the oracle.
    pub fn entropy_vector(&self) -> crate::entropy::RealEntropyVector {
        let mut values = vec![0.0; 1 << self.n];
        for vs in VarSet::nonempty_subsets(self.n) {
            values[vs.0 as usize] = self.shannon_entropy(vs).expect("valid subset");
        }
        crate::entropy::RealEntropyVector::from_raw(self.n, values)
    }

    /// Label per support point identifying the value of the block `vars`
    /// (ids follow sorted projected-tuple order).
    pub fn block_labels(&self, vars: VarSet) -> Vec<u32> {
        let mut ids: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
        let mut keys = Vec::with_capacity(self.support.len());
        for (tuple, _) in &self.support {
            let key: Vec<u32> = vars.vars().map(|i| tuple[i - 1]).collect();
            keys.push(key.clone());
            let next = ids.len() as u32;
            ids.entry(key).or_insert(next);
        }
        // Re-number in sorted key order for determinism.
        let sorted_ids: BTreeMap<&Vec<u32>, u32> =
            ids.keys().enumerate().map(|(i, k)| (k, i as u32)).collect();
        keys.iter().map(|k| sorted_ids[k]).collect()
    }

    /// Entropy (bits) of a derived variable given by one label per point.
    pub fn label_entropy(&self, labels: &[u32]) -> f64 {
        let mut mass: BTreeMap<u32, BigRational> = BTreeMap::new();
        for ((_, p), &l) in self.support.iter().zip(labels) {
            *mass.entry(l).or_insert_with(BigRational::zero) += p;
        }
        let mut h = 0.0;
        for p in mass.values() {
            if !p.is_one() {
                h -= ratio_to_f64(p) * log2_ratio(p);
            }
        }
        h
    }

    /// Probability mass of each label value, in ascending label order.
    pub fn label_masses(&self, labels: &[u32]) -> Vec<BigRational> {
        let mut mass: BTreeMap<u32, BigRational> = BTreeMap::new();
        for ((_, p), &l) in self.support.iter().zip(labels) {
            *mass.entry(l).or_insert_with(BigRational::zero) += p;
        }
        mass.into_values().collect()
    }

    /// Exact conditional independence of two derived variables given a
    /// third: `p(a,b,c)·p(c) = p(a,c)·p(b,c)` for every value combination.
    pub fn cond_independent(&self, a: &[u32], b: &[u32], given: &[u32]) -> bool {
        let mut p_c: BTreeMap<u32, BigRational> = BTreeMap::new();
        let mut p_ac: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        let mut p_bc: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        let mut p_abc: BTreeMap<(u32, u32, u32), BigRational> = BTreeMap::new();
        for (i, (_, p)) in self.support.iter().enumerate() {
            let (av, bv, cv) = (a[i], b[i], given[i]);
            *p_c.entry(cv).or_insert_with(BigRational::zero) += p;
            *p_ac.entry((av, cv)).or_insert_with(BigRational::zero) += p;
            *p_bc.entry((bv, cv)).or_insert_with(BigRational::zero) += p;
            *p_abc.entry((av, bv, cv)).or_insert_with(BigRational::zero) += p;
        }
        for (&cv, pc) in &p_c {
            let avals: Vec<(u32, &BigRational)> = p_ac
                .range((0, cv)..=(u32::MAX, cv))
                .filter(|((_, c), _)| *c == cv)
                .map(|((a, _), p)| (*a, p))
                .collect();
            let bvals: Vec<(u32, &BigRational)> = p_bc
                .range((0, cv)..=(u32::MAX, cv))
                .filter(|((_, c), _)| *c == cv)
                .map(|((b, _), p)| (*b, p))
                .collect();
            for &(av, pa) in &avals {
                for &(bv, pb) in &bvals {
                    let joint = p_abc.get(&(av, bv, cv)).cloned().unwrap_or_else(BigRational::zero);
                    if joint * pc != pa * pb {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The Gács–Körner common part of two derived variables: labels the
    /// connected components of the bipartite graph on their values with an
    /// edge wherever a value pair has positive probability.
    pub fn common_labels(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let na = a.iter().map(|&x| x as usize).max().unwrap_or(0) + 1;
        let nb = b.iter().map(|&x| x as usize).max().unwrap_or(0) + 1;
        let mut dsu = Dsu::new(na + nb);
        for i in 0..self.support.len() {
            dsu.union(a[i] as usize, na + b[i] as usize);
        }
        // Canonical component ids in order of first appearance over sorted
        // support points.
        let mut ids: BTreeMap<usize, u32> = BTreeMap::new();
        let mut out = Vec::with_capacity(self.support.len());
        for i in 0..self.support.len() {
            let root = dsu.find(a[i] as usize);
            let next = ids.len() as u32;
            out.push(*ids.entry(root).or_insert(next));
        }
        out
    }

    fn check_block(&self, vars: VarSet) -> Result<(), DistError> {
        if vars.is_empty() || !vars.is_subset_of(VarSet::full(self.n)) {
            return Err(DistError::BadBlock(vars.label(), self.n));
        }
        Ok(())
    }

    /// CSV: header `x1,...,xn,p`, then one row per support point with the
    /// probability as an exact `p/q` rational.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = (1..=self.n).map(|i| format!("x{i}")).collect();
        out.push_str(&header.join(","));
        out.push_str(",p\n");
        for (tuple, p) in &self.support {
            let cells: Vec<String> = tuple.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(","));
            out.push_str(&format!(",{}/{}\n", p.numer(), p.denom()));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<JointDistribution, DistError> {
        let mut rows = Vec::new();
        let mut n = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || (lineno == 0 && line.starts_with('x')) {
                continue;
            }
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() < 2 {
                return Err(DistError::Csv { line: lineno + 1, msg: "too few columns".into() });
            }
            let vars = cells.len() - 1;
            if *n.get_or_insert(vars) != vars {
                return Err(DistError::Csv { line: lineno + 1, msg: "ragged row".into() });
            }
            let tuple: Result<Vec<u32>, _> = cells[..vars].iter().map(|c| c.trim().parse()).collect();
            let tuple = tuple.map_err(|e| DistError::Csv { line: lineno + 1, msg: format!("{e}") })?;
            let p = parse_ratio(cells[vars].trim())
                .ok_or_else(|| DistError::Csv { line: lineno + 1, msg: "bad probability".into() })?;
            rows.push((tuple, p));
        }
        JointDistribution::new(n.ok_or(DistError::EmptySupport)?, rows)
    }
}

fn parse_ratio(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((num, den)) => Some(BigRational::new(num.parse().ok()?, den.parse().ok()?)),
        None => Some(BigRational::from(s.parse::<BigInt>().ok()?)),
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    // Accurate enough at desk scale; exponent-aware for big values.
    2f64.powf(log2_ratio(r))
}

/// Uniform-over-G distribution of the coset-index variables.
pub fn induced_joint_distribution(c: &GroupCharacterization) -> JointDistribution {
    let g = c.group();
    let index_maps: Vec<Vec<u32>> =
        c.subgroups().iter().map(|h| g.coset_indices(h)).collect();
    let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for u in g.elements() {
        let tuple: Vec<u32> = index_maps.iter().map(|m| m[u as usize]).collect();
        *counts.entry(tuple).or_insert(0) += 1;
    }
    let order = BigInt::from(g.order());
    let support = counts
        .into_iter()
        .map(|(tuple, c)| (tuple, BigRational::new(BigInt::from(c), order.clone())))
        .collect();
    JointDistribution::new(c.n(), support).expect("uniform pushforward is a distribution")
}

/// The common-information variable `W = X * Y` of two blocks, with its
/// exact component masses.
#[derive(Clone, Debug)]
pub struct CommonInformation {
    /// W's value at each support point (aligned with `support()` order).
    pub point_labels: Vec<u32>,
    /// Probability of each W value, ascending label order.
    pub component_probs: Vec<BigRational>,
}

impl CommonInformation {
    pub fn entropy_bits(&self) -> f64 {
        let mut h = 0.0;
        for p in &self.component_probs {
            if !p.is_one() {
                h -= ratio_to_f64(p) * log2_ratio(p);
            }
        }
        h
    }

    /// `Some(c)` iff W is uniform over its c components, in which case
    /// `H(W) = log c` exactly.
    pub fn uniform_component_count(&self) -> Option<u64> {
        let first = self.component_probs.first()?;
        if self.component_probs.iter().all(|p| p == first) {
            Some(self.component_probs.len() as u64)
        } else {
            None
        }
    }

    pub fn component_count(&self) -> usize {
        self.component_probs.len()
    }
}

/// Computes `W = X_left * X_right`: the maximal variable that is a function
/// of each block alone.
pub fn common_information(
    d: &JointDistribution,
    left: VarSet,
    right: VarSet,
) -> Result<CommonInformation, DistError> {
    for b in [left, right] {
        if b.is_empty() || !b.is_subset_of(VarSet::full(d.n())) {
            return Err(DistError::BadBlock(b.label(), d.n()));
        }
    }
    let a = d.block_labels(left);
    let b = d.block_labels(right);
    let labels = d.common_labels(&a, &b);
    let component_probs = d.label_masses(&labels);
    Ok(CommonInformation { point_labels: labels, component_probs })
}

/// Iterated join `X_{i1} * X_{i2} * ...` over the variables of `block` in
/// ascending order (the operation is associative and commutative, so the
/// order does not matter).
pub fn iterated_join_labels(d: &JointDistribution, block: VarSet) -> Vec<u32> {
    let mut vars = block.vars();
    let first = vars.next().expect("nonempty block");
    let mut labels = d.block_labels(VarSet::singleton(first));
    for i in vars {
        let next = d.block_labels(VarSet::singleton(i));
        labels = d.common_labels(&labels, &next);
    }
    labels
}

/// Tests pseudo-abelianness: for every disjoint nonempty pair
/// of blocks, the blocks are conditionally independent given their common
/// part, and likewise for the iterated joins of their member variables.
pub fn is_pseudo_abelian(d: &JointDistribution) -> Result<bool, DistError> {
    const MAX_N: usize = 5;
    if d.n() > MAX_N {
        return Err(DistError::TooManyVariables { got: d.n(), max: MAX_N });
    }
    let full = VarSet::full(d.n());
    for alpha in full.nonempty_subsets_of() {
        for beta in full.minus(alpha).nonempty_subsets_of() {
            if beta.0 < alpha.0 {
                continue; // unordered pairs; both conditions are symmetric
            }
            let a = d.block_labels(alpha);
            let b = d.block_labels(beta);
            let w = d.common_labels(&a, &b);
            if !d.cond_independent(&a, &b, &w) {
                return Ok(false);
            }
            let a_star = iterated_join_labels(d, alpha);
            let b_star = iterated_join_labels(d, beta);
            let w_star = d.common_labels(&a_star, &b_star);
            if !d.cond_independent(&a_star, &b_star, &w_star) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::entropy_from_characterization;
    use crate::group::FiniteGroup;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn s3_pair() -> GroupCharacterization {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let subs = s3.enumerate_subgroups().unwrap();
        let pairs: Vec<_> = subs.iter().filter(|s| s.order() == 2).cloned().collect();
        GroupCharacterization::new(s3, vec![pairs[0].clone(), pairs[1].clone()]).unwrap()
    }

    #[test]
    fn induced_distribution_small_cases() {
        // (Z₂, {0}): uniform on two singleton outcomes.
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let c = GroupCharacterization::new(z2.clone(), vec![z2.trivial_subgroup()]).unwrap();
        let d = induced_joint_distribution(&c);
        assert_eq!(d.support().len(), 2);
        assert!(d.support().iter().all(|(_, p)| *p == ratio(1, 2)));

        // (G, G): a point mass.
        let g = FiniteGroup::dihedral(4).unwrap();
        let c = GroupCharacterization::new(g.clone(), vec![g.full_subgroup()]).unwrap();
        let d = induced_joint_distribution(&c);
        assert_eq!(d.support().len(), 1);
        assert!(d.support()[0].1.is_one());
        assert_eq!(d.shannon_entropy(VarSet::singleton(1)).unwrap(), 0.0);
    }

    #[test]
    fn independent_pair_has_product_support() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let a = z6.generated_subgroup(&[3]).unwrap();
        let b = z6.generated_subgroup(&[2]).unwrap();
        let c = GroupCharacterization::new(z6, vec![a, b]).unwrap();
        let d = induced_joint_distribution(&c);
        assert_eq!(d.support().len(), 6);
        assert!(d.support().iter().all(|(_, p)| *p == ratio(1, 6)));
        let xs: std::collections::BTreeSet<u32> =
            d.support().iter().map(|(t, _)| t[0]).collect();
        let ys: std::collections::BTreeSet<u32> =
            d.support().iter().map(|(t, _)| t[1]).collect();
        assert_eq!(xs.len(), 3);
        assert_eq!(ys.len(), 2);
    }

    #[test]
    fn oracle_matches_exact_indices_on_s3() {
        let c = s3_pair();
        let v = entropy_from_characterization(&c);
        let d = induced_joint_distribution(&c);
        for vs in VarSet::nonempty_subsets(2) {
            let oracle = d.shannon_entropy(vs).unwrap();
            assert!((oracle - v.bits(vs)).abs() < 1e-9, "{vs}: {oracle} vs {}", v.bits(vs));
        }
        assert!((d.shannon_entropy(VarSet::full(2)).unwrap() - 6f64.log2()).abs() < 1e-9);
    }

    #[test]
    fn oracle_fair_bit() {
        let d = JointDistribution::new(1, vec![(vec![0], ratio(1, 2)), (vec![1], ratio(1, 2))])
            .unwrap();
        assert_eq!(d.shannon_entropy(VarSet::singleton(1)).unwrap(), 1.0);
    }

    #[test]
    fn distribution_validation() {
        assert!(JointDistribution::new(1, vec![]).is_err());
        assert!(JointDistribution::new(1, vec![(vec![0], ratio(1, 2))]).is_err());
        assert!(JointDistribution::new(1, vec![(vec![0], ratio(-1, 2)), (vec![1], ratio(3, 2))])
            .is_err());
        assert!(JointDistribution::new(1, vec![(vec![0, 1], ratio(1, 1))]).is_err());
    }

    #[test]
    fn common_information_equal_variables() {
        // X = Y uniform bit: W ≅ X, one bit.
        let d = JointDistribution::new(
            2,
            vec![(vec![0, 0], ratio(1, 2)), (vec![1, 1], ratio(1, 2))],
        )
        .unwrap();
        let w = common_information(&d, VarSet::singleton(1), VarSet::singleton(2)).unwrap();
        assert_eq!(w.component_count(), 2);
        assert_eq!(w.entropy_bits(), 1.0);
        assert_eq!(w.uniform_component_count(), Some(2));
    }

    #[test]
    fn common_information_independent_variables() {
        let d = JointDistribution::new(
            2,
            vec![
                (vec![0, 0], ratio(1, 4)),
                (vec![0, 1], ratio(1, 4)),
                (vec![1, 0], ratio(1, 4)),
                (vec![1, 1], ratio(1, 4)),
            ],
        )
        .unwrap();
        let w = common_information(&d, VarSet::singleton(1), VarSet::singleton(2)).unwrap();
        assert_eq!(w.component_count(), 1);
        assert_eq!(w.entropy_bits(), 0.0);
    }

    #[test]
    fn common_information_two_components() {
        let d = JointDistribution::new(
            2,
            vec![
                (vec![0, 0], ratio(1, 4)),
                (vec![0, 1], ratio(1, 4)),
                (vec![1, 2], ratio(1, 4)),
                (vec![1, 3], ratio(1, 4)),
            ],
        )
        .unwrap();
        let w = common_information(&d, VarSet::singleton(1), VarSet::singleton(2)).unwrap();
        assert_eq!(w.component_count(), 2);
        assert_eq!(w.entropy_bits(), 1.0);
        // W is a function of X alone and of Y alone.
        let a = d.block_labels(VarSet::singleton(1));
        let b = d.block_labels(VarSet::singleton(2));
        for i in 0..d.support().len() {
            for j in 0..d.support().len() {
                if a[i] == a[j] || b[i] == b[j] {
                    assert_eq!(w.point_labels[i], w.point_labels[j]);
                }
            }
        }
    }

    #[test]
    fn common_information_maximality() {
        // Z = parity of X is a function of X and of Y here, so it must be a
        // function of W.
        let d = JointDistribution::new(
            2,
            vec![
                (vec![0, 0], ratio(1, 4)),
                (vec![0, 1], ratio(1, 4)),
                (vec![1, 2], ratio(1, 4)),
                (vec![1, 3], ratio(1, 4)),
            ],
        )
        .unwrap();
        let w = common_information(&d, VarSet::singleton(1), VarSet::singleton(2)).unwrap();
        let z: Vec<u32> = d.support().iter().map(|(t, _)| t[0] % 2).collect();
        // Same W value ⇒ same Z value.
        for i in 0..z.len() {
            for j in 0..z.len() {
                if w.point_labels[i] == w.point_labels[j] {
                    assert_eq!(z[i], z[j]);
                }
            }
        }
    }

    #[test]
    fn common_information_bounded_by_mutual_information() {
        // H(W) ≤ I(X;Y) with equality for abelian-derived pairs (checked at
        // scale in the acceptance suite); S₃ is the strict-inequality case.
        let c = s3_pair();
        let d = induced_joint_distribution(&c);
        let w = common_information(&d, VarSet::singleton(1), VarSet::singleton(2)).unwrap();
        let h1 = d.shannon_entropy(VarSet::singleton(1)).unwrap();
        let h2 = d.shannon_entropy(VarSet::singleton(2)).unwrap();
        let h12 = d.shannon_entropy(VarSet::full(2)).unwrap();
        let mi = h1 + h2 - h12;
        assert!(w.entropy_bits() <= mi + 1e-9);
        assert_eq!(w.component_count(), 1); // strictly below I(X;Y) ≈ 0.585
    }

    #[test]
    fn conditional_independence_exact() {
        // X and Y both copies of Z: independent given Z.
        let d = JointDistribution::new(
            3,
            vec![(vec![0, 0, 0], ratio(1, 2)), (vec![1, 1, 1], ratio(1, 2))],
        )
        .unwrap();
        let a = d.block_labels(VarSet::singleton(1));
        let b = d.block_labels(VarSet::singleton(2));
        let c = d.block_labels(VarSet::singleton(3));
        assert!(d.cond_independent(&a, &b, &c));
        // X ⟂ X | const fails for a nondegenerate X.
        let konst = vec![0u32; d.support().len()];
        assert!(!d.cond_independent(&a, &a, &konst));
        // X ⟂ Y | X⊕Y fails: given the parity, X determines Y.
        let xor = JointDistribution::new(
            3,
            vec![
                (vec![0, 0, 0], ratio(1, 4)),
                (vec![0, 1, 1], ratio(1, 4)),
                (vec![1, 0, 1], ratio(1, 4)),
                (vec![1, 1, 0], ratio(1, 4)),
            ],
        )
        .unwrap();
        let a = xor.block_labels(VarSet::singleton(1));
        let b = xor.block_labels(VarSet::singleton(2));
        let c = xor.block_labels(VarSet::singleton(3));
        assert!(!xor.cond_independent(&a, &b, &c));
    }

    #[test]
    fn pseudo_abelian_cases() {
        // Abelian-derived distribution: true.
        let g = FiniteGroup::elementary_abelian(2, 3).unwrap();
        let subs = g.enumerate_subgroups().unwrap();
        let pick: Vec<_> = subs.iter().filter(|s| s.order() == 2).take(3).cloned().collect();
        let c = GroupCharacterization::new(g, pick).unwrap();
        let d = induced_joint_distribution(&c);
        assert!(is_pseudo_abelian(&d).unwrap());

        // Single variable: vacuous.
        let d1 = JointDistribution::new(1, vec![(vec![0], ratio(1, 2)), (vec![1], ratio(1, 2))])
            .unwrap();
        assert!(is_pseudo_abelian(&d1).unwrap());

        // Two independent bits: true.
        let d2 = JointDistribution::new(
            2,
            vec![
                (vec![0, 0], ratio(1, 4)),
                (vec![0, 1], ratio(1, 4)),
                (vec![1, 0], ratio(1, 4)),
                (vec![1, 1], ratio(1, 4)),
            ],
        )
        .unwrap();
        assert!(is_pseudo_abelian(&d2).unwrap());

        // Too many variables: error.
        let d6 = JointDistribution::new(6, vec![(vec![0; 6], ratio(1, 1))]).unwrap();
        assert!(matches!(is_pseudo_abelian(&d6), Err(DistError::TooManyVariables { .. })));
    }

    #[test]
    fn csv_round_trip() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let a = z6.generated_subgroup(&[3]).unwrap();
        let b = z6.generated_subgroup(&[2]).unwrap();
        let c = GroupCharacterization::new(z6, vec![a, b]).unwrap();
        let d = induced_joint_distribution(&c);
        let csv = d.to_csv();
        let back = JointDistribution::from_csv(&csv).unwrap();
        assert_eq!(back, d);
    }
}
