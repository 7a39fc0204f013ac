//! Linear information functionals and inequality suites.
//!
//! A functional is a rational-coefficient linear form `Σ c_α g(α)` over the
//! nonempty subsets of `{1..n}`.  On an exact entropy vector its sign is
//! decided without floats: clear denominators and compare the big-integer
//! products `∏ k_α^{c_α⁺}` and `∏ k_α^{c_α⁻}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::entropy::{EntropyVector, RealEntropyVector};
use crate::varset::VarSet;

#[derive(Debug, Error)]
pub enum IneqError {
    #[error("functional is over n={0}, vector over n={1}")]
    DimensionMismatch(usize, usize),
    #[error("elemental suite supports 1 ≤ n ≤ 6, got {0}")]
    BadN(usize),
    #[error("functional needs at least one nonzero coefficient")]
    AllZero,
    #[error("subset {0} is not a nonempty subset of 1..={1}")]
    BadSubset(String, usize),
}

/// Sign of a functional evaluated at a point.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn is_nonnegative(self) -> bool {
        !matches!(self, Sign::Negative)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        }
    }
}

/// A named linear form over joint entropies.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearFunctional {
    n: usize,
    /// Subset bitmask → coefficient; zero coefficients are not stored.
    coeffs: BTreeMap<u32, BigRational>,
    name: String,
}

impl LinearFunctional {
    pub fn new(
        n: usize,
        coeffs: BTreeMap<VarSet, BigRational>,
        name: impl Into<String>,
    ) -> Result<Self, IneqError> {
        let mut map = BTreeMap::new();
        for (vs, c) in coeffs {
            if vs.is_empty() || !vs.is_subset_of(VarSet::full(n)) {
                return Err(IneqError::BadSubset(vs.label(), n));
            }
            if !c.is_zero() {
                map.insert(vs.0, c);
            }
        }
        if map.is_empty() {
            return Err(IneqError::AllZero);
        }
        Ok(LinearFunctional { n, coeffs: map, name: name.into() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coefficient(&self, vs: VarSet) -> BigRational {
        self.coeffs.get(&vs.0).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (VarSet, &BigRational)> {
        self.coeffs.iter().map(|(&m, c)| (VarSet(m), c))
    }

    /// Coefficients with denominators cleared by their LCM, gcd left as-is.
    pub fn integer_coefficients(&self) -> Vec<(VarSet, BigInt)> {
        let lcm = self
            .coeffs
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|(&m, c)| (VarSet(m), (c * BigRational::from(lcm.clone())).to_integer()))
            .collect()
    }

    /// Adds `coef · H(X_block)` into a coefficient accumulator; the empty
    /// block contributes nothing (g(∅) = 0).
    fn add_term(acc: &mut BTreeMap<VarSet, BigRational>, block: VarSet, coef: i64) {
        if block.is_empty() || coef == 0 {
            return;
        }
        let entry = acc.entry(block).or_insert_with(BigRational::zero);
        *entry += BigRational::from(BigInt::from(coef));
    }

    /// `coef · I(X_a; X_b | X_k)` expanded into joint entropies.
    fn add_cmi(acc: &mut BTreeMap<VarSet, BigRational>, a: VarSet, b: VarSet, k: VarSet, coef: i64) {
        Self::add_term(acc, a.union(k), coef);
        Self::add_term(acc, b.union(k), coef);
        Self::add_term(acc, a.union(b).union(k), -coef);
        Self::add_term(acc, k, -coef);
    }

    /// Float value in bits at an exact vector.
    pub fn slack_bits(&self, g: &EntropyVector) -> f64 {
        self.coeffs
            .iter()
            .map(|(&m, c)| ratio_f64(c) * g.bits(VarSet(m)))
            .sum()
    }

    /// Float value in bits at a real vector.
    pub fn slack_bits_real(&self, g: &RealEntropyVector) -> f64 {
        self.coeffs
            .iter()
            .map(|(&m, c)| ratio_f64(c) * g.bits(VarSet(m)))
            .sum()
    }
}

fn ratio_f64(c: &BigRational) -> f64 {
    c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN)
}

/// The elemental Shannon inequalities for n variables:
/// `H(X_N) − H(X_{N∖i}) ≥ 0` and `I(X_i; X_j | X_K) ≥ 0` for `i < j`,
/// `K ⊆ N∖{i,j}`.  Count: `n + C(n,2)·2^(n−2)`.
pub fn elemental_shannon_inequalities(n: usize) -> Result<Vec<LinearFunctional>, IneqError> {
    if !(1..=6).contains(&n) {
        return Err(IneqError::BadN(n));
    }
    let full = VarSet::full(n);
    let mut out = Vec::new();
    for i in 1..=n {
        let mut acc = BTreeMap::new();
        LinearFunctional::add_term(&mut acc, full, 1);
        LinearFunctional::add_term(&mut acc, full.minus(VarSet::singleton(i)), -1);
        out.push(LinearFunctional::new(n, acc, format!("mono:{i}"))?);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let rest = full.minus(VarSet::singleton(i)).minus(VarSet::singleton(j));
            let rest_masks: Vec<VarSet> =
                std::iter::once(VarSet::EMPTY).chain(rest.nonempty_subsets_of()).collect();
            for k in rest_masks {
                let mut acc = BTreeMap::new();
                LinearFunctional::add_cmi(
                    &mut acc,
                    VarSet::singleton(i),
                    VarSet::singleton(j),
                    k,
                    1,
                );
                out.push(LinearFunctional::new(n, acc, format!("cmi:{i},{j}|{}", k.label()))?);
            }
        }
    }
    Ok(out)
}

/// Ingleton's inequality on four variables:
/// `g(12)+g(13)+g(14)+g(23)+g(24) ≥ g(1)+g(2)+g(34)+g(123)+g(124)`.
pub fn ingleton_functional() -> LinearFunctional {
    let mut acc = BTreeMap::new();
    for plus in ["12", "13", "14", "23", "24"] {
        LinearFunctional::add_term(&mut acc, VarSet::parse_label(plus).unwrap(), 1);
    }
    for minus in ["1", "2", "34", "123", "124"] {
        LinearFunctional::add_term(&mut acc, VarSet::parse_label(minus).unwrap(), -1);
    }
    LinearFunctional::new(4, acc, "ingleton").expect("nonzero")
}

/// The Zhang–Yeung non-Shannon inequality on four variables:
/// `I(X₁;X₂) + I(X₁;X₃X₄) + 3·I(X₃;X₄|X₁) + I(X₃;X₄|X₂) − 2·I(X₃;X₄) ≥ 0`.
///
/// The coefficients come from Zhang & Yeung (IEEE Trans. IT 44, 1998);
/// nonnegativity on every generated group point is part of the acceptance
/// suite.
pub fn zhang_yeung_functional() -> LinearFunctional {
    let (v1, v2, v3, v4) = (
        VarSet::singleton(1),
        VarSet::singleton(2),
        VarSet::singleton(3),
        VarSet::singleton(4),
    );
    let mut acc = BTreeMap::new();
    LinearFunctional::add_cmi(&mut acc, v1, v2, VarSet::EMPTY, 1);
    LinearFunctional::add_cmi(&mut acc, v1, v3.union(v4), VarSet::EMPTY, 1);
    LinearFunctional::add_cmi(&mut acc, v3, v4, v1, 3);
    LinearFunctional::add_cmi(&mut acc, v3, v4, v2, 1);
    LinearFunctional::add_cmi(&mut acc, v3, v4, VarSet::EMPTY, -2);
    LinearFunctional::new(4, acc, "zhang-yeung").expect("nonzero")
}

/// Exact evaluation outcome: the sign of `Σ c_α log k_α` plus the two
/// big-integer witness products that decided it.
#[derive(Clone, Debug)]
pub struct ExactEvaluation {
    pub sign: Sign,
    /// `∏ k_α^{d_α}` over positive cleared coefficients.
    pub positive_product: BigUint,
    /// `∏ k_α^{−d_α}` over negative cleared coefficients.
    pub negative_product: BigUint,
}

/// Decides the sign of a functional at an exact vector in big-integer
/// arithmetic; no floating point is involved.
pub fn evaluate_exact(
    f: &LinearFunctional,
    g: &EntropyVector,
) -> Result<ExactEvaluation, IneqError> {
    if f.n() != g.n() {
        return Err(IneqError::DimensionMismatch(f.n(), g.n()));
    }
    let terms: Vec<(BigInt, &BigUint)> = f
        .integer_coefficients()
        .into_iter()
        .map(|(vs, d)| (d, g.index(vs)))
        .collect();
    Ok(exact_sign_of_terms(&terms))
}

/// Sign of `Σ d·log k` for integer weights `d` over positive integers `k`.
///
/// The building block behind [`evaluate_exact`]; exposed so bulk sweeps can
/// clear a functional's denominators once and reuse the integer weights.
pub fn exact_sign_of_terms(terms: &[(BigInt, &BigUint)]) -> ExactEvaluation {
    let mut pos = BigUint::one();
    let mut neg = BigUint::one();
    for (d, k) in terms {
        match d.sign() {
            num_bigint::Sign::Plus => {
                pos *= k.pow(d.to_u32().expect("desk-scale exponent"));
            }
            num_bigint::Sign::Minus => {
                neg *= k.pow(d.magnitude().to_u32().expect("desk-scale exponent"));
            }
            num_bigint::Sign::NoSign => {}
        }
    }
    let sign = match pos.cmp(&neg) {
        Ordering::Less => Sign::Negative,
        Ordering::Equal => Sign::Zero,
        Ordering::Greater => Sign::Positive,
    };
    ExactEvaluation { sign, positive_product: pos, negative_product: neg }
}

/// One functional's outcome within an [`InequalityReport`].
#[derive(Clone, Debug)]
pub struct ReportRow {
    pub name: String,
    pub sign: Sign,
    /// Big-integer witness products (exact path only).
    pub witness: Option<(BigUint, BigUint)>,
    pub slack_bits: f64,
}

/// Per-functional evaluation results for a suite at one point.
#[derive(Clone, Debug, Default)]
pub struct InequalityReport {
    pub rows: Vec<ReportRow>,
}

impl InequalityReport {
    pub fn all_nonnegative(&self) -> bool {
        self.rows.iter().all(|r| r.sign.is_nonnegative())
    }

    pub fn violations(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.sign.is_nonnegative())
    }
}

/// Float-to-exact consistency threshold: the two paths must agree whenever
/// the float slack is clearly nonzero.
const SLACK_CONSISTENCY_BITS: f64 = 1e-6;

/// Runs a suite on an exact vector (big-integer path, float slack attached).
pub fn check_entropy_vector(
    g: &EntropyVector,
    suite: &[LinearFunctional],
) -> Result<InequalityReport, IneqError> {
    let mut rows = Vec::with_capacity(suite.len());
    for f in suite {
        let ev = evaluate_exact(f, g)?;
        let slack = f.slack_bits(g);
        if slack.abs() > SLACK_CONSISTENCY_BITS {
            let float_sign = if slack > 0.0 { Sign::Positive } else { Sign::Negative };
            assert_eq!(ev.sign, float_sign, "exact and float paths disagree on {}", f.name());
        }
        rows.push(ReportRow {
            name: f.name().to_string(),
            sign: ev.sign,
            witness: Some((ev.positive_product, ev.negative_product)),
            slack_bits: slack,
        });
    }
    Ok(InequalityReport { rows })
}

/// Runs a suite on a real vector (float path, tolerance in bits).
pub fn check_real_vector(
    g: &RealEntropyVector,
    suite: &[LinearFunctional],
    tolerance_bits: f64,
) -> Result<InequalityReport, IneqError> {
    let mut rows = Vec::with_capacity(suite.len());
    for f in suite {
        if f.n() != g.n() {
            return Err(IneqError::DimensionMismatch(f.n(), g.n()));
        }
        let slack = f.slack_bits_real(g);
        let sign = if slack > tolerance_bits {
            Sign::Positive
        } else if slack < -tolerance_bits {
            Sign::Negative
        } else {
            Sign::Zero
        };
        rows.push(ReportRow { name: f.name().to_string(), sign, witness: None, slack_bits: slack });
    }
    Ok(InequalityReport { rows })
}

// --- serde: {"n": 4, "coeffs": {"12": "1", "1": "-1"}, "name": "ingleton"} --

impl Serialize for LinearFunctional {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct CoeffsSer<'a>(&'a LinearFunctional);
        impl Serialize for CoeffsSer<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.coeffs.len()))?;
                for (&m, c) in &self.0.coeffs {
                    map.serialize_entry(&VarSet(m).label(), &c.to_string())?;
                }
                map.end()
            }
        }
        let mut st = s.serialize_struct("LinearFunctional", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("coeffs", &CoeffsSer(self))?;
        st.serialize_field("name", &self.name)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LinearFunctional {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            n: usize,
            coeffs: BTreeMap<String, String>,
            name: String,
        }
        let w = Wire::deserialize(d)?;
        let mut coeffs = BTreeMap::new();
        for (label, c) in &w.coeffs {
            let vs = VarSet::parse_label(label).map_err(D::Error::custom)?;
            let c = parse_rational(c)
                .ok_or_else(|| D::Error::custom(format!("bad coefficient {c:?}")))?;
            coeffs.insert(vs, c);
        }
        LinearFunctional::new(w.n, coeffs, w.name).map_err(D::Error::custom)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => Some(BigRational::new(n.trim().parse().ok()?, d.trim().parse().ok()?)),
        None => Some(BigRational::from(s.trim().parse::<BigInt>().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::entropy_from_characterization;
    use crate::group::{FiniteGroup, GroupCharacterization};

    fn vector(pairs: &[(&str, u64)]) -> EntropyVector {
        let n = pairs.iter().map(|(l, _)| l.len()).max().unwrap();
        let mut by = BTreeMap::new();
        for (label, k) in pairs {
            by.insert(VarSet::parse_label(label).unwrap(), BigUint::from(*k));
        }
        EntropyVector::from_indices(n, &by).unwrap()
    }

    /// All-equal vector g(α) = log₂ k for every α.
    fn constant_vector(n: usize, k: u64) -> EntropyVector {
        let mut by = BTreeMap::new();
        for vs in VarSet::nonempty_subsets(n) {
            by.insert(vs, BigUint::from(k));
        }
        EntropyVector::from_indices(n, &by).unwrap()
    }

    /// n independent fair bits: g(α) = |α|.
    fn independent_bits(n: usize) -> EntropyVector {
        let mut by = BTreeMap::new();
        for vs in VarSet::nonempty_subsets(n) {
            by.insert(vs, BigUint::from(1u64 << vs.len()));
        }
        EntropyVector::from_indices(n, &by).unwrap()
    }

    #[test]
    fn elemental_counts() {
        assert_eq!(elemental_shannon_inequalities(1).unwrap().len(), 1);
        assert_eq!(elemental_shannon_inequalities(2).unwrap().len(), 3);
        assert_eq!(elemental_shannon_inequalities(3).unwrap().len(), 9);
        assert_eq!(elemental_shannon_inequalities(4).unwrap().len(), 4 + 6 * 4);
        assert!(elemental_shannon_inequalities(0).is_err());
        assert!(elemental_shannon_inequalities(7).is_err());
    }

    #[test]
    fn elemental_n1_is_plain_nonnegativity() {
        let suite = elemental_shannon_inequalities(1).unwrap();
        assert_eq!(suite[0].coefficient(VarSet::singleton(1)), BigRational::one());
    }

    #[test]
    fn ingleton_coefficients() {
        let f = ingleton_functional();
        for plus in ["12", "13", "14", "23", "24"] {
            assert_eq!(f.coefficient(VarSet::parse_label(plus).unwrap()), BigRational::one());
        }
        for minus in ["1", "2", "34", "123", "124"] {
            assert_eq!(
                f.coefficient(VarSet::parse_label(minus).unwrap()),
                -BigRational::one()
            );
        }
        assert!(f.coefficient(VarSet::parse_label("1234").unwrap()).is_zero());
    }

    #[test]
    fn ingleton_on_special_vectors() {
        let f = ingleton_functional();
        // All-equal vector: 5c − 5c = 0.
        let ev = evaluate_exact(&f, &constant_vector(4, 7)).unwrap();
        assert_eq!(ev.sign, Sign::Zero);
        // Four independent bits: 10 − 10 = 0.
        let ev = evaluate_exact(&f, &independent_bits(4)).unwrap();
        assert_eq!(ev.sign, Sign::Zero);
    }

    #[test]
    fn zhang_yeung_on_special_vectors() {
        let f = zhang_yeung_functional();
        assert_eq!(evaluate_exact(&f, &constant_vector(4, 5)).unwrap().sign, Sign::Zero);
        assert_eq!(evaluate_exact(&f, &independent_bits(4)).unwrap().sign, Sign::Zero);
    }

    #[test]
    fn zhang_yeung_expansion_coefficients() {
        // Spot-check the expanded joint-entropy coefficients.
        let f = zhang_yeung_functional();
        let c = |l: &str| f.coefficient(VarSet::parse_label(l).unwrap());
        let int = |v: i64| BigRational::from(BigInt::from(v));
        assert_eq!(c("1"), int(-1));
        assert_eq!(c("2"), int(0));
        assert_eq!(c("12"), int(-1));
        assert_eq!(c("34"), int(3));
        assert_eq!(c("134"), int(-4));
        assert_eq!(c("13"), int(3));
        assert_eq!(c("14"), int(3));
        assert_eq!(c("23"), int(1));
        assert_eq!(c("24"), int(1));
        assert_eq!(c("234"), int(-1));
        assert_eq!(c("3"), int(-2));
        assert_eq!(c("4"), int(-2));
    }

    #[test]
    fn evaluate_exact_mutual_information() {
        let suite = elemental_shannon_inequalities(2).unwrap();
        let mi = suite.iter().find(|f| f.name() == "cmi:1,2|").unwrap();
        // Dependent pair: I > 0 (9 > 6).
        let ev = evaluate_exact(mi, &vector(&[("1", 3), ("2", 3), ("12", 6)])).unwrap();
        assert_eq!(ev.sign, Sign::Positive);
        assert_eq!(ev.positive_product, BigUint::from(9u32));
        assert_eq!(ev.negative_product, BigUint::from(6u32));
        // Independent pair: I = 0 (6 = 6).
        let ev = evaluate_exact(mi, &vector(&[("1", 3), ("2", 2), ("12", 6)])).unwrap();
        assert_eq!(ev.sign, Sign::Zero);
    }

    #[test]
    fn exact_sign_matches_float_sign_on_group_point() {
        // Ingleton on an S₃-based 4-tuple, exact vs float.
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let subs = s3.enumerate_subgroups().unwrap();
        let a3 = subs.iter().find(|s| s.order() == 3).unwrap().clone();
        let pairs: Vec<_> = subs.iter().filter(|s| s.order() == 2).cloned().collect();
        let c = GroupCharacterization::new(
            s3.clone(),
            vec![pairs[0].clone(), pairs[1].clone(), a3, s3.trivial_subgroup()],
        )
        .unwrap();
        let g = entropy_from_characterization(&c);
        let report = check_entropy_vector(&g, &[ingleton_functional()]).unwrap();
        let row = &report.rows[0];
        if row.slack_bits.abs() > 1e-6 {
            let float_sign = if row.slack_bits > 0.0 { Sign::Positive } else { Sign::Negative };
            assert_eq!(row.sign, float_sign);
        }
    }

    #[test]
    fn shannon_suite_on_group_vector() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let a = z6.generated_subgroup(&[3]).unwrap();
        let b = z6.generated_subgroup(&[2]).unwrap();
        let c = GroupCharacterization::new(z6, vec![a, b]).unwrap();
        let g = entropy_from_characterization(&c);
        let suite = elemental_shannon_inequalities(2).unwrap();
        assert!(check_entropy_vector(&g, &suite).unwrap().all_nonnegative());
    }

    #[test]
    fn zero_vector_all_zero_slacks() {
        let report = check_entropy_vector(
            &constant_vector(2, 1),
            &elemental_shannon_inequalities(2).unwrap(),
        )
        .unwrap();
        assert!(report.rows.iter().all(|r| r.sign == Sign::Zero && r.slack_bits == 0.0));
    }

    #[test]
    fn submodularity_violator_caught() {
        let g = vector(&[("1", 2), ("2", 2), ("12", 8)]);
        let suite = elemental_shannon_inequalities(2).unwrap();
        let report = check_entropy_vector(&g, &suite).unwrap();
        assert!(!report.all_nonnegative());
        let bad: Vec<&str> = report.violations().map(|r| r.name.as_str()).collect();
        assert_eq!(bad, ["cmi:1,2|"]);
    }

    #[test]
    fn real_path_matches_exact_path() {
        let g = vector(&[("1", 3), ("2", 3), ("12", 6)]);
        let suite = elemental_shannon_inequalities(2).unwrap();
        let exact = check_entropy_vector(&g, &suite).unwrap();
        let real = check_real_vector(&g.to_real(), &suite, 1e-9).unwrap();
        for (e, r) in exact.rows.iter().zip(&real.rows) {
            assert_eq!(e.sign, r.sign, "{}", e.name);
            assert!((e.slack_bits - r.slack_bits).abs() < 1e-9);
        }
    }

    #[test]
    fn rational_coefficients_cleared_by_lcm() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(
            VarSet::singleton(1),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        );
        coeffs.insert(
            VarSet::singleton(2),
            BigRational::new(BigInt::from(-1), BigInt::from(3)),
        );
        let f = LinearFunctional::new(2, coeffs, "halves").unwrap();
        let ints: BTreeMap<String, BigInt> = f
            .integer_coefficients()
            .into_iter()
            .map(|(vs, d)| (vs.label(), d))
            .collect();
        assert_eq!(ints["1"], BigInt::from(3));
        assert_eq!(ints["2"], BigInt::from(-2));
    }

    #[test]
    fn functional_json_round_trip() {
        let f = ingleton_functional();
        let json = serde_json::to_string(&f).unwrap();
        let back: LinearFunctional = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        // Rational coefficients serialize as "p/q".
        let mut coeffs = BTreeMap::new();
        coeffs.insert(
            VarSet::singleton(1),
            BigRational::new(BigInt::from(3), BigInt::from(2)),
        );
        let f = LinearFunctional::new(1, coeffs, "x").unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains("3/2"));
        let back: LinearFunctional = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let f = ingleton_functional();
        let g = vector(&[("1", 2), ("2", 2), ("12", 4)]);
        assert!(matches!(
            evaluate_exact(&f, &g),
            Err(IneqError::DimensionMismatch(4, 2))
        ));
    }
}
