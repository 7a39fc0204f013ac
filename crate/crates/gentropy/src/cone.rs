//! Exact rational polyhedral cones in H-representation.
//!
//! A cone is a list of integer-coefficient rows `Σ c_i x_i ≥ 0` plus
//! equality rows `Σ c_i x_i = 0` over named coordinates.  Projection is
//! Fourier–Motzkin: equalities substitute their coordinate out first,
//! remaining inequalities combine pairwise by sign; rows are gcd-normalized
//! and deduplicated after every step.  Redundancy removal beyond that and
//! cone-implication checks are exact rational feasibility questions
//! answered by the phase-1 simplex in [`crate::simplex`].

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::entropy::{EntropyVector, RealEntropyVector};
use crate::ineq::{exact_sign_of_terms, LinearFunctional, Sign};
use crate::simplex::nonneg_combination_exists;
use crate::varset::VarSet;

/// Default intermediate-row cap for Fourier–Motzkin elimination.
pub const DEFAULT_ROW_CAP: usize = 200_000;

#[derive(Debug, Error)]
pub enum ConeError {
    #[error("row has {got} coefficients, cone has {expected} coordinates")]
    RowShape { got: usize, expected: usize },
    #[error("duplicate coordinate label {0:?}")]
    DuplicateLabel(String),
    #[error("coordinate {0:?} does not exist in this cone")]
    UnknownLabel(String),
    #[error("projection must keep at least one coordinate")]
    EmptyKeep,
    #[error("label sets differ: {0:?} vs {1:?}")]
    LabelMismatch(Vec<String>, Vec<String>),
    #[error(
        "eliminating {label:?} would create {would_be} rows, over the cap {cap}; \
         raise the cap or project fewer coordinates"
    )]
    RowCapExceeded { label: String, would_be: usize, cap: usize },
    #[error("coordinate {0:?} is not a subset label usable with an entropy vector")]
    NotASubsetLabel(String),
    #[error("vector over n={vector_n} does not cover coordinate {label:?}")]
    VectorTooSmall { label: String, vector_n: usize },
    #[error("point has {got} coordinates, cone has {expected}")]
    PointShape { got: usize, expected: usize },
    #[error("suite is empty; use full_space to build an unconstrained cone")]
    EmptySuite,
    #[error("bad cone text at line {line}: {msg}")]
    Text { line: usize, msg: String },
}

/// Polyhedral cone `{x : A x ≥ 0, E x = 0}` with named coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cone {
    labels: Vec<String>,
    inequalities: Vec<Vec<BigInt>>,
    equalities: Vec<Vec<BigInt>>,
}

/// Which coordinates a projection keeps, and how to rename them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProjectionSpec {
    pub keep: Vec<String>,
    /// Source label → target label; identity when absent.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub rename: BTreeMap<String, String>,
}

impl ProjectionSpec {
    pub fn keep_only<I: IntoIterator<Item = S>, S: Into<String>>(keep: I) -> ProjectionSpec {
        ProjectionSpec { keep: keep.into_iter().map(Into::into).collect(), rename: BTreeMap::new() }
    }
}

impl Cone {
    pub fn new(
        labels: Vec<String>,
        inequalities: Vec<Vec<BigInt>>,
        equalities: Vec<Vec<BigInt>>,
    ) -> Result<Cone, ConeError> {
        let d = labels.len();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(ConeError::DuplicateLabel(l.clone()));
            }
        }
        let mut cone = Cone { labels, inequalities: Vec::new(), equalities: Vec::new() };
        let mut ineq_set = BTreeSet::new();
        for row in inequalities {
            if row.len() != d {
                return Err(ConeError::RowShape { got: row.len(), expected: d });
            }
            if let Some(norm) = normalize_inequality(row) {
                ineq_set.insert(norm);
            }
        }
        let mut eq_set = BTreeSet::new();
        for row in equalities {
            if row.len() != d {
                return Err(ConeError::RowShape { got: row.len(), expected: d });
            }
            if let Some(norm) = normalize_equality(row) {
                eq_set.insert(norm);
            }
        }
        cone.inequalities = ineq_set.into_iter().collect();
        cone.equalities = eq_set.into_iter().collect();
        Ok(cone)
    }

    /// The unconstrained cone (whole space) on the given coordinates.
    pub fn full_space(labels: Vec<String>) -> Result<Cone, ConeError> {
        Cone::new(labels, Vec::new(), Vec::new())
    }

    /// Canonical coordinate labels for entropy space over n variables.
    pub fn entropy_labels(n: usize) -> Vec<String> {
        VarSet::nonempty_subsets(n).map(|v| v.label()).collect()
    }

    /// Builds a cone from functionals (`≥ 0` rows) and equality functionals.
    pub fn from_suite(
        suite: &[LinearFunctional],
        equality_suite: &[LinearFunctional],
    ) -> Result<Cone, ConeError> {
        let n = suite
            .first()
            .or_else(|| equality_suite.first())
            .ok_or(ConeError::EmptySuite)?
            .n();
        let labels = Self::entropy_labels(n);
        let to_row = |f: &LinearFunctional| -> Vec<BigInt> {
            let mut row = vec![BigInt::zero(); labels.len()];
            for (vs, c) in f.integer_coefficients() {
                row[vs.0 as usize - 1] = c;
            }
            row
        };
        let ineqs = suite.iter().map(to_row).collect();
        let eqs = equality_suite.iter().map(to_row).collect();
        Cone::new(labels, ineqs, eqs)
    }

    /// The polymatroid cone Γₙ from the elemental Shannon inequalities.
    pub fn gamma(n: usize) -> Result<Cone, ConeError> {
        let suite = crate::ineq::elemental_shannon_inequalities(n)
            .map_err(|_| ConeError::EmptySuite)?;
        Cone::from_suite(&suite, &[])
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn inequalities(&self) -> &[Vec<BigInt>] {
        &self.inequalities
    }

    pub fn equalities(&self) -> &[Vec<BigInt>] {
        &self.equalities
    }

    fn label_index(&self, label: &str) -> Result<usize, ConeError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| ConeError::UnknownLabel(label.to_string()))
    }

    /// Fourier–Motzkin elimination of one coordinate, with the default row
    /// cap.
    pub fn eliminate(&self, label: &str) -> Result<Cone, ConeError> {
        self.eliminate_with_cap(label, DEFAULT_ROW_CAP)
    }

    pub fn eliminate_with_cap(&self, label: &str, cap: usize) -> Result<Cone, ConeError> {
        let col = self.label_index(label)?;

        let mut ineqs: Vec<Vec<BigInt>>;
        let mut eqs: Vec<Vec<BigInt>>;

        // Prefer substitution: any equality that mentions the coordinate
        // eliminates it from every other row.
        let pivot_eq = self
            .equalities
            .iter()
            .enumerate()
            .filter(|(_, row)| !row[col].is_zero())
            .min_by_key(|(i, row)| (row[col].abs(), *i))
            .map(|(i, _)| i);

        if let Some(pi) = pivot_eq {
            let pivot = &self.equalities[pi];
            ineqs = self
                .inequalities
                .iter()
                .map(|row| substitute(row, pivot, col))
                .collect();
            eqs = self
                .equalities
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != pi)
                .map(|(_, row)| substitute(row, pivot, col))
                .collect();
        } else {
            let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
            for row in &self.inequalities {
                match row[col].sign() {
                    num_bigint::Sign::Plus => pos.push(row),
                    num_bigint::Sign::Minus => neg.push(row),
                    num_bigint::Sign::NoSign => zero.push(row.clone()),
                }
            }
            let would_be = zero.len() + pos.len() * neg.len();
            if would_be > cap {
                return Err(ConeError::RowCapExceeded {
                    label: label.to_string(),
                    would_be,
                    cap,
                });
            }
            ineqs = zero;
            for p in &pos {
                for n in &neg {
                    // (−n_c)·p + p_c·n has a zero at `col`; both multipliers
                    // are positive, preserving the inequality direction.
                    let np = -&n[col];
                    let pc = p[col].clone();
                    let row: Vec<BigInt> = p
                        .iter()
                        .zip(n.iter())
                        .map(|(a, b)| &np * a + &pc * b)
                        .collect();
                    ineqs.push(row);
                }
            }
            eqs = self.equalities.clone(); // none touch `col` here
        }

        for row in ineqs.iter_mut().chain(eqs.iter_mut()) {
            row.remove(col);
        }
        let mut labels = self.labels.clone();
        labels.remove(col);
        Cone::new(labels, ineqs, eqs)
    }

    /// Projects onto `spec.keep` by eliminating every other coordinate.
    ///
    /// Elimination order: coordinates substitutable through an equality
    /// first, then fewest pairwise products, ties broken by label.
    pub fn project(&self, spec: &ProjectionSpec) -> Result<Cone, ConeError> {
        self.project_with_cap(spec, DEFAULT_ROW_CAP)
    }

    pub fn project_with_cap(&self, spec: &ProjectionSpec, cap: usize) -> Result<Cone, ConeError> {
        if spec.keep.is_empty() {
            return Err(ConeError::EmptyKeep);
        }
        for l in &spec.keep {
            self.label_index(l)?;
        }
        let keep: BTreeSet<&String> = spec.keep.iter().collect();
        let mut cone = self.clone();
        loop {
            let mut candidates: Vec<(usize, &String)> = Vec::new();
            for (i, l) in cone.labels.iter().enumerate() {
                if !keep.contains(l) {
                    candidates.push((i, l));
                }
            }
            if candidates.is_empty() {
                break;
            }
            let cost = |col: usize| -> (usize, usize) {
                if cone.equalities.iter().any(|row| !row[col].is_zero()) {
                    return (0, 0);
                }
                let p = cone.inequalities.iter().filter(|r| r[col].is_positive()).count();
                let n = cone.inequalities.iter().filter(|r| r[col].is_negative()).count();
                (1, p * n)
            };
            let (_, label) = candidates
                .iter()
                .min_by_key(|(i, l)| (cost(*i), (*l).clone()))
                .expect("nonempty");
            let label = (*label).clone();
            cone = cone.eliminate_with_cap(&label, cap)?;
        }
        // Reorder columns into spec.keep order, then rename.
        let perm: Vec<usize> = spec
            .keep
            .iter()
            .map(|l| cone.label_index(l).expect("kept"))
            .collect();
        let reorder = |row: &Vec<BigInt>| -> Vec<BigInt> {
            perm.iter().map(|&i| row[i].clone()).collect()
        };
        let labels = spec
            .keep
            .iter()
            .map(|l| spec.rename.get(l).unwrap_or(l).clone())
            .collect();
        Cone::new(
            labels,
            cone.inequalities.iter().map(reorder).collect(),
            cone.equalities.iter().map(reorder).collect(),
        )
    }

    /// Conjunction of two cones over the same coordinates.
    pub fn intersect(&self, other: &Cone) -> Result<Cone, ConeError> {
        if self.labels != other.labels {
            return Err(ConeError::LabelMismatch(self.labels.clone(), other.labels.clone()));
        }
        let mut ineqs = self.inequalities.clone();
        ineqs.extend(other.inequalities.iter().cloned());
        let mut eqs = self.equalities.clone();
        eqs.extend(other.equalities.iter().cloned());
        Cone::new(self.labels.clone(), ineqs, eqs)
    }

    /// Exact membership of an integer-index entropy vector: every
    /// coordinate label is read as a variable subset, and each row's sign
    /// is decided in big integers.
    pub fn member_exact(&self, g: &EntropyVector) -> Result<bool, ConeError> {
        let ks = self.vector_coordinates(g)?;
        for row in &self.equalities {
            if row_sign(row, &ks) != Sign::Zero {
                return Ok(false);
            }
        }
        for row in &self.inequalities {
            if row_sign(row, &ks) == Sign::Negative {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Float membership of a real vector, tolerance in bits.
    pub fn member_real(&self, g: &RealEntropyVector, tolerance_bits: f64) -> Result<bool, ConeError> {
        let mut coords = Vec::with_capacity(self.labels.len());
        for label in &self.labels {
            let vs = VarSet::parse_label(label)
                .map_err(|_| ConeError::NotASubsetLabel(label.clone()))?;
            if !vs.is_subset_of(VarSet::full(g.n())) {
                return Err(ConeError::VectorTooSmall { label: label.clone(), vector_n: g.n() });
            }
            coords.push(g.bits(vs));
        }
        let value = |row: &[BigInt]| -> f64 {
            row.iter()
                .zip(&coords)
                .map(|(c, x)| c.to_f64().unwrap_or(f64::NAN) * x)
                .sum()
        };
        Ok(self.equalities.iter().all(|r| value(r).abs() <= tolerance_bits)
            && self.inequalities.iter().all(|r| value(r) >= -tolerance_bits))
    }

    /// Exact membership of a rational point given in coordinate order.
    pub fn member_rational(&self, point: &[BigRational]) -> Result<bool, ConeError> {
        if point.len() != self.labels.len() {
            return Err(ConeError::PointShape { got: point.len(), expected: self.labels.len() });
        }
        let value = |row: &[BigInt]| -> BigRational {
            row.iter()
                .zip(point)
                .map(|(c, x)| BigRational::from(c.clone()) * x)
                .sum()
        };
        Ok(self.equalities.iter().all(|r| value(r).is_zero())
            && self.inequalities.iter().all(|r| !value(r).is_negative()))
    }

    fn vector_coordinates<'a>(
        &self,
        g: &'a EntropyVector,
    ) -> Result<Vec<&'a BigUint>, ConeError> {
        self.labels
            .iter()
            .map(|label| {
                let vs = VarSet::parse_label(label)
                    .map_err(|_| ConeError::NotASubsetLabel(label.clone()))?;
                if !vs.is_subset_of(VarSet::full(g.n())) {
                    return Err(ConeError::VectorTooSmall {
                        label: label.clone(),
                        vector_n: g.n(),
                    });
                }
                Ok(g.index(vs))
            })
            .collect()
    }

    /// True iff every point of the cone satisfies `row·x ≥ 0`.
    ///
    /// By the homogeneous Farkas lemma this holds exactly when `row` is a
    /// nonnegative combination of the inequality rows plus an arbitrary
    /// combination of the equality rows, which keeps the feasibility
    /// tableau as tall as the dimension rather than the row count.
    pub fn implies_inequality(&self, row: &[BigInt]) -> bool {
        let mut columns: Vec<Vec<BigRational>> = self
            .inequalities
            .iter()
            .map(|r| to_rational_row(r))
            .collect();
        for r in &self.equalities {
            columns.push(to_rational_row(r));
            columns.push(r.iter().map(|c| BigRational::from(-c.clone())).collect());
        }
        let target = to_rational_row(row);
        nonneg_combination_exists(&columns, &target)
    }

    /// True iff every point of the cone satisfies `row·x = 0`.
    pub fn implies_equality(&self, row: &[BigInt]) -> bool {
        let negated: Vec<BigInt> = row.iter().map(|c| -c.clone()).collect();
        self.implies_inequality(row) && self.implies_inequality(&negated)
    }

    /// True iff `other`'s solution set is contained in this cone's
    /// (labels must match; coordinates are aligned by label order).
    pub fn contains_cone(&self, other: &Cone) -> bool {
        if self.labels != other.labels {
            return false;
        }
        self.inequalities.iter().all(|row| other.implies_inequality(row))
            && self.equalities.iter().all(|row| other.implies_equality(row))
    }

    /// Equality of solution sets via mutual row implication.
    pub fn equivalent(&self, other: &Cone) -> bool {
        self.contains_cone(other) && other.contains_cone(self)
    }

    /// Drops duplicate rows and positive multiples (always collapsed by
    /// normalization) and, in full mode, every inequality row proven
    /// redundant by exact rational feasibility of its strict-violation
    /// system.  The solution set never changes.
    pub fn remove_redundant(&self, full: bool) -> Cone {
        if !full {
            return self.clone(); // constructor normalization already deduped
        }
        let mut kept: Vec<Vec<BigInt>> = self.inequalities.clone();
        let mut i = 0;
        while i < kept.len() {
            let candidate = kept[i].clone();
            let rest: Vec<Vec<BigInt>> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, r)| r.clone())
                .collect();
            let sub = Cone {
                labels: self.labels.clone(),
                inequalities: rest.clone(),
                equalities: self.equalities.clone(),
            };
            if sub.implies_inequality(&candidate) {
                kept = rest;
            } else {
                i += 1;
            }
        }
        Cone {
            labels: self.labels.clone(),
            inequalities: kept,
            equalities: self.equalities.clone(),
        }
    }

    /// Text form: a `labels:` header, then one row per line with integer
    /// coefficients and a trailing `>=` or `=` marker.
    pub fn to_text(&self) -> String {
        let mut out = format!("labels: {}\n", self.labels.join(" "));
        for row in &self.inequalities {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("{} >=\n", cells.join(" ")));
        }
        for row in &self.equalities {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("{} =\n", cells.join(" ")));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Cone, ConeError> {
        let mut labels: Option<Vec<String>> = None;
        let mut ineqs = Vec::new();
        let mut eqs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("labels:") {
                labels = Some(rest.split_whitespace().map(str::to_string).collect());
                continue;
            }
            let mut cells: Vec<&str> = line.split_whitespace().collect();
            let marker = cells.pop().ok_or(ConeError::Text {
                line: lineno + 1,
                msg: "empty row".into(),
            })?;
            let row: Result<Vec<BigInt>, _> = cells.iter().map(|c| c.parse()).collect();
            let row = row.map_err(|e| ConeError::Text {
                line: lineno + 1,
                msg: format!("bad coefficient: {e}"),
            })?;
            match marker {
                ">=" | "≥" => ineqs.push(row),
                "=" => eqs.push(row),
                other => {
                    return Err(ConeError::Text {
                        line: lineno + 1,
                        msg: format!("unknown marker {other:?}"),
                    })
                }
            }
        }
        let labels = labels.ok_or(ConeError::Text { line: 0, msg: "missing labels header".into() })?;
        Cone::new(labels, ineqs, eqs)
    }
}

fn to_rational_row(row: &[BigInt]) -> Vec<BigRational> {
    row.iter().map(|c| BigRational::from(c.clone())).collect()
}

fn row_sign(row: &[BigInt], ks: &[&BigUint]) -> Sign {
    let terms: Vec<(BigInt, &BigUint)> = row
        .iter()
        .zip(ks)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, k)| (c.clone(), *k))
        .collect();
    exact_sign_of_terms(&terms).sign
}

/// `t·row + s·pivot` with `t = |p|/g > 0` chosen so the coordinate at
/// `col` cancels; sound for inequality rows because `t` is positive.
fn substitute(row: &[BigInt], pivot: &[BigInt], col: usize) -> Vec<BigInt> {
    let c = &row[col];
    if c.is_zero() {
        return row.to_vec();
    }
    let p = &pivot[col];
    let g = p.gcd(c);
    let t = (p / &g).abs();
    let s = -(c / &g) * p.signum();
    row.iter().zip(pivot).map(|(a, b)| &t * a + &s * b).collect()
}

/// Divides by the gcd; returns None for all-zero rows.
fn normalize_inequality(row: Vec<BigInt>) -> Option<Vec<BigInt>> {
    let g = row_gcd(&row)?;
    Some(row.into_iter().map(|c| c / &g).collect())
}

/// Divides by the gcd and flips so the first nonzero coefficient is
/// positive (both orientations describe the same hyperplane).
fn normalize_equality(row: Vec<BigInt>) -> Option<Vec<BigInt>> {
    let g = row_gcd(&row)?;
    let mut out: Vec<BigInt> = row.into_iter().map(|c| c / &g).collect();
    if out.iter().find(|c| !c.is_zero())?.is_negative() {
        for c in out.iter_mut() {
            *c = -c.clone();
        }
    }
    Some(out)
}

fn row_gcd(row: &[BigInt]) -> Option<BigInt> {
    let mut g = BigInt::zero();
    for c in row {
        g = g.gcd(c);
    }
    if g.is_zero() {
        None
    } else {
        Some(g)
    }
}

// --- serde: coefficients as decimal strings -------------------------------

impl Serialize for Cone {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            labels: &'a [String],
            inequalities: Vec<Vec<String>>,
            equalities: Vec<Vec<String>>,
        }
        let enc = |rows: &[Vec<BigInt>]| -> Vec<Vec<String>> {
            rows.iter()
                .map(|r| r.iter().map(|c| c.to_string()).collect())
                .collect()
        };
        Wire {
            labels: &self.labels,
            inequalities: enc(&self.inequalities),
            equalities: enc(&self.equalities),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cone {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            labels: Vec<String>,
            #[serde(default)]
            inequalities: Vec<Vec<String>>,
            #[serde(default)]
            equalities: Vec<Vec<String>>,
        }
        let w = Wire::deserialize(d)?;
        let dec = |rows: Vec<Vec<String>>| -> Result<Vec<Vec<BigInt>>, D::Error> {
            rows.into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|c| c.parse().map_err(|e| D::Error::custom(format!("{e}"))))
                        .collect()
                })
                .collect()
        };
        Cone::new(w.labels, dec(w.inequalities)?, dec(w.equalities)?).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn cone(labels: &[&str], ineqs: &[&[i64]], eqs: &[&[i64]]) -> Cone {
        Cone::new(
            labels.iter().map(|s| s.to_string()).collect(),
            ineqs.iter().map(|r| r.iter().map(|&c| big(c)).collect()).collect(),
            eqs.iter().map(|r| r.iter().map(|&c| big(c)).collect()).collect(),
        )
        .unwrap()
    }

    fn rp(coords: &[i64]) -> Vec<BigRational> {
        coords.iter().map(|&c| BigRational::from(big(c))).collect()
    }

    #[test]
    fn normalization_collapses_multiples() {
        let c = cone(&["x", "y"], &[&[1, 0], &[2, 0], &[0, -3], &[0, 0]], &[]);
        assert_eq!(c.inequalities().len(), 2);
        let c = cone(&["x", "y"], &[], &[&[2, -2], &[-1, 1]]);
        assert_eq!(c.equalities(), &[vec![big(1), big(-1)]]);
    }

    #[test]
    fn gamma2_has_three_rows_in_dimension_three() {
        let g2 = Cone::gamma(2).unwrap();
        assert_eq!(g2.labels(), &["1", "2", "12"]);
        assert_eq!(g2.inequalities().len(), 3);
        assert!(g2.equalities().is_empty());
    }

    #[test]
    fn empty_suite_is_rejected_but_full_space_exists() {
        assert!(Cone::from_suite(&[], &[]).is_err());
        let full = Cone::full_space(vec!["1".into(), "2".into()]).unwrap();
        assert!(full.inequalities().is_empty());
    }

    #[test]
    fn textbook_shadow() {
        // {y ≥ 0, x − y ≥ 0} eliminate y → {x ≥ 0}.
        let c = cone(&["x", "y"], &[&[0, 1], &[1, -1]], &[]);
        let shadow = c.eliminate("y").unwrap();
        assert_eq!(shadow.labels(), &["x"]);
        assert_eq!(shadow.inequalities(), &[vec![big(1)]]);
    }

    #[test]
    fn substitution_shadow() {
        // {x = y, x ≥ 0} eliminate y → {x ≥ 0}.
        let c = cone(&["x", "y"], &[&[1, 0]], &[&[1, -1]]);
        let shadow = c.eliminate("y").unwrap();
        assert_eq!(shadow.labels(), &["x"]);
        assert_eq!(shadow.inequalities(), &[vec![big(1)]]);
        assert!(shadow.equalities().is_empty());
    }

    #[test]
    fn gamma2_projects_to_coordinate_nonnegativity() {
        let g2 = Cone::gamma(2).unwrap();
        let shadow = g2.eliminate("12").unwrap();
        let expect = cone(&["1", "2"], &[&[1, 0], &[0, 1]], &[]);
        assert_eq!(shadow, expect);
    }

    #[test]
    fn projection_onto_all_coordinates_is_identity() {
        let g2 = Cone::gamma(2).unwrap();
        let spec = ProjectionSpec::keep_only(["1", "2", "12"]);
        assert_eq!(g2.project(&spec).unwrap(), g2);
    }

    #[test]
    fn projection_dropping_everything_relevant() {
        // {x+y+z ≥ 0} onto {x}: no constraint survives.
        let c = cone(&["x", "y", "z"], &[&[1, 1, 1]], &[]);
        let p = c.project(&ProjectionSpec::keep_only(["x"])).unwrap();
        assert!(p.inequalities().is_empty());
        assert!(p.equalities().is_empty());
    }

    #[test]
    fn projection_restricts_polymatroids() {
        // Γₙ restricted to the first n−1 variables is Γ_{n−1}.
        for n in [2usize, 3] {
            let gn = Cone::gamma(n).unwrap();
            let keep: Vec<String> = VarSet::nonempty_subsets(n - 1).map(|v| v.label()).collect();
            let projected = gn.project(&ProjectionSpec::keep_only(keep)).unwrap();
            let expect = Cone::gamma(n - 1).unwrap();
            assert!(projected.equivalent(&expect), "n = {n}");
        }
    }

    #[test]
    fn elimination_order_does_not_change_the_shadow() {
        let c = cone(
            &["a", "b", "c", "d"],
            &[&[1, -1, 0, 2], &[0, 1, -1, 0], &[-1, 0, 1, 1], &[2, 1, 1, -1], &[0, -1, 0, 1]],
            &[&[1, 1, -1, -1]],
        );
        let via_bc = c
            .eliminate("b")
            .unwrap()
            .eliminate("c")
            .unwrap();
        let via_cb = c
            .eliminate("c")
            .unwrap()
            .eliminate("b")
            .unwrap();
        assert!(via_bc.equivalent(&via_cb));
    }

    #[test]
    fn intersect_examples() {
        let g2 = Cone::gamma(2).unwrap();
        let full = Cone::full_space(g2.labels().to_vec()).unwrap();
        assert_eq!(g2.intersect(&full).unwrap(), g2);
        assert_eq!(g2.intersect(&g2).unwrap(), g2);
        let other = Cone::gamma(3).unwrap();
        assert!(g2.intersect(&other).is_err());
    }

    #[test]
    fn membership_of_entropy_vectors() {
        use num_bigint::BigUint;
        use std::collections::BTreeMap;
        let g2 = Cone::gamma(2).unwrap();
        let vector = |k1: u64, k2: u64, k12: u64| {
            let mut by = BTreeMap::new();
            by.insert(VarSet::parse_label("1").unwrap(), BigUint::from(k1));
            by.insert(VarSet::parse_label("2").unwrap(), BigUint::from(k2));
            by.insert(VarSet::parse_label("12").unwrap(), BigUint::from(k12));
            EntropyVector::from_indices(2, &by).unwrap()
        };
        // Zero vector: in every cone.
        assert!(g2.member_exact(&vector(1, 1, 1)).unwrap());
        assert!(g2.member_exact(&vector(3, 2, 6)).unwrap());
        // Submodularity violator.
        assert!(!g2.member_exact(&vector(2, 2, 8)).unwrap());
        // Float path agrees.
        assert!(g2.member_real(&vector(3, 2, 6).to_real(), 1e-9).unwrap());
        assert!(!g2.member_real(&vector(2, 2, 8).to_real(), 1e-9).unwrap());
    }

    #[test]
    fn rational_point_membership() {
        let c = cone(&["x", "y"], &[&[1, 0], &[0, 1]], &[]);
        assert!(c.member_rational(&rp(&[0, 0])).unwrap());
        assert!(c.member_rational(&rp(&[3, 5])).unwrap());
        assert!(!c.member_rational(&rp(&[-1, 5])).unwrap());
        assert!(c.member_rational(&rp(&[1, 2, 3])).is_err());
    }

    #[test]
    fn redundancy_removal() {
        // x ≥ 0, y ≥ 0 imply x + y ≥ 0.
        let c = cone(&["x", "y"], &[&[1, 0], &[0, 1], &[1, 1]], &[]);
        let slim = c.remove_redundant(true);
        assert_eq!(slim.inequalities().len(), 2);
        assert!(slim.equivalent(&c));
        // Γ₂ is already irredundant.
        let g2 = Cone::gamma(2).unwrap();
        assert_eq!(g2.remove_redundant(true), g2);
    }

    #[test]
    fn implication_checks() {
        let c = cone(&["x", "y"], &[&[1, 0], &[0, 1]], &[]);
        assert!(c.implies_inequality(&[big(1), big(1)]));
        assert!(!c.implies_inequality(&[big(1), big(-1)]));
        let diag = cone(&["x", "y"], &[&[1, 0]], &[&[1, -1]]);
        assert!(diag.implies_inequality(&[big(0), big(1)]));
        assert!(diag.implies_equality(&[big(2), big(-2)]));
    }

    #[test]
    fn row_cap_respected() {
        let c = cone(
            &["x", "y"],
            &[&[1, 1], &[2, 1], &[3, 1], &[-1, 1], &[-2, 1], &[-3, 1]],
            &[],
        );
        match c.eliminate_with_cap("x", 4) {
            Err(ConeError::RowCapExceeded { would_be, cap, .. }) => {
                assert_eq!(would_be, 9);
                assert_eq!(cap, 4);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn fm_soundness_on_random_points() {
        // Points in the cone project into the eliminated cone.
        let c = cone(
            &["x", "y", "z"],
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -2, 1], &[-1, 1, 1]],
            &[],
        );
        let shadow = c.eliminate("z").unwrap();
        let mut checked = 0;
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                for z in -4i64..=4 {
                    let p = rp(&[x, y, z]);
                    if c.member_rational(&p).unwrap() {
                        assert!(shadow.member_rational(&rp(&[x, y])).unwrap());
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 10);
    }

    #[test]
    fn text_round_trip() {
        let g2 = Cone::gamma(2).unwrap();
        let text = g2.to_text();
        let back = Cone::from_text(&text).unwrap();
        assert_eq!(back, g2);
        // Unicode marker accepted.
        let alt = "labels: x\n1 ≥\n";
        let c = Cone::from_text(alt).unwrap();
        assert_eq!(c.inequalities(), &[vec![BigInt::one()]]);
    }

    #[test]
    fn json_round_trip() {
        let c = cone(&["1", "2", "12"], &[&[1, 1, -1]], &[&[1, -1, 0]]);
        let json = serde_json::to_string(&c).unwrap();
        let back: Cone = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
