//! Extension constraint sets and the extend–intersect–project bound.
//!
//! Each extension kind maps an entropy function on n variables to one on m
//! variables (m = 2n, n+1, or n+2) that satisfies a small set of equality
//! constraints 𝓗.  Intersecting any outer bound in dimension m with 𝓗 and
//! projecting back down gives an outer bound in dimension n.  The adhesive
//! kind also ships its explicit group witness: the fibered product
//! `K = {(a,b) ∈ G×G : aG_α = bG_α}` with the two coordinate projections.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::cone::{Cone, ConeError, ProjectionSpec};
use crate::entropy::{entropy_from_characterization, EntropyVector};
use crate::group::{FiniteGroup, GroupCharacterization, GroupError, Subgroup};
use crate::varset::{VarSet, MAX_VARS};

#[derive(Debug, Error)]
pub enum ExtensionError {
    #[error("subset {0} is not a nonempty subset of 1..={1}")]
    BadSubset(String, usize),
    #[error("subsets {0} and {1} must be disjoint")]
    Overlap(String, String),
    #[error("target dimension needs {0} variables, more than the supported {MAX_VARS}")]
    TooManyVariables(usize),
    #[error("glue subgroup is not normal: conjugating member {member} by element {conjugator} leaves it")]
    NotNormal { conjugator: u16, member: u16 },
    #[error("Markov premise g(αγ)+g(βγ) = g(γ)+g(αβγ) fails on the source vector")]
    MarkovPremiseFails,
    #[error("witness verification failed: {0}")]
    WitnessCheck(String),
    #[error("outer bound has labels for dimension {outer}, extension targets m={target}")]
    OuterDimension { outer: usize, target: usize },
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtensionKind {
    Adhesive,
    Join,
    Sw,
    Markov,
}

/// An extension's shape plus its constraint set in the target dimension.
#[derive(Clone, Debug)]
pub struct ExtensionSpec {
    pub kind: ExtensionKind,
    pub n: usize,
    pub m: usize,
    pub alpha: VarSet,
    pub beta: Option<VarSet>,
    pub gamma: Option<VarSet>,
    /// Equality rows in dimension 2^m − 1.
    pub constraints: Cone,
}

fn check_block(s: VarSet, n: usize) -> Result<(), ExtensionError> {
    if s.is_empty() || !s.is_subset_of(VarSet::full(n)) {
        return Err(ExtensionError::BadSubset(s.label(), n));
    }
    Ok(())
}

fn check_target(m: usize) -> Result<(), ExtensionError> {
    if m > MAX_VARS {
        return Err(ExtensionError::TooManyVariables(m));
    }
    Ok(())
}

/// Builds one equality row `Σ coef·h(subset) = 0` over 𝓕ₘ coordinates.
fn equality_row(m: usize, terms: &[(VarSet, i64)]) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(0); (1 << m) - 1];
    for (vs, coef) in terms {
        if !vs.is_empty() {
            row[vs.0 as usize - 1] += BigInt::from(*coef);
        }
    }
    row
}

fn constraint_cone(m: usize, rows: Vec<Vec<BigInt>>) -> Result<Cone, ConeError> {
    Cone::new(Cone::entropy_labels(m), Vec::new(), rows)
}

/// Adhesive extension constraints: a mirrored copy `{n+1..2n}` of the
/// variables that equals the original on `glue` and satisfies the
/// adhesivity equality
/// `h(1..n) + h(n+1..2n) = h(1..2n) + h(glue)`.
pub fn adhesive_constraints(n: usize, glue: VarSet) -> Result<ExtensionSpec, ExtensionError> {
    check_block(glue, n)?;
    let m = 2 * n;
    check_target(m)?;
    let mut rows = Vec::new();
    // Condition (1), two equalities per glued variable.
    for i in glue.vars() {
        let xi = VarSet::singleton(i);
        let copy = VarSet::singleton(n + i);
        rows.push(equality_row(m, &[(xi.union(copy), 1), (xi, -1)]));
        rows.push(equality_row(m, &[(copy, 1), (xi, -1)]));
    }
    // Condition (2): the copy carries the same entropy function.
    for beta in VarSet::nonempty_subsets(n) {
        rows.push(equality_row(m, &[(beta.shift_up(n), 1), (beta, -1)]));
    }
    // Condition (3): adhesivity.
    let first = VarSet::full(n);
    let second = first.shift_up(n);
    rows.push(equality_row(
        m,
        &[(first, 1), (second, 1), (VarSet::full(m), -1), (glue, -1)],
    ));
    Ok(ExtensionSpec {
        kind: ExtensionKind::Adhesive,
        n,
        m,
        alpha: glue,
        beta: None,
        gamma: None,
        constraints: constraint_cone(m, rows)?,
    })
}

/// Join extension constraints (one new variable, the common part of two
/// disjoint blocks): `h(n+1, α) = h(α)`, `h(n+1, β) = h(β)`, and
/// `h(n+1, α) + h(n+1, β) = h(n+1) + h(α, β)`.
pub fn join_extension_constraints(
    n: usize,
    left: VarSet,
    right: VarSet,
) -> Result<ExtensionSpec, ExtensionError> {
    check_block(left, n)?;
    check_block(right, n)?;
    if !left.is_disjoint(right) {
        return Err(ExtensionError::Overlap(left.label(), right.label()));
    }
    let m = n + 1;
    check_target(m)?;
    let new = VarSet::singleton(m);
    let rows = vec![
        equality_row(m, &[(new.union(left), 1), (left, -1)]),
        equality_row(m, &[(new.union(right), 1), (right, -1)]),
        equality_row(
            m,
            &[(new.union(left), 1), (new.union(right), 1), (new, -1), (left.union(right), -1)],
        ),
    ];
    Ok(ExtensionSpec {
        kind: ExtensionKind::Join,
        n,
        m,
        alpha: left,
        beta: Some(right),
        gamma: None,
        constraints: constraint_cone(m, rows)?,
    })
}

/// Slepian–Wolf extension constraints: the new variable is a compressed
/// version of `X_left` decodable with side information `X_right`:
/// `h(n+1, left) = h(left)`, `h(n+1) = h(left∪right) − h(right)`,
/// `h(n+1, right) = h(left∪right)`.
pub fn sw_extension_constraints(
    n: usize,
    left: VarSet,
    right: VarSet,
) -> Result<ExtensionSpec, ExtensionError> {
    check_block(left, n)?;
    check_block(right, n)?;
    let m = n + 1;
    check_target(m)?;
    let new = VarSet::singleton(m);
    let both = left.union(right);
    let rows = vec![
        equality_row(m, &[(new.union(left), 1), (left, -1)]),
        equality_row(m, &[(new, 1), (both, -1), (right, 1)]),
        equality_row(m, &[(new.union(right), 1), (both, -1)]),
    ];
    Ok(ExtensionSpec {
        kind: ExtensionKind::Sw,
        n,
        m,
        alpha: left,
        beta: Some(right),
        gamma: None,
        constraints: constraint_cone(m, rows)?,
    })
}

/// Markov double extension (two new variables) for sources forming the
/// chain `X_left → X_middle → X_right`.
///
/// When a source vector is supplied, the chain equality
/// `g(left∪middle) + g(right∪middle) = g(middle) + g(left∪right∪middle)`
/// gates the construction.
pub fn markov_double_extension_constraints(
    n: usize,
    left: VarSet,
    right: VarSet,
    middle: VarSet,
    source: Option<&EntropyVector>,
) -> Result<ExtensionSpec, ExtensionError> {
    for s in [left, right, middle] {
        check_block(s, n)?;
    }
    for (a, b) in [(left, right), (left, middle), (right, middle)] {
        if !a.is_disjoint(b) {
            return Err(ExtensionError::Overlap(a.label(), b.label()));
        }
    }
    let m = n + 2;
    check_target(m)?;
    if let Some(g) = source {
        // Exact index form of the Markov equality.
        let lhs: BigUint = g.index(left.union(middle)) * g.index(right.union(middle));
        let rhs: BigUint =
            g.index(middle) * g.index(left.union(right).union(middle));
        if lhs != rhs {
            return Err(ExtensionError::MarkovPremiseFails);
        }
    }
    let first = VarSet::singleton(n + 1);
    let second = VarSet::singleton(n + 2);
    let rows = vec![
        equality_row(m, &[(first.union(left), 1), (left, -1)]),
        equality_row(m, &[(second.union(middle), 1), (middle, -1)]),
        equality_row(m, &[(first, 1), (left.union(middle), -1), (middle, 1)]),
        equality_row(
            m,
            &[(second, 1), (right, -1), (middle, -1), (right.union(middle), 1)],
        ),
        equality_row(
            m,
            &[(first.union(second).union(left), 1), (first.union(second), -1)],
        ),
    ];
    Ok(ExtensionSpec {
        kind: ExtensionKind::Markov,
        n,
        m,
        alpha: left,
        beta: Some(right),
        gamma: Some(middle),
        constraints: constraint_cone(m, rows)?,
    })
}

/// The adhesive witness: `K = {(a,b) : aG_glue = bG_glue}` with the two
/// coordinate projections and the preimage subgroups they induce.
#[derive(Clone, Debug)]
pub struct AdhesiveWitness {
    /// The fibered product group K.
    pub group: FiniteGroup,
    /// First-coordinate projection per K element.
    pub first_projection: Vec<u16>,
    /// Second-coordinate projection per K element.
    pub second_projection: Vec<u16>,
    /// `H_i = T₁⁻¹(G_i)`.
    pub first_preimages: Vec<Subgroup>,
    /// `L_i = T₂⁻¹(G_i)`.
    pub second_preimages: Vec<Subgroup>,
}

/// Builds and fully verifies the adhesive group extension of a
/// characterization whose glue subgroup is normal.
///
/// Verification covers `|K| = |G||G_glue|`, the preimage cardinality
/// identity P1, the glued-copy identity P2, the intersection identities P3
/// and P4, the three extension conditions on the induced entropy vector,
/// and the conditional-independence equality chain, all as exact integer
/// identities.
pub fn adhesive_group_extension(
    c: &GroupCharacterization,
    glue: VarSet,
) -> Result<(AdhesiveWitness, GroupCharacterization), ExtensionError> {
    let n = c.n();
    check_block(glue, n)?;
    check_target(2 * n)?;
    let g = c.group();
    let glue_sub = c.subgroup_meet(glue);
    if let Some((x, h)) = g.find_normality_violation(&glue_sub) {
        return Err(ExtensionError::NotNormal { conjugator: x, member: h });
    }

    // Assemble K in lexicographic (a, b) order.
    let coset = g.coset_indices(&glue_sub);
    let mut pairs: Vec<(u16, u16)> = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            if coset[a as usize] == coset[b as usize] {
                pairs.push((a, b));
            }
        }
    }
    let expected = g.order() * glue_sub.order();
    if pairs.len() != expected {
        return Err(ExtensionError::WitnessCheck(format!(
            "|K| = {} but |G||G_glue| = {expected}",
            pairs.len()
        )));
    }
    let index_of: BTreeMap<(u16, u16), u16> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i as u16)).collect();
    let k_order = pairs.len();
    let mut table = vec![vec![0u16; k_order]; k_order];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(x, y)) in pairs.iter().enumerate() {
            let prod = (g.op(a, x), g.op(b, y));
            let Some(&idx) = index_of.get(&prod) else {
                return Err(ExtensionError::WitnessCheck(format!(
                    "K is not closed at ({a},{b})∘({x},{y})"
                )));
            };
            table[i][j] = idx;
        }
    }
    let identity = index_of[&(g.identity(), g.identity())];
    let labels = pairs.iter().map(|&(a, b)| format!("({},{})", g.label(a), g.label(b))).collect();
    // The constructor enforces the group axioms on K.
    let k_group = FiniteGroup::from_table(table, identity, Some(labels))?;

    let member_pairs =
        |pred: &dyn Fn(u16, u16) -> bool| -> Result<Subgroup, GroupError> {
            let elems: Vec<u16> = pairs
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| pred(a, b))
                .map(|(i, _)| i as u16)
                .collect();
            k_group.subgroup_from_elements(&elems)
        };

    let mut first_preimages = Vec::with_capacity(n);
    let mut second_preimages = Vec::with_capacity(n);
    for sub in c.subgroups() {
        first_preimages.push(member_pairs(&|a, _| sub.contains(a))?);
        second_preimages.push(member_pairs(&|_, b| sub.contains(b))?);
    }

    // P1 for each G_i and for the glue subgroup itself.
    let mut p1_targets: Vec<(&Subgroup, &Subgroup, &Subgroup)> = Vec::new();
    let glue_first = member_pairs(&|a, _| glue_sub.contains(a))?;
    let glue_second = member_pairs(&|_, b| glue_sub.contains(b))?;
    for i in 0..n {
        p1_targets.push((&c.subgroups()[i], &first_preimages[i], &second_preimages[i]));
    }
    p1_targets.push((&glue_sub, &glue_first, &glue_second));
    for (source, h1, h2) in p1_targets {
        let expect = source.order() * glue_sub.order();
        if h1.order() != expect || h2.order() != expect {
            return Err(ExtensionError::WitnessCheck(format!(
                "preimage orders {} / {} differ from |L||G_glue| = {expect}",
                h1.order(),
                h2.order()
            )));
        }
    }

    // P2: glued coordinates have identical preimages.
    for j in glue.vars() {
        if first_preimages[j - 1] != second_preimages[j - 1] {
            return Err(ExtensionError::WitnessCheck(format!(
                "preimages of glued variable {j} differ"
            )));
        }
    }

    // P3: preimage of an intersection is the intersection of preimages.
    for (i, sub) in c.subgroups().iter().enumerate() {
        let meet_in_g = g.subgroup_intersection(&[sub, &glue_sub])?;
        for (preimage, glue_pre, side) in [
            (&first_preimages[i], &glue_first, "first"),
            (&second_preimages[i], &glue_second, "second"),
        ] {
            let lhs = k_group.subgroup_intersection(&[preimage, glue_pre])?;
            let rhs = match side {
                "first" => member_pairs(&|a, _| meet_in_g.contains(a))?,
                _ => member_pairs(&|_, b| meet_in_g.contains(b))?,
            };
            if lhs != rhs || lhs.order() != meet_in_g.order() * glue_sub.order() {
                return Err(ExtensionError::WitnessCheck(format!(
                    "P3 fails for subgroup {i} on the {side} projection"
                )));
            }
        }
    }

    // P4: H¹ ∩ G_glue¹ ∩ L² is the full rectangle of glue-restricted pairs.
    for h in c.subgroups() {
        let h_glue = g.subgroup_intersection(&[h, &glue_sub])?;
        for l in c.subgroups() {
            let l_glue = g.subgroup_intersection(&[l, &glue_sub])?;
            let h1 = member_pairs(&|a, _| h.contains(a))?;
            let l2 = member_pairs(&|_, b| l.contains(b))?;
            let triple = k_group.subgroup_intersection(&[&h1, &glue_first, &l2])?;
            let rect = member_pairs(&|a, b| h_glue.contains(a) && l_glue.contains(b))?;
            if triple != rect || triple.order() != h_glue.order() * l_glue.order() {
                return Err(ExtensionError::WitnessCheck("P4 fails".into()));
            }
        }
    }

    // Extended characterization (K, H₁..Hₙ, L₁..Lₙ).
    let mut subgroups = first_preimages.clone();
    subgroups.extend(second_preimages.iter().cloned());
    let extended = GroupCharacterization::new(k_group.clone(), subgroups)?;

    // The three extension conditions as exact index identities.
    let source_vec = entropy_from_characterization(c);
    let extended_vec = entropy_from_characterization(&extended);
    for beta in VarSet::nonempty_subsets(n) {
        let mirrored = beta.shift_up(n);
        if extended_vec.index(beta) != source_vec.index(beta)
            || extended_vec.index(mirrored) != source_vec.index(beta)
        {
            return Err(ExtensionError::WitnessCheck(format!(
                "extension does not carry the source entropies at {beta}"
            )));
        }
    }
    for i in glue.vars() {
        let xi = VarSet::singleton(i);
        let copy = VarSet::singleton(n + i);
        if extended_vec.index(xi.union(copy)) != extended_vec.index(xi)
            || extended_vec.index(copy) != extended_vec.index(xi)
        {
            return Err(ExtensionError::WitnessCheck(format!(
                "glued variable {i} is not an exact copy"
            )));
        }
    }
    let first_half = VarSet::full(n);
    let second_half = first_half.shift_up(n);
    let lhs: BigUint = extended_vec.index(first_half) * extended_vec.index(second_half);
    let rhs: BigUint = extended_vec.index(VarSet::full(2 * n)) * extended_vec.index(glue);
    if lhs != rhs {
        return Err(ExtensionError::WitnessCheck("adhesivity equality fails".into()));
    }

    // The conditional-independence chain, each step an exact rational
    // identity: |K|/|H_N| · |K|/|L_N| = (|G|/|G_N|)²
    //         = (|G|/|G_glue|) · (|G||G_glue|/|G_N|²)
    //         = |K|/|H_glue| · |K|/|H_N ∩ L_N|.
    let g_n = c.subgroup_meet(first_half);
    let h_n = {
        let refs: Vec<&Subgroup> = first_preimages.iter().collect();
        k_group.subgroup_intersection(&refs)?
    };
    let l_n = {
        let refs: Vec<&Subgroup> = second_preimages.iter().collect();
        k_group.subgroup_intersection(&refs)?
    };
    let meet_hl = k_group.subgroup_intersection(&[&h_n, &l_n])?;
    let ratio = |num: usize, den: usize| {
        num_rational::BigRational::new(BigInt::from(num), BigInt::from(den))
    };
    let lhs5 = ratio(k_order, h_n.order()) * ratio(k_order, l_n.order());
    let squared = ratio(g.order(), g_n.order()) * ratio(g.order(), g_n.order());
    let middle = ratio(g.order(), glue_sub.order())
        * ratio(g.order() * glue_sub.order(), g_n.order() * g_n.order());
    let rhs7 = ratio(k_order, glue_first.order()) * ratio(k_order, meet_hl.order());
    if !(lhs5 == squared && squared == middle && middle == rhs7) {
        return Err(ExtensionError::WitnessCheck(
            "conditional-independence chain fails".into(),
        ));
    }

    let (first_projection, second_projection): (Vec<u16>, Vec<u16>) =
        pairs.iter().cloned().unzip();
    Ok((
        AdhesiveWitness {
            group: k_group,
            first_projection,
            second_projection,
            first_preimages,
            second_preimages,
        },
        extended,
    ))
}

/// The bounding pipeline: intersect an outer bound in the extension's
/// target dimension with its constraint set, then project back to the
/// source coordinates.
pub fn bound_by_extension(spec: &ExtensionSpec, outer: &Cone) -> Result<Cone, ExtensionError> {
    bound_by_extension_with_cap(spec, outer, crate::cone::DEFAULT_ROW_CAP)
}

pub fn bound_by_extension_with_cap(
    spec: &ExtensionSpec,
    outer: &Cone,
    cap: usize,
) -> Result<Cone, ExtensionError> {
    let target_labels = Cone::entropy_labels(spec.m);
    if outer.labels() != target_labels.as_slice() {
        return Err(ExtensionError::OuterDimension {
            outer: outer.labels().len(),
            target: spec.m,
        });
    }
    let combined = outer.intersect(&spec.constraints)?;
    let keep = Cone::entropy_labels(spec.n);
    Ok(combined.project_with_cap(&ProjectionSpec::keep_only(keep), cap)?)
}

// --- serde ------------------------------------------------------------------

impl Serialize for ExtensionSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            kind: ExtensionKind,
            n: usize,
            m: usize,
            alpha: Vec<usize>,
            #[serde(skip_serializing_if = "Option::is_none")]
            beta: Option<Vec<usize>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            gamma: Option<Vec<usize>>,
            constraints: &'a Cone,
        }
        Wire {
            kind: self.kind,
            n: self.n,
            m: self.m,
            alpha: self.alpha.vars().collect(),
            beta: self.beta.map(|b| b.vars().collect()),
            gamma: self.gamma.map(|g| g.vars().collect()),
            constraints: &self.constraints,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExtensionSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            kind: ExtensionKind,
            n: usize,
            m: usize,
            alpha: Vec<usize>,
            #[serde(default)]
            beta: Option<Vec<usize>>,
            #[serde(default)]
            gamma: Option<Vec<usize>>,
            constraints: Cone,
        }
        let w = Wire::deserialize(d)?;
        let to_set = |v: Vec<usize>| VarSet::from_vars(v).map_err(D::Error::custom);
        Ok(ExtensionSpec {
            kind: w.kind,
            n: w.n,
            m: w.m,
            alpha: to_set(w.alpha)?,
            beta: w.beta.map(to_set).transpose()?,
            gamma: w.gamma.map(to_set).transpose()?,
            constraints: w.constraints,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn vs(label: &str) -> VarSet {
        VarSet::parse_label(label).unwrap()
    }

    #[test]
    fn adhesive_row_counts() {
        // n=2, glue {1}: 1 new condition-(1) row + 3 mirrors + adhesivity.
        let spec = adhesive_constraints(2, vs("1")).unwrap();
        assert_eq!(spec.m, 4);
        assert_eq!(spec.constraints.dimension(), 15);
        assert_eq!(spec.constraints.equalities().len(), 5);
        assert!(spec.constraints.inequalities().is_empty());
    }

    #[test]
    fn adhesive_n1_forces_copies() {
        let spec = adhesive_constraints(1, vs("1")).unwrap();
        // h(1) = h(2) = h(12).
        let c = &spec.constraints;
        let row = |a: &str, b: &str| {
            let mut r = vec![BigInt::from(0); 3];
            r[vs(a).0 as usize - 1] += BigInt::from(1);
            r[vs(b).0 as usize - 1] -= BigInt::from(1);
            r
        };
        assert!(c.implies_equality(&row("1", "2")));
        assert!(c.implies_equality(&row("1", "12")));
    }

    #[test]
    fn adhesive_full_glue_duplicates_exactly() {
        // glue = {1,2}: conditions force h(1234) = h(12).
        let spec = adhesive_constraints(2, vs("12")).unwrap();
        let mut row = vec![BigInt::from(0); 15];
        row[vs("1234").0 as usize - 1] += BigInt::from(1);
        row[vs("12").0 as usize - 1] -= BigInt::from(1);
        assert!(spec.constraints.implies_equality(&row));
    }

    #[test]
    fn join_constraints_match_example_display() {
        let spec = join_extension_constraints(2, vs("1"), vs("2")).unwrap();
        assert_eq!(spec.constraints.dimension(), 7);
        assert_eq!(spec.constraints.equalities().len(), 3);
        // Equivalent to the displayed form {h(1)+h(2) = h(3)+h(12),
        // h(13) = h(1), h(23) = h(2)}.
        let display = Cone::new(
            Cone::entropy_labels(3),
            vec![],
            vec![
                {
                    let mut r = vec![BigInt::from(0); 7];
                    r[vs("1").0 as usize - 1] = BigInt::from(1);
                    r[vs("2").0 as usize - 1] = BigInt::from(1);
                    r[vs("3").0 as usize - 1] = BigInt::from(-1);
                    r[vs("12").0 as usize - 1] = BigInt::from(-1);
                    r
                },
                {
                    let mut r = vec![BigInt::from(0); 7];
                    r[vs("13").0 as usize - 1] = BigInt::from(1);
                    r[vs("1").0 as usize - 1] = BigInt::from(-1);
                    r
                },
                {
                    let mut r = vec![BigInt::from(0); 7];
                    r[vs("23").0 as usize - 1] = BigInt::from(1);
                    r[vs("2").0 as usize - 1] = BigInt::from(-1);
                    r
                },
            ],
        )
        .unwrap();
        assert!(spec.constraints.equivalent(&display));
    }

    #[test]
    fn join_rejects_overlap() {
        assert!(matches!(
            join_extension_constraints(2, vs("12"), vs("2")),
            Err(ExtensionError::Overlap(..))
        ));
    }

    #[test]
    fn sw_identical_blocks_pin_the_new_variable_to_zero() {
        let spec = sw_extension_constraints(2, vs("1"), vs("1")).unwrap();
        // One of the rows normalizes to h(3) = 0.
        let mut zero_row = vec![BigInt::from(0); 7];
        zero_row[vs("3").0 as usize - 1] = BigInt::from(1);
        assert!(spec.constraints.equalities().contains(&zero_row));
    }

    #[test]
    fn markov_gate() {
        use crate::group::FiniteGroup;
        // Independent pair extended by a constant third variable satisfies
        // X₁ → X₃ → X₂ only if the equality holds; build a chain where the
        // middle variable is the pair itself so the equality is trivial.
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let a = z6.generated_subgroup(&[3]).unwrap();
        let b = z6.generated_subgroup(&[2]).unwrap();
        let both = z6.subgroup_intersection(&[&a, &b]).unwrap();
        let c =
            GroupCharacterization::new(z6, vec![a.clone(), b.clone(), both]).unwrap();
        let g = entropy_from_characterization(&c);
        // X₃ determines both X₁ and X₂, so the chain holds.
        let ok = markov_double_extension_constraints(3, vs("1"), vs("2"), vs("3"), Some(&g));
        assert!(ok.is_ok());
        assert_eq!(ok.unwrap().constraints.equalities().len(), 5);
        // Swap middle and left: X₁ ⊥ X₂ but X₃ not determined by X₁ alone;
        // premise k(13)·k(23) = k(1)·k(123) fails (36·36 ≠ 3·36... check).
        let bad = markov_double_extension_constraints(3, vs("3"), vs("2"), vs("1"), Some(&g));
        assert!(matches!(bad, Err(ExtensionError::MarkovPremiseFails)));
    }

    #[test]
    fn markov_degenerate_rows() {
        // X_right constant: the second new variable is pinned to zero.
        use crate::group::FiniteGroup;
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let h = z4.generated_subgroup(&[2]).unwrap();
        let full = z4.full_subgroup();
        let c = GroupCharacterization::new(
            z4.clone(),
            vec![h.clone(), full.clone(), h.clone()],
        )
        .unwrap();
        let g = entropy_from_characterization(&c);
        let spec =
            markov_double_extension_constraints(3, vs("1"), vs("2"), vs("3"), Some(&g)).unwrap();
        // Substituting the source values: h(5) = g(2) + g(3) − g(23) = 0.
        // Structurally, the row involving the second new variable relates
        // those coordinates; just verify dimensions and gate here.
        assert_eq!(spec.m, 5);
        assert_eq!(spec.constraints.dimension(), 31);
    }

    #[test]
    fn adhesive_witness_on_z2() {
        use crate::group::FiniteGroup;
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let c = GroupCharacterization::new(z2.clone(), vec![z2.trivial_subgroup()]).unwrap();
        let (witness, extended) = adhesive_group_extension(&c, vs("1")).unwrap();
        // Glue subgroup is trivial, so K is the diagonal of Z₂×Z₂.
        assert_eq!(witness.group.order(), 2);
        let v = entropy_from_characterization(&extended);
        assert_eq!(v.index(vs("1")).to_u64().unwrap(), 2);
        assert_eq!(v.index(vs("2")).to_u64().unwrap(), 2);
        assert_eq!(v.index(vs("12")).to_u64().unwrap(), 2); // copies
    }

    #[test]
    fn adhesive_witness_on_s3_normal_glue() {
        use crate::group::FiniteGroup;
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let subs = s3.enumerate_subgroups().unwrap();
        let a3 = subs.iter().find(|s| s.order() == 3).unwrap().clone();
        let pair = subs.iter().find(|s| s.order() == 2).unwrap().clone();
        let c = GroupCharacterization::new(s3, vec![a3, pair]).unwrap();
        let (witness, extended) = adhesive_group_extension(&c, vs("1")).unwrap();
        assert_eq!(witness.group.order(), 6 * 3);
        // The extension satisfies the adhesive constraint cone.
        let spec = adhesive_constraints(2, vs("1")).unwrap();
        let v = entropy_from_characterization(&extended);
        assert!(spec.constraints.member_exact(&v).unwrap());
    }

    #[test]
    fn adhesive_rejects_non_normal_glue() {
        use crate::group::FiniteGroup;
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let subs = s3.enumerate_subgroups().unwrap();
        let pair = subs.iter().find(|s| s.order() == 2).unwrap().clone();
        let c = GroupCharacterization::new(s3, vec![pair]).unwrap();
        assert!(matches!(
            adhesive_group_extension(&c, vs("1")),
            Err(ExtensionError::NotNormal { .. })
        ));
    }

    #[test]
    fn abelian_glue_always_normal() {
        use crate::group::FiniteGroup;
        let g = FiniteGroup::elementary_abelian(2, 2).unwrap();
        for h in g.enumerate_subgroups().unwrap() {
            let c = GroupCharacterization::new(g.clone(), vec![h]).unwrap();
            let (witness, _) = adhesive_group_extension(&c, vs("1")).unwrap();
            assert!(witness.group.is_abelian());
        }
    }

    #[test]
    fn bound_by_extension_full_outer_stays_full() {
        let spec = join_extension_constraints(2, vs("1"), vs("2")).unwrap();
        let full = Cone::full_space(Cone::entropy_labels(3)).unwrap();
        let bound = bound_by_extension(&spec, &full).unwrap();
        assert!(bound.inequalities().is_empty());
        assert!(bound.equalities().is_empty());
    }

    #[test]
    fn example_pipeline_recovers_gamma2() {
        let spec = join_extension_constraints(2, vs("1"), vs("2")).unwrap();
        let outer = Cone::gamma(3).unwrap();
        let bound = bound_by_extension(&spec, &outer).unwrap();
        let gamma2 = Cone::gamma(2).unwrap();
        assert!(bound.equivalent(&gamma2));
    }

    #[test]
    fn bound_rejects_dimension_mismatch() {
        let spec = join_extension_constraints(2, vs("1"), vs("2")).unwrap();
        let outer = Cone::gamma(2).unwrap();
        assert!(matches!(
            bound_by_extension(&spec, &outer),
            Err(ExtensionError::OuterDimension { .. })
        ));
    }

    #[test]
    fn extension_spec_json_round_trip() {
        let spec = sw_extension_constraints(2, vs("1"), vs("2")).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        let back: ExtensionSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back.kind, ExtensionKind::Sw);
        assert_eq!(back.n, 2);
        assert_eq!(back.alpha, vs("1"));
        assert_eq!(back.beta, Some(vs("2")));
        assert_eq!(back.constraints, spec.constraints);
    }
}
