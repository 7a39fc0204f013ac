//! Property tests for the structural invariants that hold across all
//! inputs, not just the worked examples.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

use gentropy::cone::Cone;
use gentropy::entropy::{entropy_from_characterization, EntropyVector};
use gentropy::group::{FiniteGroup, GroupCharacterization};
use gentropy::linear::Subspace;
use gentropy::varset::VarSet;

fn group_pool() -> Vec<FiniteGroup> {
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let z4 = FiniteGroup::cyclic(4).unwrap();
    vec![
        FiniteGroup::cyclic(6).unwrap(),
        FiniteGroup::cyclic(12).unwrap(),
        FiniteGroup::symmetric(3).unwrap(),
        FiniteGroup::dihedral(4).unwrap(),
        FiniteGroup::dihedral(5).unwrap(),
        FiniteGroup::elementary_abelian(2, 3).unwrap(),
        FiniteGroup::elementary_abelian(3, 2).unwrap(),
        FiniteGroup::direct_product(&z2, &z4).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// |A∘B|·|A∩B| = |A|·|B| and Lagrange for every subgroup pair drawn
    /// from any pool group.
    #[test]
    fn product_set_size_identity(gi in 0usize..8, a_pick: usize, b_pick: usize) {
        let g = &group_pool()[gi];
        let subs = g.enumerate_subgroups().unwrap();
        let a = &subs[a_pick % subs.len()];
        let b = &subs[b_pick % subs.len()];
        prop_assert_eq!(g.order() % a.order(), 0);
        let meet = g.subgroup_intersection(&[a, b]).unwrap();
        let prod = g.product_set(a, b);
        prop_assert_eq!(prod.count() * meet.order(), a.order() * b.order());
    }

    /// Every group-derived entropy vector is a polymatroid with
    /// divisibility-monotone integer indices.
    #[test]
    fn group_vectors_are_polymatroids(
        gi in 0usize..8,
        picks in prop::collection::vec(0usize..64, 1..=3),
    ) {
        let g = group_pool()[gi].clone();
        let subs = g.enumerate_subgroups().unwrap();
        let tuple: Vec<_> = picks.iter().map(|&i| subs[i % subs.len()].clone()).collect();
        let c = GroupCharacterization::new(g, tuple).unwrap();
        let v = entropy_from_characterization(&c);
        prop_assert!(v.is_group_monotone());
        prop_assert!(v.is_submodular());
    }

    /// Entropy vectors survive the JSON wire format bit-for-bit.
    #[test]
    fn entropy_vector_json_round_trip(
        n in 1usize..=3,
        raw in prop::collection::vec(1u64..1_000_000, 7),
    ) {
        let mut by = BTreeMap::new();
        for (i, vs) in VarSet::nonempty_subsets(n).enumerate() {
            by.insert(vs, BigUint::from(raw[i]));
        }
        let v = EntropyVector::from_indices(n, &by).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        let back: EntropyVector = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, v);
    }

    /// Fourier–Motzkin never loses a member: any rational point of the cone
    /// projects into the eliminated cone.
    #[test]
    fn elimination_preserves_membership(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 2..=8),
        point in prop::collection::vec(-6i64..=6, 4),
    ) {
        let labels: Vec<String> = (0..4).map(|i| format!("x{i}")).collect();
        let ineqs: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        let cone = Cone::new(labels, ineqs, vec![]).unwrap();
        let p: Vec<BigRational> =
            point.iter().map(|&x| BigRational::from(BigInt::from(x))).collect();
        prop_assume!(cone.member_rational(&p).unwrap());
        let shadow = cone.eliminate("x3").unwrap();
        prop_assert!(shadow.member_rational(&p[..3]).unwrap());
    }

    /// Subspace sum and intersection respect the modular dimension law and
    /// double complement is the identity.
    #[test]
    fn subspace_algebra_laws(
        rows_a in prop::collection::vec(prop::collection::vec(0u32..3, 4), 0..=3),
        rows_b in prop::collection::vec(prop::collection::vec(0u32..3, 4), 0..=3),
    ) {
        let a = Subspace::new(3, 4, rows_a).unwrap();
        let b = Subspace::new(3, 4, rows_b).unwrap();
        let sum = a.sum(&b).unwrap();
        let meet = a.intersection(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert_eq!(a.orthogonal_complement().orthogonal_complement(), a.clone());
        prop_assert_eq!(a.orthogonal_complement().dim(), 4 - a.dim());
    }
}
