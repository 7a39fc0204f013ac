//! Finite group arithmetic on dense Cayley tables.
//!
//! Groups are stored as an order×order multiplication table over 16-bit
//! element indices.  Construction validates the group axioms: Latin-square
//! rows and columns, identity, two-sided inverses, and associativity (the
//! full O(n³) scan up to order 64, a seeded random sample of 10⁴ triples
//! above that).  Subgroups are bitsets over element indices.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::varset::VarSet;

/// Order above which associativity is spot-checked instead of fully scanned.
const FULL_ASSOC_CHECK_MAX_ORDER: usize = 64;
const RANDOM_ASSOC_TRIPLES: usize = 10_000;

/// Largest order a Cayley-table group may have (element indices are u16).
pub const MAX_GROUP_ORDER: usize = 1 << 16;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("group order {0} exceeds the supported maximum {MAX_GROUP_ORDER}")]
    SizeOverflow(usize),
    #[error("table is not a Latin square: row or column {0} is not a permutation")]
    NotLatinSquare(usize),
    #[error("identity {identity} fails at element {elem}")]
    BadIdentity { identity: usize, elem: usize },
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("associativity fails at triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("table shape mismatch: expected {expected}x{expected} entries")]
    BadShape { expected: usize },
    #[error("label count {got} does not match order {expected}")]
    BadLabels { got: usize, expected: usize },
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("element index {0} out of range for group of order {1}")]
    BadElement(usize, usize),
    #[error("empty intersection sequence")]
    EmptyIntersection,
    #[error("subgroup enumeration limited to order {max}; group has order {got}")]
    EnumerationTooLarge { got: usize, max: usize },
    #[error("characterization needs at least one subgroup")]
    NoSubgroups,
}

/// A finite group given by its Cayley table.
///
/// The table is behind an `Arc`, so clones are cheap and characterizations
/// over the same group can be fanned out across threads freely.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "wire::GroupWire", into = "wire::GroupWire")]
pub struct FiniteGroup {
    inner: Arc<GroupData>,
}

struct GroupData {
    order: usize,
    /// Row-major: `table[a * order + b]` is the index of `a ∘ b`.
    table: Vec<u16>,
    identity: u16,
    inverse: Vec<u16>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order={})", self.inner.order)
    }
}

impl FiniteGroup {
    /// Validates a hand-loaded Cayley table and wraps it.
    pub fn from_table(
        table: Vec<Vec<u16>>,
        identity: u16,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteGroup, GroupError> {
        let order = table.len();
        if order == 0 || order > MAX_GROUP_ORDER {
            return Err(GroupError::SizeOverflow(order));
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in &table {
            if row.len() != order {
                return Err(GroupError::BadShape { expected: order });
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat_table(order, flat, identity, labels)
    }

    fn from_flat_table(
        order: usize,
        table: Vec<u16>,
        identity: u16,
        labels: Option<Vec<String>>,
    ) -> Result<FiniteGroup, GroupError> {
        if table.len() != order * order {
            return Err(GroupError::BadShape { expected: order });
        }
        if let Some(ref l) = labels {
            if l.len() != order {
                return Err(GroupError::BadLabels { got: l.len(), expected: order });
            }
        }
        if (identity as usize) >= order {
            return Err(GroupError::BadElement(identity as usize, order));
        }

        // Latin square: every row and column is a permutation.
        let mut seen_row = vec![false; order];
        let mut seen_col = vec![false; order];
        for i in 0..order {
            seen_row.iter_mut().for_each(|s| *s = false);
            seen_col.iter_mut().for_each(|s| *s = false);
            for j in 0..order {
                let r = table[i * order + j] as usize;
                let c = table[j * order + i] as usize;
                if r >= order || seen_row[r] || c >= order || seen_col[c] {
                    return Err(GroupError::NotLatinSquare(i));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }

        let e = identity as usize;
        for x in 0..order {
            if table[e * order + x] as usize != x || table[x * order + e] as usize != x {
                return Err(GroupError::BadIdentity { identity: e, elem: x });
            }
        }

        // Associativity: full scan at desk scale, seeded random triples above.
        let assoc = |a: usize, b: usize, c: usize| {
            let ab = table[a * order + b] as usize;
            let bc = table[b * order + c] as usize;
            table[ab * order + c] == table[a * order + bc]
        };
        if order <= FULL_ASSOC_CHECK_MAX_ORDER {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !assoc(a, b, c) {
                            return Err(GroupError::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x67656e74);
            for _ in 0..RANDOM_ASSOC_TRIPLES {
                let a = rng.gen_range(0..order);
                let b = rng.gen_range(0..order);
                let c = rng.gen_range(0..order);
                if !assoc(a, b, c) {
                    return Err(GroupError::NotAssociative(a, b, c));
                }
            }
        }

        // Two-sided inverses (guaranteed once Latin + associative + identity
        // hold at full-scan orders; kept as a net for spot-checked tables).
        let mut inverse = vec![0u16; order];
        for x in 0..order {
            let mut inv = None;
            for y in 0..order {
                if table[x * order + y] as usize == e && table[y * order + x] as usize == e {
                    inv = Some(y as u16);
                    break;
                }
            }
            inverse[x] = inv.ok_or(GroupError::NoInverse(x))?;
        }

        Ok(FiniteGroup {
            inner: Arc::new(GroupData { order, table, identity, inverse, labels }),
        })
    }

    /// Cyclic group of order `n` under addition mod n.
    pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
        if n < 1 || n > MAX_GROUP_ORDER {
            return Err(GroupError::ParamOutOfRange(format!("cyclic order {n}")));
        }
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = ((i + j) % n) as u16;
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_flat_table(n, table, 0, Some(labels))
    }

    /// Dihedral group of order `2n`: elements `0..n` are rotations `r^i`,
    /// elements `n..2n` are reflections `s∘r^i`.
    pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
        if n < 3 || 2 * n > MAX_GROUP_ORDER {
            return Err(GroupError::ParamOutOfRange(format!("dihedral parameter {n}")));
        }
        let order = 2 * n;
        let mut table = vec![0u16; order * order];
        for a1 in 0..2 {
            for b1 in 0..n {
                for a2 in 0..2 {
                    for b2 in 0..n {
                        // (s^a1 r^b1)(s^a2 r^b2) = s^(a1^a2) r^(b2 - b1) when a2 = 1,
                        // s^a1 r^(b1 + b2) when a2 = 0.
                        let a = a1 ^ a2;
                        let b = if a2 == 0 { (b1 + b2) % n } else { (n + b2 - b1) % n };
                        table[(a1 * n + b1) * order + (a2 * n + b2)] = (a * n + b) as u16;
                    }
                }
            }
        }
        let labels = (0..2)
            .flat_map(|a| (0..n).map(move |b| if a == 0 { format!("r{b}") } else { format!("sr{b}") }))
            .collect();
        Self::from_flat_table(order, table, 0, Some(labels))
    }

    /// Symmetric group on `n` letters; elements are the permutations of
    /// `0..n` in lexicographic one-line order, composed as `(p∘q)(x) = p(q(x))`.
    pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
        if n < 1 || n > 7 {
            return Err(GroupError::ParamOutOfRange(format!("symmetric degree {n}")));
        }
        let perms = permutations_lex(n);
        let order = perms.len();
        let index_of = |p: &[u8]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let mut table = vec![0u16; order * order];
        let mut prod = vec![0u8; n];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                for x in 0..n {
                    prod[x] = p[q[x] as usize];
                }
                table[i * order + j] = index_of(&prod) as u16;
            }
        }
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|d| d.to_string()).collect::<String>())
            .collect();
        Self::from_flat_table(order, table, 0, Some(labels))
    }

    /// Elementary abelian group `(Z_p)^k`; elements are the tuples of
    /// `(F_p)^k` in lexicographic order (first coordinate most significant).
    pub fn elementary_abelian(p: u64, k: usize) -> Result<FiniteGroup, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        if k < 1 {
            return Err(GroupError::ParamOutOfRange(format!("exponent {k}")));
        }
        let mut order: u64 = 1;
        for _ in 0..k {
            order = order.saturating_mul(p);
            if order > 4096 {
                return Err(GroupError::ParamOutOfRange(format!("{p}^{k} exceeds 4096")));
            }
        }
        let order = order as usize;
        let pu = p as usize;
        let mut table = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                // Componentwise addition in base-p digits.
                let (mut a, mut b, mut out, mut place) = (i, j, 0usize, 1usize);
                for _ in 0..k {
                    out += ((a % pu + b % pu) % pu) * place;
                    a /= pu;
                    b /= pu;
                    place *= pu;
                }
                table[i * order + j] = out as u16;
            }
        }
        let labels = (0..order)
            .map(|mut i| {
                let mut digits = vec![0usize; k];
                for d in (0..k).rev() {
                    digits[d] = i % pu;
                    i /= pu;
                }
                digits.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
            })
            .collect();
        Self::from_flat_table(order, table, 0, Some(labels))
    }

    /// Direct product with componentwise operation.  Element `(x, y)` gets
    /// index `x·|g2| + y` (lexicographic pairs).
    pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
        let order = g1
            .inner
            .order
            .checked_mul(g2.inner.order)
            .filter(|&o| o <= MAX_GROUP_ORDER)
            .ok_or(GroupError::SizeOverflow(g1.inner.order.saturating_mul(g2.inner.order)))?;
        let n2 = g2.inner.order;
        let mut table = vec![0u16; order * order];
        for x1 in 0..g1.inner.order {
            for y1 in 0..n2 {
                let i = x1 * n2 + y1;
                for x2 in 0..g1.inner.order {
                    let x = g1.inner.table[x1 * g1.inner.order + x2] as usize;
                    for y2 in 0..n2 {
                        let y = g2.inner.table[y1 * n2 + y2] as usize;
                        table[i * order + (x2 * n2 + y2)] = (x * n2 + y) as u16;
                    }
                }
            }
        }
        let identity = (g1.inner.identity as usize * n2 + g2.inner.identity as usize) as u16;
        let labels = (0..g1.inner.order)
            .flat_map(|x| (0..n2).map(move |y| (x, y)))
            .map(|(x, y)| format!("({},{})", g1.label(x as u16), g2.label(y as u16)))
            .collect();
        Self::from_flat_table(order, table, identity, Some(labels))
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> u16 {
        self.inner.identity
    }

    pub fn op(&self, a: u16, b: u16) -> u16 {
        self.inner.table[a as usize * self.inner.order + b as usize]
    }

    pub fn inv(&self, a: u16) -> u16 {
        self.inner.inverse[a as usize]
    }

    pub fn label(&self, a: u16) -> String {
        match &self.inner.labels {
            Some(l) => l[a as usize].clone(),
            None => a.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.inner.labels.as_deref()
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        (0..self.inner.order as u32).map(|x| x as u16)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.inner.order).all(|a| (a + 1..self.inner.order).all(|b| {
            self.inner.table[a * self.inner.order + b] == self.inner.table[b * self.inner.order + a]
        }))
    }

    /// Order of a single element (size of the cyclic subgroup it generates).
    pub fn element_order(&self, x: u16) -> usize {
        let mut cur = x;
        let mut ord = 1;
        while cur != self.inner.identity {
            cur = self.op(cur, x);
            ord += 1;
        }
        ord
    }

    /// The trivial subgroup `{e}`.
    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut s = ElemSet::empty(self.inner.order);
        s.insert(self.inner.identity);
        Subgroup { members: s }
    }

    /// The whole group as a subgroup.
    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup { members: ElemSet::full(self.inner.order) }
    }

    /// Closure of a generator list under the group operation.
    pub fn generated_subgroup(&self, generators: &[u16]) -> Result<Subgroup, GroupError> {
        for &g in generators {
            if g as usize >= self.inner.order {
                return Err(GroupError::BadElement(g as usize, self.inner.order));
            }
        }
        let mut set = ElemSet::empty(self.inner.order);
        set.insert(self.inner.identity);
        let mut frontier: Vec<u16> = vec![self.inner.identity];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                for y in [self.op(x, g), self.op(g, x)] {
                    if !set.contains(y) {
                        set.insert(y);
                        frontier.push(y);
                    }
                }
            }
        }
        Ok(Subgroup { members: set })
    }

    /// Validates an explicit element list as a subgroup.
    pub fn subgroup_from_elements(&self, elems: &[u16]) -> Result<Subgroup, GroupError> {
        let mut set = ElemSet::empty(self.inner.order);
        for &x in elems {
            if x as usize >= self.inner.order {
                return Err(GroupError::BadElement(x as usize, self.inner.order));
            }
            set.insert(x);
        }
        if !set.contains(self.inner.identity) {
            return Err(GroupError::NotSubgroup("missing identity".into()));
        }
        for x in set.iter() {
            if !set.contains(self.inv(x)) {
                return Err(GroupError::NotSubgroup(format!("missing inverse of {x}")));
            }
            for y in set.iter() {
                if !set.contains(self.op(x, y)) {
                    return Err(GroupError::NotSubgroup(format!("not closed at {x}∘{y}")));
                }
            }
        }
        Ok(Subgroup { members: set })
    }

    /// Complete list of all subgroups, sorted by (size, lexicographic
    /// element list).
    ///
    /// Breadth-first closure: grow every known subgroup by one new element
    /// and close, deduplicating on the canonical bitset, until stable.
    pub fn enumerate_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        const MAX_EXHAUSTIVE_ORDER: usize = 256;
        if self.inner.order > MAX_EXHAUSTIVE_ORDER {
            return Err(GroupError::EnumerationTooLarge {
                got: self.inner.order,
                max: MAX_EXHAUSTIVE_ORDER,
            });
        }
        let mut found = std::collections::BTreeSet::<Vec<u64>>::new();
        let trivial = self.trivial_subgroup();
        found.insert(trivial.members.words.clone());
        let mut queue = vec![trivial];
        while let Some(h) = queue.pop() {
            for x in self.elements() {
                if h.contains(x) {
                    continue;
                }
                let grown = self.close_over(&h, x);
                if found.insert(grown.members.words.clone()) {
                    queue.push(grown);
                }
            }
        }
        let mut out: Vec<Subgroup> = found
            .into_iter()
            .map(|words| Subgroup { members: ElemSet { len: self.inner.order, words } })
            .collect();
        out.sort_by_key(|s| (s.order(), s.elements()));
        Ok(out)
    }

    fn close_over(&self, h: &Subgroup, x: u16) -> Subgroup {
        let mut set = h.members.clone();
        set.insert(x);
        let mut frontier: Vec<u16> = vec![x];
        while let Some(a) = frontier.pop() {
            let ai = self.inv(a);
            if !set.contains(ai) {
                set.insert(ai);
                frontier.push(ai);
            }
            for b in set.iter().collect::<Vec<_>>() {
                for c in [self.op(a, b), self.op(b, a)] {
                    if !set.contains(c) {
                        set.insert(c);
                        frontier.push(c);
                    }
                }
            }
        }
        Subgroup { members: set }
    }

    /// Intersection of a nonempty sequence of subgroups.
    pub fn subgroup_intersection(&self, parts: &[&Subgroup]) -> Result<Subgroup, GroupError> {
        let first = parts.first().ok_or(GroupError::EmptyIntersection)?;
        let mut set = first.members.clone();
        for part in &parts[1..] {
            set.intersect_with(&part.members);
        }
        Ok(Subgroup { members: set })
    }

    /// The product set `{a∘b : a ∈ A, b ∈ B}`.  Not a subgroup in general;
    /// its size always equals `|A|·|B| / |A∩B|`.
    pub fn product_set(&self, a: &Subgroup, b: &Subgroup) -> ElemSet {
        let mut out = ElemSet::empty(self.inner.order);
        for x in a.members.iter() {
            for y in b.members.iter() {
                out.insert(self.op(x, y));
            }
        }
        let mut meet = a.members.clone();
        meet.intersect_with(&b.members);
        assert_eq!(
            out.count() * meet.count(),
            a.order() * b.order(),
            "product-set size identity violated (invalid subgroup input?)"
        );
        out
    }

    /// True iff `x∘H∘x⁻¹ = H` for every `x`.
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.find_normality_violation(h).is_none()
    }

    /// First `(x, h)` with `x∘h∘x⁻¹ ∉ H`, if any.
    pub fn find_normality_violation(&self, h: &Subgroup) -> Option<(u16, u16)> {
        for x in self.elements() {
            let xi = self.inv(x);
            for m in h.members.iter() {
                if !h.contains(self.op(self.op(x, m), xi)) {
                    return Some((x, m));
                }
            }
        }
        None
    }

    /// Left-coset index of `x` with respect to `h`.
    ///
    /// Index 0 is the coset of the identity (h itself); the remaining
    /// cosets are numbered by the order their smallest member appears when
    /// scanning elements 0, 1, 2, ...
    pub fn coset_index(&self, h: &Subgroup, x: u16) -> u32 {
        self.coset_indices(h)[x as usize]
    }

    /// Coset index of every element at once.
    pub fn coset_indices(&self, h: &Subgroup) -> Vec<u32> {
        let mut index = vec![u32::MAX; self.inner.order];
        for m in h.members.iter() {
            index[m as usize] = 0;
        }
        let mut next = 1u32;
        for x in 0..self.inner.order {
            if index[x] != u32::MAX {
                continue;
            }
            for m in h.members.iter() {
                index[self.op(x as u16, m) as usize] = next;
            }
            next += 1;
        }
        index
    }

    /// Extracts a subgroup as a standalone group.  Elements are renumbered
    /// in ascending parent-index order; labels carry over.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> (FiniteGroup, Vec<u16>) {
        let elems: Vec<u16> = h.elements();
        let mut to_new = vec![u16::MAX; self.inner.order];
        for (i, &x) in elems.iter().enumerate() {
            to_new[x as usize] = i as u16;
        }
        let k = elems.len();
        let mut table = vec![0u16; k * k];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                table[i * k + j] = to_new[self.op(x, y) as usize];
            }
        }
        let identity = to_new[self.inner.identity as usize];
        let labels = elems.iter().map(|&x| self.label(x)).collect();
        let g = Self::from_flat_table(k, table, identity, Some(labels))
            .expect("subgroup table inherits the group axioms");
        (g, elems)
    }
}

/// A set of element indices of a fixed parent group, as a bitset.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElemSet {
    len: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(len: usize) -> ElemSet {
        ElemSet { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> ElemSet {
        let mut s = ElemSet::empty(len);
        for i in 0..len {
            s.insert(i as u16);
        }
        s
    }

    pub fn insert(&mut self, x: u16) {
        self.words[x as usize / 64] |= 1 << (x % 64);
    }

    pub fn contains(&self, x: u16) -> bool {
        self.words[x as usize / 64] >> (x % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub fn is_subset_of(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(w, o)| w & !o == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        let words = &self.words;
        (0..self.len as u32).map(|x| x as u16).filter(move |&x| {
            words[x as usize / 64] >> (x % 64) & 1 == 1
        })
    }
}

/// A subgroup of a parent [`FiniteGroup`], stored as a member bitset.
///
/// Only the constructors on [`FiniteGroup`] build these, so a value always
/// contains the identity and is closed under product and inverse.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Subgroup {
    members: ElemSet,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn contains(&self, x: u16) -> bool {
        self.members.contains(x)
    }

    /// Ascending member indices.
    pub fn elements(&self) -> Vec<u16> {
        self.members.iter().collect()
    }

    pub fn member_set(&self) -> &ElemSet {
        &self.members
    }

    /// Wraps a set already known to be closed (e.g. a bitset intersection
    /// of subgroups).  Validates in debug builds only.
    pub(crate) fn from_closed_set(set: ElemSet) -> Subgroup {
        Subgroup { members: set }
    }
}

/// A group together with an ordered tuple of `n` subgroups.
#[derive(Clone, Debug)]
pub struct GroupCharacterization {
    group: FiniteGroup,
    subgroups: Vec<Subgroup>,
}

impl GroupCharacterization {
    pub fn new(group: FiniteGroup, subgroups: Vec<Subgroup>) -> Result<Self, GroupError> {
        if subgroups.is_empty() {
            return Err(GroupError::NoSubgroups);
        }
        for s in &subgroups {
            if s.members.len != group.order() {
                return Err(GroupError::NotSubgroup(format!(
                    "subgroup bitset sized for order {}, group has order {}",
                    s.members.len,
                    group.order()
                )));
            }
        }
        Ok(GroupCharacterization { group, subgroups })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn n(&self) -> usize {
        self.subgroups.len()
    }

    /// `⋂_{i∈vars} G_i`; the empty set gives the whole group.
    pub fn subgroup_meet(&self, vars: VarSet) -> Subgroup {
        let mut set = ElemSet::full(self.group.order());
        for i in vars.vars() {
            set.intersect_with(self.subgroups[i - 1].member_set());
        }
        Subgroup::from_closed_set(set)
    }
}

fn permutations_lex(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

mod wire {
    use super::*;

    /// On-disk JSON shape: {"order": k, "identity": 0, "table": [[...]], "labels": [...]}
    #[derive(Serialize, Deserialize)]
    pub struct GroupWire {
        pub order: usize,
        pub identity: u16,
        pub table: Vec<Vec<u16>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        pub labels: Option<Vec<String>>,
    }

    impl TryFrom<GroupWire> for FiniteGroup {
        type Error = GroupError;
        fn try_from(w: GroupWire) -> Result<FiniteGroup, GroupError> {
            if w.table.len() != w.order {
                return Err(GroupError::BadShape { expected: w.order });
            }
            FiniteGroup::from_table(w.table, w.identity, w.labels)
        }
    }

    impl From<FiniteGroup> for GroupWire {
        fn from(g: FiniteGroup) -> GroupWire {
            let d = &g.inner;
            let table = (0..d.order)
                .map(|i| d.table[i * d.order..(i + 1) * d.order].to_vec())
                .collect();
            GroupWire {
                order: d.order,
                identity: d.identity,
                table,
                labels: d.labels.clone(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: every subset of elements that contains the identity and is
    /// closed under the table is a subgroup; scan them all.
    fn brute_force_subgroups(g: &FiniteGroup) -> Vec<Vec<u16>> {
        let n = g.order();
        assert!(n <= 12, "oracle is exponential in the order");
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask >> g.identity() & 1 == 0 {
                continue;
            }
            let elems: Vec<u16> = (0..n as u16).filter(|&x| mask >> x & 1 == 1).collect();
            let closed = elems.iter().all(|&x| {
                elems.iter().all(|&y| mask >> g.op(x, y) & 1 == 1)
            });
            if closed {
                out.push(elems);
            }
        }
        out.sort_by_key(|e| (e.len(), e.clone()));
        out
    }

    fn is_commutative_by_scan(g: &FiniteGroup) -> bool {
        g.elements().all(|a| g.elements().all(|b| g.op(a, b) == g.op(b, a)))
    }

    #[test]
    fn cyclic_trivial_and_small() {
        let z1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        let z6 = FiniteGroup::cyclic(6).unwrap();
        for i in 0..6u16 {
            for j in 0..6u16 {
                assert_eq!(z6.op(i, j), (i + j) % 6);
            }
        }
        assert!(FiniteGroup::cyclic(0).is_err());
    }

    #[test]
    fn symmetric_three_is_nonabelian() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!is_commutative_by_scan(&s3));
        assert!(!s3.is_abelian());
    }

    #[test]
    fn make_group_rejects_bad_params() {
        assert!(FiniteGroup::dihedral(2).is_err());
        assert!(FiniteGroup::symmetric(8).is_err());
        assert!(FiniteGroup::elementary_abelian(4, 2).is_err());
        assert!(FiniteGroup::elementary_abelian(2, 13).is_err());
    }

    #[test]
    fn direct_product_klein_four() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        let order_two = v4.elements().filter(|&x| v4.element_order(x) == 2).count();
        assert_eq!(order_two, 3);
    }

    #[test]
    fn direct_product_with_trivial_preserves_table() {
        let z1 = FiniteGroup::cyclic(1).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let p = FiniteGroup::direct_product(&z1, &s3).unwrap();
        assert_eq!(p.order(), 6);
        for a in 0..6u16 {
            for b in 0..6u16 {
                assert_eq!(p.op(a, b), s3.op(a, b));
            }
        }
    }

    #[test]
    fn direct_product_z2_z3_is_cyclic() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let g = FiniteGroup::direct_product(&z2, &z3).unwrap();
        assert!(g.is_abelian());
        assert!(g.elements().any(|x| g.element_order(x) == 6));
    }

    #[test]
    fn subgroup_enumeration_matches_brute_force() {
        for g in [
            FiniteGroup::cyclic(1).unwrap(),
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::cyclic(12).unwrap(),
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::elementary_abelian(2, 3).unwrap(),
        ] {
            let enumerated: Vec<Vec<u16>> =
                g.enumerate_subgroups().unwrap().iter().map(|s| s.elements()).collect();
            assert_eq!(enumerated, brute_force_subgroups(&g));
        }
    }

    #[test]
    fn z6_and_s3_subgroup_orders() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let orders: Vec<usize> =
            z6.enumerate_subgroups().unwrap().iter().map(|s| s.order()).collect();
        assert_eq!(orders, [1, 2, 3, 6]);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let orders: Vec<usize> =
            s3.enumerate_subgroups().unwrap().iter().map(|s| s.order()).collect();
        assert_eq!(orders, [1, 2, 2, 2, 3, 6]);

        let z1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(z1.enumerate_subgroups().unwrap().len(), 1);
    }

    #[test]
    fn lagrange_holds_for_enumerated_subgroups() {
        for g in [FiniteGroup::symmetric(4).unwrap(), FiniteGroup::dihedral(6).unwrap()] {
            for h in g.enumerate_subgroups().unwrap() {
                assert_eq!(g.order() % h.order(), 0);
            }
        }
    }

    #[test]
    fn enumeration_closed_under_intersection() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let subs = g.enumerate_subgroups().unwrap();
        for a in &subs {
            for b in &subs {
                let meet = g.subgroup_intersection(&[a, b]).unwrap();
                assert!(subs.contains(&meet));
            }
        }
    }

    #[test]
    fn intersection_in_z12() {
        let z12 = FiniteGroup::cyclic(12).unwrap();
        let h2 = z12.generated_subgroup(&[2]).unwrap();
        let h3 = z12.generated_subgroup(&[3]).unwrap();
        let meet = z12.subgroup_intersection(&[&h2, &h3]).unwrap();
        assert_eq!(meet.elements(), vec![0, 6]);
        assert_eq!(meet.order(), 2);

        let same = z12.subgroup_intersection(&[&h2, &h2]).unwrap();
        assert_eq!(same, h2);
        assert!(z12.subgroup_intersection(&[]).is_err());
    }

    #[test]
    fn transposition_subgroups_of_s3_meet_trivially() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        // Order-2 subgroups are generated by the three transpositions.
        let subs = s3.enumerate_subgroups().unwrap();
        let pairs: Vec<&Subgroup> = subs.iter().filter(|s| s.order() == 2).collect();
        assert_eq!(pairs.len(), 3);
        let meet = s3.subgroup_intersection(&[pairs[0], pairs[1]]).unwrap();
        assert_eq!(meet.order(), 1);
    }

    #[test]
    fn product_set_sizes() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let subs = s3.enumerate_subgroups().unwrap();
        let pairs: Vec<&Subgroup> = subs.iter().filter(|s| s.order() == 2).collect();
        let prod = s3.product_set(pairs[0], pairs[1]);
        assert_eq!(prod.count(), 4);

        let trivial = s3.trivial_subgroup();
        let h = pairs[0];
        assert_eq!(s3.product_set(&trivial, h).iter().collect::<Vec<_>>(), h.elements());

        let z6 = FiniteGroup::cyclic(6).unwrap();
        let a = z6.generated_subgroup(&[3]).unwrap();
        let b = z6.generated_subgroup(&[2]).unwrap();
        assert_eq!(z6.product_set(&a, &b).count(), 6);
    }

    #[test]
    fn product_set_size_identity_exhaustive_s3_d4() {
        for g in [FiniteGroup::symmetric(3).unwrap(), FiniteGroup::dihedral(4).unwrap()] {
            let subs = g.enumerate_subgroups().unwrap();
            for a in &subs {
                for b in &subs {
                    let meet = g.subgroup_intersection(&[a, b]).unwrap();
                    let prod = g.product_set(a, b);
                    assert_eq!(prod.count() * meet.order(), a.order() * b.order());
                }
            }
        }
    }

    #[test]
    fn normality() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let subs = s3.enumerate_subgroups().unwrap();
        let a3 = subs.iter().find(|s| s.order() == 3).unwrap();
        assert!(s3.is_normal(a3));
        let pair = subs.iter().find(|s| s.order() == 2).unwrap();
        assert!(!s3.is_normal(pair));
        assert!(s3.find_normality_violation(pair).is_some());

        let z12 = FiniteGroup::cyclic(12).unwrap();
        for h in z12.enumerate_subgroups().unwrap() {
            assert!(z12.is_normal(&h));
        }
    }

    #[test]
    fn coset_indices_form_partition() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let h = z6.generated_subgroup(&[3]).unwrap(); // {0, 3}
        assert_eq!(z6.coset_index(&h, 0), 0);
        assert_eq!(z6.coset_index(&h, 4), z6.coset_index(&h, 1));
        let idx = z6.coset_indices(&h);
        for class in 0..3u32 {
            assert_eq!(idx.iter().filter(|&&i| i == class).count(), h.order());
        }
        // Full subgroup: single coset.
        let full = z6.full_subgroup();
        assert!(z6.coset_indices(&full).iter().all(|&i| i == 0));
    }

    #[test]
    fn coset_index_constant_exactly_on_cosets() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        for h in d4.enumerate_subgroups().unwrap() {
            let idx = d4.coset_indices(&h);
            for x in d4.elements() {
                for y in d4.elements() {
                    // x and y in the same left coset iff x⁻¹y ∈ H.
                    let same = h.contains(d4.op(d4.inv(x), y));
                    assert_eq!(idx[x as usize] == idx[y as usize], same);
                }
            }
        }
    }

    #[test]
    fn hand_loaded_table_validation() {
        // A non-associative Latin square (order 5 loop) must be rejected.
        let loop5: Vec<Vec<u16>> = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        assert!(matches!(
            FiniteGroup::from_table(loop5, 0, None),
            Err(GroupError::NotAssociative(..))
        ));
        // Broken Latin square.
        let dup = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table(dup, 0, None).is_err());
    }

    #[test]
    fn subgroup_as_group_preserves_structure() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let subs = s3.enumerate_subgroups().unwrap();
        let a3 = subs.iter().find(|s| s.order() == 3).unwrap();
        let (g, elems) = s3.subgroup_as_group(a3);
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
        assert_eq!(elems.len(), 3);
    }

    #[test]
    fn group_json_round_trip() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        let json = serde_json::to_string(&d4).unwrap();
        let back: FiniteGroup = serde_json::from_str(&json).unwrap();
        assert_eq!(back.order(), 8);
        for a in 0..8u16 {
            for b in 0..8u16 {
                assert_eq!(back.op(a, b), d4.op(a, b));
            }
        }
    }
}
