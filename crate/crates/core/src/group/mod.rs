//! Finite groups with enumerable elements.
//!
//! Every group is a [`FiniteGroup`]: a cheap-to-clone handle over an immutable
//! multiplication law on the indices `0..n`, with index 0 the identity. Laws
//! are either explicit tables (small groups), structured formulas evaluated
//! lazily (abelian, products, semidirect products, quotients) or closures of
//! generators (permutation groups, projective matrix groups). Element orders
//! and inverses are computed eagerly when the group is built.

mod action;
pub mod catalog;
mod families;
mod iso;
mod perm;
mod sylow;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith;

pub use action::GroupAction;
pub use catalog::{catalog, nilpotent_groups_of_order, CatalogEntry, CATALOG_ORDERS};
pub use families::{alternating, cyclic_extension, dicyclic, dihedral, heisenberg, standard_family, symmetric, Family};
pub use iso::{is_isomorphic, GroupInvariants, ISO_BACKTRACK_LIMIT};
pub use perm::{permutation_group, Permutation};
pub use sylow::{is_nilpotent, sylow_subgroup, sylow_subgroup_elements};

/// Largest group this crate will enumerate.
pub const MAX_GROUP_ORDER: usize = 25_000;

/// Lazily-evaluated laws at or below this size are materialized into a table.
const TABLE_LIMIT: usize = 1024;

/// Groups up to this size get a full associativity check in debug builds.
const FULL_AXIOM_CHECK: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group of order {requested} exceeds the size limit {limit}")]
    SizeLimit { requested: u128, limit: usize },
    #[error("action of acting element {acting} is not an automorphism: {detail}")]
    ActionNotAutomorphism { acting: usize, detail: String },
    #[error("action is not a homomorphism at acting elements ({left}, {right})")]
    ActionNotHomomorphism { left: usize, right: usize },
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: conjugate of {element} by {by} leaves it")]
    NotNormal { element: usize, by: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("{p} does not divide the group order {n}")]
    PrimeDoesNotDivide { p: u64, n: usize },
    #[error("order {0} is not supported by the catalog")]
    UnsupportedOrder(u64),
    #[error("catalog of order {order} has {found} groups after deduplication, expected {expected}")]
    CatalogMismatch { order: u64, expected: usize, found: usize },
    #[error("group axiom violated: {0}")]
    AxiomViolation(String),
}

/// An element of a [`FiniteGroup`], identified by its index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(u32);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    pub fn new(index: usize) -> Self {
        GroupElement(u32::try_from(index).expect("element index fits in u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

type KeyOp = Arc<dyn Fn(u64, u64) -> u64 + Send + Sync>;
type FormulaOp = Arc<dyn Fn(u32, u32) -> u32 + Send + Sync>;

enum Law {
    /// Row-major `n x n` table.
    Table(Vec<u32>),
    /// Direct product of cyclic groups; index is mixed radix, first factor most significant.
    Abelian {
        moduli: Vec<u32>,
        strides: Vec<u32>,
    },
    /// Pairs `(g, h)` at index `g * |H| + h`.
    Product(FiniteGroup, FiniteGroup),
    /// Pairs `(n, h)` at index `n * |H| + h`, multiplied as `(n1 act(h1)(n2), h1 h2)`.
    Semidirect {
        normal: FiniteGroup,
        acting: FiniteGroup,
        action: Vec<Vec<u32>>,
    },
    Quotient {
        parent: FiniteGroup,
        reps: Vec<u32>,
        coset_of: Vec<u32>,
    },
    Perm {
        perms: Vec<Permutation>,
        index: HashMap<Permutation, u32>,
    },
    /// Indices multiplied directly by a closed-form rule.
    Formula(FormulaOp),
    /// Elements encoded as `u64` keys and multiplied by `op`.
    Keyed {
        keys: Vec<u64>,
        index: HashMap<u64, u32>,
        op: KeyOp,
    },
}

impl Law {
    fn mul(&self, a: u32, b: u32, n: usize) -> u32 {
        match self {
            Law::Table(t) => t[a as usize * n + b as usize],
            Law::Abelian { moduli, strides } => {
                let mut out = 0;
                for (&m, &s) in moduli.iter().zip(strides) {
                    let x = (a / s) % m;
                    let y = (b / s) % m;
                    out += ((x + y) % m) * s;
                }
                out
            }
            Law::Product(g, h) => {
                let k = h.size() as u32;
                let left = g.mul_raw(a / k, b / k);
                let right = h.mul_raw(a % k, b % k);
                left * k + right
            }
            Law::Semidirect { normal, acting, action } => {
                let k = acting.size() as u32;
                let (n1, h1) = (a / k, a % k);
                let (n2, h2) = (b / k, b % k);
                let moved = action[h1 as usize][n2 as usize];
                normal.mul_raw(n1, moved) * k + acting.mul_raw(h1, h2)
            }
            Law::Quotient { parent, reps, coset_of } => {
                let p = parent.mul_raw(reps[a as usize], reps[b as usize]);
                coset_of[p as usize]
            }
            Law::Perm { perms, index } => {
                let prod = perms[a as usize].compose(&perms[b as usize]);
                index[&prod]
            }
            Law::Formula(op) => op(a, b),
            Law::Keyed { keys, index, op } => index[&op(keys[a as usize], keys[b as usize])],
        }
    }

    fn is_lazy(&self) -> bool {
        !matches!(self, Law::Table(_) | Law::Abelian { .. })
    }
}

struct Inner {
    size: usize,
    law: Law,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    gens: OnceLock<Vec<GroupElement>>,
}

/// A finite group on the element indices `0..n`; index 0 is the identity.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    inner: Arc<Inner>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("name", &self.name).field("size", &self.inner.size).finish()
    }
}

pub(crate) fn check_size(requested: u128) -> Result<usize, GroupError> {
    if requested == 0 || requested > MAX_GROUP_ORDER as u128 {
        Err(GroupError::SizeLimit { requested, limit: MAX_GROUP_ORDER })
    } else {
        Ok(requested as usize)
    }
}

impl FiniteGroup {
    fn build(name: impl Into<String>, size: usize, law: Law) -> FiniteGroup {
        let mut law = law;
        if law.is_lazy() && size <= TABLE_LIMIT && !matches!(law, Law::Table(_)) {
            let mut table = Vec::with_capacity(size * size);
            for a in 0..size as u32 {
                for b in 0..size as u32 {
                    table.push(law.mul(a, b, size));
                }
            }
            law = Law::Table(table);
        }
        let (orders, inverses) = orders_and_inverses(&law, size);
        let group = FiniteGroup {
            name: name.into(),
            inner: Arc::new(Inner { size, law, inverses, orders, gens: OnceLock::new() }),
        };
        if cfg!(debug_assertions) {
            if let Err(e) = group.check_axioms(0x5eed) {
                panic!("constructed group `{}` is not a group: {e}", group.name);
            }
        }
        group
    }

    /// Builds a group from a full multiplication table over `0..n`.
    pub fn from_table(name: impl Into<String>, table: Vec<u32>) -> Result<FiniteGroup, GroupError> {
        let n = (table.len() as f64).sqrt().round() as usize;
        if n * n != table.len() || n == 0 {
            return Err(GroupError::InvalidParameter("table is not square".into()));
        }
        check_size(n as u128)?;
        if table.iter().any(|&x| x as usize >= n) {
            return Err(GroupError::InvalidParameter("table entry out of range".into()));
        }
        for a in 0..n {
            if table[a] as usize != a || table[a * n] as usize != a {
                return Err(GroupError::AxiomViolation("index 0 is not the identity".into()));
            }
        }
        let name = name.into();
        let (orders, inverses) = orders_and_inverses_checked(&table, n)?;
        let group = FiniteGroup {
            name,
            inner: Arc::new(Inner { size: n, law: Law::Table(table), inverses, orders, gens: OnceLock::new() }),
        };
        group.check_axioms(0x5eed)?;
        Ok(group)
    }

    /// Closure of `generators` under `op`, where elements are encoded as keys.
    pub(crate) fn from_key_closure(
        name: impl Into<String>,
        identity: u64,
        generators: &[u64],
        op: KeyOp,
    ) -> Result<FiniteGroup, GroupError> {
        let mut keys = vec![identity];
        let mut index = HashMap::from([(identity, 0u32)]);
        let mut head = 0;
        while head < keys.len() {
            let x = keys[head];
            head += 1;
            for &g in generators {
                let y = op(x, g);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(y) {
                    if keys.len() == MAX_GROUP_ORDER {
                        return Err(GroupError::SizeLimit {
                            requested: MAX_GROUP_ORDER as u128 + 1,
                            limit: MAX_GROUP_ORDER,
                        });
                    }
                    e.insert(keys.len() as u32);
                    keys.push(y);
                }
            }
        }
        let size = keys.len();
        Ok(FiniteGroup::build(name, size, Law::Keyed { keys, index, op }))
    }

    /// Group on `0..size` multiplied by `op`; `op` must be a group law with identity 0.
    pub(crate) fn from_formula(
        name: impl Into<String>,
        size: usize,
        op: impl Fn(u32, u32) -> u32 + Send + Sync + 'static,
    ) -> Result<FiniteGroup, GroupError> {
        check_size(size as u128)?;
        Ok(FiniteGroup::build(name, size, Law::Formula(Arc::new(op))))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same group under a different display name.
    pub fn renamed(&self, name: impl Into<String>) -> FiniteGroup {
        FiniteGroup { name: name.into(), inner: Arc::clone(&self.inner) }
    }

    /// Number of elements `|G|`.
    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.inner.size as u32).map(GroupElement)
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        self.inner.law.mul(a, b, self.inner.size)
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.mul_raw(a.0, b.0))
    }

    pub fn inverse(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inner.inverses[a.index()])
    }

    /// `x g x^-1`.
    pub fn conjugate(&self, g: GroupElement, x: GroupElement) -> GroupElement {
        self.mul(self.mul(x, g), self.inverse(x))
    }

    pub fn pow(&self, g: GroupElement, k: u64) -> GroupElement {
        let k = k % self.element_order(g);
        let mut result = GroupElement::IDENTITY;
        let mut base = g;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Least `k >= 1` with `g^k` the identity.
    pub fn element_order(&self, g: GroupElement) -> u64 {
        self.inner.orders[g.index()] as u64
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.inner.orders
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        let distinct: HashSet<u32> = self.inner.orders.iter().copied().collect();
        distinct.into_iter().fold(1u64, |acc, o| arith::lcm(acc, o as u64))
    }

    pub fn is_abelian(&self) -> bool {
        if matches!(self.inner.law, Law::Abelian { .. }) {
            return true;
        }
        let gens = self.generators();
        gens.iter().enumerate().all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.size() as u32;
        self.inner.orders.contains(&n)
    }

    /// The powers `g^0, g^1, ..., g^(o(g)-1)`.
    pub fn cyclic_subgroup(&self, g: GroupElement) -> Vec<GroupElement> {
        let mut out = vec![GroupElement::IDENTITY];
        let mut x = g;
        while x != GroupElement::IDENTITY {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[GroupElement]) -> Vec<GroupElement> {
        let mut seen = vec![false; self.size()];
        seen[0] = true;
        let mut queue = VecDeque::from([GroupElement::IDENTITY]);
        let mut out = vec![GroupElement::IDENTITY];
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort();
        out
    }

    /// A small generating set, chosen greedily from high-order elements.
    pub fn generators(&self) -> &[GroupElement] {
        self.inner.gens.get_or_init(|| self.greedy_generators())
    }

    fn greedy_generators(&self) -> Vec<GroupElement> {
        let mut by_order: Vec<GroupElement> = self.elements().skip(1).collect();
        by_order.sort_by_key(|&g| (std::cmp::Reverse(self.element_order(g)), g));
        let mut gens = Vec::new();
        let mut inside = vec![false; self.size()];
        inside[0] = true;
        let mut covered = 1;
        for g in by_order {
            if covered == self.size() {
                break;
            }
            if inside[g.index()] {
                continue;
            }
            gens.push(g);
            let sub = self.subgroup_generated(&gens);
            covered = sub.len();
            for x in sub {
                inside[x.index()] = true;
            }
        }
        gens
    }

    pub fn center(&self) -> Vec<GroupElement> {
        let gens = self.generators();
        self.elements().filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z))).collect()
    }

    /// Elements of the commutator subgroup, as the normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> Vec<GroupElement> {
        let gens = self.generators();
        let comm = |a: GroupElement, b: GroupElement| {
            let ab = self.mul(a, b);
            let ba = self.mul(b, a);
            self.mul(ab, self.inverse(ba))
        };
        let mut sub_gens: Vec<GroupElement> = Vec::new();
        for &a in gens {
            for &b in gens {
                sub_gens.push(comm(a, b));
            }
        }
        let mut sub = self.subgroup_generated(&sub_gens);
        loop {
            let members: HashSet<GroupElement> = sub.iter().copied().collect();
            let missing = sub_gens
                .iter()
                .flat_map(|&h| gens.iter().map(move |&x| (h, x)))
                .map(|(h, x)| self.conjugate(h, x))
                .find(|y| !members.contains(y));
            match missing {
                Some(y) => {
                    sub_gens.push(y);
                    sub = self.subgroup_generated(&sub_gens);
                }
                None => return sub,
            }
        }
    }

    pub fn is_subgroup(&self, elems: &[GroupElement]) -> bool {
        let set: HashSet<GroupElement> = elems.iter().copied().collect();
        set.contains(&GroupElement::IDENTITY)
            && elems.iter().all(|&a| elems.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, elems: &[GroupElement]) -> bool {
        self.normality_violation(elems).is_none()
    }

    fn normality_violation(&self, elems: &[GroupElement]) -> Option<(GroupElement, GroupElement)> {
        let set: HashSet<GroupElement> = elems.iter().copied().collect();
        let gens = self.generators();
        for &x in gens {
            for &g in elems {
                if !set.contains(&self.conjugate(g, x)) {
                    return Some((g, x));
                }
            }
        }
        None
    }

    /// The subgroup on `elems` as a standalone table group, identity first.
    pub fn subgroup(&self, name: impl Into<String>, elems: &[GroupElement]) -> Result<FiniteGroup, GroupError> {
        let mut list: Vec<GroupElement> = elems.to_vec();
        list.sort();
        list.dedup();
        if list.first() != Some(&GroupElement::IDENTITY) {
            return Err(GroupError::NotSubgroup("identity missing".into()));
        }
        let pos: HashMap<GroupElement, u32> = list.iter().enumerate().map(|(i, &g)| (g, i as u32)).collect();
        let m = list.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &list {
            for &b in &list {
                match pos.get(&self.mul(a, b)) {
                    Some(&i) => table.push(i),
                    None => return Err(GroupError::NotSubgroup(format!("product of {a} and {b} leaves the set"))),
                }
            }
        }
        Ok(FiniteGroup::build(name, m, Law::Table(table)))
    }

    /// Verifies the group axioms: exhaustively up to order 200, otherwise on
    /// 1000 random triples drawn from a generator seeded with `seed`.
    pub fn check_axioms(&self, seed: u64) -> Result<(), GroupError> {
        let n = self.size();
        let e = GroupElement::IDENTITY;
        for g in self.elements() {
            if self.mul(e, g) != g || self.mul(g, e) != g {
                return Err(GroupError::AxiomViolation(format!("0 is not an identity for {g}")));
            }
            if self.mul(self.inverse(g), g) != e || self.mul(g, self.inverse(g)) != e {
                return Err(GroupError::AxiomViolation(format!("inverse of {g} is wrong")));
            }
            let o = self.element_order(g) as usize;
            if n % o != 0 {
                return Err(GroupError::AxiomViolation(format!("order of {g} does not divide {n}")));
            }
        }
        let assoc = |a: GroupElement, b: GroupElement, c: GroupElement| {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(GroupError::AxiomViolation(format!("({a} {b}) {c} != {a} ({b} {c})")))
            } else {
                Ok(())
            }
        };
        if n <= FULL_AXIOM_CHECK {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        assoc(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..1000 {
                let a = GroupElement::new(rng.gen_range(0..n));
                let b = GroupElement::new(rng.gen_range(0..n));
                let c = GroupElement::new(rng.gen_range(0..n));
                assoc(a, b, c)?;
            }
        }
        Ok(())
    }

    /// Full multiplication table (used for serialization of small groups).
    pub fn table(&self) -> Vec<u32> {
        let n = self.size() as u32;
        let mut out = Vec::with_capacity((n * n) as usize);
        for a in 0..n {
            for b in 0..n {
                out.push(self.mul_raw(a, b));
            }
        }
        out
    }
}

fn walk_orders(law: &Law, size: usize) -> (Vec<u32>, Vec<u32>) {
    let mut orders = vec![1u32; size];
    let mut inverses = vec![0u32; size];
    for g in 1..size as u32 {
        // Walk g, g^2, ... until the identity; the last power before it is g^-1.
        let mut prev = g;
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            prev = x;
            x = law.mul(x, g, size);
            k += 1;
        }
        orders[g as usize] = k;
        inverses[g as usize] = prev;
    }
    (orders, inverses)
}

fn orders_and_inverses(law: &Law, size: usize) -> (Vec<u32>, Vec<u32>) {
    match law {
        Law::Abelian { moduli, strides } => {
            let mut orders = Vec::with_capacity(size);
            let mut inverses = Vec::with_capacity(size);
            for g in 0..size as u32 {
                let mut o = 1u64;
                let mut inv = 0;
                for (&m, &s) in moduli.iter().zip(strides) {
                    let c = (g / s) % m;
                    o = arith::lcm(o, (m / arith::gcd(c, m)) as u64);
                    inv += ((m - c) % m) * s;
                }
                orders.push(o as u32);
                inverses.push(inv);
            }
            (orders, inverses)
        }
        Law::Product(g, h) => {
            let k = h.size();
            let mut orders = Vec::with_capacity(size);
            let mut inverses = Vec::with_capacity(size);
            for x in 0..size {
                let (a, b) = (x / k, x % k);
                let o = arith::lcm(g.inner.orders[a] as u64, h.inner.orders[b] as u64);
                orders.push(o as u32);
                inverses.push(g.inner.inverses[a] * k as u32 + h.inner.inverses[b]);
            }
            (orders, inverses)
        }
        Law::Perm { perms, index } => {
            let orders = perms.iter().map(|p| p.order() as u32).collect();
            let inverses = perms.iter().map(|p| index[&p.inverse()]).collect();
            (orders, inverses)
        }
        _ => walk_orders(law, size),
    }
}

fn orders_and_inverses_checked(table: &[u32], n: usize) -> Result<(Vec<u32>, Vec<u32>), GroupError> {
    // A malformed table can cycle without reaching the identity; bound the walk.
    for g in 1..n {
        let mut x = g;
        let mut steps = 0;
        while x != 0 {
            x = table[x * n + g] as usize;
            steps += 1;
            if steps > n {
                return Err(GroupError::AxiomViolation(format!("powers of {g} never reach 0")));
            }
        }
    }
    Ok(walk_orders(&Law::Table(table.to_vec()), n))
}

/// The cyclic group of order `n` (`1 <= n <= 25000`).
pub fn cyclic(n: u64) -> Result<FiniteGroup, GroupError> {
    let size = check_size(n as u128)?;
    Ok(FiniteGroup::build(format!("C{n}"), size, Law::Abelian { moduli: vec![n as u32], strides: vec![1] }))
}

/// Direct product of cyclic groups of the given orders; an empty list gives the trivial group.
pub fn abelian(invariants: &[u64]) -> Result<FiniteGroup, GroupError> {
    if let Some(&bad) = invariants.iter().find(|&&k| k < 2) {
        return Err(GroupError::InvalidParameter(format!("cyclic factor of order {bad}")));
    }
    let total = invariants.iter().fold(1u128, |acc, &k| acc.saturating_mul(k as u128));
    let size = check_size(total)?;
    let moduli: Vec<u32> = invariants.iter().map(|&k| k as u32).collect();
    let mut strides = vec![1u32; moduli.len()];
    for i in (0..moduli.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * moduli[i + 1];
    }
    let name = if invariants.is_empty() {
        "C1".to_string()
    } else {
        invariants.iter().map(|k| format!("C{k}")).collect::<Vec<_>>().join(" x ")
    };
    Ok(FiniteGroup::build(name, size, Law::Abelian { moduli, strides }))
}

/// Index of the pair `(g, h)` in `direct_product(G, H)`.
pub fn product_index(g: GroupElement, h: GroupElement, h_size: usize) -> GroupElement {
    GroupElement::new(g.index() * h_size + h.index())
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let size = check_size(g.size() as u128 * h.size() as u128)?;
    let name = format!("{} x {}", g.name(), h.name());
    Ok(FiniteGroup::build(name, size, Law::Product(g.clone(), h.clone())))
}

/// `N ⋊ H` on pairs `(n, h)` (index `n * |H| + h`) with
/// `(n1, h1)(n2, h2) = (n1 act(h1)(n2), h1 h2)`.
pub fn semidirect_product(
    normal: &FiniteGroup,
    acting: &FiniteGroup,
    action: &GroupAction,
) -> Result<FiniteGroup, GroupError> {
    let size = check_size(normal.size() as u128 * acting.size() as u128)?;
    action.validate(normal, acting)?;
    let name = format!("{}:{}", normal.name(), acting.name());
    Ok(FiniteGroup::build(
        name,
        size,
        Law::Semidirect { normal: normal.clone(), acting: acting.clone(), action: action.images().to_vec() },
    ))
}

/// `G / N` on cosets, numbered by their first element; the coset of the identity is 0.
pub fn quotient(g: &FiniteGroup, normal: &[GroupElement]) -> Result<FiniteGroup, GroupError> {
    let mut elems = normal.to_vec();
    elems.sort();
    elems.dedup();
    if !g.is_subgroup(&elems) {
        return Err(GroupError::NotSubgroup("set is not closed or lacks the identity".into()));
    }
    if let Some((element, by)) = g.normality_violation(&elems) {
        return Err(GroupError::NotNormal { element: element.index(), by: by.index() });
    }
    let mut coset_of = vec![u32::MAX; g.size()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x.index()] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x.0);
        for &k in &elems {
            coset_of[g.mul(x, k).index()] = c;
        }
    }
    let size = reps.len();
    let name = format!("{}/{}", g.name(), elems.len());
    Ok(FiniteGroup::build(name, size, Law::Quotient { parent: g.clone(), reps, coset_of }))
}

/// The trivial group.
pub fn trivial() -> FiniteGroup {
    cyclic(1).expect("trivial group")
}
