//! Collected order sequences and their algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::group::{catalog, FiniteGroup, GroupError};

/// Exact natural number used for ψ and ρ values.
pub type BigCount = BigUint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequences have different lengths ({left} vs {right})")]
    LengthMismatch { left: u64, right: u64 },
    #[error("parse error at position {position} near `{token}`: {message}")]
    Parse { position: usize, token: String, message: String },
    #[error("order and multiplicity must be positive (got {order}:{multiplicity})")]
    NonPositive { order: u64, multiplicity: u64 },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Element orders collected as strictly increasing `(order, multiplicity)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u64, u64)>", into = "Vec<(u64, u64)>")]
pub struct OrderSequence {
    entries: Vec<(u64, u64)>,
}

impl TryFrom<Vec<(u64, u64)>> for OrderSequence {
    type Error = SequenceError;

    fn try_from(entries: Vec<(u64, u64)>) -> Result<Self, Self::Error> {
        OrderSequence::new(entries)
    }
}

impl From<OrderSequence> for Vec<(u64, u64)> {
    fn from(s: OrderSequence) -> Self {
        s.entries
    }
}

impl OrderSequence {
    /// Collects pairs in any order, merging repeated orders.
    pub fn new(entries: Vec<(u64, u64)>) -> Result<Self, SequenceError> {
        let mut map = BTreeMap::new();
        for (order, multiplicity) in entries {
            if order == 0 || multiplicity == 0 {
                return Err(SequenceError::NonPositive { order, multiplicity });
            }
            *map.entry(order).or_insert(0) += multiplicity;
        }
        Ok(OrderSequence { entries: map.into_iter().collect() })
    }

    fn from_map(map: BTreeMap<u64, u64>) -> Self {
        OrderSequence { entries: map.into_iter().filter(|&(_, m)| m > 0).collect() }
    }

    /// Collects an expanded sequence; zero entries are rejected.
    pub fn from_orders(orders: impl IntoIterator<Item = u64>) -> Result<Self, SequenceError> {
        OrderSequence::new(orders.into_iter().map(|o| (o, 1)).collect())
    }

    /// The sequence `(1)` of the trivial group.
    pub fn trivial() -> Self {
        OrderSequence { entries: vec![(1, 1)] }
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    /// Total count `n`.
    pub fn len(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, order: u64) -> u64 {
        self.entries.binary_search_by_key(&order, |&(o, _)| o).map_or(0, |i| self.entries[i].1)
    }

    pub fn orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().map(|&(o, _)| o)
    }

    pub fn max_order(&self) -> u64 {
        self.entries.last().map_or(0, |&(o, _)| o)
    }

    /// Number of entries `<= t`.
    pub fn count_at_most(&self, t: u64) -> u64 {
        self.entries.iter().take_while(|&&(o, _)| o <= t).map(|&(_, m)| m).sum()
    }

    /// The non-decreasing expanded list (for tests and small inputs).
    pub fn expanded(&self) -> Vec<u64> {
        self.entries.iter().flat_map(|&(o, m)| std::iter::repeat_n(o, m as usize)).collect()
    }

    /// Entries whose order is coprime to `m`.
    pub fn coprime_part(&self, m: u64) -> OrderSequence {
        OrderSequence { entries: self.entries.iter().copied().filter(|&(o, _)| arith::gcd(o, m) == 1).collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.entries).expect("pairs serialize")
    }
}

impl fmt::Display for OrderSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (o, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{o}:{m}")?;
        }
        Ok(())
    }
}

impl FromStr for OrderSequence {
    type Err = SequenceError;

    /// Accepts `1:1,2:3,4:4` or the JSON form `[[1,1],[2,3],[4,4]]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.starts_with('[') {
            let pairs: Vec<(u64, u64)> = serde_json::from_str(trimmed).map_err(|e| SequenceError::Parse {
                position: e.column().saturating_sub(1),
                token: trimmed.chars().take(16).collect(),
                message: format!("invalid JSON sequence: {e}"),
            })?;
            return OrderSequence::new(pairs);
        }
        let mut pairs = Vec::new();
        let mut offset = 0;
        for item in s.split(',') {
            let start = offset + (item.len() - item.trim_start().len());
            offset += item.len() + 1;
            let token = item.trim();
            let err = |message: &str| SequenceError::Parse {
                position: start,
                token: token.to_string(),
                message: message.to_string(),
            };
            if token.is_empty() {
                return Err(err("empty entry"));
            }
            let (o, m) = token.split_once(':').ok_or_else(|| err("expected order:multiplicity"))?;
            let order: u64 = o.trim().parse().map_err(|_| err("order is not a positive integer"))?;
            let mult: u64 = m.trim().parse().map_err(|_| err("multiplicity is not a positive integer"))?;
            pairs.push((order, mult));
        }
        OrderSequence::new(pairs)
    }
}

/// The collected multiset of element orders of `g`.
pub fn order_sequence(g: &FiniteGroup) -> OrderSequence {
    let mut map = BTreeMap::new();
    for &o in g.element_orders() {
        *map.entry(o as u64).or_insert(0) += 1;
    }
    OrderSequence::from_map(map)
}

/// `Σ d^k · multiplicity(d)`.
pub fn psi_k(s: &OrderSequence, k: u32) -> BigCount {
    s.entries.iter().map(|&(o, m)| BigUint::from(o).pow(k) * BigUint::from(m)).sum()
}

pub fn psi(s: &OrderSequence) -> BigCount {
    psi_k(s, 1)
}

/// `Π d^multiplicity(d)`.
pub fn rho(s: &OrderSequence) -> BigCount {
    s.entries.iter().fold(BigUint::one(), |acc, &(o, m)| {
        acc * BigUint::from(o).pow(u32::try_from(m).expect("multiplicity fits in u32"))
    })
}

fn same_length(a: &OrderSequence, b: &OrderSequence) -> Result<(), SequenceError> {
    let (left, right) = (a.len(), b.len());
    if left != right {
        return Err(SequenceError::LengthMismatch { left, right });
    }
    Ok(())
}

/// `a` dominates `b` when, at every threshold `t`, `a` has at most as many
/// entries `<= t` as `b`.
pub fn dominates(a: &OrderSequence, b: &OrderSequence) -> Result<bool, SequenceError> {
    same_length(a, b)?;
    let mut thresholds: Vec<u64> = a.orders().chain(b.orders()).collect();
    thresholds.sort_unstable();
    thresholds.dedup();
    let (mut i, mut j) = (0, 0);
    let (mut ca, mut cb) = (0u64, 0u64);
    for t in thresholds {
        while i < a.entries.len() && a.entries[i].0 <= t {
            ca += a.entries[i].1;
            i += 1;
        }
        while j < b.entries.len() && b.entries[j].0 <= t {
            cb += b.entries[j].1;
            j += 1;
        }
        if ca > cb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A set of orders of `b` whose total multiplicity exceeds the total
/// multiplicity of the orders of `a` divisible by at least one of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallCertificate {
    pub orders: Vec<u64>,
    pub demand: u64,
    pub supply: u64,
}

impl fmt::Display for HallCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.orders.iter().map(u64::to_string).collect();
        write!(
            f,
            "orders {{{}}} need {} elements but only {} have an order they divide",
            orders.join(","),
            self.demand,
            self.supply
        )
    }
}

/// `None` when a bijection `f` from the elements counted by `a` to those of
/// `b` with `o(f(g)) | o(g)` exists; otherwise a Hall violation.
pub fn strong_domination_certificate(
    a: &OrderSequence,
    b: &OrderSequence,
) -> Result<Option<HallCertificate>, SequenceError> {
    same_length(a, b)?;
    // Nodes: source, b's orders, a's orders, sink.
    let kb = b.entries.len();
    let ka = a.entries.len();
    let source = 0;
    let sink = kb + ka + 1;
    let mut net = flow::Network::new(kb + ka + 2);
    for (i, &(d, m)) in b.entries.iter().enumerate() {
        net.add_edge(source, 1 + i, m);
        for (j, &(e, _)) in a.entries.iter().enumerate() {
            if e % d == 0 {
                net.add_edge(1 + i, 1 + kb + j, flow::INFINITE);
            }
        }
    }
    for (j, &(_, m)) in a.entries.iter().enumerate() {
        net.add_edge(1 + kb + j, sink, m);
    }
    let total = net.max_flow(source, sink);
    if total == b.len() {
        return Ok(None);
    }
    let reach = net.reachable_from(source);
    let mut orders: Vec<u64> = (0..kb).filter(|&i| reach[1 + i]).map(|i| b.entries[i].0).collect();
    // Orders that are multiples of a violating order only add demand.
    let up: Vec<u64> = b.orders().filter(|&d| !orders.contains(&d) && orders.iter().any(|&s| d % s == 0)).collect();
    orders.extend(up);
    orders.sort_unstable();
    let demand = orders.iter().map(|&d| b.multiplicity(d)).sum();
    let supply = a.entries.iter().filter(|&&(e, _)| orders.iter().any(|&d| e % d == 0)).map(|&(_, m)| m).sum();
    debug_assert!(demand > supply, "residual cut must violate Hall's condition");
    Ok(Some(HallCertificate { orders, demand, supply }))
}

pub fn strongly_dominates(a: &OrderSequence, b: &OrderSequence) -> Result<bool, SequenceError> {
    Ok(strong_domination_certificate(a, b)?.is_none())
}

fn combine(x: &OrderSequence, y: &OrderSequence, f: impl Fn(u64, u64) -> u64) -> OrderSequence {
    let mut map = BTreeMap::new();
    for &(a, m) in &x.entries {
        for &(b, k) in &y.entries {
            *map.entry(f(a, b)).or_insert(0) += m * k;
        }
    }
    OrderSequence::from_map(map)
}

/// All pairwise products of entries.
pub fn seq_product(x: &OrderSequence, y: &OrderSequence) -> OrderSequence {
    combine(x, y, |a, b| a * b)
}

/// All pairwise least common multiples of entries.
pub fn seq_join(x: &OrderSequence, y: &OrderSequence) -> OrderSequence {
    combine(x, y, arith::lcm)
}

/// The first necessary condition a candidate sequence fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Violation {
    Length { length: u64, n: u64 },
    Identity { multiplicity: u64 },
    Lagrange { order: u64, n: u64 },
    ModP { p: u64, multiplicity: u64 },
    Phi { order: u64, multiplicity: u64, phi: u64 },
}

impl Violation {
    pub fn rule(&self) -> &'static str {
        match self {
            Violation::Length { .. } => "length",
            Violation::Identity { .. } => "identity",
            Violation::Lagrange { .. } => "lagrange",
            Violation::ModP { .. } => "mod-p",
            Violation::Phi { .. } => "phi",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Length { length, n } => write!(f, "length {length} != {n}"),
            Violation::Identity { multiplicity } => write!(f, "multiplicity(1)={multiplicity} != 1"),
            Violation::Lagrange { order, n } => write!(f, "order {order} ∤ {n}"),
            Violation::ModP { p, multiplicity } => {
                write!(f, "multiplicity({p})={multiplicity} ≢ -1 (mod {p})")
            }
            Violation::Phi { order, multiplicity, phi } => {
                write!(f, "φ({order})={phi} ∤ multiplicity({order})={multiplicity}")
            }
        }
    }
}

/// Necessary conditions for `s` to be the order sequence of a group of
/// order `n`, checked in a fixed order; returns the first one violated.
pub fn plausible(s: &OrderSequence, n: u64) -> Option<Violation> {
    if s.len() != n {
        return Some(Violation::Length { length: s.len(), n });
    }
    if s.multiplicity(1) != 1 {
        return Some(Violation::Identity { multiplicity: s.multiplicity(1) });
    }
    if let Some(order) = s.orders().find(|&o| n % o != 0) {
        return Some(Violation::Lagrange { order, n });
    }
    for p in arith::prime_divisors(n) {
        let m = s.multiplicity(p);
        if (m + 1) % p != 0 || m < p - 1 {
            return Some(Violation::ModP { p, multiplicity: m });
        }
    }
    for &(order, multiplicity) in &s.entries {
        let phi = arith::euler_phi(order);
        if multiplicity % phi != 0 {
            return Some(Violation::Phi { order, multiplicity, phi });
        }
    }
    None
}

/// For every prime `p | n`, the number of entries of `p`-power order equals
/// the full `p`-part of `n`.
pub fn nilpotent_from_sequence(s: &OrderSequence, n: u64) -> bool {
    arith::factorize(n).into_iter().all(|(p, a)| {
        let count: u64 =
            s.entries.iter().filter(|&&(o, _)| arith::prime_power_exponent(o, p).is_some()).map(|&(_, m)| m).sum();
        count == p.pow(a)
    })
}

/// Names of the catalog groups of order `n` whose order sequence is `s`.
pub fn realize(s: &OrderSequence, n: u64) -> Result<Vec<String>, SequenceError> {
    let groups = catalog(n)?;
    if plausible(s, n).is_some() {
        return Ok(Vec::new());
    }
    Ok(groups.into_iter().filter(|e| order_sequence(&e.group) == *s).map(|e| e.name).collect())
}

mod flow {
    //! Edmonds–Karp max-flow on a small dense network.

    use std::collections::VecDeque;

    pub const INFINITE: u64 = u64::MAX / 4;

    pub struct Network {
        cap: Vec<Vec<u64>>,
    }

    impl Network {
        pub fn new(nodes: usize) -> Self {
            Network { cap: vec![vec![0; nodes]; nodes] }
        }

        pub fn add_edge(&mut self, from: usize, to: usize, capacity: u64) {
            self.cap[from][to] = self.cap[from][to].saturating_add(capacity);
        }

        pub fn max_flow(&mut self, s: usize, t: usize) -> u64 {
            let n = self.cap.len();
            let mut total = 0;
            loop {
                let mut parent = vec![usize::MAX; n];
                parent[s] = s;
                let mut queue = VecDeque::from([s]);
                while let Some(u) = queue.pop_front() {
                    for v in 0..n {
                        if parent[v] == usize::MAX && self.cap[u][v] > 0 {
                            parent[v] = u;
                            queue.push_back(v);
                        }
                    }
                }
                if parent[t] == usize::MAX {
                    return total;
                }
                let mut bottleneck = INFINITE;
                let mut v = t;
                while v != s {
                    let u = parent[v];
                    bottleneck = bottleneck.min(self.cap[u][v]);
                    v = u;
                }
                let mut v = t;
                while v != s {
                    let u = parent[v];
                    self.cap[u][v] -= bottleneck;
                    self.cap[v][u] += bottleneck;
                    v = u;
                }
                total += bottleneck;
            }
        }

        /// Nodes reachable from `s` in the residual network.
        pub fn reachable_from(&self, s: usize) -> Vec<bool> {
            let n = self.cap.len();
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if !seen[v] && self.cap[u][v] > 0 {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            seen
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{abelian, alternating, cyclic, dicyclic, dihedral, symmetric};

    fn os(g: &FiniteGroup) -> OrderSequence {
        order_sequence(g)
    }

    fn seq(text: &str) -> OrderSequence {
        text.parse().unwrap()
    }

    #[test]
    fn small_reference_sequences() {
        assert_eq!(os(&cyclic(6).unwrap()).expanded(), vec![1, 2, 3, 3, 6, 6]);
        assert_eq!(os(&symmetric(3).unwrap()).expanded(), vec![1, 2, 2, 2, 3, 3]);
        assert_eq!(os(&cyclic(1).unwrap()), OrderSequence::trivial());
        assert_eq!(os(&alternating(4).unwrap()).to_string(), "1:1,2:3,3:8");
    }

    #[test]
    fn psi_and_rho_values() {
        let c6 = os(&cyclic(6).unwrap());
        assert_eq!(psi(&c6), BigUint::from(21u32));
        assert_eq!(rho(&c6), BigUint::from(648u32));
        assert_eq!(psi(&OrderSequence::trivial()), BigUint::one());
        assert_eq!(psi_k(&os(&cyclic(2).unwrap()), 2), BigUint::from(5u32));
        assert_eq!(rho(&os(&dicyclic(8).unwrap())), BigUint::from(8192u32));
    }

    #[test]
    fn domination_examples() {
        let dic3 = os(&dicyclic(12).unwrap());
        let a4 = os(&alternating(4).unwrap());
        let d12 = os(&dihedral(12).unwrap());
        let c12 = os(&cyclic(12).unwrap());
        assert!(dominates(&dic3, &a4).unwrap());
        assert!(!strongly_dominates(&dic3, &a4).unwrap());
        assert!(strongly_dominates(&c12, &a4).unwrap());
        assert!(!dominates(&d12, &a4).unwrap());
        assert!(!dominates(&a4, &d12).unwrap());
        assert!(dominates(&a4, &a4).unwrap() && strongly_dominates(&a4, &a4).unwrap());
        let err = dominates(&a4, &os(&cyclic(6).unwrap())).unwrap_err();
        assert_eq!(err, SequenceError::LengthMismatch { left: 12, right: 6 });
    }

    #[test]
    fn hall_certificate_for_dic3_vs_a4() {
        let dic3 = os(&dicyclic(12).unwrap());
        let a4 = os(&alternating(4).unwrap());
        let cert = strong_domination_certificate(&dic3, &a4).unwrap().unwrap();
        assert_eq!(cert.orders, vec![3]);
        assert_eq!((cert.demand, cert.supply), (8, 4));
    }

    #[test]
    fn product_and_join() {
        let c2 = os(&cyclic(2).unwrap());
        let c3 = os(&cyclic(3).unwrap());
        assert_eq!(seq_product(&c2, &c3), os(&cyclic(6).unwrap()));
        assert_eq!(seq_product(&c2, &c2).expanded(), vec![1, 2, 2, 4]);
        assert_eq!(seq_join(&c2, &c2), os(&abelian(&[2, 2]).unwrap()));
        assert_eq!(seq_join(&c2, &c3), seq_product(&c2, &c3));
        let s = os(&symmetric(3).unwrap());
        assert_eq!(seq_product(&s, &OrderSequence::trivial()), s);
        assert_eq!(seq_join(&s, &OrderSequence::trivial()), s);
    }

    #[test]
    fn plausibility_rules() {
        let c2 = os(&cyclic(2).unwrap());
        let v = plausible(&seq_product(&c2, &c2), 4).unwrap();
        assert_eq!(v, Violation::ModP { p: 2, multiplicity: 2 });
        assert_eq!(v.to_string(), "multiplicity(2)=2 ≢ -1 (mod 2)");
        assert!(plausible(&os(&symmetric(3).unwrap()), 6).is_none());
        assert_eq!(plausible(&seq("1:1,3:3"), 4).unwrap().rule(), "lagrange");
        assert_eq!(plausible(&seq("1:1,2:2,4:1"), 4).unwrap().rule(), "mod-p");
        assert_eq!(plausible(&seq("1:2,2:1"), 3).unwrap().rule(), "identity");
        assert_eq!(plausible(&seq("1:1,2:1"), 3).unwrap().rule(), "length");
        assert_eq!(plausible(&seq("1:1,2:1,4:1,8:5"), 8).unwrap().rule(), "phi");
    }

    #[test]
    fn nilpotency_from_counts() {
        let c6c2 = os(&abelian(&[2, 6]).unwrap());
        assert!(nilpotent_from_sequence(&c6c2, 12));
        assert!(!nilpotent_from_sequence(&os(&alternating(4).unwrap()), 12));
        assert!(nilpotent_from_sequence(&os(&cyclic(7).unwrap()), 7));
    }

    #[test]
    fn realize_small() {
        assert_eq!(realize(&seq("1:1,2:3,3:2"), 6).unwrap(), vec!["S3".to_string()]);
        let c16 = os(&cyclic(16).unwrap());
        assert_eq!(realize(&c16, 16).unwrap(), vec!["C16".to_string()]);
        let mut pair = realize(&os(&abelian(&[4, 4]).unwrap()), 16).unwrap();
        pair.sort();
        // C4:C4 shares the sequence as well.
        assert_eq!(pair, vec!["C2 x Q8", "C4 x C4", "C4:C4"]);
        assert!(realize(&seq("1:1,2:2,4:1"), 4).unwrap().is_empty());
        assert!(matches!(realize(&seq("1:1"), 17), Err(SequenceError::Group(_))));
    }

    #[test]
    fn text_and_json_forms() {
        let s = seq("1:1, 2:3,4:4");
        assert_eq!(s.to_string(), "1:1,2:3,4:4");
        assert_eq!(s.to_json(), "[[1,1],[2,3],[4,4]]");
        assert_eq!(seq("[[4,4],[1,1],[2,3]]"), s);
        let back: OrderSequence = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(back, s);
        match "1:1,2x3".parse::<OrderSequence>() {
            Err(SequenceError::Parse { position, token, .. }) => {
                assert_eq!((position, token.as_str()), (4, "2x3"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!("1:0".parse::<OrderSequence>().is_err());
        assert!("".parse::<OrderSequence>().is_err());
    }

    #[test]
    fn coprime_recovery() {
        let g = os(&symmetric(3).unwrap());
        let h = os(&cyclic(5).unwrap());
        let prod = seq_product(&g, &h);
        assert_eq!(prod.coprime_part(5), g);
        assert_eq!(prod.coprime_part(6), h);
    }
}
