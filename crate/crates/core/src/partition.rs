//! Integer partitions and their dictionary with abelian p-groups.
//!
//! A partition `(r_1, ..., r_k)` with `r_1 >= ... >= r_k` stands for the
//! group `Z_{p^r_1} x ... x Z_{p^r_k}`; its conjugate `(s_1, ..., s_l)` has
//! `s_i = |{j : r_j >= i}|`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::sequence::OrderSequence;

/// Largest `n` accepted by [`partitions_of`].
pub const MAX_ENUMERATED: u64 = 60;

/// Largest group order handled symbolically.
pub const MAX_SYMBOLIC_ORDER: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partitions of different sizes ({left} vs {right})")]
    SizeMismatch { left: u64, right: u64 },
    #[error("enumerating partitions of {0} exceeds the limit {MAX_ENUMERATED}")]
    SizeLimit(u64),
    #[error("p^n = {p}^{n} exceeds {MAX_SYMBOLIC_ORDER}")]
    Overflow { p: u64, n: u64 },
    #[error("{from} does not majorize {to}")]
    NotMajorized { from: Partition, to: Partition },
    #[error("not the order sequence of an abelian {p}-group: {reason}")]
    NotAbelianPGroupSequence { p: u64, reason: String },
    #[error("invalid partition: {0}")]
    Invalid(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u64>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Parts must be positive and non-increasing.
    pub fn new(parts: Vec<u64>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::Invalid(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Invalid(format!("{parts:?} is not non-increasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The number partitioned.
    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first).map(|i| self.parts.iter().filter(|&&r| r >= i).count() as u64).collect();
        Partition { parts }
    }

    fn prefix_sums(&self, len: usize) -> Vec<u64> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.part(i);
                acc
            })
            .collect()
    }

    /// `Π (r_i + 1)`.
    pub fn divisor_product(&self) -> u64 {
        self.parts.iter().map(|&r| r + 1).product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let text: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        f.write_str(&text.join("+"))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `4+2+1`, `4,2,1` or `(4,2,1)`; parts may come in any order.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(['+', ','])
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| PartitionError::Invalid(format!("bad part `{}` in `{s}`", t.trim())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if parts.contains(&0) {
            return Err(PartitionError::Invalid(format!("zero part in `{s}`")));
        }
        Ok(Partition::from_unsorted(parts))
    }
}

/// Prefix-sum comparison: `a` majorizes `c` when every prefix sum of `a` is
/// at least the corresponding prefix sum of `c`.
pub fn majorizes(a: &Partition, c: &Partition) -> Result<bool, PartitionError> {
    if a.n() != c.n() {
        return Err(PartitionError::SizeMismatch { left: a.n(), right: c.n() });
    }
    let len = a.len().max(c.len());
    Ok(a.prefix_sums(len).iter().zip(c.prefix_sums(len)).all(|(&x, y)| x >= y))
}

/// All partitions of `n` in reverse-lexicographic order, starting with `(n)`.
pub fn partitions_of(n: u64) -> Result<Vec<Partition>, PartitionError> {
    if n > MAX_ENUMERATED {
        return Err(PartitionError::SizeLimit(n));
    }
    fn go(remaining: u64, max: u64, acc: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: acc.clone() });
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            acc.push(first);
            go(remaining - first, first, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

fn check_prime_power(p: u64, a: &Partition) -> Result<(), PartitionError> {
    if !arith::is_prime(p) {
        return Err(PartitionError::NotPrime(p));
    }
    let n = a.n();
    match u32::try_from(n).ok().and_then(|e| p.checked_pow(e)) {
        Some(q) if q <= MAX_SYMBOLIC_ORDER => Ok(()),
        _ => Err(PartitionError::Overflow { p, n }),
    }
}

/// Cumulative exponents `S_0 = 0, S_j = s_1 + ... + s_j` of the conjugate.
fn cumulative_exponents(a: &Partition) -> Vec<u32> {
    let s = a.conjugate();
    let mut out = vec![0u32];
    for &x in s.parts() {
        out.push(out.last().unwrap() + x as u32);
    }
    out
}

/// Order sequence of the abelian `p`-group with defining partition `a`,
/// from the count `p^(s_1 + ... + s_j)` of elements of order dividing `p^j`.
pub fn abelian_order_sequence(p: u64, a: &Partition) -> Result<OrderSequence, PartitionError> {
    check_prime_power(p, a)?;
    let cum = cumulative_exponents(a);
    let mut entries = vec![(1, 1)];
    for j in 1..cum.len() {
        let count = p.pow(cum[j]) - p.pow(cum[j - 1]);
        entries.push((p.pow(j as u32), count));
    }
    Ok(OrderSequence::new(entries).expect("positive counts"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicOrderCount {
    pub order: u64,
    pub elements: u64,
    pub cyclic_subgroups: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicSubgroupCounts {
    pub per_order: Vec<CyclicOrderCount>,
    /// Number of cyclic subgroups, the trivial one included.
    pub total: u64,
    /// `Π (r_i + 1)` over the parts.
    pub divisor_product: u64,
}

/// Elements and cyclic subgroups of each order `p^j` in the abelian
/// `p`-group with defining partition `a`.
pub fn cyclic_subgroup_counts(p: u64, a: &Partition) -> Result<CyclicSubgroupCounts, PartitionError> {
    check_prime_power(p, a)?;
    let cum = cumulative_exponents(a);
    let mut per_order = vec![CyclicOrderCount { order: 1, elements: 1, cyclic_subgroups: 1 }];
    for j in 1..cum.len() {
        let elements = p.pow(cum[j - 1]) * (p.pow(cum[j] - cum[j - 1]) - 1);
        let generators = p.pow(j as u32 - 1) * (p - 1);
        per_order.push(CyclicOrderCount { order: p.pow(j as u32), elements, cyclic_subgroups: elements / generators });
    }
    let total = per_order.iter().map(|c| c.cyclic_subgroups).sum();
    Ok(CyclicSubgroupCounts { per_order, total, divisor_product: a.divisor_product() })
}

/// Chain `a = b^0, b^1, ..., b^r = c` in which each step moves one box of
/// the Young diagram from a higher row to a lower row. When `a = c` the chain
/// is just `[a]`.
pub fn box_move_chain(a: &Partition, c: &Partition) -> Result<Vec<Partition>, PartitionError> {
    if !majorizes(a, c)? {
        return Err(PartitionError::NotMajorized { from: a.clone(), to: c.clone() });
    }
    let mut chain = vec![a.clone()];
    let mut b = a.clone();
    while b != *c {
        let len = b.len().max(c.len()) + 1;
        let i = (0..len).find(|&i| b.part(i) != c.part(i)).expect("b != c");
        let j = (i + 1..len).find(|&j| b.part(j) < c.part(j)).expect("b majorizes c");
        // Take from the bottom of row i's block and add to the top of row j's.
        let (bi, bj) = (b.part(i), b.part(j));
        let src = (0..len).rev().find(|&k| b.part(k) == bi).expect("row exists");
        let dst = (0..len).find(|&k| b.part(k) == bj).expect("row exists");
        let mut parts: Vec<u64> = (0..len).map(|k| b.part(k)).collect();
        parts[src] -= 1;
        parts[dst] += 1;
        parts.retain(|&x| x > 0);
        let next = Partition::new(parts).expect("box move keeps rows non-increasing");
        debug_assert!(majorizes(&b, &next).unwrap() && majorizes(&next, c).unwrap());
        chain.push(next.clone());
        b = next;
    }
    Ok(chain)
}

/// Recovers the defining partition of an abelian `p`-group from its order
/// sequence: the cumulative count of orders dividing `p^j` is `p^(s_1+...+s_j)`.
pub fn defining_partition(s: &OrderSequence, p: u64) -> Result<Partition, PartitionError> {
    let bad = |reason: String| PartitionError::NotAbelianPGroupSequence { p, reason };
    if !arith::is_prime(p) {
        return Err(PartitionError::NotPrime(p));
    }
    let mut cumulative = 0u64;
    let mut last_exp = 0u32;
    let mut conj = Vec::new();
    for (j, &(order, m)) in s.entries().iter().enumerate() {
        if arith::prime_power_exponent(order, p) != Some(j as u32) {
            return Err(bad(format!("expected order {}^{j}, found {order}", p)));
        }
        cumulative += m;
        let e = arith::prime_power_exponent(cumulative, p)
            .ok_or_else(|| bad(format!("cumulative count {cumulative} is not a power of {p}")))?;
        if j == 0 {
            if cumulative != 1 {
                return Err(bad("identity count is not 1".into()));
            }
        } else {
            conj.push((e - last_exp) as u64);
        }
        last_exp = e;
    }
    let conj = Partition::new(conj).map_err(|_| bad("exponent increments are not non-increasing".into()))?;
    let a = conj.conjugate();
    if abelian_order_sequence(p, &a)? != *s {
        return Err(bad("sequence does not round-trip".into()));
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(part("4+2+1").conjugate(), part("3+2+1+1"));
        assert_eq!(part("5").conjugate(), part("1+1+1+1+1"));
        assert_eq!(part("2+2").conjugate(), part("2+2"));
    }

    #[test]
    fn majorization_examples() {
        assert!(majorizes(&part("6"), &part("5+1")).unwrap());
        assert!(majorizes(&part("5+1"), &part("4+2")).unwrap());
        assert!(!majorizes(&part("2+2+2"), &part("3+1+1+1")).unwrap());
        assert!(!majorizes(&part("3+1+1+1"), &part("2+2+2")).unwrap());
        assert!(majorizes(&part("3+1"), &part("3+1")).unwrap());
        assert!(matches!(majorizes(&part("3"), &part("2")), Err(PartitionError::SizeMismatch { .. })));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(4).unwrap().len(), 5);
        assert_eq!(partitions_of(1).unwrap(), vec![part("1")]);
        assert_eq!(partitions_of(10).unwrap().len(), 42);
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::from_unsorted(vec![])]);
        let four: Vec<String> = partitions_of(4).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(four, vec!["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]);
        assert!(partitions_of(61).is_err());
    }

    #[test]
    fn abelian_sequences() {
        assert_eq!(abelian_order_sequence(2, &part("2+1")).unwrap().to_string(), "1:1,2:3,4:4");
        assert_eq!(abelian_order_sequence(3, &part("1+1+1")).unwrap().to_string(), "1:1,3:26");
        assert!(matches!(abelian_order_sequence(2, &part("30+1")), Err(PartitionError::Overflow { .. })));
    }

    #[test]
    fn cyclic_counts() {
        let c = cyclic_subgroup_counts(2, &part("4+1+1")).unwrap();
        assert_eq!(c.total, 20);
        assert_eq!(c.divisor_product, 20);
        let c = cyclic_subgroup_counts(2, &part("3+3")).unwrap();
        assert_eq!(c.total, 22);
        assert_eq!(c.divisor_product, 16);
        let c = cyclic_subgroup_counts(5, &part("4")).unwrap();
        assert_eq!(c.total, 5);
    }

    #[test]
    fn box_moves() {
        let chain = box_move_chain(&part("3"), &part("1+1+1")).unwrap();
        assert_eq!(chain, vec![part("3"), part("2+1"), part("1+1+1")]);
        let chain = box_move_chain(&part("4+2+1"), &part("3+2+1+1")).unwrap();
        assert_eq!(chain, vec![part("4+2+1"), part("3+2+1+1")]);
        assert_eq!(box_move_chain(&part("2+1"), &part("2+1")).unwrap(), vec![part("2+1")]);
        assert!(matches!(box_move_chain(&part("2+2+2"), &part("3+1+1+1")), Err(PartitionError::NotMajorized { .. })));
    }

    #[test]
    fn defining_partitions() {
        let s = abelian_order_sequence(2, &part("2+1")).unwrap();
        assert_eq!(defining_partition(&s, 2).unwrap(), part("2+1"));
        let cp: OrderSequence = "1:1,7:6".parse().unwrap();
        assert_eq!(defining_partition(&cp, 7).unwrap(), part("1"));
        let bad: OrderSequence = "1:1,2:1,4:2,8:4,3:1".parse().unwrap();
        assert!(defining_partition(&bad, 2).is_err());
        let not_abelian: OrderSequence = "1:1,2:1,4:6".parse().unwrap();
        assert!(defining_partition(&not_abelian, 2).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(part("1+2+4").to_string(), "4+2+1");
        assert_eq!(part("(3,3)"), part("3+3"));
        assert!("3+0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
