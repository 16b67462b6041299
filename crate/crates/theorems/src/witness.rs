use std::fmt;

use ordseq_core::arith::{factorize, is_prime};
use ordseq_core::field::affine_frobenius_group;
use ordseq_core::group::{abelian, direct_product, FiniteGroup};
use serde::{Deserialize, Serialize};

use crate::BenchError;

/// Primes `p`, `q` and `d >= 1` with `q | p^d - 1`; any order divisible by
/// `p^d q` has a non-nilpotent group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub p: u64,
    pub d: u32,
    pub q: u64,
}

impl Witness {
    pub fn order(&self) -> u64 {
        self.p.pow(self.d) * self.q
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.d, self.q)
    }
}

/// Every witness for `n`, in lexicographic order.
pub fn all_witnesses(n: u64) -> Vec<Witness> {
    let fac = factorize(n);
    let mut out = Vec::new();
    for &(p, a) in &fac {
        for d in 1..=a {
            let pd = p.pow(d);
            for &(q, _) in &fac {
                if q != p && (pd - 1) % q == 0 {
                    out.push(Witness { p, d, q });
                }
            }
        }
    }
    out
}

/// Least witness in lexicographic order, searched over the factorization of `n`.
pub fn nonnilpotent_order_witness(n: u64) -> Option<Witness> {
    all_witnesses(n).into_iter().next()
}

/// Same search over every triple with `p^d q <= n`, for cross-checking.
pub fn brute_force_witness(n: u64) -> Option<Witness> {
    for p in (2..=n).filter(|&p| is_prime(p)) {
        let mut d = 1;
        while let Some(pd) = p.checked_pow(d).filter(|&x| x <= n) {
            for q in (2..=n).filter(|&q| is_prime(q)) {
                if (pd - 1) % q == 0 && pd.checked_mul(q).is_some_and(|m| n % m == 0) {
                    return Some(Witness { p, d, q });
                }
            }
            d += 1;
        }
    }
    None
}

/// `Aff(p,d,q) x K` for the least witness, with `K` abelian of the remaining
/// order and every Sylow subgroup of `K` of prime exponent.
pub fn minimal_nonnilpotent_group(n: u64) -> Result<FiniteGroup, BenchError> {
    let w = nonnilpotent_order_witness(n).ok_or(BenchError::NoWitness(n))?;
    witness_group(n, w)
}

/// `Aff(p,d,q) x K` for a given witness of `n`.
pub fn witness_group(n: u64, w: Witness) -> Result<FiniteGroup, BenchError> {
    if n % w.order() != 0 {
        return Err(BenchError::NoWitness(n));
    }
    let h = affine_frobenius_group(w.p, w.d, w.q)?;
    let rest = n / w.order();
    if rest == 1 {
        return Ok(h);
    }
    let factors: Vec<u64> = factorize(rest).into_iter().flat_map(|(r, a)| std::iter::repeat_n(r, a as usize)).collect();
    let k = abelian(&factors)?;
    Ok(direct_product(&h, &k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ordseq_core::group::{alternating, cyclic, direct_product, is_isomorphic, is_nilpotent};

    #[test]
    fn spec_witnesses() {
        assert_eq!(nonnilpotent_order_witness(60), Some(Witness { p: 2, d: 2, q: 3 }));
        assert_eq!(nonnilpotent_order_witness(15), None);
        assert_eq!(nonnilpotent_order_witness(6), Some(Witness { p: 3, d: 1, q: 2 }));
        assert_eq!(nonnilpotent_order_witness(1), None);
        for n in 1..=200 {
            assert_eq!(nonnilpotent_order_witness(n), brute_force_witness(n), "n={n}");
        }
    }

    #[test]
    fn constructions() {
        let a4 = alternating(4).unwrap();
        let h12 = minimal_nonnilpotent_group(12).unwrap();
        assert!(is_isomorphic(&h12, &a4).unwrap());
        let h60 = minimal_nonnilpotent_group(60).unwrap();
        let a4c5 = direct_product(&a4, &cyclic(5).unwrap()).unwrap();
        assert!(is_isomorphic(&h60, &a4c5).unwrap());
        assert!(!is_nilpotent(&h60));
        assert!(matches!(minimal_nonnilpotent_group(27), Err(BenchError::NoWitness(27))));
        let ws: Vec<String> = all_witnesses(60).iter().map(|w| w.to_string()).collect();
        assert_eq!(ws, ["(2,2,3)", "(3,1,2)", "(5,1,2)"]);
    }
}
