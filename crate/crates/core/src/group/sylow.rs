use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FiniteGroup, GroupElement, GroupError};
use crate::arith;

const SYLOW_SEED: u64 = 0x5910;

/// Elements of a Sylow `p`-subgroup, sorted.
///
/// Starting from the trivial subgroup, repeatedly adjoins a `p`-element
/// (scanned in a seeded shuffled order) while the generated subgroup stays a
/// `p`-group. A proper `p`-subgroup is always properly contained in its
/// normalizer inside some Sylow subgroup, so every pass makes progress.
pub fn sylow_subgroup_elements(g: &FiniteGroup, p: u64) -> Result<Vec<GroupElement>, GroupError> {
    let n = g.size() as u64;
    if !arith::is_prime(p) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    if n % p != 0 {
        return Err(GroupError::PrimeDoesNotDivide { p, n: g.size() });
    }
    let target = p.pow(arith::valuation(n, p)) as usize;
    let mut candidates: Vec<GroupElement> = g
        .elements()
        .filter(|&x| x.index() != 0 && arith::prime_power_exponent(g.element_order(x), p).is_some())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SYLOW_SEED);
    candidates.shuffle(&mut rng);

    let mut gens: Vec<GroupElement> = Vec::new();
    let mut current = vec![GroupElement::IDENTITY];
    loop {
        let before = current.len();
        for &x in &candidates {
            if current.len() == target {
                return Ok(current);
            }
            if current.binary_search(&x).is_ok() {
                continue;
            }
            gens.push(x);
            match bounded_closure(g, &gens, target) {
                Some(sub) if arith::prime_power_exponent(sub.len() as u64, p).is_some() => {
                    current = sub;
                }
                _ => {
                    gens.pop();
                }
            }
        }
        if current.len() == target {
            return Ok(current);
        }
        assert!(current.len() > before, "Sylow search stalled at order {}", current.len());
    }
}

/// Subgroup generated by `gens`, or `None` once it exceeds `limit` elements.
fn bounded_closure(g: &FiniteGroup, gens: &[GroupElement], limit: usize) -> Option<Vec<GroupElement>> {
    let mut seen = HashSet::from([GroupElement::IDENTITY]);
    let mut out = vec![GroupElement::IDENTITY];
    let mut head = 0;
    while head < out.len() {
        let x = out[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if seen.insert(y) {
                if out.len() == limit {
                    return None;
                }
                out.push(y);
            }
        }
    }
    out.sort();
    Some(out)
}

/// A Sylow `p`-subgroup as a standalone group.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<FiniteGroup, GroupError> {
    let elems = sylow_subgroup_elements(g, p)?;
    g.subgroup(format!("Syl{p}({})", g.name()), &elems)
}

/// True iff every Sylow subgroup is normal.
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    arith::prime_divisors(g.size() as u64).into_iter().all(|p| {
        let sylow = sylow_subgroup_elements(g, p).expect("p divides |G|");
        g.is_normal(&sylow)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating, cyclic, dihedral, is_isomorphic, standard_family, symmetric};

    #[test]
    fn sylow_of_s4_is_d8() {
        let s4 = symmetric(4).unwrap();
        let p = sylow_subgroup(&s4, 2).unwrap();
        assert_eq!(p.size(), 8);
        assert!(is_isomorphic(&p, &dihedral(8).unwrap()).unwrap());
        assert!(!s4.is_normal(&sylow_subgroup_elements(&s4, 2).unwrap()));
    }

    #[test]
    fn sylow_of_a4_is_normal_klein() {
        let a4 = alternating(4).unwrap();
        let elems = sylow_subgroup_elements(&a4, 2).unwrap();
        assert_eq!(elems.len(), 4);
        assert!(a4.is_normal(&elems));
        assert!(!is_nilpotent(&a4));
    }

    #[test]
    fn sylow_of_cyclic() {
        let c12 = cyclic(12).unwrap();
        let s = sylow_subgroup(&c12, 3).unwrap();
        assert!(s.is_cyclic() && s.size() == 3);
        assert!(matches!(sylow_subgroup(&c12, 5), Err(GroupError::PrimeDoesNotDivide { .. })));
    }

    #[test]
    fn nilpotency_examples() {
        assert!(is_nilpotent(&standard_family("dicyclic", &[8]).unwrap()));
        assert!(is_nilpotent(&cyclic(6).unwrap()));
        assert!(is_nilpotent(&cyclic(1).unwrap()));
        assert!(!is_nilpotent(&symmetric(3).unwrap()));
    }

    #[test]
    fn sylow_in_a5() {
        let a5 = alternating(5).unwrap();
        for (p, size) in [(2, 4), (3, 3), (5, 5)] {
            assert_eq!(sylow_subgroup_elements(&a5, p).unwrap().len(), size);
        }
    }
}
