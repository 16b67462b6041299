use std::fmt;
use std::str::FromStr;

use super::perm::{permutation_group, Permutation};
use super::{cyclic, semidirect_product, FiniteGroup, GroupAction, GroupElement, GroupError};
use crate::arith;

/// Named families accepted by [`standard_family`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Dihedral,
    Dicyclic,
    Symmetric,
    Alternating,
    Heisenberg,
    Modular16,
    Semidihedral16,
    F20,
    F21,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Dihedral,
        Family::Dicyclic,
        Family::Symmetric,
        Family::Alternating,
        Family::Heisenberg,
        Family::Modular16,
        Family::Semidihedral16,
        Family::F20,
        Family::F21,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Dihedral => "dihedral",
            Family::Dicyclic => "dicyclic",
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
            Family::Heisenberg => "heisenberg",
            Family::Modular16 => "modular16",
            Family::Semidihedral16 => "semidihedral16",
            Family::F20 => "F20",
            Family::F21 => "F21",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::Dihedral | Family::Dicyclic | Family::Symmetric | Family::Alternating | Family::Heisenberg => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| GroupError::UnknownFamily(s.to_string()))
    }
}

/// Builds a member of a named family. One-parameter families take the group
/// order for `dihedral` and `dicyclic`, the degree for `symmetric` and
/// `alternating`, and the prime for `heisenberg`.
pub fn standard_family(name: &str, params: &[u64]) -> Result<FiniteGroup, GroupError> {
    let family: Family = name.parse()?;
    if params.len() != family.arity() {
        return Err(GroupError::InvalidParameter(format!(
            "{family} takes {} parameter(s), got {}",
            family.arity(),
            params.len()
        )));
    }
    match family {
        Family::Dihedral => dihedral(params[0]),
        Family::Dicyclic => dicyclic(params[0]),
        Family::Symmetric => symmetric(params[0]),
        Family::Alternating => alternating(params[0]),
        Family::Heisenberg => heisenberg(params[0]),
        Family::Modular16 => cyclic_extension("M16", 8, 2, 5),
        Family::Semidihedral16 => cyclic_extension("SD16", 8, 2, 3),
        Family::F20 => cyclic_extension("F20", 5, 4, 2),
        Family::F21 => cyclic_extension("F21", 7, 3, 2),
    }
}

/// `C_n ⋊ C_m` where the generator of `C_m` acts by `x ↦ x^k`.
pub fn cyclic_extension(name: &str, n: u64, m: u64, k: u64) -> Result<FiniteGroup, GroupError> {
    let normal = cyclic(n)?;
    let acting = cyclic(m)?;
    let act = GroupAction::power_map(&normal, &acting, GroupElement::new(1 % m as usize), k)?;
    Ok(semidirect_product(&normal, &acting, &act)?.renamed(name))
}

/// Dihedral group of order `order` (even, at least 2).
pub fn dihedral(order: u64) -> Result<FiniteGroup, GroupError> {
    if order < 2 || order % 2 != 0 {
        return Err(GroupError::InvalidParameter(format!("dihedral order {order} must be even")));
    }
    let m = order / 2;
    cyclic_extension(&format!("D{order}"), m, 2, m - 1)
}

/// Dicyclic group of order `order` (divisible by 4): `<x, y | x^(2m), y^2 = x^m, y x y^-1 = x^-1>`.
pub fn dicyclic(order: u64) -> Result<FiniteGroup, GroupError> {
    if order < 4 || order % 4 != 0 {
        return Err(GroupError::InvalidParameter(format!("dicyclic order {order} must be a multiple of 4")));
    }
    let name = match order {
        8 => "Q8".to_string(),
        16 => "Q16".to_string(),
        _ => format!("Dic{order}"),
    };
    let m = (order / 4) as u32;
    let two_m = 2 * m;
    // x^a y^b at index a + 2m b.
    FiniteGroup::from_formula(name, order as usize, move |u, v| {
        let (a1, b1) = (u % two_m, u / two_m);
        let (a2, b2) = (v % two_m, v / two_m);
        match (b1, b2) {
            (0, _) => (a1 + a2) % two_m + two_m * b2,
            (_, 0) => (a1 + two_m - a2) % two_m + two_m,
            _ => (a1 + two_m - a2 + m) % two_m,
        }
    })
}

pub fn symmetric(m: u64) -> Result<FiniteGroup, GroupError> {
    guard_degree(m, 7)?;
    let m = m as usize;
    let mut gens = Vec::new();
    if m >= 2 {
        gens.push(Permutation::from_cycles(m, &[&[0, 1]])?);
        let long: Vec<usize> = (0..m).collect();
        gens.push(Permutation::from_cycles(m, &[&long])?);
    }
    Ok(permutation_group(&gens)?.renamed(format!("S{m}")))
}

pub fn alternating(m: u64) -> Result<FiniteGroup, GroupError> {
    guard_degree(m, 8)?;
    let m = m as usize;
    let gens = (2..m).map(|i| Permutation::from_cycles(m, &[&[0, 1, i]])).collect::<Result<Vec<_>, _>>()?;
    Ok(permutation_group(&gens)?.renamed(format!("A{m}")))
}

fn guard_degree(m: u64, max: u64) -> Result<(), GroupError> {
    if m == 0 {
        return Err(GroupError::InvalidParameter("degree must be positive".into()));
    }
    if m > max {
        let mut size = 1u128;
        for k in 1..=m.min(40) as u128 {
            size = size.saturating_mul(k);
        }
        return Err(GroupError::SizeLimit { requested: size, limit: super::MAX_GROUP_ORDER });
    }
    Ok(())
}

/// Upper unitriangular 3x3 matrices over `Z/p`, order `p^3`.
pub fn heisenberg(p: u64) -> Result<FiniteGroup, GroupError> {
    if !arith::is_prime(p) {
        return Err(GroupError::InvalidParameter(format!("{p} is not prime")));
    }
    if p > 29 {
        return Err(GroupError::SizeLimit { requested: (p as u128).pow(3), limit: super::MAX_GROUP_ORDER });
    }
    let p = p as u32;
    let pp = p * p;
    // (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b') at index a p^2 + b p + c.
    FiniteGroup::from_formula(format!("Heis({p})"), (pp * p) as usize, move |u, v| {
        let (a1, b1, c1) = (u / pp, (u / p) % p, u % p);
        let (a2, b2, c2) = (v / pp, (v / p) % p, v % p);
        let a = (a1 + a2) % p;
        let b = (b1 + b2) % p;
        let c = (c1 + c2 + a1 * b2) % p;
        a * pp + b * p + c
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{abelian, is_isomorphic};

    fn sorted_orders(g: &FiniteGroup) -> Vec<u32> {
        let mut v = g.element_orders().to_vec();
        v.sort();
        v
    }

    #[test]
    fn q8_orders() {
        let q8 = standard_family("dicyclic", &[8]).unwrap();
        assert_eq!(q8.name(), "Q8");
        assert_eq!(sorted_orders(&q8), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert_eq!(q8.center().len(), 2);
    }

    #[test]
    fn dihedral_12_orders() {
        let d = dihedral(12).unwrap();
        assert_eq!(sorted_orders(&d), vec![1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 6, 6]);
    }

    #[test]
    fn heisenberg_has_exponent_p() {
        let h = heisenberg(3).unwrap();
        assert_eq!(h.size(), 27);
        assert_eq!(h.exponent(), 3);
        assert!(!h.is_abelian());
        assert!(!is_isomorphic(&h, &abelian(&[3, 3, 3]).unwrap()).unwrap());
    }

    #[test]
    fn dicyclic_small_cases() {
        assert!(dicyclic(4).unwrap().is_cyclic());
        let dic12 = dicyclic(12).unwrap();
        assert_eq!(sorted_orders(&dic12), vec![1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6]);
        assert!(dicyclic(10).is_err());
    }

    #[test]
    fn symmetric_and_alternating() {
        assert_eq!(symmetric(1).unwrap().size(), 1);
        assert_eq!(symmetric(3).unwrap().exponent(), 6);
        assert_eq!(symmetric(5).unwrap().size(), 120);
        assert_eq!(alternating(4).unwrap().size(), 12);
        assert_eq!(alternating(2).unwrap().size(), 1);
        assert!(matches!(symmetric(8), Err(GroupError::SizeLimit { .. })));
    }

    #[test]
    fn small_named_groups() {
        let m16 = standard_family("modular16", &[]).unwrap();
        let sd16 = standard_family("semidihedral16", &[]).unwrap();
        assert_eq!(m16.size(), 16);
        assert_eq!(sd16.size(), 16);
        assert!(!is_isomorphic(&m16, &sd16).unwrap());
        assert_eq!(standard_family("F21", &[]).unwrap().size(), 21);
        assert!(matches!(standard_family("klein", &[]), Err(GroupError::UnknownFamily(_))));
        assert!(standard_family("dihedral", &[]).is_err());
    }
}
