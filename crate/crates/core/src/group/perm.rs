use std::collections::HashMap;
use std::fmt;

use super::{check_size, FiniteGroup, GroupError, Law, MAX_GROUP_ORDER};
use crate::arith;

/// A bijection on the points `0..m`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u16).collect() }
    }

    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let m = images.len();
        if m > u16::MAX as usize {
            return Err(GroupError::InvalidParameter(format!("degree {m} too large")));
        }
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || seen[x] {
                return Err(GroupError::InvalidParameter(format!("image array {images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|x| x as u16).collect() })
    }

    /// Product of the given cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || used[x] {
                    return Err(GroupError::InvalidParameter(format!("bad cycle {cycle:?}")));
                }
                used[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images.get(point).map_or(point, |&x| x as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let m = self.degree().max(other.degree());
        let images = (0..m).map(|i| self.apply(other.apply(i)) as u16).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Cycle lengths, including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1, |acc, l| arith::lcm(acc, l as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }

    fn padded(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree() as u16..degree as u16);
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// The group generated by `gens` under composition, enumerated breadth-first
/// from the identity.
pub fn permutation_group(gens: &[Permutation]) -> Result<FiniteGroup, GroupError> {
    let degree = gens.iter().map(Permutation::degree).max().unwrap_or(0);
    let gens: Vec<Permutation> = gens.iter().map(|g| g.padded(degree)).collect();
    let id = Permutation::identity(degree);
    let mut perms = vec![id.clone()];
    let mut index = HashMap::from([(id, 0u32)]);
    let mut head = 0;
    while head < perms.len() {
        let x = perms[head].clone();
        head += 1;
        for g in &gens {
            let y = x.compose(g);
            if !index.contains_key(&y) {
                if perms.len() == MAX_GROUP_ORDER {
                    check_size(MAX_GROUP_ORDER as u128 + 1)?;
                }
                index.insert(y.clone(), perms.len() as u32);
                perms.push(y);
            }
        }
    }
    let size = perms.len();
    Ok(FiniteGroup::build(format!("Perm{degree}"), size, Law::Perm { perms, index }))
}
