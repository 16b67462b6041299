use std::collections::VecDeque;

use super::{FiniteGroup, GroupElement, GroupError};

/// An action of a group `H` on a group `N` by automorphisms: for each element
/// of `H`, the image of every element index of `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    images: Vec<Vec<u32>>,
}

impl GroupAction {
    /// Every element of `acting` acts as the identity.
    pub fn trivial(normal: &FiniteGroup, acting: &FiniteGroup) -> GroupAction {
        let id: Vec<u32> = (0..normal.size() as u32).collect();
        GroupAction { images: vec![id; acting.size()] }
    }

    /// Explicit images, one row per element of the acting group (unchecked
    /// until [`GroupAction::validate`] or use in a semidirect product).
    pub fn from_images(images: Vec<Vec<u32>>) -> GroupAction {
        GroupAction { images }
    }

    /// Extends the images of generators of `acting` to a left action
    /// (`act(h1 h2) = act(h1) ∘ act(h2)`), walking the Cayley graph of `acting`.
    pub fn from_generators(
        normal: &FiniteGroup,
        acting: &FiniteGroup,
        gens: &[(GroupElement, Vec<u32>)],
    ) -> Result<GroupAction, GroupError> {
        let n = normal.size();
        for (h, map) in gens {
            check_automorphism(normal, h.index(), map)?;
        }
        let mut images: Vec<Option<Vec<u32>>> = vec![None; acting.size()];
        images[0] = Some((0..n as u32).collect());
        let mut queue = VecDeque::from([GroupElement::IDENTITY]);
        while let Some(h) = queue.pop_front() {
            let current = images[h.index()].clone().expect("visited");
            for (s, map) in gens {
                let hs = acting.mul(h, *s);
                let composed: Vec<u32> = map.iter().map(|&x| current[x as usize]).collect();
                match &images[hs.index()] {
                    Some(existing) if *existing != composed => {
                        return Err(GroupError::ActionNotHomomorphism { left: h.index(), right: s.index() })
                    }
                    Some(_) => {}
                    None => {
                        images[hs.index()] = Some(composed);
                        queue.push_back(hs);
                    }
                }
            }
        }
        let images: Option<Vec<Vec<u32>>> = images.into_iter().collect();
        let images = images
            .ok_or_else(|| GroupError::InvalidParameter("action generators do not generate the acting group".into()))?;
        let action = GroupAction { images };
        action.validate(normal, acting)?;
        Ok(action)
    }

    /// `gen` acts on an abelian `normal` by `x ↦ x^k`.
    pub fn power_map(
        normal: &FiniteGroup,
        acting: &FiniteGroup,
        gen: GroupElement,
        k: u64,
    ) -> Result<GroupAction, GroupError> {
        let map: Vec<u32> = normal.elements().map(|x| normal.pow(x, k).index() as u32).collect();
        GroupAction::from_generators(normal, acting, &[(gen, map)])
    }

    pub fn images(&self) -> &[Vec<u32>] {
        &self.images
    }

    pub fn image(&self, h: GroupElement, n: GroupElement) -> GroupElement {
        GroupElement::new(self.images[h.index()][n.index()] as usize)
    }

    /// Checks that every image is an automorphism of `normal` and that the
    /// assignment is a homomorphism from `acting`.
    pub fn validate(&self, normal: &FiniteGroup, acting: &FiniteGroup) -> Result<(), GroupError> {
        let n = normal.size();
        if self.images.len() != acting.size() {
            return Err(GroupError::InvalidParameter(format!(
                "action has {} rows for an acting group of order {}",
                self.images.len(),
                acting.size()
            )));
        }
        for (h, map) in self.images.iter().enumerate() {
            check_automorphism(normal, h, map)?;
        }
        if self.images[0].iter().enumerate().any(|(i, &x)| i != x as usize) {
            return Err(GroupError::ActionNotHomomorphism { left: 0, right: 0 });
        }
        for h1 in acting.elements() {
            for &h2 in acting.generators() {
                let prod = &self.images[acting.mul(h1, h2).index()];
                let left = &self.images[h1.index()];
                let right = &self.images[h2.index()];
                if (0..n).any(|x| prod[x] != left[right[x] as usize]) {
                    return Err(GroupError::ActionNotHomomorphism { left: h1.index(), right: h2.index() });
                }
            }
        }
        Ok(())
    }
}

fn check_automorphism(normal: &FiniteGroup, h: usize, map: &[u32]) -> Result<(), GroupError> {
    let n = normal.size();
    let bad = |detail: String| GroupError::ActionNotAutomorphism { acting: h, detail };
    if map.len() != n {
        return Err(bad("wrong length".into()));
    }
    let mut seen = vec![false; n];
    for &x in map {
        if x as usize >= n || seen[x as usize] {
            return Err(bad("not a bijection".into()));
        }
        seen[x as usize] = true;
    }
    if map[0] != 0 {
        return Err(bad("identity is moved".into()));
    }
    for a in normal.elements() {
        for &s in normal.generators() {
            let lhs = map[normal.mul(a, s).index()];
            let rhs =
                normal.mul(GroupElement::new(map[a.index()] as usize), GroupElement::new(map[s.index()] as usize));
            if lhs as usize != rhs.index() {
                return Err(bad(format!("f({a} {s}) != f({a}) f({s})")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, direct_product, is_isomorphic, semidirect_product};

    #[test]
    fn inversion_on_c3_by_c4() {
        let n = cyclic(3).unwrap();
        let h = cyclic(4).unwrap();
        let act = GroupAction::power_map(&n, &h, GroupElement::new(1), 2).unwrap();
        let g = semidirect_product(&n, &h, &act).unwrap();
        let mut orders: Vec<u32> = g.element_orders().to_vec();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6]);
    }

    #[test]
    fn trivial_action_is_direct_product() {
        let n = cyclic(3).unwrap();
        let h = cyclic(4).unwrap();
        let g = semidirect_product(&n, &h, &GroupAction::trivial(&n, &h)).unwrap();
        assert!(is_isomorphic(&g, &direct_product(&n, &h).unwrap()).unwrap());
    }

    #[test]
    fn rejects_non_automorphism() {
        let n = cyclic(4).unwrap();
        let h = cyclic(2).unwrap();
        // x -> x^2 is not a bijection on C4.
        let err = GroupAction::power_map(&n, &h, GroupElement::new(1), 2).unwrap_err();
        assert!(matches!(err, GroupError::ActionNotAutomorphism { .. }));
    }

    #[test]
    fn rejects_non_homomorphism() {
        // Generator of C2 acting by an automorphism of order 4 on C5.
        let n = cyclic(5).unwrap();
        let h = cyclic(2).unwrap();
        let err = GroupAction::power_map(&n, &h, GroupElement::new(1), 2).unwrap_err();
        assert!(matches!(err, GroupError::ActionNotHomomorphism { .. }));
    }

    #[test]
    fn faithful_c4_on_c5_gives_f20() {
        let n = cyclic(5).unwrap();
        let h = cyclic(4).unwrap();
        let act = GroupAction::power_map(&n, &h, GroupElement::new(1), 2).unwrap();
        let g = semidirect_product(&n, &h, &act).unwrap();
        assert_eq!(g.element_orders().iter().filter(|&&o| o == 4).count(), 10);
    }
}
