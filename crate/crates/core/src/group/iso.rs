use std::collections::{BTreeMap, VecDeque};

use super::{FiniteGroup, GroupElement, GroupError};

/// Groups larger than this are never searched for an isomorphism.
pub const ISO_BACKTRACK_LIMIT: usize = 2500;

/// Cheap isomorphism invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInvariants {
    pub size: usize,
    pub order_counts: BTreeMap<u32, usize>,
    pub center_size: usize,
    pub abelianization_size: usize,
    pub class_sizes: BTreeMap<usize, usize>,
}

impl GroupInvariants {
    pub fn of(g: &FiniteGroup) -> Self {
        let mut order_counts = BTreeMap::new();
        for &o in g.element_orders() {
            *order_counts.entry(o).or_insert(0) += 1;
        }
        // Classes of size s contribute s elements each with class size s.
        let mut class_sizes = BTreeMap::new();
        for size in class_sizes_per_element(g) {
            *class_sizes.entry(size).or_insert(0) += 1;
        }
        for (size, count) in class_sizes.iter_mut() {
            *count /= *size;
        }
        GroupInvariants {
            size: g.size(),
            order_counts,
            center_size: g.center().len(),
            abelianization_size: g.size() / g.derived_subgroup().len(),
            class_sizes,
        }
    }
}

/// Size of the conjugacy class of every element.
pub(crate) fn class_sizes_per_element(g: &FiniteGroup) -> Vec<usize> {
    let gens = g.generators();
    let mut out = vec![0; g.size()];
    for x in g.elements() {
        if out[x.index()] != 0 {
            continue;
        }
        let mut class = vec![x];
        let mut marked = std::collections::HashSet::from([x]);
        let mut head = 0;
        while head < class.len() {
            let y = class[head];
            head += 1;
            for &s in gens {
                let z = g.conjugate(y, s);
                if marked.insert(z) {
                    class.push(z);
                }
            }
        }
        for y in &class {
            out[y.index()] = class.len();
        }
    }
    out
}

/// Decides whether `g` and `h` are isomorphic: invariants first, then a
/// backtracking search for images of a generating set of `g`.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool, GroupError> {
    if g.size() != h.size() {
        return Ok(false);
    }
    let n = g.size();
    let ig = GroupInvariants::of(g);
    let ih = GroupInvariants::of(h);
    if ig != ih {
        return Ok(false);
    }
    if g.is_cyclic() || n <= 3 {
        return Ok(true);
    }
    if n > ISO_BACKTRACK_LIMIT {
        return Err(GroupError::SizeLimit { requested: n as u128, limit: ISO_BACKTRACK_LIMIT });
    }
    let g_class = class_sizes_per_element(g);
    let h_class = class_sizes_per_element(h);
    let gens = g.generators().to_vec();
    let candidates: Vec<Vec<GroupElement>> = gens
        .iter()
        .map(|&x| {
            h.elements()
                .filter(|&y| h.element_order(y) == g.element_order(x) && h_class[y.index()] == g_class[x.index()])
                .collect()
        })
        .collect();
    let mut search = Search {
        g,
        h,
        gens: &gens,
        candidates: &candidates,
        images: Vec::new(),
        map: vec![u32::MAX; n],
        used: vec![false; n],
    };
    search.map[0] = 0;
    search.used[0] = true;
    Ok(search.extend(vec![GroupElement::IDENTITY]))
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: &'a [GroupElement],
    candidates: &'a [Vec<GroupElement>],
    images: Vec<GroupElement>,
    map: Vec<u32>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// `domain` is the subgroup generated by the first `images.len()` generators,
    /// already mapped consistently.
    fn extend(&mut self, domain: Vec<GroupElement>) -> bool {
        let depth = self.images.len();
        if depth == self.gens.len() {
            return domain.len() == self.g.size();
        }
        for &y in &self.candidates[depth] {
            if self.used[y.index()] {
                continue;
            }
            self.images.push(y);
            if let Some(added) = self.close(&domain) {
                let mut bigger = domain.clone();
                bigger.extend(added.iter().copied());
                if self.extend(bigger) {
                    return true;
                }
                for z in added {
                    let img = self.map[z.index()] as usize;
                    self.used[img] = false;
                    self.map[z.index()] = u32::MAX;
                }
            }
            self.images.pop();
        }
        false
    }

    /// Extends the map to the subgroup generated by the domain and the newest
    /// generator, checking every Cayley-graph edge. Returns the newly mapped
    /// elements, or `None` (with the map restored) on conflict.
    fn close(&mut self, domain: &[GroupElement]) -> Option<Vec<GroupElement>> {
        let k = self.images.len();
        let gens = &self.gens[..k];
        let mut added: Vec<GroupElement> = Vec::new();
        let mut queue: VecDeque<GroupElement> = domain.iter().copied().collect();
        let mut ok = true;
        'walk: while let Some(a) = queue.pop_front() {
            let fa = GroupElement::new(self.map[a.index()] as usize);
            for (i, &s) in gens.iter().enumerate() {
                let b = self.g.mul(a, s);
                let fb = self.h.mul(fa, self.images[i]);
                let current = self.map[b.index()];
                if current == u32::MAX {
                    if self.used[fb.index()] {
                        ok = false;
                        break 'walk;
                    }
                    self.map[b.index()] = fb.index() as u32;
                    self.used[fb.index()] = true;
                    added.push(b);
                    queue.push_back(b);
                } else if current as usize != fb.index() {
                    ok = false;
                    break 'walk;
                }
            }
        }
        if ok {
            Some(added)
        } else {
            for z in added {
                let img = self.map[z.index()] as usize;
                self.used[img] = false;
                self.map[z.index()] = u32::MAX;
            }
            None
        }
    }
}
