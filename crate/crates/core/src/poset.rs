//! Finite posets over named items, Hasse diagrams and their renderings.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not transitive: `{0}` <= `{1}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("`{0}` and `{1}` are mutually related but distinct")]
    AntisymmetryViolation(String, String),
    #[error("unknown render format `{0}`")]
    UnknownFormat(String),
    #[error("malformed diagram: {0}")]
    Malformed(String),
}

/// One element of a poset: a class of mutually related input items.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetItem {
    pub name: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Poset {
    items: Vec<PosetItem>,
    leq: Vec<Vec<bool>>,
    class_of: Vec<usize>,
}

/// Separator used when a class name lists several members.
pub const CLASS_NAME_SEPARATOR: &str = " / ";

/// Builds a poset from `items` ordered by `leq`. With `collapse`, items
/// related in both directions are merged into one class; without it such a
/// pair is an error.
pub fn build_poset<T>(
    items: &[(String, T)],
    leq: impl Fn(&T, &T) -> bool,
    collapse: bool,
) -> Result<Poset, PosetError> {
    let n = items.len();
    let rel: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| leq(&items[i].1, &items[j].1)).collect()).collect();
    for (i, (name, _)) in items.iter().enumerate() {
        if !rel[i][i] {
            return Err(PosetError::NotReflexive(name.clone()));
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = vec![i];
        class_of[i] = c;
        for j in i + 1..n {
            if class_of[j] == usize::MAX && rel[i][j] && rel[j][i] {
                if !collapse {
                    return Err(PosetError::AntisymmetryViolation(items[i].0.clone(), items[j].0.clone()));
                }
                class_of[j] = c;
                members.push(j);
            }
        }
        classes.push(members);
    }
    let k = classes.len();
    let rep: Vec<usize> = classes.iter().map(|m| m[0]).collect();
    let leq_c: Vec<Vec<bool>> = (0..k).map(|a| (0..k).map(|b| rel[rep[a]][rep[b]]).collect()).collect();
    // The relation must be constant on classes and transitive.
    for i in 0..n {
        for j in 0..n {
            if rel[i][j] != leq_c[class_of[i]][class_of[j]] {
                return Err(PosetError::NotTransitive(
                    items[i].0.clone(),
                    items[rep[class_of[j]]].0.clone(),
                    items[j].0.clone(),
                ));
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            if !leq_c[a][b] {
                continue;
            }
            for c in 0..k {
                if leq_c[b][c] && !leq_c[a][c] {
                    return Err(PosetError::NotTransitive(
                        items[rep[a]].0.clone(),
                        items[rep[b]].0.clone(),
                        items[rep[c]].0.clone(),
                    ));
                }
            }
        }
    }
    let items = classes
        .iter()
        .map(|m| {
            let members: Vec<String> = m.iter().map(|&i| items[i].0.clone()).collect();
            PosetItem { name: members.join(CLASS_NAME_SEPARATOR), members }
        })
        .collect();
    Ok(Poset { items, leq: leq_c, class_of })
}

impl Poset {
    pub fn items(&self) -> &[PosetItem] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// Class index of the `i`-th input item.
    pub fn class_of(&self, item: usize) -> usize {
        self.class_of[item]
    }

    /// Class containing the member called `name`.
    pub fn find(&self, name: &str) -> Option<usize> {
        self.items.iter().position(|c| c.members.iter().any(|m| m == name))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub items: Vec<PosetItem>,
    /// `(lower, upper)` cover pairs.
    pub covers: Vec<(usize, usize)>,
}

/// Transitive reduction of the strict order.
pub fn hasse(p: &Poset) -> HasseDiagram {
    let k = p.len();
    let mut covers = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if p.lt(a, b) && !(0..k).any(|c| p.lt(a, c) && p.lt(c, b)) {
                covers.push((a, b));
            }
        }
    }
    let d = HasseDiagram { items: p.items.clone(), covers };
    debug_assert!(d.closure() == strict(p), "covers must regenerate the order");
    d
}

fn strict(p: &Poset) -> Vec<Vec<bool>> {
    (0..p.len()).map(|a| (0..p.len()).map(|b| p.lt(a, b)).collect()).collect()
}

impl HasseDiagram {
    /// Strict order generated by the covers.
    pub fn closure(&self) -> Vec<Vec<bool>> {
        let k = self.items.len();
        let mut m = vec![vec![false; k]; k];
        for &(a, b) in &self.covers {
            m[a][b] = true;
        }
        for c in 0..k {
            for a in 0..k {
                if m[a][c] {
                    for b in 0..k {
                        if m[c][b] {
                            m[a][b] = true;
                        }
                    }
                }
            }
        }
        m
    }

    /// True when the covers regenerate exactly the strict order of `p`.
    pub fn matches(&self, p: &Poset) -> bool {
        self.items == p.items && self.closure() == strict(p)
    }

    pub fn from_json(text: &str) -> Result<HasseDiagram, PosetError> {
        let d: HasseDiagram = serde_json::from_str(text).map_err(|e| PosetError::Malformed(e.to_string()))?;
        let k = d.items.len();
        if d.covers.iter().any(|&(a, b)| a >= k || b >= k || a == b) {
            return Err(PosetError::Malformed("cover index out of range".into()));
        }
        Ok(d)
    }

    /// Same diagram with items sorted by name and covers renumbered and sorted.
    pub fn sorted(&self) -> HasseDiagram {
        let mut order: Vec<usize> = (0..self.items.len()).collect();
        order.sort_by(|&a, &b| self.items[a].name.cmp(&self.items[b].name));
        let mut pos = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let items = order.iter().map(|&i| self.items[i].clone()).collect();
        let mut covers: Vec<(usize, usize)> = self.covers.iter().map(|&(a, b)| (pos[a], pos[b])).collect();
        covers.sort_unstable();
        HasseDiagram { items, covers }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremes {
    pub maximal: Vec<usize>,
    pub minimal: Vec<usize>,
    pub unique_max: bool,
}

pub fn extremes(p: &Poset) -> Extremes {
    let k = p.len();
    let maximal: Vec<usize> = (0..k).filter(|&a| !(0..k).any(|b| p.lt(a, b))).collect();
    let minimal: Vec<usize> = (0..k).filter(|&a| !(0..k).any(|b| p.lt(b, a))).collect();
    let unique_max = maximal.len() == 1;
    Extremes { maximal, minimal, unique_max }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Dot,
    Json,
}

impl FromStr for RenderFormat {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(RenderFormat::Dot),
            "json" => Ok(RenderFormat::Json),
            _ => Err(PosetError::UnknownFormat(s.to_string())),
        }
    }
}

impl fmt::Display for RenderFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RenderFormat::Dot => "dot",
            RenderFormat::Json => "json",
        })
    }
}

/// Graphviz identifier: letters, digits and underscores, not starting with a digit.
pub fn sanitize_id(name: &str) -> String {
    let mut id: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    if id.is_empty() || id.starts_with(|c: char| c.is_ascii_digit()) {
        id.insert_str(0, "n_");
    }
    id
}

fn unique_ids(names: impl Iterator<Item = String>) -> Vec<String> {
    let mut used = HashSet::new();
    names
        .map(|name| {
            let base = sanitize_id(&name);
            let mut id = base.clone();
            let mut k = 2;
            while !used.insert(id.clone()) {
                id = format!("{base}_{k}");
                k += 1;
            }
            id
        })
        .collect()
}

pub(crate) fn escape_label(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Deterministic text rendering with items sorted by name. DOT edges point
/// from each class to the classes covering it, drawn bottom to top.
pub fn render(d: &HasseDiagram, format: RenderFormat) -> String {
    let d = d.sorted();
    match format {
        RenderFormat::Json => serde_json::to_string_pretty(&d).expect("diagram serializes"),
        RenderFormat::Dot => {
            let ids = unique_ids(d.items.iter().map(|i| i.name.clone()));
            let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
            for (id, item) in ids.iter().zip(&d.items) {
                out.push_str(&format!("  {id} [label=\"{}\"];\n", escape_label(&item.name)));
            }
            for &(a, b) in &d.covers {
                out.push_str(&format!("  {} -> {};\n", ids[a], ids[b]));
            }
            out.push_str("}\n");
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: u64) -> Poset {
        let items: Vec<(String, u64)> = (1..=n).map(|i| (i.to_string(), i)).collect();
        build_poset(&items, |a, b| a <= b, true).unwrap()
    }

    #[test]
    fn chain_covers() {
        let d = hasse(&chain(3));
        assert_eq!(d.covers, vec![(0, 1), (1, 2)]);
        let e = extremes(&chain(3));
        assert_eq!((e.maximal, e.minimal, e.unique_max), (vec![2], vec![0], true));
    }

    #[test]
    fn single_item() {
        let p = chain(1);
        let e = extremes(&p);
        assert_eq!(e.maximal, e.minimal);
        assert!(hasse(&p).covers.is_empty());
    }

    #[test]
    fn antichain_has_no_edges() {
        let items: Vec<(String, u64)> = (0..4).map(|i| (format!("x{i}"), i)).collect();
        let p = build_poset(&items, |a, b| a == b, true).unwrap();
        assert!(hasse(&p).covers.is_empty());
        assert_eq!(extremes(&p).maximal.len(), 4);
        assert!(!extremes(&p).unique_max);
    }

    #[test]
    fn divisibility_poset() {
        let items: Vec<(String, u64)> = [1u64, 2, 3, 4, 6, 12].iter().map(|&i| (i.to_string(), i)).collect();
        let p = build_poset(&items, |a, b| b % a == 0, false).unwrap();
        let d = hasse(&p);
        assert_eq!(d.covers.len(), 7);
        assert!(d.matches(&p));
    }

    #[test]
    fn collapse_and_antisymmetry() {
        let items = vec![("a".to_string(), 1u64), ("b".to_string(), 1), ("c".to_string(), 2)];
        let p = build_poset(&items, |x, y| x <= y, true).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.items()[0].name, "a / b");
        assert_eq!(p.find("b"), Some(0));
        assert!(matches!(build_poset(&items, |x, y| x <= y, false), Err(PosetError::AntisymmetryViolation(..))));
    }

    #[test]
    fn rejects_non_orders() {
        let items = vec![("a".to_string(), 0u64), ("b".to_string(), 1), ("c".to_string(), 2)];
        // Only consecutive values related: not transitive.
        let err = build_poset(&items, |x, y| y == x || *y == x + 1, true).unwrap_err();
        assert!(matches!(err, PosetError::NotTransitive(..)));
        let err = build_poset(&items, |x, y| x < y, true).unwrap_err();
        assert!(matches!(err, PosetError::NotReflexive(_)));
    }

    #[test]
    fn renderings() {
        let d = hasse(&chain(2));
        let dot = render(&d, RenderFormat::Dot);
        assert!(dot.contains("rankdir=BT"));
        assert_eq!(dot.matches("[label=").count(), 2);
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("n_1 -> n_2"));
        let json = render(&d, RenderFormat::Json);
        assert_eq!(HasseDiagram::from_json(&json).unwrap(), d.sorted());
        assert!("svg".parse::<RenderFormat>().is_err());
    }

    #[test]
    fn sanitized_ids() {
        assert_eq!(sanitize_id("C2 x Q8"), "C2_x_Q8");
        assert_eq!(sanitize_id("4"), "n_4");
        let ids = unique_ids(["a b".to_string(), "a_b".to_string()].into_iter());
        assert_eq!(ids, vec!["a_b", "a_b_2"]);
    }
}
