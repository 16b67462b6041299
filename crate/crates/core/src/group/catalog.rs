//! Complete lists of isomorphism types at selected orders.
//!
//! Candidates are built from standard constructions, deduplicated by
//! isomorphism testing, and the survivors are checked against the known
//! number of groups of that order.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::{
    abelian, alternating, cyclic, cyclic_extension, dicyclic, dihedral, direct_product, is_isomorphic, quotient,
    semidirect_product, standard_family, symmetric, FiniteGroup, GroupAction, GroupElement, GroupError,
};
use crate::arith;

/// Orders for which [`catalog`] is available.
pub const CATALOG_ORDERS: [u64; 19] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 20, 21, 60];

const CACHE_VERSION: u32 = 1;

fn known_count(n: u64) -> Option<usize> {
    Some(match n {
        1 | 2 | 3 | 5 | 7 | 11 | 13 | 15 => 1,
        4 | 6 | 9 | 10 | 14 | 21 => 2,
        8 | 12 | 20 => 5,
        16 => 14,
        60 => 13,
        _ => return None,
    })
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub group: FiniteGroup,
    /// Position in the standard small-groups numbering, where known.
    pub gap_id: Option<u32>,
}

fn gap_id(n: u64, name: &str) -> Option<u32> {
    let table: &[(&str, u32)] = match n {
        8 => &[("C8", 1), ("C2 x C4", 2), ("D8", 3), ("Q8", 4), ("C2 x C2 x C2", 5)],
        12 => &[("Dic12", 1), ("C12", 2), ("A4", 3), ("D12", 4), ("C2 x C6", 5)],
        16 => &[
            ("C16", 1),
            ("C4 x C4", 2),
            ("C2^2:C4", 3),
            ("C4:C4", 4),
            ("C2 x C8", 5),
            ("M16", 6),
            ("D16", 7),
            ("SD16", 8),
            ("Q16", 9),
            ("C2 x C2 x C4", 10),
            ("C2 x D8", 11),
            ("C2 x Q8", 12),
            ("C4oD8", 13),
            ("C2 x C2 x C2 x C2", 14),
        ],
        20 => &[("Dic20", 1), ("C20", 2), ("F20", 3), ("D20", 4), ("C2 x C10", 5)],
        21 => &[("F21", 1), ("C21", 2)],
        60 => &[
            ("C5 x Dic12", 1),
            ("C3 x Dic20", 2),
            ("Dic60", 3),
            ("C60", 4),
            ("A5", 5),
            ("C3 x F20", 6),
            ("C15:C4", 7),
            ("S3 x D10", 8),
            ("C5 x A4", 9),
            ("C6 x D10", 10),
            ("C10 x S3", 11),
            ("D60", 12),
            ("C2 x C30", 13),
        ],
        _ => &[],
    };
    table.iter().find(|(k, _)| *k == name).map(|&(_, id)| id)
}

/// Invariant-factor lists `d1 | d2 | ... | dk` with product `n`, each `d_i >= 2`.
fn invariant_factor_lists(n: u64) -> Vec<Vec<u64>> {
    fn go(remaining: u64, last: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 1 {
            out.push(acc.clone());
            return;
        }
        for d in arith::divisors(remaining) {
            if d >= 2 && d % last == 0 {
                acc.push(d);
                go(remaining / d, d, acc, out);
                acc.pop();
            }
        }
    }
    if n == 1 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out.sort_by_key(|l| l.len());
    out
}

/// All abelian groups of order `n`, cyclic first.
pub fn abelian_groups_of_order(n: u64) -> Result<Vec<FiniteGroup>, GroupError> {
    invariant_factor_lists(n).iter().map(|l| abelian(l)).collect()
}

fn prod(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    direct_product(a, b)
}

fn named(g: FiniteGroup, name: &str) -> FiniteGroup {
    g.renamed(name)
}

fn s3() -> Result<FiniteGroup, GroupError> {
    Ok(symmetric(3)?.renamed("S3"))
}

fn candidates(n: u64) -> Result<Vec<FiniteGroup>, GroupError> {
    let mut out = abelian_groups_of_order(n)?;
    if n == 6 {
        out.push(s3()?);
    } else if n >= 6 && n % 2 == 0 {
        out.push(dihedral(n)?);
    }
    if n >= 8 && n % 4 == 0 {
        out.push(dicyclic(n)?);
    }
    match n {
        12 => out.push(alternating(4)?),
        16 => {
            let c2 = cyclic(2)?;
            let c4 = cyclic(4)?;
            let d8 = dihedral(8)?;
            out.push(standard_family("modular16", &[])?);
            out.push(standard_family("semidihedral16", &[])?);
            out.push(prod(&c2, &d8)?);
            out.push(prod(&c2, &dicyclic(8)?)?);
            out.push(cyclic_extension("C4:C4", 4, 4, 3)?);
            let v4 = abelian(&[2, 2])?;
            // (a, b) -> (b, a) in the index encoding a*2 + b.
            let swap = vec![0, 2, 1, 3];
            let act = GroupAction::from_generators(&v4, &c4, &[(GroupElement::new(1), swap)])?;
            out.push(named(semidirect_product(&v4, &c4, &act)?, "C2^2:C4"));
            let big = prod(&d8, &c4)?;
            // r^2 in D8 is (2, 0) -> index 2*2; c^2 in C4 is index 2.
            let r2 = GroupElement::new(2 * 2);
            let z = super::product_index(r2, GroupElement::new(2), 4);
            let sub = big.subgroup_generated(&[z]);
            out.push(named(quotient(&big, &sub)?, "C4oD8"));
        }
        20 => out.push(standard_family("F20", &[])?),
        21 => out.push(standard_family("F21", &[])?),
        60 => {
            let c3 = cyclic(3)?;
            let c5 = cyclic(5)?;
            let s3 = s3()?;
            let d10 = dihedral(10)?;
            out.push(alternating(5)?);
            out.push(prod(&c3, &dicyclic(20)?)?);
            out.push(prod(&c5, &dicyclic(12)?)?);
            out.push(prod(&c3, &standard_family("F20", &[])?)?);
            out.push(prod(&cyclic(6)?, &d10)?);
            out.push(prod(&cyclic(10)?, &s3)?);
            out.push(prod(&c5, &alternating(4)?)?);
            out.push(prod(&s3, &d10)?);
            out.push(cyclic_extension("C15:C4", 15, 4, 2)?);
            // Isomorphic to C6 x D10 and C10 x S3; kept to show the dedupe.
            out.push(prod(&c3, &dihedral(20)?)?);
            out.push(prod(&c5, &dihedral(12)?)?);
        }
        _ => {}
    }
    Ok(out)
}

fn build(n: u64) -> Result<Vec<CatalogEntry>, GroupError> {
    let expected = known_count(n).ok_or(GroupError::UnsupportedOrder(n))?;
    let mut kept: Vec<FiniteGroup> = Vec::new();
    for g in candidates(n)? {
        debug_assert_eq!(g.size() as u64, n, "candidate {} has the wrong order", g.name());
        let mut duplicate = false;
        for k in &kept {
            if is_isomorphic(k, &g)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            kept.push(g);
        }
    }
    if kept.len() != expected {
        return Err(GroupError::CatalogMismatch { order: n, expected, found: kept.len() });
    }
    Ok(kept
        .into_iter()
        .map(|g| CatalogEntry { name: g.name().to_string(), gap_id: gap_id(n, g.name()), group: g })
        .collect())
}

#[derive(Serialize, Deserialize)]
struct CachedGroup {
    name: String,
    gap_id: Option<u32>,
    table: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    order: u64,
    groups: Vec<CachedGroup>,
}

fn cache_path(n: u64) -> Option<PathBuf> {
    let dir = std::env::var_os("ORDSEQ_CACHE_DIR")?;
    Some(PathBuf::from(dir).join(format!("catalog-v{CACHE_VERSION}-{n}.json")))
}

fn load_cached(n: u64) -> Option<Vec<CatalogEntry>> {
    let text = std::fs::read_to_string(cache_path(n)?).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.version != CACHE_VERSION || file.order != n || Some(file.groups.len()) != known_count(n) {
        return None;
    }
    file.groups
        .into_iter()
        .map(|c| {
            let group = FiniteGroup::from_table(c.name.clone(), c.table).ok()?;
            (group.size() as u64 == n).then_some(CatalogEntry { name: c.name, gap_id: c.gap_id, group })
        })
        .collect()
}

fn store_cached(n: u64, entries: &[CatalogEntry]) {
    let Some(path) = cache_path(n) else { return };
    let file = CacheFile {
        version: CACHE_VERSION,
        order: n,
        groups: entries
            .iter()
            .map(|e| CachedGroup { name: e.name.clone(), gap_id: e.gap_id, table: e.group.table() })
            .collect(),
    };
    if let Some(parent) = path.parent() {
        let _ = std::fs::create_dir_all(parent);
    }
    if let Ok(text) = serde_json::to_string(&file) {
        let _ = std::fs::write(path, text);
    }
}

/// Every isomorphism type of order `n` for `n` in [`CATALOG_ORDERS`].
pub fn catalog(n: u64) -> Result<Vec<CatalogEntry>, GroupError> {
    static MEMO: OnceLock<Mutex<HashMap<u64, Vec<CatalogEntry>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(hit) = memo.lock().expect("catalog memo poisoned").get(&n) {
        return Ok(hit.clone());
    }
    known_count(n).ok_or(GroupError::UnsupportedOrder(n))?;
    let entries = match load_cached(n) {
        Some(entries) => entries,
        None => {
            let entries = build(n)?;
            store_cached(n, &entries);
            entries
        }
    };
    memo.lock().expect("catalog memo poisoned").insert(n, entries.clone());
    Ok(entries)
}

/// Finds a catalog group by name, ignoring whitespace.
pub fn catalog_lookup(n: u64, name: &str) -> Result<Option<CatalogEntry>, GroupError> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    Ok(catalog(n)?.into_iter().find(|e| e.name.chars().filter(|c| !c.is_whitespace()).collect::<String>() == key))
}

/// All nilpotent groups of order `n`, as direct products of one `p`-group per
/// prime. Supported when every prime-power part is `p`, `p^2`, 8 or 16.
pub fn nilpotent_groups_of_order(n: u64) -> Result<Vec<FiniteGroup>, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("order must be positive".into()));
    }
    super::check_size(n as u128)?;
    let mut factors: Vec<Vec<FiniteGroup>> = Vec::new();
    for (p, a) in arith::factorize(n) {
        let q = p.pow(a);
        let groups = match (a, q) {
            (1, _) => vec![cyclic(p)?],
            (2, _) => vec![cyclic(q)?, abelian(&[p, p])?],
            (_, 8) | (_, 16) => catalog(q)?.into_iter().map(|e| e.group).collect(),
            _ => return Err(GroupError::UnsupportedOrder(n)),
        };
        factors.push(groups);
    }
    let mut out = vec![super::trivial()];
    for options in factors {
        let mut next = Vec::new();
        for g in &out {
            for h in &options {
                next.push(if g.size() == 1 { h.clone() } else { direct_product(g, h)? });
            }
        }
        out = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factors() {
        assert_eq!(invariant_factor_lists(16).len(), 5);
        assert_eq!(invariant_factor_lists(60), vec![vec![60], vec![2, 30]]);
        assert_eq!(invariant_factor_lists(36).len(), 4);
        assert_eq!(invariant_factor_lists(1), vec![Vec::<u64>::new()]);
    }

    #[test]
    fn small_catalog_counts() {
        for n in 1..=15u64 {
            let cat = catalog(n).unwrap();
            assert_eq!(cat.len(), known_count(n).unwrap(), "order {n}");
        }
        assert_eq!(catalog(15).unwrap()[0].name, "C15");
    }

    #[test]
    fn catalog_rejects_unsupported() {
        assert_eq!(catalog(18).unwrap_err(), GroupError::UnsupportedOrder(18));
    }

    #[test]
    fn order_12_gap_ids() {
        let ids: Vec<Option<u32>> = catalog(12).unwrap().iter().map(|e| e.gap_id).collect();
        let mut sorted: Vec<u32> = ids.iter().map(|x| x.unwrap()).collect();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn nilpotent_counts() {
        assert_eq!(nilpotent_groups_of_order(60).unwrap().len(), 2);
        assert_eq!(nilpotent_groups_of_order(12).unwrap().len(), 2);
        assert_eq!(nilpotent_groups_of_order(7).unwrap().len(), 1);
        assert_eq!(nilpotent_groups_of_order(1).unwrap().len(), 1);
        assert_eq!(nilpotent_groups_of_order(24).unwrap().len(), 5);
        assert!(nilpotent_groups_of_order(32).is_err());
    }

    #[test]
    fn lookup_ignores_whitespace() {
        assert!(catalog_lookup(16, "C2xQ8").unwrap().is_some());
        assert!(catalog_lookup(16, "nope").unwrap().is_none());
    }
}
