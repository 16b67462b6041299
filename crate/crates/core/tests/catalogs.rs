use ordseq_core::group::{catalog, is_isomorphic, is_nilpotent};

fn assert_pairwise_distinct(n: u64) {
    let cat = catalog(n).unwrap();
    for (i, a) in cat.iter().enumerate() {
        assert_eq!(a.group.size() as u64, n);
        for b in &cat[i + 1..] {
            assert!(!is_isomorphic(&a.group, &b.group).unwrap(), "{} ~ {}", a.name, b.name);
        }
    }
}

#[test]
fn order_16_has_14_groups() {
    let cat = catalog(16).unwrap();
    assert_eq!(cat.len(), 14);
    assert!(cat.iter().all(|e| e.gap_id.is_some()));
    assert_pairwise_distinct(16);
}

#[test]
fn order_60_has_13_groups() {
    let cat = catalog(60).unwrap();
    let names: Vec<&str> = cat.iter().map(|e| e.name.as_str()).collect();
    assert_eq!(cat.len(), 13, "{names:?}");
    let mut ids: Vec<u32> = cat.iter().map(|e| e.gap_id.unwrap()).collect();
    ids.sort();
    assert_eq!(ids, (1..=13).collect::<Vec<_>>());
    let nilpotent = cat.iter().filter(|e| is_nilpotent(&e.group)).count();
    assert_eq!(nilpotent, 2);
    assert_pairwise_distinct(60);
}

#[test]
fn orders_20_and_21() {
    assert_eq!(catalog(20).unwrap().len(), 5);
    assert_eq!(catalog(21).unwrap().len(), 2);
    assert_pairwise_distinct(20);
}

#[test]
fn cache_file_written() {
    let dir = std::env::temp_dir().join(format!("ordseq-cache-test-{}", std::process::id()));
    std::env::set_var("ORDSEQ_CACHE_DIR", &dir);
    // Order 14 is not touched by any other test in this binary, so this call builds it.
    let first = catalog(14).unwrap();
    std::env::remove_var("ORDSEQ_CACHE_DIR");
    assert_eq!(first.len(), 2);
    let text = std::fs::read_to_string(dir.join("catalog-v1-14.json")).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["groups"].as_array().unwrap().len(), 2);
    assert_eq!(json["groups"][1]["table"].as_array().unwrap().len(), 196);
    let _ = std::fs::remove_dir_all(&dir);
}
